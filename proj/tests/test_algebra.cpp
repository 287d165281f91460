#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "arknit/algebra.hpp"

#include <algorithm>

#include "arknit/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace arknit;
using namespace arknit_test;

TEST_CASE("path algebra of a two-vertex quiver") {
  Algebra A = Algebra::build(pres_a2(5));
  CHECK(A.dim() == 3);  // e_1, e_2, a
  CHECK(A.vertex_count() == 2);
  CHECK(A.field().p() == 5);
  CHECK(A.is_connected());
  CHECK_FALSE(A.is_simple());

  // units sit first, in vertex order
  CHECK(A.basis_word(0).word.empty());
  CHECK(A.basis_word(1).word.empty());
  CHECK(A.unit_path(1) == 1);
  REQUIRE(A.basis_word(2).word.size() == 1);
  CHECK(A.basis_word(2).head == 0);
  CHECK(A.basis_word(2).tail == 1);

  // maps P_i -> P_j are paths from j to i
  CHECK(A.hom_slice(0, 0).size() == 1);
  CHECK(A.hom_slice(1, 1).size() == 1);
  CHECK(A.hom_slice(1, 0).size() == 1);  // the arrow
  CHECK(A.hom_slice(0, 1).empty());
}

TEST_CASE("multiplication follows the traversal convention") {
  Algebra A = Algebra::build(pres_a2(5));
  Elem e0 = A.basis_elem(0), e1 = A.basis_elem(1), a = A.basis_elem(2);
  // a starts at vertex 0 and ends at vertex 1
  CHECK(A.mul(a, e0) == a);
  CHECK(A.mul(e1, a) == a);
  CHECK(A.is_zero(A.mul(e0, a)));
  CHECK(A.is_zero(A.mul(a, e1)));
  CHECK(A.is_zero(A.mul(a, a)));
  CHECK(A.mul(A.unit(), a) == a);
  CHECK(A.in_radical(a));
  CHECK_FALSE(A.in_radical(e0));
}

TEST_CASE("hereditary tree algebras have path bases") {
  Algebra A3 = Algebra::build(pres_a3(5));
  CHECK(A3.dim() == 6);  // 3 units + a + b + ab
  Algebra D4 = Algebra::build(pres_d4(5));
  CHECK(D4.dim() == 9);  // 4 units + a,b,c + ab, ac
  // the long path in A3: traverse a, then b
  Elem ab = A3.word_elem({0, 1}, 0);
  CHECK_FALSE(A3.is_zero(ab));
  // the ring product writes the first-traversed factor on the right
  Elem left = A3.mul(A3.word_elem({1}, 1), A3.word_elem({0}, 0));
  CHECK(left == ab);
}

TEST_CASE("square-zero loop") {
  Algebra A = Algebra::build(pres_dual_numbers(3));
  CHECK(A.dim() == 2);
  Elem x = A.basis_elem(1);
  CHECK(A.is_zero(A.mul(x, x)));
  CHECK(A.in_radical(x));
  auto inv = A.local_inverse(A.add(A.unit(), x), 0);
  REQUIRE(inv.has_value());
  CHECK(A.mul(*inv, A.add(A.unit(), x)) == A.unit());
  CHECK_FALSE(A.local_inverse(x, 0).has_value());
}

TEST_CASE("infinite dimension is detected") {
  QuiverPresentation q;
  q.characteristic = 5;
  q.vertices = {"z"};
  q.arrows = {{"x", 0, 0}};
  CHECK_THROWS_AS(Algebra::build(q), NotFiniteDimensionalError);
}

TEST_CASE("malformed relations are rejected") {
  QuiverPresentation q = pres_dual_numbers(3);
  q.relations = {{{1, {0}}}};  // length-1 word is not admissible
  CHECK_THROWS_AS(Algebra::build(q), NonAdmissibleRelationError);
}

TEST_CASE("non-prime characteristic is rejected") {
  QuiverPresentation q = pres_a2(4);
  CHECK_THROWS_AS(Algebra::build(q), InputError);
}

TEST_CASE("opposite presentation reverses arrows") {
  Algebra A = Algebra::build(pres_a2(5));
  QuiverPresentation op = A.opposite_presentation();
  REQUIRE(op.arrows.size() == 1);
  CHECK(op.arrows[0].src == 1);
  CHECK(op.arrows[0].dst == 0);
  Algebra Aop = Algebra::build(op);
  CHECK(Aop.dim() == 3);
  CHECK(Aop.hom_slice(0, 1).size() == 1);
  CHECK(Aop.hom_slice(1, 0).empty());
}

TEST_CASE("disconnected quivers are recognized") {
  QuiverPresentation q;
  q.characteristic = 5;
  q.vertices = {"1", "2"};
  Algebra A = Algebra::build(q);
  CHECK_FALSE(A.is_connected());
  CHECK(A.dim() == 2);
}

TEST_CASE("vertex and arrow lookup by name") {
  Algebra A = Algebra::build(pres_a2(5));
  CHECK(A.vertex_index("2") == 1);
  CHECK(A.arrow_index("a") == 0);
  CHECK_FALSE(A.vertex_index("7").has_value());
}
