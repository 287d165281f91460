#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "arknit/resolve.hpp"

#include "arknit/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace arknit;
using namespace arknit_test;

TEST_CASE("minimal resolution of the top simple") {
  Algebra A = Algebra::build(pres_a2(5));
  ResolutionResult r = min_proj_resolution(simple_module(A, 0), 8);
  CHECK(r.complex.lo() == -1);
  CHECK(r.complex.hi() == 0);
  CHECK(r.complex.labels_at(-1) == std::vector<std::size_t>{1});
  CHECK(r.complex.labels_at(0) == std::vector<std::size_t>{0});
  Elem e = r.complex.diff(-1).at(0, 0);
  CHECK_FALSE(A.is_zero(e));
  CHECK(A.in_radical(e));
  CHECK(is_module_map(r.augmentation));
  CHECK(is_surjective(r.augmentation));
  CHECK(is_minimal(r.complex));
}

TEST_CASE("projectives resolve as stalks") {
  Algebra A = Algebra::build(pres_a2(5));
  ResolutionResult r = min_proj_resolution(projective_module(A, 1), 8);
  CHECK(r.complex == ProjComplex::stalk(A, 1, 0));
}

TEST_CASE("resolution bound is enforced") {
  Algebra A = Algebra::build(pres_dual_numbers(3));
  // the simple has period-one syzygies, so no bound suffices
  CHECK_THROWS_AS(min_proj_resolution(simple_module(A, 0), 4),
                  ResolutionBoundExceededError);
}

TEST_CASE("resolving a stalk module complex matches the module resolution") {
  Algebra A = Algebra::build(pres_a2(5));
  ModuleComplex C = nu_complex(ProjComplex::stalk(A, 0, 0));
  ResolveResult r = proj_resolve_complex(C, 8);
  CHECK(r.complex.lo() == -1);
  CHECK(r.complex.hi() == 0);
  CHECK(r.complex.labels_at(-1) == std::vector<std::size_t>{1});
  CHECK(r.complex.labels_at(0) == std::vector<std::size_t>{0});
  CHECK(homology_dims(module_complex_of(r.complex), 0) ==
        homology_dims(C, 0));
  REQUIRE(r.comparison.count(0) == 1);
}

TEST_CASE("resolving a two-term complex keeps both homologies") {
  Algebra A = Algebra::build(pres_dual_numbers(3));
  // [P --x--> P] has one-dimensional homology at both ends
  ElemMatrix m(A, 1, 1);
  m.set(0, 0, A.basis_elem(1));
  ProjComplex X = ProjComplex::build(A, 0, {{0}, {0}}, {m});
  ModuleComplex C = module_complex_of(X);
  ResolveResult r = proj_resolve_complex(C, 8);
  for (int d = r.complex.lo(); d <= r.complex.hi(); ++d) {
    CHECK(homology_dims(module_complex_of(r.complex), d) ==
          homology_dims(C, d));
  }
}

TEST_CASE("translate of the smaller projective stalk") {
  Algebra A = Algebra::build(pres_a2(5));
  ProjComplex t = tau_candidate(ProjComplex::stalk(A, 1, 0), 8);
  CHECK(t == ProjComplex::stalk(A, 0, 1));
}

TEST_CASE("translate of the bigger projective stalk") {
  Algebra A = Algebra::build(pres_a2(5));
  ProjComplex t = tau_candidate(ProjComplex::stalk(A, 0, 0), 8);
  CHECK(t.lo() == 0);
  CHECK(t.hi() == 1);
  CHECK(t.labels_at(0) == std::vector<std::size_t>{1});
  CHECK(t.labels_at(1) == std::vector<std::size_t>{0});
  Elem e = t.diff(0).at(0, 0);
  CHECK_FALSE(A.is_zero(e));
  CHECK(A.in_radical(e));
  CHECK(is_minimal(t));
}

TEST_CASE("translate of the simple two-term complex") {
  Algebra A = Algebra::build(pres_a2(5));
  ElemMatrix d(A, 1, 1);
  d.set(0, 0, A.basis_elem(2));
  ProjComplex X = ProjComplex::build(A, -1, {{1}, {0}}, {d});
  CHECK(tau_candidate(X, 8) == ProjComplex::stalk(A, 1, 0));
}

TEST_CASE("translate kills contractibles") {
  Algebra A = Algebra::build(pres_a2(5));
  ConeResult c = make_cone(identity_map(ProjComplex::stalk(A, 0, 0)));
  CHECK(tau_candidate(c.cone, 8).is_zero_complex());
}

TEST_CASE("injective lengths of the projective stalks") {
  Algebra A = Algebra::build(pres_a2(5));
  CHECK(l_i(ProjComplex::stalk(A, 0, 0), 8) == 1);
  CHECK(l_i(ProjComplex::stalk(A, 1, 0), 8) == 2);
}
