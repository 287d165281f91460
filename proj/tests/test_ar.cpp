#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "arknit/ar.hpp"
#include "arknit/errors.hpp"
#include "arknit/hom.hpp"
#include "fixtures.hpp"

using namespace arknit;
using namespace arknit_test;

namespace {

// [P_1 @ -1 --a--> P_0 @ 0], the minimal representative of the simple at
// the arrow source over 1 --a--> 2.
ProjComplex simple_rep(const Algebra& A) {
  ElemMatrix d(A, 1, 1);
  d.set(0, 0, A.basis_elem(2));
  return ProjComplex::build(A, -1, {{1}, {0}}, {d});
}

bool has_tau_edge(const ArComponentGraph& g, std::size_t from, std::size_t to,
                  int shift) {
  for (const TauEdge& e : g.tau_edges)
    if (e.from == from && e.to == to && e.shift == shift) return true;
  return false;
}

bool has_arrow(const ArComponentGraph& g, std::size_t from, int from_shift,
               std::size_t to, std::size_t mult) {
  for (const ArArrow& a : g.arrows)
    if (a.from == from && a.from_shift == from_shift && a.to == to &&
        a.mult == mult)
      return true;
  return false;
}

}  // namespace

TEST_CASE("connecting map out of the simple projective") {
  Algebra A = Algebra::build(pres_a2(5));
  ProjComplex X = ProjComplex::stalk(A, 1, 0);
  ConnectingResult c = connecting_map(X, 8);
  CHECK(c.tau == ProjComplex::stalk(A, 0, 1));
  CHECK(is_chain_map(c.w));
  CHECK(c.w.from == X);
  CHECK(c.w.to == shift(c.tau, 1));
  HomSpace H = HomSpace::compute(X, shift(c.tau, 1));
  CHECK(H.dim() == 1);
  CHECK_FALSE(H.is_null_homotopic(c.w));
}

TEST_CASE("connecting map rejects non-minimal and decomposable input") {
  Algebra A = Algebra::build(pres_a2(5));
  ProjComplex P0 = ProjComplex::stalk(A, 0, 0);
  ProjComplex cid = make_cone(identity_map(P0)).cone;
  CHECK_THROWS_AS(connecting_map(cid, 8), PreconditionUnmetError);
  ProjComplex sum = direct_sum(P0, ProjComplex::stalk(A, 1, 0)).sum;
  CHECK_THROWS_AS(connecting_map(sum, 8), PreconditionUnmetError);
  CHECK_THROWS_AS(connecting_map(ProjComplex::zero(A), 8),
                  PreconditionUnmetError);
}

TEST_CASE("triangle at the simple projective") {
  Algebra A = Algebra::build(pres_a2(5));
  ArTriangle t = ar_triangle(ProjComplex::stalk(A, 1, 0), 8);
  CHECK(t.tau == ProjComplex::stalk(A, 0, 1));
  // middle is the simple-at-the-source class shifted one step down
  CHECK(iso_in_K(t.middle, shift(simple_rep(A), -1)));
  CHECK(t.stripped_pairs == 0);
  CHECK(t.u.from == t.tau);
  CHECK(t.u.to == t.middle);
  CHECK(t.v.from == t.middle);
  CHECK(t.v.to == t.x);
  CHECK(lengths(t.middle).l_p == 2);
}

TEST_CASE("triangle at the big projective") {
  Algebra A = Algebra::build(pres_a2(5));
  ArTriangle t = ar_triangle(ProjComplex::stalk(A, 0, 0), 8);
  CHECK(iso_in_K(t.tau, shift(simple_rep(A), -1)));
  CHECK(iso_in_K(t.middle, ProjComplex::stalk(A, 1, 0)));
  // the cone carried one contractible pair: the identity component of w
  CHECK(t.stripped_pairs == 1);
}

TEST_CASE("triangle at the simple module class") {
  Algebra A = Algebra::build(pres_a2(5));
  ProjComplex S = simple_rep(A);
  ArTriangle t = ar_triangle(S, 8);
  CHECK(iso_in_K(t.tau, ProjComplex::stalk(A, 1, 0)));
  CHECK(iso_in_K(t.middle, ProjComplex::stalk(A, 0, 0)));
  CHECK(t.stripped_pairs == 1);
}

TEST_CASE("triangle over the base field has zero middle") {
  Algebra A = Algebra::build(pres_field(5));
  ProjComplex X = ProjComplex::stalk(A, 0, 0);
  ArTriangle t = ar_triangle(X, 8);
  CHECK(t.middle.is_zero_complex());
  CHECK(t.tau == ProjComplex::stalk(A, 0, 1));
  // connecting map is an isomorphism: its cone strips to nothing
  CHECK(strip_contractibles(make_cone(t.w).cone).min.is_zero_complex());
  CHECK(t.stripped_pairs == 1);
}

TEST_CASE("verification accepts the almost split triangles") {
  Algebra A = Algebra::build(pres_a2(5));
  ProjComplex S = simple_rep(A);
  std::vector<ProjComplex> universe = {
      ProjComplex::stalk(A, 0, 0), ProjComplex::stalk(A, 1, 0), S,
      shift(S, 2),                 shift(S, -1),
      ProjComplex::stalk(A, 0, 1), ProjComplex::stalk(A, 1, -2)};
  for (const ProjComplex& end :
       {ProjComplex::stalk(A, 1, 0), ProjComplex::stalk(A, 0, 0), S}) {
    ArTriangle t = ar_triangle(end, 8);
    VerifyReport rep = verify_ar(t, universe);
    CHECK(rep.objects_checked == universe.size());
    CHECK(rep.sequences_checked == 2 * universe.size());
  }
}

TEST_CASE("verification rejects a doctored triangle") {
  Algebra A = Algebra::build(pres_a2(5));
  ArTriangle t = ar_triangle(ProjComplex::stalk(A, 1, 0), 8);
  ArTriangle bad = t;
  bad.u = zero_map(t.tau, t.middle);
  std::vector<ProjComplex> universe = {t.tau};
  CHECK_THROWS_AS(verify_ar(bad, universe), VerificationFailureError);
}

TEST_CASE("inverse translate undoes the translate") {
  Algebra A = Algebra::build(pres_a2(5));
  ProjComplex S = simple_rep(A);
  CHECK(iso_in_K(tau_inverse(ProjComplex::stalk(A, 1, 0), 8), S));
  CHECK(iso_in_K(tau_inverse(ProjComplex::stalk(A, 0, 1), 8),
                 ProjComplex::stalk(A, 1, 0)));
  CHECK(iso_in_K(tau_inverse(S, 8), ProjComplex::stalk(A, 0, -1)));
}

TEST_CASE("knitting closes the component of the A2 quiver") {
  Algebra A = Algebra::build(pres_a2(5));
  ArComponentGraph g = knit(A);
  REQUIRE(g.nodes.size() == 3);
  CHECK(g.complete);
  CHECK(g.steps_used == 3);
  CHECK(g.nodes[0].name == "P1");
  CHECK(g.nodes[1].name == "P2");
  CHECK(g.nodes[2].name == "P2>P1");
  REQUIRE(g.period.has_value());
  CHECK(g.period->tau_power == 3);
  CHECK(g.period->shift == -2);

  REQUIRE(g.tau_edges.size() == 3);
  CHECK(has_tau_edge(g, 0, 2, -1));
  CHECK(has_tau_edge(g, 1, 0, -1));
  CHECK(has_tau_edge(g, 2, 1, 0));

  REQUIRE(g.arrows.size() == 3);
  CHECK(has_arrow(g, 1, 0, 0, 1));
  CHECK(has_arrow(g, 2, -1, 1, 1));
  CHECK(has_arrow(g, 0, 0, 2, 1));

  CHECK(g.nodes[0].len.l_p == 1);
  CHECK(g.nodes[2].len.l_p == 2);
  CHECK(g.nodes[0].l_inj == 1);
  CHECK(g.nodes[1].l_inj == 2);
  CHECK(g.nodes[2].l_inj == 1);

  // every node owns exactly one triangle
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    REQUIRE(g.triangle_of[i] < g.triangles.size());
    CHECK(g.triangles[g.triangle_of[i]].x == g.nodes[i].rep);
  }
}

TEST_CASE("tree extraction and classification over A2") {
  Algebra A = Algebra::build(pres_a2(5));
  ArComponentGraph g = knit(A);
  auto tag = tree_class(g);
  REQUIRE(tag.has_value());
  CHECK(tag->family == 'A');
  CHECK(tag->n == 2);

  ClassificationVerdict v = classify(g, A);
  CHECK(v.kind == VerdictKind::FiniteTypeDynkin);
  REQUIRE(v.tree.has_value());
  CHECK(v.tree->family == 'A');
  CHECK(v.tree->n == 2);
  CHECK(v.sup_lp == 2);
  CHECK(v.sup_li == 2);
}

TEST_CASE("knitting the A3 quiver finds six classes") {
  Algebra A = Algebra::build(pres_a3(5));
  ArComponentGraph g = knit(A);
  CHECK(g.complete);
  CHECK(g.nodes.size() == 6);
  REQUIRE(g.period.has_value());
  CHECK(g.period->tau_power == 4);
  CHECK(g.period->shift == -2);
  auto tag = tree_class(g);
  REQUIRE(tag.has_value());
  CHECK(tag->family == 'A');
  CHECK(tag->n == 3);
}

TEST_CASE("classification of the base field") {
  Algebra A = Algebra::build(pres_field(5));
  ArComponentGraph g = knit(A);
  CHECK(g.complete);
  CHECK(g.nodes.size() == 1);
  REQUIRE(g.period.has_value());
  CHECK(g.period->tau_power == 1);
  CHECK(g.period->shift == -1);
  CHECK(g.arrows.empty());
  ClassificationVerdict v = classify(g, A);
  CHECK(v.kind == VerdictKind::SimpleA1);
  REQUIRE(v.tree.has_value());
  CHECK(v.tree->family == 'A');
  CHECK(v.tree->n == 1);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("knitting the dual numbers stops at the budget") {
  Algebra A = Algebra::build(pres_dual_numbers(3));
  KnitOptions opts;
  opts.budget = 5;
  ArComponentGraph g = knit(A, opts);
  CHECK_FALSE(g.complete);
  CHECK(g.steps_used == 5);
  CHECK(g.nodes.size() == 6);
  CHECK_FALSE(g.period.has_value());
  for (const TauEdge& e : g.tau_edges) {
    CHECK(e.from == e.to);
    CHECK(e.shift == -1);
  }
  // ladder: l_p grows one summand per rung
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    CHECK(g.nodes[i].len.l_p == i + 1);
  CHECK(has_arrow(g, 1, -1, 0, 1));
  CHECK(has_arrow(g, 2, -1, 1, 1));
  CHECK(has_arrow(g, 0, 0, 1, 1));

  ClassificationVerdict v = classify(g, A);
  CHECK(v.kind == VerdictKind::InfiniteOrInconclusive);
  CHECK(v.ladder_evidence);
}

TEST_CASE("subadditive witness over A2") {
  Algebra A = Algebra::build(pres_a2(5));
  ArComponentGraph g = knit(A);
  REQUIRE(g.period.has_value());
  SubadditiveReport rep =
      subadditive_witness(g.nodes[0].rep, g, g.period->tau_power,
                          g.period->shift);
  REQUIRE(rep.rows.size() == 3);
  REQUIRE(rep.d_node.size() == 3);
  for (std::size_t d : rep.d_node) CHECK(d > 0);
  for (const SubadditiveRow& r : rep.rows)
    CHECK(r.d_middle <= r.d_tau + r.d_end);
  CHECK(rep.strict_somewhere);

  CHECK_THROWS_AS(subadditive_witness(g.nodes[0].rep, g, 2, -2),
                  PreconditionUnmetError);
}
