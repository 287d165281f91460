#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arknit/errors.hpp"
#include "arknit/mesh.hpp"

using namespace arknit;

namespace {
using Lin = std::vector<long long>;
}

TEST_CASE("tree construction and validation") {
  DynkinTree a1 = DynkinTree::make('A', 1);
  CHECK(a1.edges.empty());
  DynkinTree a4 = DynkinTree::make('A', 4);
  CHECK(a4.edges == std::vector<std::pair<std::size_t, std::size_t>>{
                        {0, 1}, {1, 2}, {2, 3}});
  DynkinTree d4 = DynkinTree::make('D', 4);
  CHECK(d4.edges == std::vector<std::pair<std::size_t, std::size_t>>{
                        {0, 1}, {1, 2}, {1, 3}});
  DynkinTree d6 = DynkinTree::make('D', 6);
  CHECK(d6.edges == std::vector<std::pair<std::size_t, std::size_t>>{
                        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
  DynkinTree e6 = DynkinTree::make('E', 6);
  CHECK(e6.edges == std::vector<std::pair<std::size_t, std::size_t>>{
                        {0, 1}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
  DynkinTree e8 = DynkinTree::make('E', 8);
  CHECK(e8.edges.size() == 7);

  DynkinTree d3 = DynkinTree::make('D', 3);
  CHECK(d3.d3_as_a3);
  CHECK(d3.edges == DynkinTree::make('A', 3).edges);
  CHECK(d3.name() == "D3 (A3 adjacency)");

  CHECK_THROWS_AS(DynkinTree::make('A', 0), InputError);
  CHECK_THROWS_AS(DynkinTree::make('D', 2), InputError);
  CHECK_THROWS_AS(DynkinTree::make('E', 9), InputError);
  CHECK_THROWS_AS(DynkinTree::make('X', 4), InputError);

  CHECK(DynkinTree::parse("E8").name() == "E8");
  CHECK(DynkinTree::parse("A12").n == 12);
  CHECK_THROWS_AS(DynkinTree::parse("F4"), InputError);
  CHECK_THROWS_AS(DynkinTree::parse("A"), InputError);
  CHECK_THROWS_AS(DynkinTree::parse("A2b"), InputError);
}

TEST_CASE("symbolic propagation on the two-vertex chain") {
  DynkinTree t = DynkinTree::make('A', 2);
  MeshWindow w = propagate_symbolic(t, 3);
  // initial column is the symbol basis
  CHECK(w.value(0, 0) == Lin{1, 0});
  CHECK(w.value(0, 1) == Lin{0, 1});
  // next columns: (x2-x1, -x1), (-x2, x1-x2), (x1, x2): period three
  CHECK(w.value(1, 0) == Lin{-1, 1});
  CHECK(w.value(1, 1) == Lin{-1, 0});
  CHECK(w.value(2, 0) == Lin{0, -1});
  CHECK(w.value(2, 1) == Lin{1, -1});
  CHECK(w.value(3, 0) == Lin{1, 0});
  CHECK(w.value(3, 1) == Lin{0, 1});
  CHECK(verify_meshes(w));
}

TEST_CASE("first propagated column matches the diagram rows") {
  MeshWindow a3 = propagate_symbolic(DynkinTree::make('A', 3), 1);
  CHECK(a3.value(1, 0) == Lin{-1, 1, 0});
  CHECK(a3.value(1, 1) == Lin{-1, 0, 1});
  CHECK(a3.value(1, 2) == Lin{-1, 0, 0});

  MeshWindow d4 = propagate_symbolic(DynkinTree::make('D', 4), 1);
  CHECK(d4.value(1, 0) == Lin{-1, 1, 0, 0});
  CHECK(d4.value(1, 1) == Lin{-1, 0, 1, 1});
  // the fork values x3-x1 and x4-x1 appear one column later, swapped
  CHECK(d4.value(1, 2) == Lin{-1, 0, 0, 1});
  CHECK(d4.value(1, 3) == Lin{-1, 0, 1, 0});
}

TEST_CASE("E series identity reports") {
  std::vector<MeshIdentity> e6 = check_identities(DynkinTree::make('E', 6));
  REQUIRE(e6.size() == 2);
  for (const MeshIdentity& id : e6) {
    INFO(id.name);
    CHECK(id.holds);
  }

  // E7 carries one reading that exact propagation refutes: the values have
  // period 18 with a sign flip at 9, so x_{3,j+20} = x_{3,j+2} != -x3 + x4.
  // The branch-vertex reading x_{4,j+8} = -x3 + x4 is the one that holds.
  std::vector<MeshIdentity> e7 = check_identities(DynkinTree::make('E', 7));
  REQUIRE(e7.size() == 5);
  CHECK(e7[0].holds);
  CHECK(e7[1].holds);
  CHECK(e7[2].name == "x3[j+20] = -x3[j] + x4[j]");
  CHECK_FALSE(e7[2].holds);
  CHECK(e7[3].name == "x4[j+8] = -x3[j] + x4[j]");
  CHECK(e7[3].holds);
  CHECK(e7[4].name == "x4[j+9] = -x4[j]");
  CHECK(e7[4].holds);

  std::vector<MeshIdentity> e8 = check_identities(DynkinTree::make('E', 8));
  REQUIRE(e8.size() == 4);
  for (const MeshIdentity& id : e8) {
    INFO(id.name);
    CHECK(id.holds);
  }

  CHECK_THROWS_AS(check_identities(DynkinTree::make('A', 5)), InputError);
}

TEST_CASE("integer propagation is linear") {
  DynkinTree t = DynkinTree::make('D', 4);
  std::vector<long long> r1 = {1, 2, 3, 4}, r2 = {5, 1, 1, 2};
  std::vector<long long> mix(4);
  for (std::size_t i = 0; i < 4; ++i) mix[i] = 2 * r1[i] + 3 * r2[i];
  MeshWindow w1 = propagate(t, r1, 6);
  MeshWindow w2 = propagate(t, r2, 6);
  MeshWindow wm = propagate(t, mix, 6);
  for (std::size_t j = 0; j <= 6; ++j)
    for (std::size_t v = 0; v < 4; ++v)
      CHECK(wm.value(j, v)[0] == 2 * w1.value(j, v)[0] + 3 * w2.value(j, v)[0]);
  CHECK(verify_meshes(w1));

  MeshWindow zero = propagate(t, {0, 0, 0, 0}, 4);
  for (std::size_t j = 0; j <= 4; ++j)
    for (std::size_t v = 0; v < 4; ++v) CHECK(zero.value(j, v)[0] == 0);
}

TEST_CASE("mesh verification notices tampering") {
  MeshWindow w = propagate_symbolic(DynkinTree::make('E', 7), 5);
  CHECK(verify_meshes(w));
  w.columns[3][2][0] += 1;
  CHECK_FALSE(verify_meshes(w));
}

TEST_CASE("positivity breaks down on every Dynkin tree") {
  PositivityBreak a2 = positivity_certificate(DynkinTree::make('A', 2), {1, 1});
  CHECK(a2.vertex == 0);
  CHECK(a2.column == 1);
  CHECK(a2.value == 0);

  PositivityBreak a1 = positivity_certificate(DynkinTree::make('A', 1), {1});
  CHECK(a1.column == 1);
  CHECK(a1.value == -1);

  PositivityBreak d4 =
      positivity_certificate(DynkinTree::make('D', 4), {5, 5, 5, 5});
  CHECK(d4.column == 1);

  PositivityBreak e8 = positivity_certificate(DynkinTree::make('E', 8),
                                              {1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(e8.column >= 1);
  CHECK(e8.column <= 15);

  CHECK_THROWS_AS(
      positivity_certificate(DynkinTree::make('A', 2), {1, 1}, 0),
      CertificateNotFoundError);
  CHECK_THROWS_AS(positivity_certificate(DynkinTree::make('A', 2), {1, 0}),
                  InputError);
  CHECK_THROWS_AS(positivity_certificate(DynkinTree::make('A', 2), {1}),
                  InputError);
}
