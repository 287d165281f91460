#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "arknit/matrix.hpp"

#include "arknit/errors.hpp"
#include "doctest.h"

using namespace arknit;

namespace {

Matrix from_data(const PrimeField& F, std::size_t rows, std::size_t cols,
                 const std::vector<std::uint32_t>& data) {
  Matrix m(F, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, data[r * cols + c]);
  return m;
}

}  // namespace

TEST_CASE("rref, rank and pivots") {
  PrimeField F(5);
  Matrix m = from_data(F, 3, 3, {1, 2, 3, 2, 4, 1, 0, 0, 1});
  RrefResult rr = rref(m);
  CHECK(rr.rank == 2);
  REQUIRE(rr.pivot_cols.size() == 2);
  CHECK(rr.pivot_cols[0] == 0);
  CHECK(rr.pivot_cols[1] == 2);
  CHECK(rank(m) == 2);
}

TEST_CASE("kernel basis solves the system") {
  PrimeField F(7);
  Matrix m = from_data(F, 2, 3, {1, 2, 3, 2, 4, 1});
  auto kb = kernel_basis(m);
  REQUIRE(kb.size() == 1);
  Vec img = m.apply(kb[0]);
  for (std::uint32_t x : img) CHECK(x == 0);
  CHECK(kernel_basis(Matrix::identity(F, 3)).empty());
}

TEST_CASE("solve finds the unique preimage") {
  PrimeField F(5);
  Matrix m = from_data(F, 2, 2, {1, 2, 3, 4});
  Vec b{4, 1};
  auto x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == b);
  Matrix sing = from_data(F, 2, 2, {1, 2, 2, 4});
  CHECK_FALSE(solve(sing, Vec{1, 0}).has_value());
}

TEST_CASE("inverse certifies itself") {
  PrimeField F(7);
  Matrix m = from_data(F, 2, 2, {1, 2, 3, 4});
  CHECK(is_invertible(m));
  Matrix mi = inverse(m);
  Matrix prod = m.mul(mi);
  CHECK(prod.sub(Matrix::identity(F, 2)).is_zero());
  Matrix sing = from_data(F, 2, 2, {1, 2, 2, 4});
  CHECK_FALSE(is_invertible(sing));
  CHECK_THROWS_AS(inverse(sing), InputError);
}

TEST_CASE("block operations") {
  PrimeField F(5);
  Matrix a = from_data(F, 2, 2, {1, 2, 3, 4});
  Matrix b = from_data(F, 2, 1, {1, 1});
  Matrix h = a.hcat(b);
  CHECK(h.cols() == 3);
  CHECK(h.at(1, 2) == 1);
  Matrix blk = h.block(0, 1, 2, 2);
  CHECK(blk.at(0, 0) == 2);
  CHECK(blk.at(1, 1) == 1);
  Matrix t = a.transpose();
  CHECK(t.at(0, 1) == 3);
}

TEST_CASE("subspace growth and membership") {
  PrimeField F(3);
  Subspace s(F, 3);
  CHECK(s.add(Vec{1, 1, 0}));
  CHECK_FALSE(s.add(Vec{2, 2, 0}));
  CHECK(s.add(Vec{0, 0, 1}));
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vec{1, 1, 2}));
  CHECK_FALSE(s.contains(Vec{1, 0, 0}));
}
