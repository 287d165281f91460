#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "arknit/field.hpp"

namespace arknit {

using Vec = std::vector<std::uint32_t>;

// Dense row-major matrix over a prime field. All arithmetic is exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(PrimeField f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(PrimeField f, std::size_t n);
  static Matrix from_rows(PrimeField f, const std::vector<Vec>& rows,
                          std::size_t cols);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint32_t v) {
    a_[r * cols_ + c] = v;
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  bool is_zero() const;
  Matrix transpose() const;
  Matrix mul(const Matrix& other) const;
  Matrix add(const Matrix& other) const;
  Matrix sub(const Matrix& other) const;
  Matrix scaled(std::uint32_t c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  // Horizontal / vertical concatenation.
  Matrix hcat(const Matrix& other) const;
  Matrix vcat(const Matrix& other) const;
  // Copies src into this at offset (r0, c0); bounds are the caller's problem.
  void paste(const Matrix& src, std::size_t r0, std::size_t c0);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.field_ == y.field_ &&
           x.a_ == y.a_;
  }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  Vec a_;
};

struct RrefResult {
  Matrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of {v : m v = 0} as rows. Empty when the kernel is trivial.
std::vector<Vec> kernel_basis(const Matrix& m);

// One solution of m x = b, or nullopt when the system is inconsistent.
// Inconsistency is an answer, not an error.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

bool is_invertible(const Matrix& m);
// Throws InputError on non-square or singular input.
Matrix inverse(const Matrix& m);

// Row-space utilities used all over the homotopy layer. Vectors must share
// the ambient dimension.
class Subspace {
 public:
  Subspace(PrimeField f, std::size_t ambient);

  std::size_t dim() const { return basis_.size(); }
  std::size_t ambient() const { return ambient_; }
  const std::vector<Vec>& basis() const { return basis_; }

  // Reduces v against the stored echelon basis; returns the residue.
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  // Adds v if independent; reports whether the dimension grew.
  bool add(const Vec& v);

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> basis_;             // echelon rows, unit pivots
  std::vector<std::size_t> pivots_;    // pivot column per basis row
};

}  // namespace arknit
