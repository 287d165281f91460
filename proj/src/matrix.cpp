#include "arknit/matrix.hpp"

#include <string>

namespace arknit {

Matrix Matrix::identity(PrimeField f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1 % f.p());
  return m;
}

Matrix Matrix::from_rows(PrimeField f, const std::vector<Vec>& rows,
                         std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (auto x : a_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, at(r, c));
  return t;
}

Matrix Matrix::mul(const Matrix& other) const {
  require_same(field_, other.field_, "Matrix::mul");
  if (cols_ != other.rows_) throw InputError("Matrix::mul: shape mismatch");
  Matrix out(field_, rows_, other.cols_);
  const std::uint64_t p = field_.p();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t aik = at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        std::uint64_t v = out.at(i, j) + aik * other.at(k, j) % p;
        out.set(i, j, static_cast<std::uint32_t>(v >= p ? v - p : v));
      }
    }
  }
  return out;
}

Matrix Matrix::add(const Matrix& other) const {
  require_same(field_, other.field_, "Matrix::add");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("Matrix::add: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = field_.add(a_[i], other.a_[i]);
  return out;
}

Matrix Matrix::sub(const Matrix& other) const {
  require_same(field_, other.field_, "Matrix::sub");
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw InputError("Matrix::sub: shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    out.a_[i] = field_.sub(a_[i], other.a_[i]);
  return out;
}

Matrix Matrix::scaled(std::uint32_t c) const {
  Matrix out(field_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = field_.mul(a_[i], c);
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw InputError("Matrix::apply: shape mismatch");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc += static_cast<std::uint64_t>(at(r, c)) * v[c] % field_.p();
    out[r] = static_cast<std::uint32_t>(acc % field_.p());
  }
  return out;
}

Matrix Matrix::hcat(const Matrix& other) const {
  require_same(field_, other.field_, "Matrix::hcat");
  if (rows_ != other.rows_) throw InputError("Matrix::hcat: row mismatch");
  Matrix out(field_, rows_, cols_ + other.cols_);
  out.paste(*this, 0, 0);
  out.paste(other, 0, cols_);
  return out;
}

Matrix Matrix::vcat(const Matrix& other) const {
  require_same(field_, other.field_, "Matrix::vcat");
  if (cols_ != other.cols_) throw InputError("Matrix::vcat: col mismatch");
  Matrix out(field_, rows_ + other.rows_, cols_);
  out.paste(*this, 0, 0);
  out.paste(other, rows_, 0);
  return out;
}

void Matrix::paste(const Matrix& src, std::size_t r0, std::size_t c0) {
  for (std::size_t r = 0; r < src.rows_; ++r)
    for (std::size_t c = 0; c < src.cols_; ++c)
      set(r0 + r, c0 + c, src.at(r, c));
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  Matrix out(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) out.set(r, c, at(r0 + r, c0 + c));
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.rref = m;
  Matrix& a = res.rref;
  const PrimeField& F = m.field();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    // swap rows piv, lead
    if (piv != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        auto t = a.at(piv, j);
        a.set(piv, j, a.at(lead, j));
        a.set(lead, j, t);
      }
    }
    std::uint32_t iv = F.inv(a.at(lead, c));
    for (std::size_t j = c; j < a.cols(); ++j)
      a.set(lead, j, F.mul(a.at(lead, j), iv));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead) continue;
      std::uint32_t f = a.at(r, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < a.cols(); ++j)
        a.set(r, j, F.sub(a.at(r, j), F.mul(f, a.at(lead, j))));
    }
    res.pivot_cols.push_back(c);
    ++lead;
  }
  res.rank = res.pivot_cols.size();
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const PrimeField& F = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(m.cols(), 0);
    v[free_c] = 1 % F.p();
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = F.neg(r.rref.at(i, free_c));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw InputError("solve: rhs length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.paste(m, 0, 0);
  for (std::size_t r = 0; r < m.rows(); ++r) aug.set(r, m.cols(), b[r]);
  RrefResult rr = rref(aug);
  // Inconsistent iff some pivot lands in the rhs column.
  for (auto c : rr.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
    x[rr.pivot_cols[i]] = rr.rref.at(i, m.cols());
  return x;
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse: matrix not square");
  std::size_t n = m.rows();
  Matrix aug = m.hcat(Matrix::identity(m.field(), n));
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1)
    throw InputError("inverse: matrix is singular");
  return rr.rref.block(0, n, n, n);
}

Subspace::Subspace(PrimeField f, std::size_t ambient)
    : field_(f), ambient_(ambient) {}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_) throw InputError("Subspace::reduce: bad length");
  Vec r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::uint32_t c = r[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      r[j] = field_.sub(r[j], field_.mul(c, basis_[i][j]));
  }
  return r;
}

bool Subspace::contains(const Vec& v) const {
  Vec r = reduce(v);
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

bool Subspace::add(const Vec& v) {
  Vec r = reduce(v);
  std::size_t piv = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (r[j] != 0) {
      piv = j;
      break;
    }
  }
  if (piv == ambient_) return false;
  std::uint32_t iv = field_.inv(r[piv]);
  for (auto& x : r) x = field_.mul(x, iv);
  // keep earlier rows reduced against the new one
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::uint32_t c = basis_[i][piv];
    if (c == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      basis_[i][j] = field_.sub(basis_[i][j], field_.mul(c, r[j]));
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

}  // namespace arknit
