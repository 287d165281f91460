#include "arknit/complex.hpp"

#include <algorithm>

#include "arknit/errors.hpp"

namespace arknit {

ElemMatrix::ElemMatrix(const Algebra& A, std::size_t rows, std::size_t cols)
    : A_(&A), rows_(rows), cols_(cols), a_(rows * cols, A.zero_elem()) {}

bool ElemMatrix::is_zero() const {
  for (const auto& e : a_)
    for (auto v : e)
      if (v != 0) return false;
  return true;
}

namespace {
void require_same_shape(const ElemMatrix& x, const ElemMatrix& y,
                        const char* where) {
  if (x.algebra() != y.algebra() || x.rows() != y.rows() ||
      x.cols() != y.cols())
    throw InternalCheckError(std::string(where) + ": shape mismatch");
}
}  // namespace

ElemMatrix ElemMatrix::add(const ElemMatrix& other) const {
  require_same_shape(*this, other, "ElemMatrix::add");
  ElemMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = A_->add(a_[i], other.a_[i]);
  return r;
}

ElemMatrix ElemMatrix::sub(const ElemMatrix& other) const {
  require_same_shape(*this, other, "ElemMatrix::sub");
  ElemMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = A_->sub(a_[i], other.a_[i]);
  return r;
}

ElemMatrix ElemMatrix::negated() const {
  ElemMatrix r = *this;
  for (auto& e : r.a_)
    for (auto& v : e) v = A_->field().neg(v);
  return r;
}

ElemMatrix ElemMatrix::scaled(std::uint32_t c) const {
  ElemMatrix r = *this;
  for (auto& e : r.a_) e = A_->scale(c, e);
  return r;
}

ElemMatrix ElemMatrix::without_row(std::size_t r) const {
  ElemMatrix out(*A_, rows_ - 1, cols_);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0; j < cols_; ++j) out.set(oi, j, at(i, j));
    ++oi;
  }
  return out;
}

ElemMatrix ElemMatrix::without_col(std::size_t c) const {
  ElemMatrix out(*A_, rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out.set(i, oj++, at(i, j));
    }
  return out;
}

ElemMatrix compose(const ElemMatrix& g, const ElemMatrix& f) {
  if (g.algebra() != f.algebra())
    throw InternalCheckError("compose: different algebras");
  if (g.cols() != f.rows())
    throw InternalCheckError("compose: inner dimension mismatch");
  const Algebra& A = *g.algebra();
  ElemMatrix out(A, g.rows(), f.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) {
      Elem acc = A.zero_elem();
      for (std::size_t k = 0; k < g.cols(); ++k)
        acc = A.add(acc, A.mul(f.at(k, c), g.at(r, k)));
      out.set(r, c, std::move(acc));
    }
  return out;
}

ElemMatrix elem_identity(const Algebra& A,
                         const std::vector<std::size_t>& labels) {
  ElemMatrix out(A, labels.size(), labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    out.set(i, i, A.basis_elem(A.unit_path(labels[i])));
  return out;
}

std::size_t projective_dim(const Algebra& A, std::size_t v) {
  std::size_t n = 0;
  for (std::size_t b = 0; b < A.dim(); ++b)
    if (A.basis_word(b).head == v) ++n;
  return n;
}

ProjComplex ProjComplex::zero(const Algebra& A) {
  ProjComplex X;
  X.A_ = &A;
  return X;
}

ProjComplex ProjComplex::stalk(const Algebra& A, std::size_t vertex,
                               int degree) {
  if (vertex >= A.vertex_count()) throw InputError("stalk: bad vertex");
  ProjComplex X;
  X.A_ = &A;
  X.lo_ = degree;
  X.labels_.push_back({vertex});
  return X;
}

ProjComplex ProjComplex::build(const Algebra& A, int lo,
                               std::vector<std::vector<std::size_t>> labels,
                               std::vector<ElemMatrix> diffs) {
  if (!labels.empty() && diffs.size() + 1 != labels.size())
    throw InternalCheckError("ProjComplex::build: differential count");
  for (const auto& row : labels)
    for (auto v : row)
      if (v >= A.vertex_count())
        throw InputError("ProjComplex::build: bad projective label");
  for (std::size_t k = 0; k < diffs.size(); ++k) {
    const ElemMatrix& d = diffs[k];
    if (d.algebra() != &A || d.rows() != labels[k + 1].size() ||
        d.cols() != labels[k].size())
      throw InternalCheckError("ProjComplex::build: differential shape");
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        const Elem& e = d.at(r, c);
        for (std::size_t b = 0; b < A.dim(); ++b) {
          if (e[b] == 0) continue;
          if (A.basis_word(b).tail != labels[k][c] ||
              A.basis_word(b).head != labels[k + 1][r])
            throw InputError(
                "ProjComplex::build: entry outside its hom slice");
        }
      }
  }
  for (std::size_t k = 0; k + 1 < diffs.size(); ++k)
    if (!compose(diffs[k + 1], diffs[k]).is_zero())
      throw InputError("ProjComplex::build: d∘d ≠ 0");
  ProjComplex X;
  X.A_ = &A;
  X.lo_ = lo;
  X.labels_ = std::move(labels);
  X.diffs_ = std::move(diffs);
  X.normalize();
  return X;
}

void ProjComplex::normalize() {
  while (!labels_.empty() && labels_.front().empty()) {
    labels_.erase(labels_.begin());
    if (!diffs_.empty()) diffs_.erase(diffs_.begin());
    ++lo_;
  }
  while (!labels_.empty() && labels_.back().empty()) {
    labels_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  if (labels_.empty()) {
    diffs_.clear();
    lo_ = 0;
  }
}

std::size_t ProjComplex::width(int degree) const {
  if (labels_.empty() || degree < lo_ || degree > hi()) return 0;
  return labels_[static_cast<std::size_t>(degree - lo_)].size();
}

const std::vector<std::size_t>& ProjComplex::labels_at(int degree) const {
  static const std::vector<std::size_t> empty;
  if (labels_.empty() || degree < lo_ || degree > hi()) return empty;
  return labels_[static_cast<std::size_t>(degree - lo_)];
}

ElemMatrix ProjComplex::diff(int degree) const {
  if (!labels_.empty() && degree >= lo_ && degree < hi())
    return diffs_[static_cast<std::size_t>(degree - lo_)];
  return ElemMatrix(*A_, width(degree + 1), width(degree));
}

std::size_t ProjComplex::total_width() const {
  std::size_t n = 0;
  for (const auto& row : labels_) n += row.size();
  return n;
}

ElemMatrix ChainMap::component(int degree) const {
  int k = degree - lo;
  if (k >= 0 && k < static_cast<int>(comps.size()))
    return comps[static_cast<std::size_t>(k)];
  return ElemMatrix(from.algebra(), to.width(degree), from.width(degree));
}

namespace {
void require_parallel(const ProjComplex& X, const ProjComplex& Y,
                      const char* where) {
  if (!X.valid() || !Y.valid() || X.algebra_ptr() != Y.algebra_ptr())
    throw InternalCheckError(std::string(where) +
                             ": complexes over different algebras");
}
}  // namespace

ChainMap zero_map(const ProjComplex& X, const ProjComplex& Y) {
  require_parallel(X, Y, "zero_map");
  ChainMap f;
  f.from = X;
  f.to = Y;
  f.lo = 0;
  return f;
}

ChainMap identity_map(const ProjComplex& X) {
  ChainMap f = zero_map(X, X);
  f.lo = X.lo();
  for (int d = X.lo(); d <= X.hi(); ++d)
    f.comps.push_back(elem_identity(X.algebra(), X.labels_at(d)));
  if (X.is_zero_complex()) f.comps.clear();
  return f;
}

ChainMap make_map(const ProjComplex& X, const ProjComplex& Y,
                  const std::map<int, ElemMatrix>& comps) {
  require_parallel(X, Y, "make_map");
  const Algebra& A = X.algebra();
  ChainMap f = zero_map(X, Y);
  if (X.is_zero_complex() || Y.is_zero_complex()) return f;
  f.lo = std::min(X.lo(), Y.lo());
  int hi = std::max(X.hi(), Y.hi());
  for (int d = f.lo; d <= hi; ++d) {
    auto it = comps.find(d);
    if (it == comps.end()) {
      f.comps.emplace_back(A, Y.width(d), X.width(d));
      continue;
    }
    const ElemMatrix& m = it->second;
    if (m.rows() != Y.width(d) || m.cols() != X.width(d))
      throw InternalCheckError("make_map: component shape");
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Elem& e = m.at(r, c);
        for (std::size_t b = 0; b < A.dim(); ++b)
          if (e[b] != 0 && (A.basis_word(b).tail != X.labels_at(d)[c] ||
                            A.basis_word(b).head != Y.labels_at(d)[r]))
            throw InternalCheckError("make_map: entry outside its hom slice");
      }
    f.comps.push_back(m);
  }
  return f;
}

bool is_chain_map(const ChainMap& f) {
  if (!f.from.valid() || !f.to.valid() ||
      f.from.algebra_ptr() != f.to.algebra_ptr())
    return false;
  int lo = std::min(f.from.lo(), f.to.lo()) - 1;
  int hi = std::max(f.from.hi(), f.to.hi()) + 1;
  if (f.from.is_zero_complex() && f.to.is_zero_complex()) return true;
  for (int d = lo; d <= hi; ++d) {
    ElemMatrix lhs = compose(f.component(d + 1), f.from.diff(d));
    ElemMatrix rhs = compose(f.to.diff(d), f.component(d));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ChainMap compose_maps(const ChainMap& g, const ChainMap& f) {
  if (!(f.to == g.from) || f.to.algebra_ptr() != g.from.algebra_ptr())
    throw InternalCheckError("compose_maps: middle complexes differ");
  std::map<int, ElemMatrix> comps;
  if (!f.from.is_zero_complex() && !g.to.is_zero_complex()) {
    int lo = std::min(f.from.lo(), g.to.lo());
    int hi = std::max(f.from.hi(), g.to.hi());
    for (int d = lo; d <= hi; ++d)
      comps.emplace(d, compose(g.component(d), f.component(d)));
  }
  return make_map(f.from, g.to, comps);
}

ChainMap add_maps(const ChainMap& f, const ChainMap& g) {
  if (!(f.from == g.from) || !(f.to == g.to))
    throw InternalCheckError("add_maps: shape mismatch");
  std::map<int, ElemMatrix> comps;
  int lo = std::min(f.lo, g.lo);
  int hi = std::max(f.lo + static_cast<int>(f.comps.size()),
                    g.lo + static_cast<int>(g.comps.size())) -
           1;
  for (int d = lo; d <= hi; ++d)
    comps.emplace(d, f.component(d).add(g.component(d)));
  return make_map(f.from, f.to, comps);
}

ChainMap negate_map(const ChainMap& f) {
  ChainMap r = f;
  for (auto& m : r.comps) m = m.negated();
  return r;
}

ChainMap scale_map(std::uint32_t c, const ChainMap& f) {
  ChainMap r = f;
  for (auto& m : r.comps) m = m.scaled(c);
  return r;
}

ProjComplex shift(const ProjComplex& X, int n) {
  if (!X.valid()) throw InternalCheckError("shift: invalid complex");
  if (X.is_zero_complex() || n == 0) return X;
  std::vector<std::vector<std::size_t>> labels;
  std::vector<ElemMatrix> diffs;
  for (int d = X.lo(); d <= X.hi(); ++d) {
    labels.push_back(X.labels_at(d));
    if (d < X.hi()) {
      ElemMatrix m = X.diff(d);
      if (n % 2 != 0) m = m.negated();
      diffs.push_back(std::move(m));
    }
  }
  return ProjComplex::build(X.algebra(), X.lo() - n, std::move(labels),
                            std::move(diffs));
}

ChainMap shift_map(const ChainMap& f, int n) {
  ChainMap r;
  r.from = shift(f.from, n);
  r.to = shift(f.to, n);
  r.lo = f.lo - n;
  r.comps = f.comps;
  return r;
}

ProjComplex truncate_le(const ProjComplex& X, int n) {
  if (!X.valid()) throw InternalCheckError("truncate: invalid complex");
  if (X.is_zero_complex() || n >= X.hi()) return X;
  if (n < X.lo()) return ProjComplex::zero(X.algebra());
  std::vector<std::vector<std::size_t>> labels;
  std::vector<ElemMatrix> diffs;
  for (int d = X.lo(); d <= n; ++d) {
    labels.push_back(X.labels_at(d));
    if (d < n) diffs.push_back(X.diff(d));
  }
  return ProjComplex::build(X.algebra(), X.lo(), std::move(labels),
                            std::move(diffs));
}

ProjComplex truncate_ge(const ProjComplex& X, int n) {
  if (!X.valid()) throw InternalCheckError("truncate: invalid complex");
  if (X.is_zero_complex() || n <= X.lo()) return X;
  if (n > X.hi()) return ProjComplex::zero(X.algebra());
  std::vector<std::vector<std::size_t>> labels;
  std::vector<ElemMatrix> diffs;
  for (int d = n; d <= X.hi(); ++d) {
    labels.push_back(X.labels_at(d));
    if (d < X.hi()) diffs.push_back(X.diff(d));
  }
  return ProjComplex::build(X.algebra(), n, std::move(labels),
                            std::move(diffs));
}

ConeResult make_cone(const ChainMap& f) {
  if (!is_chain_map(f))
    throw PreconditionUnmetError("cone: input is not a chain map");
  const ProjComplex& X = f.from;
  const ProjComplex& Y = f.to;
  const Algebra& A = X.algebra();

  int lo = 0, hi = -1;
  bool any = false;
  auto widen = [&](int d) {
    if (!any) {
      lo = hi = d;
      any = true;
    } else {
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  };
  if (!X.is_zero_complex()) {
    widen(X.lo() - 1);
    widen(X.hi() - 1);
  }
  if (!Y.is_zero_complex()) {
    widen(Y.lo());
    widen(Y.hi());
  }

  std::vector<std::vector<std::size_t>> labels;
  std::vector<ElemMatrix> diffs;
  for (int d = lo; d <= hi && any; ++d) {
    std::vector<std::size_t> row = X.labels_at(d + 1);
    const auto& yl = Y.labels_at(d);
    row.insert(row.end(), yl.begin(), yl.end());
    labels.push_back(std::move(row));
  }
  for (int d = lo; d < hi && any; ++d) {
    std::size_t xc = X.width(d + 1), yc = Y.width(d);
    std::size_t xr = X.width(d + 2), yr = Y.width(d + 1);
    ElemMatrix m(A, xr + yr, xc + yc);
    ElemMatrix dx = X.diff(d + 1).negated();
    ElemMatrix fy = f.component(d + 1);
    ElemMatrix dy = Y.diff(d);
    for (std::size_t r = 0; r < xr; ++r)
      for (std::size_t c = 0; c < xc; ++c) m.set(r, c, dx.at(r, c));
    for (std::size_t r = 0; r < yr; ++r) {
      for (std::size_t c = 0; c < xc; ++c) m.set(xr + r, c, fy.at(r, c));
      for (std::size_t c = 0; c < yc; ++c) m.set(xr + r, xc + c, dy.at(r, c));
    }
    diffs.push_back(std::move(m));
  }

  ConeResult out;
  out.cone = any ? ProjComplex::build(A, lo, std::move(labels),
                                      std::move(diffs))
                 : ProjComplex::zero(A);

  std::map<int, ElemMatrix> inc, prj;
  for (int d = lo; d <= hi && any; ++d) {
    std::size_t xw = X.width(d + 1), yw = Y.width(d);
    ElemMatrix mi(A, xw + yw, yw);
    const auto& yl = Y.labels_at(d);
    for (std::size_t j = 0; j < yw; ++j)
      mi.set(xw + j, j, A.basis_elem(A.unit_path(yl[j])));
    inc.emplace(d, std::move(mi));
    ElemMatrix mp(A, xw, xw + yw);
    const auto& xl = X.labels_at(d + 1);
    for (std::size_t j = 0; j < xw; ++j)
      mp.set(j, j, A.basis_elem(A.unit_path(xl[j])));
    prj.emplace(d, std::move(mp));
  }
  out.into_cone = make_map(Y, out.cone, inc);
  out.onto_shift = make_map(out.cone, shift(X, 1), prj);
  if (!is_chain_map(out.into_cone) || !is_chain_map(out.onto_shift))
    throw InternalCheckError("cone: triangle maps fail the chain condition");
  return out;
}

SumResult direct_sum(const ProjComplex& X, const ProjComplex& Y) {
  require_parallel(X, Y, "direct_sum");
  const Algebra& A = X.algebra();
  if (X.is_zero_complex() && Y.is_zero_complex()) {
    SumResult out;
    out.sum = ProjComplex::zero(A);
    out.incl_left = zero_map(X, out.sum);
    out.incl_right = zero_map(Y, out.sum);
    out.proj_left = zero_map(out.sum, X);
    out.proj_right = zero_map(out.sum, Y);
    return out;
  }
  int lo = X.is_zero_complex() ? Y.lo()
           : Y.is_zero_complex() ? X.lo()
                                 : std::min(X.lo(), Y.lo());
  int hi = X.is_zero_complex() ? Y.hi()
           : Y.is_zero_complex() ? X.hi()
                                 : std::max(X.hi(), Y.hi());
  std::vector<std::vector<std::size_t>> labels;
  std::vector<ElemMatrix> diffs;
  for (int d = lo; d <= hi; ++d) {
    std::vector<std::size_t> row = X.labels_at(d);
    const auto& yl = Y.labels_at(d);
    row.insert(row.end(), yl.begin(), yl.end());
    labels.push_back(std::move(row));
  }
  for (int d = lo; d < hi; ++d) {
    std::size_t xc = X.width(d), yc = Y.width(d);
    std::size_t xr = X.width(d + 1), yr = Y.width(d + 1);
    ElemMatrix m(A, xr + yr, xc + yc);
    ElemMatrix dx = X.diff(d), dy = Y.diff(d);
    for (std::size_t r = 0; r < xr; ++r)
      for (std::size_t c = 0; c < xc; ++c) m.set(r, c, dx.at(r, c));
    for (std::size_t r = 0; r < yr; ++r)
      for (std::size_t c = 0; c < yc; ++c) m.set(xr + r, xc + c, dy.at(r, c));
    diffs.push_back(std::move(m));
  }
  SumResult out;
  out.sum = ProjComplex::build(A, lo, std::move(labels), std::move(diffs));
  std::map<int, ElemMatrix> il, ir, pl, pr;
  for (int d = lo; d <= hi; ++d) {
    std::size_t xw = X.width(d), yw = Y.width(d);
    ElemMatrix mil(A, xw + yw, xw), mir(A, xw + yw, yw);
    ElemMatrix mpl(A, xw, xw + yw), mpr(A, yw, xw + yw);
    const auto& xl = X.labels_at(d);
    const auto& yl = Y.labels_at(d);
    for (std::size_t j = 0; j < xw; ++j) {
      Elem e = A.basis_elem(A.unit_path(xl[j]));
      mil.set(j, j, e);
      mpl.set(j, j, e);
    }
    for (std::size_t j = 0; j < yw; ++j) {
      Elem e = A.basis_elem(A.unit_path(yl[j]));
      mir.set(xw + j, j, e);
      mpr.set(j, xw + j, e);
    }
    il.emplace(d, std::move(mil));
    ir.emplace(d, std::move(mir));
    pl.emplace(d, std::move(mpl));
    pr.emplace(d, std::move(mpr));
  }
  out.incl_left = make_map(X, out.sum, il);
  out.incl_right = make_map(Y, out.sum, ir);
  out.proj_left = make_map(out.sum, X, pl);
  out.proj_right = make_map(out.sum, Y, pr);
  return out;
}

bool is_minimal(const ProjComplex& X) {
  for (int d = X.lo(); d < X.hi(); ++d) {
    ElemMatrix m = X.diff(d);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!X.algebra().in_radical(m.at(r, c))) return false;
  }
  return true;
}

StripResult strip_contractibles(const ProjComplex& X) {
  if (!X.valid()) throw InternalCheckError("strip: invalid complex");
  const Algebra& A = X.algebra();
  const int lo = X.lo();
  std::vector<std::vector<std::size_t>> labels;
  std::vector<ElemMatrix> diffs;
  for (int d = X.lo(); d <= X.hi(); ++d) {
    labels.push_back(X.labels_at(d));
    if (d < X.hi()) diffs.push_back(X.diff(d));
  }
  std::map<int, ElemMatrix> into, fromo;
  for (int d = X.lo(); d <= X.hi(); ++d) {
    into.emplace(d, elem_identity(A, X.labels_at(d)));
    fromo.emplace(d, elem_identity(A, X.labels_at(d)));
  }
  std::vector<std::pair<std::size_t, int>> stripped;

  auto find_unit = [&](std::size_t& k, std::size_t& r, std::size_t& c) {
    for (k = 0; k < diffs.size(); ++k) {
      const ElemMatrix& d = diffs[k];
      for (r = 0; r < d.rows(); ++r)
        for (c = 0; c < d.cols(); ++c) {
          std::size_t v = labels[k][c];
          if (labels[k + 1][r] == v &&
              d.at(r, c)[A.unit_path(v)] != 0)
            return true;
        }
    }
    return false;
  };

  std::size_t k = 0, r = 0, c = 0;
  while (find_unit(k, r, c)) {
    const std::size_t v = labels[k][c];
    const int deg = lo + static_cast<int>(k);
    Elem u = diffs[k].at(r, c);
    auto uinv_opt = A.local_inverse(u, v);
    if (!uinv_opt)
      throw InternalCheckError("strip: unit entry has no local inverse");
    const Elem uinv = *uinv_opt;

    // column operations at degree deg: kill row r outside column c
    {
      ElemMatrix S = elem_identity(A, labels[k]);
      ElemMatrix Sinv = S;
      for (std::size_t c2 = 0; c2 < diffs[k].cols(); ++c2) {
        if (c2 == c) continue;
        Elem e = A.mul(diffs[k].at(r, c2), uinv);
        S.set(c, c2, A.scale(A.field().neg(1 % A.field().p()), e));
        Sinv.set(c, c2, e);
      }
      diffs[k] = compose(diffs[k], S);
      if (k > 0) diffs[k - 1] = compose(Sinv, diffs[k - 1]);
      into[deg] = compose(into[deg], S);
      fromo[deg] = compose(Sinv, fromo[deg]);
    }
    // row operations at degree deg+1: kill column c outside row r
    {
      ElemMatrix T = elem_identity(A, labels[k + 1]);
      ElemMatrix Tinv = T;
      for (std::size_t r2 = 0; r2 < diffs[k].rows(); ++r2) {
        if (r2 == r) continue;
        Elem e = A.mul(uinv, diffs[k].at(r2, c));
        T.set(r2, r, A.scale(A.field().neg(1 % A.field().p()), e));
        Tinv.set(r2, r, e);
      }
      diffs[k] = compose(T, diffs[k]);
      if (k + 1 < diffs.size()) diffs[k + 1] = compose(diffs[k + 1], Tinv);
      into[deg + 1] = compose(into[deg + 1], Tinv);
      fromo[deg + 1] = compose(T, fromo[deg + 1]);
    }
    // d∘d = 0 forces the adjacent cross entries to vanish now
    if (k > 0)
      for (std::size_t b = 0; b < diffs[k - 1].cols(); ++b)
        if (!A.is_zero(diffs[k - 1].at(c, b)))
          throw InternalCheckError("strip: residual entry into the pair");
    if (k + 1 < diffs.size())
      for (std::size_t s = 0; s < diffs[k + 1].rows(); ++s)
        if (!A.is_zero(diffs[k + 1].at(s, r)))
          throw InternalCheckError("strip: residual entry out of the pair");

    // remove the pair
    labels[k].erase(labels[k].begin() + static_cast<long>(c));
    labels[k + 1].erase(labels[k + 1].begin() + static_cast<long>(r));
    diffs[k] = diffs[k].without_row(r).without_col(c);
    if (k > 0) diffs[k - 1] = diffs[k - 1].without_row(c);
    if (k + 1 < diffs.size()) diffs[k + 1] = diffs[k + 1].without_col(r);
    into[deg] = into[deg].without_col(c);
    fromo[deg] = fromo[deg].without_row(c);
    into[deg + 1] = into[deg + 1].without_col(r);
    fromo[deg + 1] = fromo[deg + 1].without_row(r);
    stripped.emplace_back(v, deg);
  }

  StripResult out;
  out.min = ProjComplex::build(A, lo, labels, diffs);
  out.stripped = std::move(stripped);
  out.into_original = make_map(out.min, X, into);
  out.from_original = make_map(X, out.min, fromo);

  if (!is_minimal(out.min))
    throw InternalCheckError("strip: result is not minimal");
  if (!is_chain_map(out.into_original) || !is_chain_map(out.from_original))
    throw InternalCheckError("strip: transform is not a chain map");
  ChainMap round = compose_maps(out.from_original, out.into_original);
  ChainMap ident = identity_map(out.min);
  for (int d = out.min.lo(); d <= out.min.hi(); ++d)
    if (!(round.component(d) == ident.component(d)))
      throw InternalCheckError("strip: retraction is not the identity");
  return out;
}

LengthTriple lengths(const ProjComplex& X) {
  LengthTriple t;
  for (int d = X.lo(); d <= X.hi(); ++d)
    for (auto v : X.labels_at(d)) {
      t.l_c += projective_dim(X.algebra(), v);
      t.l += 1;
    }
  t.l_p = strip_contractibles(X).min.total_width();
  return t;
}

}  // namespace arknit
