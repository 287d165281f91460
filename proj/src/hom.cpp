#include "arknit/hom.hpp"

#include <algorithm>
#include <map>

#include "arknit/errors.hpp"

namespace arknit {

namespace {

// Per-degree offsets of the unknown layout: for each (row, col) entry the
// start position of its slice coordinates and the slice itself.
struct EntryOffsets {
  std::size_t start = 0;
  const std::vector<std::size_t>* slice = nullptr;
};

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Matrix mat_pow(Matrix m, std::uint64_t e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  while (e > 0) {
    if (e & 1) r = r.mul(m);
    m = m.mul(m);
    e >>= 1;
  }
  return r;
}

std::uint32_t mat_trace(const PrimeField& F, const Matrix& m) {
  std::uint32_t t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t = F.add(t, m.at(i, i));
  return t;
}

}  // namespace

HomSpace HomSpace::compute(const ProjComplex& X, const ProjComplex& Y) {
  return compute_seeded(X, Y, {});
}

HomSpace HomSpace::compute_seeded(const ProjComplex& X, const ProjComplex& Y,
                                  const std::vector<ChainMap>& preferred_reps) {
  if (!X.valid() || !Y.valid())
    throw InputError("hom_space: invalid complex");
  if (X.algebra_ptr() != Y.algebra_ptr())
    throw InputError("hom_space: complexes live over different algebras");
  const Algebra& A = X.algebra();
  const PrimeField F = A.field();

  HomSpace H;
  H.X_ = X;
  H.Y_ = Y;
  H.class_solver_ = Matrix(F, 0, 0);
  H.solver_ops_ = Matrix(F, 0, 0);
  if (X.is_zero_complex() || Y.is_zero_complex()) return H;
  H.lo_ = std::max(X.lo(), Y.lo());
  H.hi_ = std::min(X.hi(), Y.hi());
  if (H.lo_ > H.hi_) return H;

  // Unknowns: slice coordinates of each component entry on the overlap.
  // entry_offsets[d - lo_][r * cols + c] locates an entry's coordinates.
  std::vector<std::vector<EntryOffsets>> entry_offsets;
  for (int d = H.lo_; d <= H.hi_; ++d) {
    const auto& src = X.labels_at(d);
    const auto& dst = Y.labels_at(d);
    std::vector<EntryOffsets> offs(dst.size() * src.size());
    for (std::size_t r = 0; r < dst.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) {
        const auto& slice = A.hom_slice(src[c], dst[r]);
        offs[r * src.size() + c] = {H.slots_.size(), &slice};
        for (std::size_t b : slice) H.slots_.push_back({d, r, c, b});
      }
    entry_offsets.push_back(std::move(offs));
  }
  const std::size_t U = H.slots_.size();
  if (U == 0) return H;

  // Constraint coordinates: for k in [lo-1, hi] the map
  // f^{k+1} d_X^k − d_Y^k f^k : X^k -> Y^{k+1} must vanish; one coordinate
  // per slice element of each (R, C) entry.
  struct CEntry {
    std::size_t start = 0;
    const std::vector<std::size_t>* slice = nullptr;
  };
  std::vector<std::vector<CEntry>> cons_offsets;  // indexed by k - (lo-1)
  std::size_t CR = 0;
  for (int k = H.lo_ - 1; k <= H.hi_; ++k) {
    std::size_t cw = X.width(k), rw = Y.width(k + 1);
    std::vector<CEntry> offs(rw * cw);
    if (cw > 0 && rw > 0) {
      const auto& src = X.labels_at(k);
      const auto& dst = Y.labels_at(k + 1);
      for (std::size_t R = 0; R < rw; ++R)
        for (std::size_t C = 0; C < cw; ++C) {
          const auto& slice = A.hom_slice(src[C], dst[R]);
          offs[R * cw + C] = {CR, &slice};
          CR += slice.size();
        }
    }
    cons_offsets.push_back(std::move(offs));
  }

  auto scatter = [&](Matrix& M, int k, std::size_t R, std::size_t C,
                     const Elem& v, bool negate, std::size_t ucol) {
    const auto& offs = cons_offsets[static_cast<std::size_t>(k - (H.lo_ - 1))];
    const CEntry& e = offs[R * X.width(k) + C];
    for (std::size_t s = 0; s < e.slice->size(); ++s) {
      std::uint32_t cf = v[(*e.slice)[s]];
      if (cf == 0) continue;
      if (negate) cf = F.neg(cf);
      M.set(e.start + s, ucol, F.add(M.at(e.start + s, ucol), cf));
    }
  };

  Matrix M(F, CR, U);
  for (std::size_t u = 0; u < U; ++u) {
    const Slot& sl = H.slots_[u];
    const Elem b = A.basis_elem(sl.basis_index);
    // as f^{k+1} with k = d-1: (f^{k+1} d_X^k)(r, C) = mul(d_X(c, C), b)
    if (X.width(sl.degree - 1) > 0) {
      ElemMatrix dX = X.diff(sl.degree - 1);
      for (std::size_t C = 0; C < dX.cols(); ++C) {
        Elem v = A.mul(dX.at(sl.c, C), b);
        if (!A.is_zero(v)) scatter(M, sl.degree - 1, sl.r, C, v, false, u);
      }
    }
    // as f^k with k = d: (d_Y^k f^k)(R, c) = mul(b, d_Y(R, r)), negated
    if (Y.width(sl.degree + 1) > 0) {
      ElemMatrix dY = Y.diff(sl.degree);
      for (std::size_t R = 0; R < dY.rows(); ++R) {
        Elem v = A.mul(b, dY.at(R, sl.r));
        if (!A.is_zero(v)) scatter(M, sl.degree, R, sl.c, v, true, u);
      }
    }
  }

  H.chain_basis_ = kernel_basis(M);
  // certify the assembly: every kernel vector must be an actual chain map
  for (const Vec& v : H.chain_basis_)
    if (!is_chain_map(H.map_from_raw(v)))
      throw InternalCheckError("hom_space: commutation system mismatch");

  // Null-homotopic subspace: boundaries dh + hd of elementary homotopies
  // h^d : X^d -> Y^{d-1}.
  Subspace null_span(F, U);
  auto add_coords = [&](Vec& raw, int d, std::size_t r, std::size_t c,
                        const Elem& v) {
    const auto& offs = entry_offsets[static_cast<std::size_t>(d - H.lo_)];
    const EntryOffsets& e = offs[r * X.width(d) + c];
    for (std::size_t s = 0; s < e.slice->size(); ++s) {
      std::uint32_t cf = v[(*e.slice)[s]];
      if (cf != 0) raw[e.start + s] = F.add(raw[e.start + s], cf);
    }
  };
  int h_lo = std::max(X.lo(), Y.lo() + 1);
  int h_hi = std::min(X.hi(), Y.hi() + 1);
  for (int d = h_lo; d <= h_hi; ++d) {
    const auto& src = X.labels_at(d);
    const auto& dst = Y.labels_at(d - 1);
    for (std::size_t r2 = 0; r2 < dst.size(); ++r2)
      for (std::size_t c2 = 0; c2 < src.size(); ++c2)
        for (std::size_t bi : A.hom_slice(src[c2], dst[r2])) {
          const Elem b = A.basis_elem(bi);
          Vec raw(U, 0);
          // (h d_X)(r2, C) at degree d-1
          if (d - 1 >= H.lo_ && X.width(d - 1) > 0) {
            ElemMatrix dX = X.diff(d - 1);
            for (std::size_t C = 0; C < dX.cols(); ++C) {
              Elem v = A.mul(dX.at(c2, C), b);
              if (!A.is_zero(v) && Y.width(d - 1) > 0)
                add_coords(raw, d - 1, r2, C, v);
            }
          }
          // (d_Y h)(R, c2) at degree d
          if (d <= H.hi_ && Y.width(d) > 0) {
            ElemMatrix dY = Y.diff(d - 1);
            for (std::size_t R = 0; R < dY.rows(); ++R) {
              Elem v = A.mul(b, dY.at(R, r2));
              if (!A.is_zero(v)) add_coords(raw, d, R, c2, v);
            }
          }
          null_span.add(raw);
        }
  }
  H.null_basis_ = null_span.basis();
  // boundaries are chain maps, so they must lie in the kernel just computed
  {
    Subspace chain_span(F, U);
    for (const Vec& v : H.chain_basis_) chain_span.add(v);
    for (const Vec& v : H.null_basis_)
      if (!chain_span.contains(v))
        throw InternalCheckError("hom_space: boundary escapes chain-map space");
  }

  // Coset representatives: preferred seeds first, then kernel vectors.
  Subspace quot(F, U);
  for (const Vec& v : H.null_basis_) quot.add(v);
  for (const ChainMap& f : preferred_reps) {
    if (!is_chain_map(f))
      throw InternalCheckError("hom_space: preferred representative is not a chain map");
    Vec raw = H.raw_coords(f);
    if (quot.add(raw)) H.reps_.push_back(raw);
  }
  for (const Vec& v : H.chain_basis_)
    if (quot.add(v)) H.reps_.push_back(v);
  if (H.null_basis_.size() + H.reps_.size() != H.chain_basis_.size())
    throw InternalCheckError("hom_space: quotient dimension mismatch");

  // Prepared solver for class coordinates: columns are the null basis then
  // the representatives; independent by construction, so solutions are
  // unique.  solver_ops_ records the row reduction.
  std::size_t cols = H.null_basis_.size() + H.reps_.size();
  Matrix S(F, U, cols);
  for (std::size_t j = 0; j < H.null_basis_.size(); ++j)
    for (std::size_t i = 0; i < U; ++i) S.set(i, j, H.null_basis_[j][i]);
  for (std::size_t j = 0; j < H.reps_.size(); ++j)
    for (std::size_t i = 0; i < U; ++i)
      S.set(i, H.null_basis_.size() + j, H.reps_[j][i]);
  H.class_solver_ = S;
  RrefResult rr = rref(S.hcat(Matrix::identity(F, U)));
  H.solver_ops_ = rr.rref.block(0, cols, U, U);
  H.solver_pivots_.clear();
  for (std::size_t pc : rr.pivot_cols)
    if (pc < cols) H.solver_pivots_.push_back(pc);
  if (H.solver_pivots_.size() != cols)
    throw InternalCheckError("hom_space: dependent class basis");
  return H;
}

ChainMap HomSpace::rep(std::size_t i) const { return map_from_raw(reps_.at(i)); }

ChainMap HomSpace::map_from_raw(const Vec& coords) const {
  if (coords.size() != slots_.size())
    throw InputError("map_from_raw: coordinate length mismatch");
  const Algebra& A = X_.algebra();
  std::map<int, ElemMatrix> comps;
  for (int d = lo_; d <= hi_; ++d)
    comps.emplace(d, ElemMatrix(A, Y_.width(d), X_.width(d)));
  for (std::size_t u = 0; u < slots_.size(); ++u) {
    if (coords[u] == 0) continue;
    const Slot& sl = slots_[u];
    ElemMatrix& m = comps.at(sl.degree);
    Elem e = m.at(sl.r, sl.c);
    if (e.empty()) e = A.zero_elem();
    e[sl.basis_index] = A.field().add(e[sl.basis_index], coords[u]);
    m.set(sl.r, sl.c, std::move(e));
  }
  return make_map(X_, Y_, comps);
}

Vec HomSpace::raw_coords(const ChainMap& f) const {
  Vec raw(slots_.size(), 0);
  int cur = lo_ - 1;
  ElemMatrix comp;
  for (std::size_t u = 0; u < slots_.size(); ++u) {
    const Slot& sl = slots_[u];
    if (sl.degree != cur) {
      cur = sl.degree;
      comp = f.component(cur);
    }
    raw[u] = comp.at(sl.r, sl.c)[sl.basis_index];
  }
  return raw;
}

Vec HomSpace::class_coords(const ChainMap& f) const {
  std::size_t cols = null_basis_.size() + reps_.size();
  Vec raw = raw_coords(f);
  if (slots_.empty()) return Vec(reps_.size(), 0);
  Vec w = solver_ops_.apply(raw);
  Vec x(cols, 0);
  for (std::size_t r = 0; r < solver_pivots_.size(); ++r)
    x[solver_pivots_[r]] = w[r];
  for (std::size_t r = solver_pivots_.size(); r < w.size(); ++r)
    if (w[r] != 0)
      throw InternalCheckError("class_coords: map outside the chain-map space");
  return Vec(x.begin() + static_cast<std::ptrdiff_t>(null_basis_.size()),
             x.end());
}

bool HomSpace::is_null_homotopic(const ChainMap& f) const {
  Vec cls = class_coords(f);
  for (std::uint32_t c : cls)
    if (c != 0) return false;
  return true;
}

ChainMap HomSpace::map_from_class(const Vec& cls) const {
  if (cls.size() != reps_.size())
    throw InputError("map_from_class: class length mismatch");
  const PrimeField& F = X_.algebra().field();
  Vec raw(slots_.size(), 0);
  for (std::size_t j = 0; j < cls.size(); ++j) {
    if (cls[j] == 0) continue;
    for (std::size_t i = 0; i < raw.size(); ++i)
      raw[i] = F.add(raw[i], F.mul(cls[j], reps_[j][i]));
  }
  if (slots_.empty()) return zero_map(X_, Y_);
  return map_from_raw(raw);
}

EndAlgebra EndAlgebra::compute(const ProjComplex& X) {
  EndAlgebra E;
  if (!X.valid()) throw InputError("end_algebra: invalid complex");
  if (X.is_zero_complex()) {
    E.hom_ = HomSpace::compute(X, X);
    return E;
  }
  E.hom_ = HomSpace::compute_seeded(X, X, {identity_map(X)});
  const PrimeField& F = X.algebra().field();
  std::size_t n = E.hom_.dim();
  // representative 0 must be the identity class
  Vec unit = E.hom_.class_coords(identity_map(X));
  for (std::size_t i = 0; i < n; ++i)
    if (unit[i] != (i == 0 ? 1u : 0u))
      throw InternalCheckError("end_algebra: identity is not representative 0");
  E.table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    ChainMap fi = E.hom_.rep(i);
    for (std::size_t j = 0; j < n; ++j)
      E.table_[i * n + j] = E.hom_.class_coords(compose_maps(fi, E.hom_.rep(j)));
  }
  // table invariants: unit laws and associativity on basis triples
  for (std::size_t j = 0; j < n; ++j) {
    Vec ej(n, 0);
    ej[j] = 1;
    if (E.table(0, j) != ej || E.table(j, 0) != ej)
      throw InternalCheckError("end_algebra: unit law fails on the table");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = E.table(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek(n, 0);
        ek[k] = 1;
        Vec left = E.mul_vec(ij, ek);
        Vec right(n, 0);
        for (std::size_t m = 0; m < n; ++m) {
          std::uint32_t c = E.table(j, k)[m];
          if (c == 0) continue;
          const Vec& im = E.table(i, m);
          for (std::size_t t = 0; t < n; ++t)
            right[t] = F.add(right[t], F.mul(c, im[t]));
        }
        if (left != right)
          throw InternalCheckError("end_algebra: table is not associative");
      }
    }
  return E;
}

Vec EndAlgebra::unit_vec() const {
  Vec u(dim(), 0);
  if (!u.empty()) u[0] = 1;
  return u;
}

Vec EndAlgebra::mul_vec(const Vec& x, const Vec& y) const {
  std::size_t n = dim();
  const PrimeField& F = hom_.source().algebra().field();
  Vec r(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      std::uint32_t c = F.mul(x[i], y[j]);
      const Vec& t = table(i, j);
      for (std::size_t k = 0; k < n; ++k) r[k] = F.add(r[k], F.mul(c, t[k]));
    }
  }
  return r;
}

Vec EndAlgebra::pow_vec(Vec x, std::uint64_t e) const {
  Vec r = unit_vec();
  while (e > 0) {
    if (e & 1) r = mul_vec(r, x);
    x = mul_vec(x, x);
    e >>= 1;
  }
  return r;
}

namespace {

// Plain finite-dimensional algebra given by structure constants; used for
// the radical chain and its own re-run on the quotient.
struct AlgTable {
  PrimeField F;
  std::size_t n = 0;
  std::vector<Vec> mult;  // mult[i*n+j] = coords of b_i b_j
  Vec unit;

  Vec mul(const Vec& x, const Vec& y) const {
    Vec r(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j] == 0) continue;
        std::uint32_t c = F.mul(x[i], y[j]);
        const Vec& t = mult[i * n + j];
        for (std::size_t k = 0; k < n; ++k) r[k] = F.add(r[k], F.mul(c, t[k]));
      }
    }
    return r;
  }

  Vec pow(Vec x, std::uint64_t e) const {
    Vec r = unit;
    while (e > 0) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  Matrix left_mult(const Vec& x) const {
    Matrix L(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Vec& t = mult[i * n + j];
        for (std::size_t k = 0; k < n; ++k)
          L.set(k, j, F.add(L.at(k, j), F.mul(x[i], t[k])));
      }
    }
    return L;
  }
};

// Trace-power chain: J_0 = E, J_{i+1} = {x in J_i : tr((L_x L_y)^{p^i}) = 0
// for all y in J_i}, for p^i <= n. tr of a p-th power is additive in
// characteristic p, so each step is one kernel computation.
std::vector<Vec> radical_chain(const AlgTable& T) {
  if (T.n == 0) return {};
  std::vector<Vec> V;
  for (std::size_t i = 0; i < T.n; ++i) {
    Vec e(T.n, 0);
    e[i] = 1;
    V.push_back(e);
  }
  for (std::uint32_t step = 0; ipow(T.F.p(), step) <= T.n; ++step) {
    if (V.empty()) break;
    std::uint64_t q = ipow(T.F.p(), step);
    std::size_t m = V.size();
    Matrix C(T.F, m, m);
    for (std::size_t yi = 0; yi < m; ++yi)
      for (std::size_t j = 0; j < m; ++j) {
        Vec prod = T.mul(V[j], V[yi]);
        C.set(yi, j, mat_trace(T.F, mat_pow(T.left_mult(prod), q)));
      }
    std::vector<Vec> kern = kernel_basis(C);
    std::vector<Vec> next;
    for (const Vec& kv : kern) {
      Vec w(T.n, 0);
      for (std::size_t j = 0; j < m; ++j) {
        if (kv[j] == 0) continue;
        for (std::size_t t = 0; t < T.n; ++t)
          w[t] = T.F.add(w[t], T.F.mul(kv[j], V[j][t]));
      }
      next.push_back(std::move(w));
    }
    V = std::move(next);
  }
  return V;
}

struct QuotientTable {
  AlgTable table;
  std::vector<Vec> rep_vecs;  // ambient coordinates of the coset basis
};

// Quotient of T by the span of J; coset basis = unit vectors completing J.
QuotientTable quotient_table(const AlgTable& T, const std::vector<Vec>& J) {
  Subspace span(T.F, T.n);
  for (const Vec& j : J) span.add(j);
  std::size_t jd = span.dim();
  QuotientTable Q;
  {
    Subspace grow(T.F, T.n);
    for (const Vec& j : J) grow.add(j);
    for (std::size_t k = 0; k < T.n; ++k) {
      Vec e(T.n, 0);
      e[k] = 1;
      if (grow.add(e)) Q.rep_vecs.push_back(e);
    }
  }
  std::size_t q = Q.rep_vecs.size();
  if (jd + q != T.n)
    throw InternalCheckError("radical: quotient basis completion failed");
  // projection solver: [J basis | reps] x = v, unique by construction
  Matrix S(T.F, T.n, T.n);
  {
    const auto& jb = span.basis();
    for (std::size_t c = 0; c < jd; ++c)
      for (std::size_t r = 0; r < T.n; ++r) S.set(r, c, jb[c][r]);
    for (std::size_t c = 0; c < q; ++c)
      for (std::size_t r = 0; r < T.n; ++r) S.set(r, jd + c, Q.rep_vecs[c][r]);
  }
  auto project = [&](const Vec& v) {
    auto x = solve(S, v);
    if (!x) throw InternalCheckError("radical: quotient projection failed");
    return Vec(x->begin() + static_cast<std::ptrdiff_t>(jd), x->end());
  };
  Q.table.F = T.F;
  Q.table.n = q;
  Q.table.mult.resize(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      Q.table.mult[i * q + j] = project(T.mul(Q.rep_vecs[i], Q.rep_vecs[j]));
  Q.table.unit = project(T.unit);
  return Q;
}

}  // namespace

Vec EndQuotient::mul_vec(const Vec& x, const Vec& y) const {
  Vec r(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      std::uint32_t c = field.mul(x[i], y[j]);
      const Vec& t = table[i * dim + j];
      for (std::size_t k = 0; k < dim; ++k)
        r[k] = field.add(r[k], field.mul(c, t[k]));
    }
  }
  return r;
}

Vec EndQuotient::pow_vec(Vec x, std::uint64_t e) const {
  Vec r = unit;
  while (e > 0) {
    if (e & 1) r = mul_vec(r, x);
    x = mul_vec(x, x);
    e >>= 1;
  }
  return r;
}

EndQuotient end_quotient(const EndAlgebra& E) {
  std::size_t n = E.dim();
  const PrimeField& F = E.hom().source().algebra().field();
  if (n == 0) {
    EndQuotient R;
    R.field = F;
    return R;
  }
  AlgTable T;
  T.F = F;
  T.n = n;
  T.mult.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) T.mult[i * n + j] = E.table(i, j);
  T.unit = E.unit_vec();

  std::vector<Vec> J = radical_chain(T);

  // certificate 1: two-sided ideal
  Subspace span(F, n);
  for (const Vec& j : J) span.add(j);
  for (std::size_t k = 0; k < n; ++k) {
    Vec e(n, 0);
    e[k] = 1;
    for (const Vec& j : J)
      if (!span.contains(T.mul(e, j)) || !span.contains(T.mul(j, e)))
        throw InternalCheckError("radical: candidate is not a two-sided ideal");
  }
  // certificate 2: nilpotent (strictly shrinking power chain)
  {
    std::vector<Vec> cur = span.basis();
    std::size_t prev = cur.size();
    while (prev > 0) {
      Subspace next(F, n);
      for (const Vec& a : cur)
        for (const Vec& b : J) next.add(T.mul(a, b));
      if (next.dim() >= prev)
        throw InternalCheckError("radical: candidate is not nilpotent");
      cur = next.basis();
      prev = next.dim();
    }
  }
  // certificate 3: the chain re-run on the quotient finds nothing
  QuotientTable Q = quotient_table(T, J);
  if (!radical_chain(Q.table).empty())
    throw InternalCheckError("radical: quotient is not semisimple");

  // split test: Frobenius must fix the center of the quotient pointwise
  {
    std::size_t q = Q.table.n;
    Matrix C(F, q * q, q);
    for (std::size_t k = 0; k < q; ++k) {
      Vec ek(q, 0);
      ek[k] = 1;
      for (std::size_t j = 0; j < q; ++j) {
        Vec ej(q, 0);
        ej[j] = 1;
        Vec diff = Q.table.mul(ej, ek);
        Vec ke = Q.table.mul(ek, ej);
        for (std::size_t t = 0; t < q; ++t)
          C.set(k * q + t, j, F.sub(diff[t], ke[t]));
      }
    }
    for (const Vec& z : kernel_basis(C)) {
      if (Q.table.pow(z, F.p()) != z)
        throw NonSplitEndomorphismRingError(
            "semisimple quotient of End has a residue field larger than the "
            "prime field");
    }
  }
  EndQuotient R;
  R.rad_basis = span.basis();
  R.rep_vecs = Q.rep_vecs;
  R.table = std::move(Q.table.mult);
  R.unit = std::move(Q.table.unit);
  R.dim = Q.table.n;
  R.field = F;
  return R;
}

std::vector<Vec> radical_of_end(const EndAlgebra& E) {
  return end_quotient(E).rad_basis;
}

Matrix residue_matrix(const Algebra& A, const ElemMatrix& m,
                      const std::vector<std::size_t>& src_labels,
                      const std::vector<std::size_t>& dst_labels) {
  if (m.rows() != dst_labels.size() || m.cols() != src_labels.size())
    throw InputError("residue_matrix: label count mismatch");
  Matrix R(A.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (dst_labels[r] != src_labels[c]) continue;
      const Elem& e = m.at(r, c);
      if (!e.empty()) R.set(r, c, e[dst_labels[r]]);
    }
  return R;
}

}  // namespace arknit
