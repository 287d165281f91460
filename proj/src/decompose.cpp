#include "arknit/decompose.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>

#include "arknit/errors.hpp"
#include "arknit/poly.hpp"

namespace arknit {

namespace {

bool map_is_zero(const ChainMap& f) {
  int lo = std::max(f.from.lo(), f.to.lo());
  int hi = std::min(f.from.hi(), f.to.hi());
  for (int d = lo; d <= hi; ++d)
    if (!f.component(d).is_zero()) return false;
  return true;
}

bool maps_equal(const ChainMap& f, const ChainMap& g) {
  return map_is_zero(add_maps(f, negate_map(g)));
}

// width x |sel| injection of selected summands (unit entries)
ElemMatrix selection_cols(const Algebra& A,
                          const std::vector<std::size_t>& labels,
                          const std::vector<std::size_t>& sel) {
  ElemMatrix m(A, labels.size(), sel.size());
  for (std::size_t a = 0; a < sel.size(); ++a)
    m.set(sel[a], a, A.basis_elem(labels[sel[a]]));
  return m;
}

// |sel| x width projection onto selected summands
ElemMatrix selection_rows(const Algebra& A,
                          const std::vector<std::size_t>& labels,
                          const std::vector<std::size_t>& sel) {
  ElemMatrix m(A, sel.size(), labels.size());
  for (std::size_t a = 0; a < sel.size(); ++a)
    m.set(a, sel[a], A.basis_elem(labels[sel[a]]));
  return m;
}

struct PartWitness {
  ProjComplex part;
  ChainMap into;  // part -> X
  ChainMap onto;  // X -> part
};

// Coordinate split along a per-degree slot selection.  The differential must
// not cross the selection boundary; the plain selection matrices are then
// chain maps (checked).
PartWitness select_part(const ProjComplex& X,
                        const std::vector<std::vector<std::size_t>>& sel) {
  const Algebra& A = X.algebra();
  int lo = X.lo(), hi = X.hi();
  std::size_t span = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<std::size_t>> labels(span);
  for (int d = lo; d <= hi; ++d) {
    const auto& L = X.labels_at(d);
    for (std::size_t i : sel[static_cast<std::size_t>(d - lo)])
      labels[static_cast<std::size_t>(d - lo)].push_back(L[i]);
  }
  std::vector<ElemMatrix> diffs;
  for (int d = lo; d < hi; ++d) {
    const auto& sc = sel[static_cast<std::size_t>(d - lo)];
    const auto& sr = sel[static_cast<std::size_t>(d + 1 - lo)];
    ElemMatrix full = X.diff(d);
    ElemMatrix m(A, sr.size(), sc.size());
    for (std::size_t r = 0; r < sr.size(); ++r)
      for (std::size_t c = 0; c < sc.size(); ++c)
        m.set(r, c, full.at(sr[r], sc[c]));
    diffs.push_back(std::move(m));
  }
  PartWitness w;
  w.part = ProjComplex::build(A, lo, std::move(labels), std::move(diffs));
  std::map<int, ElemMatrix> icomps, ocomps;
  for (int d = lo; d <= hi; ++d) {
    const auto& s = sel[static_cast<std::size_t>(d - lo)];
    if (s.empty()) continue;
    icomps.emplace(d, selection_cols(A, X.labels_at(d), s));
    ocomps.emplace(d, selection_rows(A, X.labels_at(d), s));
  }
  w.into = make_map(w.part, X, icomps);
  w.onto = make_map(X, w.part, ocomps);
  if (!is_chain_map(w.into) || !is_chain_map(w.onto))
    throw InternalCheckError("select_part: selection is not a chain map");
  return w;
}

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Connected components of the summand graph (edges where the differential
// has a nonzero entry), as per-degree slot selections ordered by their
// smallest slot.
std::vector<std::vector<std::vector<std::size_t>>> slot_components(
    const ProjComplex& X) {
  const Algebra& A = X.algebra();
  int lo = X.lo(), hi = X.hi();
  std::size_t span = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::size_t> offset(span, 0);
  std::size_t total = 0;
  for (int d = lo; d <= hi; ++d) {
    offset[static_cast<std::size_t>(d - lo)] = total;
    total += X.width(d);
  }
  Dsu dsu(total);
  for (int d = lo; d < hi; ++d) {
    ElemMatrix m = X.diff(d);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!A.is_zero(m.at(r, c)))
          dsu.unite(offset[static_cast<std::size_t>(d - lo)] + c,
                    offset[static_cast<std::size_t>(d + 1 - lo)] + r);
  }
  std::map<std::size_t, std::size_t> root_order;  // root -> component index
  std::vector<std::vector<std::vector<std::size_t>>> comps;
  for (int d = lo; d <= hi; ++d)
    for (std::size_t i = 0; i < X.width(d); ++i) {
      std::size_t root = dsu.find(offset[static_cast<std::size_t>(d - lo)] + i);
      auto it = root_order.find(root);
      if (it == root_order.end()) {
        it = root_order.emplace(root, comps.size()).first;
        comps.emplace_back(span);
      }
      comps[it->second][static_cast<std::size_t>(d - lo)].push_back(i);
    }
  return comps;
}

// Inverse of a square component whose residue is invertible: blockwise
// residue inverse, then a geometric series on the unit-plus-radical factor.
ElemMatrix invert_component(const Algebra& A, const ElemMatrix& m,
                            const std::vector<std::size_t>& labels) {
  const PrimeField& F = A.field();
  std::size_t w = labels.size();
  Matrix R = residue_matrix(A, m, labels, labels);
  ElemMatrix n0(A, w, w);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < w; ++i) groups[labels[i]].push_back(i);
  for (const auto& [v, I] : groups) {
    Matrix blk(F, I.size(), I.size());
    for (std::size_t a = 0; a < I.size(); ++a)
      for (std::size_t b = 0; b < I.size(); ++b)
        blk.set(a, b, R.at(I[a], I[b]));
    if (!is_invertible(blk))
      throw InternalCheckError("invert_component: residue is not invertible");
    Matrix inv = inverse(blk);
    for (std::size_t a = 0; a < I.size(); ++a)
      for (std::size_t b = 0; b < I.size(); ++b)
        if (inv.at(a, b) != 0)
          n0.set(I[a], I[b], A.scale(inv.at(a, b), A.basis_elem(v)));
  }
  ElemMatrix idm = elem_identity(A, labels);
  ElemMatrix nil = compose(m, n0).sub(idm);  // radical entries only
  ElemMatrix acc = idm, pw = idm;
  bool done = false;
  for (std::size_t k = 1; k <= A.path_bound() + 2; ++k) {
    pw = compose(pw, nil);
    if (pw.is_zero()) {
      done = true;
      break;
    }
    acc = (k % 2 == 1) ? acc.sub(pw) : acc.add(pw);
  }
  if (!done)
    throw InternalCheckError("invert_component: nilpotent series did not end");
  ElemMatrix res = compose(n0, acc);
  if (!(compose(res, m) == idm) || !(compose(m, res) == idm))
    throw InternalCheckError("invert_component: certification failed");
  return res;
}

Vec quotient_min_poly(const EndQuotient& Q, const Vec& y) {
  const PrimeField& F = Q.field;
  Subspace sp(F, Q.dim);
  std::vector<Vec> pows;
  Vec cur = Q.unit;
  while (sp.add(cur)) {
    pows.push_back(cur);
    cur = Q.mul_vec(cur, y);
  }
  Matrix S(F, Q.dim, pows.size());
  for (std::size_t j = 0; j < pows.size(); ++j)
    for (std::size_t i = 0; i < Q.dim; ++i) S.set(i, j, pows[j][i]);
  auto x = solve(S, cur);
  if (!x) throw InternalCheckError("min_poly: dependency solve failed");
  Vec m(pows.size() + 1, 0);
  for (std::size_t i = 0; i < pows.size(); ++i) m[i] = F.neg((*x)[i]);
  m[pows.size()] = 1;
  return m;
}

Vec poly_pow_small(const PrimeField& F, const Vec& base, std::size_t e) {
  Vec r{1};
  for (std::size_t i = 0; i < e; ++i) r = poly_mul(F, r, base);
  return r;
}

// Monic coprime factorization m = f1 * f2 with both factors nonconstant,
// when one exists: first by splitting off a root with full multiplicity,
// then by a distinct-degree cut.  Prime powers of a single irreducible have
// no such split and yield nullopt.
std::optional<std::pair<Vec, Vec>> coprime_split(const PrimeField& F,
                                                 const Vec& m) {
  Vec roots = poly_roots(F, m);
  for (std::uint32_t c : roots) {
    Vec lin{F.neg(c), 1};
    Vec f1{1};
    Vec rest = m;
    while (true) {
      auto qr = poly_divmod(F, rest, lin);
      if (!poly_is_zero(qr.second)) break;
      f1 = poly_mul(F, f1, lin);
      rest = qr.first;
    }
    if (poly_deg(rest) >= 1) return std::make_pair(f1, rest);
  }
  int n = poly_deg(m);
  for (int d = 1; d < n; ++d) {
    std::uint64_t e = 1;
    bool overflow = false;
    for (int i = 0; i < d; ++i) {
      if (e > UINT64_MAX / F.p()) {
        overflow = true;
        break;
      }
      e *= F.p();
    }
    if (overflow) break;
    Vec t{0, 1};
    Vec h = poly_sub(F, poly_powmod(F, t, e, m), t);
    Vec g = poly_gcd(F, h, m);
    if (poly_deg(g) <= 0 || poly_deg(g) >= n) continue;
    Vec f1 =
        poly_gcd(F, poly_pow_small(F, g, static_cast<std::size_t>(n)), m);
    if (poly_deg(f1) < n)
      return std::make_pair(f1, poly_divmod(F, m, f1).first);
  }
  return std::nullopt;
}

Vec eval_in_quotient(const EndQuotient& Q, const Vec& poly, const Vec& y) {
  const PrimeField& F = Q.field;
  Vec r(Q.dim, 0);
  for (int i = poly_deg(poly); i >= 0; --i) {
    r = Q.mul_vec(r, y);
    for (std::size_t k = 0; k < Q.dim; ++k)
      r[k] = F.add(r[k], F.mul(poly[static_cast<std::size_t>(i)], Q.unit[k]));
  }
  return r;
}

bool is_idempotent_vec(const EndQuotient& Q, const Vec& e) {
  return Q.mul_vec(e, e) == e;
}

// Nontrivial idempotent of a semisimple split quotient of dimension >= 2.
// A center of dimension >= 2 always contains a basis element whose minimal
// polynomial has two roots, giving a Lagrange projector.  A matrix algebra
// (one-dimensional center) is probed deterministically: basis singles, then
// pairs with small coefficients; each probe tries a spectral projection by
// a large power, then CRT on a factored minimal polynomial.
Vec find_quotient_idempotent(const EndQuotient& Q, std::size_t& budget) {
  const PrimeField& F = Q.field;
  std::size_t q = Q.dim;
  const Vec zero(q, 0);

  Matrix C(F, q * q, q);
  for (std::size_t k = 0; k < q; ++k) {
    Vec ek(q, 0);
    ek[k] = 1;
    for (std::size_t j = 0; j < q; ++j) {
      Vec ej(q, 0);
      ej[j] = 1;
      Vec a = Q.mul_vec(ej, ek);
      Vec b = Q.mul_vec(ek, ej);
      for (std::size_t t = 0; t < q; ++t) C.set(k * q + t, j, F.sub(a[t], b[t]));
    }
  }
  std::vector<Vec> center = kernel_basis(C);

  if (center.size() >= 2) {
    for (const Vec& z : center) {
      Vec m = quotient_min_poly(Q, z);
      Vec roots = poly_roots(F, m);
      if (roots.size() < 2) continue;
      if (static_cast<int>(roots.size()) != poly_deg(m))
        throw InternalCheckError(
            "find_idempotent: central minimal polynomial is not split "
            "squarefree");
      Vec e = Q.unit;
      std::uint32_t denom = 1;
      for (std::size_t j = 1; j < roots.size(); ++j) {
        Vec t(q, 0);
        for (std::size_t k = 0; k < q; ++k)
          t[k] = F.sub(z[k], F.mul(roots[j], Q.unit[k]));
        e = Q.mul_vec(e, t);
        denom = F.mul(denom, F.sub(roots[0], roots[j]));
      }
      std::uint32_t s = F.inv(denom);
      for (std::size_t k = 0; k < q; ++k) e[k] = F.mul(s, e[k]);
      if (!is_idempotent_vec(Q, e) || e == zero || e == Q.unit)
        throw InternalCheckError("find_idempotent: Lagrange projector failed");
      return e;
    }
    throw InternalCheckError(
        "find_idempotent: no splitting element in a center of dimension >= 2");
  }

  auto try_candidate = [&](const Vec& y) -> std::optional<Vec> {
    if (budget == 0)
      throw DecompositionBudgetExceededError(
          "decompose: idempotent probe budget exhausted");
    --budget;
    // spectral projection: kill the nilpotent part with a p-power, then
    // flatten the invertible part with exponents p^k - 1
    {
      std::uint64_t pa = 1;
      bool overflow = false;
      while (pa < q) {
        if (pa > UINT64_MAX / F.p()) {
          overflow = true;
          break;
        }
        pa *= F.p();
      }
      if (!overflow) {
        Vec e = Q.pow_vec(y, pa);
        for (std::size_t k = 1; k <= q && !overflow; ++k) {
          std::uint64_t pk = 1;
          for (std::size_t i = 0; i < k; ++i) {
            if (pk > UINT64_MAX / F.p()) {
              overflow = true;
              break;
            }
            pk *= F.p();
          }
          if (!overflow) e = Q.pow_vec(e, pk - 1);
        }
        if (!overflow && is_idempotent_vec(Q, e) && e != zero && e != Q.unit)
          return e;
      }
    }
    Vec m = quotient_min_poly(Q, y);
    auto split = coprime_split(F, m);
    if (!split) return std::nullopt;
    PolyBezout bz = poly_extended_gcd(F, split->first, split->second);
    if (poly_deg(bz.g) != 0)
      throw InternalCheckError("find_idempotent: factors are not coprime");
    Vec epoly = poly_rem(F, poly_mul(F, bz.u, split->first), m);
    Vec e = eval_in_quotient(Q, epoly, y);
    if (!is_idempotent_vec(Q, e) || e == zero || e == Q.unit)
      throw InternalCheckError("find_idempotent: CRT projector failed");
    return e;
  };

  for (std::size_t i = 0; i < q; ++i) {
    Vec y(q, 0);
    y[i] = 1;
    if (auto e = try_candidate(y)) return *e;
  }
  for (std::uint32_t c = 1; c < F.p(); ++c)
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = i + 1; j < q; ++j) {
        Vec y(q, 0);
        y[i] = 1;
        y[j] = c;
        if (auto e = try_candidate(y)) return *e;
      }
  throw DecompositionBudgetExceededError(
      "decompose: idempotent probe space exhausted");
}

// Newton step e <- 3e^2 - 2e^3 squares the defect ideal, so an idempotent
// mod the radical stabilizes to an exact one; valid in every characteristic.
Vec lift_idempotent_table(const EndAlgebra& E, const EndQuotient& Q,
                          const Vec& ebar) {
  const PrimeField& F = Q.field;
  std::size_t n = E.dim();
  Vec e(n, 0);
  for (std::size_t i = 0; i < Q.dim; ++i) {
    if (ebar[i] == 0) continue;
    for (std::size_t t = 0; t < n; ++t)
      e[t] = F.add(e[t], F.mul(ebar[i], Q.rep_vecs[i][t]));
  }
  std::uint32_t three = F.reduce(3), two = F.reduce(2);
  for (int it = 0; it < 40; ++it) {
    Vec e2 = E.mul_vec(e, e);
    if (e2 == e) {
      if (e == Vec(n, 0) || e == E.unit_vec())
        throw InternalCheckError("idempotent lift: collapse to trivial");
      return e;
    }
    Vec e3 = E.mul_vec(e2, e);
    for (std::size_t k = 0; k < n; ++k)
      e[k] = F.sub(F.mul(three, e2[k]), F.mul(two, e3[k]));
  }
  throw InternalCheckError("idempotent lift: no convergence in End");
}

// Same step on an honest chain representative: the defect is null-homotopic
// with radical entries (the complex is minimal), hence nilpotent under
// composition, and the iteration reaches an exactly idempotent chain map.
ChainMap lift_idempotent_chain(const EndAlgebra& E, const Vec& e) {
  const PrimeField& F = E.hom().source().algebra().field();
  ChainMap f = E.hom().map_from_class(e);
  std::uint32_t three = F.reduce(3), two = F.reduce(2);
  for (int it = 0; it < 48; ++it) {
    ChainMap f2 = compose_maps(f, f);
    if (maps_equal(f2, f)) return f;
    ChainMap f3 = compose_maps(f2, f);
    f = add_maps(scale_map(three, f2), scale_map(F.neg(two), f3));
  }
  throw InternalCheckError("idempotent lift: no convergence at chain level");
}

struct TwoSplit {
  PartWitness one, rest;
};

// Split X along an exact chain idempotent g.  Degreewise, conjugate so that
// the residue of the idempotent is a 0/1 projector pi, then correct by
// u = pi g' + (1-pi)(1-g'), a unit congruent to the identity mod radical;
// after conjugating by u the idempotent IS pi, so the differential cannot
// cross the selected slots.  Everything is certified on the way.
TwoSplit split_by_idempotent(const ProjComplex& X, const ChainMap& g) {
  const Algebra& A = X.algebra();
  const PrimeField& F = A.field();
  int lo = X.lo(), hi = X.hi();
  std::size_t span = static_cast<std::size_t>(hi - lo + 1);
  std::vector<ElemMatrix> T(span), Tinv(span);
  std::vector<std::vector<char>> flags(span);
  std::vector<std::vector<std::size_t>> sel1(span), sel0(span);

  for (int d = lo; d <= hi; ++d) {
    const auto& L = X.labels_at(d);
    std::size_t w = L.size();
    std::size_t di = static_cast<std::size_t>(d - lo);
    Matrix R = residue_matrix(A, g.component(d), L, L);
    ElemMatrix S(A, w, w), Sinv(A, w, w);
    flags[di].assign(w, 0);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < w; ++i) groups[L[i]].push_back(i);
    for (const auto& [v, I] : groups) {
      Matrix blk(F, I.size(), I.size());
      for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = 0; b < I.size(); ++b)
          blk.set(a, b, R.at(I[a], I[b]));
      if (!blk.mul(blk).sub(blk).is_zero())
        throw InternalCheckError("split: residue is not idempotent");
      RrefResult rr = rref(blk);
      std::vector<Vec> cols;
      for (std::size_t pc : rr.pivot_cols) cols.push_back(blk.col(pc));
      std::vector<Vec> kern = kernel_basis(blk);
      if (cols.size() + kern.size() != I.size())
        throw InternalCheckError("split: rank/kernel mismatch");
      Matrix U(F, I.size(), I.size());
      for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t r = 0; r < I.size(); ++r) U.set(r, a, cols[a][r]);
      for (std::size_t b = 0; b < kern.size(); ++b)
        for (std::size_t r = 0; r < I.size(); ++r)
          U.set(r, cols.size() + b, kern[b][r]);
      if (!is_invertible(U))
        throw InternalCheckError("split: image/kernel bases do not span");
      Matrix Uinv = inverse(U);
      for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = 0; b < I.size(); ++b) {
          if (Uinv.at(a, b) != 0)
            S.set(I[a], I[b], A.scale(Uinv.at(a, b), A.basis_elem(v)));
          if (U.at(a, b) != 0)
            Sinv.set(I[a], I[b], A.scale(U.at(a, b), A.basis_elem(v)));
        }
      for (std::size_t a = 0; a < cols.size(); ++a) flags[di][I[a]] = 1;
    }
    ElemMatrix idm = elem_identity(A, L);
    if (!(compose(S, Sinv) == idm))
      throw InternalCheckError("split: basis change inverse mismatch");

    ElemMatrix e1 = compose(S, compose(g.component(d), Sinv));
    ElemMatrix pi(A, w, w);
    for (std::size_t i = 0; i < w; ++i)
      if (flags[di][i]) pi.set(i, i, A.basis_elem(L[i]));
    if (!residue_matrix(A, e1, L, L).sub(residue_matrix(A, pi, L, L)).is_zero())
      throw InternalCheckError("split: conjugated residue is not the projector");
    ElemMatrix u =
        compose(pi, e1).add(compose(idm.sub(pi), idm.sub(e1)));
    ElemMatrix uinv = invert_component(A, u, L);
    if (!(compose(u, e1) == compose(pi, u)))
      throw InternalCheckError("split: projector exchange identity failed");
    T[di] = compose(u, S);
    Tinv[di] = compose(Sinv, uinv);
    for (std::size_t i = 0; i < w; ++i)
      (flags[di][i] ? sel1 : sel0)[di].push_back(i);
  }

  std::vector<ElemMatrix> dfin(span > 0 ? span - 1 : 0);
  for (int d = lo; d < hi; ++d) {
    std::size_t di = static_cast<std::size_t>(d - lo);
    ElemMatrix m = compose(T[di + 1], compose(X.diff(d), Tinv[di]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (flags[di + 1][r] != flags[di][c] && !A.is_zero(m.at(r, c)))
          throw InternalCheckError("split: differential crosses the projector");
    dfin[di] = std::move(m);
  }

  auto build_side =
      [&](const std::vector<std::vector<std::size_t>>& sel) -> PartWitness {
    std::vector<std::vector<std::size_t>> labels(span);
    for (int d = lo; d <= hi; ++d) {
      const auto& L = X.labels_at(d);
      for (std::size_t i : sel[static_cast<std::size_t>(d - lo)])
        labels[static_cast<std::size_t>(d - lo)].push_back(L[i]);
    }
    std::vector<ElemMatrix> diffs;
    for (int d = lo; d < hi; ++d) {
      std::size_t di = static_cast<std::size_t>(d - lo);
      const auto& sc = sel[di];
      const auto& sr = sel[di + 1];
      ElemMatrix m(A, sr.size(), sc.size());
      for (std::size_t r = 0; r < sr.size(); ++r)
        for (std::size_t c = 0; c < sc.size(); ++c)
          m.set(r, c, dfin[di].at(sr[r], sc[c]));
      diffs.push_back(std::move(m));
    }
    PartWitness w;
    w.part = ProjComplex::build(A, lo, std::move(labels), std::move(diffs));
    std::map<int, ElemMatrix> icomps, ocomps;
    for (int d = lo; d <= hi; ++d) {
      std::size_t di = static_cast<std::size_t>(d - lo);
      if (sel[di].empty()) continue;
      icomps.emplace(d, compose(Tinv[di],
                                selection_cols(A, X.labels_at(d), sel[di])));
      ocomps.emplace(
          d, compose(selection_rows(A, X.labels_at(d), sel[di]), T[di]));
    }
    w.into = make_map(w.part, X, icomps);
    w.onto = make_map(X, w.part, ocomps);
    if (!is_chain_map(w.into) || !is_chain_map(w.onto))
      throw InternalCheckError("split: witness is not a chain map");
    if (!maps_equal(compose_maps(w.onto, w.into), identity_map(w.part)))
      throw InternalCheckError("split: witness retraction failed");
    return w;
  };

  TwoSplit out{build_side(sel1), build_side(sel0)};
  if (out.one.part.is_zero_complex() || out.rest.part.is_zero_complex())
    throw InternalCheckError("split: trivial part from a nontrivial idempotent");
  ChainMap total = add_maps(compose_maps(out.one.into, out.one.onto),
                            compose_maps(out.rest.into, out.rest.onto));
  if (!maps_equal(total, identity_map(X)))
    throw InternalCheckError("split: parts do not reassemble the identity");
  return out;
}

struct EndRoute {
  bool indecomposable = false;
  std::optional<TwoSplit> split;
};

EndRoute end_route(const ProjComplex& X, std::size_t& budget) {
  EndAlgebra E = EndAlgebra::compute(X);
  EndQuotient Q = end_quotient(E);
  if (Q.dim == 0)
    throw InternalCheckError("end_route: trivial End on a nonzero minimal complex");
  EndRoute r;
  if (Q.dim == 1) {
    r.indecomposable = true;
    return r;
  }
  Vec ebar = find_quotient_idempotent(Q, budget);
  Vec e = lift_idempotent_table(E, Q, ebar);
  ChainMap g = lift_idempotent_chain(E, e);
  r.split = split_by_idempotent(X, g);
  return r;
}

}  // namespace

DecomposeResult decompose_with_witness(const ProjComplex& X,
                                       std::size_t budget) {
  if (!X.valid()) throw InputError("decompose: invalid complex");
  DecomposeResult res;
  if (X.is_zero_complex()) return res;
  if (!is_minimal(X))
    throw PreconditionUnmetError(
        "decompose expects a minimal complex; strip contractibles first");

  struct Item {
    ProjComplex c;
    ChainMap into, onto;
  };
  std::deque<Item> work;
  work.push_back({X, identity_map(X), identity_map(X)});
  while (!work.empty()) {
    Item it = std::move(work.front());
    work.pop_front();
    auto comps = slot_components(it.c);
    if (comps.size() > 1) {
      for (const auto& sel : comps) {
        PartWitness w = select_part(it.c, sel);
        work.push_back({w.part, compose_maps(it.into, w.into),
                        compose_maps(w.onto, it.onto)});
      }
      continue;
    }
    EndRoute r = end_route(it.c, budget);
    if (r.indecomposable) {
      res.parts.push_back(std::move(it.c));
      res.into.push_back(std::move(it.into));
      res.onto.push_back(std::move(it.onto));
      continue;
    }
    work.push_back({r.split->one.part,
                    compose_maps(it.into, r.split->one.into),
                    compose_maps(r.split->one.onto, it.onto)});
    work.push_back({r.split->rest.part,
                    compose_maps(it.into, r.split->rest.into),
                    compose_maps(r.split->rest.onto, it.onto)});
  }

  ChainMap total = zero_map(X, X);
  for (std::size_t i = 0; i < res.parts.size(); ++i) {
    if (!maps_equal(compose_maps(res.onto[i], res.into[i]),
                    identity_map(res.parts[i])))
      throw InternalCheckError("decompose: witness retraction failed");
    total = add_maps(total, compose_maps(res.into[i], res.onto[i]));
  }
  if (!maps_equal(total, identity_map(X)))
    throw InternalCheckError("decompose: witnesses do not reassemble the identity");
  return res;
}

std::vector<ProjComplex> decompose(const ProjComplex& X, std::size_t budget) {
  return decompose_with_witness(X, budget).parts;
}

bool is_indecomposable(const ProjComplex& X) {
  if (!X.valid()) throw InputError("is_indecomposable: invalid complex");
  if (X.is_zero_complex()) return false;
  if (!is_minimal(X))
    throw PreconditionUnmetError(
        "is_indecomposable expects a minimal complex; strip contractibles "
        "first");
  return end_quotient(EndAlgebra::compute(X)).dim == 1;
}

namespace {

bool residues_invertible(const ChainMap& f) {
  const ProjComplex& Xc = f.from;
  const ProjComplex& Yc = f.to;
  const Algebra& A = Xc.algebra();
  for (int d = Xc.lo(); d <= Xc.hi(); ++d)
    if (!is_invertible(
            residue_matrix(A, f.component(d), Xc.labels_at(d), Yc.labels_at(d))))
      return false;
  return true;
}

}  // namespace

bool iso_in_K(const ProjComplex& X, const ProjComplex& Y, std::size_t budget) {
  if (!X.valid() || !Y.valid()) throw InputError("iso_in_K: invalid complex");
  if (X.algebra_ptr() != Y.algebra_ptr())
    throw InputError("iso_in_K: complexes live over different algebras");
  ProjComplex A = strip_contractibles(X).min;
  ProjComplex B = strip_contractibles(Y).min;
  if (A.is_zero_complex() || B.is_zero_complex())
    return A.is_zero_complex() && B.is_zero_complex();
  if (A == B) return true;
  if (A.lo() != B.lo() || A.hi() != B.hi()) return false;
  for (int d = A.lo(); d <= A.hi(); ++d) {
    std::vector<std::size_t> la = A.labels_at(d), lb = B.labels_at(d);
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return false;
  }
  HomSpace H = HomSpace::compute(A, B);
  if (H.dim() == 0) return false;
  // a representative with invertible residues in every degree is an
  // isomorphism of complexes outright (degreewise inverse is a chain map)
  for (std::size_t i = 0; i < H.dim(); ++i)
    if (residues_invertible(H.rep(i))) return true;
  // between indecomposables the non-isomorphisms form a subspace, so a basis
  // scan without a hit settles the question
  if (is_indecomposable(A) && is_indecomposable(B)) return false;
  DecomposeResult da, db;
  try {
    da = decompose_with_witness(A, budget);
    db = decompose_with_witness(B, budget);
  } catch (const DecompositionBudgetExceededError& e) {
    throw IsoSearchBudgetExceededError(e.what());
  }
  if (da.parts.size() != db.parts.size()) return false;
  std::vector<char> used(db.parts.size(), 0);
  for (const ProjComplex& p : da.parts) {
    bool matched = false;
    for (std::size_t j = 0; j < db.parts.size(); ++j) {
      if (used[j]) continue;
      if (iso_in_K(p, db.parts[j], budget)) {
        used[j] = 1;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace arknit
