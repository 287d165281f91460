#include "arknit/resolve.hpp"

#include <algorithm>
#include <string>

#include "arknit/errors.hpp"

namespace arknit {

namespace {

// Column of the generator e_v of summand `s` inside the vertex-v component
// of a projective-sum module.
std::size_t generator_column(const Algebra& A,
                             const std::vector<std::size_t>& labels,
                             std::size_t s) {
  std::size_t v = labels[s];
  const auto& words = A.hom_slice(v, v);
  for (std::size_t i = 0; i < words.size(); ++i)
    if (words[i] == A.unit_path(v))
      return proj_sum_offset(A, labels, s, v) + i;
  throw InternalCheckError("generator_column: e_v missing from its slice");
}

// Repack a vector in the vertex-v component of proj_sum_module(labels) as a
// column of algebra elements, one per summand.
std::vector<Elem> unpack_column(const Algebra& A,
                                const std::vector<std::size_t>& labels,
                                std::size_t v, const Vec& col) {
  std::vector<Elem> out;
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const auto& words = A.hom_slice(v, labels[s]);
    std::size_t off = proj_sum_offset(A, labels, s, v);
    Elem z = A.zero_elem();
    for (std::size_t r = 0; r < words.size(); ++r) z[words[r]] = col[off + r];
    out.push_back(std::move(z));
  }
  return out;
}

Vec pack_column(const Algebra& A, const std::vector<std::size_t>& labels,
                std::size_t v, const std::vector<Elem>& elems,
                std::size_t total) {
  Vec col(total, 0);
  for (std::size_t s = 0; s < labels.size(); ++s) {
    const auto& words = A.hom_slice(v, labels[s]);
    std::size_t off = proj_sum_offset(A, labels, s, v);
    for (std::size_t r = 0; r < words.size(); ++r)
      col[off + r] = elems[s][words[r]];
  }
  return col;
}

ModuleMap lookup_or_zero(const std::map<int, ModuleMap>& q, int d,
                         const AModule& from, const AModule& to) {
  auto it = q.find(d);
  if (it != q.end()) {
    if (it->second.from.dims != from.dims || it->second.to.dims != to.dims)
      throw InternalCheckError("comparison map: endpoint dimensions");
    return it->second;
  }
  return zero_module_map(from, to);
}

// Full quasi-isomorphism certificate: q commutes with the differentials,
// homology dimensions agree per degree and vertex, and the induced map on
// homology is surjective (with equal dimensions, bijective).
void verify_comparison(const ProjComplex& R, const std::map<int, ModuleMap>& q,
                       const ModuleComplex& C) {
  const Algebra& A = *C.A;
  ModuleComplex Rm = module_complex_of(R);
  bool r_empty = Rm.terms.empty(), c_empty = C.terms.empty();
  if (r_empty && c_empty) return;
  int lo = !r_empty && !c_empty ? std::min(Rm.lo, C.lo)
           : r_empty            ? C.lo
                                : Rm.lo;
  int hi = !r_empty && !c_empty ? std::max(Rm.hi(), C.hi())
           : r_empty            ? C.hi()
                                : Rm.hi();
  --lo;
  ++hi;
  for (int d = lo; d <= hi; ++d) {
    ModuleMap qd = lookup_or_zero(q, d, Rm.term_at(d), C.term_at(d));
    ModuleMap qd1 = lookup_or_zero(q, d + 1, Rm.term_at(d + 1),
                                   C.term_at(d + 1));
    ModuleMap lhs = compose_module_maps(qd1, Rm.diff_at(d));
    ModuleMap rhs = compose_module_maps(C.diff_at(d), qd);
    for (std::size_t v = 0; v < A.vertex_count(); ++v)
      if (!(lhs.comps[v] == rhs.comps[v]))
        throw InternalCheckError(
            "resolution comparison does not commute with differentials");
    Vec hR = homology_dims(Rm, d), hC = homology_dims(C, d);
    if (hR != hC)
      throw InternalCheckError(
          "resolution changes homology at degree " + std::to_string(d));
    for (std::size_t v = 0; v < A.vertex_count(); ++v) {
      Subspace span(A.field(), C.term_at(d).dims[v]);
      Matrix din = C.diff_at(d - 1).comps[v];
      for (std::size_t c = 0; c < din.cols(); ++c) span.add(din.col(c));
      for (const Vec& k : kernel_basis(Rm.diff_at(d).comps[v]))
        span.add(qd.comps[v].apply(k));
      for (const Vec& k : kernel_basis(C.diff_at(d).comps[v]))
        if (!span.contains(k))
          throw InternalCheckError(
              "resolution comparison is not surjective on homology");
    }
  }
}

}  // namespace

ResolutionResult min_proj_resolution(const AModule& M,
                                     std::size_t length_bound) {
  const Algebra& A = *M.A;
  validate_module(M);

  std::vector<std::vector<std::size_t>> levels;  // levels[k] at degree -k
  std::vector<ElemMatrix> level_diffs;           // level k -> level k-1

  CoverResult cover = projective_cover(M);
  levels.push_back(cover.labels);
  KernelResult ker = kernel_module(cover.onto);
  std::size_t k = 0;
  while (ker.K.total_dim() != 0) {
    ++k;
    if (k > length_bound)
      throw ResolutionBoundExceededError(
          "projective resolution still has a kernel after " +
          std::to_string(length_bound) +
          " steps (infinite projective dimension or bound too small)");
    CoverResult next = projective_cover(ker.K);
    ModuleMap d = compose_module_maps(ker.incl, next.onto);
    levels.push_back(next.labels);
    level_diffs.push_back(
        elem_matrix_of_module_map(next.labels, levels[k - 1], d));
    ker = kernel_module(next.onto);
  }

  std::size_t n = levels.size() - 1;
  std::vector<std::vector<std::size_t>> labels;
  std::vector<ElemMatrix> diffs;
  for (std::size_t j = 0; j <= n; ++j) {
    labels.push_back(levels[n - j]);
    if (j < n) diffs.push_back(level_diffs[n - j - 1]);
  }
  ResolutionResult out;
  out.complex = ProjComplex::build(A, -static_cast<int>(n), std::move(labels),
                                   std::move(diffs));
  out.augmentation = cover.onto;
  if (!is_minimal(out.complex))
    throw InternalCheckError("min_proj_resolution: non-radical differential");
  ModuleComplex Rm = module_complex_of(out.complex);
  if (M.total_dim() != 0 || !Rm.terms.empty()) {
    Vec h0 = homology_dims(Rm, 0);
    for (std::size_t v = 0; v < A.vertex_count(); ++v)
      if (h0[v] != M.dims[v])
        throw InternalCheckError("min_proj_resolution: wrong cokernel");
    for (int d = out.complex.lo(); d < 0; ++d) {
      Vec h = homology_dims(Rm, d);
      for (auto x : h)
        if (x != 0)
          throw InternalCheckError("min_proj_resolution: not exact");
    }
  }
  return out;
}

ResolveResult proj_resolve_complex(const ModuleComplex& C,
                                   std::size_t length_bound) {
  const Algebra& A = *C.A;
  int hi_eff = C.lo - 1;
  for (int d = C.lo; d <= C.hi(); ++d)
    if (C.term_at(d).total_dim() != 0) hi_eff = d;
  if (hi_eff < C.lo) {
    ResolveResult out;
    out.complex = ProjComplex::zero(A);
    verify_comparison(out.complex, out.comparison, C);
    return out;
  }
  const int hi = hi_eff;
  AModule M = C.term_at(hi);

  bool single = true;
  for (int d = C.lo; d < hi; ++d)
    if (C.term_at(d).total_dim() != 0) single = false;

  ResolveResult out;
  if (single) {
    ResolutionResult res = min_proj_resolution(M, length_bound);
    out.complex = shift(res.complex, -hi);
    out.comparison.emplace(hi, res.augmentation);
    verify_comparison(out.complex, out.comparison, C);
    return out;
  }

  // C ≅ cone(u) for u: (σ^{≤hi-1}C)[−1] → M@hi with sole component d^{hi-1}
  ModuleComplex Cb;
  Cb.A = &A;
  Cb.lo = C.lo;
  for (int d = C.lo; d < hi; ++d) {
    Cb.terms.push_back(C.term_at(d));
    if (d < hi - 1) Cb.diffs.push_back(C.diff_at(d));
  }
  ResolveResult below = proj_resolve_complex(Cb, length_bound);
  ResolutionResult top = min_proj_resolution(M, length_bound);
  ProjComplex pMs = shift(top.complex, -hi);
  const ModuleMap& q0 = top.augmentation;  // pMs^{hi}-module ->> M

  ProjComplex dom = shift(below.complex, -1);  // R'[−1]

  // Lift u ∘ q'[−1] through the resolution of M, degree by degree from the
  // top; the generator images determine the module maps, so it is enough to
  // solve on generators.
  std::map<int, ElemMatrix> lift;
  for (int i = std::min(dom.hi(), hi); i >= dom.lo(); --i) {
    const auto& dom_labels = dom.labels_at(i);
    const auto& cod_labels = pMs.labels_at(i);
    ElemMatrix fi(A, cod_labels.size(), dom_labels.size());
    if (!dom_labels.empty() && !cod_labels.empty()) {
      ModuleMap dcod;  // constraint map for the generator solve
      Matrix rhs_all;
      if (i == hi) {
        // q0 ∘ f = d_C^{hi-1} ∘ q'^{hi-1} on generators
        dcod = q0;
      } else {
        dcod = module_map_of_elem_matrix(cod_labels, pMs.labels_at(i + 1),
                                         pMs.diff(i));
      }
      ElemMatrix h;  // f^{i+1} ∘ d_dom^i when below the top
      if (i < hi) {
        auto it = lift.find(i + 1);
        ElemMatrix fnext = it != lift.end()
                               ? it->second
                               : ElemMatrix(A, pMs.width(i + 1),
                                            dom.width(i + 1));
        h = compose(fnext, dom.diff(i));
      }
      for (std::size_t g = 0; g < dom_labels.size(); ++g) {
        std::size_t v = dom_labels[g];
        Vec rhs;
        if (i == hi) {
          // generator of dom^{hi} is the generator of R'^{hi-1}
          ModuleMap qprev = lookup_or_zero(
              below.comparison, hi - 1,
              proj_sum_module(A, below.complex.labels_at(hi - 1)),
              C.term_at(hi - 1));
          std::size_t col =
              generator_column(A, below.complex.labels_at(hi - 1), g);
          Vec mid = qprev.comps[v].col(col);
          rhs = C.diff_at(hi - 1).comps[v].apply(mid);
        } else {
          std::vector<Elem> hcol;
          for (std::size_t s = 0; s < pMs.width(i + 1); ++s)
            hcol.push_back(h.at(s, g));
          rhs = pack_column(A, pMs.labels_at(i + 1), v, hcol,
                            dcod.to.dims[v]);
        }
        auto sol = solve(dcod.comps[v], rhs);
        if (!sol)
          throw InternalCheckError(
              "resolution lift: generator equation is unsolvable");
        std::vector<Elem> zs = unpack_column(A, cod_labels, v, *sol);
        for (std::size_t s = 0; s < cod_labels.size(); ++s)
          fi.set(s, g, zs[s]);
      }
    }
    lift.emplace(i, std::move(fi));
  }

  ChainMap ftilde = make_map(dom, pMs, lift);
  if (!is_chain_map(ftilde))
    throw InternalCheckError("resolution lift: not a chain map");
  ProjComplex R = make_cone(ftilde).cone;

  // comparison: block [q' | q0] per degree (q0 only at the top degree)
  ModuleComplex belowm = module_complex_of(below.complex);
  std::map<int, ModuleMap> q;
  int qlo = std::min(R.lo(), C.lo);
  int qhi = std::max(R.hi(), C.hi());
  for (int d = qlo; d <= qhi; ++d) {
    AModule from = proj_sum_module(A, R.labels_at(d));
    AModule to = C.term_at(d);
    ModuleMap qprime =
        lookup_or_zero(below.comparison, d, belowm.term_at(d), Cb.term_at(d));
    ModuleMap qd;
    qd.from = from;
    qd.to = to;
    for (std::size_t v = 0; v < A.vertex_count(); ++v) {
      Matrix m(A.field(), to.dims[v], from.dims[v]);
      m.paste(qprime.comps[v], 0, 0);
      if (d == hi) m.paste(q0.comps[v], 0, belowm.term_at(d).dims[v]);
      qd.comps.push_back(std::move(m));
    }
    q.emplace(d, std::move(qd));
  }
  verify_comparison(R, q, C);

  // minimal model, with the comparison transported through the strip
  StripResult st = strip_contractibles(R);
  std::map<int, ModuleMap> qmin;
  for (int d = qlo; d <= qhi; ++d) {
    ModuleMap inc = module_map_of_elem_matrix(
        st.min.labels_at(d), R.labels_at(d), st.into_original.component(d));
    qmin.emplace(d, compose_module_maps(
                        lookup_or_zero(q, d, inc.to, C.term_at(d)), inc));
  }
  verify_comparison(st.min, qmin, C);
  out.complex = st.min;
  out.comparison = std::move(qmin);
  return out;
}

ProjComplex tau_candidate(const ProjComplex& X, std::size_t length_bound) {
  if (!X.valid()) throw InternalCheckError("tau: invalid complex");
  ProjComplex Xm = strip_contractibles(X).min;
  if (Xm.is_zero_complex()) return Xm;
  ModuleComplex N = nu_complex(Xm);
  ModuleComplex S = shift_module_complex(N, -1);
  ResolveResult res = proj_resolve_complex(S, length_bound);
  return strip_contractibles(res.complex).min;
}

std::size_t l_i(const ProjComplex& X, std::size_t length_bound) {
  const Algebra& A = X.algebra();
  if (X.is_zero_complex()) return 0;
  Algebra op = Algebra::build(A.opposite_presentation(), A.path_bound());
  ModuleComplex D = dual_complex(module_complex_of(X), op);
  ResolveResult res = proj_resolve_complex(D, length_bound);
  return strip_contractibles(res.complex).min.total_width();
}

}  // namespace arknit
