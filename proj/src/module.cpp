#include "arknit/module.hpp"

#include <algorithm>

#include "arknit/errors.hpp"

namespace arknit {

std::size_t AModule::total_dim() const {
  std::size_t n = 0;
  for (auto d : dims) n += d;
  return n;
}

void validate_module(const AModule& M) {
  const Algebra& A = *M.A;
  if (M.dims.size() != A.vertex_count() ||
      M.arrow_act.size() != A.arrow_count())
    throw InternalCheckError("module: component count mismatch");
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    if (M.arrow_act[a].rows() != M.dims[ar.dst] ||
        M.arrow_act[a].cols() != M.dims[ar.src])
      throw InternalCheckError("module: arrow action shape mismatch");
  }
  for (const auto& rel : A.presentation().relations) {
    std::uint32_t head = A.presentation().arrows[rel.front().word.front()].src;
    std::uint32_t tail = A.presentation().arrows[rel.front().word.back()].dst;
    Matrix sum(A.field(), M.dims[tail], M.dims[head]);
    for (const auto& term : rel) {
      Matrix act = word_action(M, term.word, head);
      sum = sum.add(act.scaled(A.field().reduce(term.coeff)));
    }
    if (!sum.is_zero())
      throw InternalCheckError("module: a relation acts nontrivially");
  }
}

AModule zero_module(const Algebra& A) {
  AModule M;
  M.A = &A;
  M.dims.assign(A.vertex_count(), 0);
  for (std::size_t a = 0; a < A.arrow_count(); ++a)
    M.arrow_act.emplace_back(A.field(), 0, 0);
  return M;
}

AModule simple_module(const Algebra& A, std::size_t v) {
  AModule M = zero_module(A);
  M.dims[v] = 1;
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    M.arrow_act[a] = Matrix(A.field(), M.dims[ar.dst], M.dims[ar.src]);
  }
  return M;
}

AModule projective_module(const Algebra& A, std::size_t v) {
  AModule M;
  M.A = &A;
  std::size_t nv = A.vertex_count();
  M.dims.resize(nv);
  for (std::size_t u = 0; u < nv; ++u) M.dims[u] = A.hom_slice(u, v).size();
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    const auto& src_words = A.hom_slice(ar.src, v);
    const auto& dst_words = A.hom_slice(ar.dst, v);
    Matrix act(A.field(), dst_words.size(), src_words.size());
    Elem acls = A.word_elem({static_cast<std::uint32_t>(a)});
    for (std::size_t c = 0; c < src_words.size(); ++c) {
      Elem img = A.mul(acls, A.basis_elem(src_words[c]));
      for (std::size_t r = 0; r < dst_words.size(); ++r)
        act.set(r, c, img[dst_words[r]]);
    }
    M.arrow_act.push_back(std::move(act));
  }
  validate_module(M);
  return M;
}

AModule injective_module(const Algebra& A, std::size_t v) {
  AModule M;
  M.A = &A;
  std::size_t nv = A.vertex_count();
  M.dims.resize(nv);
  // component at u is dual to hom_slice(v, u), the words from u to v
  for (std::size_t u = 0; u < nv; ++u) M.dims[u] = A.hom_slice(v, u).size();
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    const auto& src_words = A.hom_slice(v, ar.src);
    const auto& dst_words = A.hom_slice(v, ar.dst);
    Matrix act(A.field(), dst_words.size(), src_words.size());
    Elem acls = A.word_elem({static_cast<std::uint32_t>(a)});
    // (a · q*)(m) = q*(m · a): transpose of right concatenation
    for (std::size_t r = 0; r < dst_words.size(); ++r) {
      Elem img = A.mul(A.basis_elem(dst_words[r]), acls);
      for (std::size_t c = 0; c < src_words.size(); ++c)
        act.set(r, c, img[src_words[c]]);
    }
    M.arrow_act.push_back(std::move(act));
  }
  validate_module(M);
  return M;
}

Matrix word_action(const AModule& M, const std::vector<std::uint32_t>& word,
                   std::uint32_t at) {
  const Algebra& A = *M.A;
  if (word.empty()) return Matrix::identity(A.field(), M.dims[at]);
  if (A.presentation().arrows[word.front()].src != at)
    throw InternalCheckError("word_action: word does not start at 'at'");
  Matrix acc = Matrix::identity(A.field(), M.dims[at]);
  for (auto a : word) acc = M.arrow_act[a].mul(acc);
  return acc;
}

ModuleMap zero_module_map(const AModule& M, const AModule& N) {
  ModuleMap f;
  f.from = M;
  f.to = N;
  for (std::size_t v = 0; v < M.dims.size(); ++v)
    f.comps.emplace_back(M.A->field(), N.dims[v], M.dims[v]);
  return f;
}

ModuleMap identity_module_map(const AModule& M) {
  ModuleMap f = zero_module_map(M, M);
  for (std::size_t v = 0; v < M.dims.size(); ++v)
    f.comps[v] = Matrix::identity(M.A->field(), M.dims[v]);
  return f;
}

bool is_module_map(const ModuleMap& f) {
  const Algebra& A = *f.from.A;
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    Matrix lhs = f.comps[ar.dst].mul(f.from.arrow_act[a]);
    Matrix rhs = f.to.arrow_act[a].mul(f.comps[ar.src]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

ModuleMap compose_module_maps(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  h.from = f.from;
  h.to = g.to;
  for (std::size_t v = 0; v < f.from.dims.size(); ++v)
    h.comps.push_back(g.comps[v].mul(f.comps[v]));
  return h;
}

ModuleMap add_module_maps(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h = f;
  for (std::size_t v = 0; v < f.comps.size(); ++v)
    h.comps[v] = f.comps[v].add(g.comps[v]);
  return h;
}

bool is_surjective(const ModuleMap& f) {
  for (std::size_t v = 0; v < f.comps.size(); ++v)
    if (rank(f.comps[v]) != f.to.dims[v]) return false;
  return true;
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& m : f.comps)
    if (!m.is_zero()) return false;
  return true;
}

KernelResult kernel_module(const ModuleMap& f) {
  const Algebra& A = *f.from.A;
  KernelResult out;
  out.K.A = &A;
  std::vector<Matrix> incl;
  for (std::size_t v = 0; v < f.comps.size(); ++v) {
    std::vector<Vec> rows = kernel_basis(f.comps[v]);
    out.K.dims.push_back(rows.size());
    Matrix m(A.field(), f.from.dims[v], rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c)
      for (std::size_t r = 0; r < f.from.dims[v]; ++r)
        m.set(r, c, rows[c][r]);
    incl.push_back(std::move(m));
  }
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    // restrict the action: solve incl_dst ∘ x = act ∘ incl_src columnwise
    Matrix rhs = f.from.arrow_act[a].mul(incl[ar.src]);
    Matrix act(A.field(), out.K.dims[ar.dst], out.K.dims[ar.src]);
    for (std::size_t c = 0; c < out.K.dims[ar.src]; ++c) {
      auto sol = solve(incl[ar.dst], rhs.col(c));
      if (!sol)
        throw InternalCheckError("kernel_module: kernel is not a submodule");
      for (std::size_t r = 0; r < out.K.dims[ar.dst]; ++r)
        act.set(r, c, (*sol)[r]);
    }
    out.K.arrow_act.push_back(std::move(act));
  }
  validate_module(out.K);
  out.incl.from = out.K;
  out.incl.to = f.from;
  out.incl.comps = std::move(incl);
  if (!is_module_map(out.incl))
    throw InternalCheckError("kernel_module: inclusion fails linearity");
  return out;
}

AModule proj_sum_module(const Algebra& A,
                        const std::vector<std::size_t>& labels) {
  AModule M = zero_module(A);
  std::vector<AModule> parts;
  for (auto v : labels) parts.push_back(projective_module(A, v));
  std::size_t nv = A.vertex_count();
  for (std::size_t u = 0; u < nv; ++u) {
    M.dims[u] = 0;
    for (const auto& P : parts) M.dims[u] += P.dims[u];
  }
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    Matrix act(A.field(), M.dims[ar.dst], M.dims[ar.src]);
    std::size_t ro = 0, co = 0;
    for (const auto& P : parts) {
      act.paste(P.arrow_act[a], ro, co);
      ro += P.dims[ar.dst];
      co += P.dims[ar.src];
    }
    M.arrow_act[a] = std::move(act);
  }
  return M;
}

std::size_t proj_sum_offset(const Algebra& A,
                            const std::vector<std::size_t>& labels,
                            std::size_t summand, std::size_t u) {
  std::size_t off = 0;
  for (std::size_t t = 0; t < summand; ++t)
    off += A.hom_slice(u, labels[t]).size();
  return off;
}

namespace {

std::size_t inj_sum_offset(const Algebra& A,
                           const std::vector<std::size_t>& labels,
                           std::size_t summand, std::size_t u) {
  std::size_t off = 0;
  for (std::size_t t = 0; t < summand; ++t)
    off += A.hom_slice(labels[t], u).size();
  return off;
}

}  // namespace

ModuleMap module_map_of_elem_matrix(const std::vector<std::size_t>& src_labels,
                                    const std::vector<std::size_t>& dst_labels,
                                    const ElemMatrix& m) {
  const Algebra& A = *m.algebra();
  ModuleMap f;
  f.from = proj_sum_module(A, src_labels);
  f.to = proj_sum_module(A, dst_labels);
  for (std::size_t u = 0; u < A.vertex_count(); ++u) {
    Matrix comp(A.field(), f.to.dims[u], f.from.dims[u]);
    for (std::size_t t = 0; t < src_labels.size(); ++t) {
      const auto& src_words = A.hom_slice(u, src_labels[t]);
      std::size_t co = proj_sum_offset(A, src_labels, t, u);
      for (std::size_t s = 0; s < dst_labels.size(); ++s) {
        const Elem& z = m.at(s, t);
        if (A.is_zero(z)) continue;
        const auto& dst_words = A.hom_slice(u, dst_labels[s]);
        std::size_t ro = proj_sum_offset(A, dst_labels, s, u);
        for (std::size_t c = 0; c < src_words.size(); ++c) {
          Elem img = A.mul(A.basis_elem(src_words[c]), z);
          for (std::size_t r = 0; r < dst_words.size(); ++r)
            comp.set(ro + r, co + c, img[dst_words[r]]);
        }
      }
    }
    f.comps.push_back(std::move(comp));
  }
  if (!is_module_map(f))
    throw InternalCheckError("module_map_of_elem_matrix: not a module map");
  return f;
}

ElemMatrix elem_matrix_of_module_map(
    const std::vector<std::size_t>& src_labels,
    const std::vector<std::size_t>& dst_labels, const ModuleMap& f) {
  const Algebra& A = *f.from.A;
  ElemMatrix m(A, dst_labels.size(), src_labels.size());
  for (std::size_t t = 0; t < src_labels.size(); ++t) {
    std::size_t v = src_labels[t];
    const auto& gen_words = A.hom_slice(v, v);
    std::size_t gen_idx = SIZE_MAX;
    for (std::size_t i = 0; i < gen_words.size(); ++i)
      if (gen_words[i] == A.unit_path(v)) gen_idx = i;
    if (gen_idx == SIZE_MAX)
      throw InternalCheckError("elem_matrix_of_module_map: generator lost");
    std::size_t col = proj_sum_offset(A, src_labels, t, v) + gen_idx;
    Vec img = f.comps[v].col(col);
    for (std::size_t s = 0; s < dst_labels.size(); ++s) {
      const auto& dst_words = A.hom_slice(v, dst_labels[s]);
      std::size_t ro = proj_sum_offset(A, dst_labels, s, v);
      Elem z = A.zero_elem();
      for (std::size_t r = 0; r < dst_words.size(); ++r)
        z[dst_words[r]] = img[ro + r];
      m.set(s, t, std::move(z));
    }
  }
  return m;
}

TopGenerators top_generators(const AModule& M) {
  const Algebra& A = *M.A;
  TopGenerators out;
  for (std::size_t v = 0; v < A.vertex_count(); ++v) {
    Subspace rad(A.field(), M.dims[v]);
    for (std::size_t a = 0; a < A.arrow_count(); ++a) {
      if (A.presentation().arrows[a].dst != v) continue;
      for (std::size_t c = 0; c < M.arrow_act[a].cols(); ++c)
        rad.add(M.arrow_act[a].col(c));
    }
    for (std::size_t i = 0; i < M.dims[v]; ++i) {
      Vec e(M.dims[v], 0);
      e[i] = 1 % A.field().p();
      if (rad.add(e)) {
        out.vertices.push_back(v);
        out.vectors.push_back(std::move(e));
      }
    }
  }
  return out;
}

CoverResult projective_cover(const AModule& M) {
  const Algebra& A = *M.A;
  TopGenerators gens = top_generators(M);
  CoverResult out;
  out.labels = gens.vertices;
  AModule P = proj_sum_module(A, out.labels);
  ModuleMap f;
  f.from = P;
  f.to = M;
  for (std::size_t u = 0; u < A.vertex_count(); ++u) {
    Matrix comp(A.field(), M.dims[u], P.dims[u]);
    for (std::size_t k = 0; k < out.labels.size(); ++k) {
      std::size_t v = out.labels[k];
      const auto& words = A.hom_slice(u, v);
      std::size_t co = proj_sum_offset(A, out.labels, k, u);
      for (std::size_t c = 0; c < words.size(); ++c) {
        Matrix act = word_action(M, A.basis_word(words[c]).word,
                                 static_cast<std::uint32_t>(v));
        Vec img = act.apply(gens.vectors[k]);
        for (std::size_t r = 0; r < M.dims[u]; ++r)
          comp.set(r, co + c, img[r]);
      }
    }
    f.comps.push_back(std::move(comp));
  }
  if (!is_module_map(f) || !is_surjective(f))
    throw InternalCheckError("projective_cover: lift is not a cover");
  out.onto = std::move(f);
  return out;
}

AModule injective_sum_module(const Algebra& A,
                             const std::vector<std::size_t>& labels) {
  AModule M = zero_module(A);
  std::vector<AModule> parts;
  for (auto v : labels) parts.push_back(injective_module(A, v));
  for (std::size_t u = 0; u < A.vertex_count(); ++u) {
    M.dims[u] = 0;
    for (const auto& I : parts) M.dims[u] += I.dims[u];
  }
  for (std::size_t a = 0; a < A.arrow_count(); ++a) {
    const Arrow& ar = A.presentation().arrows[a];
    Matrix act(A.field(), M.dims[ar.dst], M.dims[ar.src]);
    std::size_t ro = 0, co = 0;
    for (const auto& I : parts) {
      act.paste(I.arrow_act[a], ro, co);
      ro += I.dims[ar.dst];
      co += I.dims[ar.src];
    }
    M.arrow_act[a] = std::move(act);
  }
  return M;
}

ModuleMap nu_of_elem_matrix(const std::vector<std::size_t>& src_labels,
                            const std::vector<std::size_t>& dst_labels,
                            const ElemMatrix& m) {
  const Algebra& A = *m.algebra();
  ModuleMap f;
  f.from = injective_sum_module(A, src_labels);
  f.to = injective_sum_module(A, dst_labels);
  for (std::size_t u = 0; u < A.vertex_count(); ++u) {
    Matrix comp(A.field(), f.to.dims[u], f.from.dims[u]);
    for (std::size_t t = 0; t < src_labels.size(); ++t) {
      const auto& src_words = A.hom_slice(src_labels[t], u);
      std::size_t co = inj_sum_offset(A, src_labels, t, u);
      for (std::size_t s = 0; s < dst_labels.size(); ++s) {
        const Elem& z = m.at(s, t);
        if (A.is_zero(z)) continue;
        const auto& dst_words = A.hom_slice(dst_labels[s], u);
        std::size_t ro = inj_sum_offset(A, dst_labels, s, u);
        // nu(f_z)(q*) = sum_m (coeff of q in z·m) m*
        for (std::size_t r = 0; r < dst_words.size(); ++r) {
          Elem img = A.mul(z, A.basis_elem(dst_words[r]));
          for (std::size_t c = 0; c < src_words.size(); ++c)
            comp.set(ro + r, co + c, img[src_words[c]]);
        }
      }
    }
    f.comps.push_back(std::move(comp));
  }
  if (!is_module_map(f))
    throw InternalCheckError("nu_of_elem_matrix: not a module map");
  return f;
}

bool ModuleComplex::is_zero_complex() const {
  for (const auto& t : terms)
    if (t.total_dim() != 0) return false;
  return true;
}

AModule ModuleComplex::term_at(int degree) const {
  int k = degree - lo;
  if (k >= 0 && k < static_cast<int>(terms.size()))
    return terms[static_cast<std::size_t>(k)];
  return zero_module(*A);
}

ModuleMap ModuleComplex::diff_at(int degree) const {
  int k = degree - lo;
  if (k >= 0 && k < static_cast<int>(diffs.size()))
    return diffs[static_cast<std::size_t>(k)];
  return zero_module_map(term_at(degree), term_at(degree + 1));
}

void validate_module_complex(const ModuleComplex& C) {
  if (!C.terms.empty() && C.diffs.size() + 1 != C.terms.size())
    throw InternalCheckError("module complex: differential count");
  for (std::size_t k = 0; k < C.diffs.size(); ++k) {
    if (C.diffs[k].from.dims != C.terms[k].dims ||
        C.diffs[k].to.dims != C.terms[k + 1].dims)
      throw InternalCheckError("module complex: differential endpoints");
    if (!is_module_map(C.diffs[k]))
      throw InternalCheckError("module complex: differential not linear");
  }
  for (std::size_t k = 0; k + 1 < C.diffs.size(); ++k)
    if (!is_zero_map(compose_module_maps(C.diffs[k + 1], C.diffs[k])))
      throw InternalCheckError("module complex: d∘d ≠ 0");
  for (const auto& t : C.terms) validate_module(t);
}

ModuleComplex module_complex_of(const ProjComplex& X) {
  const Algebra& A = X.algebra();
  ModuleComplex C;
  C.A = &A;
  C.lo = X.lo();
  for (int d = X.lo(); d <= X.hi(); ++d) {
    C.terms.push_back(proj_sum_module(A, X.labels_at(d)));
    if (d < X.hi())
      C.diffs.push_back(module_map_of_elem_matrix(
          X.labels_at(d), X.labels_at(d + 1), X.diff(d)));
  }
  return C;
}

ModuleComplex nu_complex(const ProjComplex& X) {
  const Algebra& A = X.algebra();
  ModuleComplex C;
  C.A = &A;
  C.lo = X.lo();
  for (int d = X.lo(); d <= X.hi(); ++d) {
    C.terms.push_back(injective_sum_module(A, X.labels_at(d)));
    if (d < X.hi())
      C.diffs.push_back(
          nu_of_elem_matrix(X.labels_at(d), X.labels_at(d + 1), X.diff(d)));
  }
  validate_module_complex(C);
  return C;
}

Vec homology_dims(const ModuleComplex& C, int degree) {
  const Algebra& A = *C.A;
  Vec h(A.vertex_count(), 0);
  AModule term = C.term_at(degree);
  ModuleMap out = C.diff_at(degree);
  ModuleMap in = C.diff_at(degree - 1);
  for (std::size_t v = 0; v < A.vertex_count(); ++v) {
    std::size_t k = term.dims[v] - rank(out.comps[v]) - rank(in.comps[v]);
    h[v] = static_cast<std::uint32_t>(k);
  }
  return h;
}

ModuleComplex shift_module_complex(const ModuleComplex& C, int n) {
  ModuleComplex S = C;
  S.lo = C.lo - n;
  if (n % 2 != 0)
    for (auto& d : S.diffs)
      for (auto& m : d.comps) m = m.scaled(C.A->field().neg(1 % C.A->field().p()));
  return S;
}

AModule dual_module(const AModule& M, const Algebra& op) {
  const Algebra& A = *M.A;
  if (op.arrow_count() != A.arrow_count() ||
      op.vertex_count() != A.vertex_count())
    throw InternalCheckError("dual_module: opposite algebra mismatch");
  AModule D;
  D.A = &op;
  D.dims = M.dims;
  for (std::size_t a = 0; a < A.arrow_count(); ++a)
    D.arrow_act.push_back(M.arrow_act[a].transpose());
  validate_module(D);
  return D;
}

ModuleComplex dual_complex(const ModuleComplex& C, const Algebra& op) {
  ModuleComplex D;
  D.A = &op;
  if (C.terms.empty()) return D;
  D.lo = -C.hi();
  for (int i = D.lo; i <= -C.lo; ++i) {
    D.terms.push_back(dual_module(C.term_at(-i), op));
    if (i < -C.lo) {
      // d^i: D(C^{-i}) -> D(C^{-i-1}) is the dual of d_C^{-i-1}
      ModuleMap orig = C.diff_at(-i - 1);
      ModuleMap f;
      f.from = dual_module(orig.to, op);
      f.to = dual_module(orig.from, op);
      for (const auto& m : orig.comps) f.comps.push_back(m.transpose());
      D.diffs.push_back(std::move(f));
    }
  }
  validate_module_complex(D);
  return D;
}

}  // namespace arknit
