#pragma once

#include <cstdint>
#include <vector>

#include "arknit/complex.hpp"

namespace arknit {

// Finite-dimensional left module, stored per vertex: dims[v] = dim e_v M,
// arrow_act[a]: M_src -> M_dst for the arrow a: src -> dst.
struct AModule {
  const Algebra* A = nullptr;
  std::vector<std::size_t> dims;
  std::vector<Matrix> arrow_act;

  std::size_t dim_at(std::size_t v) const { return dims[v]; }
  std::size_t total_dim() const;
};

// Shape and relation-action checks; throws InternalCheckError on violation.
void validate_module(const AModule& M);

AModule zero_module(const Algebra& A);
AModule simple_module(const Algebra& A, std::size_t v);
// P_v = A e_v, basis the words starting at v; component at u = words ending
// at u.
AModule projective_module(const Algebra& A, std::size_t v);
// I_v = D(e_v A); component at u is dual to the words from u to v, and the
// arrow action is the transpose of right concatenation.
AModule injective_module(const Algebra& A, std::size_t v);

// Matrix of the word's action M_{head} -> M_{tail} (empty word at a vertex =
// identity there).
Matrix word_action(const AModule& M, const std::vector<std::uint32_t>& word,
                   std::uint32_t at);

struct ModuleMap {
  AModule from, to;
  std::vector<Matrix> comps;  // per vertex
};

ModuleMap zero_module_map(const AModule& M, const AModule& N);
ModuleMap identity_module_map(const AModule& M);
bool is_module_map(const ModuleMap& f);
// "first f, then g"
ModuleMap compose_module_maps(const ModuleMap& g, const ModuleMap& f);
ModuleMap add_module_maps(const ModuleMap& f, const ModuleMap& g);
bool is_surjective(const ModuleMap& f);
bool is_zero_map(const ModuleMap& f);

struct KernelResult {
  AModule K;
  ModuleMap incl;  // K -> domain of f
};
KernelResult kernel_module(const ModuleMap& f);

// Direct sum of indecomposable projectives, components laid out summand by
// summand inside each vertex block.
AModule proj_sum_module(const Algebra& A,
                        const std::vector<std::size_t>& labels);
// Offset of a summand's block inside vertex component u.
std::size_t proj_sum_offset(const Algebra& A,
                            const std::vector<std::size_t>& labels,
                            std::size_t summand, std::size_t u);

// A map between projective sums is the same data as a matrix of algebra
// elements (entry (s, t) = image of the generator e_{label_t} in summand s).
ModuleMap module_map_of_elem_matrix(const std::vector<std::size_t>& src_labels,
                                    const std::vector<std::size_t>& dst_labels,
                                    const ElemMatrix& m);
ElemMatrix elem_matrix_of_module_map(
    const std::vector<std::size_t>& src_labels,
    const std::vector<std::size_t>& dst_labels, const ModuleMap& f);

// Generators of top(M) = M / rad M, as vectors inside M.
struct TopGenerators {
  std::vector<std::size_t> vertices;
  std::vector<Vec> vectors;  // coordinates inside M_{vertex}
};
TopGenerators top_generators(const AModule& M);

struct CoverResult {
  std::vector<std::size_t> labels;  // projective summands of the cover
  ModuleMap onto;                   // proj_sum_module(labels) ->> M
};
// Minimal projective cover, built from a lift of top(M).
CoverResult projective_cover(const AModule& M);

// Nakayama functor on a projective-sum map: nu(P_v) = I_v, and the entry z
// of a map P_i -> P_j turns into the dual of left multiplication by z.
AModule injective_sum_module(const Algebra& A,
                             const std::vector<std::size_t>& labels);
ModuleMap nu_of_elem_matrix(const std::vector<std::size_t>& src_labels,
                            const std::vector<std::size_t>& dst_labels,
                            const ElemMatrix& m);

// Bounded complex of modules; degrees outside the stored range are zero.
struct ModuleComplex {
  const Algebra* A = nullptr;
  int lo = 0;
  std::vector<AModule> terms;
  std::vector<ModuleMap> diffs;  // diffs[k]: lo+k -> lo+k+1

  bool is_zero_complex() const;
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  AModule term_at(int degree) const;
  ModuleMap diff_at(int degree) const;
};

void validate_module_complex(const ModuleComplex& C);

// Underlying module complex of a complex of projectives.
ModuleComplex module_complex_of(const ProjComplex& X);
// nu applied degreewise: the complex of injectives nu(X).
ModuleComplex nu_complex(const ProjComplex& X);

// Per-vertex homology dimensions at a degree.
Vec homology_dims(const ModuleComplex& C, int degree);

// Same convention as the projective-complex shift: result^i = C^{i+n}, with
// the (−1)^n sign on the differentials.
ModuleComplex shift_module_complex(const ModuleComplex& C, int n);

// k-dual over the opposite algebra: degrees negated, actions transposed.
// The caller owns the opposite Algebra and must keep it alive.
AModule dual_module(const AModule& M, const Algebra& op);
ModuleComplex dual_complex(const ModuleComplex& C, const Algebra& op);

}  // namespace arknit
