#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "arknit/algebra.hpp"

namespace arknit {

// Matrix with entries in the algebra.  Column index = source summand, row
// index = target summand; the entry (r, c) is a map P_src -> P_dst, so its
// nonzero coordinates must sit in hom_slice(src, dst).
class ElemMatrix {
 public:
  ElemMatrix() : A_(nullptr), rows_(0), cols_(0) {}
  ElemMatrix(const Algebra& A, std::size_t rows, std::size_t cols);

  const Algebra* algebra() const { return A_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Elem& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, Elem e) {
    a_[r * cols_ + c] = std::move(e);
  }

  bool is_zero() const;
  ElemMatrix add(const ElemMatrix& other) const;
  ElemMatrix sub(const ElemMatrix& other) const;
  ElemMatrix negated() const;
  ElemMatrix scaled(std::uint32_t c) const;

  // Drop one row / column (used when cancelling a contractible pair).
  ElemMatrix without_row(std::size_t r) const;
  ElemMatrix without_col(std::size_t c) const;

  friend bool operator==(const ElemMatrix& x, const ElemMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  const Algebra* A_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

// Matrix of the composite "first f, then g" (so g's source summands must be
// f's target summands): entry (r,c) = sum_k mul(f(k,c), g(r,k)).
ElemMatrix compose(const ElemMatrix& g, const ElemMatrix& f);

// Identity matrix for a summand list: e_v on the diagonal.
ElemMatrix elem_identity(const Algebra& A,
                         const std::vector<std::size_t>& labels);

// dim_k P_v = number of basis words starting at v.  Simple modules of a
// quiver algebra over the prime field are one-dimensional, so this is also
// the composition length of P_v.
std::size_t projective_dim(const Algebra& A, std::size_t v);

// Bounded complex of projectives.  labels()[degree] lists the vertex of each
// indecomposable summand P_v in that degree; diff(i) maps degree i to i+1.
// Degrees outside [lo, hi] are zero.  Complexes are normalized: widths at lo
// and hi are nonzero (the zero complex has an empty degree range).
class ProjComplex {
 public:
  ProjComplex() : A_(nullptr), lo_(0) {}

  static ProjComplex zero(const Algebra& A);
  static ProjComplex stalk(const Algebra& A, std::size_t vertex, int degree);
  // Validates slice typing of every entry and d∘d = 0, then normalizes.
  static ProjComplex build(const Algebra& A, int lo,
                           std::vector<std::vector<std::size_t>> labels,
                           std::vector<ElemMatrix> diffs);

  const Algebra& algebra() const { return *A_; }
  const Algebra* algebra_ptr() const { return A_; }
  bool valid() const { return A_ != nullptr; }
  bool is_zero_complex() const { return labels_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(labels_.size()) - 1; }

  std::size_t width(int degree) const;
  const std::vector<std::size_t>& labels_at(int degree) const;
  // d^degree: degree -> degree+1, zero-shaped outside the support.
  ElemMatrix diff(int degree) const;

  std::size_t total_width() const;

  friend bool operator==(const ProjComplex& x, const ProjComplex& y) {
    return x.lo_ == y.lo_ && x.labels_ == y.labels_ && x.diffs_ == y.diffs_;
  }

 private:
  const Algebra* A_;
  int lo_;
  std::vector<std::vector<std::size_t>> labels_;
  std::vector<ElemMatrix> diffs_;  // diffs_[k]: lo_+k -> lo_+k+1

  void normalize();
};

struct ChainMap {
  ProjComplex from, to;
  int lo = 0;
  std::vector<ElemMatrix> comps;  // comps[k]: from^{lo+k} -> to^{lo+k}

  // Component at a degree, zero-shaped when outside the stored range.
  ElemMatrix component(int degree) const;
};

ChainMap zero_map(const ProjComplex& X, const ProjComplex& Y);
ChainMap identity_map(const ProjComplex& X);
ChainMap make_map(const ProjComplex& X, const ProjComplex& Y,
                  const std::map<int, ElemMatrix>& comps);

bool is_chain_map(const ChainMap& f);
// "first f, then g"
ChainMap compose_maps(const ChainMap& g, const ChainMap& f);
ChainMap add_maps(const ChainMap& f, const ChainMap& g);
ChainMap negate_map(const ChainMap& f);
ChainMap scale_map(std::uint32_t c, const ChainMap& f);

// X[n]^i = X^{i+n}, d_{X[n]}^i = (−1)^n d^{i+n}.
ProjComplex shift(const ProjComplex& X, int n);
ChainMap shift_map(const ChainMap& f, int n);

// σ-truncations: degrees outside the half-line dropped, kept differentials
// unchanged.
ProjComplex truncate_le(const ProjComplex& X, int n);
ProjComplex truncate_ge(const ProjComplex& X, int n);

// cone(f)^i = X^{i+1} ⊕ Y^i with d(x, y) = (−d_X x, f x + d_Y y), plus the
// canonical triangle maps Y → cone(f) → X[1].
struct ConeResult {
  ProjComplex cone;
  ChainMap into_cone;    // Y -> cone(f)
  ChainMap onto_shift;   // cone(f) -> X[1]
};
ConeResult make_cone(const ChainMap& f);

struct SumResult {
  ProjComplex sum;
  ChainMap incl_left, incl_right;  // X -> X⊕Y, Y -> X⊕Y
  ChainMap proj_left, proj_right;  // X⊕Y -> X, X⊕Y -> Y
};
SumResult direct_sum(const ProjComplex& X, const ProjComplex& Y);

// All differential entries in the radical: no contractible pair can be
// cancelled, so the representative is homotopically minimal.
bool is_minimal(const ProjComplex& X);

// Cancels P_v →(unit)→ P_v pairs until minimal.  from_original ∘
// into_original = id on the minimal part exactly; both are chain maps and
// X ≅ min ⊕ (stripped contractibles) in Comp.
struct StripResult {
  ProjComplex min;
  // (vertex, degree) of each cancelled pair P_v: degree -> degree+1
  std::vector<std::pair<std::size_t, int>> stripped;
  ChainMap into_original;  // min -> X
  ChainMap from_original;  // X -> min
};
StripResult strip_contractibles(const ProjComplex& X);

// l_c = total composition length over all degrees, l = summand count over
// all degrees, l_p = summand count of the minimal representative.
struct LengthTriple {
  std::size_t l_c = 0, l = 0, l_p = 0;
};
LengthTriple lengths(const ProjComplex& X);

}  // namespace arknit
