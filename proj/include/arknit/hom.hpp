#pragma once

#include "arknit/complex.hpp"

#include <optional>

namespace arknit {

// Hom between bounded complexes of projectives, in Comp and in the homotopy
// category.  Chain maps are the kernel of the commutation system over the
// slice coordinates of all components on the degree overlap; null-homotopic
// maps are spanned by the boundaries dh + hd of elementary homotopies; coset
// representatives give a basis of Hom_K(X, Y).
class HomSpace {
 public:
  HomSpace() = default;

  static HomSpace compute(const ProjComplex& X, const ProjComplex& Y);

  const ProjComplex& source() const { return X_; }
  const ProjComplex& target() const { return Y_; }

  std::size_t chain_dim() const { return chain_basis_.size(); }
  std::size_t null_dim() const { return null_basis_.size(); }
  // dim Hom_K(X, Y)
  std::size_t dim() const { return reps_.size(); }

  // i-th coset representative, an honest chain map X -> Y
  ChainMap rep(std::size_t i) const;
  // chain map with the given raw slice coordinates
  ChainMap map_from_raw(const Vec& coords) const;
  // slice coordinates of a chain map (outside the overlap every component
  // is zero-shaped, so the overlap carries the whole map)
  Vec raw_coords(const ChainMap& f) const;
  // coordinates of [f] in the coset-representative basis; throws
  // InternalCheckError when f does not solve the commutation system
  Vec class_coords(const ChainMap& f) const;
  bool is_null_homotopic(const ChainMap& f) const;
  // combination of representatives realizing the given class
  ChainMap map_from_class(const Vec& cls) const;

 private:
  friend class EndAlgebra;
  static HomSpace compute_seeded(const ProjComplex& X, const ProjComplex& Y,
                                 const std::vector<ChainMap>& preferred_reps);

  // one unknown per (degree, row, col, slice basis element)
  struct Slot {
    int degree;
    std::size_t r, c;
    std::size_t basis_index;  // algebra basis index of the path
  };

  ProjComplex X_, Y_;
  int lo_ = 0, hi_ = -1;  // degree overlap; empty when lo_ > hi_
  std::vector<Slot> slots_;
  std::vector<Vec> chain_basis_;  // raw coordinates
  std::vector<Vec> null_basis_;
  std::vector<Vec> reps_;
  Matrix class_solver_;  // columns: null basis then reps
  // recorded row reduction of class_solver_, for repeated class_coords calls
  Matrix solver_ops_;
  std::vector<std::size_t> solver_pivots_;
};

// End_K(X) with a closed multiplication table on coset representatives.
// Representative 0 is the class of the identity.  table(i, j) holds the
// class coordinates of rep_i ∘ rep_j ("first j, then i").  Associativity and
// the unit laws are verified on the table at construction.
class EndAlgebra {
 public:
  EndAlgebra() = default;

  static EndAlgebra compute(const ProjComplex& X);

  const HomSpace& hom() const { return hom_; }
  std::size_t dim() const { return hom_.dim(); }
  std::size_t unit_index() const { return 0; }
  const Vec& table(std::size_t i, std::size_t j) const {
    return table_[i * dim() + j];
  }
  Vec unit_vec() const;
  // bilinear extension of the table
  Vec mul_vec(const Vec& x, const Vec& y) const;
  Vec pow_vec(Vec x, std::uint64_t e) const;

 private:
  HomSpace hom_;
  std::vector<Vec> table_;
};

// End_K(X) modulo its radical, with a closed multiplication table of its
// own.  rep_vecs lifts the quotient basis back to End classes; rad_basis is
// an echelon basis of the radical in End-class coordinates.
struct EndQuotient {
  std::vector<Vec> rad_basis;
  std::vector<Vec> rep_vecs;
  std::vector<Vec> table;  // dim*dim structure constants
  Vec unit;
  std::size_t dim = 0;
  PrimeField field;

  Vec unit_vec() const { return unit; }
  Vec mul_vec(const Vec& x, const Vec& y) const;
  Vec pow_vec(Vec x, std::uint64_t e) const;
};

// Radical of End_K(X) and the semisimple quotient.  The radical comes from
// the trace-power chain over F_p and is certified at runtime (two-sided
// ideal, nilpotent, chain finds nothing in the quotient).  Throws
// NonSplitEndomorphismRing when the quotient's center is moved by Frobenius,
// i.e. when a residue field larger than the prime field appears;
// matrix-algebra quotients over the prime field pass.
EndQuotient end_quotient(const EndAlgebra& E);
std::vector<Vec> radical_of_end(const EndAlgebra& E);

// Residue of a slice-typed matrix: the unit-path coefficient on equal-label
// entries, zero elsewhere.  Residues multiply like the matrices themselves.
Matrix residue_matrix(const Algebra& A, const ElemMatrix& m,
                      const std::vector<std::size_t>& src_labels,
                      const std::vector<std::size_t>& dst_labels);

}  // namespace arknit
