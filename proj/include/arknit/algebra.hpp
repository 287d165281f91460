#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arknit/matrix.hpp"

namespace arknit {

struct Arrow {
  std::string name;
  std::uint32_t src = 0, dst = 0;  // vertex indices
};

// One term of a relation: coeff * (arrow word in traversal order).
struct RelationTerm {
  std::uint32_t coeff = 1;
  std::vector<std::uint32_t> word;  // arrow indices; length >= 2 required
};
using Relation = std::vector<RelationTerm>;

struct QuiverPresentation {
  std::uint32_t characteristic = 0;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
};

// Element of the quotient algebra as a coefficient vector over its basis.
using Elem = Vec;

// Finite-dimensional quotient of a path algebra by an admissible ideal.
//
// Convention, fixed once: a path word lists its arrows in traversal order
// (word pq means "first p, then q").  The ring product x*y concatenates the
// other way around ("traverse y, then x"), so that left modules behave
// classically: P_i = A e_i has basis {e_i, paths starting at i}, and
// Hom(P_i, P_j) is spanned by paths from j to i acting by right
// multiplication.  Composing f: P_i -> P_j with g: P_j -> P_l ("f then g")
// is the ring product mul(f, g).
class Algebra {
 public:
  struct BasisWord {
    std::vector<std::uint32_t> word;  // arrow indices, traversal order
    std::uint32_t head = 0;           // start vertex of the traversal
    std::uint32_t tail = 0;           // end vertex of the traversal
  };

  // Enumerates paths up to path_bound, spans the relation ideal inside that
  // window, and keeps the surviving paths as the basis.  Throws
  // NotFiniteDimensionalError when paths of maximal length survive (finite
  // dimension cannot be certified inside the bound) and
  // NonAdmissibleRelationError on malformed relations.
  static Algebra build(const QuiverPresentation& pres,
                       std::size_t path_bound = 12);

  const PrimeField& field() const { return field_; }
  const QuiverPresentation& presentation() const { return pres_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t vertex_count() const { return pres_.vertices.size(); }
  std::size_t arrow_count() const { return pres_.arrows.size(); }
  std::size_t path_bound() const { return path_bound_; }

  const BasisWord& basis_word(std::size_t b) const { return basis_[b]; }
  // e_i sits at basis index i.
  std::size_t unit_path(std::size_t v) const { return v; }

  Elem zero_elem() const { return Elem(dim(), 0); }
  Elem basis_elem(std::size_t b) const;
  Elem unit() const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem scale(std::uint32_t c, const Elem& x) const;
  // Ring product; see the class comment for the orientation.
  Elem mul(const Elem& x, const Elem& y) const;
  bool is_zero(const Elem& x) const;

  // Class of an arbitrary traversal word (empty word = e_at).
  Elem word_elem(const std::vector<std::uint32_t>& word,
                 std::uint32_t at = 0) const;

  // x lies in rad(A) iff its coefficients on every e_i vanish; the ideal
  // spanned by the relations never touches paths of length < 2.
  bool in_radical(const Elem& x) const;

  // Basis indices of the maps P_i -> P_j: words with tail i and head j.
  const std::vector<std::size_t>& hom_slice(std::size_t i,
                                            std::size_t j) const;

  // Inverse of x within the local algebra e_v A e_v, if x is a unit there
  // (iff its e_v-coefficient is nonzero).
  std::optional<Elem> local_inverse(const Elem& x, std::size_t v) const;

  bool is_simple() const { return vertex_count() == 1 && dim() == 1; }
  bool is_connected() const;

  QuiverPresentation opposite_presentation() const;

  std::optional<std::size_t> vertex_index(const std::string& name) const;
  std::optional<std::size_t> arrow_index(const std::string& name) const;

 private:
  Algebra() = default;

  PrimeField field_;
  QuiverPresentation pres_;
  std::size_t path_bound_ = 0;
  std::vector<BasisWord> basis_;
  // mult table: table_[x * dim + y] = mul(basis x, basis y)
  std::vector<Elem> table_;
  // hom_slices_[i * nv + j] = slice for maps P_i -> P_j
  std::vector<std::vector<std::size_t>> hom_slices_;
};

}  // namespace arknit
