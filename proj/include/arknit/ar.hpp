#pragma once

#include <optional>
#include <string>

#include "arknit/decompose.hpp"
#include "arknit/resolve.hpp"

namespace arknit {

// Connecting map w: X -> t[1] where t = tau_candidate(X).  Selected as the
// class in Hom_K(X, t[1]) that composes to zero with every radical
// endomorphism of X; throws SocleSelectionFailedError unless that subspace
// is exactly one-dimensional.
struct ConnectingResult {
  ProjComplex tau;
  ChainMap w;  // X -> shift(tau, 1)
};
ConnectingResult connecting_map(const ProjComplex& X,
                                std::size_t length_bound = 64);

// Triangle tau -u-> middle -v-> x -w-> tau[1] with middle the minimal
// representative of cone(w)[-1].  Construction certifies that w is nonzero,
// v∘u is null homotopic, and both ends are indecomposable.
struct ArTriangle {
  ProjComplex tau, middle, x;
  ChainMap u, v, w;
  std::size_t stripped_pairs = 0;  // contractible pairs removed from the cone
};
ArTriangle ar_triangle(const ProjComplex& X, std::size_t length_bound = 64,
                       std::size_t budget = 200);

// Checks that a triangle is almost split against every object of the
// universe: non-section maps into x are annihilated by w, both induced
// hom sequences are exact in the middle, and the four kernel/cokernel
// criteria match the isomorphism tests exactly.  Throws
// VerificationFailureError naming the offending object and check.
struct VerifyReport {
  std::size_t objects_checked = 0;
  std::size_t sequences_checked = 0;
};
VerifyReport verify_ar(const ArTriangle& t,
                       const std::vector<ProjComplex>& universe,
                       std::size_t budget = 200);

// Inverse translate, computed over the opposite algebra: dualize, take the
// translate there, dualize back, resolve, strip.  The round trip
// tau(tau_inverse(X)) ≅ X is certified before returning.
ProjComplex tau_inverse(const ProjComplex& X, std::size_t length_bound = 64);

// Component graph knitted from the projective stalks.  Nodes are iso-class
// representatives up to shift, normalized so the top degree is 0; an object
// of the category is rep[shift].  tau_edges[i] says tau(node i) ≅ node
// target shifted by shift; arrows carry the middle-term multiplicities.
struct ArNode {
  ProjComplex rep;
  std::string name;
  LengthTriple len;    // l_c, l, l_p of rep
  std::size_t l_inj = 0;
};
struct TauEdge {
  std::size_t from = 0, to = 0;
  int shift = 0;  // tau(rep_from) ≅ shift(rep_to, shift)
  bool operator==(const TauEdge&) const = default;
};
struct ArArrow {
  std::size_t from = 0;
  int from_shift = 0;  // irreducible map shift(rep_from, from_shift) -> rep_to
  std::size_t to = 0;
  std::size_t mult = 0;
  bool operator==(const ArArrow&) const = default;
};
struct ShiftPeriod {
  std::size_t tau_power = 0;  // tau^n ≅ [m] on every node of the component
  int shift = 0;
  bool operator==(const ShiftPeriod&) const = default;
};
struct ArComponentGraph {
  const Algebra* A = nullptr;
  int window_lo = -4, window_hi = 4;
  std::vector<ArNode> nodes;
  std::vector<TauEdge> tau_edges;    // one per processed node
  std::vector<ArArrow> arrows;
  std::vector<ArTriangle> triangles;  // aligned with tau_edges
  std::vector<std::size_t> triangle_of;  // node -> index into triangles
  std::optional<ShiftPeriod> period;
  bool complete = false;
  std::size_t steps_used = 0;
};

struct KnitOptions {
  int window_lo = -4, window_hi = 4;
  std::size_t budget = 200;        // processed-node count
  std::size_t length_bound = 64;   // resolution safety bound
  std::size_t part_budget = 200;   // decompose / iso budget
};
ArComponentGraph knit(const Algebra& A, const KnitOptions& opts = {});

// Tree underlying one slice of the component: quotient of the window
// objects by the translate orbits.  Returns nothing when the quotient is
// not a simply-laced finite tree of known shape.
struct DynkinTag {
  char family = 'A';  // 'A', 'D' or 'E'
  std::size_t n = 1;
  bool operator==(const DynkinTag&) const = default;
};
std::optional<DynkinTag> tree_class(const ArComponentGraph& g);

enum class VerdictKind { SimpleA1, FiniteTypeDynkin, InfiniteOrInconclusive };
struct ClassificationVerdict {
  VerdictKind kind = VerdictKind::InfiniteOrInconclusive;
  std::optional<DynkinTag> tree;
  std::optional<ShiftPeriod> period;
  std::size_t sup_lp = 0, sup_li = 0;  // over the knitted nodes
  bool ladder_evidence = false;        // linear chain with tau ≅ [shift]
  std::string note;
};
ClassificationVerdict classify(const ArComponentGraph& g, const Algebra& A);

// The finite sum d(M) = sum_{i=1..n} sum_j dim Hom_K(tau^i X, M[j]),
// evaluated on every node, plus the per-triangle check
// d(middle) ≤ d(tau end) + d(end) with at least one strict drop.
// Requires the recorded periodicity (n, m); the displayed direction of the
// inequality follows from exactness of the induced hom sequences.
struct SubadditiveRow {
  std::size_t node = 0;
  std::size_t d_tau = 0, d_middle = 0, d_end = 0;
  bool strict = false;
};
struct SubadditiveReport {
  std::vector<std::size_t> d_node;  // aligned with g.nodes
  std::vector<SubadditiveRow> rows;
  bool strict_somewhere = false;
};
SubadditiveReport subadditive_witness(const ProjComplex& X,
                                      const ArComponentGraph& g,
                                      std::size_t n, int m);

}  // namespace arknit
