#pragma once

#include "arknit/hom.hpp"

namespace arknit {

// Direct-sum decomposition into indecomposables, with witnesses: into[i] and
// onto[i] are chain maps parts[i] -> X and X -> parts[i] satisfying
// onto[i] ∘ into[i] = id and  Σ into[i] ∘ onto[i] = id_X  (both checked).
struct DecomposeResult {
  std::vector<ProjComplex> parts;
  std::vector<ChainMap> into;
  std::vector<ChainMap> onto;
};

// Requires a minimal complex (PreconditionUnmet otherwise).  The budget
// bounds the deterministic idempotent probe inside a matrix-algebra
// quotient; exhausting it throws DecompositionBudgetExceeded.
DecomposeResult decompose_with_witness(const ProjComplex& X,
                                       std::size_t budget = 200);
std::vector<ProjComplex> decompose(const ProjComplex& X,
                                   std::size_t budget = 200);

// End_K(X) is local, i.e. the radical has codimension 1.  Requires a
// minimal nonzero complex for the "true" answer to be meaningful; zero
// complexes answer false.
bool is_indecomposable(const ProjComplex& X);

// Isomorphism in the homotopy category.  Strips contractible summands, then
// scans Hom representatives for one with invertible residues in every
// degree (such a map is an isomorphism of complexes outright); complexes
// that are both indecomposable are settled by that scan, everything else is
// decomposed and matched summand by summand.
bool iso_in_K(const ProjComplex& X, const ProjComplex& Y,
              std::size_t budget = 200);

}  // namespace arknit
