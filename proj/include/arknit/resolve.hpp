#pragma once

#include <map>

#include "arknit/module.hpp"

namespace arknit {

// Minimal projective resolution ... -> P_1 -> P_0 ->> M placed in degrees
// [-n, 0], with the cover map as augmentation at degree 0.  Minimality comes
// from covering tops, so every differential entry lands in the radical.
struct ResolutionResult {
  ProjComplex complex;
  ModuleMap augmentation;  // degree-0 module ->> M
};
ResolutionResult min_proj_resolution(const AModule& M,
                                     std::size_t length_bound);

// Bounded complex of projectives quasi-isomorphic to C, with the comparison
// chain map (one ModuleMap per degree) that witnesses the quasi-isomorphism.
// Certified internally: comparison commutes with differentials, homology
// dimensions agree per degree and vertex, and the induced map on homology is
// surjective (hence bijective).
struct ResolveResult {
  ProjComplex complex;
  std::map<int, ModuleMap> comparison;
};
ResolveResult proj_resolve_complex(const ModuleComplex& C,
                                   std::size_t length_bound);

// τ = ν[−1] up to quasi-isomorphism: resolve nu_complex(X)[−1] by
// projectives and strip.  Input is stripped first, so τ(contractible) = 0.
ProjComplex tau_candidate(const ProjComplex& X, std::size_t length_bound);

// Injective length: l_p of the dualized complex over the opposite algebra.
std::size_t l_i(const ProjComplex& X, std::size_t length_bound);

}  // namespace arknit
