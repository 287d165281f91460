#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace arknit {

// Oriented slice of a simply-laced tree, vertices 0-based.  A_n is the
// chain 1 -> 2 -> ... -> n; D_n points the chain at the fork, which splits
// into the last two vertices; the E series is the chain 1-2-3-5-...-8 with
// the branch vertex 4 hanging off 3, everything directed away from 1.
struct DynkinTree {
  char family = 'A';
  std::size_t n = 1;
  bool d3_as_a3 = false;  // D3 is stored with the A3 adjacency and flagged
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // oriented s -> t

  // A needs n >= 1, D needs n >= 3, E needs n in {6, 7, 8}.
  static DynkinTree make(char family, std::size_t n);
  // "A3", "D4", "E6" and friends
  static DynkinTree parse(const std::string& name);
  std::string name() const;
};

// Columns of an additive function on the translation quiver over the tree.
// Entry (column j, vertex t) is a coefficient vector: over the initial
// symbols x_{t,0} in symbolic mode, or a single concrete integer otherwise.
struct MeshWindow {
  DynkinTree tree;
  bool symbolic = false;
  std::vector<std::vector<std::vector<long long>>> columns;

  const std::vector<long long>& value(std::size_t column,
                                      std::size_t vertex) const {
    return columns.at(column).at(vertex);
  }
};

// Mesh propagation: within each new column, taken in vertex order,
//   x_{t,j+1} = sum_{s->t} x_{s,j+1} + sum_{t->u} x_{u,j} - x_{t,j}.
// The integer form starts from the given values; the symbolic form starts
// from one formal symbol per vertex and keeps exact linear combinations.
MeshWindow propagate(const DynkinTree& tree,
                     const std::vector<long long>& initial,
                     std::size_t steps);
MeshWindow propagate_symbolic(const DynkinTree& tree, std::size_t steps);

// Re-walks every mesh of the window and confirms the defining relation.
bool verify_meshes(const MeshWindow& w);

// Symbolic confirmation of the E-series shift identities, e.g. E6's
// x6[j+4] = -x1[j].  Only meaningful for family 'E'.
struct MeshIdentity {
  std::string name;
  bool holds = false;
};
std::vector<MeshIdentity> check_identities(const DynkinTree& tree);

// Earliest non-positive value forced by additive propagation from a
// strictly positive initial column; certifies that no positive additive
// function lives on the translation quiver.  Scans column by column,
// vertices in order; throws CertificateNotFoundError when the budget runs
// out first.
struct PositivityBreak {
  std::size_t vertex = 0;
  std::size_t column = 0;  // columns after the initial one
  long long value = 0;
};
PositivityBreak positivity_certificate(const DynkinTree& tree,
                                       const std::vector<long long>& initial,
                                       std::size_t column_budget = 64);

}  // namespace arknit
