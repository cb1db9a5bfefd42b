#pragma once
// Necklaces (wedges of simplices joined end to end), necklace maps into a
// simplicial set, and the cube structure on a necklace map: a map whose beads
// have dimensions n_1..n_k carries a cube of dimension sum(n_i - 1), one
// direction per interior vertex of a bead.  Faces in a direction either take
// the corresponding inner face of the bead (epsilon = 0) or split the bead at
// that vertex (epsilon = 1).  Normalization of the resulting chain term:
// a 1-dimensional bead with degenerate image contracts away; a bead of
// dimension >= 2 with degenerate image kills the term.

#include <utility>
#include <vector>

#include "pathcat/sset.hpp"

namespace pathcat {

struct NecklaceMap {
  int src = 0;  // vertex index in dimension 0
  int tgt = 0;
  std::vector<SimplexRef> beads;  // nondegenerate, dims >= 1, endpoints chained

  int cube_dim() const {
    int d = 0;
    for (const SimplexRef& b : beads) d += b.dim() - 1;
    return d;
  }
  bool operator==(const NecklaceMap&) const = default;
  auto operator<=>(const NecklaceMap&) const = default;
};

struct CubeTerm {
  int coeff = 0;  // 0, +1 or -1; 0 means the term vanished
  NecklaceMap map;
};

// Build a necklace map from bead images, checking the endpoint chaining;
// src_vertex is used when beads is empty.
NecklaceMap make_necklace_map(const SSet& X, std::vector<SimplexRef> beads,
                              int src_vertex = 0);
bool necklace_chained(const SSet& X, const NecklaceMap& m);

// Normalize a bead list per the contraction rules above.
CubeTerm normalize_beads(const SSet& X, const NecklaceMap& m);

// Direction j (1-based) of the cube -> (bead index, interior vertex).
std::pair<int, int> cube_direction(const NecklaceMap& m, int j);

// Face of the cube in direction j (1 <= j <= cube_dim) at endpoint eps.
CubeTerm cube_face(const SSet& X, const NecklaceMap& m, int j, int eps);

// Triangulation of the n-cube: one term per permutation of {1..n}, listing
// the order in which coordinates flip from 0 to 1 along the simplex's vertex
// path, with the shuffle sign (parity of the permutation's inversions).
// Terms are emitted in lexicographic order of the flip sequence.
struct TriangTerm {
  std::vector<int> flip_order;  // permutation of 1..n
  int sign = 1;
};
std::vector<TriangTerm> triangulation_terms(int n);

}  // namespace pathcat
