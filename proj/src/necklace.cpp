#include "pathcat/necklace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pathcat/chains.hpp"

namespace pathcat {

bool necklace_chained(const SSet& X, const NecklaceMap& m) {
  if (m.beads.empty()) return m.src == m.tgt;
  int at = m.src;
  for (const SimplexRef& b : m.beads) {
    SimplexRef s = source_vertex(X, b);
    if (s.base_idx != at || s.base_dim != 0) return false;
    at = target_vertex(X, b).base_idx;
  }
  return at == m.tgt;
}

NecklaceMap make_necklace_map(const SSet& X, std::vector<SimplexRef> beads,
                              int src_vertex) {
  NecklaceMap m;
  if (beads.empty()) {
    m.src = m.tgt = src_vertex;
    return m;
  }
  m.src = source_vertex(X, beads.front()).base_idx;
  m.tgt = target_vertex(X, beads.back()).base_idx;
  m.beads = std::move(beads);
  if (!necklace_chained(X, m)) {
    throw std::invalid_argument("necklace beads do not chain");
  }
  return m;
}

CubeTerm normalize_beads(const SSet& X, const NecklaceMap& m) {
  (void)X;
  CubeTerm out;
  out.coeff = 1;
  out.map.src = m.src;
  out.map.tgt = m.tgt;
  for (const SimplexRef& b : m.beads) {
    if (b.dim() == 0) throw std::logic_error("zero-dimensional bead");
    if (b.is_degenerate()) {
      if (b.dim() == 1) continue;  // identity edge: contract
      out.coeff = 0;               // degenerate higher bead: term vanishes
      out.map.beads.clear();
      return out;
    }
    out.map.beads.push_back(b);
  }
  return out;
}

std::pair<int, int> cube_direction(const NecklaceMap& m, int j) {
  if (j < 1) throw std::invalid_argument("direction must be >= 1");
  int seen = 0;
  for (std::size_t i = 0; i < m.beads.size(); ++i) {
    int interior = m.beads[i].dim() - 1;
    if (j <= seen + interior) {
      return {static_cast<int>(i), j - seen};
    }
    seen += interior;
  }
  throw std::invalid_argument("direction out of range");
}

CubeTerm cube_face(const SSet& X, const NecklaceMap& m, int j, int eps) {
  auto [i, t] = cube_direction(m, j);
  NecklaceMap raw;
  raw.src = m.src;
  raw.tgt = m.tgt;
  for (int k = 0; k < static_cast<int>(m.beads.size()); ++k) {
    if (k != i) {
      raw.beads.push_back(m.beads[k]);
      continue;
    }
    const SimplexRef& b = m.beads[k];
    if (eps == 0) {
      raw.beads.push_back(face_of(X, b, t));
    } else {
      raw.beads.push_back(range_face(X, b, 0, t));
      raw.beads.push_back(range_face(X, b, t, b.dim()));
    }
  }
  return normalize_beads(X, raw);
}

std::vector<TriangTerm> triangulation_terms(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<TriangTerm> out;
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (perm[a] > perm[b]) ++inversions;
      }
    }
    out.push_back(TriangTerm{perm, inversions % 2 == 0 ? 1 : -1});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace pathcat
