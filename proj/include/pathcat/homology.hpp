#pragma once
// Exact integer homology of degree-truncated cobar hom complexes via Smith
// normal form over arbitrary-precision integers.

#include <utility>
#include <vector>

#include "pathcat/cobar.hpp"

namespace pathcat {

struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Int> entries;  // no stored zeros

  void set(int r, int c, const Int& v);
  Int get(int r, int c) const;
};

struct SmithResult {
  std::vector<Int> invariants;  // positive, each dividing the next
  int rank = 0;                 // = invariants.size()
};

// Invariant factors by integer row/column reduction with minimal-absolute-
// value pivoting (ties broken by row, then column index).
SmithResult smith_normal_form(const SparseIntMatrix& m);

struct DegreeHomology {
  int degree = 0;
  long long betti = 0;
  std::vector<Int> torsion;  // coefficients >= 2, each dividing the next
  bool truncated = false;    // basis possibly incomplete at this window
};

struct HomologySummary {
  std::vector<DegreeHomology> degrees;  // degrees 0 .. max_degree - 1
  std::vector<std::size_t> basis_sizes; // degrees 0 .. max_degree
};

// Matrix of the cobar differential from the domain basis (degree k) to the
// codomain basis (degree k-1); differential terms outside the codomain basis
// are projected away (possible only under a word cap).
SparseIntMatrix differential_matrix(const SSet& X,
                                    const std::vector<Monomial>& domain,
                                    const std::vector<Monomial>& codomain,
                                    CobarMode mode);

// Homology of the hom complex from vertex x to vertex y in degrees
// 0 .. max_degree - 1.  With a word cap every degree is flagged truncated
// when the space has degree-0 letters (the bases may then be incomplete).
HomologySummary hom_homology(const SSet& X, int x, int y, int max_degree,
                             CobarMode mode, int word_cap = -1);

}  // namespace pathcat
