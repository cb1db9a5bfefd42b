#include "pathcat/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcat {

void SparseIntMatrix::set(int r, int c, const Int& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) {
    throw std::out_of_range("matrix index out of range");
  }
  if (v == 0) {
    entries.erase({r, c});
  } else {
    entries[{r, c}] = v;
  }
}

Int SparseIntMatrix::get(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Int(0) : it->second;
}

SmithResult smith_normal_form(const SparseIntMatrix& m) {
  // Dense working copy; the hom-complex matrices are small.
  std::vector<std::vector<Int>> a(m.rows, std::vector<Int>(m.cols, 0));
  for (const auto& [rc, v] : m.entries) a[rc.first][rc.second] = v;

  SmithResult out;
  int t = 0;
  int n = std::min(m.rows, m.cols);
  while (t < n) {
    // Minimal-absolute-value nonzero pivot in the trailing submatrix,
    // ties broken by (row, col).
    int pr = -1, pc = -1;
    Int best = 0;
    for (int r = t; r < m.rows; ++r) {
      for (int c = t; c < m.cols; ++c) {
        if (a[r][c] == 0) continue;
        Int v = abs(a[r][c]);
        if (pr < 0 || v < best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;  // trailing submatrix is zero
    std::swap(a[t], a[pr]);
    for (int r = 0; r < m.rows; ++r) std::swap(a[r][t], a[r][pc]);

    bool clean = true;
    // Clear column t by row operations.
    for (int r = t + 1; r < m.rows; ++r) {
      if (a[r][t] == 0) continue;
      Int q = a[r][t] / a[t][t];
      for (int c = t; c < m.cols; ++c) a[r][c] -= q * a[t][c];
      if (a[r][t] != 0) clean = false;
    }
    // Clear row t by column operations.
    for (int c = t + 1; c < m.cols; ++c) {
      if (a[t][c] == 0) continue;
      Int q = a[t][c] / a[t][t];
      for (int r = t; r < m.rows; ++r) a[r][c] -= q * a[r][t];
      if (a[t][c] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; re-pivot
    // Ensure the pivot divides the trailing submatrix.
    bool divides = true;
    for (int r = t + 1; r < m.rows && divides; ++r) {
      for (int c = t + 1; c < m.cols && divides; ++c) {
        if (a[r][c] % a[t][t] != 0) {
          for (int cc = t; cc < m.cols; ++cc) a[t][cc] += a[r][cc];
          divides = false;
        }
      }
    }
    if (!divides) continue;
    out.invariants.push_back(abs(a[t][t]));
    ++t;
  }
  out.rank = static_cast<int>(out.invariants.size());
  return out;
}

SparseIntMatrix differential_matrix(const SSet& X,
                                    const std::vector<Monomial>& domain,
                                    const std::vector<Monomial>& codomain,
                                    CobarMode mode) {
  std::map<Monomial, int> index;
  for (std::size_t k = 0; k < codomain.size(); ++k) {
    index[codomain[k]] = static_cast<int>(k);
  }
  SparseIntMatrix m;
  m.rows = static_cast<int>(codomain.size());
  m.cols = static_cast<int>(domain.size());
  for (std::size_t c = 0; c < domain.size(); ++c) {
    for (const auto& [mono, coeff] : cobar_differential(X, domain[c], mode)) {
      auto it = index.find(mono);
      if (it == index.end()) continue;  // outside the truncation window
      m.set(it->second, static_cast<int>(c), m.get(it->second, c) + coeff);
    }
  }
  return m;
}

HomologySummary hom_homology(const SSet& X, int x, int y, int max_degree,
                             CobarMode mode, int word_cap) {
  if (max_degree < 1) throw std::invalid_argument("max_degree must be >= 1");
  bool capped = word_cap >= 0 && X.count(1) > 0;
  std::vector<std::vector<Monomial>> bases;
  for (int deg = 0; deg <= max_degree; ++deg) {
    // With a word cap, degree k keeps words of length <= cap - k; the
    // differential lowers the degree by one and lengthens a word by at most
    // one, so these windows form an honest subcomplex.
    int cap = word_cap < 0 ? word_cap : std::max(word_cap - deg, 0);
    bases.push_back(hom_basis(X, x, y, deg, mode, cap));
  }
  // rank of the differential C_k -> C_{k-1} and its torsion invariants.
  std::vector<int> rank(max_degree + 2, 0);
  std::vector<std::vector<Int>> inv(max_degree + 2);
  for (int k = 1; k <= max_degree; ++k) {
    SmithResult s = smith_normal_form(
        differential_matrix(X, bases[k], bases[k - 1], mode));
    rank[k] = s.rank;
    inv[k] = s.invariants;
  }
  HomologySummary out;
  for (const auto& b : bases) out.basis_sizes.push_back(b.size());
  for (int k = 0; k + 1 <= max_degree; ++k) {
    DegreeHomology h;
    h.degree = k;
    h.betti = static_cast<long long>(bases[k].size()) - rank[k] - rank[k + 1];
    for (const Int& d : inv[k + 1]) {
      if (d >= 2) h.torsion.push_back(d);
    }
    h.truncated = capped;
    out.degrees.push_back(h);
  }
  return out;
}

}  // namespace pathcat
