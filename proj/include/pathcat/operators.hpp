#pragma once
// Simplicial operator words in Eilenberg-Zilber normal form:
//   s_{i1} ... s_{ip} d_{j1} ... d_{jq}
// with i1 > i2 > ... > ip and j1 < j2 < ... < jq.  Letters act on simplices
// right-to-left (the face block is applied first).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace pathcat {

struct SimplicialOperator {
  std::vector<int> degens;  // strictly decreasing s-indices
  std::vector<int> faces;   // strictly increasing d-indices

  bool is_identity() const { return degens.empty() && faces.empty(); }

  // Dimension shift: an operator sends an n-simplex to an (n + shift)-simplex.
  int dim_shift() const {
    return static_cast<int>(degens.size()) - static_cast<int>(faces.size());
  }

  // Smallest source dimension the word can legally act on.
  int min_source_dim() const;

  bool operator==(const SimplicialOperator&) const = default;
  auto operator<=>(const SimplicialOperator&) const = default;

  std::string to_string() const;
};

SimplicialOperator identity_op();
SimplicialOperator face_op(int i);
SimplicialOperator degeneracy_op(int i);

// Build the normal form of an arbitrary letter sequence (applied right-to-left).
struct OpLetter {
  bool is_face = true;
  int index = 0;
};
SimplicialOperator normalize_word(const std::vector<OpLetter>& letters);

// Push a single face / degeneracy onto the left (outermost position) of a
// normal form, producing a normal form again.
void prepend_face(SimplicialOperator& op, int c);
void prepend_degeneracy(SimplicialOperator& op, int c);

// compose(outer, inner) is "outer after inner".
SimplicialOperator compose(const SimplicialOperator& outer,
                           const SimplicialOperator& inner);

// The word of a pure degeneracy block (indices must be strictly decreasing).
SimplicialOperator degeneracy_word(const std::vector<int>& degens);

// Total collapse of an n-simplex to repeated degeneracies of a vertex:
// s_{n-1} s_{n-2} ... s_0 (n letters).
std::vector<int> total_degeneracy_indices(int n);

}  // namespace pathcat
