#pragma once
// Quiver of a simplicial set's 1-skeleton and reduced words in the free
// groupoid it generates.

#include <string>
#include <vector>

#include "pathcat/sset.hpp"

namespace pathcat {

struct QuiverEdge {
  std::string id;
  int src = 0;  // vertex index (dim-0 nondegenerate simplex index)
  int dst = 0;
};

struct Quiver {
  std::vector<std::string> vertices;  // vertex ids by index
  std::vector<QuiverEdge> edges;      // sorted by id
};

Quiver quiver_of(const SSet& X);

// A formal composite of edges and inverse edges, written source-to-target:
// letters[0] starts at the word's source.
struct GroupoidLetter {
  int edge = 0;
  bool inverse = false;
  bool operator==(const GroupoidLetter&) const = default;
  auto operator<=>(const GroupoidLetter&) const = default;
};

struct GroupoidWord {
  int source = 0;  // vertex index (needed for the empty word)
  std::vector<GroupoidLetter> letters;
  bool operator==(const GroupoidWord&) const = default;
  auto operator<=>(const GroupoidWord&) const = default;
};

int word_target(const Quiver& Q, const GroupoidWord& w);
bool is_reduced(const GroupoidWord& w);
GroupoidWord reduce_word(const GroupoidWord& w);
std::string word_to_string(const Quiver& Q, const GroupoidWord& w);

// All reduced words from x to y with at most max_len letters, ordered by
// length, then lexicographically by (edge id, orientation) with the plain
// orientation before the inverse.
std::vector<GroupoidWord> enumerate_reduced_words(const Quiver& Q, int x,
                                                  int y, int max_len);

}  // namespace pathcat
