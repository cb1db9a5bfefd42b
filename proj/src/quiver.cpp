#include "pathcat/quiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcat {

Quiver quiver_of(const SSet& X) {
  Quiver Q;
  for (int k = 0; k < X.count(0); ++k) Q.vertices.push_back(X.simplex(0, k).id);
  for (int k = 0; k < X.count(1); ++k) {
    const NondegSimplex& e = X.simplex(1, k);
    // d1 = source, d0 = target; both faces of an edge are vertices.
    Q.edges.push_back(QuiverEdge{e.id, e.faces[1].base_idx, e.faces[0].base_idx});
  }
  std::sort(Q.edges.begin(), Q.edges.end(),
            [](const QuiverEdge& a, const QuiverEdge& b) { return a.id < b.id; });
  return Q;
}

int word_target(const Quiver& Q, const GroupoidWord& w) {
  int at = w.source;
  for (const GroupoidLetter& l : w.letters) {
    const QuiverEdge& e = Q.edges.at(l.edge);
    int from = l.inverse ? e.dst : e.src;
    int to = l.inverse ? e.src : e.dst;
    if (from != at) throw std::invalid_argument("word does not compose");
    at = to;
  }
  return at;
}

bool is_reduced(const GroupoidWord& w) {
  for (std::size_t k = 1; k < w.letters.size(); ++k) {
    if (w.letters[k].edge == w.letters[k - 1].edge &&
        w.letters[k].inverse != w.letters[k - 1].inverse) {
      return false;
    }
  }
  return true;
}

GroupoidWord reduce_word(const GroupoidWord& w) {
  GroupoidWord out;
  out.source = w.source;
  for (const GroupoidLetter& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().edge == l.edge &&
        out.letters.back().inverse != l.inverse) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

std::string word_to_string(const Quiver& Q, const GroupoidWord& w) {
  if (w.letters.empty()) return "id@" + Q.vertices.at(w.source);
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ".";
    out += Q.edges.at(w.letters[k].edge).id;
    if (w.letters[k].inverse) out += "^-1";
  }
  return out;
}

std::vector<GroupoidWord> enumerate_reduced_words(const Quiver& Q, int x,
                                                  int y, int max_len) {
  // Letters available at a vertex, ordered by (edge id, orientation).
  struct Step {
    GroupoidLetter letter;
    int to;
  };
  std::vector<std::vector<Step>> out_of(Q.vertices.size());
  for (int e = 0; e < static_cast<int>(Q.edges.size()); ++e) {
    out_of[Q.edges[e].src].push_back(Step{{e, false}, Q.edges[e].dst});
    out_of[Q.edges[e].dst].push_back(Step{{e, true}, Q.edges[e].src});
  }
  // Q.edges is id-sorted; within one edge the plain orientation precedes the
  // inverse, so a stable sort by edge index (then orientation) realizes the
  // (edge id, orientation) order.
  for (auto& steps : out_of) {
    std::stable_sort(steps.begin(), steps.end(), [](const Step& a, const Step& b) {
      if (a.letter.edge != b.letter.edge) return a.letter.edge < b.letter.edge;
      return a.letter.inverse < b.letter.inverse;
    });
  }
  std::vector<GroupoidWord> found;
  GroupoidWord cur;
  cur.source = x;
  auto dfs = [&](auto&& self, int at, int len) -> void {
    if (at == y) found.push_back(cur);
    if (len == max_len) return;
    for (const Step& s : out_of[at]) {
      if (!cur.letters.empty() && cur.letters.back().edge == s.letter.edge &&
          cur.letters.back().inverse != s.letter.inverse) {
        continue;  // not reduced
      }
      cur.letters.push_back(s.letter);
      self(self, s.to, len + 1);
      cur.letters.pop_back();
    }
  };
  dfs(dfs, x, 0);
  std::stable_sort(found.begin(), found.end(),
                   [](const GroupoidWord& a, const GroupoidWord& b) {
                     if (a.letters.size() != b.letters.size()) {
                       return a.letters.size() < b.letters.size();
                     }
                     return a.letters < b.letters;
                   });
  return found;
}

}  // namespace pathcat
