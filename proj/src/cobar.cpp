#include "pathcat/cobar.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathcat/signs.hpp"

namespace pathcat {

void cobar_add(CobarElement& e, const Monomial& m, const Int& c) {
  if (c == 0) return;
  Int& v = e[m];
  v += c;
  if (v == 0) e.erase(m);
}

void cobar_tensor_add(CobarTensor& e, const Monomial& a, const Monomial& b,
                      const Int& c) {
  if (c == 0) return;
  Int& v = e[{a, b}];
  v += c;
  if (v == 0) e.erase({a, b});
}

std::string monomial_to_string(const SSet& X, const Monomial& m) {
  if (m.letters.empty()) return "1@" + X.simplex(0, m.src).id;
  std::string out;
  for (std::size_t k = 0; k < m.letters.size(); ++k) {
    if (k) out += ".";
    out += "[" + X.id_of(m.letters[k].simplex) + "]";
    if (m.letters[k].inverse) out += "^-1";
  }
  return out;
}

std::string element_to_string(const SSet& X, const CobarElement& e) {
  if (e.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : e) {
    if (!first) out += " + ";
    first = false;
    out += c.str() + "*" + monomial_to_string(X, m);
  }
  return out;
}

int letter_source(const SSet& X, const CobarLetter& l) {
  SimplexRef v = l.inverse ? target_vertex(X, l.simplex)
                           : source_vertex(X, l.simplex);
  return v.base_idx;
}

int letter_target(const SSet& X, const CobarLetter& l) {
  SimplexRef v = l.inverse ? source_vertex(X, l.simplex)
                           : target_vertex(X, l.simplex);
  return v.base_idx;
}

bool monomial_chained(const SSet& X, const Monomial& m) {
  int at = m.src;
  for (const CobarLetter& l : m.letters) {
    if (l.inverse && l.simplex.dim() != 1) return false;
    if (l.simplex.is_degenerate() || l.simplex.dim() < 1) return false;
    if (letter_source(X, l) != at) return false;
    at = letter_target(X, l);
  }
  return at == m.tgt;
}

bool is_reduced_monomial(const Monomial& m) {
  for (std::size_t k = 1; k < m.letters.size(); ++k) {
    if (m.letters[k].simplex == m.letters[k - 1].simplex &&
        m.letters[k].simplex.dim() == 1 &&
        m.letters[k].inverse != m.letters[k - 1].inverse) {
      return false;
    }
  }
  return true;
}

Monomial reduce_monomial(const Monomial& m) {
  Monomial out;
  out.src = m.src;
  out.tgt = m.tgt;
  for (const CobarLetter& l : m.letters) {
    if (!out.letters.empty() && out.letters.back().simplex == l.simplex &&
        l.simplex.dim() == 1 && out.letters.back().inverse != l.inverse) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

Monomial make_monomial(const SSet& X, std::vector<CobarLetter> letters,
                       int src, CobarMode mode) {
  Monomial m;
  m.src = src;
  m.letters = std::move(letters);
  int at = src;
  for (const CobarLetter& l : m.letters) at = letter_target(X, l);
  m.tgt = at;
  if (!monomial_chained(X, m)) {
    throw std::invalid_argument("cobar letters do not chain");
  }
  if (mode == CobarMode::kExtended) m = reduce_monomial(m);
  return m;
}

NecklaceMap monomial_to_necklace(const SSet& X, const Monomial& m) {
  std::vector<SimplexRef> beads;
  for (const CobarLetter& l : m.letters) {
    if (l.inverse) {
      throw std::invalid_argument("inverse letter has no cube structure");
    }
    beads.push_back(l.simplex);
  }
  return make_necklace_map(X, std::move(beads), m.src);
}

Monomial necklace_to_monomial(const NecklaceMap& n) {
  Monomial m;
  m.src = n.src;
  m.tgt = n.tgt;
  for (const SimplexRef& b : n.beads) m.letters.push_back(CobarLetter{b, false});
  return m;
}

std::vector<Monomial> hom_basis(const SSet& X, int x, int y, int degree,
                                CobarMode mode, int word_cap) {
  if (degree < 0) return {};
  bool has_edges = X.count(1) > 0;
  if (word_cap < 0) {
    if (has_edges) {
      throw std::invalid_argument(
          "word_cap required: the space has degree-0 letters");
    }
    word_cap = degree;  // every letter has positive degree
  }
  // Letters grouped by source vertex, in deterministic order.
  struct Cand {
    CobarLetter letter;
    int to;
  };
  std::vector<std::vector<Cand>> out_of(X.count(0));
  for (int d = 1; d <= X.top_dim(); ++d) {
    for (int k = 0; k < X.count(d); ++k) {
      CobarLetter l{SimplexRef{d, k, {}}, false};
      out_of[letter_source(X, l)].push_back(Cand{l, letter_target(X, l)});
      if (mode == CobarMode::kExtended && d == 1) {
        CobarLetter li{SimplexRef{d, k, {}}, true};
        out_of[letter_source(X, li)].push_back(Cand{li, letter_target(X, li)});
      }
    }
  }
  std::vector<Monomial> found;
  std::vector<CobarLetter> cur;
  auto dfs = [&](auto&& self, int at, int remaining) -> void {
    if (at == y && remaining == 0) {
      Monomial m;
      m.src = x;
      m.tgt = y;
      m.letters = cur;
      found.push_back(std::move(m));
    }
    if (static_cast<int>(cur.size()) == word_cap) return;
    for (const Cand& c : out_of[at]) {
      if (c.letter.degree() > remaining) continue;
      if (mode == CobarMode::kExtended && !cur.empty() &&
          cur.back().simplex == c.letter.simplex &&
          c.letter.simplex.dim() == 1 &&
          cur.back().inverse != c.letter.inverse) {
        continue;  // would cancel
      }
      cur.push_back(c.letter);
      self(self, c.to, remaining - c.letter.degree());
      cur.pop_back();
    }
  };
  dfs(dfs, x, degree);
  std::sort(found.begin(), found.end(), [](const Monomial& a, const Monomial& b) {
    if (a.letters.size() != b.letters.size()) {
      return a.letters.size() < b.letters.size();
    }
    return a < b;
  });
  return found;
}

CobarElement cobar_differential(const SSet& X, const Monomial& m,
                                CobarMode mode) {
  CobarElement out;
  int prefix_deg = 0;
  for (std::size_t k = 0; k < m.letters.size(); ++k) {
    const CobarLetter& l = m.letters[k];
    int prefix = (prefix_deg % 2 == 0) ? 1 : -1;
    int n = l.simplex.dim();
    if (!l.inverse && n >= 2) {
      // Desuspended modified boundary.
      for (int i = 1; i <= n - 1; ++i) {
        SimplexRef f = face_of(X, l.simplex, i);
        if (f.is_degenerate()) continue;
        std::vector<CobarLetter> letters = m.letters;
        letters[k] = CobarLetter{f, false};
        Monomial mm = make_monomial(X, std::move(letters), m.src, mode);
        cobar_add(out, mm,
                  Int(prefix) * signs::kLetterBoundarySign *
                      signs::inner_face_sign(i));
      }
      // Splitting coproduct.
      for (int t = 1; t <= n - 1; ++t) {
        SimplexRef front = range_face(X, l.simplex, 0, t);
        SimplexRef back = range_face(X, l.simplex, t, n);
        if (front.is_degenerate() || back.is_degenerate()) continue;
        std::vector<CobarLetter> letters = m.letters;
        letters[k] = CobarLetter{back, false};
        letters.insert(letters.begin() + static_cast<long>(k),
                       CobarLetter{front, false});
        Monomial mm = make_monomial(X, std::move(letters), m.src, mode);
        cobar_add(out, mm, Int(prefix) * signs::split_sign(t));
      }
      // Curvature deletion: only on loop letters (equal endpoints).
      if (n == 2 && is_loop(X, l.simplex)) {
        Int h = curvature_h(X, l.simplex);
        if (h != 0) {
          std::vector<CobarLetter> letters = m.letters;
          letters.erase(letters.begin() + static_cast<long>(k));
          Monomial mm = make_monomial(X, std::move(letters), m.src, mode);
          cobar_add(out, mm, Int(prefix) * signs::kCurvatureDeletionSign * h);
        }
      }
    }
    prefix_deg += l.degree();
  }
  return out;
}

CobarElement cobar_differential(const SSet& X, const CobarElement& e,
                                CobarMode mode) {
  CobarElement out;
  for (const auto& [m, c] : e) {
    for (const auto& [mm, cc] : cobar_differential(X, m, mode)) {
      cobar_add(out, mm, c * cc);
    }
  }
  return out;
}

Monomial compose_monomials(const SSet& X, const Monomial& a, const Monomial& b,
                           CobarMode mode) {
  if (a.tgt != b.src) throw std::invalid_argument("monomials do not compose");
  std::vector<CobarLetter> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return make_monomial(X, std::move(letters), a.src, mode);
}

CobarElement compose_elements(const SSet& X, const CobarElement& a,
                              const CobarElement& b, CobarMode mode) {
  CobarElement out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      cobar_add(out, compose_monomials(X, ma, mb, mode), ca * cb);
    }
  }
  return out;
}

CobarTensor serre_coproduct(const SSet& X, const Monomial& m) {
  NecklaceMap neck = monomial_to_necklace(X, m);
  int n = neck.cube_dim();
  CobarTensor out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    // Directions in S (bit j-1 set) go to the right factor.
    int sign_count = 0;
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        bool j_in = mask & (1u << (j - 1));
        bool k_in = mask & (1u << (k - 1));
        if (!j_in && k_in) ++sign_count;
      }
    }
    int coeff = (sign_count % 2 == 0) ? 1 : -1;
    // Composite cube faces are taken on the underlying simplices in one step
    // and normalized once at the end: single face maps do not descend to
    // normalized chains, so restricting one direction at a time would wrongly
    // kill terms whose intermediate face is degenerate.
    NecklaceMap raw_left, raw_right;
    raw_left.src = raw_right.src = neck.src;
    raw_left.tgt = raw_right.tgt = neck.tgt;
    int dir = 0;  // global cube direction counter, 1-based
    for (const SimplexRef& b : neck.beads) {
      int d = b.dim();
      std::vector<int> selected;  // interior vertices sent to the right
      for (int v = 1; v <= d - 1; ++v) {
        ++dir;
        if (mask & (1u << (dir - 1))) selected.push_back(v);
      }
      // Left factor: restrict unselected directions to 0, i.e. keep only the
      // endpoints and the selected interior vertices of the bead.
      SimplexRef left_bead = b;
      std::vector<bool> keep(d + 1, false);
      keep[0] = keep[d] = true;
      for (int v : selected) keep[v] = true;
      for (int v = d; v >= 0; --v) {
        if (!keep[v]) left_bead = face_of(X, left_bead, v);
      }
      raw_left.beads.push_back(left_bead);
      // Right factor: restrict selected directions to 1, i.e. split the bead
      // at each selected interior vertex.
      int prev = 0;
      for (int v : selected) {
        raw_right.beads.push_back(range_face(X, b, prev, v));
        prev = v;
      }
      raw_right.beads.push_back(range_face(X, b, prev, d));
    }
    CubeTerm left = normalize_beads(X, raw_left);
    if (left.coeff == 0) continue;
    CubeTerm right = normalize_beads(X, raw_right);
    if (right.coeff == 0) continue;
    cobar_tensor_add(out, necklace_to_monomial(left.map),
                     necklace_to_monomial(right.map),
                     Int(coeff) * left.coeff * right.coeff);
  }
  return out;
}

CobarTensor serre_coproduct(const SSet& X, const CobarElement& e) {
  CobarTensor out;
  for (const auto& [m, c] : e) {
    for (const auto& [p, cc] : serre_coproduct(X, m)) {
      cobar_tensor_add(out, p.first, p.second, c * cc);
    }
  }
  return out;
}

Int cobar_counit(const CobarElement& e) {
  Int out = 0;
  for (const auto& [m, c] : e) {
    if (m.degree() == 0) out += c;
  }
  return out;
}

std::vector<Monomial> setlike_monomials(const SSet& X, int x, int y,
                                        int max_len, CobarMode mode) {
  return hom_basis(X, x, y, 0, mode, max_len);
}

}  // namespace pathcat
