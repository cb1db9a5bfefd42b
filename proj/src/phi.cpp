#include "pathcat/phi.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pathcat/necklace.hpp"

namespace pathcat {

namespace {

void require_reduced(const SSet& X) {
  if (X.count(0) != 1) {
    throw std::invalid_argument("space is not reduced (needs a single vertex)");
  }
}

int popcount(unsigned x) {
  int c = 0;
  for (; x; x >>= 1) c += static_cast<int>(x & 1u);
  return c;
}

}  // namespace

bool gkan_degenerate(const SSet& X, const GKanWord& w) {
  for (int i = 0; i < w.level; ++i) {
    if (gkan_degeneracy(X, gkan_face(X, w, i), i) == w) return true;
  }
  return false;
}

void gchain_add(const SSet& X, GChain& c, const GKanWord& w, const Int& coeff) {
  if (coeff == 0) return;
  GKanWord n = gkan_normalize(X, w);
  if (gkan_degenerate(X, n)) return;
  Int& v = c[n];
  v += coeff;
  if (v == 0) c.erase(n);
}

void gtensor_add(const SSet& X, GTensor& c, const GKanWord& a,
                 const GKanWord& b, const Int& coeff) {
  if (coeff == 0) return;
  GKanWord na = gkan_normalize(X, a);
  GKanWord nb = gkan_normalize(X, b);
  if (gkan_degenerate(X, na) || gkan_degenerate(X, nb)) return;
  Int& v = c[{na, nb}];
  v += coeff;
  if (v == 0) c.erase({na, nb});
}

GChain gchain_boundary(const SSet& X, const GChain& c) {
  GChain out;
  for (const auto& [w, coeff] : c) {
    for (int i = 0; i <= w.level && w.level >= 1; ++i) {
      gchain_add(X, out, gkan_face(X, w, i),
                 (i % 2 == 0) ? coeff : -coeff);
    }
  }
  return out;
}

GChain gchain_product(const SSet& X, const GChain& a, const GChain& b) {
  GChain out;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      int p = u.level, q = v.level;
      for (unsigned mask = 0; mask < (1u << (p + q)); ++mask) {
        if (popcount(mask) != p) continue;
        // Positions in mask are the steps where the left factor advances; it
        // is degenerated at the complementary positions, and conversely.
        int inversions = 0;
        for (int x = 0; x < p + q; ++x) {
          for (int y = 0; y < x; ++y) {
            if ((mask & (1u << x)) && !(mask & (1u << y))) ++inversions;
          }
        }
        GKanWord su = u;
        for (int pos = 0; pos < p + q; ++pos) {
          if (!(mask & (1u << pos))) su = gkan_degeneracy(X, su, pos);
        }
        GKanWord sv = v;
        for (int pos = 0; pos < p + q; ++pos) {
          if (mask & (1u << pos)) sv = gkan_degeneracy(X, sv, pos);
        }
        Int term = cu * cv;
        if (inversions % 2 != 0) term = -term;
        gchain_add(X, out, gkan_mult(X, su, sv), term);
      }
    }
  }
  return out;
}

GTensor gchain_aw(const SSet& X, const GChain& c) {
  GTensor out;
  for (const auto& [w, coeff] : c) {
    for (int i = 0; i <= w.level; ++i) {
      GKanWord front = w;
      for (int k = w.level; k > i; --k) front = gkan_face(X, front, k);
      GKanWord back = w;
      for (int k = 0; k < i; ++k) back = gkan_face(X, back, 0);
      gtensor_add(X, out, front, back, coeff);
    }
  }
  return out;
}

std::string gchain_to_string(const SSet& X, const GChain& c) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, coeff] : c) {
    if (!first) out += " + ";
    first = false;
    out += coeff.str() + "*" + gkan_to_string(X, w);
  }
  return out;
}

GChain phi_letter(const SSet& X, const CobarLetter& l) {
  require_reduced(X);
  int n = l.simplex.dim();
  if (n < 1 || l.simplex.is_degenerate()) {
    throw std::invalid_argument("letter must be a nondegenerate simplex of "
                                "dimension >= 1");
  }
  if (l.inverse && n != 1) {
    throw std::invalid_argument("only edge letters may be inverted");
  }
  SSet delta = standard_simplex(n);
  std::map<std::vector<int>, int> sign_of;
  for (const TriangTerm& t : triangulation_terms(n - 1)) {
    sign_of[t.flip_order] = t.sign;
  }
  GChain out;
  for (const Flag& f : top_flags(n, 0, n)) {
    // The flag adds the interior vertices bottom-up in the reverse of its
    // top-down addition sequence; that order is the coordinate flip order of
    // the corresponding simplex of the triangulated mapping cube.
    std::vector<int> flips = flag_alpha(f);
    std::reverse(flips.begin(), flips.end());
    GKanWord w = push_gkan_word(X, l.simplex, delta, eta(delta, sz(f)));
    if (l.inverse) w = gkan_inverse(w);
    gchain_add(X, out, w, sign_of.at(flips));
  }
  if (n == 1) {
    gchain_add(X, out, GKanWord{}, -1);  // group element minus the identity
  }
  return out;
}

GChain phi(const SSet& X, const Monomial& m) {
  require_reduced(X);
  GChain out;
  gchain_add(X, out, GKanWord{}, 1);
  for (const CobarLetter& l : m.letters) {
    out = gchain_product(X, out, phi_letter(X, l));
  }
  return out;
}

GChain phi(const SSet& X, const CobarElement& e) {
  GChain out;
  for (const auto& [m, c] : e) {
    for (const auto& [w, cc] : phi(X, m)) {
      gchain_add(X, out, w, c * cc);
    }
  }
  return out;
}

CobarElement edge_unit_shift(const SSet& X, const Monomial& m, int delta,
                             CobarMode mode) {
  require_reduced(X);
  std::vector<int> edge_positions;
  for (std::size_t k = 0; k < m.letters.size(); ++k) {
    if (m.letters[k].degree() == 0) {
      edge_positions.push_back(static_cast<int>(k));
    }
  }
  CobarElement out;
  int e = static_cast<int>(edge_positions.size());
  for (unsigned mask = 0; mask < (1u << e); ++mask) {
    std::vector<CobarLetter> letters;
    for (std::size_t k = 0; k < m.letters.size(); ++k) {
      bool drop = false;
      for (int j = 0; j < e; ++j) {
        if (edge_positions[j] == static_cast<int>(k) && (mask & (1u << j))) {
          drop = true;
        }
      }
      if (!drop) letters.push_back(m.letters[k]);
    }
    int dropped = popcount(mask);
    Int coeff = 1;
    for (int j = 0; j < dropped; ++j) coeff *= delta;
    cobar_add(out, make_monomial(X, std::move(letters), m.src, mode), coeff);
  }
  return out;
}

CobarElement edge_unit_shift(const SSet& X, const CobarElement& e, int delta,
                             CobarMode mode) {
  CobarElement out;
  for (const auto& [m, c] : e) {
    for (const auto& [mm, cc] : edge_unit_shift(X, m, delta, mode)) {
      cobar_add(out, mm, c * cc);
    }
  }
  return out;
}

CobarElement phi_differential(const SSet& X, const Monomial& m,
                              CobarMode mode) {
  CobarElement shifted = edge_unit_shift(X, m, -1, mode);
  CobarElement d = cobar_differential(X, shifted, mode);
  return edge_unit_shift(X, d, 1, mode);
}

CobarTensor phi_coproduct(const SSet& X, const Monomial& m) {
  CobarElement shifted = edge_unit_shift(X, m, -1, CobarMode::kPlain);
  CobarTensor out;
  for (const auto& [mono, c] : shifted) {
    for (const auto& [pair, cc] : serre_coproduct(X, mono)) {
      CobarElement left = edge_unit_shift(X, pair.first, 1, CobarMode::kPlain);
      CobarElement right =
          edge_unit_shift(X, pair.second, 1, CobarMode::kPlain);
      for (const auto& [a, ca] : left) {
        for (const auto& [b, cb] : right) {
          cobar_tensor_add(out, a, b, c * cc * ca * cb);
        }
      }
    }
  }
  return out;
}

}  // namespace pathcat
