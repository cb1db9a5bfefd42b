#include <set>

#include "doctest.h"
#include "pathcat/szczarba.hpp"

using namespace pathcat;

namespace {

Flag make_flag(int n, int p, int q, const std::vector<std::vector<int>>& sets) {
  Flag f;
  f.n = n;
  f.p = p;
  f.q = q;
  for (const auto& s : sets) {
    unsigned m = 0;
    for (int v : s) m |= 1u << v;
    f.sets.push_back(m);
  }
  return f;
}

}  // namespace

TEST_CASE("comparison operator recursion examples") {
  CHECK(comparison_operator(1, 0, {}).is_identity());
  CHECK(comparison_operator(3, 2, {1, 0}).to_string() == "s1s0");
  CHECK(comparison_operator(3, 1, {1, 0}).to_string() == "s1");
  CHECK(comparison_operator(3, 0, {1, 0}).to_string() == "s0d1");
}

TEST_CASE("alpha, beta, gamma of maximal flags") {
  Flag f = make_flag(3, 0, 3, {{0, 3}, {0, 1, 3}, {0, 1, 2, 3}});
  CHECK(flag_valid(f));
  CHECK(flag_nondegenerate(f));
  CHECK(flag_alpha(f) == std::vector<int>{2, 1});
  CHECK(flag_gamma(f) == std::vector<int>{1, 0});
}

TEST_CASE("worked comparison example on the tetrahedron") {
  Flag f = make_flag(3, 0, 3, {{0, 3}, {0, 1, 3}, {0, 1, 2, 3}});
  GWord w = sz(f);
  REQUIRE(w.ops.size() == 3);
  CHECK(w.level == 2);
  CHECK(w.ops[0].to_string() == "s0d1");  // g1
  CHECK(w.ops[1].to_string() == "s1");    // g2
  CHECK(w.ops[2].to_string() == "s1s0");  // g3
  CHECK(gword_valid(w));
}

TEST_CASE("maximal flag counts and gamma bijectivity") {
  auto expect = [](int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q <= n; ++q) {
        auto flags = top_flags(n, p, q);
        CHECK(static_cast<long long>(flags.size()) == expect(q - p - 1));
        std::set<std::vector<int>> gammas;
        for (const Flag& f : flags) {
          std::vector<int> g = flag_gamma(f);
          // gamma lies in the index set: 0 <= g_k <= (q-p-1) - (k+1).
          REQUIRE(static_cast<int>(g.size()) == q - p - 1);
          for (std::size_t k = 0; k < g.size(); ++k) {
            CHECK(g[k] >= 0);
            CHECK(g[k] <= q - p - 1 - static_cast<int>(k) - 1);
          }
          gammas.insert(g);
        }
        CHECK(gammas.size() == flags.size());
      }
    }
  }
}

TEST_CASE("comparison map is simplicial") {
  for (auto [n, p, q] : std::vector<std::tuple<int, int, int>>{
           {2, 0, 2}, {3, 0, 3}, {3, 0, 2}, {3, 1, 3}}) {
    for (const Flag& f : top_flags(n, p, q)) {
      int lev = f.level();
      for (int i = 0; i <= lev; ++i) {
        CHECK(sz(flag_face(f, i)) == gword_face(sz(f), i));
        CHECK(sz(flag_degeneracy(f, i)) == gword_degeneracy(sz(f), i));
      }
      // One second-level spot check.
      if (lev >= 2) {
        Flag d0 = flag_face(f, 0);
        for (int i = 0; i <= lev - 1; ++i) {
          CHECK(sz(flag_face(d0, i)) == gword_face(sz(d0), i));
        }
      }
    }
  }
}

TEST_CASE("comparison map matches the operator recursion on maximal flags") {
  // For level-(q-p-1) flags ending at q = n the closed form and the
  // recursion D^{q-p}_{j,gamma} agree letter for letter.
  for (int n = 1; n <= 5; ++n) {
    for (int p = 0; p < n; ++p) {
      int q = n;
      for (const Flag& f : top_flags(n, p, q)) {
        GWord w = sz(f);
        std::vector<int> gamma = flag_gamma(f);
        REQUIRE(static_cast<int>(w.ops.size()) == q - p);
        for (int jp = 0; jp < q - p; ++jp) {
          CHECK(w.ops[jp] == comparison_operator(q - p, jp, gamma));
        }
      }
    }
  }
}

TEST_CASE("comparison map is natural for cofaces and codegeneracies") {
  for (auto [n, p, q] : std::vector<std::tuple<int, int, int>>{
           {2, 0, 2}, {3, 0, 3}, {3, 0, 2}, {3, 1, 3}, {4, 1, 4}}) {
    for (const Flag& f : top_flags(n, p, q)) {
      for (int i = 0; i <= n + 1; ++i) {
        CHECK(sz(flag_coface(f, i)) == cosimplicial_face(sz(f), i));
      }
      for (int i = 0; i <= n - 1; ++i) {
        CHECK(sz(flag_codegeneracy(f, i)) ==
              cosimplicial_degeneracy(sz(f), i));
      }
    }
  }
}

TEST_CASE("comparison map is monoidal") {
  // Compose flags over Delta^4: 0 -> 2 -> 4.
  for (const Flag& a : top_flags(4, 0, 2)) {
    for (const Flag& b : top_flags(4, 2, 4)) {
      REQUIRE(a.level() == b.level());
      Flag ab = compose_flags(a, b);
      CHECK(sz(ab) == gword_compose(sz(a), sz(b)));
    }
  }
  // Degenerate flags compose as well.
  Flag a = flag_degeneracy(top_flags(3, 0, 2)[0], 0);
  Flag b = flag_degeneracy(flag_degeneracy(top_flags(3, 2, 3)[0], 0), 0);
  CHECK(sz(compose_flags(a, b)) == gword_compose(sz(a), sz(b)));
}

TEST_CASE("cosimplicial structure on g-words") {
  // Simplicial/cosimplicial identity spot checks on generators.
  GWord g1 = generator_gword(1, 1);
  // d^1 d^0 = d^0 d^0 ... cosimplicial identity d^j d^i = d^i d^{j-1}, i < j.
  for (int n : {1, 2}) {
    for (int j = 1; j <= n; ++j) {
      GWord g = generator_gword(n, j);
      for (int ii = 0; ii <= n + 1; ++ii) {
        for (int jj = ii + 1; jj <= n + 2; ++jj) {
          CHECK(cosimplicial_face(cosimplicial_face(g, ii), jj) ==
                cosimplicial_face(cosimplicial_face(g, jj - 1), ii));
        }
      }
    }
  }
  (void)g1;
}

TEST_CASE("eta is natural for cofaces") {
  for (int n : {1, 2}) {
    SSet dn = standard_simplex(n);
    SSet dn1 = standard_simplex(n + 1);
    SimplexRef top1 = dn1.ref(n + 1 >= 10 ? "" : [&] {
      std::string id;
      for (int v = 0; v <= n + 1; ++v) id += std::to_string(v);
      return id;
    }());
    std::vector<GWord> words;
    for (int j = 1; j <= n; ++j) {
      words.push_back(generator_gword(n, j));
      words.push_back(gword_degeneracy(generator_gword(n, j), 0));
    }
    if (n == 2) {
      words.push_back(gword_compose(
          gword_degeneracy(generator_gword(2, 1), 0),
          gword_degeneracy(gword_degeneracy(generator_gword(2, 2), 0), 0)));
    }
    for (const GWord& w : words) {
      for (int i = 0; i <= n + 1; ++i) {
        GKanWord lhs = eta(dn1, cosimplicial_face(w, i));
        SimplexRef sigma = face_of(dn1, top1, i);
        GKanWord rhs = push_gkan_word(dn1, sigma, dn, eta(dn, w));
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(w.to_string());
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("loop groupoid words satisfy the simplicial identities") {
  SSet k = k1_thickening(standard_simplex(1));
  GKanWord w;
  w.level = 1;
  w.letters.push_back(GKanLetter{k.ref("thk.01"), false});
  w.letters.push_back(GKanLetter{k.ref("thk.01"), true});
  w.letters.push_back(GKanLetter{k.ref("thk.01"), false});
  GKanWord wn = gkan_normalize(k, w);
  CHECK(wn.letters.size() == 1);

  // d_i d_j = d_{j-1} d_i (i < j) on level-2 words obtained by degeneracies.
  for (int s0 : {0, 1}) {
    GKanWord w2 = gkan_degeneracy(k, wn, s0);
    REQUIRE(w2.level == 2);
    for (int j = 1; j <= 2; ++j) {
      for (int i = 0; i < j; ++i) {
        CHECK(gkan_face(k, gkan_face(k, w2, j), i) ==
              gkan_face(k, gkan_face(k, w2, i), j - 1));
      }
    }
    // s_i then d_i and d_{i+1} give back the word.
    CHECK(gkan_face(k, w2, s0) == wn);
    CHECK(gkan_face(k, w2, s0 + 1) == wn);
  }

  // Inverses multiply to the identity.
  CHECK(gkan_mult(k, wn, gkan_inverse(wn)).letters.empty());
}

TEST_CASE("elided generators vanish") {
  SSet d2 = standard_simplex(2);
  GKanWord w;
  w.level = 1;
  w.letters.push_back(GKanLetter{degeneracy_of(d2, d2.ref("01"), 0), false});
  CHECK(gkan_normalize(d2, w).letters.empty());
}
