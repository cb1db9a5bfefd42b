#include <random>

#include "doctest.h"
#include "pathcat/operators.hpp"

using namespace pathcat;

TEST_CASE("normal form basics") {
  CHECK(identity_op().is_identity());
  CHECK(face_op(2).to_string() == "d2");
  CHECK(degeneracy_op(1).to_string() == "s1");
}

TEST_CASE("composition identities") {
  // d0 s0 = id
  CHECK(compose(face_op(0), degeneracy_op(0)).is_identity());
  // d0 d2 is already normal
  CHECK(compose(face_op(0), face_op(2)).to_string() == "d0d2");
  // s1 s0 is already normal
  CHECK(compose(degeneracy_op(1), degeneracy_op(0)).to_string() == "s1s0");
  // d1 s0 = s0 is wrong: d1 s0 = id; d2 s0 = s0 d1
  CHECK(compose(face_op(1), degeneracy_op(0)).is_identity());
  CHECK(compose(face_op(2), degeneracy_op(0)).to_string() == "s0d1");
  // s0 s0 = s1 s0
  CHECK(compose(degeneracy_op(0), degeneracy_op(0)).to_string() == "s1s0");
  // d0 d0 = d0 d1
  CHECK(compose(face_op(0), face_op(0)).to_string() == "d0d1");
}

TEST_CASE("composition is associative on random words") {
  std::mt19937 rng(12345);
  auto random_op = [&rng]() {
    std::uniform_int_distribution<int> len(0, 4), idx(0, 4), coin(0, 1);
    std::vector<OpLetter> letters;
    int n = len(rng);
    for (int k = 0; k < n; ++k) {
      letters.push_back(OpLetter{coin(rng) == 0, idx(rng)});
    }
    return normalize_word(letters);
  };
  for (int trial = 0; trial < 500; ++trial) {
    SimplicialOperator a = random_op(), b = random_op(), c = random_op();
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("normalization is confluent under randomized rewrite orders") {
  // Oracle: interpret the word as a composite of monotone maps on a concrete
  // simplex dimension and compare the induced maps; equal words must induce
  // equal monotone maps, and the normal form must induce the same map as the
  // original letter sequence.
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> len(1, 8), idx(0, 5), coin(0, 1);

  // Apply the letter sequence right-to-left to the vertex list 0..m of a
  // simplex: d_j deletes position j then renumbers nothing (we track the
  // monotone map by composing on vertex labels); s_i repeats position i.
  auto act = [](const std::vector<OpLetter>& letters, int m) {
    std::vector<int> verts(m + 1);
    for (int v = 0; v <= m; ++v) verts[v] = v;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      if (it->is_face) {
        verts.erase(verts.begin() + it->index);
      } else {
        verts.insert(verts.begin() + it->index, verts[it->index]);
      }
    }
    return verts;
  };
  auto min_dim_of = [](const std::vector<OpLetter>& letters) {
    // Minimal m for which the raw sequence is applicable.
    for (int m = 0; m < 64; ++m) {
      int dim = m;
      bool ok = true;
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
        if (it->is_face) {
          if (dim < 1 || it->index > dim) { ok = false; break; }
          --dim;
        } else {
          if (it->index > dim) { ok = false; break; }
          ++dim;
        }
      }
      if (ok) return m;
    }
    return 64;
  };

  for (int trial = 0; trial < 2000; ++trial) {
    int n = len(rng);
    std::vector<OpLetter> letters;
    for (int k = 0; k < n; ++k) letters.push_back(OpLetter{coin(rng) == 0, idx(rng)});

    // Randomized rewrite order: split the word at a random pivot, normalize
    // the two halves recursively in random order, then compose.
    auto normalize_random = [&rng](auto&& self, const std::vector<OpLetter>& w)
        -> SimplicialOperator {
      if (w.size() <= 1) return normalize_word(w);
      std::uniform_int_distribution<std::size_t> cut(1, w.size() - 1);
      std::size_t c = cut(rng);
      std::vector<OpLetter> left(w.begin(), w.begin() + c);
      std::vector<OpLetter> right(w.begin() + c, w.end());
      SimplicialOperator l = self(self, left), r = self(self, right);
      return compose(l, r);
    };

    SimplicialOperator direct = normalize_word(letters);
    SimplicialOperator randomized = normalize_random(normalize_random, letters);
    CHECK(direct == randomized);

    int m = std::max(min_dim_of(letters), direct.min_source_dim());
    if (m >= 64) continue;
    std::vector<OpLetter> normal_letters;
    for (int i : direct.degens) normal_letters.push_back(OpLetter{false, i});
    for (int j : direct.faces) normal_letters.push_back(OpLetter{true, j});
    CHECK(act(letters, m) == act(normal_letters, m));
  }
}

TEST_CASE("min_source_dim") {
  CHECK(identity_op().min_source_dim() == 0);
  CHECK(face_op(2).min_source_dim() == 2);
  CHECK(degeneracy_op(3).min_source_dim() == 3);
  CHECK(compose(face_op(0), face_op(0)).min_source_dim() == 2);
}
