#include <set>

#include "doctest.h"
#include "pathcat/cobar.hpp"
#include "pathcat/quiver.hpp"

using namespace pathcat;

namespace {

Monomial mono(const SSet& X, const std::vector<std::string>& ids,
              CobarMode mode = CobarMode::kPlain, int src = 0) {
  std::vector<CobarLetter> letters;
  for (const auto& id : ids) letters.push_back(CobarLetter{X.ref(id), false});
  int s = letters.empty() ? src : source_vertex(X, letters[0].simplex).base_idx;
  return make_monomial(X, letters, s, mode);
}

}  // namespace

TEST_CASE("differential of a triangle letter") {
  SSet d2 = standard_simplex(2);
  CobarElement d = cobar_differential(d2, mono(d2, {"012"}), CobarMode::kPlain);
  REQUIRE(d.size() == 2);
  CHECK(d[mono(d2, {"02"})] == 1);
  CHECK(d[mono(d2, {"01", "12"})] == -1);
}

TEST_CASE("differential with curvature deletion on the thickened interval") {
  SSet k = k1_thickening(standard_simplex(1));
  Monomial t = mono(k, {"thk.01"});
  CobarElement d = cobar_differential(k, t, CobarMode::kPlain);
  Monomial unit;
  unit.src = unit.tgt = t.src;
  REQUIRE(d.size() == 2);
  CHECK(d[unit] == 1);  // loop letter with curvature 1 deletes to the unit
  CHECK(d[mono(k, {"01", "rev.01"})] == -1);
  CHECK(cobar_differential(k, d, CobarMode::kPlain).empty());
}

TEST_CASE("differential squares to zero on small bases") {
  std::vector<SSet> spaces;
  spaces.push_back(standard_simplex(2));
  spaces.push_back(standard_simplex(3));
  spaces.push_back(sphere(2));
  spaces.push_back(k1_thickening(standard_simplex(1)));
  spaces.push_back(wedge_of_spheres(1, 2));
  for (const SSet& X : spaces) {
    CAPTURE(X.name);
    for (CobarMode mode : {CobarMode::kPlain, CobarMode::kExtended}) {
      for (int x = 0; x < X.count(0); ++x) {
        for (int y = 0; y < X.count(0); ++y) {
          for (int deg = 0; deg <= 4; ++deg) {
            for (const Monomial& m : hom_basis(X, x, y, deg, mode, 4)) {
              CobarElement dd = cobar_differential(
                  X, cobar_differential(X, m, mode), mode);
              CAPTURE(monomial_to_string(X, m));
              CHECK(dd.empty());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("sphere bases are one monomial per degree") {
  SSet s2 = sphere(2);
  for (int deg = 0; deg <= 5; ++deg) {
    auto basis = hom_basis(s2, 0, 0, deg, CobarMode::kPlain, -1);
    REQUIRE(basis.size() == 1);
    CHECK(static_cast<int>(basis[0].letters.size()) == deg);
    CHECK(cobar_differential(s2, basis[0], CobarMode::kPlain).empty());
  }
  SSet s3 = sphere(3);
  for (int deg = 0; deg <= 6; ++deg) {
    auto basis = hom_basis(s3, 0, 0, deg, CobarMode::kPlain, -1);
    CHECK(basis.size() == (deg % 2 == 0 ? 1u : 0u));
  }
}

TEST_CASE("word cap is required when degree-0 letters exist") {
  SSet d2 = standard_simplex(2);
  CHECK_THROWS(hom_basis(d2, 0, 0, 1, CobarMode::kPlain, -1));
}

TEST_CASE("serre coproduct of a triangle letter") {
  SSet d2 = standard_simplex(2);
  Monomial s = mono(d2, {"012"});
  CobarTensor t = serre_coproduct(d2, s);
  REQUIRE(t.size() == 2);
  CHECK(t[{mono(d2, {"02"}), s}] == 1);
  CHECK(t[{s, mono(d2, {"01", "12"})}] == 1);
}

TEST_CASE("serre coproduct is counital and coassociative on samples") {
  SSet d3 = standard_simplex(3);
  std::vector<Monomial> samples = {
      mono(d3, {"0123"}),
      mono(d3, {"012", "23"}),
      mono(d3, {"01", "123"}),
      mono(d3, {"013"}),
  };
  for (const Monomial& m : samples) {
    CAPTURE(monomial_to_string(d3, m));
    CobarTensor t = serre_coproduct(d3, m);
    // Counit axioms.
    CobarElement left_counit, right_counit;
    for (const auto& [p, c] : t) {
      if (p.first.degree() == 0) cobar_add(left_counit, p.second, c);
      if (p.second.degree() == 0) cobar_add(right_counit, p.first, c);
    }
    CobarElement just_m;
    cobar_add(just_m, m, 1);
    CHECK(left_counit == just_m);
    CHECK(right_counit == just_m);
    // Coassociativity.
    std::map<std::tuple<Monomial, Monomial, Monomial>, Int> lhs, rhs;
    for (const auto& [p, c] : t) {
      for (const auto& [q, d] : serre_coproduct(d3, p.first)) {
        auto key = std::make_tuple(q.first, q.second, p.second);
        lhs[key] += c * d;
        if (lhs[key] == 0) lhs.erase(key);
      }
      for (const auto& [q, d] : serre_coproduct(d3, p.second)) {
        auto key = std::make_tuple(p.first, q.first, q.second);
        rhs[key] += c * d;
        if (rhs[key] == 0) rhs.erase(key);
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("serre coproduct is a chain map on samples") {
  SSet d3 = standard_simplex(3);
  SSet k = k1_thickening(standard_simplex(1));
  std::vector<std::pair<const SSet*, Monomial>> samples = {
      {&d3, mono(d3, {"0123"})},
      {&d3, mono(d3, {"012", "23"})},
      {&d3, mono(d3, {"01", "123"})},
      {&k, mono(k, {"thk.01"})},
      {&k, mono(k, {"thk.01", "thk.01"})},
  };
  for (const auto& [Xp, m] : samples) {
    const SSet& X = *Xp;
    CAPTURE(X.name);
    CAPTURE(monomial_to_string(X, m));
    CobarTensor lhs =
        serre_coproduct(X, cobar_differential(X, m, CobarMode::kPlain));
    CobarTensor rhs;
    for (const auto& [p, c] : serre_coproduct(X, m)) {
      for (const auto& [mm, d] :
           cobar_differential(X, p.first, CobarMode::kPlain)) {
        cobar_tensor_add(rhs, mm, p.second, c * d);
      }
      int kos = (p.first.degree() % 2 == 0) ? 1 : -1;
      for (const auto& [mm, d] :
           cobar_differential(X, p.second, CobarMode::kPlain)) {
        cobar_tensor_add(rhs, p.first, mm, c * d * kos);
      }
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("serre coproduct is multiplicative on samples") {
  SSet d3 = standard_simplex(3);
  Monomial a = mono(d3, {"012"});
  Monomial b = mono(d3, {"23"});
  CobarTensor lhs =
      serre_coproduct(d3, compose_monomials(d3, a, b, CobarMode::kPlain));
  CobarTensor rhs;
  for (const auto& [pa, ca] : serre_coproduct(d3, a)) {
    for (const auto& [pb, cb] : serre_coproduct(d3, b)) {
      int kos =
          ((pa.second.degree() * pb.first.degree()) % 2 == 0) ? 1 : -1;
      cobar_tensor_add(
          rhs, compose_monomials(d3, pa.first, pb.first, CobarMode::kPlain),
          compose_monomials(d3, pa.second, pb.second, CobarMode::kPlain),
          ca * cb * kos);
    }
  }
  CHECK(lhs == rhs);
}

TEST_CASE("set-like monomials agree with quiver paths") {
  for (const SSet& X : {standard_simplex(3), boundary(2)}) {
    CAPTURE(X.name);
    Quiver Q = quiver_of(X);
    for (int x = 0; x < X.count(0); ++x) {
      for (int y = 0; y < X.count(0); ++y) {
        auto setlike = setlike_monomials(X, x, y, 5, CobarMode::kPlain);
        // Plain paths in the quiver (no inverse letters), as id sequences.
        std::set<std::vector<std::string>> paths;
        {
          std::vector<std::vector<std::pair<std::string, int>>> out_of(
              Q.vertices.size());
          for (const QuiverEdge& e : Q.edges) {
            out_of[e.src].push_back({e.id, e.dst});
          }
          std::vector<std::string> cur;
          auto dfs = [&](auto&& self, int at) -> void {
            if (at == y) paths.insert(cur);
            if (cur.size() == 5) return;
            for (const auto& [id, to] : out_of[at]) {
              cur.push_back(id);
              self(self, to);
              cur.pop_back();
            }
          };
          // Quiver vertex indices and simplicial vertex indices agree by
          // construction (same enumeration of dimension-0 simplices).
          dfs(dfs, x);
        }
        std::set<std::vector<std::string>> setlike_ids;
        for (const Monomial& m : setlike) {
          std::vector<std::string> ids;
          for (const CobarLetter& l : m.letters) ids.push_back(X.id_of(l.simplex));
          setlike_ids.insert(ids);
        }
        CHECK(setlike_ids == paths);
      }
    }
  }
}

TEST_CASE("extended mode cancels inverse pairs") {
  SSet d2 = standard_simplex(2);
  std::vector<CobarLetter> letters = {
      CobarLetter{d2.ref("01"), false},
      CobarLetter{d2.ref("01"), true},
      CobarLetter{d2.ref("02"), false},
  };
  Monomial m = make_monomial(d2, letters, 0, CobarMode::kExtended);
  CHECK(m.letters.size() == 1);
  CHECK(d2.id_of(m.letters[0].simplex) == "02");
  CHECK(m.src == 0);
  CHECK(m.tgt == 2);

  // Extended set-like homs match reduced groupoid words.
  Quiver Q = quiver_of(boundary(2));
  SSet b2 = boundary(2);
  auto words = enumerate_reduced_words(Q, 0, 1, 3);
  auto monos = setlike_monomials(b2, 0, 1, 3, CobarMode::kExtended);
  CHECK(words.size() == monos.size());
}
