#include "pathcat/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>

#include "pathcat/chains.hpp"
#include "pathcat/cobar.hpp"
#include "pathcat/necklace.hpp"
#include "pathcat/phi.hpp"
#include "pathcat/quiver.hpp"
#include "pathcat/szczarba.hpp"

namespace pathcat {

namespace {

void push_check(std::vector<CheckResult>& out, const std::string& name,
                bool ok, const std::string& witness) {
  out.push_back(CheckResult{name, ok, ok ? std::string() : witness});
}

// --- coalgebra --------------------------------------------------------------

void suite_coalgebra(std::vector<CheckResult>& out) {
  for (const auto& [name, X] : verification_corpus()) {
    std::string w = check_counit_axiom(X);
    push_check(out, "coalgebra-counit:" + name, w.empty(), w);
    w = check_coderivation(X);
    push_check(out, "coalgebra-coderivation:" + name, w.empty(), w);
    w = check_curvature_identity(X);
    push_check(out, "coalgebra-curvature:" + name, w.empty(), w);
  }
}

// --- cobar ------------------------------------------------------------------

void suite_cobar(std::vector<CheckResult>& out) {
  for (const auto& [name, X] : verification_corpus()) {
    std::string witness;
    for (int x = 0; x < X.count(0) && witness.empty(); ++x) {
      for (int y = 0; y < X.count(0) && witness.empty(); ++y) {
        for (int deg = 0; deg <= 6 && witness.empty(); ++deg) {
          for (const Monomial& m :
               hom_basis(X, x, y, deg, CobarMode::kPlain, 6)) {
            CobarElement dd = cobar_differential(
                X, cobar_differential(X, m, CobarMode::kPlain),
                CobarMode::kPlain);
            if (!dd.empty()) {
              witness = "D(D(" + monomial_to_string(X, m) + ")) != 0";
              break;
            }
          }
        }
      }
    }
    push_check(out, "cobar-d-squared:" + name, witness.empty(), witness);
  }
  // Set-like monomials match free-category path enumeration.
  for (const std::string& name : {std::string("delta:3"),
                                  std::string("boundary:2")}) {
    SSet X = name == "delta:3" ? standard_simplex(3) : boundary(2);
    Quiver Q = quiver_of(X);
    std::string witness;
    for (int x = 0; x < X.count(0) && witness.empty(); ++x) {
      for (int y = 0; y < X.count(0); ++y) {
        std::set<std::vector<std::string>> paths;
        for (const GroupoidWord& w : enumerate_reduced_words(Q, x, y, 5)) {
          bool positive = true;
          for (const GroupoidLetter& l : w.letters) {
            if (l.inverse) positive = false;
          }
          if (!positive) continue;
          std::vector<std::string> ids;
          for (const GroupoidLetter& l : w.letters) {
            ids.push_back(Q.edges[l.edge].id);
          }
          paths.insert(ids);
        }
        std::set<std::vector<std::string>> setlike;
        for (const Monomial& m :
             setlike_monomials(X, x, y, 5, CobarMode::kPlain)) {
          std::vector<std::string> ids;
          for (const CobarLetter& l : m.letters) {
            ids.push_back(X.id_of(l.simplex));
          }
          setlike.insert(ids);
        }
        if (paths != setlike) {
          witness = "mismatch at (" + std::to_string(x) + "," +
                    std::to_string(y) + ")";
          break;
        }
      }
    }
    push_check(out, "cobar-setlike-paths:" + name, witness.empty(), witness);
  }
}

// --- enrichment -------------------------------------------------------------

void suite_enrichment(std::vector<CheckResult>& out) {
  for (const auto& [name, X] : verification_corpus()) {
    std::string coassoc, counit, chainmap, multiplicative;
    std::vector<std::vector<std::vector<Monomial>>> bases(X.count(0));
    for (int x = 0; x < X.count(0); ++x) {
      bases[x].resize(X.count(0));
    }
    for (int x = 0; x < X.count(0); ++x) {
      for (int y = 0; y < X.count(0); ++y) {
        for (int deg = 0; deg <= 4; ++deg) {
          for (const Monomial& m :
               hom_basis(X, x, y, deg, CobarMode::kPlain, 4)) {
            bases[x][y].push_back(m);
          }
        }
      }
    }
    for (int x = 0; x < X.count(0); ++x) {
      for (int y = 0; y < X.count(0); ++y) {
        for (const Monomial& m : bases[x][y]) {
          std::string id = monomial_to_string(X, m);
          CobarTensor t = serre_coproduct(X, m);
          // Counit axioms.
          CobarElement left, right, just_m;
          cobar_add(just_m, m, 1);
          for (const auto& [p, c] : t) {
            if (p.first.degree() == 0) cobar_add(left, p.second, c);
            if (p.second.degree() == 0) cobar_add(right, p.first, c);
          }
          if ((left != just_m || right != just_m) && counit.empty()) {
            counit = id;
          }
          // Coassociativity.
          std::map<std::tuple<Monomial, Monomial, Monomial>, Int> lhs, rhs;
          for (const auto& [p, c] : t) {
            for (const auto& [q, d] : serre_coproduct(X, p.first)) {
              auto key = std::make_tuple(q.first, q.second, p.second);
              lhs[key] += c * d;
              if (lhs[key] == 0) lhs.erase(key);
            }
            for (const auto& [q, d] : serre_coproduct(X, p.second)) {
              auto key = std::make_tuple(p.first, q.first, q.second);
              rhs[key] += c * d;
              if (rhs[key] == 0) rhs.erase(key);
            }
          }
          if (lhs != rhs && coassoc.empty()) coassoc = id;
          // Chain map.
          CobarTensor dt = serre_coproduct(
              X, cobar_differential(X, m, CobarMode::kPlain));
          CobarTensor td;
          for (const auto& [p, c] : t) {
            for (const auto& [mm, d] :
                 cobar_differential(X, p.first, CobarMode::kPlain)) {
              cobar_tensor_add(td, mm, p.second, c * d);
            }
            int kos = (p.first.degree() % 2 == 0) ? 1 : -1;
            for (const auto& [mm, d] :
                 cobar_differential(X, p.second, CobarMode::kPlain)) {
              cobar_tensor_add(td, p.first, mm, c * d * kos);
            }
          }
          if (dt != td && chainmap.empty()) chainmap = id;
        }
      }
    }
    // Multiplicativity over composition (bounded deterministic sample).
    int sampled = 0;
    for (int x = 0; x < X.count(0) && sampled < 200; ++x) {
      for (int y = 0; y < X.count(0) && sampled < 200; ++y) {
        for (int z = 0; z < X.count(0) && sampled < 200; ++z) {
          for (const Monomial& a : bases[x][y]) {
            if (sampled >= 200) break;
            for (const Monomial& b : bases[y][z]) {
              if (a.degree() + b.degree() > 4) continue;
              if (static_cast<int>(a.letters.size() + b.letters.size()) > 4) {
                continue;
              }
              ++sampled;
              if (sampled > 200) break;
              Monomial ab = compose_monomials(X, a, b, CobarMode::kPlain);
              CobarTensor lhs = serre_coproduct(X, ab);
              CobarTensor rhs;
              for (const auto& [pa, ca] : serre_coproduct(X, a)) {
                for (const auto& [pb, cb] : serre_coproduct(X, b)) {
                  int kos = ((pa.second.degree() * pb.first.degree()) % 2 == 0)
                                ? 1
                                : -1;
                  cobar_tensor_add(
                      rhs,
                      compose_monomials(X, pa.first, pb.first,
                                        CobarMode::kPlain),
                      compose_monomials(X, pa.second, pb.second,
                                        CobarMode::kPlain),
                      ca * cb * kos);
                }
              }
              if (lhs != rhs && multiplicative.empty()) {
                multiplicative = monomial_to_string(X, a) + " . " +
                                 monomial_to_string(X, b);
              }
            }
          }
        }
      }
    }
    push_check(out, "serre-counit:" + name, counit.empty(), counit);
    push_check(out, "serre-coassociative:" + name, coassoc.empty(), coassoc);
    push_check(out, "serre-chain-map:" + name, chainmap.empty(), chainmap);
    push_check(out, "serre-multiplicative:" + name, multiplicative.empty(),
               multiplicative);
  }
}

// --- szczarba ---------------------------------------------------------------

Flag random_flag(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> vtx(0, n);
  int p = vtx(rng) % n;
  std::uniform_int_distribution<int> qd(p + 1, n);
  int q = qd(rng);
  std::uniform_int_distribution<int> lvl(0, 3);
  int k = lvl(rng);
  Flag f;
  f.n = n;
  f.p = p;
  f.q = q;
  unsigned base = (1u << p) | (1u << q);
  unsigned cur = base;
  for (int i = 0; i <= k; ++i) {
    for (int v = p + 1; v < q; ++v) {
      if (rng() % 3u == 0) cur |= 1u << v;
    }
    f.sets.push_back(cur);
  }
  return f;
}

bool check_flag_identities(const Flag& f, std::string& witness) {
  GWord w = sz(f);
  int lev = f.level();
  for (int i = 0; i <= lev; ++i) {
    if (lev >= 1 && sz(flag_face(f, i)) != gword_face(w, i)) {
      witness = "face " + std::to_string(i) + " of " + flag_to_string(f);
      return false;
    }
    if (sz(flag_degeneracy(f, i)) != gword_degeneracy(w, i)) {
      witness = "degeneracy " + std::to_string(i) + " of " + flag_to_string(f);
      return false;
    }
  }
  for (int i = 0; i <= f.n + 1; ++i) {
    if (sz(flag_coface(f, i)) != cosimplicial_face(w, i)) {
      witness = "coface " + std::to_string(i) + " of " + flag_to_string(f);
      return false;
    }
  }
  for (int i = 0; i + 1 <= f.n; ++i) {
    if (sz(flag_codegeneracy(f, i)) != cosimplicial_degeneracy(w, i)) {
      witness =
          "codegeneracy " + std::to_string(i) + " of " + flag_to_string(f);
      return false;
    }
  }
  return true;
}

void suite_szczarba(std::vector<CheckResult>& out, unsigned seed) {
  // Worked example on the tetrahedron.
  {
    Flag f;
    f.n = 3;
    f.p = 0;
    f.q = 3;
    f.sets = {0b1001u, 0b1011u, 0b1111u};
    GWord w = sz(f);
    bool ok = flag_gamma(f) == std::vector<int>{1, 0} && w.ops.size() == 3 &&
              w.ops[0].to_string() == "s0d1" &&
              w.ops[1].to_string() == "s1" && w.ops[2].to_string() == "s1s0";
    push_check(out, "szczarba-worked-example", ok,
               ok ? "" : w.to_string());
  }
  // Counting and gamma bijectivity, n <= 5.
  {
    std::string witness;
    for (int n = 1; n <= 5 && witness.empty(); ++n) {
      for (int p = 0; p < n && witness.empty(); ++p) {
        for (int q = p + 1; q <= n; ++q) {
          auto flags = top_flags(n, p, q);
          long long expect = 1;
          for (int i = 2; i <= q - p - 1; ++i) expect *= i;
          std::set<std::vector<int>> gammas;
          for (const Flag& f : flags) gammas.insert(flag_gamma(f));
          if (static_cast<long long>(flags.size()) != expect ||
              gammas.size() != flags.size()) {
            witness = "(" + std::to_string(n) + "," + std::to_string(p) +
                      "," + std::to_string(q) + ")";
            break;
          }
        }
      }
    }
    push_check(out, "szczarba-flag-counts", witness.empty(), witness);
  }
  // Exhaustive structure for n <= 3.
  {
    std::string witness;
    for (int n = 1; n <= 3 && witness.empty(); ++n) {
      for (int p = 0; p < n && witness.empty(); ++p) {
        for (int q = p + 1; q <= n && witness.empty(); ++q) {
          for (const Flag& f : top_flags(n, p, q)) {
            if (!check_flag_identities(f, witness)) break;
          }
        }
      }
    }
    push_check(out, "szczarba-structure-exhaustive", witness.empty(), witness);
    // Monoidality over all composable top-flag pairs, n <= 3.
    witness.clear();
    for (int n = 2; n <= 3 && witness.empty(); ++n) {
      for (int p = 0; p < n && witness.empty(); ++p) {
        for (int r = p + 1; r < n && witness.empty(); ++r) {
          for (int q = r + 1; q <= n && witness.empty(); ++q) {
            for (const Flag& a : top_flags(n, p, r)) {
              for (const Flag& b : top_flags(n, r, q)) {
                // Bring both to a common level by degenerating the lower one.
                Flag aa = a, bb = b;
                while (aa.level() < bb.level()) aa = flag_degeneracy(aa, 0);
                while (bb.level() < aa.level()) bb = flag_degeneracy(bb, 0);
                Flag ab = compose_flags(aa, bb);
                if (sz(ab) != gword_compose(sz(aa), sz(bb))) {
                  witness = flag_to_string(aa) + " o " + flag_to_string(bb);
                  break;
                }
              }
              if (!witness.empty()) break;
            }
          }
        }
      }
    }
    push_check(out, "szczarba-monoidal-exhaustive", witness.empty(), witness);
  }
  // Sampled structure for n = 4.
  {
    std::mt19937 rng(seed);
    std::string witness;
    int checked = 0;
    while (checked < 500 && witness.empty()) {
      Flag f = random_flag(rng, 4);
      if (!flag_valid(f)) continue;
      ++checked;
      if (!check_flag_identities(f, witness)) break;
    }
    push_check(out, "szczarba-structure-sampled-n4", witness.empty(), witness);
    witness.clear();
    for (int trial = 0; trial < 200 && witness.empty(); ++trial) {
      Flag a = random_flag(rng, 4);
      if (!flag_valid(a) || a.p >= a.q - 1) continue;
      // Rebuild a composable partner with the same endpoints split at r.
      std::uniform_int_distribution<int> rd(a.p + 1, a.q - 1);
      int r = rd(rng);
      Flag left, right;
      left.n = right.n = 4;
      left.p = a.p;
      left.q = r;
      right.p = r;
      right.q = a.q;
      unsigned lmaskbase = (1u << a.p) | (1u << r);
      unsigned rmaskbase = (1u << r) | (1u << a.q);
      unsigned lcur = lmaskbase, rcur = rmaskbase;
      for (int i = 0; i <= a.level(); ++i) {
        for (int v = a.p + 1; v < r; ++v) {
          if (rng() % 3u == 0) lcur |= 1u << v;
        }
        for (int v = r + 1; v < a.q; ++v) {
          if (rng() % 3u == 0) rcur |= 1u << v;
        }
        left.sets.push_back(lcur);
        right.sets.push_back(rcur);
      }
      if (!flag_valid(left) || !flag_valid(right)) continue;
      Flag ab = compose_flags(left, right);
      if (sz(ab) != gword_compose(sz(left), sz(right))) {
        witness = flag_to_string(left) + " o " + flag_to_string(right);
      }
    }
    push_check(out, "szczarba-monoidal-sampled-n4", witness.empty(), witness);
  }
}

// --- phi --------------------------------------------------------------------

void suite_phi(std::vector<CheckResult>& out) {
  // Triangulation term counts and signed sums.
  {
    std::string witness;
    long long fact = 1;
    for (int n = 1; n <= 6; ++n) {
      fact *= n;
      auto terms = triangulation_terms(n);
      long long sum = 0;
      for (const TriangTerm& t : terms) sum += t.sign;
      if (static_cast<long long>(terms.size()) != fact ||
          (n >= 2 && sum != 0)) {
        witness = "n = " + std::to_string(n);
        break;
      }
    }
    push_check(out, "triangulation-terms", witness.empty(), witness);
  }
  // Chain map and comultiplicativity through chain degree 2.
  for (const SSet& X : {wedge_of_spheres(1, 2), sphere(2)}) {
    std::string chain_witness, comult_witness;
    for (int deg = 0; deg <= 2; ++deg) {
      for (const Monomial& m :
           hom_basis(X, 0, 0, deg, CobarMode::kPlain, 3)) {
        GChain lhs = gchain_boundary(X, phi(X, m));
        if (lhs != phi(X, phi_differential(X, m, CobarMode::kPlain)) &&
            chain_witness.empty()) {
          chain_witness = monomial_to_string(X, m);
        }
        GTensor aw = gchain_aw(X, phi(X, m));
        GTensor rhs;
        for (const auto& [pair, c] : phi_coproduct(X, m)) {
          for (const auto& [wa, ca] : phi(X, pair.first)) {
            for (const auto& [wb, cb] : phi(X, pair.second)) {
              gtensor_add(X, rhs, wa, wb, c * ca * cb);
            }
          }
        }
        if (aw != rhs && comult_witness.empty()) {
          comult_witness = monomial_to_string(X, m);
        }
      }
    }
    push_check(out, "phi-chain-map:" + X.name, chain_witness.empty(),
               chain_witness);
    push_check(out, "phi-comultiplicative:" + X.name, comult_witness.empty(),
               comult_witness);
  }
}

}  // namespace

std::vector<std::pair<std::string, SSet>> verification_corpus() {
  std::vector<std::pair<std::string, SSet>> out;
  for (int n = 1; n <= 4; ++n) {
    out.push_back({"delta:" + std::to_string(n), standard_simplex(n)});
  }
  out.push_back({"boundary:2", boundary(2)});
  for (int n = 1; n <= 4; ++n) {
    out.push_back({"sphere:" + std::to_string(n), sphere(n)});
  }
  out.push_back({"k1:1", k1_thickening(standard_simplex(1))});
  out.push_back({"wedge:1+2", wedge_of_spheres(1, 2)});
  return out;
}

std::vector<std::string> verify_suite_names() {
  return {"coalgebra", "cobar", "enrichment", "szczarba", "phi", "all"};
}

std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed) {
  std::vector<CheckResult> out;
  bool all = suite == "all";
  bool known = all;
  if (suite == "coalgebra" || all) {
    suite_coalgebra(out);
    known = true;
  }
  if (suite == "cobar" || all) {
    suite_cobar(out);
    known = true;
  }
  if (suite == "enrichment" || all) {
    suite_enrichment(out);
    known = true;
  }
  if (suite == "szczarba" || all) {
    suite_szczarba(out, seed);
    known = true;
  }
  if (suite == "phi" || all) {
    suite_phi(out);
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return out;
}

}  // namespace pathcat
