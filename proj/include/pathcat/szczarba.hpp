#pragma once
// The free simplicial category G on a standard simplex, the loop groupoid of
// a simplicial set, the rigidification mapping posets with their cube flags,
// and the comparison map from flags to G-words.
//
// A level-k morphism of G(Delta^n) from object p to object q is a tuple of
// operator words, one per generator g_j (j = p+1..q, generator g_j points
// from j-1 to j and has intrinsic dimension n-j); entry j applies its
// operator to g_j and all entries share the common level k.

#include <map>
#include <string>
#include <vector>

#include "pathcat/operators.hpp"
#include "pathcat/sset.hpp"

namespace pathcat {

// --- G-words ----------------------------------------------------------------

struct GWord {
  int n = 0;     // ambient simplex dimension
  int p = 0;     // source object
  int q = 0;     // target object
  int level = 0; // simplicial degree of the morphism
  // ops[j - (p+1)] is the operator applied to g_j, listed j = p+1..q.
  std::vector<SimplicialOperator> ops;

  bool operator==(const GWord&) const = default;
  auto operator<=>(const GWord&) const = default;
  std::string to_string() const;
};

GWord generator_gword(int n, int j);              // g_j at its own level n-j
bool gword_valid(const GWord& w);                 // dimension bookkeeping
GWord gword_compose(const GWord& a, const GWord& b);  // a: p->r, b: r->q
GWord gword_face(const GWord& w, int i);          // level face d_i
GWord gword_degeneracy(const GWord& w, int i);    // level degeneracy s_i
GWord gword_apply(const GWord& w, const SimplicialOperator& op);

// Cosimplicial structure: the i-th coface G(Delta^n) -> G(Delta^{n+1}) for
// 0 <= i <= n+1 and the i-th codegeneracy G(Delta^{n+1}) -> G(Delta^n) for
// 0 <= i <= n.
GWord cosimplicial_face(const GWord& w, int i);
GWord cosimplicial_degeneracy(const GWord& w, int i);

// --- Loop groupoid words ----------------------------------------------------
// Level-m generators are (m+1)-simplices y with s0-degenerate generators
// elided; a word is a product of generators and formal inverses.

struct GKanLetter {
  SimplexRef simplex;  // dimension = level + 1
  bool inverse = false;
  bool operator==(const GKanLetter&) const = default;
  auto operator<=>(const GKanLetter&) const = default;
};

struct GKanWord {
  int level = 0;
  std::vector<GKanLetter> letters;  // product, left to right
  bool operator==(const GKanWord&) const = default;
  auto operator<=>(const GKanWord&) const = default;
};

// Drop elided letters (degeneracy word ending in s0) and cancel adjacent
// inverse pairs.
GKanWord gkan_normalize(const SSet& X, const GKanWord& w);
GKanWord gkan_mult(const SSet& X, const GKanWord& a, const GKanWord& b);
GKanWord gkan_inverse(const GKanWord& w);
// Simplicial structure: face i (0 <= i <= level) and degeneracy i.
GKanWord gkan_face(const SSet& X, const GKanWord& w, int i);
GKanWord gkan_degeneracy(const SSet& X, const GKanWord& w, int i);
std::string gkan_to_string(const SSet& X, const GKanWord& w);

// Source and target vertices of a loop-groupoid generator at level m:
// source = (d1)^{m+1}, target = d0 (d2)^m.
SimplexRef gkan_letter_source(const SSet& X, const SimplexRef& y);
SimplexRef gkan_letter_target(const SSet& X, const SimplexRef& y);

// The image of a simplex of Delta^m under the simplicial map classified by
// the m-simplex sigma of X.
SimplexRef simplex_image(const SSet& X, const SimplexRef& sigma,
                         const SSet& delta_m, const SimplexRef& r);
// Push a loop-groupoid word over Delta^m forward along sigma.
GKanWord push_gkan_word(const SSet& X, const SimplexRef& sigma,
                        const SSet& delta_m, const GKanWord& w);

// eta: the comparison G(Delta^n) -> loop groupoid of Delta^n sending g_j to
// the generator on the vertex range [j-1..n].
GKanWord eta(const SSet& delta_n, const GWord& w);

// --- Rigidification flags ---------------------------------------------------
// A level-k element of the mapping object from p to q over Delta^n is a
// weakly increasing chain of k+1 subsets of [p,q], each containing p and q.

struct Flag {
  int n = 0, p = 0, q = 0;
  std::vector<unsigned> sets;  // bitmasks over {0..n}; size = level + 1
  int level() const { return static_cast<int>(sets.size()) - 1; }
  bool operator==(const Flag&) const = default;
  auto operator<=>(const Flag&) const = default;
};

bool flag_valid(const Flag& f);
bool flag_nondegenerate(const Flag& f);  // strictly increasing chain
Flag flag_face(const Flag& f, int i);
Flag flag_degeneracy(const Flag& f, int i);
Flag compose_flags(const Flag& a, const Flag& b);  // entrywise union
std::string flag_to_string(const Flag& f);

// The maximal flags from {p,q} to [p,q] (level q-p-1), enumerated in
// lexicographic order of the element-addition sequence.
std::vector<Flag> top_flags(int n, int p, int q);
// Element-addition sequence of a maximal flag, read top-down.
std::vector<int> flag_alpha(const Flag& f);
// Right-inversion counts: beta(j)_k = #{l > k : j_l < j_k}.
std::vector<int> flag_beta(const std::vector<int>& alpha);
std::vector<int> flag_gamma(const Flag& f);

// Cosimplicial structure on flags over Delta^n: relabel set elements along
// the i-th coface (0 <= i <= n+1) or codegeneracy (0 <= i <= n-1).
Flag flag_coface(const Flag& f, int i);
Flag flag_codegeneracy(const Flag& f, int i);

// The operator D^m_{j,t} of the comparison recursion (tuple t of length m-1).
SimplicialOperator comparison_operator(int m, int j, const std::vector<int>& t);

// The comparison map on flags: a G-word of the same level.  For maximal flags
// this is the closed formula through comparison_operator; lower or degenerate
// flags are computed by writing the flag as an operator applied to maximal
// flags, asserting independence of the chosen maximal parent.
GWord sz(const Flag& f);

}  // namespace pathcat
