#pragma once
// Cobar construction on the normalized-chains coalgebra of a simplicial set,
// as a dg-category: objects are vertices, a hom element from x to y is an
// integer combination of monomials of desuspended simplices (letters) chained
// end to end.  A letter of dimension n has degree n-1; the extended mode
// additionally allows formal inverses of degree-0 letters (edges), with
// adjacent inverse pairs cancelling.  Monomials are written source-to-target.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathcat/chains.hpp"
#include "pathcat/necklace.hpp"
#include "pathcat/sset.hpp"

namespace pathcat {

enum class CobarMode { kPlain, kExtended };

struct CobarLetter {
  SimplexRef simplex;  // nondegenerate, dim >= 1
  bool inverse = false;  // only for dim-1 letters (extended mode)
  int degree() const { return simplex.dim() - 1; }
  bool operator==(const CobarLetter&) const = default;
  auto operator<=>(const CobarLetter&) const = default;
};

struct Monomial {
  int src = 0;  // vertex indices in dimension 0
  int tgt = 0;
  std::vector<CobarLetter> letters;

  int degree() const {
    int d = 0;
    for (const CobarLetter& l : letters) d += l.degree();
    return d;
  }
  bool is_setlike() const { return degree() == 0; }
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

using CobarElement = std::map<Monomial, Int>;
using CobarTensor = std::map<std::pair<Monomial, Monomial>, Int>;

void cobar_add(CobarElement& e, const Monomial& m, const Int& c);
void cobar_tensor_add(CobarTensor& e, const Monomial& a, const Monomial& b,
                      const Int& c);
std::string monomial_to_string(const SSet& X, const Monomial& m);
std::string element_to_string(const SSet& X, const CobarElement& e);

// Endpoint bookkeeping -------------------------------------------------------
int letter_source(const SSet& X, const CobarLetter& l);
int letter_target(const SSet& X, const CobarLetter& l);
bool monomial_chained(const SSet& X, const Monomial& m);

// Build a monomial from letters, checking the chaining; src is used when
// letters is empty.  In extended mode adjacent inverse pairs are cancelled.
Monomial make_monomial(const SSet& X, std::vector<CobarLetter> letters,
                       int src, CobarMode mode);
Monomial reduce_monomial(const Monomial& m);  // cancel adjacent inverse pairs
bool is_reduced_monomial(const Monomial& m);

// Conversions to the cube structure (positive letters only).
NecklaceMap monomial_to_necklace(const SSet& X, const Monomial& m);
Monomial necklace_to_monomial(const NecklaceMap& m);

// Basis enumeration ----------------------------------------------------------
// All (reduced) monomials from x to y of the given degree with at most
// word_cap letters, in deterministic order: by letter count, then
// lexicographically.  word_cap < 0 means unlimited, which is only legal when
// the space has no nondegenerate edges (otherwise the basis is infinite).
std::vector<Monomial> hom_basis(const SSet& X, int x, int y, int degree,
                                CobarMode mode, int word_cap);

// Differential ---------------------------------------------------------------
// Sum over letters, with Leibniz prefix (-1)^(degrees to the left), of the
// desuspended modified boundary, the splitting coproduct and the curvature
// deletion (the latter fires only on loop letters of dimension 2); see
// signs.hpp for the frozen sign table.  Exact: no truncation.
CobarElement cobar_differential(const SSet& X, const Monomial& m,
                                CobarMode mode);
CobarElement cobar_differential(const SSet& X, const CobarElement& e,
                                CobarMode mode);

// Composition (diagrammatic: a from x to y, b from y to z).
Monomial compose_monomials(const SSet& X, const Monomial& a, const Monomial& b,
                           CobarMode mode);
CobarElement compose_elements(const SSet& X, const CobarElement& a,
                              const CobarElement& b, CobarMode mode);

// Coproduct ------------------------------------------------------------------
// Cubical coproduct on a monomial without inverse letters: for every subset S
// of the cube directions, restrict the complementary directions to 0 for the
// left factor and the directions in S to 1 for the right factor, with sign
// (-1)^{#{(j,k) : j < k, j not in S, k in S}}.
CobarTensor serre_coproduct(const SSet& X, const Monomial& m);
CobarTensor serre_coproduct(const SSet& X, const CobarElement& e);
Int cobar_counit(const CobarElement& e);  // sum over degree-0 monomials

// Set-like part --------------------------------------------------------------
// Degree-0 monomials from x to y with at most max_len letters, deterministic
// order (this is hom_basis at degree 0).
std::vector<Monomial> setlike_monomials(const SSet& X, int x, int y,
                                        int max_len, CobarMode mode);

}  // namespace pathcat
