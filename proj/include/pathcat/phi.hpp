#pragma once
// Normalized chains on the loop groupoid of a reduced simplicial set and the
// comparison map from the cobar dg-category into them.  A single letter of
// dimension m+1 maps to a signed sum over the m! maximal flags of its mapping
// cube (signs from the cube triangulation table), evaluated through the flag
// comparison map and pushed forward along the letter; an edge letter maps to
// its group element minus the identity.  Monomials map to shuffle products of
// their letter images.

#include <map>
#include <string>
#include <utility>

#include "pathcat/cobar.hpp"
#include "pathcat/szczarba.hpp"

namespace pathcat {

// Sparse integer chains on loop-groupoid words; all words of one chain share
// the same level.  Degenerate words are dropped on insertion.
using GChain = std::map<GKanWord, Int>;
using GTensor = std::map<std::pair<GKanWord, GKanWord>, Int>;

// A word is degenerate when it is a level degeneracy of one of its faces.
bool gkan_degenerate(const SSet& X, const GKanWord& w);

// Normalize, then add unless degenerate.
void gchain_add(const SSet& X, GChain& c, const GKanWord& w, const Int& coeff);
void gtensor_add(const SSet& X, GTensor& c, const GKanWord& a,
                 const GKanWord& b, const Int& coeff);

// Simplicial boundary: alternating sum of level faces.
GChain gchain_boundary(const SSet& X, const GChain& c);

// Shuffle (Pontryagin) product: degenerate both factors along complementary
// position sets, multiply levelwise, sign by shuffle inversions.
GChain gchain_product(const SSet& X, const GChain& a, const GChain& b);

// Alexander-Whitney coproduct: front faces tensor iterated bottom faces.
GTensor gchain_aw(const SSet& X, const GChain& c);

std::string gchain_to_string(const SSet& X, const GChain& c);

// The comparison map.  Requires X reduced (a single vertex).
GChain phi_letter(const SSet& X, const CobarLetter& l);
GChain phi(const SSet& X, const Monomial& m);
GChain phi(const SSet& X, const CobarElement& e);

// Change of basis on cobar elements that shifts every degree-0 letter by
// delta times the identity (expanding products of binomials); delta = -1 and
// delta = +1 are mutually inverse.
CobarElement edge_unit_shift(const SSet& X, const Monomial& m, int delta,
                             CobarMode mode);
CobarElement edge_unit_shift(const SSet& X, const CobarElement& e, int delta,
                             CobarMode mode);

// The cobar differential and the Serre coproduct transported along the basis
// change above; these are the source structures for which the comparison map
// is a map of dg coalgebras.
CobarElement phi_differential(const SSet& X, const Monomial& m, CobarMode mode);
CobarTensor phi_coproduct(const SSet& X, const Monomial& m);

}  // namespace pathcat
