#pragma once
// Normalized chains of a simplicial set as a coalgebra over the vertex ring:
// Alexander-Whitney diagonal, the modified boundary (a coderivation squaring
// to the curvature), and the degree -2 curvature term.

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pathcat/sset.hpp"

namespace pathcat {

using Int = boost::multiprecision::cpp_int;

// Sparse integer chain supported on (possibly degenerate) simplices; callers
// that work in normalized chains drop degenerate terms explicitly.
using Chain = std::map<SimplexRef, Int>;
using TensorChain = std::map<std::pair<SimplexRef, SimplexRef>, Int>;

void chain_add(Chain& c, const SimplexRef& r, const Int& coeff);
void tensor_add(TensorChain& c, const SimplexRef& a, const SimplexRef& b,
                const Int& coeff);
Chain chain_normalize(const Chain& c);            // drop degenerate simplices
TensorChain tensor_normalize(const TensorChain& c);
std::string chain_to_string(const SSet& X, const Chain& c);
std::string tensor_to_string(const SSet& X, const TensorChain& c);

// The front face spanned by vertices 0..i and the back face spanned by i..n.
SimplexRef front_face(const SSet& X, const SimplexRef& r, int i);
SimplexRef back_face(const SSet& X, const SimplexRef& r, int i);
// The face spanned by the vertex interval a..b.
SimplexRef range_face(const SSet& X, const SimplexRef& r, int a, int b);

SimplexRef source_vertex(const SSet& X, const SimplexRef& r);
SimplexRef target_vertex(const SSet& X, const SimplexRef& r);
bool is_loop(const SSet& X, const SimplexRef& r);  // source == target

// Alexander-Whitney diagonal of a single simplex, in normalized chains.
TensorChain aw_diagonal(const SSet& X, const SimplexRef& r);
TensorChain aw_diagonal(const SSet& X, const Chain& c);

// Modified boundary (frozen convention; see signs.hpp): alternating sum of
// inner faces, degenerate faces dropped.  Vanishes on dimensions <= 1.
Chain tilde_boundary(const SSet& X, const SimplexRef& r);
Chain tilde_boundary(const SSet& X, const Chain& c);

// Indicator of nondegeneracy in dimension one (zero elsewhere).
int edge_weight(const SSet& X, const SimplexRef& r);

// Curvature of a 2-simplex: product of the edge weights of its two short
// edges.  Defined for any simplex; zero unless the dimension is 2.
Int curvature_h(const SSet& X, const SimplexRef& r);

// Right-hand side of the curvature identity evaluated as a map of bimodules
// over the vertices: (h (x) id)(diag - diag-op), keeping only terms whose
// collapsed 2-simplex factor has equal endpoints.
Chain curvature_rhs(const SSet& X, const SimplexRef& r);

// Candidate conventions for the modified boundary, used by the frozen-sign
// search: global in {+1,-1}, koszul_on_front in {false,true}.
Chain tilde_boundary_candidate(const SSet& X, const SimplexRef& r, int global,
                               bool koszul_on_front);

// Identity checks (return a violation message, or empty if the identity
// holds for every nondegenerate simplex of X).
std::string check_counit_axiom(const SSet& X);       // degree-0 part vanishes
std::string check_coderivation(const SSet& X);       // Leibniz for aw_diagonal
std::string check_curvature_identity(const SSet& X); // square = curvature rhs

}  // namespace pathcat
