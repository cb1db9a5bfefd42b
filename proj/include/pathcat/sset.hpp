#pragma once
// Finite simplicial sets presented by their nondegenerate simplices and the
// face table of each nondegenerate simplex.  A SimplexRef names a possibly
// degenerate simplex as a strictly decreasing degeneracy word applied to a
// nondegenerate base.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pathcat/operators.hpp"

namespace pathcat {

struct SimplexRef {
  int base_dim = 0;
  int base_idx = 0;
  std::vector<int> degens;  // strictly decreasing

  int dim() const { return base_dim + static_cast<int>(degens.size()); }
  bool is_degenerate() const { return !degens.empty(); }

  bool operator==(const SimplexRef&) const = default;
  auto operator<=>(const SimplexRef&) const = default;
};

struct NondegSimplex {
  std::string id;
  std::vector<SimplexRef> faces;  // size dim+1, each of dimension dim-1
};

class SSet {
 public:
  std::string name;
  std::vector<std::vector<NondegSimplex>> levels;  // levels[d][k]

  int top_dim() const { return static_cast<int>(levels.size()) - 1; }
  int count(int dim) const {
    return (dim >= 0 && dim <= top_dim())
               ? static_cast<int>(levels[dim].size())
               : 0;
  }
  const NondegSimplex& simplex(int dim, int idx) const {
    return levels[dim][idx];
  }
  const NondegSimplex& simplex(const SimplexRef& r) const {
    return levels[r.base_dim][r.base_idx];
  }
  const std::string& id_of(const SimplexRef& r) const {
    return simplex(r).id;
  }

  int add_simplex(int dim, std::string id, std::vector<SimplexRef> faces);
  std::optional<SimplexRef> find(const std::string& id) const;
  SimplexRef ref(const std::string& id) const;  // throws if unknown

  // Human-readable form "s1s0 id" / "id".
  std::string describe(const SimplexRef& r) const;

  long long euler_characteristic() const;

 private:
  std::map<std::string, std::pair<int, int>> index_;
};

// Single face of a (possibly degenerate) simplex.
SimplexRef face_of(const SSet& X, const SimplexRef& r, int j);
// Degeneracy of a simplex.
SimplexRef degeneracy_of(const SSet& X, const SimplexRef& r, int i);
// Total action of an operator word.
SimplexRef apply_op(const SSet& X, const SimplexRef& r,
                    const SimplicialOperator& op);
// Vertex v of r (the image of the vertex-inclusion [v]).
SimplexRef vertex_of(const SSet& X, const SimplexRef& r, int v);

// Structural validation: face-table shapes, reference validity, and the
// simplicial identity d_i d_j = d_{j-1} d_i (i < j) for the induced action.
// Returns a list of violations (empty means valid).
std::vector<std::string> validate(const SSet& X);

// Builders -------------------------------------------------------------------

SSet standard_simplex(int n);
SSet boundary(int n);                // boundary of the standard n-simplex
SSet sphere(int n);                  // standard n-simplex mod its boundary
SSet wedge(const SSet& A, const std::string& a0, const SSet& B,
           const std::string& b0);   // one-point union at the given vertices
SSet wedge_of_spheres(int a, int b);

// Collapse the subcomplex generated by the listed nondegenerate simplices to a
// single basepoint vertex "*".
SSet quotient(const SSet& X, const std::vector<std::string>& collapse,
              const std::string& new_name);

// Attach, along every nondegenerate 1-simplex e : x -> y, a triangle whose
// faces are (d0, d1, d2) = (e', s0 x, e) with a fresh reversed edge e' : y -> x.
SSet k1_thickening(const SSet& X);

// JSON serialization ---------------------------------------------------------
// Schema: {"name": str, "simplices": [{"id": str, "dim": int,
//          "faces": [{"base": str, "degens": [int]}]}]}
SSet sset_from_json_text(const std::string& text);
SSet sset_from_json_file(const std::string& path);
std::string sset_to_json_text(const SSet& X);

}  // namespace pathcat
