#include "pathcat/sset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace pathcat {

int SSet::add_simplex(int dim, std::string id, std::vector<SimplexRef> faces) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (static_cast<int>(levels.size()) <= dim) levels.resize(dim + 1);
  if (index_.count(id)) throw std::invalid_argument("duplicate simplex id " + id);
  int idx = static_cast<int>(levels[dim].size());
  index_[id] = {dim, idx};
  levels[dim].push_back(NondegSimplex{std::move(id), std::move(faces)});
  return idx;
}

std::optional<SimplexRef> SSet::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return SimplexRef{it->second.first, it->second.second, {}};
}

SimplexRef SSet::ref(const std::string& id) const {
  auto r = find(id);
  if (!r) throw std::invalid_argument("unknown simplex id " + id);
  return *r;
}

std::string SSet::describe(const SimplexRef& r) const {
  std::string out;
  for (int i : r.degens) out += "s" + std::to_string(i);
  if (!r.degens.empty()) out += " ";
  out += id_of(r);
  return out;
}

long long SSet::euler_characteristic() const {
  long long chi = 0;
  for (int d = 0; d <= top_dim(); ++d) {
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(count(d));
  }
  return chi;
}

namespace {

// Face of a possibly degenerate simplex, resolving through the face table.
SimplexRef single_face(const SSet& X, const SimplexRef& r, int j) {
  SimplicialOperator op = compose(face_op(j), degeneracy_word(r.degens));
  if (op.faces.empty()) {
    return SimplexRef{r.base_dim, r.base_idx, op.degens};
  }
  // The face survives commuting through the degeneracy word; exactly one
  // face letter remains, acting on the nondegenerate base.
  int jj = op.faces.front();
  if (r.base_dim == 0) throw std::logic_error("face of a vertex");
  const SimplexRef& f = X.simplex(r.base_dim, r.base_idx).faces.at(jj);
  SimplicialOperator merged =
      compose(degeneracy_word(op.degens), degeneracy_word(f.degens));
  return SimplexRef{f.base_dim, f.base_idx, merged.degens};
}

}  // namespace

SimplexRef face_of(const SSet& X, const SimplexRef& r, int j) {
  return single_face(X, r, j);
}

SimplexRef degeneracy_of(const SSet& X, const SimplexRef& r, int i) {
  (void)X;
  SimplicialOperator merged =
      compose(degeneracy_op(i), degeneracy_word(r.degens));
  return SimplexRef{r.base_dim, r.base_idx, merged.degens};
}

SimplexRef apply_op(const SSet& X, const SimplexRef& r,
                    const SimplicialOperator& op) {
  SimplicialOperator total = compose(op, degeneracy_word(r.degens));
  SimplexRef cur{r.base_dim, r.base_idx, {}};
  for (auto it = total.faces.rbegin(); it != total.faces.rend(); ++it) {
    cur = single_face(X, cur, *it);
  }
  SimplicialOperator merged =
      compose(degeneracy_word(total.degens), degeneracy_word(cur.degens));
  return SimplexRef{cur.base_dim, cur.base_idx, merged.degens};
}

SimplexRef vertex_of(const SSet& X, const SimplexRef& r, int v) {
  SimplicialOperator op;
  for (int j = 0; j <= r.dim(); ++j) {
    if (j != v) op.faces.push_back(j);
  }
  return apply_op(X, r, op);
}

std::vector<std::string> validate(const SSet& X) {
  std::vector<std::string> errors;
  auto check_ref = [&](const SimplexRef& f, const std::string& ctx) {
    if (f.base_dim < 0 || f.base_dim > X.top_dim() ||
        f.base_idx < 0 || f.base_idx >= X.count(f.base_dim)) {
      errors.push_back(ctx + ": dangling base reference");
      return false;
    }
    int prev = f.dim();
    for (int i : f.degens) {
      if (i < 0 || i >= prev) {
        errors.push_back(ctx + ": degeneracy index out of range");
        return false;
      }
      --prev;
    }
    for (std::size_t k = 1; k < f.degens.size(); ++k) {
      if (f.degens[k - 1] <= f.degens[k]) {
        errors.push_back(ctx + ": degeneracy word not strictly decreasing");
        return false;
      }
    }
    return true;
  };
  for (int n = 0; n <= X.top_dim(); ++n) {
    for (int k = 0; k < X.count(n); ++k) {
      const NondegSimplex& x = X.simplex(n, k);
      std::string ctx = x.id;
      if (n == 0) {
        if (!x.faces.empty()) errors.push_back(ctx + ": vertex with faces");
        continue;
      }
      if (static_cast<int>(x.faces.size()) != n + 1) {
        errors.push_back(ctx + ": wrong face count");
        continue;
      }
      bool ok = true;
      for (int j = 0; j <= n; ++j) {
        if (!check_ref(x.faces[j], ctx + ".d" + std::to_string(j))) ok = false;
        else if (x.faces[j].dim() != n - 1) {
          errors.push_back(ctx + ": face of wrong dimension");
          ok = false;
        }
      }
      if (!ok || n < 2) continue;
      SimplexRef r{n, k, {}};
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          SimplexRef lhs = face_of(X, face_of(X, r, j), i);
          SimplexRef rhs = face_of(X, face_of(X, r, i), j - 1);
          if (lhs != rhs) {
            errors.push_back(ctx + ": d" + std::to_string(i) + "d" +
                             std::to_string(j) + " != d" +
                             std::to_string(j - 1) + "d" + std::to_string(i));
          }
        }
      }
    }
  }
  return errors;
}

// Builders -------------------------------------------------------------------

namespace {

std::string vertex_set_id(const std::vector<int>& verts, int n) {
  const char* sep = (n >= 10) ? "." : "";
  std::string id;
  for (std::size_t k = 0; k < verts.size(); ++k) {
    if (k) id += sep;
    id += std::to_string(verts[k]);
  }
  return id;
}

SSet simplex_skeleton(int n, bool include_top, const std::string& name) {
  SSet X;
  X.name = name;
  // Enumerate nonempty subsets of {0..n} by size.
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> verts;
    for (int v = 0; v <= n; ++v) {
      if (mask & (1 << v)) verts.push_back(v);
    }
    subsets.push_back(std::move(verts));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() < b.size();
                   });
  for (const auto& verts : subsets) {
    int d = static_cast<int>(verts.size()) - 1;
    if (!include_top && d == n) continue;
    std::vector<SimplexRef> faces;
    for (int j = 0; j <= d && d > 0; ++j) {
      std::vector<int> fv = verts;
      fv.erase(fv.begin() + j);
      faces.push_back(X.ref(vertex_set_id(fv, n)));
    }
    X.add_simplex(d, vertex_set_id(verts, n), std::move(faces));
  }
  return X;
}

}  // namespace

SSet standard_simplex(int n) {
  return simplex_skeleton(n, true, "delta:" + std::to_string(n));
}

SSet boundary(int n) {
  if (n < 1) throw std::invalid_argument("boundary needs n >= 1");
  return simplex_skeleton(n, false, "boundary:" + std::to_string(n));
}

SSet sphere(int n) {
  if (n < 1) throw std::invalid_argument("sphere needs n >= 1");
  SSet X;
  X.name = "sphere:" + std::to_string(n);
  X.add_simplex(0, "*", {});
  SimplexRef base = X.ref("*");
  std::vector<SimplexRef> faces;
  for (int j = 0; j <= n; ++j) {
    faces.push_back(SimplexRef{0, 0, total_degeneracy_indices(n - 1)});
  }
  X.add_simplex(n, "top", std::move(faces));
  (void)base;
  return X;
}

SSet wedge(const SSet& A, const std::string& a0, const SSet& B,
           const std::string& b0) {
  SSet X;
  X.name = "wedge(" + A.name + "," + B.name + ")";
  X.add_simplex(0, "*", {});
  // (space, dim, idx) -> new idx at the same dim.
  auto copy_space = [&X](const SSet& S, const std::string& base_vertex,
                         const std::string& prefix) {
    std::vector<std::vector<int>> remap(S.top_dim() + 1);
    SimplexRef b0r = S.ref(base_vertex);
    if (b0r.base_dim != 0) throw std::invalid_argument("basepoint not a vertex");
    for (int d = 0; d <= S.top_dim(); ++d) {
      remap[d].assign(S.count(d), -1);
      for (int k = 0; k < S.count(d); ++k) {
        if (d == 0 && k == b0r.base_idx) {
          remap[d][k] = 0;  // the shared basepoint
          continue;
        }
        const NondegSimplex& x = S.simplex(d, k);
        std::vector<SimplexRef> faces;
        for (const SimplexRef& f : x.faces) {
          faces.push_back(
              SimplexRef{f.base_dim, remap[f.base_dim][f.base_idx], f.degens});
        }
        remap[d][k] = X.add_simplex(d, prefix + x.id, std::move(faces));
      }
    }
  };
  copy_space(A, a0, "A.");
  copy_space(B, b0, "B.");
  return X;
}

SSet wedge_of_spheres(int a, int b) {
  SSet X = wedge(sphere(a), "*", sphere(b), "*");
  X.name = "wedge:" + std::to_string(a) + "+" + std::to_string(b);
  return X;
}

SSet quotient(const SSet& X, const std::vector<std::string>& collapse,
              const std::string& new_name) {
  // Closure of the collapsed set under taking faces.
  std::vector<std::vector<bool>> marked(X.top_dim() + 1);
  for (int d = 0; d <= X.top_dim(); ++d) marked[d].assign(X.count(d), false);
  std::vector<SimplexRef> stack;
  for (const auto& id : collapse) {
    SimplexRef r = X.ref(id);
    if (!marked[r.base_dim][r.base_idx]) {
      marked[r.base_dim][r.base_idx] = true;
      stack.push_back(r);
    }
  }
  while (!stack.empty()) {
    SimplexRef r = stack.back();
    stack.pop_back();
    if (r.base_dim == 0) continue;
    for (const SimplexRef& f : X.simplex(r).faces) {
      if (!marked[f.base_dim][f.base_idx]) {
        marked[f.base_dim][f.base_idx] = true;
        stack.push_back(SimplexRef{f.base_dim, f.base_idx, {}});
      }
    }
  }
  SSet Q;
  Q.name = new_name;
  Q.add_simplex(0, "*", {});
  std::vector<std::vector<int>> remap(X.top_dim() + 1);
  for (int d = 0; d <= X.top_dim(); ++d) {
    remap[d].assign(X.count(d), -1);
    for (int k = 0; k < X.count(d); ++k) {
      if (marked[d][k]) continue;
      const NondegSimplex& x = X.simplex(d, k);
      std::vector<SimplexRef> faces;
      for (const SimplexRef& f : x.faces) {
        if (marked[f.base_dim][f.base_idx]) {
          faces.push_back(SimplexRef{0, 0, total_degeneracy_indices(f.dim())});
        } else {
          faces.push_back(
              SimplexRef{f.base_dim, remap[f.base_dim][f.base_idx], f.degens});
        }
      }
      remap[d][k] = Q.add_simplex(d, x.id, std::move(faces));
    }
  }
  return Q;
}

SSet k1_thickening(const SSet& X) {
  SSet Y = X;
  Y.name = "k1(" + X.name + ")";
  int n_edges = X.count(1);
  for (int k = 0; k < n_edges; ++k) {
    const NondegSimplex edge = X.simplex(1, k);
    SimplexRef e{1, k, {}};
    SimplexRef src = edge.faces[1];  // d1 = source vertex
    SimplexRef tgt = edge.faces[0];  // d0 = target vertex
    int rev_idx = Y.add_simplex(1, "rev." + edge.id,
                                {src, tgt});  // reversed edge: tgt -> src
    SimplexRef rev{1, rev_idx, {}};
    SimplexRef deg_src{src.base_dim, src.base_idx, {0}};
    Y.add_simplex(2, "thk." + edge.id, {rev, deg_src, e});
  }
  return Y;
}

// JSON ------------------------------------------------------------------------

SSet sset_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SSet X;
  X.name = j.value("name", "unnamed");
  std::vector<nlohmann::json> simplices = j.at("simplices");
  std::stable_sort(simplices.begin(), simplices.end(),
                   [](const nlohmann::json& a, const nlohmann::json& b) {
                     return a.at("dim").get<int>() < b.at("dim").get<int>();
                   });
  for (const auto& s : simplices) {
    int dim = s.at("dim").get<int>();
    std::string id = s.at("id").get<std::string>();
    std::vector<SimplexRef> faces;
    if (s.contains("faces")) {
      for (const auto& f : s.at("faces")) {
        SimplexRef r = X.ref(f.at("base").get<std::string>());
        if (f.contains("degens")) {
          r.degens = f.at("degens").get<std::vector<int>>();
        }
        faces.push_back(std::move(r));
      }
    }
    X.add_simplex(dim, std::move(id), std::move(faces));
  }
  return X;
}

SSet sset_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return sset_from_json_text(ss.str());
}

std::string sset_to_json_text(const SSet& X) {
  nlohmann::json j;
  j["name"] = X.name;
  j["simplices"] = nlohmann::json::array();
  for (int d = 0; d <= X.top_dim(); ++d) {
    for (int k = 0; k < X.count(d); ++k) {
      const NondegSimplex& x = X.simplex(d, k);
      nlohmann::json s;
      s["id"] = x.id;
      s["dim"] = d;
      s["faces"] = nlohmann::json::array();
      for (const SimplexRef& f : x.faces) {
        nlohmann::json fr;
        fr["base"] = X.id_of(f);
        fr["degens"] = f.degens;
        s["faces"].push_back(fr);
      }
      j["simplices"].push_back(s);
    }
  }
  return j.dump(2);
}

}  // namespace pathcat
