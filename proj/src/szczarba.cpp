#include "pathcat/szczarba.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pathcat {

// --- G-words ----------------------------------------------------------------

std::string GWord::to_string() const {
  if (ops.empty()) return "id@" + std::to_string(p);
  std::ostringstream os;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (k) os << ".";
    const SimplicialOperator& o = ops[k];
    if (!o.is_identity()) os << o.to_string() << " ";
    os << "g" << (p + 1 + static_cast<int>(k));
  }
  return os.str();
}

GWord generator_gword(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("generator out of range");
  GWord w;
  w.n = n;
  w.p = j - 1;
  w.q = j;
  w.level = n - j;
  w.ops.push_back(identity_op());
  return w;
}

bool gword_valid(const GWord& w) {
  if (w.p > w.q || w.p < 0 || w.q > w.n) return false;
  if (static_cast<int>(w.ops.size()) != w.q - w.p) return false;
  for (int k = 0; k < static_cast<int>(w.ops.size()); ++k) {
    int j = w.p + 1 + k;
    int gen_dim = w.n - j;
    const SimplicialOperator& o = w.ops[k];
    if (o.min_source_dim() > gen_dim) return false;
    if (gen_dim + o.dim_shift() != w.level) return false;
  }
  return true;
}

GWord gword_compose(const GWord& a, const GWord& b) {
  if (a.n != b.n || a.q != b.p || a.level != b.level) {
    throw std::invalid_argument("g-words do not compose");
  }
  GWord out = a;
  out.q = b.q;
  out.ops.insert(out.ops.end(), b.ops.begin(), b.ops.end());
  return out;
}

GWord gword_face(const GWord& w, int i) {
  GWord out = w;
  out.level = w.level - 1;
  for (SimplicialOperator& o : out.ops) o = compose(face_op(i), o);
  return out;
}

GWord gword_degeneracy(const GWord& w, int i) {
  GWord out = w;
  out.level = w.level + 1;
  for (SimplicialOperator& o : out.ops) o = compose(degeneracy_op(i), o);
  return out;
}

GWord gword_apply(const GWord& w, const SimplicialOperator& op) {
  GWord out = w;
  for (auto it = op.faces.rbegin(); it != op.faces.rend(); ++it) {
    out = gword_face(out, *it);
  }
  for (auto it = op.degens.rbegin(); it != op.degens.rend(); ++it) {
    out = gword_degeneracy(out, *it);
  }
  return out;
}

GWord cosimplicial_face(const GWord& w, int i) {
  if (i < 0 || i > w.n + 1) throw std::invalid_argument("coface out of range");
  auto vmap = [i](int v) { return v < i ? v : v + 1; };
  GWord out;
  out.n = w.n + 1;
  out.p = vmap(w.p);
  out.q = vmap(w.q);
  out.level = w.level;
  for (int k = 0; k < static_cast<int>(w.ops.size()); ++k) {
    int j = w.p + 1 + k;
    const SimplicialOperator& o = w.ops[k];
    if (j > i) {
      out.ops.push_back(o);  // g_{j+1}
    } else if (j == i) {
      // g_i maps to the composite (d0 g_i) then g_{i+1}.
      out.ops.push_back(compose(o, face_op(0)));
      out.ops.push_back(o);
    } else {
      out.ops.push_back(compose(o, face_op(i - j)));
    }
  }
  if (!gword_valid(out)) throw std::logic_error("invalid coface image");
  return out;
}

GWord cosimplicial_degeneracy(const GWord& w, int i) {
  if (i < 0 || i > w.n - 1) {
    throw std::invalid_argument("codegeneracy out of range");
  }
  auto vmap = [i](int v) { return v <= i ? v : v - 1; };
  GWord out;
  out.n = w.n - 1;
  out.p = vmap(w.p);
  out.q = vmap(w.q);
  out.level = w.level;
  for (int k = 0; k < static_cast<int>(w.ops.size()); ++k) {
    int j = w.p + 1 + k;
    const SimplicialOperator& o = w.ops[k];
    if (j <= i) {
      out.ops.push_back(compose(o, degeneracy_op(i - j)));
    } else if (j == i + 1) {
      continue;  // g_{i+1} maps to the identity
    } else {
      out.ops.push_back(o);  // g_{j-1}
    }
  }
  if (!gword_valid(out)) throw std::logic_error("invalid codegeneracy image");
  return out;
}

// --- Loop groupoid words ----------------------------------------------------

namespace {

bool elided(const SimplexRef& r) {
  return !r.degens.empty() && r.degens.back() == 0;
}

}  // namespace

GKanWord gkan_normalize(const SSet& X, const GKanWord& w) {
  (void)X;
  GKanWord out;
  out.level = w.level;
  for (const GKanLetter& l : w.letters) {
    if (elided(l.simplex)) continue;
    if (!out.letters.empty() && out.letters.back().simplex == l.simplex &&
        out.letters.back().inverse != l.inverse) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

GKanWord gkan_mult(const SSet& X, const GKanWord& a, const GKanWord& b) {
  if (a.level != b.level) throw std::invalid_argument("level mismatch");
  GKanWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return gkan_normalize(X, out);
}

GKanWord gkan_inverse(const GKanWord& w) {
  GKanWord out;
  out.level = w.level;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(GKanLetter{it->simplex, !it->inverse});
  }
  return out;
}

GKanWord gkan_face(const SSet& X, const GKanWord& w, int i) {
  GKanWord out;
  out.level = w.level - 1;
  if (i < 0 || i > w.level) throw std::invalid_argument("face out of range");
  for (const GKanLetter& l : w.letters) {
    if (i >= 1) {
      out.letters.push_back(
          GKanLetter{face_of(X, l.simplex, i + 1), l.inverse});
    } else {
      SimplexRef a = face_of(X, l.simplex, 0);
      SimplexRef b = face_of(X, l.simplex, 1);
      // The bottom face of a generator is the composite of d1 followed by
      // the inverse of d0, read source-to-target.
      if (!l.inverse) {
        out.letters.push_back(GKanLetter{b, false});
        out.letters.push_back(GKanLetter{a, true});
      } else {
        out.letters.push_back(GKanLetter{a, false});
        out.letters.push_back(GKanLetter{b, true});
      }
    }
  }
  return gkan_normalize(X, out);
}

GKanWord gkan_degeneracy(const SSet& X, const GKanWord& w, int i) {
  if (i < 0 || i > w.level) {
    throw std::invalid_argument("degeneracy out of range");
  }
  GKanWord out;
  out.level = w.level + 1;
  for (const GKanLetter& l : w.letters) {
    out.letters.push_back(
        GKanLetter{degeneracy_of(X, l.simplex, i + 1), l.inverse});
  }
  return gkan_normalize(X, out);
}

std::string gkan_to_string(const SSet& X, const GKanWord& w) {
  if (w.letters.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) out += ".";
    out += "<" + X.describe(w.letters[k].simplex) + ">";
    if (w.letters[k].inverse) out += "^-1";
  }
  return out;
}

SimplexRef gkan_letter_source(const SSet& X, const SimplexRef& y) {
  SimplexRef r = y;
  int m = y.dim();
  for (int k = 0; k < m; ++k) r = face_of(X, r, 1);
  return r;
}

SimplexRef gkan_letter_target(const SSet& X, const SimplexRef& y) {
  SimplexRef r = y;
  int m = y.dim();
  for (int k = 0; k < m - 1; ++k) r = face_of(X, r, 2);
  return face_of(X, r, 0);
}

SimplexRef simplex_image(const SSet& X, const SimplexRef& sigma,
                         const SSet& delta_m, const SimplexRef& r) {
  int m = sigma.dim();
  // Vertex labels of r's nondegenerate base inside Delta^m.
  SimplexRef base{r.base_dim, r.base_idx, {}};
  std::vector<bool> present(m + 1, false);
  for (int v = 0; v <= base.dim(); ++v) {
    present[vertex_of(delta_m, base, v).base_idx] = true;
  }
  SimplicialOperator op = degeneracy_word(r.degens);
  for (int v = m; v >= 0; --v) {
    if (!present[v]) op.faces.insert(op.faces.begin(), v);
  }
  std::sort(op.faces.begin(), op.faces.end());
  return apply_op(X, sigma, op);
}

GKanWord push_gkan_word(const SSet& X, const SimplexRef& sigma,
                        const SSet& delta_m, const GKanWord& w) {
  GKanWord out;
  out.level = w.level;
  for (const GKanLetter& l : w.letters) {
    out.letters.push_back(
        GKanLetter{simplex_image(X, sigma, delta_m, l.simplex), l.inverse});
  }
  return gkan_normalize(X, out);
}

GKanWord eta(const SSet& delta_n, const GWord& w) {
  int n = w.n;
  GKanWord out;
  out.level = w.level;
  for (int k = 0; k < static_cast<int>(w.ops.size()); ++k) {
    int j = w.p + 1 + k;
    // Generator on the vertex range [j-1..n].
    std::string id;
    const char* sep = (n >= 10) ? "." : "";
    for (int v = j - 1; v <= n; ++v) {
      if (v > j - 1) id += sep;
      id += std::to_string(v);
    }
    GKanWord letter;
    letter.level = n - j;
    letter.letters.push_back(GKanLetter{delta_n.ref(id), false});
    const SimplicialOperator& o = w.ops[k];
    for (auto it = o.faces.rbegin(); it != o.faces.rend(); ++it) {
      letter = gkan_face(delta_n, letter, *it);
    }
    for (auto it = o.degens.rbegin(); it != o.degens.rend(); ++it) {
      letter = gkan_degeneracy(delta_n, letter, *it);
    }
    if (letter.level != w.level) throw std::logic_error("eta level mismatch");
    out.letters.insert(out.letters.end(), letter.letters.begin(),
                       letter.letters.end());
  }
  return gkan_normalize(delta_n, out);
}

// --- Rigidification flags ---------------------------------------------------

namespace {

unsigned interval_mask(int p, int q) {
  unsigned m = 0;
  for (int v = p; v <= q; ++v) m |= 1u << v;
  return m;
}

}  // namespace

bool flag_valid(const Flag& f) {
  if (f.p > f.q || f.p < 0 || f.q > f.n || f.sets.empty()) return false;
  unsigned ends = (1u << f.p) | (1u << f.q);
  unsigned window = interval_mask(f.p, f.q);
  unsigned prev = 0;
  for (std::size_t t = 0; t < f.sets.size(); ++t) {
    unsigned s = f.sets[t];
    if ((s & ends) != ends) return false;
    if ((s & ~window) != 0) return false;
    if (t > 0 && (prev & ~s) != 0) return false;  // must be increasing
    prev = s;
  }
  return true;
}

bool flag_nondegenerate(const Flag& f) {
  for (std::size_t t = 1; t < f.sets.size(); ++t) {
    if (f.sets[t] == f.sets[t - 1]) return false;
  }
  return true;
}

// Level-vertex v of a flag is the set at chain position (level - v): the
// chain is stored smallest set first, but the simplex runs from the full end.
// This is the orientation under which the comparison-operator words of
// maximal flags assemble into a simplicial and monoidal map.
Flag flag_face(const Flag& f, int i) {
  Flag out = f;
  out.sets.erase(out.sets.begin() + (f.level() - i));
  return out;
}

Flag flag_degeneracy(const Flag& f, int i) {
  int pos = f.level() - i;
  Flag out = f;
  out.sets.insert(out.sets.begin() + pos, f.sets[pos]);
  return out;
}

Flag compose_flags(const Flag& a, const Flag& b) {
  if (a.n != b.n || a.q != b.p || a.sets.size() != b.sets.size()) {
    throw std::invalid_argument("flags do not compose");
  }
  Flag out;
  out.n = a.n;
  out.p = a.p;
  out.q = b.q;
  for (std::size_t t = 0; t < a.sets.size(); ++t) {
    out.sets.push_back(a.sets[t] | b.sets[t]);
  }
  return out;
}

std::string flag_to_string(const Flag& f) {
  std::ostringstream os;
  for (std::size_t t = 0; t < f.sets.size(); ++t) {
    if (t) os << "<=";
    os << "{";
    bool first = true;
    for (int v = 0; v <= f.n; ++v) {
      if (f.sets[t] & (1u << v)) {
        if (!first) os << ",";
        first = false;
        os << v;
      }
    }
    os << "}";
  }
  return os.str();
}

std::vector<Flag> top_flags(int n, int p, int q) {
  std::vector<int> interior;
  for (int v = p + 1; v <= q - 1; ++v) interior.push_back(v);
  std::vector<Flag> out;
  std::sort(interior.begin(), interior.end());
  do {
    Flag f;
    f.n = n;
    f.p = p;
    f.q = q;
    unsigned cur = (1u << p) | (1u << q);
    f.sets.push_back(cur);
    for (int v : interior) {
      cur |= 1u << v;
      f.sets.push_back(cur);
    }
    out.push_back(std::move(f));
  } while (std::next_permutation(interior.begin(), interior.end()));
  return out;
}

std::vector<int> flag_alpha(const Flag& f) {
  std::vector<int> addition;
  for (std::size_t t = 1; t < f.sets.size(); ++t) {
    unsigned diff = f.sets[t] & ~f.sets[t - 1];
    if (__builtin_popcount(diff) != 1) {
      throw std::invalid_argument("not a maximal flag");
    }
    addition.push_back(__builtin_ctz(diff));
  }
  std::reverse(addition.begin(), addition.end());
  return addition;
}

std::vector<int> flag_beta(const std::vector<int>& alpha) {
  std::vector<int> out(alpha.size(), 0);
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    for (std::size_t l = k + 1; l < alpha.size(); ++l) {
      if (alpha[l] < alpha[k]) ++out[k];
    }
  }
  return out;
}

std::vector<int> flag_gamma(const Flag& f) { return flag_beta(flag_alpha(f)); }

namespace {

Flag relabel_flag(const Flag& f, int new_n, const std::function<int(int)>& vmap) {
  Flag out;
  out.n = new_n;
  out.p = vmap(f.p);
  out.q = vmap(f.q);
  for (unsigned s : f.sets) {
    unsigned t = 0;
    for (int v = 0; v <= f.n; ++v) {
      if (s & (1u << v)) t |= 1u << vmap(v);
    }
    out.sets.push_back(t);
  }
  return out;
}

}  // namespace

Flag flag_coface(const Flag& f, int i) {
  if (i < 0 || i > f.n + 1) throw std::invalid_argument("coface out of range");
  return relabel_flag(f, f.n + 1, [i](int v) { return v < i ? v : v + 1; });
}

Flag flag_codegeneracy(const Flag& f, int i) {
  if (i < 0 || i > f.n - 1) {
    throw std::invalid_argument("codegeneracy out of range");
  }
  return relabel_flag(f, f.n - 1, [i](int v) { return v <= i ? v : v - 1; });
}

SimplicialOperator comparison_operator(int m, int j,
                                       const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != m - 1) {
    throw std::invalid_argument("tuple length must be m-1");
  }
  if (j < 0 || j > m - 1) throw std::invalid_argument("j out of range");
  if (m == 1) return identity_op();
  auto shift = [](const SimplicialOperator& o) {
    SimplicialOperator out = o;
    for (int& i : out.degens) ++i;
    for (int& i : out.faces) ++i;
    return out;
  };
  int i1 = t[0];
  std::vector<int> rest(t.begin() + 1, t.end());
  if (j < i1) {
    SimplicialOperator inner =
        compose(degeneracy_op(0), face_op(i1 - j));  // s0 d_{i1-j}
    return compose(shift(comparison_operator(m - 1, j, rest)), inner);
  }
  if (j == i1) {
    return shift(comparison_operator(m - 1, j, rest));
  }
  return compose(shift(comparison_operator(m - 1, j - 1, rest)),
                 degeneracy_op(0));
}

GWord sz(const Flag& f) {
  if (!flag_valid(f)) throw std::invalid_argument("invalid flag");
  // Closed form: coordinate g_j of the image word is the operator whose
  // level-vertex chain is v |-> (least element >= j of the set at level
  // vertex v) - j.  This assembles the maximal-flag words of the
  // comparison recursion into a single simplicial, monoidal map; on the
  // level-(q-p-1) flags with q = n it reproduces the recursion verbatim.
  int k = f.level();
  GWord w;
  w.n = f.n;
  w.p = f.p;
  w.q = f.q;
  w.level = k;
  for (int j = f.p + 1; j <= f.q; ++j) {
    std::vector<int> phi;
    for (int v = 0; v <= k; ++v) {
      unsigned T = f.sets[static_cast<std::size_t>(k - v)];
      int b = -1;
      for (int e = j; e <= f.n; ++e) {
        if (T & (1u << e)) {
          b = e;
          break;
        }
      }
      phi.push_back(b - j);
    }
    // Eilenberg-Zilber word of the monotone vertex map phi: [k] -> [n-j].
    int m = f.n - j;
    SimplicialOperator op;
    std::vector<bool> hit(static_cast<std::size_t>(m) + 1, false);
    for (int x : phi) hit[static_cast<std::size_t>(x)] = true;
    for (int x = 0; x <= m; ++x) {
      if (!hit[static_cast<std::size_t>(x)]) op.faces.push_back(x);
    }
    for (int v = k - 1; v >= 0; --v) {
      if (phi[static_cast<std::size_t>(v)] == phi[static_cast<std::size_t>(v) + 1]) {
        op.degens.push_back(v);
      }
    }
    w.ops.push_back(std::move(op));
  }
  if (!gword_valid(w)) throw std::logic_error("invalid comparison word");
  return w;
}

}  // namespace pathcat
