#include "pathcat/chains.hpp"

#include <sstream>

#include "pathcat/signs.hpp"

namespace pathcat {

void chain_add(Chain& c, const SimplexRef& r, const Int& coeff) {
  if (coeff == 0) return;
  Int& v = c[r];
  v += coeff;
  if (v == 0) c.erase(r);
}

void tensor_add(TensorChain& c, const SimplexRef& a, const SimplexRef& b,
                const Int& coeff) {
  if (coeff == 0) return;
  Int& v = c[{a, b}];
  v += coeff;
  if (v == 0) c.erase({a, b});
}

Chain chain_normalize(const Chain& c) {
  Chain out;
  for (const auto& [r, v] : c) {
    if (!r.is_degenerate()) chain_add(out, r, v);
  }
  return out;
}

TensorChain tensor_normalize(const TensorChain& c) {
  TensorChain out;
  for (const auto& [p, v] : c) {
    if (!p.first.is_degenerate() && !p.second.is_degenerate()) {
      tensor_add(out, p.first, p.second, v);
    }
  }
  return out;
}

std::string chain_to_string(const SSet& X, const Chain& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, v] : c) {
    if (!first) os << " + ";
    first = false;
    os << v << "*" << X.describe(r);
  }
  return os.str();
}

std::string tensor_to_string(const SSet& X, const TensorChain& c) {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, v] : c) {
    if (!first) os << " + ";
    first = false;
    os << v << "*(" << X.describe(p.first) << " (x) " << X.describe(p.second)
       << ")";
  }
  return os.str();
}

SimplexRef range_face(const SSet& X, const SimplexRef& r, int a, int b) {
  SimplicialOperator op;
  for (int j = 0; j < a; ++j) op.faces.push_back(j);
  for (int j = b + 1; j <= r.dim(); ++j) op.faces.push_back(j);
  return apply_op(X, r, op);
}

SimplexRef front_face(const SSet& X, const SimplexRef& r, int i) {
  return range_face(X, r, 0, i);
}

SimplexRef back_face(const SSet& X, const SimplexRef& r, int i) {
  return range_face(X, r, i, r.dim());
}

SimplexRef source_vertex(const SSet& X, const SimplexRef& r) {
  return vertex_of(X, r, 0);
}

SimplexRef target_vertex(const SSet& X, const SimplexRef& r) {
  return vertex_of(X, r, r.dim());
}

bool is_loop(const SSet& X, const SimplexRef& r) {
  return source_vertex(X, r) == target_vertex(X, r);
}

TensorChain aw_diagonal(const SSet& X, const SimplexRef& r) {
  TensorChain out;
  int n = r.dim();
  for (int i = 0; i <= n; ++i) {
    SimplexRef f = front_face(X, r, i);
    SimplexRef b = back_face(X, r, i);
    if (f.is_degenerate() || b.is_degenerate()) continue;
    tensor_add(out, f, b, 1);
  }
  return out;
}

TensorChain aw_diagonal(const SSet& X, const Chain& c) {
  TensorChain out;
  for (const auto& [r, v] : c) {
    if (r.is_degenerate()) continue;
    for (const auto& [p, w] : aw_diagonal(X, r)) {
      tensor_add(out, p.first, p.second, v * w);
    }
  }
  return out;
}

Chain tilde_boundary(const SSet& X, const SimplexRef& r) {
  Chain out;
  if (r.is_degenerate()) return out;
  int n = r.dim();
  for (int i = 1; i <= n - 1; ++i) {
    SimplexRef f = face_of(X, r, i);
    if (f.is_degenerate()) continue;
    chain_add(out, f, signs::inner_face_sign(i));
  }
  return out;
}

Chain tilde_boundary(const SSet& X, const Chain& c) {
  Chain out;
  for (const auto& [r, v] : c) {
    if (r.is_degenerate()) continue;
    for (const auto& [f, w] : tilde_boundary(X, r)) chain_add(out, f, v * w);
  }
  return out;
}

int edge_weight(const SSet& X, const SimplexRef& r) {
  (void)X;
  return (r.dim() == 1 && !r.is_degenerate()) ? 1 : 0;
}

Int curvature_h(const SSet& X, const SimplexRef& r) {
  if (r.dim() != 2 || r.is_degenerate()) return 0;
  return Int(edge_weight(X, range_face(X, r, 0, 1))) *
         Int(edge_weight(X, range_face(X, r, 1, 2)));
}

Chain curvature_rhs(const SSet& X, const SimplexRef& r) {
  Chain out;
  int n = r.dim();
  if (n < 2) return out;
  SimplexRef f = range_face(X, r, 0, 2);
  if (is_loop(X, f)) {
    SimplexRef rest = range_face(X, r, 2, n);
    if (!rest.is_degenerate()) chain_add(out, rest, curvature_h(X, f));
  }
  SimplexRef b = range_face(X, r, n - 2, n);
  if (is_loop(X, b)) {
    SimplexRef rest = range_face(X, r, 0, n - 2);
    if (!rest.is_degenerate()) chain_add(out, rest, -curvature_h(X, b));
  }
  return out;
}

Chain tilde_boundary_candidate(const SSet& X, const SimplexRef& r, int global,
                               bool koszul_on_front) {
  Chain out;
  int n = r.dim();
  if (n < 1) return out;
  for (int i = 0; i <= n; ++i) {
    SimplexRef f = face_of(X, r, i);
    if (f.is_degenerate()) continue;
    chain_add(out, f, (i % 2 == 0) ? 1 : -1);
  }
  // (id (x) e~) term: second Alexander-Whitney factor is the last edge.
  {
    SimplexRef front = front_face(X, r, n - 1);
    SimplexRef last_edge = range_face(X, r, n - 1, n);
    int kos = koszul_on_front ? ((n - 1) % 2 == 0 ? 1 : -1) : 1;
    if (!front.is_degenerate()) {
      chain_add(out, front, Int(global) * kos * edge_weight(X, last_edge));
    }
  }
  // (e~ (x) id) term: first Alexander-Whitney factor is the first edge.
  {
    SimplexRef back = back_face(X, r, 1);
    SimplexRef first_edge = range_face(X, r, 0, 1);
    if (!back.is_degenerate()) {
      chain_add(out, back, Int(-global) * edge_weight(X, first_edge));
    }
  }
  return out;
}

namespace {

template <typename Fn>
std::string for_each_nondeg(const SSet& X, int min_dim, Fn&& fn) {
  for (int n = min_dim; n <= X.top_dim(); ++n) {
    for (int k = 0; k < X.count(n); ++k) {
      std::string err = fn(SimplexRef{n, k, {}});
      if (!err.empty()) return err;
    }
  }
  return "";
}

}  // namespace

std::string check_counit_axiom(const SSet& X) {
  // The modified boundary of the frozen convention must have no degree-0
  // component; with the closed form this means it vanishes on 1-simplices and
  // never outputs vertices.
  return for_each_nondeg(X, 1, [&](const SimplexRef& r) -> std::string {
    Chain b = tilde_boundary(X, r);
    for (const auto& [f, v] : b) {
      if (f.dim() == 0 && v != 0) {
        return "degree-0 component of the modified boundary of " + X.id_of(r);
      }
    }
    if (r.dim() == 1 && !b.empty()) {
      return "modified boundary of edge " + X.id_of(r) + " is nonzero";
    }
    return "";
  });
}

std::string check_coderivation(const SSet& X) {
  return for_each_nondeg(X, 1, [&](const SimplexRef& r) -> std::string {
    TensorChain lhs = aw_diagonal(X, tilde_boundary(X, r));
    TensorChain rhs;
    for (const auto& [p, v] : aw_diagonal(X, r)) {
      for (const auto& [f, w] : tilde_boundary(X, p.first)) {
        tensor_add(rhs, f, p.second, v * w);
      }
      int kos = (p.first.dim() % 2 == 0) ? 1 : -1;
      for (const auto& [f, w] : tilde_boundary(X, p.second)) {
        tensor_add(rhs, p.first, f, v * w * kos);
      }
    }
    if (lhs != rhs) {
      return "coderivation fails on " + X.id_of(r) + ": lhs " +
             tensor_to_string(X, lhs) + " rhs " + tensor_to_string(X, rhs);
    }
    return "";
  });
}

std::string check_curvature_identity(const SSet& X) {
  return for_each_nondeg(X, 1, [&](const SimplexRef& r) -> std::string {
    Chain lhs = tilde_boundary(X, tilde_boundary(X, r));
    Chain rhs = curvature_rhs(X, r);
    if (lhs != rhs) {
      return "curvature identity fails on " + X.id_of(r) + ": square " +
             chain_to_string(X, lhs) + " vs " + chain_to_string(X, rhs);
    }
    return "";
  });
}

}  // namespace pathcat
