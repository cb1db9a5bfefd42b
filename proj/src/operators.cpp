#include "pathcat/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace pathcat {

int SimplicialOperator::min_source_dim() const {
  // Smallest m such that every letter is in range when the word is applied
  // right-to-left to an m-simplex: d_j needs current dim >= max(j, 1) and
  // lowers it; s_i needs current dim >= i and raises it.
  auto legal_from = [&](int m) {
    int dim = m;
    for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
      if (dim < 1 || *it > dim) return false;
      --dim;
    }
    for (auto it = degens.rbegin(); it != degens.rend(); ++it) {
      if (*it > dim) return false;
      ++dim;
    }
    return true;
  };
  int m = 0;
  while (!legal_from(m)) ++m;
  return m;
}

std::string SimplicialOperator::to_string() const {
  if (is_identity()) return "id";
  std::string out;
  for (int i : degens) out += "s" + std::to_string(i);
  for (int j : faces) out += "d" + std::to_string(j);
  return out;
}

SimplicialOperator identity_op() { return {}; }

SimplicialOperator face_op(int i) {
  SimplicialOperator op;
  op.faces.push_back(i);
  return op;
}

SimplicialOperator degeneracy_op(int i) {
  SimplicialOperator op;
  op.degens.push_back(i);
  return op;
}

void prepend_face(SimplicialOperator& op, int c) {
  if (c < 0) throw std::invalid_argument("negative face index");
  // Commute d_c through the degeneracy block, left to right.
  for (std::size_t k = 0; k < op.degens.size(); ++k) {
    int i = op.degens[k];
    if (c < i) {
      op.degens[k] = i - 1;  // d_c s_i = s_{i-1} d_c   (c < i)
    } else if (c == i || c == i + 1) {
      op.degens.erase(op.degens.begin() + static_cast<long>(k));
      return;  // d_i s_i = d_{i+1} s_i = id
    } else {
      c -= 1;  // d_c s_i = s_i d_{c-1}   (c > i+1)
    }
  }
  // Merge into the strictly increasing face block: moving d_c rightwards past
  // d_j with j <= c turns it into d_{c+1}.
  std::size_t pos = 0;
  while (pos < op.faces.size() && op.faces[pos] <= c) {
    ++c;
    ++pos;
  }
  op.faces.insert(op.faces.begin() + static_cast<long>(pos), c);
}

void prepend_degeneracy(SimplicialOperator& op, int c) {
  if (c < 0) throw std::invalid_argument("negative degeneracy index");
  // Merge into the strictly decreasing degeneracy block: moving s_c rightwards
  // past s_i with c <= i turns that s_i into s_{i+1}.
  std::size_t pos = 0;
  while (pos < op.degens.size() && c <= op.degens[pos]) {
    op.degens[pos] += 1;
    ++pos;
  }
  op.degens.insert(op.degens.begin() + static_cast<long>(pos), c);
}

SimplicialOperator compose(const SimplicialOperator& outer,
                           const SimplicialOperator& inner) {
  SimplicialOperator out = inner;
  for (auto it = outer.faces.rbegin(); it != outer.faces.rend(); ++it) {
    prepend_face(out, *it);
  }
  for (auto it = outer.degens.rbegin(); it != outer.degens.rend(); ++it) {
    prepend_degeneracy(out, *it);
  }
  return out;
}

SimplicialOperator normalize_word(const std::vector<OpLetter>& letters) {
  SimplicialOperator out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (it->is_face) {
      prepend_face(out, it->index);
    } else {
      prepend_degeneracy(out, it->index);
    }
  }
  return out;
}

SimplicialOperator degeneracy_word(const std::vector<int>& degens) {
  for (std::size_t k = 1; k < degens.size(); ++k) {
    if (degens[k - 1] <= degens[k]) {
      throw std::invalid_argument("degeneracy word not strictly decreasing");
    }
  }
  SimplicialOperator op;
  op.degens = degens;
  return op;
}

std::vector<int> total_degeneracy_indices(int n) {
  std::vector<int> out;
  for (int i = n - 1; i >= 0; --i) out.push_back(i);
  return out;
}

}  // namespace pathcat
