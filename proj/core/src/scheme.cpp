#include "gpack/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gpack/error.hpp"

namespace gpack {

SchurianScheme::SchurianScheme(int point_count, std::vector<int> labels) : n_(point_count) {
  const auto n = static_cast<std::size_t>(point_count);
  if (point_count < 1) throw InputError("scheme needs at least one point");
  if (labels.size() != n * n) throw InputError("label matrix has wrong size");

  // Raw labels are arbitrary ints; renumber by first appearance in row 0.
  std::unordered_map<int, int> raw_to_row0;
  std::vector<int> first_column;
  for (std::size_t y = 0; y < n; ++y)
    if (raw_to_row0.emplace(labels[y], static_cast<int>(first_column.size())).second)
      first_column.push_back(static_cast<int>(y));
  const std::size_t classes = first_column.size();
  for (int& l : labels) {
    auto it = raw_to_row0.find(l);
    if (it == raw_to_row0.end()) throw InputError("orbital missing from row 0: action is not transitive");
    l = it->second;
  }
  const int diag = labels[0];
  for (std::size_t x = 0; x < n; ++x)
    if (labels[x * n + x] != diag) throw InputError("diagonal is not a single orbital: action is not transitive");
  for (std::size_t y = 0; y < n; ++y)
    if (y != 0 && labels[y] == diag) throw InputError("diagonal orbital meets an off-diagonal pair");

  // Valencies must be constant on rows and columns.
  std::vector<int> valency(classes, 0);
  for (std::size_t y = 0; y < n; ++y) ++valency[static_cast<std::size_t>(labels[y])];
  std::vector<int> count(classes);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t y = 0; y < n; ++y) ++count[static_cast<std::size_t>(labels[x * n + y])];
    if (count != valency) throw InputError("orbital row sums are not constant");
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t y = 0; y < n; ++y) ++count[static_cast<std::size_t>(labels[y * n + x])];
    if (count != valency) throw InputError("orbital column sums are not constant");
  }

  std::vector<int> order(classes);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if ((a == diag) != (b == diag)) return a == diag;
    auto ka = std::pair(valency[static_cast<std::size_t>(a)], first_column[static_cast<std::size_t>(a)]);
    auto kb = std::pair(valency[static_cast<std::size_t>(b)], first_column[static_cast<std::size_t>(b)]);
    return ka < kb;
  });
  std::vector<int> rank(classes);
  for (std::size_t k = 0; k < classes; ++k) rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  for (int& l : labels) l = rank[static_cast<std::size_t>(l)];
  labels_ = std::move(labels);

  valencies_.resize(classes);
  reps_.resize(classes);
  for (std::size_t k = 0; k < classes; ++k) {
    valencies_[k] = valency[static_cast<std::size_t>(order[k])];
    reps_[k] = first_column[static_cast<std::size_t>(order[k])];
  }

  transpose_.resize(classes);
  for (std::size_t k = 0; k < classes; ++k) transpose_[k] = label(reps_[k], 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (labels_[y * n + x] != transpose_[static_cast<std::size_t>(labels_[x * n + y])])
        throw InputError("transpose of an orbital is not an orbital");

  // p_ij^k counts z with (0,z) in R_i and (z, rep_k) in R_j.
  products_.assign(classes * classes, {});
  std::vector<std::int64_t> tally(classes * classes, 0);
  std::vector<std::size_t> touched;
  for (std::size_t k = 0; k < classes; ++k) {
    const auto y = static_cast<std::size_t>(reps_[k]);
    for (std::size_t z = 0; z < n; ++z) {
      std::size_t slot = static_cast<std::size_t>(labels_[z]) * classes + static_cast<std::size_t>(labels_[z * n + y]);
      if (tally[slot]++ == 0) touched.push_back(slot);
    }
    for (std::size_t slot : touched) {
      products_[slot].push_back({static_cast<int>(k), tally[slot]});
      tally[slot] = 0;
    }
    touched.clear();
  }
}

std::vector<int> SchurianScheme::row(int i, int x) const {
  std::vector<int> cols;
  for (int y = 0; y < n_; ++y)
    if (label(x, y) == i) cols.push_back(y);
  return cols;
}

RMatrix SchurianScheme::adjacency(int i) const {
  RMatrix a = RMatrix::Zero(n_, n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (label(x, y) == i) a(x, y) = 1.0;
  return a;
}

CMatrix SchurianScheme::expand(std::span<const Complex> coefficients) const {
  if (static_cast<int>(coefficients.size()) != orbital_count())
    throw InputError("coefficient count does not match orbital count");
  CMatrix m(n_, n_);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) m(x, y) = coefficients[static_cast<std::size_t>(label(x, y))];
  return m;
}

SchurianScheme scheme_from_action(const GroupAction& action) {
  if (!is_transitive(action)) throw InputError("scheme requires a transitive action");
  const int n = action.point_count;
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> labels(un * un, -1);
  std::vector<std::pair<int, int>> queue;
  int next = 0;
  for (int y = 0; y < n; ++y) {
    if (labels[static_cast<std::size_t>(y)] >= 0) continue;
    queue.assign(1, {0, y});
    labels[static_cast<std::size_t>(y)] = next;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      auto [a, b] = queue[k];
      for (const auto& g : action.group.generators()) {
        int ga = g(a), gb = g(b);
        int& slot = labels[static_cast<std::size_t>(ga) * un + static_cast<std::size_t>(gb)];
        if (slot < 0) {
          slot = next;
          queue.emplace_back(ga, gb);
        }
      }
    }
    ++next;
  }
  return SchurianScheme(n, std::move(labels));
}

bool is_commutative(const SchurianScheme& scheme) {
  const int c = scheme.orbital_count();
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j) {
      auto a = scheme.product(i, j);
      auto b = scheme.product(j, i);
      if (!std::equal(a.begin(), a.end(), b.begin(), b.end(),
                      [](const auto& s, const auto& t) { return s.k == t.k && s.value == t.value; }))
        return false;
    }
  return true;
}

SchurianScheme conjugacy_class_scheme(const PermutationGroup& group, std::int64_t element_limit) {
  auto elements = enumerate_elements(group, element_limit);
  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], static_cast<int>(k));

  std::vector<int> cls(elements.size(), -1);
  int classes = 0;
  for (std::size_t start = 0; start < elements.size(); ++start) {
    if (cls[start] >= 0) continue;
    std::vector<int> queue{static_cast<int>(start)};
    cls[start] = classes;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& g : group.generators()) {
        int conj = index.at(g * elements[static_cast<std::size_t>(queue[q])] * g.inverse());
        if (cls[static_cast<std::size_t>(conj)] < 0) {
          cls[static_cast<std::size_t>(conj)] = classes;
          queue.push_back(conj);
        }
      }
    ++classes;
  }

  const std::size_t n = elements.size();
  std::vector<int> labels(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Permutation xinv = elements[x].inverse();
    for (std::size_t y = 0; y < n; ++y) labels[x * n + y] = cls[static_cast<std::size_t>(index.at(xinv * elements[y]))];
  }
  return SchurianScheme(static_cast<int>(n), std::move(labels));
}

bool stable_matrix_check(const SchurianScheme& scheme, const CMatrix& m, double tol) {
  const int n = scheme.point_count();
  if (m.rows() != n || m.cols() != n) throw InputError("matrix shape does not match scheme");
  std::vector<Complex> ref(static_cast<std::size_t>(scheme.orbital_count()));
  std::vector<char> have(ref.size(), 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto l = static_cast<std::size_t>(scheme.label(x, y));
      if (!have[l]) {
        have[l] = 1;
        ref[l] = m(x, y);
      } else if (std::abs(m(x, y) - ref[l]) > tol) {
        return false;
      }
    }
  return true;
}

bool stable_matrix_check(const SchurianScheme& scheme, const RationalMatrix& m) {
  const int n = scheme.point_count();
  if (m.rows != n || m.cols != n) throw InputError("matrix shape does not match scheme");
  std::vector<const Rational*> ref(static_cast<std::size_t>(scheme.orbital_count()), nullptr);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto l = static_cast<std::size_t>(scheme.label(x, y));
      if (!ref[l]) ref[l] = &m(x, y);
      else if (*ref[l] != m(x, y)) return false;
    }
  return true;
}

}  // namespace gpack
