#include "gpack/symmetry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "gpack/error.hpp"

namespace gpack {

namespace {

struct Palette {
  double tol;
  std::vector<Complex> reps;

  // Index of the representative within tol; adds a new one otherwise.
  int classify(Complex z) {
    int hit = -1;
    double nearest = INFINITY;
    for (std::size_t k = 0; k < reps.size(); ++k) {
      double dist = std::abs(reps[k] - z);
      if (dist <= tol && hit < 0) hit = static_cast<int>(k);
      if (dist > tol) nearest = std::min(nearest, dist);
    }
    if (nearest <= 10 * tol)
      throw NumericError("Gram entries cannot be separated into colour classes at tolerance " + std::to_string(tol));
    if (hit >= 0) return hit;
    reps.push_back(z);
    return static_cast<int>(reps.size()) - 1;
  }
};

std::vector<int> colour_values(const GramMatrix& gram, Palette& palette) {
  const int n = gram.n();
  std::vector<Complex> values;
  values.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) values.push_back(gram(i, j));
  std::vector<int> color(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) color[k] = palette.classify(values[k]);
  return color;
}

// Renumbers palette colours by sorted representative value.
void canonical_palette(const Palette& palette, std::vector<std::vector<int>*> tables) {
  std::vector<int> order(palette.reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto za = palette.reps[static_cast<std::size_t>(a)], zb = palette.reps[static_cast<std::size_t>(b)];
    return std::pair(za.real(), za.imag()) < std::pair(zb.real(), zb.imag());
  });
  std::vector<int> rank(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  for (auto* t : tables)
    for (int& c : *t) c = rank[static_cast<std::size_t>(c)];
}

using Cells = std::vector<int>;

int cell_count(const Cells& cells) { return cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1; }

// Equitable refinement. New cells are numbered by sorted signature, so the
// result commutes with graph isomorphisms.
Cells refine(const ColoredDigraph& g, Cells cells) {
  const int n = g.n;
  using Signature = std::vector<std::array<int, 3>>;
  std::vector<std::pair<int, Signature>> keys(static_cast<std::size_t>(n));
  int before = -1;
  for (;;) {
    for (int v = 0; v < n; ++v) {
      Signature sig;
      sig.reserve(static_cast<std::size_t>(n));
      for (int w = 0; w < n; ++w)
        if (w != v) sig.push_back({cells[static_cast<std::size_t>(w)], g.at(v, w), g.at(w, v)});
      std::sort(sig.begin(), sig.end());
      keys[static_cast<std::size_t>(v)] = {cells[static_cast<std::size_t>(v)], std::move(sig)};
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
    Cells next(static_cast<std::size_t>(n));
    int id = -1;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k == 0 || keys[static_cast<std::size_t>(order[k])] != keys[static_cast<std::size_t>(order[k - 1])]) ++id;
      next[static_cast<std::size_t>(order[k])] = id;
    }
    const int after = id + 1;
    cells = std::move(next);
    if (after == before) return cells;
    before = after;
  }
}

Cells individualize(const Cells& cells, int v) {
  Cells out(cells.size());
  for (std::size_t u = 0; u < cells.size(); ++u)
    out[u] = 2 * cells[u] + ((static_cast<int>(u) != v && cells[u] == cells[static_cast<std::size_t>(v)]) ? 1 : 0);
  return out;
}

std::vector<int> invariant(const Cells& cells) {
  std::vector<int> sizes(static_cast<std::size_t>(cell_count(cells)), 0);
  for (int c : cells) ++sizes[static_cast<std::size_t>(c)];
  return sizes;
}

// Vertices of the first cell with more than one vertex, ascending.
std::vector<int> target_cell(const Cells& cells) {
  auto sizes = invariant(cells);
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] < 2) continue;
    std::vector<int> members;
    for (std::size_t v = 0; v < cells.size(); ++v)
      if (cells[v] == static_cast<int>(c)) members.push_back(static_cast<int>(v));
    return members;
  }
  return {};
}

Cells initial_cells(const ColoredDigraph& g) {
  Cells cells(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) cells[static_cast<std::size_t>(v)] = g.at(v, v);
  return refine(g, std::move(cells));
}

class Search {
 public:
  Search(const ColoredDigraph& a, const ColoredDigraph& b, std::uint64_t cap) : a_(a), b_(b), cap_(cap) {
    Cells cells = initial_cells(a_);
    count_node();
    for (;;) {
      auto target = target_cell(cells);
      if (target.empty()) break;
      path_.push_back({cells, target, target.front()});
      cells = refine(a_, individualize(cells, target.front()));
      count_node();
    }
    leaf_ = std::move(cells);
    for (const auto& node : path_) invariants_.push_back(invariant(node.cells));
    invariants_.push_back(invariant(leaf_));
  }

  struct Node {
    Cells cells;
    std::vector<int> target;
    int chosen;
  };
  const std::vector<Node>& path() const { return path_; }

  // Searches the subtree of b below `cells` at the given depth for a leaf
  // that maps the first leaf of a onto b.
  std::optional<Permutation> find(const Cells& cells, std::size_t depth) {
    count_node();
    if (invariant(cells) != invariants_[depth]) return std::nullopt;
    auto target = target_cell(cells);
    if (target.empty()) return leaf_map(cells);
    for (int u : target) {
      auto found = find(refine(b_, individualize(cells, u)), depth + 1);
      if (found) return found;
    }
    return std::nullopt;
  }

  std::optional<Permutation> find_from_root() { return find(initial_cells(b_), 0); }

  std::optional<Permutation> find_below(std::size_t level, int vertex) {
    return find(refine(b_, individualize(path_[level].cells, vertex)), level + 1);
  }

 private:
  void count_node() {
    if (++nodes_ > cap_) throw ResourceError("symmetry search exceeded " + std::to_string(cap_) + " nodes");
  }

  std::optional<Permutation> leaf_map(const Cells& leaf) const {
    const int n = a_.n;
    std::vector<int> vertex_of_cell(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) vertex_of_cell[static_cast<std::size_t>(leaf[static_cast<std::size_t>(v)])] = v;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) images[static_cast<std::size_t>(v)] = vertex_of_cell[static_cast<std::size_t>(leaf_[static_cast<std::size_t>(v)])];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (b_.at(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]) != a_.at(i, j)) return std::nullopt;
    return Permutation(std::move(images));
  }

  const ColoredDigraph& a_;
  const ColoredDigraph& b_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::vector<Node> path_;
  Cells leaf_;
  std::vector<std::vector<int>> invariants_;
};

void check_graph(const ColoredDigraph& g) {
  if (g.n < 1 || g.color.size() != static_cast<std::size_t>(g.n) * static_cast<std::size_t>(g.n))
    throw InputError("colour matrix has wrong size");
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

}  // namespace

ColoredDigraph color_gram(const GramMatrix& gram, double tol) {
  ColoredDigraph g;
  g.n = gram.n();
  if (!gram.exact_colors().empty()) {
    // Exact labels are arbitrary; renumber by first appearance.
    std::map<int, int> ids;
    for (int c : gram.exact_colors()) g.color.push_back(ids.emplace(c, static_cast<int>(ids.size())).first->second);
    return g;
  }
  Palette palette{tol, {}};
  g.color = colour_values(gram, palette);
  canonical_palette(palette, {&g.color});
  return g;
}

std::pair<ColoredDigraph, ColoredDigraph> color_gram_pair(const GramMatrix& a, const GramMatrix& b, double tol) {
  Palette palette{tol, {}};
  ColoredDigraph ga{a.n(), colour_values(a, palette)};
  ColoredDigraph gb{b.n(), colour_values(b, palette)};
  canonical_palette(palette, {&ga.color, &gb.color});
  return {std::move(ga), std::move(gb)};
}

PermutationGroup automorphism_group(const ColoredDigraph& graph, std::uint64_t node_cap) {
  check_graph(graph);
  const int n = graph.n;
  Search search(graph, graph, node_cap);
  std::vector<Permutation> gens;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);

  // Deepest level first: every generator found so far fixes the path prefix
  // above the current level, so its orbits bound what remains to be searched.
  for (std::size_t level = search.path().size(); level-- > 0;) {
    const auto& node = search.path()[level];
    for (int w : node.target) {
      if (find_root(parent, w) == find_root(parent, node.chosen)) continue;
      auto sigma = search.find_below(level, w);
      if (!sigma) continue;
      for (int x = 0; x < n; ++x) {
        int r1 = find_root(parent, x), r2 = find_root(parent, (*sigma)(x));
        if (r1 != r2) parent[static_cast<std::size_t>(std::max(r1, r2))] = std::min(r1, r2);
      }
      gens.push_back(std::move(*sigma));
    }
  }
  return PermutationGroup(n, std::move(gens));
}

std::optional<Permutation> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b, std::uint64_t node_cap) {
  check_graph(a);
  check_graph(b);
  if (a.n != b.n) return std::nullopt;
  Search search(a, b, node_cap);
  return search.find_from_root();
}

PermutationGroup gram_symmetry_group(const GramMatrix& gram, double tol, std::uint64_t node_cap) {
  auto group = automorphism_group(color_gram(gram, tol), node_cap);
  const CMatrix& g = gram.entries();
  for (const auto& sigma : group.generators()) {
    double worst = 0;
    for (int i = 0; i < gram.n(); ++i)
      for (int j = 0; j < gram.n(); ++j) worst = std::max(worst, std::abs(g(sigma(i), sigma(j)) - g(i, j)));
    if (worst >= 10 * tol) throw NumericError("symmetry generator moves Gram entries by " + std::to_string(worst));
  }
  return group;
}

bool is_homogeneous(const GramMatrix& gram, double tol, std::uint64_t node_cap) {
  auto group = gram_symmetry_group(gram, tol, node_cap);
  return static_cast<int>(orbit(group, 0).size()) == gram.n();
}

bool regular_subgroup_check(const GroupAction& action, std::span<const Permutation> subgroup_generators) {
  for (const auto& g : subgroup_generators)
    if (g.degree() != action.point_count) throw InputError("subgroup generator degree does not match the action");
  PermutationGroup k(action.point_count, {subgroup_generators.begin(), subgroup_generators.end()});
  return static_cast<int>(orbit(k, 0).size()) == action.point_count && k.order() == action.point_count;
}

}  // namespace gpack
