#include "gpack/permgroup.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <random>
#include <unordered_map>

#include "gpack/error.hpp"

namespace gpack {

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  b.reserve(levels.size());
  for (const auto& level : levels) b.push_back(level.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& level : levels) result *= static_cast<long long>(level.orbit.size());
  return result;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g, std::size_t start) const {
  for (std::size_t i = start; i < levels.size(); ++i) {
    const auto& level = levels[i];
    int x = g(level.base_point);
    const auto& u = level.transversal[static_cast<std::size_t>(x)];
    if (!u) return {std::move(g), i};
    g = u->inverse() * g;
  }
  return {std::move(g), levels.size()};
}

namespace {

class ChainBuilder {
 public:
  ChainBuilder(int degree, std::span<const int> prefix) {
    chain_.degree = degree;
    for (int b : prefix) {
      if (b < 0 || b >= degree) throw InputError("base point out of range");
      push_level(b);
    }
  }

  void build(std::span<const Permutation> generators) {
    for (const auto& g : generators) absorb(g, 0);
    if (strong_.empty()) return;
    random_phase(generators);
    verify();
  }

  StabilizerChain take() { return std::move(chain_); }

 private:
  // Sifts g from the given level and extends the chain with the residue.
  // Returns the depth at which something was added, or -1.
  long absorb(const Permutation& g, std::size_t start) {
    auto [residue, depth] = chain_.sift(g, start);
    if (residue.is_identity()) return -1;
    if (depth == chain_.levels.size()) {
      int moved = 0;
      while (residue(moved) == moved) ++moved;
      push_level(moved);
    }
    strong_.push_back({std::move(residue), depth});
    for (std::size_t i = 0; i <= depth; ++i) rebuild(i);
    return static_cast<long>(depth);
  }

  void push_level(int point) {
    StabilizerChain::Level level;
    level.base_point = point;
    level.orbit = {point};
    level.transversal.assign(static_cast<std::size_t>(chain_.degree), std::nullopt);
    level.transversal[static_cast<std::size_t>(point)] = Permutation::identity(chain_.degree);
    chain_.levels.push_back(std::move(level));
  }

  void rebuild(std::size_t i) {
    auto& level = chain_.levels[i];
    level.generators.clear();
    for (const auto& [g, depth] : strong_)
      if (depth >= i) level.generators.push_back(g);
    level.transversal.assign(static_cast<std::size_t>(chain_.degree), std::nullopt);
    level.transversal[static_cast<std::size_t>(level.base_point)] = Permutation::identity(chain_.degree);
    level.orbit = {level.base_point};
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      int y = level.orbit[k];
      for (const auto& s : level.generators) {
        int x = s(y);
        auto& slot = level.transversal[static_cast<std::size_t>(x)];
        if (slot) continue;
        slot = s * *level.transversal[static_cast<std::size_t>(y)];
        level.orbit.push_back(x);
      }
    }
  }

  // Product replacement; quickly finds most of the strong generators.
  void random_phase(std::span<const Permutation> generators) {
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long long>(chain_.degree));
    std::vector<Permutation> state(generators.begin(), generators.end());
    while (state.size() < 10) state.push_back(state[state.size() % generators.size()]);
    Permutation acc = Permutation::identity(chain_.degree);
    std::uniform_int_distribution<std::size_t> pick(0, state.size() - 1);
    auto step = [&] {
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i) j = pick(rng);
      state[i] = (rng() & 1) ? state[i] * state[j] : state[i] * state[j].inverse();
      acc = acc * state[i];
      return acc;
    };
    for (int k = 0; k < 40; ++k) step();
    int quiet = 0;
    while (quiet < 24) {
      if (absorb(step(), 0) >= 0) quiet = 0;
      else ++quiet;
    }
  }

  // Sifts every Schreier generator, deepest level first. Levels below the
  // current one are complete, so sifting is an exact membership test there.
  void verify() {
    std::size_t i = chain_.levels.size();
    while (i-- > 0) {
      bool changed = false;
      const auto level = chain_.levels[i];
      for (int x : level.orbit) {
        const auto& ux = *level.transversal[static_cast<std::size_t>(x)];
        for (const auto& s : level.generators) {
          const auto& usx = *level.transversal[static_cast<std::size_t>(s(x))];
          long depth = absorb(usx.inverse() * s * ux, i + 1);
          if (depth >= 0) {
            i = static_cast<std::size_t>(depth) + 1;
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
      if (changed && i > chain_.levels.size()) i = chain_.levels.size();
    }
  }

  StabilizerChain chain_;
  std::vector<std::pair<Permutation, std::size_t>> strong_;
};

}  // namespace

struct PermutationGroup::Lazy {
  std::once_flag once;
  std::unique_ptr<StabilizerChain> chain;
  BigInt order;
};

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)), lazy_(std::make_shared<Lazy>()) {
  if (degree < 1) throw InputError("permutation group degree must be at least 1");
  for (const auto& g : generators_)
    if (g.degree() != degree) throw InputError("generator degree does not match group degree");
}

const StabilizerChain& PermutationGroup::chain() const {
  std::call_once(lazy_->once, [this] {
    ChainBuilder builder(degree_, {});
    builder.build(generators_);
    lazy_->chain = std::make_unique<StabilizerChain>(builder.take());
    lazy_->order = lazy_->chain->order();
  });
  return *lazy_->chain;
}

const BigInt& PermutationGroup::order() const {
  chain();
  return lazy_->order;
}

bool PermutationGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return chain().sift(g).first.is_identity();
}

StabilizerChain PermutationGroup::chain_with_base(std::span<const int> prefix) const {
  ChainBuilder builder(degree_, prefix);
  builder.build(generators_);
  return builder.take();
}

std::string to_string(ActionLabel label) {
  switch (label) {
    case ActionLabel::natural: return "natural";
    case ActionLabel::ordered_pairs: return "ordered_pairs";
    case ActionLabel::regular: return "regular";
    case ActionLabel::explicit_points: return "explicit";
  }
  return "explicit";
}

GroupAction::GroupAction(PermutationGroup g, ActionLabel l, std::vector<std::string> names)
    : group(std::move(g)), point_count(group.degree()), label(l), point_names(std::move(names)) {
  if (!point_names.empty() && static_cast<int>(point_names.size()) != point_count)
    throw InputError("point name count does not match point count");
}

std::vector<int> orbit(const PermutationGroup& group, int point) {
  if (point < 0 || point >= group.degree())
    throw InputError("point " + std::to_string(point) + " out of range");
  std::vector<char> seen(static_cast<std::size_t>(group.degree()), 0);
  std::vector<int> out{point};
  seen[static_cast<std::size_t>(point)] = 1;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : group.generators()) {
      int x = g(out[k]);
      if (!seen[static_cast<std::size_t>(x)]) {
        seen[static_cast<std::size_t>(x)] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_transitive(const GroupAction& action) {
  return static_cast<int>(orbit(action.group, 0).size()) == action.point_count;
}

BigInt group_order(const PermutationGroup& group) { return group.order(); }

PermutationGroup point_stabilizer(const PermutationGroup& group, int point) {
  if (point < 0 || point >= group.degree())
    throw InputError("point " + std::to_string(point) + " out of range");
  const int prefix[] = {point};
  StabilizerChain chain = group.chain_with_base(prefix);
  std::vector<Permutation> gens;
  if (chain.levels.size() > 1) gens = chain.levels[1].generators;
  return PermutationGroup(group.degree(), std::move(gens));
}

int pair_index(int n, int i, int j) { return i * (n - 1) + (j < i ? j : j - 1); }

GroupAction induced_pair_action(const GroupAction& action) {
  const int n = action.point_count;
  if (n < 2) throw InputError("pair action needs at least two points");
  std::vector<Permutation> gens;
  for (const auto& g : action.group.generators()) {
    std::vector<int> images(static_cast<std::size_t>(n) * (n - 1));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) images[static_cast<std::size_t>(pair_index(n, i, j))] = pair_index(n, g(i), g(j));
    gens.emplace_back(std::move(images));
  }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::string a = action.point_names.empty() ? std::to_string(i) : action.point_names[static_cast<std::size_t>(i)];
      std::string b = action.point_names.empty() ? std::to_string(j) : action.point_names[static_cast<std::size_t>(j)];
      names.push_back("(" + a + "," + b + ")");
    }
  return GroupAction(PermutationGroup(n * (n - 1), std::move(gens)), ActionLabel::ordered_pairs, std::move(names));
}

std::vector<Permutation> enumerate_elements(const PermutationGroup& group, std::int64_t element_limit) {
  if (group.order() > element_limit)
    throw ResourceError("group order " + to_string(group.order()) + " exceeds element limit " +
                        std::to_string(element_limit));
  std::vector<Permutation> elements{Permutation::identity(group.degree())};
  std::unordered_map<Permutation, int, PermutationHash> index{{elements[0], 0}};
  std::size_t layer_begin = 0;
  while (layer_begin < elements.size()) {
    std::size_t layer_end = elements.size();
    std::vector<Permutation> next;
    for (std::size_t k = layer_begin; k < layer_end; ++k)
      for (const auto& g : group.generators()) {
        Permutation h = g * elements[k];
        if (index.emplace(h, -1).second) next.push_back(std::move(h));
      }
    std::sort(next.begin(), next.end());
    for (auto& h : next) {
      index[h] = static_cast<int>(elements.size());
      elements.push_back(std::move(h));
    }
    layer_begin = layer_end;
  }
  return elements;
}

GroupAction regular_action(const PermutationGroup& group, std::int64_t element_limit) {
  auto elements = enumerate_elements(group, element_limit);
  std::unordered_map<Permutation, int, PermutationHash> index;
  for (std::size_t k = 0; k < elements.size(); ++k) index.emplace(elements[k], static_cast<int>(k));
  std::vector<Permutation> gens;
  for (const auto& g : group.generators()) {
    std::vector<int> images(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) images[k] = index.at(g * elements[k]);
    gens.emplace_back(std::move(images));
  }
  std::vector<std::string> names;
  names.reserve(elements.size());
  for (const auto& e : elements) names.push_back(e.to_cycles());
  return GroupAction(PermutationGroup(static_cast<int>(elements.size()), std::move(gens)), ActionLabel::regular,
                     std::move(names));
}

}  // namespace gpack
