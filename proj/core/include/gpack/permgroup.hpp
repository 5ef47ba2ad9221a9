#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpack/exact.hpp"
#include "gpack/permutation.hpp"

namespace gpack {

// Base and strong generating set with explicit transversals.
struct StabilizerChain {
  struct Level {
    int base_point = 0;
    std::vector<Permutation> generators;  // generators of the stabilizer of earlier base points
    std::vector<int> orbit;               // orbit of base_point, discovery order
    // transversal[x] maps base_point to x; empty if x is not in the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };
  int degree = 0;
  std::vector<Level> levels;

  std::vector<int> base() const;
  BigInt order() const;
  // Returns the residue of g after sifting and the level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t start = 0) const;
};

class PermutationGroup {
 public:
  PermutationGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  std::span<const Permutation> generators() const { return generators_; }

  // Exact order, computed once from the stabilizer chain.
  const BigInt& order() const;
  const StabilizerChain& chain() const;
  bool contains(const Permutation& g) const;

  // Chain whose base begins with the given points.
  StabilizerChain chain_with_base(std::span<const int> prefix) const;

 private:
  struct Lazy;
  int degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<Lazy> lazy_;
};

enum class ActionLabel { natural, ordered_pairs, regular, explicit_points };

std::string to_string(ActionLabel label);

struct GroupAction {
  PermutationGroup group;
  int point_count;
  ActionLabel label = ActionLabel::natural;
  std::vector<std::string> point_names;

  GroupAction(PermutationGroup g, ActionLabel l = ActionLabel::natural,
              std::vector<std::string> names = {});
};

inline constexpr std::int64_t kDefaultElementLimit = 1'000'000;

std::vector<int> orbit(const PermutationGroup& group, int point);
bool is_transitive(const GroupAction& action);
BigInt group_order(const PermutationGroup& group);
PermutationGroup point_stabilizer(const PermutationGroup& group, int point);

// Action on ordered pairs (i, j), i != j, indexed lexicographically.
GroupAction induced_pair_action(const GroupAction& action);
int pair_index(int n, int i, int j);

// All elements, in breadth-first order from the identity over the generator
// list; each new layer is sorted by image sequence.
std::vector<Permutation> enumerate_elements(const PermutationGroup& group,
                                            std::int64_t element_limit = kDefaultElementLimit);
// Left translation action of the group on its enumerated elements.
GroupAction regular_action(const PermutationGroup& group,
                           std::int64_t element_limit = kDefaultElementLimit);

}  // namespace gpack
