#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "character.hpp"

namespace charposet {

enum class EdgeStrategy { Full, MaximalOnly };

/// Outcome of comparing two nodes: Less means a <= b.
enum class Relation { Less, Greater, Equal, Incomparable };

/// (H, chi): subgroup index into the poset's subgroup list, character index into Irr(H).
struct PosetNode {
  int subgroup = 0;
  int chi = 0;
  friend bool operator==(const PosetNode&, const PosetNode&) = default;
};

struct ComponentPartition {
  /// Component ids are numbered by first appearance in node order.
  std::vector<int> node_to_component;
  int count = 0;
  friend bool operator==(const ComponentPartition&, const ComponentPartition&) = default;
};

/// The pairs (H, chi) with |H| >= p^{e+1} and chi in Irr(H), with the
/// comparability edges of the chosen strategy and their components.
class CharPoset {
 public:
  CharPoset(std::shared_ptr<const CharacterRegistry> registry, int p, int e,
            EdgeStrategy strategy = EdgeStrategy::MaximalOnly);

  const CharacterRegistry& registry() const noexcept { return *registry_; }
  const std::shared_ptr<const CharacterRegistry>& registry_ptr() const noexcept { return registry_; }
  int p() const noexcept { return p_; }
  int e() const noexcept { return e_; }
  /// p^{e+1}
  int threshold() const noexcept { return threshold_; }
  EdgeStrategy strategy() const noexcept { return strategy_; }

  /// Lattice ids of the member subgroups, ascending; the last one is G.
  const std::vector<int>& subgroups() const noexcept { return members_; }
  int lattice_id(int subgroup) const { return members_.at(subgroup); }
  /// Index into subgroups(), or -1 for lattice ids below the threshold.
  int subgroup_index(int lattice_id) const { return member_index_.at(lattice_id); }
  int top() const noexcept { return static_cast<int>(members_.size()) - 1; }
  const Subgroup& subgroup(int index) const { return registry_->lattice().at(lattice_id(index)); }
  const ClassFunction& character(const PosetNode& node) const;

  const std::vector<PosetNode>& nodes() const noexcept { return nodes_; }
  int node_index(const PosetNode& node) const;
  /// (lower, upper) node index pairs.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  const ComponentPartition& partition() const noexcept { return partition_; }
  int component_count() const noexcept { return partition_.count; }
  int component_of(const PosetNode& node) const;

  /// Lattice id of the intersection of all subgroups of order p^{e+1}.
  int intersection_id() const noexcept { return i_id_; }

  Relation related(const PosetNode& a, const PosetNode& b) const;

 private:
  std::shared_ptr<const CharacterRegistry> registry_;
  int p_;
  int e_;
  int threshold_;
  EdgeStrategy strategy_;
  std::vector<int> members_;
  std::vector<int> member_index_;
  std::vector<int> node_offset_;
  std::vector<PosetNode> nodes_;
  std::vector<std::pair<int, int>> edges_;
  ComponentPartition partition_;
  int i_id_ = 0;
};

/// Checks that registry's group is a p-group with p^{e+1} <= |G|.
void check_poset_parameters(const GroupTable& g, int p, int e);

ComponentPartition components(std::shared_ptr<const CharacterRegistry> registry, int p, int e,
                              EdgeStrategy strategy);

/// For each component id, the first node (H, chi) in it; throws LemmaViolation
/// if a component has no node on H.
std::vector<PosetNode> component_representatives(const CharPoset& poset, int subgroup);

/// Index in Irr(A) of the unique linear beta with alpha_A = deg(alpha) * beta.
/// A is a lattice id of a nontrivial central subgroup contained in the node's subgroup.
int central_poset_map(const CharPoset& poset, const PosetNode& node, int a_lattice_id);

/// Component count of the poset built on an abelian group A of order p^{f+1}.
int abelian_component_count(const GroupTable& a, int p, int f, const Limits& limits = {});

}  // namespace charposet
