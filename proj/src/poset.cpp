#include "poset.hpp"

#include <algorithm>
#include <numeric>

#include "error.hpp"

namespace charposet {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

void check_poset_parameters(const GroupTable& g, int p, int e) {
  if (!g.is_p_group(p)) {
    throw Error(ErrorCode::NotPGroup,
                g.name() + " (order " + std::to_string(g.order()) + ") is not a " +
                    std::to_string(p) + "-group");
  }
  if (e < 0 || e > 62 || ipow(p, e + 1) > g.order()) {
    throw Error(ErrorCode::InvalidExponent, "p^(e+1) = " + std::to_string(p) + "^" +
                                                std::to_string(e + 1) + " exceeds |G| = " +
                                                std::to_string(g.order()));
  }
}

CharPoset::CharPoset(std::shared_ptr<const CharacterRegistry> registry, int p, int e,
                     EdgeStrategy strategy)
    : registry_(std::move(registry)), p_(p), e_(e), threshold_(0), strategy_(strategy) {
  const auto& lat = registry_->lattice();
  check_poset_parameters(*lat.group(), p, e);
  threshold_ = static_cast<int>(ipow(p, e + 1));

  member_index_.assign(lat.size(), -1);
  std::vector<Subgroup> minimal;
  for (int id = 0; id < lat.size(); ++id) {
    if (lat.at(id).order() < threshold_) continue;
    member_index_[id] = static_cast<int>(members_.size());
    members_.push_back(id);
    if (lat.at(id).order() == threshold_) minimal.push_back(lat.at(id));
  }
  i_id_ = lat.id_of(intersect_all(minimal));

  for (int s = 0; s <= top(); ++s) {
    node_offset_.push_back(static_cast<int>(nodes_.size()));
    const int count = static_cast<int>(registry_->irr(members_[s]).size());
    for (int c = 0; c < count; ++c) nodes_.push_back({s, c});
  }

  for (int s = 0; s <= top(); ++s) {
    const int h = members_[s];
    std::vector<int> lower;
    if (strategy_ == EdgeStrategy::Full) {
      for (int k : lat.below(h)) {
        if (k != h && member_index_[k] >= 0) lower.push_back(k);
      }
    } else {
      for (int k : lat.maximal_in(h)) {
        if (member_index_[k] >= 0) lower.push_back(k);
      }
    }
    const int n_chars = static_cast<int>(registry_->irr(h).size());
    for (int k : lower) {
      for (int phi = 0; phi < n_chars; ++phi) {
        const auto mult = registry_->restriction_multiplicities(h, phi, k);
        for (std::size_t psi = 0; psi < mult.size(); ++psi) {
          if (mult[psi] == 0) continue;
          edges_.emplace_back(node_index({member_index_[k], static_cast<int>(psi)}),
                              node_index({s, phi}));
        }
      }
    }
  }
  std::sort(edges_.begin(), edges_.end());

  DisjointSets dsu(static_cast<int>(nodes_.size()));
  for (const auto& [a, b] : edges_) dsu.unite(a, b);
  std::vector<int> label(nodes_.size(), -1);
  partition_.node_to_component.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const int root = dsu.find(static_cast<int>(i));
    if (label[root] < 0) label[root] = partition_.count++;
    partition_.node_to_component[i] = label[root];
  }
}

const ClassFunction& CharPoset::character(const PosetNode& node) const {
  return registry_->irr(lattice_id(node.subgroup)).at(node.chi);
}

int CharPoset::node_index(const PosetNode& node) const {
  if (node.subgroup < 0 || node.subgroup > top()) {
    throw Error(ErrorCode::InvalidInput, "subgroup index " + std::to_string(node.subgroup) +
                                             " out of range");
  }
  const int count = static_cast<int>(registry_->irr(members_[node.subgroup]).size());
  if (node.chi < 0 || node.chi >= count) {
    throw Error(ErrorCode::InvalidInput, "character index " + std::to_string(node.chi) +
                                             " out of range for subgroup " +
                                             std::to_string(node.subgroup));
  }
  return node_offset_[node.subgroup] + node.chi;
}

int CharPoset::component_of(const PosetNode& node) const {
  return partition_.node_to_component[node_index(node)];
}

Relation CharPoset::related(const PosetNode& a, const PosetNode& b) const {
  node_index(a);
  node_index(b);
  if (a == b) return Relation::Equal;
  const auto& lat = registry_->lattice();
  const int ha = lattice_id(a.subgroup);
  const int hb = lattice_id(b.subgroup);
  if (lat.contains(hb, ha) && registry_->restriction_multiplicities(hb, b.chi, ha)[a.chi] != 0) {
    return Relation::Less;
  }
  if (lat.contains(ha, hb) && registry_->restriction_multiplicities(ha, a.chi, hb)[b.chi] != 0) {
    return Relation::Greater;
  }
  return Relation::Incomparable;
}

ComponentPartition components(std::shared_ptr<const CharacterRegistry> registry, int p, int e,
                              EdgeStrategy strategy) {
  return CharPoset(std::move(registry), p, e, strategy).partition();
}

std::vector<PosetNode> component_representatives(const CharPoset& poset, int subgroup) {
  if (subgroup < 0 || subgroup > poset.top()) {
    throw Error(ErrorCode::InvalidInput, "subgroup index out of range");
  }
  std::vector<PosetNode> reps(poset.component_count(), PosetNode{-1, -1});
  const int count = static_cast<int>(poset.registry().irr(poset.lattice_id(subgroup)).size());
  for (int c = 0; c < count; ++c) {
    const PosetNode node{subgroup, c};
    auto& slot = reps[poset.component_of(node)];
    if (slot.subgroup < 0) slot = node;
  }
  for (std::size_t comp = 0; comp < reps.size(); ++comp) {
    if (reps[comp].subgroup < 0) {
      throw Error(ErrorCode::LemmaViolation, "component " + std::to_string(comp) +
                                                 " has no node on subgroup " +
                                                 std::to_string(subgroup));
    }
  }
  return reps;
}

int central_poset_map(const CharPoset& poset, const PosetNode& node, int a_lattice_id) {
  const auto& reg = poset.registry();
  const auto& lat = reg.lattice();
  const Subgroup& a = lat.at(a_lattice_id);
  if (a.order() == 1) throw Error(ErrorCode::InvalidInput, "central subgroup is trivial");
  if (!a.is_subgroup_of(center(Subgroup::whole(lat.group())))) {
    throw Error(ErrorCode::InvalidInput, "subgroup is not central");
  }
  const int h = poset.lattice_id(node.subgroup);
  if (!lat.contains(h, a_lattice_id)) {
    throw Error(ErrorCode::NotASubgroup, "central subgroup is not inside the node's subgroup");
  }
  const ClassFunction& alpha = poset.character(node);
  const ClassFunction res = restrict_to(alpha, reg.classes(a_lattice_id));
  const std::int64_t deg = alpha.degree();
  const auto& irr_a = reg.irr(a_lattice_id);
  for (std::size_t b = 0; b < irr_a.size(); ++b) {
    if (inner_product(res, irr_a[b]) != deg) continue;
    for (std::size_t c = 0; c < res.values.size(); ++c) {
      CycInt scaled = irr_a[b].values[c];
      if (res.values[c] != scaled.scale(deg)) {
        throw Error(ErrorCode::NotMultipleOfLinear, "restriction is not a multiple of a linear");
      }
    }
    return static_cast<int>(b);
  }
  throw Error(ErrorCode::NotMultipleOfLinear, "no linear constituent of full multiplicity");
}

int abelian_component_count(const GroupTable& a, int p, int f, const Limits& limits) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, a.name());
  if (f < 0 || ipow(p, f + 1) != a.order()) {
    throw Error(ErrorCode::InvalidExponent, "|A| must equal p^(f+1)");
  }
  auto reg = std::make_shared<const CharacterRegistry>(std::make_shared<const GroupTable>(a), limits);
  return CharPoset(reg, p, f).component_count();
}

}  // namespace charposet
