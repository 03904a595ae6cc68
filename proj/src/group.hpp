#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace charposet {

/// Resource limits shared by group construction and lattice enumeration.
struct Limits {
  int closure_cap = 512;   ///< largest group built from generators or a family spec
  int order_cap = 128;     ///< largest group whose subgroup lattice is enumerated
  int lattice_cap = 4096;  ///< largest number of subgroups kept
};

/// A finite group as a dense multiplication table over element indices.
class GroupTable {
 public:
  /// Validates identity, inverses and associativity. Rows are left factors.
  static GroupTable from_cayley(const std::vector<std::vector<int>>& table, std::string name);

  /// Closure of permutations of {0..m-1}; the product a*b applies a first, then b.
  static GroupTable from_permutations(const std::vector<std::vector<int>>& generators,
                                      std::string name, int closure_cap = Limits{}.closure_cap);

  int order() const noexcept { return n_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const noexcept { return inverse_[a]; }
  int elem_order(int a) const noexcept { return elem_order_[a]; }
  int exponent() const noexcept { return exponent_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// x g x^-1
  int conj(int x, int g) const noexcept { return mul(mul(x, g), inv(x)); }
  int power(int g, long long k) const noexcept;

  bool is_abelian() const noexcept;
  /// The prime p when order = p^k with k >= 1.
  std::optional<int> prime() const noexcept;
  bool is_p_group(int p) const noexcept;

 private:
  GroupTable() = default;

  int n_ = 0;
  int identity_ = 0;
  int exponent_ = 1;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  std::string name_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Immutable handle on a subgroup of an ambient GroupTable. Copies share storage.
class Subgroup {
 public:
  /// Checks that elems is a subgroup of ambient (throws NotASubgroup).
  Subgroup(GroupPtr ambient, std::vector<int> elems);

  static Subgroup whole(GroupPtr ambient);
  static Subgroup trivial(GroupPtr ambient);
  /// Smallest subgroup containing gens.
  static Subgroup generated(GroupPtr ambient, std::span<const int> gens);

  const GroupTable& ambient() const noexcept { return *data_->ambient; }
  const GroupPtr& ambient_ptr() const noexcept { return data_->ambient; }
  const std::vector<int>& elements() const noexcept { return data_->elems; }
  int order() const noexcept { return static_cast<int>(data_->elems.size()); }
  bool contains(int g) const noexcept { return data_->pos[g] >= 0; }
  /// Index of g inside elements(), or -1.
  int position(int g) const noexcept { return data_->pos[g]; }

  bool is_subgroup_of(const Subgroup& other) const noexcept;
  bool is_normal_in(const Subgroup& other) const noexcept;
  bool is_abelian() const noexcept;
  /// x H x^-1
  Subgroup conjugated(int x) const;
  /// The subgroup as a standalone table, elements renumbered by position.
  GroupTable as_group(std::string name) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.data_ == b.data_ ||
           (a.data_->ambient == b.data_->ambient && a.data_->elems == b.data_->elems);
  }

 private:
  struct Data {
    GroupPtr ambient;
    std::vector<int> elems;
    std::vector<int> pos;
  };
  struct Unchecked {};
  Subgroup(Unchecked, GroupPtr ambient, std::vector<int> elems);

  std::shared_ptr<const Data> data_;

  friend Subgroup join(const Subgroup& base, int g);
  friend Subgroup intersect_all(std::span<const Subgroup> subs);
  friend Subgroup center(const Subgroup& h);
};

struct ConjClasses {
  Subgroup owner;
  std::vector<int> class_of;  ///< per position in owner.elements()
  std::vector<int> reps;      ///< ambient index; minimal element of each class
  std::vector<int> sizes;
  std::vector<int> inverse_class;
  std::vector<std::vector<int>> members;  ///< ambient indices, ascending

  int count() const noexcept { return static_cast<int>(reps.size()); }
  int class_of_element(int g) const noexcept { return class_of[owner.position(g)]; }
};

struct AbelianDecomp {
  std::vector<int> factors;            ///< cyclic orders, weakly decreasing
  std::vector<int> generators;         ///< one element per factor
  std::vector<std::vector<int>> dlog;  ///< per element, exponent per factor
};

struct Quotient {
  GroupTable group;
  std::vector<int> projection;  ///< ambient index -> coset index; -1 outside H
};

Subgroup center(const Subgroup& h);
Subgroup derived_subgroup(const Subgroup& h);
ConjClasses conjugacy_classes(const Subgroup& h);
/// <base, g>
Subgroup join(const Subgroup& base, int g);
Subgroup intersect_all(std::span<const Subgroup> subs);
Quotient quotient(const Subgroup& h, const Subgroup& n);
AbelianDecomp abelian_decomposition(const GroupTable& a);
/// One representative (the smallest element) per double coset H x K inside g.
std::vector<int> double_cosets(const Subgroup& g, const Subgroup& h, const Subgroup& k);
std::vector<int> double_cosets(const Subgroup& h, const Subgroup& k);

/// Every subgroup exactly once, ordered by (order, element list).
std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Limits& limits = {});
std::vector<Subgroup> subgroups_of_order(std::span<const Subgroup> lattice, int m);
std::vector<Subgroup> subgroups_of_order(const GroupPtr& g, int m, const Limits& limits = {});

/// Subgroup lattice with id lookup and cover relation.
class SubgroupLattice {
 public:
  SubgroupLattice(GroupPtr g, const Limits& limits = {});

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subs_; }
  const Subgroup& at(int id) const { return subs_.at(id); }
  int size() const noexcept { return static_cast<int>(subs_.size()); }
  int top() const noexcept { return size() - 1; }
  /// Throws NotASubgroup when the element set is not in the lattice.
  int id_of(const Subgroup& s) const;
  int id_of(const std::vector<int>& elems) const;
  int intersection(int a, int b) const;
  /// Ids of maximal subgroups of the given subgroup.
  const std::vector<int>& maximal_in(int id) const { return maximal_.at(id); }
  /// Ids of all subgroups of the given subgroup (including itself).
  const std::vector<int>& below(int id) const { return below_.at(id); }
  bool contains(int big, int small) const { return subs_[small].is_subgroup_of(subs_[big]); }

 private:
  GroupPtr group_;
  std::vector<Subgroup> subs_;
  std::map<std::vector<int>, int> index_;
  std::vector<std::vector<int>> maximal_;
  std::vector<std::vector<int>> below_;
};

}  // namespace charposet
