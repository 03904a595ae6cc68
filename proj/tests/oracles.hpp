#pragma once

// Brute-force reference computations used to cross-check the library.
// They only rely on GroupTable multiplication and CycInt arithmetic.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "character.hpp"
#include "group.hpp"
#include "poset.hpp"

namespace oracle {

using charposet::ClassFunction;
using charposet::CycInt;
using charposet::GroupTable;

inline bool closed(const GroupTable& g, const std::vector<int>& elems) {
  std::vector<char> in(g.order(), 0);
  for (int x : elems) in[x] = 1;
  for (int a : elems)
    for (int b : elems)
      if (!in[g.mul(a, b)]) return false;
  return true;
}

/// Every subset containing the identity that is closed under multiplication.
/// Exponential; only for |G| <= 16.
inline std::set<std::vector<int>> subgroups_by_subsets(const GroupTable& g) {
  std::vector<int> others;
  for (int x = 0; x < g.order(); ++x)
    if (x != g.identity()) others.push_back(x);
  std::set<std::vector<int>> out;
  const std::uint32_t total = 1u << others.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const int size = 1 + std::popcount(mask);
    if (g.order() % size != 0) continue;
    std::vector<int> elems{g.identity()};
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask & (1u << i)) elems.push_back(others[i]);
    std::sort(elems.begin(), elems.end());
    if (closed(g, elems)) out.insert(elems);
  }
  return out;
}

inline int class_count(const GroupTable& g) {
  std::vector<char> seen(g.order(), 0);
  int count = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ++count;
    for (int y = 0; y < g.order(); ++y) seen[g.mul(g.mul(y, x), g.inv(y))] = 1;
  }
  return count;
}

inline std::vector<int> center(const GroupTable& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

/// Closure of a generating set by repeated multiplication.
inline std::vector<int> closure(const GroupTable& g, std::vector<int> gens) {
  std::set<int> s{g.identity()};
  s.insert(gens.begin(), gens.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

inline std::vector<int> derived(const GroupTable& g) {
  std::vector<int> comms;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      comms.push_back(g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))));
  return closure(g, comms);
}

/// (1/|K|) sum_{k in K} a(k) b(k^-1), evaluated element by element.
inline std::int64_t inner_elementwise(const ClassFunction& a, const ClassFunction& b,
                                      const std::vector<int>& k) {
  const GroupTable& g = a.owner().ambient();
  CycInt sum(a.conductor(), 0);
  for (int x : k) sum += a.at(x) * b.at(g.inv(x));
  return sum.exact_div(static_cast<std::int64_t>(k.size())).as_integer();
}

/// Union-find over every comparable pair, with comparability decided by
/// element-wise inner products on the smaller subgroup.
/// Returns, for each (lattice id, chi), a component label.
inline std::map<std::pair<int, int>, int> naive_components(
    const charposet::CharacterRegistry& reg, int threshold) {
  const auto& lat = reg.lattice();
  std::vector<std::pair<int, int>> nodes;
  for (int id = 0; id < lat.size(); ++id) {
    if (lat.at(id).order() < threshold) continue;
    for (int c = 0; c < static_cast<int>(reg.irr(id).size()); ++c) nodes.emplace_back(id, c);
  }
  std::vector<int> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      const auto [hi, chi] = nodes[i];
      const auto [lo, psi] = nodes[j];
      if (hi == lo || !lat.at(lo).is_subgroup_of(lat.at(hi))) continue;
      const auto& k = lat.at(lo).elements();
      const ClassFunction& big = reg.irr(hi)[chi];
      const ClassFunction& small = reg.irr(lo)[psi];
      if (inner_elementwise(big, small, k) != 0) parent[find(int(i))] = find(int(j));
    }
  }
  std::map<int, int> relabel;
  std::map<std::pair<int, int>, int> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const int root = find(int(i));
    const auto it = relabel.emplace(root, int(relabel.size())).first;
    out[nodes[i]] = it->second;
  }
  return out;
}

inline int label_count(const std::map<std::pair<int, int>, int>& labels) {
  std::set<int> s;
  for (const auto& [node, c] : labels) s.insert(c);
  return static_cast<int>(s.size());
}

/// Intersection of all subgroups of order m, from a list of element sets.
inline std::vector<int> intersect_of_order(const std::set<std::vector<int>>& subs, int m,
                                           int group_order) {
  std::vector<int> cur(group_order);
  std::iota(cur.begin(), cur.end(), 0);
  for (const auto& s : subs) {
    if (static_cast<int>(s.size()) != m) continue;
    std::vector<int> next;
    std::set_intersection(cur.begin(), cur.end(), s.begin(), s.end(), std::back_inserter(next));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace oracle
