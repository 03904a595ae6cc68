#include "witness.hpp"

#include <deque>
#include <optional>

#include "error.hpp"

namespace charposet {

namespace {

class ChainBuilder {
 public:
  explicit ChainBuilder(const CharPoset& poset) : poset_(poset) {}

  void append(const PosetNode& node) {
    if (chain_.nodes.empty()) {
      chain_.nodes.push_back(node);
      return;
    }
    switch (poset_.related(chain_.nodes.back(), node)) {
      case Relation::Equal:
        return;
      case Relation::Less:
        chain_.directions.push_back(Direction::Up);
        break;
      case Relation::Greater:
        chain_.directions.push_back(Direction::Down);
        break;
      case Relation::Incomparable:
        throw Error(ErrorCode::NoConstituent, "consecutive chain nodes are incomparable");
    }
    chain_.nodes.push_back(node);
  }

  void append(const WitnessChain& other) {
    for (const auto& n : other.nodes) append(n);
  }

  WitnessChain take() { return std::move(chain_); }

 private:
  const CharPoset& poset_;
  WitnessChain chain_;
};

// [alpha_M, beta_M] for characters of two subgroups containing M (lattice ids).
std::int64_t meet_product(const CharacterRegistry& reg, const ClassFunction& alpha,
                          const ClassFunction& beta, int m) {
  const ClassesPtr& mc = reg.classes(m);
  return inner_product(restrict_to(alpha, mc), restrict_to(beta, mc));
}

int intersect_ids(const SubgroupLattice& lat, std::span<const int> ids) {
  int cur = ids.front();
  for (std::size_t i = 1; i < ids.size(); ++i) cur = lat.intersection(cur, ids[i]);
  return cur;
}

WitnessChain theorem4_rec(const CharPoset& poset, const std::vector<int>& lats, int alpha_first,
                          int alpha_last) {
  const auto& reg = poset.registry();
  const auto& lat = reg.lattice();
  const std::size_t m = lats.size() - 1;
  auto node = [&](std::size_t i, int chi) {
    return PosetNode{poset.subgroup_index(lats[i]), chi};
  };
  if (m <= 1) return witness_theorem3(poset, node(0, alpha_first), node(m, alpha_last));

  const ClassFunction& a0 = reg.irr(lats[0]).at(alpha_first);
  const ClassFunction& am = reg.irr(lats[m]).at(alpha_last);
  const int k_last = intersect_ids(lat, lats);
  const int k_prev = intersect_ids(lat, std::span<const int>(lats.data(), m));
  const int meet = lat.intersection(lats[m - 1], lats[m]);

  // gamma: common constituent of alpha_0 and alpha_{n+1} on K_{n+1}
  const auto& irr_k = reg.irr(k_last);
  const ClassFunction r0 = restrict_to(a0, reg.classes(k_last));
  const ClassFunction rm = restrict_to(am, reg.classes(k_last));
  std::optional<std::size_t> gamma;
  for (std::size_t g = 0; g < irr_k.size() && !gamma; ++g) {
    if (inner_product(r0, irr_k[g]) != 0 && inner_product(rm, irr_k[g]) != 0) gamma = g;
  }
  if (!gamma) throw Error(ErrorCode::ChoiceExhausted, "no common constituent on K_{n+1}");

  // eta in Irr(L_n ∩ L_{n+1}) over gamma and under alpha_{n+1}
  const auto& irr_meet = reg.irr(meet);
  const ClassFunction am_meet = restrict_to(am, reg.classes(meet));
  std::optional<std::size_t> eta;
  for (std::size_t h = 0; h < irr_meet.size() && !eta; ++h) {
    if (inner_product(am_meet, irr_meet[h]) == 0) continue;
    const ClassFunction down = restrict_to(irr_meet[h], reg.classes(k_last));
    if (inner_product(down, irr_k[*gamma]) != 0) eta = h;
  }
  if (!eta) throw Error(ErrorCode::ChoiceExhausted, "no eta over gamma and under alpha_{n+1}");

  // alpha_n: constituent of eta^{L_n} meeting alpha_0 on K_n
  const ClassFunction lifted = induce_to(irr_meet[*eta], reg.classes(lats[m - 1]));
  const auto& irr_n = reg.irr(lats[m - 1]);
  std::optional<int> alpha_n;
  for (std::size_t c = 0; c < irr_n.size() && !alpha_n; ++c) {
    if (inner_product(lifted, irr_n[c]) == 0) continue;
    if (meet_product(reg, a0, irr_n[c], k_prev) != 0) alpha_n = static_cast<int>(c);
  }
  if (!alpha_n) throw Error(ErrorCode::ChoiceExhausted, "no constituent of eta^{L_n} over alpha_0");

  ChainBuilder builder(poset);
  const std::vector<int> head(lats.begin(), lats.end() - 1);
  builder.append(theorem4_rec(poset, head, alpha_first, *alpha_n));
  builder.append(witness_theorem3(poset, node(m - 1, *alpha_n), node(m, alpha_last)));
  return builder.take();
}

WitnessChain shortest_path(const CharPoset& poset, const PosetNode& a, const PosetNode& b) {
  const int n = static_cast<int>(poset.nodes().size());
  std::vector<std::vector<int>> adj(n);
  for (const auto& [lo, hi] : poset.edges()) {
    adj[lo].push_back(hi);
    adj[hi].push_back(lo);
  }
  const int src = poset.node_index(a);
  const int dst = poset.node_index(b);
  std::vector<int> prev(n, -2);
  std::deque<int> queue{src};
  prev[src] = -1;
  while (!queue.empty() && prev[dst] == -2) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : adj[x]) {
      if (prev[y] != -2) continue;
      prev[y] = x;
      queue.push_back(y);
    }
  }
  if (prev[dst] == -2) throw Error(ErrorCode::PreconditionFailed, "endpoints are not connected");
  std::vector<int> path;
  for (int x = dst; x != -1; x = prev[x]) path.push_back(x);
  ChainBuilder builder(poset);
  for (auto it = path.rbegin(); it != path.rend(); ++it) builder.append(poset.nodes()[*it]);
  return builder.take();
}

}  // namespace

WitnessChain witness_theorem3(const CharPoset& poset, const PosetNode& a, const PosetNode& b) {
  const auto& reg = poset.registry();
  const auto& lat = reg.lattice();
  const int h = poset.lattice_id(a.subgroup);
  const int k = poset.lattice_id(b.subgroup);
  const ClassFunction& alpha = poset.character(a);
  const ClassFunction& beta = poset.character(b);
  if (meet_product(reg, alpha, beta, lat.intersection(h, k)) == 0) {
    throw Error(ErrorCode::PreconditionFailed,
                "the characters share no constituent on the intersection");
  }
  const int g = lat.top();
  const ClassFunction lifted = induce_to(alpha, reg.classes(g));
  const auto& irr_g = reg.irr(g);
  std::optional<int> omega;
  for (std::size_t w = 0; w < irr_g.size() && !omega; ++w) {
    if (inner_product(lifted, irr_g[w]) == 0) continue;
    if (reg.restriction_multiplicities(g, static_cast<int>(w), k)[b.chi] != 0) {
      omega = static_cast<int>(w);
    }
  }
  if (!omega) throw Error(ErrorCode::NoConstituent, "no constituent of alpha^G lies over beta");
  ChainBuilder builder(poset);
  builder.append(a);
  builder.append(PosetNode{poset.top(), *omega});
  builder.append(b);
  return builder.take();
}

WitnessChain witness_theorem4(const CharPoset& poset, std::span<const int> chain, int alpha_first,
                              int alpha_last) {
  if (chain.empty()) throw Error(ErrorCode::EmptyInput, "empty subgroup sequence");
  const auto& reg = poset.registry();
  std::vector<int> lats;
  for (int s : chain) lats.push_back(poset.lattice_id(s));
  poset.node_index({chain.front(), alpha_first});
  poset.node_index({chain.back(), alpha_last});
  const int k_last = intersect_ids(reg.lattice(), lats);
  if (meet_product(reg, reg.irr(lats.front()).at(alpha_first), reg.irr(lats.back()).at(alpha_last),
                   k_last) == 0) {
    throw Error(ErrorCode::PreconditionFailed,
                "end characters share no constituent on the full intersection");
  }
  if (lats.size() == 1) lats.push_back(lats.front());
  return theorem4_rec(poset, lats, alpha_first, alpha_last);
}

bool validate_chain(const CharPoset& poset, const WitnessChain& chain) {
  if (chain.nodes.empty() || chain.directions.size() + 1 != chain.nodes.size()) return false;
  for (std::size_t i = 0; i + 1 < chain.nodes.size(); ++i) {
    const Relation rel = poset.related(chain.nodes[i], chain.nodes[i + 1]);
    const Relation want = chain.directions[i] == Direction::Up ? Relation::Less : Relation::Greater;
    if (rel != want) return false;
  }
  return true;
}

Connection connect(const CharPoset& poset, const PosetNode& a, const PosetNode& b) {
  if (poset.component_of(a) != poset.component_of(b)) {
    throw Error(ErrorCode::PreconditionFailed, "endpoints lie in different components");
  }
  const auto& reg = poset.registry();
  const auto& lat = reg.lattice();
  const int h = poset.lattice_id(a.subgroup);
  const int k = poset.lattice_id(b.subgroup);
  Connection out;
  if (a == b) {
    out.chain.nodes.push_back(a);
    out.route = "identity";
  } else if (meet_product(reg, poset.character(a), poset.character(b), lat.intersection(h, k)) != 0) {
    out.chain = witness_theorem3(poset, a, b);
    out.route = "theorem3";
  } else {
    // H, then subgroups of order p^{e+1} cutting the running intersection down to I, then K
    std::vector<int> seq{a.subgroup};
    int cur = lat.intersection(h, k);
    for (int s = 0; s <= poset.top() && cur != poset.intersection_id(); ++s) {
      const int l = poset.lattice_id(s);
      if (lat.at(l).order() != poset.threshold()) continue;
      const int next = lat.intersection(cur, l);
      if (next == cur) continue;
      seq.push_back(s);
      cur = next;
    }
    seq.push_back(b.subgroup);
    if (meet_product(reg, poset.character(a), poset.character(b), cur) != 0) {
      out.chain = witness_theorem4(poset, seq, a.chi, b.chi);
      out.route = "theorem4";
    } else {
      out.chain = shortest_path(poset, a, b);
      out.route = "graph";
    }
  }
  if (!validate_chain(poset, out.chain)) {
    throw Error(ErrorCode::NoConstituent, "constructed chain failed link verification");
  }
  return out;
}

}  // namespace charposet
