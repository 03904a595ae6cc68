#include "group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"

namespace charposet {

namespace {

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

// Elements of a magma generating it, chosen greedily by smallest index.
std::vector<int> magma_generators(int n, const std::vector<int>& table) {
  std::vector<int> gens;
  std::vector<char> in_span(n, 0);
  std::vector<int> span;
  for (int seed = 0; seed < n; ++seed) {
    if (in_span[seed]) continue;
    gens.push_back(seed);
    in_span[seed] = 1;
    span.push_back(seed);
    // products of everything in the span with everything in the span
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const int x = span[i];
        const int y = span[j];
        for (int prod : {table[static_cast<std::size_t>(x) * n + y],
                         table[static_cast<std::size_t>(y) * n + x]}) {
          if (!in_span[prod]) {
            in_span[prod] = 1;
            span.push_back(prod);
          }
        }
      }
    }
  }
  return gens;
}

}  // namespace

GroupTable GroupTable::from_cayley(const std::vector<std::vector<int>>& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorCode::InvalidInput, "empty multiplication table");
  GroupTable g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n) {
      throw Error(ErrorCode::InvalidInput, "row " + std::to_string(a) + " has " +
                                               std::to_string(table[a].size()) +
                                               " entries, expected " + std::to_string(n));
    }
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::InvalidInput, "entry [" + std::to_string(a) + "][" +
                                                 std::to_string(b) + "] = " + std::to_string(v) +
                                                 " out of range");
      }
      g.table_[static_cast<std::size_t>(a) * n + b] = v;
    }
  }

  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) identity = e;
  }
  if (identity < 0) throw Error(ErrorCode::NoIdentity, "no two-sided identity in table");
  g.identity_ = identity;

  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (g.mul(a, b) == identity && g.mul(b, a) == identity) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] < 0) throw Error(ErrorCode::NoInverse, "element " + std::to_string(a));
  }

  // Full check for small tables; Light's test over a generating set otherwise.
  std::vector<int> middles(n);
  if (n <= 64) std::iota(middles.begin(), middles.end(), 0);
  else middles = magma_generators(n, g.table_);
  for (int b : middles) {
    for (int a = 0; a < n; ++a) {
      const int ab = g.mul(a, b);
      for (int c = 0; c < n; ++c) {
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
          throw Error(ErrorCode::NotAssociative, "triple " + triple(a, b, c));
        }
      }
    }
  }

  g.elem_order_.assign(n, 0);
  g.exponent_ = 1;
  for (int a = 0; a < n; ++a) {
    int k = 1;
    for (int x = a; x != identity; x = g.mul(x, a)) ++k;
    g.elem_order_[a] = k;
    g.exponent_ = std::lcm(g.exponent_, k);
  }
  return g;
}

GroupTable GroupTable::from_permutations(const std::vector<std::vector<int>>& generators,
                                         std::string name, int closure_cap) {
  const int degree = generators.empty() ? 0 : static_cast<int>(generators.front().size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& gen = generators[i];
    if (static_cast<int>(gen.size()) != degree) {
      throw Error(ErrorCode::InvalidInput,
                  "generator " + std::to_string(i) + " acts on a different domain size");
    }
    std::vector<char> seen(degree, 0);
    for (int x : gen) {
      if (x < 0 || x >= degree || seen[x]) {
        throw Error(ErrorCode::InvalidInput,
                    "generator " + std::to_string(i) + " is not a bijection");
      }
      seen[x] = 1;
    }
  }

  using Perm = std::vector<int>;
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  index.emplace(id, 0);
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm out(degree);
    for (int i = 0; i < degree; ++i) out[i] = b[a[i]];
    return out;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Perm next = compose(elems[i], s);
      if (index.count(next)) continue;
      if (static_cast<int>(elems.size()) >= closure_cap) {
        throw Error(ErrorCode::ClosureTooLarge,
                    "closure exceeds " + std::to_string(closure_cap) + " elements");
      }
      index.emplace(next, static_cast<int>(elems.size()));
      elems.push_back(std::move(next));
    }
  }

  const int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  }
  return from_cayley(table, std::move(name));
}

int GroupTable::power(int g, long long k) const noexcept {
  const int m = elem_order_[g];
  k %= m;
  if (k < 0) k += m;
  int out = identity_;
  for (long long i = 0; i < k; ++i) out = mul(out, g);
  return out;
}

bool GroupTable::is_abelian() const noexcept {
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::optional<int> GroupTable::prime() const noexcept {
  if (n_ < 2) return std::nullopt;
  int p = 2;
  while (n_ % p != 0) ++p;
  int m = n_;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;
  return p;
}

bool GroupTable::is_p_group(int p) const noexcept {
  if (p < 2) return false;
  int m = n_;
  while (m % p == 0) m /= p;
  return m == 1;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(Unchecked, GroupPtr ambient, std::vector<int> elems) {
  auto d = std::make_shared<Data>();
  d->pos.assign(ambient->order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) d->pos[elems[i]] = static_cast<int>(i);
  d->ambient = std::move(ambient);
  d->elems = std::move(elems);
  data_ = std::move(d);
}

Subgroup::Subgroup(GroupPtr ambient, std::vector<int> elems) {
  if (!ambient) throw Error(ErrorCode::InvalidInput, "subgroup without ambient group");
  const int n = ambient->order();
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) {
    throw Error(ErrorCode::NotASubgroup, "duplicate element");
  }
  for (int x : elems) {
    if (x < 0 || x >= n) throw Error(ErrorCode::NotASubgroup, "element out of range");
  }
  *this = Subgroup(Unchecked{}, std::move(ambient), std::move(elems));
  const GroupTable& g = *data_->ambient;
  if (!contains(g.identity())) throw Error(ErrorCode::NotASubgroup, "identity missing");
  for (int a : data_->elems) {
    for (int b : data_->elems) {
      if (!contains(g.mul(a, b))) {
        throw Error(ErrorCode::NotASubgroup,
                    "not closed: " + std::to_string(a) + "*" + std::to_string(b));
      }
    }
  }
  if (n % order() != 0) throw Error(ErrorCode::NotASubgroup, "order does not divide |G|");
}

Subgroup Subgroup::whole(GroupPtr ambient) {
  std::vector<int> all(ambient->order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(Unchecked{}, std::move(ambient), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr ambient) {
  const int e = ambient->identity();
  return Subgroup(Unchecked{}, std::move(ambient), {e});
}

Subgroup Subgroup::generated(GroupPtr ambient, std::span<const int> gens) {
  Subgroup out = trivial(std::move(ambient));
  for (int g : gens) out = join(out, g);
  return out;
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const noexcept {
  if (ambient_ptr() != other.ambient_ptr() || other.order() % order() != 0) return false;
  for (int x : elements()) {
    if (!other.contains(x)) return false;
  }
  return true;
}

bool Subgroup::is_normal_in(const Subgroup& other) const noexcept {
  if (!is_subgroup_of(other)) return false;
  const GroupTable& g = ambient();
  for (int x : other.elements()) {
    for (int h : elements()) {
      if (!contains(g.conj(x, h))) return false;
    }
  }
  return true;
}

bool Subgroup::is_abelian() const noexcept {
  const GroupTable& g = ambient();
  const auto& el = elements();
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = i + 1; j < el.size(); ++j) {
      if (g.mul(el[i], el[j]) != g.mul(el[j], el[i])) return false;
    }
  }
  return true;
}

Subgroup Subgroup::conjugated(int x) const {
  std::vector<int> out;
  out.reserve(elements().size());
  for (int h : elements()) out.push_back(ambient().conj(x, h));
  std::sort(out.begin(), out.end());
  return Subgroup(Unchecked{}, ambient_ptr(), std::move(out));
}

GroupTable Subgroup::as_group(std::string name) const {
  const auto& el = elements();
  std::vector<std::vector<int>> table(el.size(), std::vector<int>(el.size()));
  for (std::size_t i = 0; i < el.size(); ++i) {
    for (std::size_t j = 0; j < el.size(); ++j) {
      table[i][j] = position(ambient().mul(el[i], el[j]));
    }
  }
  return GroupTable::from_cayley(table, std::move(name));
}

// ---------------------------------------------------------------------------
// Operations

Subgroup join(const Subgroup& base, int g) {
  if (base.contains(g)) return base;
  const GroupTable& G = base.ambient();
  const auto& b = base.elements();
  std::vector<char> mask(G.order(), 0);
  std::vector<int> elems = b;
  for (int x : b) mask[x] = 1;
  // Union of right cosets base*r; closed once every rep times every
  // generator (base elements and g) lands inside.
  std::vector<int> reps{G.identity()};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const int r = reps[i];
    auto visit = [&](int t) {
      const int x = G.mul(r, t);
      if (mask[x]) return;
      reps.push_back(x);
      for (int s : b) {
        const int y = G.mul(s, x);
        mask[y] = 1;
        elems.push_back(y);
      }
    };
    visit(g);
    for (int s : b) visit(s);
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup(Subgroup::Unchecked{}, base.ambient_ptr(), std::move(elems));
}

Subgroup center(const Subgroup& h) {
  const GroupTable& g = h.ambient();
  std::vector<int> z;
  for (int a : h.elements()) {
    bool central = true;
    for (int b : h.elements()) {
      if (g.mul(a, b) != g.mul(b, a)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(a);
  }
  return Subgroup(Subgroup::Unchecked{}, h.ambient_ptr(), std::move(z));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const GroupTable& g = h.ambient();
  std::vector<char> seen(g.order(), 0);
  std::vector<int> comms;
  for (int a : h.elements()) {
    for (int b : h.elements()) {
      const int c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  }
  return Subgroup::generated(h.ambient_ptr(), comms);
}

ConjClasses conjugacy_classes(const Subgroup& h) {
  const GroupTable& g = h.ambient();
  ConjClasses cc{h, std::vector<int>(h.order(), -1), {}, {}, {}, {}};
  for (int x : h.elements()) {
    if (cc.class_of[h.position(x)] >= 0) continue;
    const int id = cc.count();
    std::vector<int> orbit;
    for (int y : h.elements()) {
      const int c = g.conj(y, x);
      int& slot = cc.class_of[h.position(c)];
      if (slot < 0) {
        slot = id;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.reps.push_back(x);
    cc.sizes.push_back(static_cast<int>(orbit.size()));
    cc.members.push_back(std::move(orbit));
  }
  cc.inverse_class.resize(cc.count());
  for (int c = 0; c < cc.count(); ++c) {
    cc.inverse_class[c] = cc.class_of_element(g.inv(cc.reps[c]));
  }
  return cc;
}

Subgroup intersect_all(std::span<const Subgroup> subs) {
  if (subs.empty()) throw Error(ErrorCode::EmptyInput, "intersection of no subgroups");
  const auto& first = subs.front();
  for (const auto& s : subs) {
    if (s.ambient_ptr() != first.ambient_ptr()) {
      throw Error(ErrorCode::InvalidInput, "subgroups of different groups");
    }
  }
  std::vector<int> out;
  for (int x : first.elements()) {
    if (std::all_of(subs.begin(), subs.end(), [x](const Subgroup& s) { return s.contains(x); })) {
      out.push_back(x);
    }
  }
  return Subgroup(Subgroup::Unchecked{}, first.ambient_ptr(), std::move(out));
}

Quotient quotient(const Subgroup& h, const Subgroup& n) {
  if (!n.is_normal_in(h)) throw Error(ErrorCode::NotNormal, "subgroup is not normal");
  const GroupTable& g = h.ambient();
  std::vector<int> projection(g.order(), -1);
  std::vector<int> reps;
  for (int x : h.elements()) {
    if (projection[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int y : n.elements()) projection[g.mul(x, y)] = c;
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(k, std::vector<int>(k));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) table[a][b] = projection[g.mul(reps[a], reps[b])];
  }
  return {GroupTable::from_cayley(table, g.name() + "/N"), std::move(projection)};
}

AbelianDecomp abelian_decomposition(const GroupTable& a) {
  if (!a.is_abelian()) throw Error(ErrorCode::NotAbelian, a.name());
  auto ptr = std::make_shared<const GroupTable>(a);
  AbelianDecomp out;
  Subgroup current = Subgroup::whole(ptr);
  while (current.order() > 1) {
    int gen = current.elements().front();
    for (int x : current.elements()) {
      if (a.elem_order(x) > a.elem_order(gen)) gen = x;
    }
    const int m = a.elem_order(gen);
    const Subgroup cyc = Subgroup::generated(ptr, std::span<const int>(&gen, 1));
    // A subgroup meeting <gen> trivially extends to a complement, so greedy
    // growth reaches one.
    Subgroup comp = Subgroup::trivial(ptr);
    for (int x : current.elements()) {
      if (comp.order() * m == current.order()) break;
      if (comp.contains(x)) continue;
      Subgroup next = join(comp, x);
      const Subgroup pair[] = {next, cyc};
      if (intersect_all(pair).order() == 1) comp = std::move(next);
    }
    if (comp.order() * m != current.order()) {
      throw Error(ErrorCode::NotAbelian, "no complement found for a cyclic factor");
    }
    out.factors.push_back(m);
    out.generators.push_back(gen);
    current = comp;
  }

  out.dlog.assign(a.order(), {});
  const std::size_t k = out.factors.size();
  std::vector<int> digits(k, 0);
  int filled = 0;
  while (true) {
    int prod = a.identity();
    for (std::size_t i = 0; i < k; ++i) prod = a.mul(prod, a.power(out.generators[i], digits[i]));
    if (!out.dlog[prod].empty() || (k == 0 && filled > 0)) {
      throw Error(ErrorCode::NotAbelian, "generators are not independent");
    }
    out.dlog[prod] = digits;
    ++filled;
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++digits[i] < out.factors[i]) break;
      digits[i] = 0;
    }
    if (i == k) break;
  }
  if (filled != a.order()) throw Error(ErrorCode::NotAbelian, "decomposition does not cover A");
  return out;
}

std::vector<int> double_cosets(const Subgroup& g, const Subgroup& h, const Subgroup& k) {
  if (!h.is_subgroup_of(g) || !k.is_subgroup_of(g)) {
    throw Error(ErrorCode::NotASubgroup, "double cosets need H, K <= G");
  }
  const GroupTable& G = g.ambient();
  std::vector<char> hit(G.order(), 0);
  std::vector<int> reps;
  int covered = 0;
  for (int x : g.elements()) {
    if (hit[x]) continue;
    reps.push_back(x);
    for (int a : h.elements()) {
      const int ax = G.mul(a, x);
      for (int b : k.elements()) {
        const int y = G.mul(ax, b);
        if (!hit[y]) {
          hit[y] = 1;
          ++covered;
        }
      }
    }
  }
  if (covered != g.order()) throw Error(ErrorCode::InvalidInput, "double cosets do not partition G");
  return reps;
}

std::vector<int> double_cosets(const Subgroup& h, const Subgroup& k) {
  return double_cosets(Subgroup::whole(h.ambient_ptr()), h, k);
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, const Limits& limits) {
  if (g->order() > limits.order_cap) {
    throw Error(ErrorCode::OrderCapExceeded, "|G| = " + std::to_string(g->order()) +
                                                 " exceeds the lattice order cap " +
                                                 std::to_string(limits.order_cap));
  }
  std::vector<Subgroup> subs;
  std::set<std::vector<int>> seen;
  auto add = [&](Subgroup s) {
    if (!seen.insert(s.elements()).second) return;
    if (static_cast<int>(subs.size()) >= limits.lattice_cap) {
      throw Error(ErrorCode::LatticeTooLarge,
                  "more than " + std::to_string(limits.lattice_cap) + " subgroups");
    }
    subs.push_back(std::move(s));
  };
  const Subgroup triv = Subgroup::trivial(g);
  add(triv);
  for (int x = 0; x < g->order(); ++x) add(join(triv, x));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const Subgroup base = subs[i];
    // <base, x> depends only on the coset base*x
    std::vector<char> covered(g->order(), 0);
    for (int y : base.elements()) covered[y] = 1;
    for (int x = 0; x < g->order(); ++x) {
      if (covered[x]) continue;
      for (int y : base.elements()) covered[g->mul(y, x)] = 1;
      add(join(base, x));
    }
  }
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return subs;
}

std::vector<Subgroup> subgroups_of_order(std::span<const Subgroup> lattice, int m) {
  std::vector<Subgroup> out;
  for (const auto& s : lattice) {
    if (s.order() == m) out.push_back(s);
  }
  return out;
}

std::vector<Subgroup> subgroups_of_order(const GroupPtr& g, int m, const Limits& limits) {
  if (m < 1 || g->order() % m != 0) {
    throw Error(ErrorCode::InvalidInput, std::to_string(m) + " does not divide |G|");
  }
  return subgroups_of_order(all_subgroups(g, limits), m);
}

// ---------------------------------------------------------------------------
// SubgroupLattice

SubgroupLattice::SubgroupLattice(GroupPtr g, const Limits& limits)
    : group_(std::move(g)), subs_(all_subgroups(group_, limits)) {
  const int n = size();
  for (int i = 0; i < n; ++i) index_.emplace(subs_[i].elements(), i);
  below_.resize(n);
  maximal_.resize(n);
  for (int big = 0; big < n; ++big) {
    for (int small = 0; small <= big; ++small) {
      if (contains(big, small)) below_[big].push_back(small);
    }
    // Largest first: anything not inside an already chosen maximal subgroup
    // is itself maximal.
    for (auto it = below_[big].rbegin(); it != below_[big].rend(); ++it) {
      const int cand = *it;
      if (cand == big) continue;
      bool inside = false;
      for (int m : maximal_[big]) {
        if (contains(m, cand)) {
          inside = true;
          break;
        }
      }
      if (!inside) maximal_[big].push_back(cand);
    }
    std::sort(maximal_[big].begin(), maximal_[big].end());
  }
}

int SubgroupLattice::id_of(const std::vector<int>& elems) const {
  auto it = index_.find(elems);
  if (it == index_.end()) throw Error(ErrorCode::NotASubgroup, "element set not in lattice");
  return it->second;
}

int SubgroupLattice::id_of(const Subgroup& s) const {
  if (s.ambient_ptr() != group_) throw Error(ErrorCode::NotASubgroup, "different ambient group");
  return id_of(s.elements());
}

int SubgroupLattice::intersection(int a, int b) const {
  const Subgroup pair[] = {subs_.at(a), subs_.at(b)};
  return id_of(intersect_all(pair));
}

}  // namespace charposet
