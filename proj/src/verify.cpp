#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "error.hpp"
#include "group_io.hpp"

namespace charposet {

namespace {

int prime_power(int p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return static_cast<int>(r);
}

void fill_report(const std::shared_ptr<const CharacterRegistry>& registry, int p, int e,
                 TheoremReport& r) {
  const auto& lat = registry->lattice();
  const GroupPtr& g = lat.group();
  const CharPoset poset(registry, p, e);

  const int i_id = poset.intersection_id();
  const Subgroup& i = lat.at(i_id);
  const Subgroup whole = Subgroup::whole(g);
  if (!i.is_normal_in(whole)) throw Error(ErrorCode::CriterionViolation, "I is not normal in G");
  for (int s = 0; s <= poset.top(); ++s) {
    if (!lat.contains(poset.lattice_id(s), i_id)) {
      throw Error(ErrorCode::CriterionViolation, "I is not contained in every member subgroup");
    }
  }
  const Subgroup z = center(whole);
  const Subgroup pair[] = {i, z};
  const int iz_id = lat.id_of(intersect_all(pair));

  r.i_order = i.order();
  r.iz_order = lat.at(iz_id).order();
  r.irr_i = static_cast<int>(registry->irr(i_id).size());
  r.components = poset.component_count();
  r.bounds_hold = r.iz_order <= r.components && r.components <= r.irr_i;
  r.connected_iff_i_trivial = (r.components == 1) == (r.i_order == 1);

  if (r.iz_order > 1) {
    r.central_checks_run = true;
    const int n_irr_a = static_cast<int>(registry->irr(iz_id).size());
    std::vector<int> image_of_component(r.components, -1);
    std::set<int> images;
    bool constant = true;
    for (const auto& node : poset.nodes()) {
      const int beta = central_poset_map(poset, node, iz_id);
      images.insert(beta);
      int& slot = image_of_component[poset.component_of(node)];
      if (slot < 0) slot = beta;
      else if (slot != beta) constant = false;
    }
    int f = 0;
    while (prime_power(p, f + 1) < r.iz_order) ++f;
    r.abelian_count = abelian_component_count(lat.at(iz_id).as_group("I_cap_Z"), p, f);
    r.central_map_ok = constant && static_cast<int>(images.size()) == n_irr_a &&
                       *r.abelian_count == r.iz_order;
  }
}

void record_failure(TheoremReport& r, const std::exception& ex) {
  r.error = ex.what();
  if (const auto* err = dynamic_cast<const Error*>(&ex)) r.error_code = err->code();
  else r.error_code = ErrorCode::CriterionViolation;
}

TheoremReport blank_report(const GroupTable& g, int p, int e) {
  TheoremReport r;
  r.group = g.name();
  r.order = g.order();
  r.p = p;
  r.e = e;
  return r;
}

}  // namespace

Subgroup compute_i(const GroupPtr& g, int p, int e, const Limits& limits) {
  check_poset_parameters(*g, p, e);
  const auto minimal = subgroups_of_order(g, prime_power(p, e + 1), limits);
  Subgroup i = intersect_all(minimal);
  if (!i.is_normal_in(Subgroup::whole(g))) {
    throw Error(ErrorCode::CriterionViolation, "I is not normal in G");
  }
  return i;
}

TheoremReport theorem_report(std::shared_ptr<const CharacterRegistry> registry, int p, int e) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport r = blank_report(*registry->group(), p, e);
  fill_report(registry, p, e, r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!r.bounds_hold) {
    throw Error(ErrorCode::BoundViolation,
                r.group + " e=" + std::to_string(e) + ": " + std::to_string(r.iz_order) +
                    " <= " + std::to_string(r.components) + " <= " + std::to_string(r.irr_i) +
                    " fails");
  }
  if (!r.connected_iff_i_trivial) {
    throw Error(ErrorCode::CriterionViolation,
                r.group + " e=" + std::to_string(e) + ": connectivity does not match I = 1");
  }
  if (r.central_checks_run && !r.central_map_ok) {
    throw Error(ErrorCode::CriterionViolation,
                r.group + " e=" + std::to_string(e) + ": central map checks failed");
  }
  return r;
}

TheoremReport try_theorem_report(std::shared_ptr<const CharacterRegistry> registry, int p, int e) {
  const auto start = std::chrono::steady_clock::now();
  TheoremReport r = blank_report(*registry->group(), p, e);
  try {
    fill_report(registry, p, e, r);
  } catch (const std::exception& ex) {
    record_failure(r, ex);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<TheoremReport> verify_group(const GroupPtr& g, const SweepOptions& opts) {
  const auto p = g->prime();
  if (!p) {
    TheoremReport r = blank_report(*g, 0, opts.e.value_or(0));
    record_failure(r, Error(ErrorCode::NotPGroup,
                            g->name() + " has order " + std::to_string(g->order())));
    return {r};
  }
  std::shared_ptr<const CharacterRegistry> registry;
  try {
    registry = std::make_shared<const CharacterRegistry>(g, opts.limits);
  } catch (const std::exception& ex) {
    TheoremReport r = blank_report(*g, *p, opts.e.value_or(0));
    record_failure(r, ex);
    return {r};
  }
  std::vector<TheoremReport> out;
  if (opts.e) {
    out.push_back(try_theorem_report(registry, *p, *opts.e));
  } else {
    for (int e = 0; prime_power(*p, e + 1) <= g->order(); ++e) {
      out.push_back(try_theorem_report(registry, *p, e));
    }
  }
  return out;
}

std::vector<TheoremReport> sweep(const std::vector<std::string>& sources, const SweepOptions& opts) {
  std::vector<TheoremReport> out;
  for (const auto& source : sources) {
    GroupPtr g;
    try {
      g = std::make_shared<const GroupTable>(load_group(source, opts.limits));
    } catch (const std::exception& ex) {
      TheoremReport r;
      r.group = source;
      record_failure(r, ex);
      out.push_back(std::move(r));
      continue;
    }
    if (opts.max_order > 0 && g->order() > opts.max_order) continue;
    if (!opts.primes.empty()) {
      const auto p = g->prime();
      if (!p || std::find(opts.primes.begin(), opts.primes.end(), *p) == opts.primes.end()) {
        continue;
      }
    }
    for (auto& r : verify_group(g, opts)) out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const TheoremReport& a, const TheoremReport& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.group != b.group) return a.group < b.group;
    return a.e < b.e;
  });
  return out;
}

}  // namespace charposet
