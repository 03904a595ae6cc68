#include "charposet/charposet.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "builtin.hpp"
#include "error.hpp"
#include "export.hpp"
#include "group_io.hpp"
#include "verify.hpp"
#include "witness.hpp"

using namespace charposet;

struct cp_group {
  GroupPtr table;
  Limits limits;
  std::shared_ptr<const CharacterRegistry> registry;

  const std::shared_ptr<const CharacterRegistry>& ensure_registry() {
    if (!registry) registry = std::make_shared<const CharacterRegistry>(table, limits);
    return registry;
  }
};

struct cp_poset {
  std::unique_ptr<CharPoset> poset;
};

namespace {

thread_local std::string last_error;

cp_status status_of(ErrorCode code) {
  switch (classify(code)) {
    case ErrorClass::Input:
      return CP_ERR_INPUT;
    case ErrorClass::Domain:
      return CP_ERR_DOMAIN;
    case ErrorClass::Witness:
      return CP_ERR_WITNESS;
    case ErrorClass::Internal:
      break;
  }
  return CP_ERR_INTERNAL;
}

template <class F>
cp_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Error& ex) {
    last_error = ex.what();
    return status_of(ex.code());
  } catch (const std::exception& ex) {
    last_error = ex.what();
    return CP_ERR_INTERNAL;
  }
}

cp_status fail(cp_status status, const char* message) {
  last_error = message;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Limits limits_for(int order_cap) {
  Limits limits;
  if (order_cap > 0) {
    limits.order_cap = order_cap;
    if (order_cap > limits.closure_cap) limits.closure_cap = order_cap;
  }
  return limits;
}

cp_status wrap_group(GroupTable table, const Limits& limits, cp_group** out) {
  auto* g = new cp_group;
  g->table = std::make_shared<const GroupTable>(std::move(table));
  g->limits = limits;
  *out = g;
  return CP_OK;
}

cp_status report_output(const std::vector<TheoremReport>& reports, cp_format format, int timings,
                        char** out, int* violations) {
  if (format == CP_FORMAT_DOT) return fail(CP_ERR_INPUT, "InvalidInput: reports support json or csv");
  const std::string text = format == CP_FORMAT_CSV ? reports_csv(reports)
                                                   : reports_json(reports, timings != 0).dump(2) + "\n";
  int failed = 0;
  cp_status status = CP_OK;
  for (const auto& r : reports) {
    if (r.ok()) continue;
    if (failed++ == 0) {
      status = r.error_code ? status_of(*r.error_code) : CP_ERR_INTERNAL;
      last_error = r.group + " e=" + std::to_string(r.e) + ": " +
                   (r.error.empty() ? std::string("report checks failed") : r.error);
    }
  }
  *out = dup_string(text);
  if (violations) *violations = failed;
  return status;
}

}  // namespace

extern "C" {

const char* cp_last_error(void) { return last_error.c_str(); }

void cp_string_free(char* s) { std::free(s); }

cp_status cp_catalog_json(char** out) {
  if (!out) return fail(CP_ERR_INPUT, "InvalidInput: null output pointer");
  return guarded([&] {
    Json arr = Json::array();
    for (const auto& f : family_catalog()) {
      arr.push_back({{"name", f.name},
                     {"parameters", f.parameters},
                     {"range", f.range},
                     {"example", f.example}});
    }
    *out = dup_string(arr.dump(2) + "\n");
    return CP_OK;
  });
}

cp_status cp_default_population_json(char** out) {
  if (!out) return fail(CP_ERR_INPUT, "InvalidInput: null output pointer");
  return guarded([&] {
    *out = dup_string(Json(default_sweep_specs()).dump(2) + "\n");
    return CP_OK;
  });
}

cp_status cp_group_load(const char* source, int order_cap, cp_group** out) {
  if (!source || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    const Limits limits = limits_for(order_cap);
    return wrap_group(load_group(source, limits), limits, out);
  });
}

cp_status cp_group_from_json(const char* text, int order_cap, cp_group** out) {
  if (!text || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    const Limits limits = limits_for(order_cap);
    return wrap_group(group_from_json(text, limits), limits, out);
  });
}

void cp_group_free(cp_group* g) { delete g; }

int cp_group_order(const cp_group* g) { return g ? g->table->order() : 0; }

const char* cp_group_name(const cp_group* g) { return g ? g->table->name().c_str() : ""; }

int cp_group_prime(const cp_group* g) {
  if (!g) return 0;
  return g->table->prime().value_or(0);
}

cp_status cp_irr_json(cp_group* g, int all_subgroups, char** out) {
  if (!g || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    *out = dup_string(irr_json(*g->ensure_registry(), all_subgroups != 0).dump(2) + "\n");
    return CP_OK;
  });
}

cp_status cp_poset_create(cp_group* g, int p, int e, cp_strategy strategy, cp_poset** out) {
  if (!g || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    if (p == 0) {
      const auto prime = g->table->prime();
      if (!prime) throw Error(ErrorCode::NotPGroup, g->table->name() + " is not a p-group");
      p = *prime;
    }
    check_poset_parameters(*g->table, p, e);
    const EdgeStrategy s = strategy == CP_STRATEGY_FULL ? EdgeStrategy::Full : EdgeStrategy::MaximalOnly;
    auto handle = std::make_unique<cp_poset>();
    handle->poset = std::make_unique<CharPoset>(g->ensure_registry(), p, e, s);
    *out = handle.release();
    return CP_OK;
  });
}

void cp_poset_free(cp_poset* poset) { delete poset; }

int cp_poset_component_count(const cp_poset* poset) {
  return poset ? poset->poset->component_count() : 0;
}

int cp_poset_node_count(const cp_poset* poset) {
  return poset ? static_cast<int>(poset->poset->nodes().size()) : 0;
}

cp_status cp_poset_export(const cp_poset* poset, cp_format format, char** out) {
  if (!poset || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    switch (format) {
      case CP_FORMAT_JSON:
        *out = dup_string(poset_json(*poset->poset).dump(2) + "\n");
        return CP_OK;
      case CP_FORMAT_DOT:
        *out = dup_string(poset_dot(*poset->poset));
        return CP_OK;
      case CP_FORMAT_CSV:
        break;
    }
    return fail(CP_ERR_INPUT, "InvalidInput: posets export as json or dot");
  });
}

cp_status cp_witness_json(const cp_poset* poset, int h, int chi, int k, int psi, char** out) {
  if (!poset || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    const CharPoset& ps = *poset->poset;
    const PosetNode a{h, chi};
    const PosetNode b{k, psi};
    ps.node_index(a);
    ps.node_index(b);
    const Connection c = connect(ps, a, b);
    *out = dup_string(chain_json(ps, c.chain, c.route).dump(2) + "\n");
    return CP_OK;
  });
}

cp_status cp_verify(cp_group* g, int e, cp_format format, int timings, char** out,
                    int* violations) {
  if (!g || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    SweepOptions opts;
    opts.limits = g->limits;
    if (e >= 0) opts.e = e;
    return report_output(verify_group(g->table, opts), format, timings, out, violations);
  });
}

cp_status cp_sweep(const cp_sweep_options* options, char** out, int* violations) {
  if (!options || !out) return fail(CP_ERR_INPUT, "InvalidInput: null argument");
  return guarded([&] {
    SweepOptions opts;
    opts.limits = limits_for(options->order_cap);
    opts.max_order = options->max_order;
    if (options->e >= 0) opts.e = options->e;
    if (options->primes) opts.primes.assign(options->primes, options->primes + options->prime_count);
    std::vector<std::string> sources;
    if (options->sources) {
      for (std::size_t i = 0; i < options->source_count; ++i) sources.emplace_back(options->sources[i]);
    }
    if (sources.empty()) sources = default_sweep_specs();
    return report_output(sweep(sources, opts), options->format, options->timings, out, violations);
  });
}

}  // extern "C"
