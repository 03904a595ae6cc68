// charposet: command-line front end over the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charposet/charposet.h"

namespace {

constexpr int kExitInput = CP_ERR_INPUT;

struct Config {
  std::string group;
  std::vector<std::string> groups;
  std::optional<int> p;
  std::optional<int> e;
  std::string strategy = "maximal";
  std::string format;
  std::string out;
  std::optional<int> cap;
  bool subgroups = false;
  bool population = false;
  bool timings = false;
  std::string endpoints;
  int max_order = 0;
  std::string primes;
};

struct CliError {
  int code;
  std::string message;
};

struct StringDeleter {
  void operator()(char* s) const { cp_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GroupDeleter {
  void operator()(cp_group* g) const { cp_group_free(g); }
};
struct PosetDeleter {
  void operator()(cp_poset* p) const { cp_poset_free(p); }
};

void check(cp_status status) {
  if (status != CP_OK) throw CliError{status, cp_last_error()};
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw CliError{kExitInput, "invalid " + what + ": '" + text + "'"};
  }
  return value;
}

// --cap wins over CHARPOSET_CAP; 0 selects the library default.
int order_cap(const Config& cfg) {
  if (cfg.cap) return *cfg.cap;
  if (const char* env = std::getenv("CHARPOSET_CAP")) return parse_int(env, "CHARPOSET_CAP");
  return 0;
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw CliError{kExitInput, "cannot open output file '" + cfg.out + "'"};
  file << text;
  if (!file) throw CliError{kExitInput, "failed writing '" + cfg.out + "'"};
}

cp_format format_of(const std::string& name, cp_format fallback) {
  if (name.empty()) return fallback;
  if (name == "json") return CP_FORMAT_JSON;
  if (name == "csv") return CP_FORMAT_CSV;
  return CP_FORMAT_DOT;
}

std::unique_ptr<cp_group, GroupDeleter> load(const Config& cfg) {
  cp_group* g = nullptr;
  check(cp_group_load(cfg.group.c_str(), order_cap(cfg), &g));
  std::unique_ptr<cp_group, GroupDeleter> owned(g);
  if (cfg.p && *cfg.p != cp_group_prime(g)) {
    throw CliError{CP_ERR_DOMAIN, "NotPGroup: " + std::string(cp_group_name(g)) +
                                      " is not a " + std::to_string(*cfg.p) + "-group"};
  }
  return owned;
}

std::unique_ptr<cp_poset, PosetDeleter> build_poset(const Config& cfg, cp_group* g) {
  cp_poset* poset = nullptr;
  const cp_strategy s = cfg.strategy == "full" ? CP_STRATEGY_FULL : CP_STRATEGY_MAXIMAL;
  check(cp_poset_create(g, cfg.p.value_or(0), *cfg.e, s, &poset));
  return std::unique_ptr<cp_poset, PosetDeleter>(poset);
}

int cmd_groups(const Config& cfg) {
  char* text = nullptr;
  check(cfg.population ? cp_default_population_json(&text) : cp_catalog_json(&text));
  OwnedString owned(text);
  emit(cfg, text);
  return 0;
}

int cmd_irr(const Config& cfg) {
  auto g = load(cfg);
  char* text = nullptr;
  check(cp_irr_json(g.get(), cfg.subgroups ? 1 : 0, &text));
  OwnedString owned(text);
  emit(cfg, text);
  return 0;
}

int cmd_poset(const Config& cfg) {
  if (cfg.format == "csv") throw CliError{kExitInput, "poset output supports json or dot"};
  auto g = load(cfg);
  auto poset = build_poset(cfg, g.get());
  std::cout << "components: " << cp_poset_component_count(poset.get()) << "\n";
  if (cfg.out.empty() && cfg.format.empty()) return 0;
  char* text = nullptr;
  check(cp_poset_export(poset.get(), format_of(cfg.format, CP_FORMAT_JSON), &text));
  OwnedString owned(text);
  emit(cfg, text);
  return 0;
}

// "H:chi,K:psi"
std::vector<int> parse_endpoints(const std::string& text) {
  std::vector<int> values;
  std::string field;
  std::istringstream in(text);
  std::string pair;
  while (std::getline(in, pair, ',')) {
    const auto colon = pair.find(':');
    if (colon == std::string::npos) throw CliError{kExitInput, "endpoint '" + pair + "' is not H:chi"};
    values.push_back(parse_int(pair.substr(0, colon), "endpoint subgroup"));
    values.push_back(parse_int(pair.substr(colon + 1), "endpoint character"));
  }
  if (values.size() != 4) throw CliError{kExitInput, "--endpoints expects H:chi,K:psi"};
  return values;
}

int cmd_witness(const Config& cfg) {
  if (!cfg.format.empty() && cfg.format != "json") {
    throw CliError{kExitInput, "witness output supports json only"};
  }
  const auto ends = parse_endpoints(cfg.endpoints);
  auto g = load(cfg);
  auto poset = build_poset(cfg, g.get());
  char* text = nullptr;
  check(cp_witness_json(poset.get(), ends[0], ends[1], ends[2], ends[3], &text));
  OwnedString owned(text);
  emit(cfg, text);
  return 0;
}

int finish_reports(const Config& cfg, cp_status status, char* text, int violations) {
  OwnedString owned(text);
  if (!text) check(status);
  emit(cfg, text);
  if (violations > 0) {
    std::cerr << "charposet: " << violations << " failing report(s); first: " << cp_last_error()
              << "\n";
  }
  return status;
}

int cmd_verify(const Config& cfg) {
  if (cfg.format == "dot") throw CliError{kExitInput, "reports support json or csv"};
  auto g = load(cfg);
  char* text = nullptr;
  int violations = 0;
  const cp_status status = cp_verify(g.get(), cfg.e.value_or(-1),
                                     format_of(cfg.format, CP_FORMAT_JSON), cfg.timings ? 1 : 0,
                                     &text, &violations);
  return finish_reports(cfg, status, text, violations);
}

int cmd_sweep(const Config& cfg) {
  if (cfg.format == "dot") throw CliError{kExitInput, "reports support json or csv"};
  std::vector<int> primes;
  std::istringstream in(cfg.primes);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) primes.push_back(parse_int(item, "prime"));
  }
  std::vector<const char*> sources;
  for (const auto& s : cfg.groups) sources.push_back(s.c_str());

  cp_sweep_options opts{};
  opts.sources = sources.empty() ? nullptr : sources.data();
  opts.source_count = sources.size();
  opts.max_order = cfg.max_order;
  opts.primes = primes.empty() ? nullptr : primes.data();
  opts.prime_count = primes.size();
  opts.e = cfg.e.value_or(-1);
  opts.order_cap = order_cap(cfg);
  opts.format = format_of(cfg.format, CP_FORMAT_JSON);
  opts.timings = cfg.timings ? 1 : 0;

  char* text = nullptr;
  int violations = 0;
  const cp_status status = cp_sweep(&opts, &text, &violations);
  return finish_reports(cfg, status, text, violations);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Character-pair posets of finite p-groups"};
  app.require_subcommand(1);
  Config cfg;

  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", cfg.group, "Built-in family spec or @file")->required();
    cmd->add_option("--cap", cfg.cap, "Order cap for subgroup enumeration")
        ->check(CLI::PositiveNumber);
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", cfg.out, "Output path"); };
  auto add_pe = [&](CLI::App* cmd, bool e_required) {
    cmd->add_option("--p", cfg.p, "Prime (defaults to the prime of the group)")
        ->check(CLI::PositiveNumber);
    auto* e = cmd->add_option("--e", cfg.e, "Exponent e; members have order >= p^(e+1)")
                  ->check(CLI::NonNegativeNumber);
    if (e_required) e->required();
  };
  auto add_strategy = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", cfg.strategy, "Edge strategy")
        ->check(CLI::IsMember({"full", "maximal"}));
  };

  auto* groups = app.add_subcommand("groups", "List built-in group families");
  groups->add_flag("--population", cfg.population, "List the default sweep population instead");
  add_out(groups);

  auto* irr = app.add_subcommand("irr", "Character table of a group");
  add_group(irr);
  irr->add_flag("--subgroups", cfg.subgroups, "Include the table of every subgroup");
  add_out(irr);

  auto* poset = app.add_subcommand("poset", "Build the poset and count its components");
  add_group(poset);
  add_pe(poset, true);
  add_strategy(poset);
  poset->add_option("--format", cfg.format, "Artifact format")->check(CLI::IsMember({"json", "dot"}));
  add_out(poset);

  auto* witness = app.add_subcommand("witness", "Connectivity chain between two nodes");
  add_group(witness);
  add_pe(witness, true);
  add_strategy(witness);
  witness->add_option("--endpoints", cfg.endpoints, "H:chi,K:psi")->required();
  witness->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json"}));
  add_out(witness);

  auto* verify = app.add_subcommand("verify", "Check the component bounds for one group");
  add_group(verify);
  add_pe(verify, false);
  verify->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  verify->add_flag("--timings", cfg.timings, "Include per-report timings");
  add_out(verify);

  auto* sweep = app.add_subcommand("sweep", "Check the component bounds across many groups");
  sweep->add_option("--group", cfg.groups, "Group spec or @file (repeatable; default population if absent)");
  sweep->add_option("--cap", cfg.cap, "Order cap for subgroup enumeration")->check(CLI::PositiveNumber);
  sweep->add_option("--max-order", cfg.max_order, "Skip groups above this order")
      ->check(CLI::NonNegativeNumber);
  sweep->add_option("--primes", cfg.primes, "Comma-separated primes to keep");
  sweep->add_option("--e", cfg.e, "Only this e")->check(CLI::NonNegativeNumber);
  sweep->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sweep->add_flag("--timings", cfg.timings, "Include per-report timings");
  add_out(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    const int rc = app.exit(ex);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*groups) return cmd_groups(cfg);
    if (*irr) return cmd_irr(cfg);
    if (*poset) return cmd_poset(cfg);
    if (*witness) return cmd_witness(cfg);
    if (*verify) return cmd_verify(cfg);
    return cmd_sweep(cfg);
  } catch (const CliError& ex) {
    std::cerr << "charposet: " << ex.message << "\n";
    return ex.code;
  }
}
