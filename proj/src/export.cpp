#include "export.hpp"

#include <sstream>

namespace charposet {

namespace {

// Fixed palette; components beyond its size reuse colours.
constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

Json node_json(const CharPoset& poset, const PosetNode& node) {
  return Json{{"subgroup", node.subgroup},
              {"chi", node.chi},
              {"order", poset.subgroup(node.subgroup).order()},
              {"degree", poset.character(node).degree()}};
}

}  // namespace

const char* to_string(EdgeStrategy strategy) noexcept {
  return strategy == EdgeStrategy::Full ? "full" : "maximal";
}

Json to_json(const CycInt& value) {
  Json coeffs = Json::array();
  for (auto c : value.coeffs()) coeffs.push_back(c);
  return Json{{"n", value.conductor()}, {"coeffs", std::move(coeffs)}};
}

Json character_table_json(const CharacterRegistry& registry, int lattice_id) {
  const auto& cc = *registry.classes(lattice_id);
  const GroupTable& g = *registry.group();
  Json classes = Json::array();
  for (int c = 0; c < cc.count(); ++c) {
    classes.push_back({{"rep", cc.reps[c]}, {"size", cc.sizes[c]}, {"rep_order", g.elem_order(cc.reps[c])}});
  }
  Json degrees = Json::array();
  Json values = Json::array();
  for (const auto& chi : registry.irr(lattice_id)) {
    degrees.push_back(chi.degree());
    Json row = Json::array();
    for (const auto& v : chi.values) row.push_back(to_json(v));
    values.push_back(std::move(row));
  }
  const Subgroup& h = registry.lattice().at(lattice_id);
  return Json{{"subgroup", lattice_id},
              {"order", h.order()},
              {"elements", h.elements()},
              {"classes", std::move(classes)},
              {"degrees", std::move(degrees)},
              {"values", std::move(values)}};
}

Json irr_json(const CharacterRegistry& registry, bool all_subgroups) {
  const GroupTable& g = *registry.group();
  Json tables = Json::array();
  const auto& lat = registry.lattice();
  if (all_subgroups) {
    for (int id = 0; id < lat.size(); ++id) tables.push_back(character_table_json(registry, id));
  } else {
    tables.push_back(character_table_json(registry, lat.top()));
  }
  return Json{{"group", g.name()},
              {"order", g.order()},
              {"exponent", g.exponent()},
              {"conductor", registry.conductor()},
              {"tables", std::move(tables)}};
}

Json poset_json(const CharPoset& poset) {
  const GroupTable& g = *poset.registry().group();
  Json subgroups = Json::array();
  for (int s = 0; s <= poset.top(); ++s) {
    const Subgroup& h = poset.subgroup(s);
    subgroups.push_back({{"id", s}, {"lattice_id", poset.lattice_id(s)}, {"order", h.order()},
                         {"elements", h.elements()}});
  }
  Json nodes = Json::array();
  for (std::size_t i = 0; i < poset.nodes().size(); ++i) {
    const auto& n = poset.nodes()[i];
    nodes.push_back({{"id", i},
                     {"subgroup", n.subgroup},
                     {"chi", n.chi},
                     {"degree", poset.character(n).degree()},
                     {"component", poset.partition().node_to_component[i]}});
  }
  Json edges = Json::array();
  for (const auto& [lo, hi] : poset.edges()) edges.push_back({lo, hi});
  return Json{{"group", g.name()},
              {"order", g.order()},
              {"p", poset.p()},
              {"e", poset.e()},
              {"strategy", to_string(poset.strategy())},
              {"components", poset.component_count()},
              {"subgroups", std::move(subgroups)},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

std::string poset_dot(const CharPoset& poset) {
  std::ostringstream os;
  os << "graph poset {\n";
  os << "  label=\"" << poset.registry().group()->name() << " p=" << poset.p()
     << " e=" << poset.e() << " components=" << poset.component_count() << "\";\n";
  os << "  node [style=filled, fontcolor=white];\n";
  constexpr std::size_t palette = sizeof(kPalette) / sizeof(kPalette[0]);
  for (std::size_t i = 0; i < poset.nodes().size(); ++i) {
    const auto& n = poset.nodes()[i];
    const int comp = poset.partition().node_to_component[i];
    os << "  n" << i << " [label=\"H" << n.subgroup << ":χ" << n.chi
       << " (|H|=" << poset.subgroup(n.subgroup).order()
       << ", deg=" << poset.character(n).degree() << ")\", fillcolor=\""
       << kPalette[comp % palette] << "\"];\n";
  }
  for (const auto& [lo, hi] : poset.edges()) os << "  n" << lo << " -- n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

Json chain_json(const CharPoset& poset, const WitnessChain& chain, const std::string& route) {
  Json nodes = Json::array();
  for (const auto& n : chain.nodes) nodes.push_back(node_json(poset, n));
  Json links = Json::array();
  for (std::size_t i = 0; i < chain.directions.size(); ++i) {
    const bool up = chain.directions[i] == Direction::Up;
    const Relation want = up ? Relation::Less : Relation::Greater;
    links.push_back({{"from", i},
                     {"to", i + 1},
                     {"direction", up ? "up" : "down"},
                     {"verified", poset.related(chain.nodes[i], chain.nodes[i + 1]) == want}});
  }
  return Json{{"route", route},
              {"valid", validate_chain(poset, chain)},
              {"nodes", std::move(nodes)},
              {"links", std::move(links)}};
}

Json reports_json(const std::vector<TheoremReport>& reports, bool include_timings) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json j{{"group", r.group},
           {"order", r.order},
           {"p", r.p},
           {"e", r.e},
           {"I", r.i_order},
           {"I_cap_Z", r.iz_order},
           {"irr_I", r.irr_i},
           {"components", r.components},
           {"bounds_hold", r.bounds_hold},
           {"connected_iff_I_trivial", r.connected_iff_i_trivial},
           {"central_checks_run", r.central_checks_run},
           {"central_map_ok", r.central_map_ok}};
    j["abelian_component_count"] = r.abelian_count ? Json(*r.abelian_count) : Json(nullptr);
    j["ok"] = r.ok();
    j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
    if (include_timings) j["seconds"] = r.seconds;
    out.push_back(std::move(j));
  }
  return out;
}

std::string reports_csv(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os << "group,p,e,I,I_cap_Z,irr_I,count,ok\n";
  for (const auto& r : reports) {
    os << '"' << r.group << "\"," << r.p << ',' << r.e << ',' << r.i_order << ',' << r.iz_order
       << ',' << r.irr_i << ',' << r.components << ',' << (r.ok() ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace charposet
