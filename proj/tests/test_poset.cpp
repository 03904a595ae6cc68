#include <gtest/gtest.h>

#include <random>

#include "builtin.hpp"
#include "export.hpp"
#include "oracles.hpp"
#include "poset.hpp"
#include "test_util.hpp"
#include "verify.hpp"
#include "witness.hpp"

using namespace charposet;
using testutil::code_of;
using testutil::make;

namespace {

std::shared_ptr<const CharacterRegistry> registry_for(const std::string& spec) {
  return std::make_shared<const CharacterRegistry>(make(spec));
}

std::vector<std::string> specs_up_to(int max_order) {
  std::vector<std::string> out;
  for (const auto& s : default_sweep_specs())
    if (parse_family_spec(s).order() <= max_order) out.push_back(s);
  return out;
}

int max_e(const GroupTable& g) {
  const int p = *g.prime();
  int e = 0;
  long long q = p;
  while (q * p <= g.order()) {
    q *= p;
    ++e;
  }
  return e;
}

// Partition equality as "same component" on every pair of nodes.
void expect_same_partition(const CharPoset& poset,
                           const std::map<std::pair<int, int>, int>& labels) {
  const auto& nodes = poset.nodes();
  ASSERT_EQ(nodes.size(), labels.size());
  std::vector<int> oracle_label;
  for (const auto& n : nodes) oracle_label.push_back(labels.at({poset.lattice_id(n.subgroup), n.chi}));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      ASSERT_EQ(poset.component_of(nodes[i]) == poset.component_of(nodes[j]),
                oracle_label[i] == oracle_label[j]);
    }
  }
}

}  // namespace

TEST(Poset, NaiveOracleAgreesWithBothStrategies) {
  for (const auto& spec : specs_up_to(16)) {
    const auto reg = registry_for(spec);
    const int p = *reg->group()->prime();
    for (int e = 0; e <= max_e(*reg->group()); ++e) {
      const CharPoset full(reg, p, e, EdgeStrategy::Full);
      const CharPoset maximal(reg, p, e, EdgeStrategy::MaximalOnly);
      const auto labels = oracle::naive_components(*reg, full.threshold());
      EXPECT_EQ(full.component_count(), oracle::label_count(labels)) << spec << " e=" << e;
      expect_same_partition(full, labels);
      EXPECT_EQ(full.partition(), maximal.partition()) << spec << " e=" << e;
    }
  }
}

// Component counts produced by the naive oracle and frozen.
TEST(Poset, KnownComponentCounts) {
  struct Row {
    const char* spec;
    int e;
    int count;
  };
  const Row rows[] = {
      {"Quaternion(8)", 1, 2},   {"Dihedral(8)", 1, 2},     {"Cyclic(2,4)", 2, 8},
      {"ElemAbelian(2,3)", 1, 1}, {"Cyclic(2,2)", 0, 2},     {"Quaternion(8)", 0, 2},
      {"Dihedral(8)", 0, 1},     {"Cyclic(3,2)", 0, 3},     {"ElemAbelian(3,2)", 0, 1},
      {"Extraspecial(3,+)", 1, 3}, {"Quaternion(16)", 1, 2}, {"Dihedral(16)", 2, 3},
  };
  for (const auto& r : rows) {
    const auto reg = registry_for(r.spec);
    const CharPoset poset(reg, *reg->group()->prime(), r.e);
    EXPECT_EQ(poset.component_count(), r.count) << r.spec << " e=" << r.e;
    if (reg->group()->order() <= 27) {
      EXPECT_EQ(oracle::label_count(oracle::naive_components(*reg, poset.threshold())), r.count);
    }
  }
}

TEST(Poset, StrategiesAgreeUpToOrder32) {
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const int p = *reg->group()->prime();
    for (int e = 0; e <= max_e(*reg->group()); ++e) {
      EXPECT_EQ(components(reg, p, e, EdgeStrategy::Full),
                components(reg, p, e, EdgeStrategy::MaximalOnly))
          << spec << " e=" << e;
    }
  }
}

TEST(Poset, IntersectionMatchesSubsetOracle) {
  for (const auto& spec : specs_up_to(16)) {
    const GroupPtr g = make(spec);
    const auto subs = oracle::subgroups_by_subsets(*g);
    const int p = *g->prime();
    long long q = p;
    for (int e = 0; q <= g->order(); ++e, q *= p) {
      EXPECT_EQ(compute_i(g, p, e).elements(), oracle::intersect_of_order(subs, int(q), g->order()))
          << spec << " e=" << e;
    }
  }
}

TEST(Poset, RelationsAndEdges) {
  const auto reg = registry_for("Dihedral(16)");
  const CharPoset poset(reg, 2, 1, EdgeStrategy::Full);
  for (const auto& [lo, hi] : poset.edges()) {
    const auto& a = poset.nodes()[lo];
    const auto& b = poset.nodes()[hi];
    EXPECT_EQ(poset.related(a, b), Relation::Less);
    EXPECT_EQ(poset.related(b, a), Relation::Greater);
  }
  for (const auto& n : poset.nodes()) EXPECT_EQ(poset.related(n, n), Relation::Equal);
  EXPECT_EQ(code_of([&] { poset.node_index({0, 99}); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([&] { poset.node_index({99, 0}); }), ErrorCode::InvalidInput);
}

TEST(Poset, ParameterChecks) {
  EXPECT_EQ(code_of([] { check_poset_parameters(*make("Quaternion(8)"), 2, 3); }),
            ErrorCode::InvalidExponent);
  EXPECT_EQ(code_of([] { check_poset_parameters(*make("Quaternion(8)"), 3, 0); }),
            ErrorCode::NotPGroup);
  EXPECT_EQ(code_of([] { check_poset_parameters(*make("Cyclic(2,0)"), 2, 0); }),
            ErrorCode::InvalidExponent);
  EXPECT_NO_THROW(check_poset_parameters(*make("Quaternion(8)"), 2, 2));
}

TEST(Poset, EveryComponentMeetsEveryMember) {
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const int p = *reg->group()->prime();
    for (int e = 0; e <= max_e(*reg->group()); ++e) {
      const CharPoset poset(reg, p, e);
      for (int s = 0; s <= poset.top(); ++s) {
        const auto reps = component_representatives(poset, s);
        ASSERT_EQ(static_cast<int>(reps.size()), poset.component_count());
        for (std::size_t c = 0; c < reps.size(); ++c) {
          ASSERT_EQ(reps[c].subgroup, s);
          ASSERT_EQ(poset.component_of(reps[c]), static_cast<int>(c));
        }
      }
    }
  }
}

TEST(Poset, CentralMap) {
  const auto reg = registry_for("Dihedral(8)");
  const CharPoset poset(reg, 2, 1);
  const auto& lat = reg->lattice();
  const int z = lat.id_of(center(Subgroup::whole(reg->group())));
  std::set<int> images;
  for (const auto& n : poset.nodes()) {
    const int beta = central_poset_map(poset, n, z);
    images.insert(beta);
    for (const auto& m : poset.nodes()) {
      if (poset.component_of(m) == poset.component_of(n)) {
        ASSERT_EQ(central_poset_map(poset, m, z), beta);
      }
    }
  }
  EXPECT_EQ(images.size(), 2u);
  EXPECT_EQ(code_of([&] { central_poset_map(poset, poset.nodes()[0], 0); }), ErrorCode::InvalidInput);
  // A non-central subgroup of order 2.
  for (int id = 1; id < lat.size(); ++id) {
    if (lat.at(id).order() == 2 && id != z) {
      EXPECT_EQ(code_of([&] { central_poset_map(poset, poset.nodes()[0], id); }),
                ErrorCode::InvalidInput);
      break;
    }
  }
}

TEST(Poset, AbelianComponentCount) {
  const std::pair<const char*, int> groups[] = {{"Cyclic(2,1)", 2},      {"Cyclic(2,2)", 2},
                                                {"ElemAbelian(2,2)", 2}, {"Cyclic(3,1)", 3},
                                                {"Cyclic(3,2)", 3},      {"ElemAbelian(3,2)", 3},
                                                {"Cyclic(5,1)", 5}};
  for (const auto& [spec, p] : groups) {
    const GroupTable a = builtin(spec);
    int f = 0;
    for (long long q = p; q < a.order(); q *= p) ++f;
    EXPECT_EQ(abelian_component_count(a, p, f), a.order()) << spec;
  }
  EXPECT_EQ(code_of([] { abelian_component_count(builtin("Quaternion(8)"), 2, 2); }),
            ErrorCode::NotAbelian);
  EXPECT_EQ(code_of([] { abelian_component_count(builtin("Cyclic(2,2)"), 2, 0); }),
            ErrorCode::InvalidExponent);
}

TEST(Witness, ChainsExistExactlyWithinComponents) {
  for (const char* spec : {"Quaternion(8)", "Dihedral(8)"}) {
    const auto reg = registry_for(spec);
    const CharPoset poset(reg, 2, 1);
    for (const auto& a : poset.nodes()) {
      for (const auto& b : poset.nodes()) {
        if (poset.component_of(a) == poset.component_of(b)) {
          const Connection c = connect(poset, a, b);
          ASSERT_TRUE(validate_chain(poset, c.chain));
          ASSERT_EQ(c.chain.nodes.front(), a);
          ASSERT_EQ(c.chain.nodes.back(), b);
        } else {
          ASSERT_EQ(code_of([&] { connect(poset, a, b); }), ErrorCode::PreconditionFailed);
        }
      }
    }
  }
}

TEST(Witness, SameEndpointGivesSingleNode) {
  const auto reg = registry_for("Quaternion(8)");
  const CharPoset poset(reg, 2, 1);
  const Connection c = connect(poset, poset.nodes()[3], poset.nodes()[3]);
  EXPECT_EQ(c.chain.nodes.size(), 1u);
  EXPECT_TRUE(c.chain.directions.empty());
  EXPECT_TRUE(validate_chain(poset, c.chain));
}

TEST(Witness, DirectRouteThroughTop) {
  const auto reg = registry_for("Dihedral(16)");
  const CharPoset poset(reg, 2, 1);
  for (int s = 0; s <= poset.top(); ++s) {
    for (int t = 0; t <= poset.top(); ++t) {
      const auto& irr_s = reg->irr(poset.lattice_id(s));
      const auto& irr_t = reg->irr(poset.lattice_id(t));
      const int meet = reg->lattice().intersection(poset.lattice_id(s), poset.lattice_id(t));
      for (int a = 0; a < static_cast<int>(irr_s.size()); ++a) {
        for (int b = 0; b < static_cast<int>(irr_t.size()); ++b) {
          const auto& mc = reg->classes(meet);
          const bool share = inner_product(restrict_to(irr_s[a], mc), restrict_to(irr_t[b], mc)) != 0;
          if (share) {
            const WitnessChain w = witness_theorem3(poset, {s, a}, {t, b});
            ASSERT_TRUE(validate_chain(poset, w));
            ASSERT_LE(w.nodes.size(), 3u);
          } else {
            ASSERT_EQ(code_of([&] { witness_theorem3(poset, {s, a}, {t, b}); }),
                      ErrorCode::PreconditionFailed);
          }
        }
      }
    }
  }
}

TEST(Witness, SequenceRouteOnRandomSequences) {
  std::mt19937 rng(2718);
  int built = 0;
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const int p = *reg->group()->prime();
    for (int e = 0; e < max_e(*reg->group()); ++e) {
      const CharPoset poset(reg, p, e);
      std::uniform_int_distribution<int> pick(0, poset.top());
      for (int t = 0; t < 6; ++t) {
        std::vector<int> seq(2 + t % 3);
        for (auto& s : seq) s = pick(rng);
        std::vector<int> lats;
        for (int s : seq) lats.push_back(poset.lattice_id(s));
        int k = lats.front();
        for (int l : lats) k = reg->lattice().intersection(k, l);
        const auto& first = reg->irr(lats.front());
        const auto& last = reg->irr(lats.back());
        for (int a = 0; a < static_cast<int>(first.size()); a += 2) {
          for (int b = 0; b < static_cast<int>(last.size()); b += 2) {
            const auto& kc = reg->classes(k);
            if (inner_product(restrict_to(first[a], kc), restrict_to(last[b], kc)) == 0) continue;
            const WitnessChain w = witness_theorem4(poset, seq, a, b);
            ASSERT_TRUE(validate_chain(poset, w)) << spec << " e=" << e;
            ASSERT_EQ(w.nodes.front(), (PosetNode{seq.front(), a}));
            ASSERT_EQ(w.nodes.back(), (PosetNode{seq.back(), b}));
            ++built;
          }
        }
      }
    }
  }
  EXPECT_GT(built, 100);
}

TEST(Witness, ConnectProducesValidChainsOnRandomPairs) {
  std::mt19937 rng(31337);
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const int p = *reg->group()->prime();
    for (int e = 0; e <= max_e(*reg->group()); ++e) {
      const CharPoset poset(reg, p, e);
      std::uniform_int_distribution<int> pick(0, static_cast<int>(poset.nodes().size()) - 1);
      for (int t = 0; t < 10; ++t) {
        const auto& a = poset.nodes()[pick(rng)];
        const auto& b = poset.nodes()[pick(rng)];
        if (poset.component_of(a) != poset.component_of(b)) continue;
        const Connection c = connect(poset, a, b);
        ASSERT_TRUE(validate_chain(poset, c.chain)) << spec << " " << c.route;
      }
    }
  }
}

TEST(Verify, DihedralReport) {
  const TheoremReport r = theorem_report(registry_for("Dihedral(8)"), 2, 1);
  EXPECT_EQ(r.i_order, 2);
  EXPECT_EQ(r.iz_order, 2);
  EXPECT_EQ(r.irr_i, 2);
  EXPECT_EQ(r.components, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.central_checks_run);
  EXPECT_EQ(r.abelian_count, 2);
}

TEST(Verify, NonPGroupIsRecorded) {
  SweepOptions opts;
  const auto reports = verify_group(make("DirectProduct(Cyclic(2,1),Cyclic(3,1))"), opts);
  ASSERT_EQ(reports.size(), 1u);
  EXPECT_FALSE(reports[0].ok());
  EXPECT_EQ(reports[0].error_code, ErrorCode::NotPGroup);
}

TEST(Verify, SweepFiltersAndOrders) {
  SweepOptions opts;
  opts.max_order = 16;
  opts.primes = {2};
  const auto reports = sweep({"Quaternion(16)", "Cyclic(3,1)", "Dihedral(8)", "Dihedral(32)"}, opts);
  ASSERT_EQ(reports.size(), 3u + 4u);
  EXPECT_EQ(reports.front().group, "Dihedral(8)");
  for (std::size_t i = 1; i < reports.size(); ++i) {
    EXPECT_LE(reports[i - 1].order, reports[i].order);
  }
  for (const auto& r : reports) EXPECT_TRUE(r.ok()) << r.group << " " << r.error;

  const auto bad = sweep({"Nope(3)"}, SweepOptions{});
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].error_code, ErrorCode::UnknownFamily);
}

TEST(Export, DeterministicAndWellFormed) {
  const auto reg = registry_for("Quaternion(8)");
  const CharPoset poset(reg, 2, 1);
  const std::string a = poset_json(poset).dump();
  const std::string b = poset_json(CharPoset(registry_for("Quaternion(8)"), 2, 1)).dump();
  EXPECT_EQ(a, b);
  const Json j = Json::parse(a);
  EXPECT_EQ(j["components"], 2);
  EXPECT_EQ(j["nodes"].size(), poset.nodes().size());

  const std::string dot = poset_dot(poset);
  EXPECT_EQ(dot.rfind("graph poset {", 0), 0u);
  EXPECT_NE(dot.find("(|H|=8, deg=2)"), std::string::npos);

  const std::string csv = reports_csv({theorem_report(reg, 2, 1)});
  EXPECT_EQ(csv, "group,p,e,I,I_cap_Z,irr_I,count,ok\n\"Quaternion(8)\",2,1,2,2,2,2,true\n");

  const Json irr = irr_json(*reg, true);
  EXPECT_EQ(irr["tables"].size(), static_cast<std::size_t>(reg->lattice().size()));
  EXPECT_FALSE(reports_json({theorem_report(reg, 2, 1)}, false)[0].contains("seconds"));
}
