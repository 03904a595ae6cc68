#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>
#include <random>

#include "builtin.hpp"
#include "character.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

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

std::vector<std::int64_t> degrees(const std::vector<ClassFunction>& irr) {
  std::vector<std::int64_t> d;
  for (const auto& chi : irr) d.push_back(chi.degree());
  return d;
}

}  // namespace

TEST(Characters, QuaternionAndDihedralTables) {
  for (const char* spec : {"Quaternion(8)", "Dihedral(8)"}) {
    const auto reg = registry_for(spec);
    const int top = reg->lattice().top();
    const auto& irr = reg->irr(top);
    EXPECT_EQ(degrees(irr), (std::vector<std::int64_t>{1, 1, 1, 1, 2})) << spec;
    const GroupTable& g = *reg->group();
    const int z = oracle::center(g)[1];
    for (const auto& chi : irr) {
      for (const auto& v : chi.values) ASSERT_TRUE(v.is_integer());
    }
    // Trivial character first; the degree-2 character is -2 on the central
    // involution and vanishes off the center.
    for (int x = 0; x < g.order(); ++x) EXPECT_EQ(irr[0].at(x).as_integer(), 1);
    const ClassFunction& chi2 = irr[4];
    EXPECT_EQ(chi2.at(z).as_integer(), -2);
    for (int x = 0; x < g.order(); ++x) {
      if (x != g.identity() && x != z) {
        EXPECT_EQ(chi2.at(x).as_integer(), 0);
      }
    }
    // Linear characters are +-1 valued and trivial on Z(G) = G'.
    for (int i = 0; i < 4; ++i) EXPECT_EQ(irr[i].at(z).as_integer(), 1);
  }
}

TEST(Characters, CyclicOfOrderNineHasNineLinearCharacters) {
  const auto reg = registry_for("Cyclic(3,2)");
  const auto& irr = reg->irr(reg->lattice().top());
  ASSERT_EQ(irr.size(), 9u);
  std::set<std::vector<std::int64_t>> distinct;
  for (const auto& chi : irr) {
    EXPECT_EQ(chi.degree(), 1);
    std::vector<std::int64_t> flat;
    for (const auto& v : chi.values)
      for (auto c : v.coeffs()) flat.push_back(c);
    distinct.insert(flat);
  }
  EXPECT_EQ(distinct.size(), 9u);
}

TEST(Characters, ExtraspecialOfOrder27) {
  for (const char* spec : {"Extraspecial(3,+)", "Extraspecial(3,-)"}) {
    const auto reg = registry_for(spec);
    const auto d = degrees(reg->irr(reg->lattice().top()));
    std::vector<std::int64_t> expect(9, 1);
    expect.push_back(3);
    expect.push_back(3);
    EXPECT_EQ(d, expect) << spec;
  }
}

TEST(Characters, TablesSatisfyOrthogonalityOnEverySubgroup) {
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const auto& lat = reg->lattice();
    for (int id = 0; id < lat.size(); ++id) {
      const auto& irr = reg->irr(id);
      const int order = lat.at(id).order();
      std::int64_t sum_sq = 0;
      for (const auto& chi : irr) sum_sq += chi.degree() * chi.degree();
      ASSERT_EQ(sum_sq, order) << spec << " subgroup " << id;
      ASSERT_EQ(static_cast<int>(irr.size()), reg->classes(id)->count());
      for (std::size_t i = 0; i < irr.size(); ++i) {
        for (std::size_t j = 0; j < irr.size(); ++j) {
          ASSERT_EQ(inner_product(irr[i], irr[j]), i == j ? 1 : 0) << spec << " subgroup " << id;
        }
      }
      for (std::size_t i = 1; i < irr.size(); ++i) {
        ASSERT_TRUE(canonical_less(irr[i - 1], irr[i])) << spec << " subgroup " << id;
      }
    }
  }
}

TEST(Characters, SecondOrthogonality) {
  for (const char* spec : {"Dihedral(16)", "Semidihedral(16)", "Extraspecial(3,-)", "Modular(2,5)"}) {
    const auto reg = registry_for(spec);
    const int top = reg->lattice().top();
    const auto& irr = reg->irr(top);
    const auto& cc = *reg->classes(top);
    const int n = reg->conductor();
    for (int a = 0; a < cc.count(); ++a) {
      for (int b = 0; b < cc.count(); ++b) {
        CycInt sum(n, 0);
        for (const auto& chi : irr) sum += chi.values[a] * chi.values[b].conjugate();
        const std::int64_t expect = a == b ? reg->group()->order() / cc.sizes[a] : 0;
        ASSERT_EQ(sum, CycInt(n, expect)) << spec;
      }
    }
  }
}

TEST(Characters, InnerProductMatchesElementwiseSum) {
  std::mt19937 rng(3);
  for (const auto& spec : specs_up_to(27)) {
    const auto reg = registry_for(spec);
    const auto& lat = reg->lattice();
    std::uniform_int_distribution<int> pick(0, lat.size() - 1);
    for (int t = 0; t < 10; ++t) {
      const int id = pick(rng);
      const auto& irr = reg->irr(id);
      std::uniform_int_distribution<int> pc(0, static_cast<int>(irr.size()) - 1);
      const auto& a = irr[pc(rng)];
      const auto& b = irr[pc(rng)];
      const ClassFunction sum{a.classes, [&] {
                                std::vector<CycInt> v;
                                for (std::size_t c = 0; c < a.values.size(); ++c)
                                  v.push_back(a.values[c] + b.values[c]);
                                return v;
                              }()};
      ASSERT_EQ(inner_product(sum, b), oracle::inner_elementwise(sum, b, lat.at(id).elements()));
    }
  }
}

TEST(Characters, RestrictionAndInductionAreTransitive) {
  std::mt19937 rng(17);
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const auto& lat = reg->lattice();
    std::uniform_int_distribution<int> pick(0, lat.size() - 1);
    for (int t = 0; t < 10; ++t) {
      const int h = pick(rng);
      const auto& below = lat.below(h);
      const int l = below[std::uniform_int_distribution<int>(0, below.size() - 1)(rng)];
      const auto& below_l = lat.below(l);
      const int k = below_l[std::uniform_int_distribution<int>(0, below_l.size() - 1)(rng)];
      const auto& chi = reg->irr(h)[std::uniform_int_distribution<int>(0, reg->irr(h).size() - 1)(rng)];
      ASSERT_EQ(restrict_to(restrict_to(chi, reg->classes(l)), reg->classes(k)),
                restrict_to(chi, reg->classes(k)));
      const auto& phi = reg->irr(k)[std::uniform_int_distribution<int>(0, reg->irr(k).size() - 1)(rng)];
      ASSERT_EQ(induce_to(induce_to(phi, reg->classes(l)), reg->classes(h)),
                induce_to(phi, reg->classes(h)));
      const ClassFunction up = induce_to(phi, reg->classes(h));
      ASSERT_EQ(up.degree() * lat.at(k).order(), phi.degree() * lat.at(h).order());
    }
  }
}

TEST(Characters, DecomposeRegularCharacter) {
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const int top = reg->lattice().top();
    const auto& irr = reg->irr(top);
    const auto mult = decompose(regular_character(reg->classes(top), reg->conductor()), irr);
    for (std::size_t i = 0; i < irr.size(); ++i) ASSERT_EQ(mult[i], irr[i].degree()) << spec;
  }
}

TEST(Characters, ConjugateCharactersStayIrreducible) {
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const auto& lat = reg->lattice();
    const GroupTable& g = *reg->group();
    for (int id = 0; id < lat.size(); ++id) {
      const Subgroup& h = lat.at(id);
      if (!h.is_normal_in(Subgroup::whole(reg->group()))) continue;
      for (const auto& chi : reg->irr(id)) {
        for (int x = 0; x < g.order(); x += 3) {
          const ClassFunction c = conjugate_character(chi, x, reg->classes(id));
          ASSERT_EQ(inner_product(c, c), 1);
          ASSERT_NE(std::find(reg->irr(id).begin(), reg->irr(id).end(), c), reg->irr(id).end());
        }
      }
    }
  }
}

TEST(Characters, FrobeniusAndMackeyRandomized) {
  std::mt19937 rng(424242);
  int frobenius = 0;
  int mackey = 0;
  for (const auto& spec : specs_up_to(32)) {
    const auto reg = registry_for(spec);
    const auto& lat = reg->lattice();
    std::uniform_int_distribution<int> pick(0, lat.size() - 1);
    const ClassesPtr& gc = reg->classes(lat.top());
    for (int t = 0; t < 4; ++t) {
      const int h = pick(rng);
      const int k = pick(rng);
      const auto& ih = reg->irr(h);
      const auto& ik = reg->irr(k);
      const auto& alpha = ih[std::uniform_int_distribution<int>(0, ih.size() - 1)(rng)];
      const auto& beta = ik[std::uniform_int_distribution<int>(0, ik.size() - 1)(rng)];
      const auto& chi = reg->irr(lat.top())[std::uniform_int_distribution<int>(
          0, reg->irr(lat.top()).size() - 1)(rng)];
      const IdentityCheck f = frobenius_check(alpha, chi);
      ASSERT_TRUE(f.holds()) << spec << ": " << f.lhs << " vs " << f.rhs;
      const IdentityCheck m = mackey_check(alpha, beta, gc);
      ASSERT_TRUE(m.holds()) << spec << ": " << m.lhs << " vs " << m.rhs;
      ++frobenius;
      ++mackey;
    }
  }
  EXPECT_GE(frobenius, 200);
  EXPECT_GE(mackey, 200);
}

// Mackey as an equality of class functions, assembled here from first principles.
TEST(Characters, MackeyAsClassFunctions) {
  const auto reg = registry_for("Dihedral(16)");
  const auto& lat = reg->lattice();
  const GroupTable& g = *reg->group();
  const ClassesPtr& gc = reg->classes(lat.top());
  for (int h = 0; h < lat.size(); h += 2) {
    for (int k = 1; k < lat.size(); k += 3) {
      const Subgroup& hs = lat.at(h);
      const Subgroup& ks = lat.at(k);
      for (const auto& alpha : reg->irr(h)) {
        const ClassFunction lhs = restrict_to(induce_to(alpha, gc), reg->classes(k));
        // Representatives of K\G/H by brute force.
        std::set<int> seen;
        std::vector<CycInt> rhs(lhs.values.size(), CycInt(reg->conductor(), 0));
        for (int y = 0; y < g.order(); ++y) {
          if (seen.count(y)) continue;
          for (int a : ks.elements())
            for (int b : hs.elements()) seen.insert(g.mul(g.mul(a, y), b));
          const Subgroup hy = hs.conjugated(y);
          const ClassFunction conj = conjugate_character(alpha, y, make_classes(hy));
          const Subgroup pair[] = {hy, ks};
          const ClassFunction piece =
              induce_to(restrict_to(conj, make_classes(intersect_all(pair))), reg->classes(k));
          for (std::size_t c = 0; c < rhs.size(); ++c) rhs[c] += piece.values[c];
        }
        ASSERT_EQ(lhs.values, rhs);
      }
    }
  }
}

TEST(Characters, Errors) {
  const auto reg = registry_for("Dihedral(8)");
  const auto& lat = reg->lattice();
  // Two distinct subgroups of order 4; neither contains the other.
  int a = -1, b = -1;
  for (int id = 0; id < lat.size(); ++id) {
    if (lat.at(id).order() != 4) continue;
    (a < 0 ? a : b) = id;
    if (b >= 0) break;
  }
  ASSERT_GE(b, 0);
  EXPECT_EQ(code_of([&] { restrict_to(reg->irr(a)[0], reg->classes(b)); }), ErrorCode::NotASubgroup);
  EXPECT_EQ(code_of([&] { induce_to(reg->irr(a)[0], reg->classes(b)); }), ErrorCode::NotASubgroup);
  EXPECT_EQ(code_of([&] { inner_product(reg->irr(a)[0], reg->irr(b)[0]); }), ErrorCode::InvalidInput);
  EXPECT_EQ(code_of([] { CharacterRegistry(make("DirectProduct(Cyclic(2,1),Cyclic(3,1))")); }),
            ErrorCode::NotPGroup);
}

TEST(Characters, RestrictionMultiplicitiesMatchDecompose) {
  const auto reg = registry_for("Quaternion(16)");
  const auto& lat = reg->lattice();
  const int top = lat.top();
  for (int k = 0; k < lat.size(); ++k) {
    for (int c = 0; c < static_cast<int>(reg->irr(top).size()); ++c) {
      const auto m = reg->restriction_multiplicities(top, c, k);
      EXPECT_EQ(m, decompose(restrict_to(reg->irr(top)[c], reg->classes(k)), reg->irr(k)));
    }
  }
}
