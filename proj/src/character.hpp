#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cyclotomic.hpp"
#include "group.hpp"

namespace charposet {

using ClassesPtr = std::shared_ptr<const ConjClasses>;

/// A class function on a subgroup: one exact value per conjugacy class.
struct ClassFunction {
  ClassesPtr classes;
  std::vector<CycInt> values;

  const Subgroup& owner() const noexcept { return classes->owner; }
  int conductor() const noexcept { return values.front().conductor(); }
  /// Value at an ambient element of the owner.
  const CycInt& at(int g) const { return values[classes->class_of_element(g)]; }
  /// Value at the identity; throws NotRationalInteger if it is not an integer.
  std::int64_t degree() const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
    return a.owner() == b.owner() && a.values == b.values;
  }
};

ClassesPtr make_classes(const Subgroup& h);

/// All |H/H'| linear characters, values at conductor n (a multiple of exp(H)).
std::vector<ClassFunction> linear_characters(const ClassesPtr& h, int conductor);

ClassFunction restrict_to(const ClassFunction& chi, const ClassesPtr& k);
ClassFunction induce_to(const ClassFunction& phi, const ClassesPtr& g);
/// (^x phi)(g) = phi(x^-1 g x) on x H x^-1; target must carry the classes of x H x^-1.
ClassFunction conjugate_character(const ClassFunction& phi, int x, const ClassesPtr& target);
ClassFunction conjugate_character(const ClassFunction& phi, int x);

/// (1/|H|) sum size(c) chi(c) psi(c^-1), as an exact integer.
std::int64_t inner_product(const ClassFunction& chi, const ClassFunction& psi);

/// Regular character of H (|H| at 1, 0 elsewhere).
ClassFunction regular_character(const ClassesPtr& h, int conductor);
ClassFunction trivial_character(const ClassesPtr& h, int conductor);

/// Canonical Irr order: degree ascending, then value vectors lexicographically
/// descending (so the trivial character comes first).
bool canonical_less(const ClassFunction& a, const ClassFunction& b);

struct LinearSource {
  ClassesPtr classes;
  const std::vector<ClassFunction>* linear;
};

/// Irr(H) by inducing linear characters of the given subgroups of H.
/// Candidates are tried largest first; throws IncompleteIrr if they do not
/// produce a complete set.
std::vector<ClassFunction> irr_from_sources(const ClassesPtr& h, std::vector<LinearSource> sources);

/// Irr(H) from the subgroups of H found in the lattice.
std::vector<ClassFunction> irr(const Subgroup& h, const SubgroupLattice& lattice, int conductor);

/// Multiplicities [theta, chi_i]; throws if the sum does not reproduce theta.
std::vector<std::int64_t> decompose(const ClassFunction& theta,
                                    const std::vector<ClassFunction>& basis);

struct IdentityCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds() const noexcept { return lhs == rhs; }
};

/// [(alpha^G)_K, beta] against the double-coset sum over K\G/H.
IdentityCheck mackey_check(const ClassFunction& alpha, const ClassFunction& beta,
                           const ClassesPtr& g);
/// [phi^G, chi]_G against [phi, chi_H]_H.
IdentityCheck frobenius_check(const ClassFunction& phi, const ClassFunction& chi);

/// Per-run immutable registry: lattice, classes, linear characters and Irr for
/// every subgroup of G, values at conductor exp(G).
class CharacterRegistry {
 public:
  explicit CharacterRegistry(GroupPtr g, const Limits& limits = {});

  const GroupPtr& group() const noexcept { return lattice_.group(); }
  const SubgroupLattice& lattice() const noexcept { return lattice_; }
  int conductor() const noexcept { return conductor_; }
  const ClassesPtr& classes(int id) const { return classes_.at(id); }
  const std::vector<ClassFunction>& irr(int id) const { return irr_.at(id); }
  const std::vector<ClassFunction>& linear(int id) const { return linear_.at(id); }

  /// Restriction of an Irr member of `from` to subgroup `to`, decomposed over Irr(to).
  std::vector<std::int64_t> restriction_multiplicities(int from, int chi, int to) const;

 private:
  SubgroupLattice lattice_;
  int conductor_;
  std::vector<ClassesPtr> classes_;
  std::vector<std::vector<ClassFunction>> linear_;
  std::vector<std::vector<ClassFunction>> irr_;
};

}  // namespace charposet
