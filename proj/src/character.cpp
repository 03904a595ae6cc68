#include "character.hpp"

#include <algorithm>
#include <set>

#include "error.hpp"

namespace charposet {

namespace {

void require_inside(const Subgroup& small, const Subgroup& big, const char* what) {
  if (!small.is_subgroup_of(big)) throw Error(ErrorCode::NotASubgroup, what);
}

}  // namespace

std::int64_t ClassFunction::degree() const {
  return at(owner().ambient().identity()).as_integer();
}

ClassesPtr make_classes(const Subgroup& h) {
  return std::make_shared<const ConjClasses>(conjugacy_classes(h));
}

std::vector<ClassFunction> linear_characters(const ClassesPtr& h, int conductor) {
  const Subgroup& owner = h->owner;
  const Quotient q = quotient(owner, derived_subgroup(owner));
  const AbelianDecomp ab = abelian_decomposition(q.group);
  const std::size_t k = ab.factors.size();
  for (int d : ab.factors) {
    if (conductor % d != 0) {
      throw Error(ErrorCode::ConductorMismatch,
                  "factor " + std::to_string(d) + " does not divide " + std::to_string(conductor));
    }
  }
  // exponent tuple of each class representative in H/H'
  std::vector<const std::vector<int>*> rep_dlog;
  for (int r : h->reps) rep_dlog.push_back(&ab.dlog[q.projection[r]]);

  std::vector<ClassFunction> out;
  std::vector<int> digits(k, 0);
  while (true) {
    ClassFunction lam{h, {}};
    lam.values.reserve(h->count());
    for (int c = 0; c < h->count(); ++c) {
      long long e = 0;
      for (std::size_t i = 0; i < k; ++i) {
        e += 1LL * digits[i] * (*rep_dlog[c])[i] * (conductor / ab.factors[i]);
      }
      lam.values.push_back(CycInt::zeta_pow(conductor, e));
    }
    out.push_back(std::move(lam));
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++digits[i] < ab.factors[i]) break;
      digits[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

ClassFunction restrict_to(const ClassFunction& chi, const ClassesPtr& k) {
  require_inside(k->owner, chi.owner(), "restriction target is not a subgroup of the owner");
  ClassFunction out{k, {}};
  out.values.reserve(k->count());
  for (int r : k->reps) out.values.push_back(chi.at(r));
  return out;
}

ClassFunction induce_to(const ClassFunction& phi, const ClassesPtr& g) {
  const Subgroup& h = phi.owner();
  require_inside(h, g->owner, "induction source is not a subgroup of the target");
  const int n = phi.conductor();
  ClassFunction out{g, {}};
  out.values.reserve(g->count());
  const std::int64_t order = g->owner.order();
  for (int c = 0; c < g->count(); ++c) {
    // sum over x of phi°(x g x^-1) = |C(g)| * sum over the class of g
    CycInt sum(n, 0);
    for (int y : g->members[c]) {
      if (h.contains(y)) sum += phi.at(y);
    }
    sum.scale(order / g->sizes[c]);
    out.values.push_back(sum.exact_div(h.order()));
  }
  return out;
}

ClassFunction conjugate_character(const ClassFunction& phi, int x, const ClassesPtr& target) {
  const GroupTable& g = phi.owner().ambient();
  if (!(target->owner == phi.owner().conjugated(x))) {
    throw Error(ErrorCode::NotASubgroup, "target is not the conjugate subgroup");
  }
  const int xinv = g.inv(x);
  ClassFunction out{target, {}};
  out.values.reserve(target->count());
  for (int r : target->reps) out.values.push_back(phi.at(g.conj(xinv, r)));
  return out;
}

ClassFunction conjugate_character(const ClassFunction& phi, int x) {
  return conjugate_character(phi, x, make_classes(phi.owner().conjugated(x)));
}

std::int64_t inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  if (!(chi.owner() == psi.owner())) {
    throw Error(ErrorCode::InvalidInput, "inner product of class functions on different subgroups");
  }
  const int n = chi.conductor();
  if (psi.conductor() != n) {
    throw Error(ErrorCode::ConductorMismatch, "inner product across conductors");
  }
  const auto& field = cyclotomic_field(n);
  const ConjClasses& cc = *chi.classes;
  std::vector<std::int64_t> acc(2 * field.phi - 1, 0);
  for (int c = 0; c < cc.count(); ++c) {
    accumulate_product(acc, chi.values[c], psi.values[cc.inverse_class[c]], cc.sizes[c]);
  }
  field.reduce(acc);
  acc.resize(field.phi);
  return CycInt(n, std::move(acc)).exact_div(chi.owner().order()).as_integer();
}

ClassFunction regular_character(const ClassesPtr& h, int conductor) {
  ClassFunction out{h, std::vector<CycInt>(h->count(), CycInt(conductor, 0))};
  out.values[h->class_of_element(h->owner.ambient().identity())] =
      CycInt(conductor, h->owner.order());
  return out;
}

ClassFunction trivial_character(const ClassesPtr& h, int conductor) {
  return ClassFunction{h, std::vector<CycInt>(h->count(), CycInt(conductor, 1))};
}

bool canonical_less(const ClassFunction& a, const ClassFunction& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return b.values < a.values;
}

std::vector<ClassFunction> irr_from_sources(const ClassesPtr& h,
                                            std::vector<LinearSource> sources) {
  const Subgroup& owner = h->owner;
  const std::int64_t order = owner.order();
  std::sort(sources.begin(), sources.end(), [](const LinearSource& a, const LinearSource& b) {
    const auto& sa = a.classes->owner;
    const auto& sb = b.classes->owner;
    if (sa.order() != sb.order()) return sa.order() > sb.order();
    return sa.elements() < sb.elements();
  });
  std::vector<ClassFunction> found;
  std::set<std::vector<CycInt>> seen;
  std::int64_t total = 0;
  for (const auto& src : sources) {
    if (total == order) break;
    const std::int64_t deg = order / src.classes->owner.order();
    if (deg * deg > order - total) continue;
    for (const auto& lam : *src.linear) {
      ClassFunction ind = induce_to(lam, h);
      if (seen.count(ind.values)) continue;
      if (inner_product(ind, ind) != 1) continue;
      seen.insert(ind.values);
      total += deg * deg;
      found.push_back(std::move(ind));
      if (total == order) break;
    }
  }
  if (total != order || static_cast<int>(found.size()) != h->count()) {
    throw Error(ErrorCode::IncompleteIrr,
                "subgroup of order " + std::to_string(order) + ": sum of squares " +
                    std::to_string(total) + ", " + std::to_string(found.size()) +
                    " characters for " + std::to_string(h->count()) + " classes");
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<ClassFunction> irr(const Subgroup& h, const SubgroupLattice& lattice, int conductor) {
  const ClassesPtr hc = make_classes(h);
  const int id = lattice.id_of(h);
  std::vector<ClassesPtr> classes;
  std::vector<std::vector<ClassFunction>> linear;
  for (int k : lattice.below(id)) {
    classes.push_back(make_classes(lattice.at(k)));
    linear.push_back(linear_characters(classes.back(), conductor));
  }
  std::vector<LinearSource> sources;
  for (std::size_t i = 0; i < classes.size(); ++i) sources.push_back({classes[i], &linear[i]});
  return irr_from_sources(hc, std::move(sources));
}

std::vector<std::int64_t> decompose(const ClassFunction& theta,
                                    const std::vector<ClassFunction>& basis) {
  std::vector<std::int64_t> mult;
  mult.reserve(basis.size());
  std::vector<CycInt> rebuilt(theta.values.size(), CycInt(theta.conductor(), 0));
  for (const auto& chi : basis) {
    const std::int64_t m = inner_product(theta, chi);
    mult.push_back(m);
    if (m == 0) continue;
    for (std::size_t c = 0; c < rebuilt.size(); ++c) {
      CycInt term = chi.values[c];
      rebuilt[c] += term.scale(m);
    }
  }
  if (rebuilt != theta.values) {
    throw Error(ErrorCode::IncompleteIrr, "decomposition does not reproduce the class function");
  }
  return mult;
}

IdentityCheck mackey_check(const ClassFunction& alpha, const ClassFunction& beta,
                           const ClassesPtr& g) {
  const Subgroup& h = alpha.owner();
  const Subgroup& k = beta.owner();
  const ClassesPtr& kc = beta.classes;
  IdentityCheck out;
  out.lhs = inner_product(restrict_to(induce_to(alpha, g), kc), beta);
  // (alpha^G)_K = sum over K y H of ((^y alpha) restricted to yHy^-1 ∩ K)^K
  for (int y : double_cosets(g->owner, k, h)) {
    const Subgroup hy = h.conjugated(y);
    const ClassFunction conj = conjugate_character(alpha, y, make_classes(hy));
    const Subgroup pair[] = {hy, k};
    const ClassesPtr meet = make_classes(intersect_all(pair));
    out.rhs += inner_product(induce_to(restrict_to(conj, meet), kc), beta);
  }
  return out;
}

IdentityCheck frobenius_check(const ClassFunction& phi, const ClassFunction& chi) {
  IdentityCheck out;
  out.lhs = inner_product(induce_to(phi, chi.classes), chi);
  out.rhs = inner_product(phi, restrict_to(chi, phi.classes));
  return out;
}

// ---------------------------------------------------------------------------

CharacterRegistry::CharacterRegistry(GroupPtr g, const Limits& limits)
    : lattice_((g->order() > 1 && !g->prime())
                   ? throw Error(ErrorCode::NotPGroup, g->name() + " has order " +
                                                           std::to_string(g->order()))
                   : std::move(g),
               limits),
      conductor_(lattice_.group()->exponent()) {
  const int n = lattice_.size();
  classes_.reserve(n);
  linear_.reserve(n);
  irr_.reserve(n);
  for (int id = 0; id < n; ++id) {
    classes_.push_back(make_classes(lattice_.at(id)));
    linear_.push_back(linear_characters(classes_.back(), conductor_));
  }
  for (int id = 0; id < n; ++id) {
    std::vector<LinearSource> sources;
    for (int k : lattice_.below(id)) sources.push_back({classes_[k], &linear_[k]});
    irr_.push_back(irr_from_sources(classes_[id], std::move(sources)));
  }
}

std::vector<std::int64_t> CharacterRegistry::restriction_multiplicities(int from, int chi,
                                                                       int to) const {
  const ClassFunction res = restrict_to(irr(from).at(chi), classes(to));
  std::vector<std::int64_t> out;
  out.reserve(irr(to).size());
  for (const auto& psi : irr(to)) out.push_back(inner_product(res, psi));
  return out;
}

}  // namespace charposet
