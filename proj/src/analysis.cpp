#include "roughcat/analysis.hpp"

#include "roughcat/error.hpp"

#include <algorithm>
#include <functional>

namespace roughcat {

// ---------------------------------------------------------------------------
// reduction

bool reducible_by_definition(const LFunctor& r, const LPredicate& mu, const LFunctor& r2,
                             std::optional<ReductWitness>* witness) {
  const LFunctor composite = compose(r2, r);
  const auto& a = *r.target();
  const auto& v = *mu.values();
  for (ApproxKind kind : {ApproxKind::upper, ApproxKind::lower}) {
    const bool up = kind == ApproxKind::upper;
    const auto direct = up ? upper(r, mu) : lower(r, mu);
    const auto via = up ? upper(composite, mu) : lower(composite, mu);
    const auto lifted = lift(r2, via.grades);
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (!(lifted[t] == direct[t])) {
        if (witness != nullptr) {
          *witness = ReductWitness{a.label(t), r2.target()->label(r2(t)),
                                   to_string(kind) + " grade " + v.format(direct[t]) +
                                       " becomes " + v.format(lifted[t]) + " after projection"};
        }
        return false;
      }
    }
  }
  return true;
}

bool reducible_by_characterization(const LFunctor& r, const LPredicate& mu, const LFunctor& r2,
                                   std::optional<ReductWitness>* witness) {
  const auto up = upper(r, mu);
  const auto lo = lower(r, mu);
  const auto& a = *r.target();
  const auto& a2 = *r2.target();
  const auto& l2 = *a2.algebra();
  const auto& v = *mu.values();
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (!l2.leq(l2.unit(), a2.hom(r2(x), r2(y)))) continue;
      const bool up_ok = v.leq(up[x], up[y]);
      const bool lo_ok = v.leq(lo[x], lo[y]);
      if (!up_ok || !lo_ok) {
        if (witness != nullptr) {
          const auto& g = up_ok ? lo : up;
          *witness = ReductWitness{a.label(x), a.label(y),
                                   to_string(g.kind) + " grades " + v.format(g[x]) + " and " +
                                       v.format(g[y]) + " are not ordered although the images are"};
        }
        return false;
      }
    }
  }
  return true;
}

ReductReport is_reducible(const LFunctor& r, const LPredicate& mu, const LFunctor& r2) {
  if (r.target() != r2.source() && !(*r.target() == *r2.source())) {
    throw Error(ErrorKind::shape_mismatch, "R' must start where R ends");
  }
  ReductReport report;
  if (r.target()->is_crisp() && r2.target()->is_crisp()) {
    report.reducible = reducible_by_characterization(r, mu, r2, &report.witness);
  } else {
    report.reducible = reducible_by_definition(r, mu, r2, &report.witness);
  }
  return report;
}

LFunctor project_attributes(const CategoryPtr& a, std::span<const CategoryPtr> factors,
                            const AttributeSubset& keep) {
  std::vector<CategoryPtr> kept;
  for (std::size_t k : keep) {
    if (k >= factors.size()) throw Error(ErrorKind::shape_mismatch, "attribute position out of range");
    kept.push_back(factors[k]);
  }
  auto target = product_all(kept, a->algebra());
  std::vector<std::size_t> map;
  map.reserve(a->size());
  for (const auto& key : a->objects()) {
    if (key.size() != factors.size()) {
      throw Error(ErrorKind::shape_mismatch, "object " + format_key(key) + " is not an attribute tuple");
    }
    ObjectKey sub;
    for (std::size_t k : keep) sub.push_back(key[k]);
    auto idx = target->find(sub);
    if (!idx) throw Error(ErrorKind::shape_mismatch, "object " + format_key(key) + " has a value outside its attribute");
    map.push_back(*idx);
  }
  return LFunctor(a, std::move(target), std::move(map));
}

ReductReport find_minimal_reducts(const LFunctor& r, const LPredicate& mu,
                                  std::span<const CategoryPtr> factors, std::size_t max_attributes) {
  const std::size_t n = factors.size();
  if (n > max_attributes) {
    throw Error(ErrorKind::invalid_structure, std::to_string(n) + " attributes exceed the reduct search cap of " +
                                                  std::to_string(max_attributes));
  }
  ReductReport report;
  auto is_superset = [&](const AttributeSubset& s) {
    return std::any_of(report.minimal_reducts.begin(), report.minimal_reducts.end(),
                       [&](const AttributeSubset& found) {
                         return std::includes(s.begin(), s.end(), found.begin(), found.end());
                       });
  };
  AttributeSubset current;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t start, std::size_t size) {
    if (current.size() == size) {
      if (is_superset(current)) return;
      if (reducible_by_definition(r, mu, project_attributes(r.target(), factors, current))) {
        report.minimal_reducts.push_back(current);
      }
      return;
    }
    for (std::size_t k = start; k < n; ++k) {
      current.push_back(k);
      visit(k + 1, size);
      current.pop_back();
    }
  };
  for (std::size_t size = 0; size <= n; ++size) visit(0, size);
  report.reducible = !report.minimal_reducts.empty();
  if (report.reducible) report.projection = report.minimal_reducts.front();
  return report;
}

// ---------------------------------------------------------------------------
// updates

ValidationReport verify_update(const UpdateMorphism& u) {
  ValidationReport report;
  const auto same = [](const CategoryPtr& a, const CategoryPtr& b) { return a == b || *a == *b; };
  if (!same(u.old_map.target(), u.new_map.target())) {
    report.violations.push_back({"shared attribute space", {}});
    return report;
  }
  if (!same(u.i.source(), u.old_map.source()) || !same(u.i.target(), u.new_map.source()) ||
      !same(u.old_decision.category(), u.old_map.source()) ||
      !same(u.new_decision.category(), u.new_map.source())) {
    report.violations.push_back({"update shape", {}});
    return report;
  }
  const auto& xs = *u.i.source();
  for (std::size_t x = 0; x < xs.size(); ++x) {
    if (u.new_map(u.i(x)) != u.old_map(x)) report.violations.push_back({"R' . i = R", {xs.label(x)}});
    if (!(u.new_decision[u.i(x)] == u.old_decision[x])) {
      report.violations.push_back({"mu' . i = mu", {xs.label(x)}});
    }
  }
  report.merge(validate_functor(u.i));
  return report;
}

UpdateDelta update_delta(const UpdateMorphism& u) {
  if (auto report = verify_update(u); !report.ok()) {
    const auto& v = report.violations.front();
    std::string where = v.witness.empty() ? "" : " at " + v.witness.front();
    throw Error(ErrorKind::verification_failed, "not an update: " + v.rule + " fails" + where);
  }
  UpdateDelta d{upper(u.old_map, u.old_decision), lower(u.old_map, u.old_decision),
                upper(u.new_map, u.new_decision), lower(u.new_map, u.new_decision), {}, {}, true};
  const auto& v = *u.old_decision.values();
  for (std::size_t a = 0; a < d.old_upper.target()->size(); ++a) {
    if (!(d.old_upper[a] == d.new_upper[a])) d.upper_changes.push_back({a, d.old_upper[a], d.new_upper[a]});
    if (!(d.old_lower[a] == d.new_lower[a])) d.lower_changes.push_back({a, d.old_lower[a], d.new_lower[a]});
    if (!v.leq(d.old_upper[a], d.new_upper[a]) || !v.leq(d.new_lower[a], d.old_lower[a])) {
      d.monotone = false;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// change of base

bool ChangeOfBase::apply(const CompleteLattice& l, const Grade& p) const {
  if (direction == Direction::threshold_up) return l.leq(q, p);
  return !l.leq(p, q);
}

LPredicate change_of_base(const ChangeOfBase& h, const LPredicate& p) {
  p.values()->require(h.q);
  CategoryPtr c = p.category()->algebra()->kind() == AlgebraKind::bool2
                      ? p.category()
                      : underlying_preorder(*p.category());
  std::vector<Grade> out;
  out.reserve(p.size());
  for (const auto& g : p.grades()) out.push_back(Grade::boolean(h.apply(*p.values(), g)));
  return LPredicate(std::move(c), bool2(), std::move(out));
}

LPredicate change_of_base(const ChangeOfBase& h, const ApproximationResult& result) {
  return change_of_base(h, result.grades);
}

LFunctor underlying_functor(const LFunctor& r) {
  return LFunctor(underlying_preorder(*r.source()), underlying_preorder(*r.target()), r.map());
}

// ---------------------------------------------------------------------------
// guessing

std::string to_string(RuleClass c) {
  switch (c) {
    case RuleClass::confirmed: return "confirmed";
    case RuleClass::possible: return "possible";
    case RuleClass::unsupported: return "unsupported";
    case RuleClass::excluded: return "excluded";
  }
  return "?";
}

std::vector<GuessedRule> guess_rules(const LFunctor& r, const LPredicate& mu, const Grade& threshold) {
  const auto& v = *mu.values();
  v.require(threshold);
  const auto up = upper(r, mu);
  const auto lo = lower(r, mu);
  std::vector<bool> in_image(r.target()->size(), false);
  for (std::size_t a : r.map()) in_image[a] = true;
  std::vector<GuessedRule> rules;
  for (std::size_t a = 0; a < in_image.size(); ++a) {
    if (in_image[a]) continue;
    const bool u = v.leq(threshold, up[a]);
    const bool l = v.leq(threshold, lo[a]);
    RuleClass c = u ? (l ? RuleClass::confirmed : RuleClass::possible)
                    : (l ? RuleClass::unsupported : RuleClass::excluded);
    rules.push_back({a, up[a], lo[a], c});
  }
  return rules;
}

// ---------------------------------------------------------------------------
// sentinels

CategoryPtr sentinel_expand(const LCategory& attribute, const SentinelSpec& s) {
  const auto& l = *attribute.algebra();
  for (const auto* marker : {&s.missing, &s.wildcard}) {
    if (*marker && attribute.find({**marker})) {
      throw Error(ErrorKind::invalid_structure, "sentinel '" + **marker + "' collides with a value");
    }
  }
  if (s.missing && s.wildcard && *s.missing == *s.wildcard) {
    throw Error(ErrorKind::invalid_structure, "missing and wildcard markers must differ");
  }
  const std::size_t base = attribute.size();
  const std::size_t offset = s.wildcard ? 1 : 0;
  const std::size_t n = base + offset + (s.missing ? 1 : 0);
  std::vector<ObjectKey> objects;
  if (s.wildcard) objects.push_back({*s.wildcard});
  objects.insert(objects.end(), attribute.objects().begin(), attribute.objects().end());
  if (s.missing) objects.push_back({*s.missing});

  std::vector<Grade> hom(n * n, l.bottom());
  for (std::size_t i = 0; i < base; ++i) {
    for (std::size_t j = 0; j < base; ++j) hom[(i + offset) * n + j + offset] = attribute.hom(i, j);
  }
  if (s.wildcard) {
    for (std::size_t j = 0; j < n; ++j) hom[j] = l.unit();
  }
  if (s.missing) {
    for (std::size_t i = 0; i < n; ++i) hom[i * n + n - 1] = l.unit();
  }
  return std::make_shared<LCategory>(attribute.algebra(), std::move(objects), std::move(hom));
}

}  // namespace roughcat
