#include "roughcat/approx.hpp"

#include "roughcat/error.hpp"

#include <random>

namespace roughcat {

std::string to_string(ApproxKind kind) { return kind == ApproxKind::upper ? "upper" : "lower"; }

namespace {

void require_source(const LFunctor& r, const LPredicate& mu) {
  if (r.source() != mu.category() && !(*r.source() == *mu.category())) {
    throw Error(ErrorKind::shape_mismatch, "predicate does not live on the functor's source");
  }
}

bool is_monotone(const LPredicate& p, const Action& act) {
  const auto& c = *p.category();
  const auto& v = *p.values();
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (x != y && !v.leq(act.copower(c.hom(x, y), p[x]), p[y])) return false;
    }
  }
  return true;
}

}  // namespace

LPredicate lift(const LFunctor& r, const LPredicate& nu) {
  if (r.target() != nu.category() && !(*r.target() == *nu.category())) {
    throw Error(ErrorKind::shape_mismatch, "predicate does not live on the functor's target");
  }
  std::vector<Grade> grades;
  grades.reserve(r.map().size());
  for (std::size_t a : r.map()) grades.push_back(nu[a]);
  LPredicate out(r.source(), nu.values(), std::move(grades));
  if (!is_monotone(out, out.action())) {
    throw Error(ErrorKind::verification_failed, "lifted predicate is not an enriched functor");
  }
  return out;
}

ApproximationResult upper(const LFunctor& r, const LPredicate& mu) {
  require_source(r, mu);
  const Action act(r.target()->algebra(), mu.values());
  const auto& a = *r.target();
  const auto& v = *mu.values();
  std::vector<Grade> grades;
  grades.reserve(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    Grade acc = v.bottom();
    for (std::size_t x = 0; x < r.map().size(); ++x) {
      acc = v.join(acc, act.copower(a.hom(r(x), t), mu[x]));
    }
    grades.push_back(std::move(acc));
  }
  return {ApproxKind::upper, LPredicate(r.target(), mu.values(), std::move(grades))};
}

ApproximationResult lower(const LFunctor& r, const LPredicate& mu) {
  require_source(r, mu);
  const Action act(r.target()->algebra(), mu.values());
  const auto& a = *r.target();
  const auto& v = *mu.values();
  std::vector<Grade> grades;
  grades.reserve(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) {
    Grade acc = v.top();
    for (std::size_t x = 0; x < r.map().size(); ++x) {
      acc = v.meet(acc, act.power(a.hom(t, r(x)), mu[x]));
    }
    grades.push_back(std::move(acc));
  }
  return {ApproxKind::lower, LPredicate(r.target(), mu.values(), std::move(grades))};
}

LPredicate diamond(const LFunctor& r, const LPredicate& mu) { return lift(r, upper(r, mu).grades); }

LPredicate box(const LFunctor& r, const LPredicate& mu) { return lift(r, lower(r, mu).grades); }

LPredicate monotone_hull(CategoryPtr category, LatticePtr values, std::vector<Grade> raw) {
  LPredicate seed(category, values, std::move(raw));
  return upper(LFunctor::identity(category), seed).grades;
}

std::optional<std::vector<LPredicate>> enumerate_predicates(const CategoryPtr& category,
                                                            const LatticePtr& values,
                                                            std::size_t limit) {
  auto carrier = values->carrier();
  if (!carrier) return std::nullopt;
  const std::size_t k = carrier->size();
  const std::size_t n = category->size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > limit / k) return std::nullopt;
    total *= k;
  }
  const Action act(category->algebra(), values);
  std::vector<LPredicate> out;
  std::vector<std::size_t> digits(n, 0);
  for (std::size_t count = 0; count < total; ++count) {
    std::vector<Grade> grades;
    grades.reserve(n);
    for (std::size_t d : digits) grades.push_back((*carrier)[d]);
    LPredicate p(category, values, std::move(grades));
    if (is_monotone(p, act)) out.push_back(std::move(p));
    for (std::size_t i = 0; i < n; ++i) {
      if (++digits[i] < k) break;
      digits[i] = 0;
    }
  }
  return out;
}

AdjunctionReport adjunction_oracle(const LFunctor& r, const LPredicate& mu,
                                   std::size_t exhaustive_limit, std::size_t samples,
                                   std::uint64_t seed) {
  AdjunctionReport report;
  const auto up = upper(r, mu).grades;
  const auto lo = lower(r, mu).grades;

  auto check = [&](const LPredicate& nu) {
    ++report.tested;
    const auto lifted = lift(r, nu);
    const char* side = nullptr;
    if (!(hom_predicates(up, nu) == hom_predicates(mu, lifted))) {
      side = "upper";
    } else if (!(hom_predicates(nu, lo) == hom_predicates(lifted, mu))) {
      side = "lower";
    }
    if (side != nullptr && report.passed) {
      report.passed = false;
      report.failed_side = side;
      for (const auto& g : nu.grades()) report.witness.push_back(nu.values()->format(g));
    }
  };

  if (auto all = enumerate_predicates(r.target(), mu.values(), exhaustive_limit)) {
    report.exhaustive = true;
    for (const auto& nu : *all) check(nu);
    return report;
  }
  if (samples == 0) {
    throw Error(ErrorKind::invalid_structure,
                "adjunction oracle needs a sampling budget for this value lattice");
  }
  std::mt19937_64 rng(seed);
  auto carrier = mu.values()->carrier();
  auto draw = [&]() -> Grade {
    if (carrier) {
      std::uniform_int_distribution<std::size_t> pick(0, carrier->size() - 1);
      return (*carrier)[pick(rng)];
    }
    std::uniform_int_distribution<int> den_dist(1, 10);
    int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, den);
    return Grade::rational(Rational(num_dist(rng), den));
  };
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Grade> raw;
    for (std::size_t a = 0; a < r.target()->size(); ++a) raw.push_back(draw());
    check(monotone_hull(r.target(), mu.values(), std::move(raw)));
  }
  return report;
}

}  // namespace roughcat
