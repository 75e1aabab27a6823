#pragma once

#include "roughcat/category.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace roughcat {

enum class ApproxKind { upper, lower };

std::string to_string(ApproxKind kind);

/// Grades over the target category A of R.
struct ApproximationResult {
  ApproxKind kind;
  LPredicate grades;

  const CategoryPtr& target() const { return grades.category(); }
  const Grade& operator[](std::size_t a) const { return grades[a]; }
};

/// Precomposition: (lift nu)(x) = nu(R x). Throws if nu does not live on
/// R's target, or if the lifted predicate fails validation.
LPredicate lift(const LFunctor& r, const LPredicate& nu);

/// (upper mu)(a) = join over x of hom(R x, a) acting on mu(x).
/// Empty X gives bottom everywhere.
ApproximationResult upper(const LFunctor& r, const LPredicate& mu);

/// (lower mu)(a) = meet over x of hom(a, R x) => mu(x).
/// Empty X gives top everywhere.
ApproximationResult lower(const LFunctor& r, const LPredicate& mu);

/// lift . upper and lift . lower, the closure and interior operators on X.
LPredicate diamond(const LFunctor& r, const LPredicate& mu);
LPredicate box(const LFunctor& r, const LPredicate& mu);

/// The least predicate above an arbitrary grade assignment (left Kan
/// extension along the identity). Handy for producing valid predicates.
LPredicate monotone_hull(CategoryPtr category, LatticePtr values, std::vector<Grade> raw);

/// All predicates on `category` valued in a finite lattice, or nullopt
/// when there would be more than `limit` candidate assignments.
std::optional<std::vector<LPredicate>> enumerate_predicates(const CategoryPtr& category,
                                                            const LatticePtr& values,
                                                            std::size_t limit);

struct AdjunctionReport {
  bool passed = true;
  bool exhaustive = false;
  std::size_t tested = 0;
  /// "upper" or "lower" side that failed, with the offending nu.
  std::string failed_side;
  std::vector<std::string> witness;
};

/// Brute-force adjunction check over nu in L^A:
///   hom(upper mu, nu) = hom(mu, lift nu)  and  hom(nu, lower mu) = hom(lift nu, mu).
/// Exhaustive when the finite value carrier gives at most `exhaustive_limit`
/// assignments; otherwise `samples` random monotone nu. Throws
/// Error(invalid_structure) for an infinite carrier with samples == 0.
AdjunctionReport adjunction_oracle(const LFunctor& r, const LPredicate& mu,
                                   std::size_t exhaustive_limit = 1u << 16,
                                   std::size_t samples = 0, std::uint64_t seed = 1);

}  // namespace roughcat
