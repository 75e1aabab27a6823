#pragma once

#include "roughcat/approx.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace roughcat {

// ---------------------------------------------------------------------------
// Attribute reduction

using AttributeSubset = std::vector<std::size_t>;

struct ReductWitness {
  std::string first;
  std::string second;
  std::string reason;
};

struct ReductReport {
  AttributeSubset projection;
  bool reducible = false;
  /// Present iff not reducible.
  std::optional<ReductWitness> witness;
  /// Filled by find_minimal_reducts, ordered by size then lexicographically.
  std::vector<AttributeSubset> minimal_reducts;
};

/// Reducibility of A along R': lift_R'(upper_{R'R} mu) = upper_R mu and
/// the same for lower. When both A and A' are crisp this uses the
/// order characterization (R'a <= R'b forces both approximations to be
/// ordered); otherwise both sides of the definition are compared.
ReductReport is_reducible(const LFunctor& r, const LPredicate& mu, const LFunctor& r2);

/// The definitional test alone; `witness` receives the first object of A
/// whose grade changes.
bool reducible_by_definition(const LFunctor& r, const LPredicate& mu, const LFunctor& r2,
                             std::optional<ReductWitness>* witness = nullptr);

/// The order characterization alone (only meaningful for crisp A, A').
bool reducible_by_characterization(const LFunctor& r, const LPredicate& mu, const LFunctor& r2,
                                   std::optional<ReductWitness>* witness = nullptr);

/// Projection of a (subset of a) product category onto the attribute
/// positions in `keep`. The target is the full product of the kept factors.
LFunctor project_attributes(const CategoryPtr& a, std::span<const CategoryPtr> factors,
                            const AttributeSubset& keep);

inline constexpr std::size_t default_max_reduct_attributes = 20;

/// All inclusion-minimal attribute subsets T along whose projection A is
/// reducible, smallest first. Supersets of found reducts are skipped.
/// Throws Error(shape_mismatch) when A's objects are not tuples over
/// `factors`.
ReductReport find_minimal_reducts(const LFunctor& r, const LPredicate& mu,
                                  std::span<const CategoryPtr> factors,
                                  std::size_t max_attributes = default_max_reduct_attributes);

// ---------------------------------------------------------------------------
// Updates

/// A morphism i of the comma category over A x L: R_new . i = R_old and
/// mu_new . i = mu_old.
struct UpdateMorphism {
  LFunctor i;
  LFunctor old_map;
  LPredicate old_decision;
  LFunctor new_map;
  LPredicate new_decision;
};

/// Checks both commuting equations exactly, and that i is an enriched
/// functor. Violations name the offending object.
ValidationReport verify_update(const UpdateMorphism& u);

struct GradeChange {
  std::size_t object;
  Grade before;
  Grade after;
};

struct UpdateDelta {
  ApproximationResult old_upper;
  ApproximationResult old_lower;
  ApproximationResult new_upper;
  ApproximationResult new_lower;
  std::vector<GradeChange> upper_changes;
  std::vector<GradeChange> lower_changes;
  /// upper only rose and lower only fell.
  bool monotone = true;
};

/// Throws Error(verification_failed) when verify_update fails.
UpdateDelta update_delta(const UpdateMorphism& u);

// ---------------------------------------------------------------------------
// Change of base into 2

struct ChangeOfBase {
  enum class Direction {
    threshold_up,       ///< H^q p = top iff q <= p
    strict_complement,  ///< not-H_q p = bottom iff p <= q
  };
  Direction direction;
  Grade q;

  bool apply(const CompleteLattice& l, const Grade& p) const;
};

/// Pointwise thresholding into BOOL2. The result lives on the underlying
/// preorder of the predicate's category.
LPredicate change_of_base(const ChangeOfBase& h, const LPredicate& p);
LPredicate change_of_base(const ChangeOfBase& h, const ApproximationResult& result);

/// R between the underlying preorders of its source and target.
LFunctor underlying_functor(const LFunctor& r);

// ---------------------------------------------------------------------------
// Rule guessing

enum class RuleClass {
  confirmed,    ///< upper and lower both reach the threshold
  possible,     ///< only upper reaches it: evidence, but refutable
  unsupported,  ///< only lower reaches it: not refutable, no evidence
  excluded,
};

std::string to_string(RuleClass c);

struct GuessedRule {
  std::size_t object;
  Grade upper;
  Grade lower;
  RuleClass classification;
};

/// One record per object of A outside the image of R, in A's order.
std::vector<GuessedRule> guess_rules(const LFunctor& r, const LPredicate& mu,
                                     const Grade& threshold);

// ---------------------------------------------------------------------------
// Sentinels

/// Per-attribute markers: `missing` becomes a top above every value,
/// `wildcard` a bottom below every value.
struct SentinelSpec {
  std::optional<std::string> missing;
  std::optional<std::string> wildcard;

  bool empty() const { return !missing && !wildcard; }
};

CategoryPtr sentinel_expand(const LCategory& attribute, const SentinelSpec& sentinels);

}  // namespace roughcat
