#pragma once

#include "roughcat/lattice.hpp"
#include "roughcat/preorder.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace roughcat {

/// Objects are tuples of names so that products keep their components;
/// plain objects are one-element tuples.
using ObjectKey = std::vector<std::string>;

std::string format_key(const ObjectKey& key);

/// One failed axiom instance.
struct Violation {
  std::string rule;
  std::vector<std::string> witness;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void merge(const ValidationReport& other);
};

/// A finite L-enriched category: a total hom table over an object list.
/// Construction checks shape and carrier membership; the unit and
/// composition axioms are checked by validate_category.
class LCategory {
 public:
  LCategory(AlgebraPtr algebra, std::vector<ObjectKey> objects, std::vector<Grade> hom);

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t size() const { return objects_.size(); }
  const std::vector<ObjectKey>& objects() const { return objects_; }
  const ObjectKey& object(std::size_t i) const { return objects_[i]; }
  std::string label(std::size_t i) const { return format_key(objects_[i]); }

  std::optional<std::size_t> find(const ObjectKey& key) const;
  /// Throws Error(unknown_object).
  std::size_t index_of(const ObjectKey& key) const;

  const Grade& hom(std::size_t from, std::size_t to) const { return hom_[from * size() + to]; }
  const std::vector<Grade>& hom_table() const { return hom_; }

  /// True when every hom is bottom or the unit.
  bool is_crisp() const;

  friend bool operator==(const LCategory& a, const LCategory& b);

 private:
  AlgebraPtr algebra_;
  std::vector<ObjectKey> objects_;
  std::vector<Grade> hom_;
  std::map<ObjectKey, std::size_t> index_;
};

using CategoryPtr = std::shared_ptr<const LCategory>;

/// unit <= hom(x,x) and hom(y,z) * hom(x,y) <= hom(x,z), exhaustively.
ValidationReport validate_category(const LCategory& c);

/// hom(x,y) = unit if x = y, else bottom.
CategoryPtr discrete(const std::vector<ObjectKey>& objects, AlgebraPtr algebra);
CategoryPtr discrete(const std::vector<std::string>& objects, AlgebraPtr algebra);
/// hom(x,y) = unit if x <= y, else bottom.
CategoryPtr from_preorder(const Preorder& order, AlgebraPtr algebra);
/// One object, hom = unit.
CategoryPtr one_point(AlgebraPtr algebra);

/// Pairs with meet-combined homs (the categorical product).
CategoryPtr product(const LCategory& x, const LCategory& y);
/// Pairs with tensor-combined homs.
CategoryPtr tensor_product(const LCategory& x, const LCategory& y);
/// Left fold of product over `factors`; the empty product is one_point.
CategoryPtr product_all(std::span<const CategoryPtr> factors, AlgebraPtr algebra);
/// hom reversed.
CategoryPtr opposite(const LCategory& x);

/// Least L-category whose homs dominate `seed` (row-major, size n*n):
/// iterates hom(x,z) |= hom(y,z) * hom(x,y) and unit <= hom(x,x) to a
/// fixed point.
CategoryPtr enriched_closure(AlgebraPtr algebra, std::vector<ObjectKey> objects,
                             std::vector<Grade> seed);

/// Pointwise meet of two categories on the same objects.
CategoryPtr meet_categories(const LCategory& x, const LCategory& y);

/// The BOOL2 category with x <= y iff unit <= hom(x,y).
CategoryPtr underlying_preorder(const LCategory& x);

/// Full subcategory on the given object indices.
CategoryPtr full_subcategory(const LCategory& x, std::span<const std::size_t> keep);

/// An object map between two categories over the same algebra.
class LFunctor {
 public:
  LFunctor(CategoryPtr source, CategoryPtr target, std::vector<std::size_t> map);

  static LFunctor identity(CategoryPtr c);

  const CategoryPtr& source() const { return source_; }
  const CategoryPtr& target() const { return target_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<std::size_t> map_;
};

/// `second` after `first`. Throws on target/source mismatch.
LFunctor compose(const LFunctor& second, const LFunctor& first);

/// Lists every pair (x, x') with hom(x,x') not below hom(Fx, Fx').
ValidationReport validate_functor(const LFunctor& f);

/// F is below G: unit <= hom(Fx, Gx) for every x.
bool nat_leq(const LFunctor& f, const LFunctor& g);

/// A grade-valued functor on a category. Values live in `values`; the
/// category's algebra must act on it (see Action).
class LPredicate {
 public:
  LPredicate(CategoryPtr category, LatticePtr values, std::vector<Grade> grades);

  /// Values in the category's own algebra.
  LPredicate(CategoryPtr category, std::vector<Grade> grades);

  static LPredicate constant(CategoryPtr category, LatticePtr values, const Grade& g);

  const CategoryPtr& category() const { return category_; }
  const LatticePtr& values() const { return values_; }
  const std::vector<Grade>& grades() const { return grades_; }
  const Grade& operator[](std::size_t i) const { return grades_[i]; }
  std::size_t size() const { return grades_.size(); }
  Action action() const { return Action(category_->algebra(), values_); }

  /// Same category (structurally) and same grades.
  friend bool operator==(const LPredicate& a, const LPredicate& b);

 private:
  CategoryPtr category_;
  LatticePtr values_;
  std::vector<Grade> grades_;
};

/// hom(x,x') acting on mu(x) stays below mu(x'), for every pair.
ValidationReport validate_predicate(const LPredicate& p);

/// Enriched hom in L^X: meet over x of hom(F x, G x) in the value lattice.
Grade hom_predicates(const LPredicate& f, const LPredicate& g);

/// Pointwise order.
bool predicate_leq(const LPredicate& f, const LPredicate& g);
LPredicate pointwise_meet(const LPredicate& f, const LPredicate& g);
LPredicate pointwise_join(const LPredicate& f, const LPredicate& g);

/// Pointwise order is only meaningful for predicates on one category.
void require_same_domain(const LPredicate& f, const LPredicate& g);

/// An L-valued binary relation on a category's objects.
class LRelation {
 public:
  LRelation(CategoryPtr carrier, std::vector<Grade> values);

  const CategoryPtr& carrier() const { return carrier_; }
  const AlgebraPtr& algebra() const { return carrier_->algebra(); }
  std::size_t size() const { return carrier_->size(); }
  const Grade& operator()(std::size_t x, std::size_t y) const { return values_[x * size() + y]; }
  const std::vector<Grade>& values() const { return values_; }

 private:
  CategoryPtr carrier_;
  std::vector<Grade> values_;
};

/// The relation as a functor out of carrier (x) carrier:
/// hom(x,x') * hom(y,y') <= residual(S(x,y), S(x',y')).
ValidationReport validate_relation(const LRelation& s);

}  // namespace roughcat
