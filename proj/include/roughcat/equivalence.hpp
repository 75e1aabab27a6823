#pragma once

#include "roughcat/category.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace roughcat {

/// Reflexivity (unit <= S(x,x)), tensor-transitivity
/// (S(x,y) * S(y,z) <= S(x,z)) and symmetry, checked exhaustively. Each
/// failing law is reported once, with the first witness in scan order.
ValidationReport validate_equivalence(const LRelation& s);

/// The quotient of a category by an enriched equivalence relation.
struct Quotient {
  /// Objects are the distinct classes y |-> S(y, x); labelled by the
  /// least-index representative in brackets.
  CategoryPtr classes;
  /// x |-> its class.
  LFunctor projection;
  /// For every class, the index of its representative in the source.
  std::vector<std::size_t> representatives;
};

/// Throws Error(verification_failed) unless `s` is an equivalence.
Quotient quotient(const LRelation& s);

/// x == y graded S(Rx, Ry). `s` must be an equivalence on a category with
/// the same objects as R's target.
LRelation induced_equivalence(const LRelation& s, const LFunctor& r);

/// Kernel relation of an object map: unit if Rx = Ry, else bottom.
LRelation kernel_relation(const LFunctor& r);

/// H^a b = hom(a, b).
std::vector<Grade> covariant_representable(const LCategory& a, std::size_t obj);
/// H_a b = hom(b, a), a predicate on the opposite category.
std::vector<Grade> contravariant_representable(const LCategory& a, std::size_t obj);

/// Grade of H_a -> H_a' in L^(A^op): meet over b of hom(b,a) => hom(b,a').
Grade yoneda_hom(const LCategory& a, const ObjectKey& from, const ObjectKey& to);
Grade yoneda_hom(const LCategory& a, std::size_t from, std::size_t to);

/// S(a,b) = 2^-d(a,b) over UNIT_PRODUCT. `distances` is row-major, must be
/// a (pseudo)metric of non-negative integers. Throws Error(invalid_structure).
LRelation similarity_from_metric(const std::vector<std::string>& points,
                                 const std::vector<std::int64_t>& distances);

/// The category whose homs are the relation's values (valid whenever the
/// relation is reflexive and tensor-transitive).
CategoryPtr category_from_relation(const LRelation& s);

}  // namespace roughcat
