#pragma once

#include "roughcat/grade.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace roughcat {

enum class AlgebraKind { bool2, unit_godel, unit_product, finite_table, finite_lattice };

/// A complete lattice of grades. Only finite families are ever joined or
/// met, which is all the finite categories here need.
class CompleteLattice {
 public:
  virtual ~CompleteLattice() = default;

  virtual AlgebraKind kind() const = 0;
  virtual std::string name() const = 0;

  virtual bool contains(const Grade& g) const = 0;
  virtual bool leq(const Grade& a, const Grade& b) const = 0;
  virtual Grade meet(const Grade& a, const Grade& b) const = 0;
  virtual Grade join(const Grade& a, const Grade& b) const = 0;
  virtual Grade top() const = 0;
  virtual Grade bottom() const = 0;

  /// Every element, for finite carriers; nullopt for the unit interval.
  virtual std::optional<std::vector<Grade>> carrier() const = 0;

  virtual std::string format(const Grade& g) const = 0;
  virtual Grade parse(std::string_view text) const = 0;

  /// Numeric value for display, when the carrier is numeric.
  virtual std::optional<Rational> numeric(const Grade& g) const;

  /// Structural identity: same builtin, or equal tables.
  virtual bool same_as(const CompleteLattice& other) const = 0;

  Grade meet_all(std::span<const Grade> family) const;
  Grade join_all(std::span<const Grade> family) const;
  bool equivalent(const Grade& a, const Grade& b) const { return leq(a, b) && leq(b, a); }

  /// Throws Error(invalid_grade) when `g` is not in the carrier.
  void require(const Grade& g) const;
};

/// A complete commutative residuated lattice: the lattice plus a
/// commutative monoid (unit, tensor) whose translations have right
/// adjoints, tensor(p, q) <= r iff q <= residual(p, r).
class ResiduatedLattice : public CompleteLattice {
 public:
  virtual Grade unit() const = 0;
  virtual Grade tensor(const Grade& a, const Grade& b) const = 0;
  virtual Grade residual(const Grade& p, const Grade& r) const = 0;
};

using LatticePtr = std::shared_ptr<const CompleteLattice>;
using AlgebraPtr = std::shared_ptr<const ResiduatedLattice>;

/// {bottom, top} with conjunction as tensor.
AlgebraPtr bool2();
/// [0,1] with min as tensor.
AlgebraPtr unit_godel();
/// [0,1] with multiplication as tensor; residual(0, r) = 1.
AlgebraPtr unit_product();

inline constexpr std::size_t default_max_carrier = 64;

using SymbolTable = std::vector<std::vector<std::string>>;

/// Explicit operation tables over a declared carrier. Tables are indexed
/// [a][b] in carrier order and hold carrier names.
struct FiniteTableSpec {
  std::vector<std::string> carrier;
  SymbolTable meet;
  SymbolTable join;
  SymbolTable tensor;
  SymbolTable residual;
  std::string unit;
  std::size_t max_size = default_max_carrier;
};

/// Builds a finite residuated algebra. Throws on malformed tables (shape,
/// unknown names, no greatest/least element); law violations are left for
/// validate_residuated to report.
AlgebraPtr finite_table(const FiniteTableSpec& spec);

/// Finite lattice without a monoid, given by meet/join tables.
LatticePtr finite_lattice(std::vector<std::string> carrier, const SymbolTable& meet,
                          const SymbolTable& join, std::size_t max_size = default_max_carrier);

/// The flat lattice D + {bottom, top}: carrier order is "bottom", the
/// values of D in order, then "top".
LatticePtr flat_lattice(const std::vector<std::string>& values);

/// The n-element Goedel chain 0 < 1/(n-1) < ... < 1 as a finite table.
AlgebraPtr goedel_chain(std::size_t n);
/// The n-element Lukasiewicz chain as a finite table.
AlgebraPtr lukasiewicz_chain(std::size_t n);

/// How an enrichment algebra acts on a value lattice. When the value
/// lattice is the enrichment algebra itself, copower is tensor and power
/// is residual. When enrichment is crisp (BOOL2) the value lattice may be
/// any complete lattice and the action is the trivial one.
class Action {
 public:
  Action(AlgebraPtr enrichment, LatticePtr values);

  const AlgebraPtr& enrichment() const { return enrichment_; }
  const LatticePtr& values() const { return values_; }
  bool crisp() const { return crisp_; }

  Grade copower(const Grade& hom, const Grade& value) const;
  Grade power(const Grade& hom, const Grade& value) const;
  /// Internal hom of the value lattice, a grade of the enrichment algebra.
  Grade hom(const Grade& from, const Grade& to) const;

 private:
  AlgebraPtr enrichment_;
  LatticePtr values_;
  bool crisp_ = false;
};

struct LawCheck {
  std::string law;
  bool passed = true;
  std::vector<std::string> witness;
};

struct LawReport {
  std::vector<LawCheck> checks;

  bool all_passed() const;
  const LawCheck* find(std::string_view law) const;
};

/// Lattice laws only (associativity, commutativity, absorption,
/// idempotence, order/meet agreement, bounds).
LawReport validate_lattice(const CompleteLattice& lattice, std::size_t samples = 1000,
                           std::uint64_t seed = 1);

/// Lattice laws plus monoid laws, residuation, monotonicity of tensor and
/// distributivity of tensor over join. Finite carriers are checked
/// exhaustively; the unit interval on `samples` random rational triples
/// plus all triples from {0, 1, unit}.
LawReport validate_residuated(const ResiduatedLattice& algebra, std::size_t samples = 1000,
                              std::uint64_t seed = 1);

}  // namespace roughcat
