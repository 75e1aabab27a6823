#include "roughcat/lattice.hpp"

#include "roughcat/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <unordered_map>

namespace roughcat {

std::optional<Rational> CompleteLattice::numeric(const Grade&) const { return std::nullopt; }

Grade CompleteLattice::meet_all(std::span<const Grade> family) const {
  Grade acc = top();
  for (const auto& g : family) acc = meet(acc, g);
  return acc;
}

Grade CompleteLattice::join_all(std::span<const Grade> family) const {
  Grade acc = bottom();
  for (const auto& g : family) acc = join(acc, g);
  return acc;
}

void CompleteLattice::require(const Grade& g) const {
  if (!contains(g)) throw Error(ErrorKind::invalid_grade, "grade is not in the carrier of " + name());
}

namespace {

// ---------------------------------------------------------------------------
// BOOL2

class Bool2 final : public ResiduatedLattice {
 public:
  AlgebraKind kind() const override { return AlgebraKind::bool2; }
  std::string name() const override { return "bool2"; }
  bool contains(const Grade& g) const override { return g.is_boolean(); }
  bool leq(const Grade& a, const Grade& b) const override { return !a.as_bool() || b.as_bool(); }
  Grade meet(const Grade& a, const Grade& b) const override {
    return Grade::boolean(a.as_bool() && b.as_bool());
  }
  Grade join(const Grade& a, const Grade& b) const override {
    return Grade::boolean(a.as_bool() || b.as_bool());
  }
  Grade top() const override { return Grade::boolean(true); }
  Grade bottom() const override { return Grade::boolean(false); }
  std::optional<std::vector<Grade>> carrier() const override {
    return std::vector<Grade>{bottom(), top()};
  }
  std::string format(const Grade& g) const override { return g.as_bool() ? "1" : "0"; }
  Grade parse(std::string_view text) const override {
    if (text == "1" || text == "top" || text == "true") return top();
    if (text == "0" || text == "bottom" || text == "false") return bottom();
    throw Error(ErrorKind::invalid_grade, "not a bool2 grade: '" + std::string(text) + "'");
  }
  std::optional<Rational> numeric(const Grade& g) const override {
    return Rational(g.as_bool() ? 1 : 0);
  }
  bool same_as(const CompleteLattice& other) const override {
    return other.kind() == AlgebraKind::bool2;
  }
  Grade unit() const override { return top(); }
  Grade tensor(const Grade& a, const Grade& b) const override { return meet(a, b); }
  Grade residual(const Grade& p, const Grade& r) const override {
    return Grade::boolean(!p.as_bool() || r.as_bool());
  }
};

// ---------------------------------------------------------------------------
// [0,1]

class UnitInterval final : public ResiduatedLattice {
 public:
  explicit UnitInterval(bool product) : product_(product) {}

  AlgebraKind kind() const override {
    return product_ ? AlgebraKind::unit_product : AlgebraKind::unit_godel;
  }
  std::string name() const override { return product_ ? "unit_product" : "unit_godel"; }
  bool contains(const Grade& g) const override {
    return g.is_rational() && g.as_rational() >= 0 && g.as_rational() <= 1;
  }
  bool leq(const Grade& a, const Grade& b) const override {
    return a.as_rational() <= b.as_rational();
  }
  Grade meet(const Grade& a, const Grade& b) const override { return leq(a, b) ? a : b; }
  Grade join(const Grade& a, const Grade& b) const override { return leq(a, b) ? b : a; }
  Grade top() const override { return Grade::rational(Rational(1)); }
  Grade bottom() const override { return Grade::rational(Rational(0)); }
  std::optional<std::vector<Grade>> carrier() const override { return std::nullopt; }
  std::string format(const Grade& g) const override { return format_rational(g.as_rational()); }
  Grade parse(std::string_view text) const override {
    Grade g = Grade::rational(parse_rational(text));
    if (!contains(g)) {
      throw Error(ErrorKind::invalid_grade, "grade outside [0,1]: '" + std::string(text) + "'");
    }
    return g;
  }
  std::optional<Rational> numeric(const Grade& g) const override { return g.as_rational(); }
  bool same_as(const CompleteLattice& other) const override { return other.kind() == kind(); }

  Grade unit() const override { return top(); }
  Grade tensor(const Grade& a, const Grade& b) const override {
    if (product_) return Grade::rational(a.as_rational() * b.as_rational());
    return meet(a, b);
  }
  Grade residual(const Grade& p, const Grade& r) const override {
    const Rational& pv = p.as_rational();
    const Rational& rv = r.as_rational();
    if (pv <= rv) return top();
    if (!product_) return r;
    // pv > rv >= 0, so pv > 0
    return Grade::rational(rv / pv);
  }

 private:
  bool product_;
};

// ---------------------------------------------------------------------------
// Finite tables

using IndexTable = std::vector<std::vector<std::uint32_t>>;

struct FiniteCore {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> lookup;
  IndexTable meet;
  IndexTable join;
  std::uint32_t top = 0;
  std::uint32_t bottom = 0;

  std::size_t size() const { return names.size(); }

  std::uint32_t index_of(const std::string& name) const {
    auto it = lookup.find(name);
    if (it == lookup.end()) {
      throw Error(ErrorKind::invalid_structure, "unknown carrier element '" + name + "'");
    }
    return it->second;
  }

  IndexTable convert(const SymbolTable& table, std::string_view what) const {
    if (table.size() != size()) {
      throw Error(ErrorKind::invalid_structure, std::string(what) + " table has wrong row count");
    }
    IndexTable out(size(), std::vector<std::uint32_t>(size()));
    for (std::size_t i = 0; i < size(); ++i) {
      if (table[i].size() != size()) {
        throw Error(ErrorKind::invalid_structure, std::string(what) + " table row is not square");
      }
      for (std::size_t j = 0; j < size(); ++j) out[i][j] = index_of(table[i][j]);
    }
    return out;
  }

  bool leq(std::uint32_t a, std::uint32_t b) const { return meet[a][b] == a; }

  FiniteCore(std::vector<std::string> carrier, const SymbolTable& meet_table,
             const SymbolTable& join_table, std::size_t max_size)
      : names(std::move(carrier)) {
    if (names.empty()) throw Error(ErrorKind::invalid_structure, "empty carrier");
    if (names.size() > max_size) {
      throw Error(ErrorKind::invalid_structure,
                  "carrier has " + std::to_string(names.size()) + " elements, cap is " +
                      std::to_string(max_size));
    }
    for (std::uint32_t i = 0; i < names.size(); ++i) {
      if (!lookup.emplace(names[i], i).second) {
        throw Error(ErrorKind::invalid_structure, "duplicate carrier element '" + names[i] + "'");
      }
    }
    meet = convert(meet_table, "meet");
    join = convert(join_table, "join");
    auto find_extreme = [&](bool greatest) -> std::uint32_t {
      for (std::uint32_t c = 0; c < size(); ++c) {
        bool ok = true;
        for (std::uint32_t o = 0; o < size() && ok; ++o) ok = greatest ? leq(o, c) : leq(c, o);
        if (ok) return c;
      }
      throw Error(ErrorKind::invalid_structure,
                  greatest ? "carrier has no greatest element" : "carrier has no least element");
    };
    top = find_extreme(true);
    bottom = find_extreme(false);
  }

  bool contains(const Grade& g) const { return g.is_symbol() && g.as_symbol() < size(); }

  Grade parse(std::string_view text) const {
    auto it = lookup.find(std::string(text));
    if (it == lookup.end()) {
      throw Error(ErrorKind::invalid_grade, "not a carrier element: '" + std::string(text) + "'");
    }
    return Grade::symbol(it->second);
  }

  std::vector<Grade> all() const {
    std::vector<Grade> out;
    for (std::uint32_t i = 0; i < size(); ++i) out.push_back(Grade::symbol(i));
    return out;
  }

  std::optional<Rational> numeric(const Grade& g) const {
    const auto& n = names[g.as_symbol()];
    if (looks_rational(n)) return parse_rational(n);
    return std::nullopt;
  }

  bool same_tables(const FiniteCore& o) const {
    return names == o.names && meet == o.meet && join == o.join;
  }
};

class FiniteLatticeImpl final : public CompleteLattice {
 public:
  explicit FiniteLatticeImpl(FiniteCore core) : core_(std::move(core)) {}

  AlgebraKind kind() const override { return AlgebraKind::finite_lattice; }
  std::string name() const override { return "finite_lattice"; }
  bool contains(const Grade& g) const override { return core_.contains(g); }
  bool leq(const Grade& a, const Grade& b) const override {
    return core_.leq(a.as_symbol(), b.as_symbol());
  }
  Grade meet(const Grade& a, const Grade& b) const override {
    return Grade::symbol(core_.meet[a.as_symbol()][b.as_symbol()]);
  }
  Grade join(const Grade& a, const Grade& b) const override {
    return Grade::symbol(core_.join[a.as_symbol()][b.as_symbol()]);
  }
  Grade top() const override { return Grade::symbol(core_.top); }
  Grade bottom() const override { return Grade::symbol(core_.bottom); }
  std::optional<std::vector<Grade>> carrier() const override { return core_.all(); }
  std::string format(const Grade& g) const override { return core_.names[g.as_symbol()]; }
  Grade parse(std::string_view text) const override { return core_.parse(text); }
  std::optional<Rational> numeric(const Grade& g) const override { return core_.numeric(g); }
  bool same_as(const CompleteLattice& other) const override {
    auto* o = dynamic_cast<const FiniteLatticeImpl*>(&other);
    return o != nullptr && core_.same_tables(o->core_);
  }

 private:
  FiniteCore core_;
};

class FiniteTableAlgebra final : public ResiduatedLattice {
 public:
  FiniteTableAlgebra(FiniteCore core, const FiniteTableSpec& spec) : core_(std::move(core)) {
    tensor_ = core_.convert(spec.tensor, "tensor");
    residual_ = core_.convert(spec.residual, "residual");
    unit_ = core_.index_of(spec.unit);
  }

  AlgebraKind kind() const override { return AlgebraKind::finite_table; }
  std::string name() const override { return "finite_table"; }
  bool contains(const Grade& g) const override { return core_.contains(g); }
  bool leq(const Grade& a, const Grade& b) const override {
    return core_.leq(a.as_symbol(), b.as_symbol());
  }
  Grade meet(const Grade& a, const Grade& b) const override {
    return Grade::symbol(core_.meet[a.as_symbol()][b.as_symbol()]);
  }
  Grade join(const Grade& a, const Grade& b) const override {
    return Grade::symbol(core_.join[a.as_symbol()][b.as_symbol()]);
  }
  Grade top() const override { return Grade::symbol(core_.top); }
  Grade bottom() const override { return Grade::symbol(core_.bottom); }
  std::optional<std::vector<Grade>> carrier() const override { return core_.all(); }
  std::string format(const Grade& g) const override { return core_.names[g.as_symbol()]; }
  Grade parse(std::string_view text) const override { return core_.parse(text); }
  std::optional<Rational> numeric(const Grade& g) const override { return core_.numeric(g); }
  bool same_as(const CompleteLattice& other) const override {
    auto* o = dynamic_cast<const FiniteTableAlgebra*>(&other);
    return o != nullptr && core_.same_tables(o->core_) && tensor_ == o->tensor_ &&
           residual_ == o->residual_ && unit_ == o->unit_;
  }
  Grade unit() const override { return Grade::symbol(unit_); }
  Grade tensor(const Grade& a, const Grade& b) const override {
    return Grade::symbol(tensor_[a.as_symbol()][b.as_symbol()]);
  }
  Grade residual(const Grade& p, const Grade& r) const override {
    return Grade::symbol(residual_[p.as_symbol()][r.as_symbol()]);
  }

 private:
  FiniteCore core_;
  IndexTable tensor_;
  IndexTable residual_;
  std::uint32_t unit_ = 0;
};

SymbolTable tabulate(const std::vector<std::string>& names,
                     const std::function<std::size_t(std::size_t, std::size_t)>& op) {
  SymbolTable t(names.size(), std::vector<std::string>(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) t[i][j] = names[op(i, j)];
  }
  return t;
}

FiniteTableSpec chain_spec(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& tensor) {
  if (n < 2) throw Error(ErrorKind::invalid_structure, "a chain needs at least two elements");
  FiniteTableSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    spec.carrier.push_back(format_rational(Rational(static_cast<long>(i), static_cast<long>(n - 1))));
  }
  spec.meet = tabulate(spec.carrier, [](std::size_t a, std::size_t b) { return std::min(a, b); });
  spec.join = tabulate(spec.carrier, [](std::size_t a, std::size_t b) { return std::max(a, b); });
  spec.tensor = tabulate(spec.carrier, tensor);
  // largest q with tensor(p, q) <= r
  spec.residual = tabulate(spec.carrier, [&](std::size_t p, std::size_t r) {
    std::size_t best = 0;
    for (std::size_t q = 0; q < n; ++q) {
      if (tensor(p, q) <= r) best = q;
    }
    return best;
  });
  spec.unit = spec.carrier.back();
  spec.max_size = std::max(default_max_carrier, n);
  return spec;
}

// ---------------------------------------------------------------------------
// law checking

class LawRecorder {
 public:
  LawRecorder(const CompleteLattice& l, LawReport& report) : l_(l), report_(report) {}

  void check(const std::string& law, bool ok, std::initializer_list<const Grade*> witness) {
    LawCheck* entry = nullptr;
    for (auto& c : report_.checks) {
      if (c.law == law) entry = &c;
    }
    if (entry == nullptr) {
      report_.checks.push_back(LawCheck{law, true, {}});
      entry = &report_.checks.back();
    }
    if (!ok && entry->passed) {
      entry->passed = false;
      for (const Grade* g : witness) entry->witness.push_back(format_any(*g));
    }
  }

 private:
  std::string format_any(const Grade& g) const {
    return l_.contains(g) ? l_.format(g) : std::string("<outside carrier>");
  }

  const CompleteLattice& l_;
  LawReport& report_;
};

std::vector<std::array<Grade, 3>> sample_triples(const CompleteLattice& l,
                                                 const std::vector<Grade>& boundary,
                                                 std::size_t samples, std::uint64_t seed) {
  std::vector<std::array<Grade, 3>> out;
  if (auto carrier = l.carrier()) {
    for (const auto& a : *carrier)
      for (const auto& b : *carrier)
        for (const auto& c : *carrier) out.push_back({a, b, c});
    return out;
  }
  for (const auto& a : boundary)
    for (const auto& b : boundary)
      for (const auto& c : boundary) out.push_back({a, b, c});
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_dist(1, 12);
  auto draw = [&] {
    int den = den_dist(rng);
    std::uniform_int_distribution<int> num_dist(0, den);
    return Grade::rational(Rational(num_dist(rng), den));
  };
  for (std::size_t i = 0; i < samples; ++i) out.push_back({draw(), draw(), draw()});
  return out;
}

void check_lattice_laws(const CompleteLattice& l, const std::vector<std::array<Grade, 3>>& triples,
                        LawRecorder& rec) {
  const Grade top = l.top();
  const Grade bottom = l.bottom();
  rec.check("empty join is bottom", l.join_all({}) == bottom, {});
  rec.check("empty meet is top", l.meet_all({}) == top, {});
  for (const auto& [a, b, c] : triples) {
    rec.check("meet closed", l.contains(l.meet(a, b)), {&a, &b});
    rec.check("join closed", l.contains(l.join(a, b)), {&a, &b});
    rec.check("meet associative", l.meet(l.meet(a, b), c) == l.meet(a, l.meet(b, c)), {&a, &b, &c});
    rec.check("join associative", l.join(l.join(a, b), c) == l.join(a, l.join(b, c)), {&a, &b, &c});
    rec.check("meet commutative", l.meet(a, b) == l.meet(b, a), {&a, &b});
    rec.check("join commutative", l.join(a, b) == l.join(b, a), {&a, &b});
    rec.check("absorption", l.meet(a, l.join(a, b)) == a && l.join(a, l.meet(a, b)) == a, {&a, &b});
    rec.check("idempotence", l.meet(a, a) == a && l.join(a, a) == a, {&a});
    rec.check("order agrees with meet", l.leq(a, b) == (l.meet(a, b) == a), {&a, &b});
    rec.check("order agrees with join", l.leq(a, b) == (l.join(a, b) == b), {&a, &b});
    rec.check("bounds", l.leq(bottom, a) && l.leq(a, top), {&a});
  }
}

}  // namespace

// ---------------------------------------------------------------------------

AlgebraPtr bool2() {
  static const AlgebraPtr instance = std::make_shared<Bool2>();
  return instance;
}

AlgebraPtr unit_godel() {
  static const AlgebraPtr instance = std::make_shared<UnitInterval>(false);
  return instance;
}

AlgebraPtr unit_product() {
  static const AlgebraPtr instance = std::make_shared<UnitInterval>(true);
  return instance;
}

AlgebraPtr finite_table(const FiniteTableSpec& spec) {
  FiniteCore core(spec.carrier, spec.meet, spec.join, spec.max_size);
  return std::make_shared<FiniteTableAlgebra>(std::move(core), spec);
}

LatticePtr finite_lattice(std::vector<std::string> carrier, const SymbolTable& meet,
                          const SymbolTable& join, std::size_t max_size) {
  return std::make_shared<FiniteLatticeImpl>(FiniteCore(std::move(carrier), meet, join, max_size));
}

LatticePtr flat_lattice(const std::vector<std::string>& values) {
  std::vector<std::string> names;
  names.push_back("bottom");
  names.insert(names.end(), values.begin(), values.end());
  names.push_back("top");
  const std::size_t n = names.size();
  const std::size_t top = n - 1;
  auto meet = tabulate(names, [&](std::size_t a, std::size_t b) -> std::size_t {
    if (a == b || b == top) return a;
    if (a == top) return b;
    return 0;
  });
  auto join = tabulate(names, [&](std::size_t a, std::size_t b) -> std::size_t {
    if (a == b || b == 0) return a;
    if (a == 0) return b;
    return top;
  });
  return finite_lattice(std::move(names), meet, join, std::max(default_max_carrier, n));
}

AlgebraPtr goedel_chain(std::size_t n) {
  return finite_table(chain_spec(n, [](std::size_t a, std::size_t b) { return std::min(a, b); }));
}

AlgebraPtr lukasiewicz_chain(std::size_t n) {
  return finite_table(chain_spec(n, [n](std::size_t a, std::size_t b) -> std::size_t {
    return a + b >= n - 1 ? a + b - (n - 1) : 0;
  }));
}

// ---------------------------------------------------------------------------

Action::Action(AlgebraPtr enrichment, LatticePtr values)
    : enrichment_(std::move(enrichment)), values_(std::move(values)) {
  if (enrichment_->same_as(*values_)) {
    crisp_ = false;
  } else if (enrichment_->kind() == AlgebraKind::bool2) {
    crisp_ = true;
  } else {
    throw Error(ErrorKind::algebra_mismatch, "values in " + values_->name() +
                                                 " cannot be weighted by an " +
                                                 enrichment_->name() + "-enriched hom");
  }
}

Grade Action::copower(const Grade& hom, const Grade& value) const {
  if (!crisp_) return enrichment_->tensor(hom, value);
  return hom.as_bool() ? value : values_->bottom();
}

Grade Action::power(const Grade& hom, const Grade& value) const {
  if (!crisp_) return enrichment_->residual(hom, value);
  return hom.as_bool() ? value : values_->top();
}

Grade Action::hom(const Grade& from, const Grade& to) const {
  if (!crisp_) return enrichment_->residual(from, to);
  return Grade::boolean(values_->leq(from, to));
}

// ---------------------------------------------------------------------------

bool LawReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed; });
}

const LawCheck* LawReport::find(std::string_view law) const {
  for (const auto& c : checks) {
    if (c.law == law) return &c;
  }
  return nullptr;
}

LawReport validate_lattice(const CompleteLattice& lattice, std::size_t samples, std::uint64_t seed) {
  LawReport report;
  LawRecorder rec(lattice, report);
  auto triples = sample_triples(lattice, {lattice.bottom(), lattice.top()}, samples, seed);
  check_lattice_laws(lattice, triples, rec);
  return report;
}

LawReport validate_residuated(const ResiduatedLattice& l, std::size_t samples, std::uint64_t seed) {
  LawReport report;
  LawRecorder rec(l, report);
  std::vector<Grade> boundary{l.bottom(), l.top()};
  if (!(l.unit() == l.top())) boundary.push_back(l.unit());
  auto triples = sample_triples(l, boundary, samples, seed);
  check_lattice_laws(l, triples, rec);

  const Grade unit = l.unit();
  for (const auto& [a, b, c] : triples) {
    rec.check("tensor closed", l.contains(l.tensor(a, b)), {&a, &b});
    rec.check("residual closed", l.contains(l.residual(a, b)), {&a, &b});
    rec.check("tensor associative", l.tensor(l.tensor(a, b), c) == l.tensor(a, l.tensor(b, c)),
              {&a, &b, &c});
    rec.check("tensor commutative", l.tensor(a, b) == l.tensor(b, a), {&a, &b});
    rec.check("unit is identity", l.tensor(unit, a) == a && l.tensor(a, unit) == a, {&a});
    // a = p, b = q, c = r
    rec.check("residuation", l.leq(l.tensor(a, b), c) == l.leq(b, l.residual(a, c)), {&a, &b, &c});
    rec.check("tensor monotone", !l.leq(a, b) || l.leq(l.tensor(a, c), l.tensor(b, c)), {&a, &b, &c});
    rec.check("tensor distributes over join",
              l.tensor(a, l.join(b, c)) == l.join(l.tensor(a, b), l.tensor(a, c)), {&a, &b, &c});
  }
  return report;
}

}  // namespace roughcat
