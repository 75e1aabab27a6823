#include "roughcat/category.hpp"

#include "roughcat/error.hpp"

#include <algorithm>

namespace roughcat {

std::string format_key(const ObjectKey& key) {
  if (key.size() == 1) return key.front();
  std::string out = "(";
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i > 0) out += ",";
    out += key[i];
  }
  return out + ")";
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

// ---------------------------------------------------------------------------
// LCategory

LCategory::LCategory(AlgebraPtr algebra, std::vector<ObjectKey> objects, std::vector<Grade> hom)
    : algebra_(std::move(algebra)), objects_(std::move(objects)), hom_(std::move(hom)) {
  if (hom_.size() != objects_.size() * objects_.size()) {
    throw Error(ErrorKind::shape_mismatch, "hom table size does not match object count");
  }
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (!index_.emplace(objects_[i], i).second) {
      throw Error(ErrorKind::invalid_structure, "duplicate object " + format_key(objects_[i]));
    }
  }
  for (const auto& g : hom_) algebra_->require(g);
}

std::optional<std::size_t> LCategory::find(const ObjectKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t LCategory::index_of(const ObjectKey& key) const {
  if (auto i = find(key)) return *i;
  throw Error(ErrorKind::unknown_object, "unknown object " + format_key(key));
}

bool LCategory::is_crisp() const {
  const Grade unit = algebra_->unit();
  const Grade bottom = algebra_->bottom();
  return std::all_of(hom_.begin(), hom_.end(),
                     [&](const Grade& g) { return g == unit || g == bottom; });
}

bool operator==(const LCategory& a, const LCategory& b) {
  return a.algebra_->same_as(*b.algebra_) && a.objects_ == b.objects_ && a.hom_ == b.hom_;
}

ValidationReport validate_category(const LCategory& c) {
  ValidationReport report;
  const auto& l = *c.algebra();
  const Grade unit = l.unit();
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!l.leq(unit, c.hom(x, x))) report.violations.push_back({"identity", {c.label(x)}});
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!l.leq(l.tensor(c.hom(y, z), c.hom(x, y)), c.hom(x, z))) {
          report.violations.push_back({"composition", {c.label(x), c.label(y), c.label(z)}});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// constructions

CategoryPtr discrete(const std::vector<ObjectKey>& objects, AlgebraPtr algebra) {
  const std::size_t n = objects.size();
  std::vector<Grade> hom(n * n, algebra->bottom());
  for (std::size_t i = 0; i < n; ++i) hom[i * n + i] = algebra->unit();
  return std::make_shared<LCategory>(std::move(algebra), objects, std::move(hom));
}

CategoryPtr discrete(const std::vector<std::string>& objects, AlgebraPtr algebra) {
  std::vector<ObjectKey> keys;
  keys.reserve(objects.size());
  for (const auto& o : objects) keys.push_back({o});
  return discrete(keys, std::move(algebra));
}

CategoryPtr from_preorder(const Preorder& order, AlgebraPtr algebra) {
  const std::size_t n = order.size();
  std::vector<ObjectKey> keys;
  for (const auto& o : order.objects()) keys.push_back({o});
  std::vector<Grade> hom;
  hom.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom.push_back(order.leq(i, j) ? algebra->unit() : algebra->bottom());
    }
  }
  return std::make_shared<LCategory>(std::move(algebra), std::move(keys), std::move(hom));
}

CategoryPtr one_point(AlgebraPtr algebra) {
  std::vector<Grade> hom{algebra->unit()};
  return std::make_shared<LCategory>(std::move(algebra), std::vector<ObjectKey>{ObjectKey{}},
                                     std::move(hom));
}

namespace {

void require_same_algebra(const LCategory& x, const LCategory& y) {
  if (!x.algebra()->same_as(*y.algebra())) {
    throw Error(ErrorKind::algebra_mismatch, "categories are enriched over different algebras");
  }
}

template <typename Combine>
CategoryPtr pair_category(const LCategory& x, const LCategory& y, Combine combine) {
  require_same_algebra(x, y);
  std::vector<ObjectKey> objects;
  for (const auto& a : x.objects()) {
    for (const auto& b : y.objects()) {
      ObjectKey k = a;
      k.insert(k.end(), b.begin(), b.end());
      objects.push_back(std::move(k));
    }
  }
  const std::size_t n = objects.size();
  const std::size_t ny = y.size();
  std::vector<Grade> hom;
  hom.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      hom.push_back(combine(x.hom(i / ny, j / ny), y.hom(i % ny, j % ny)));
    }
  }
  return std::make_shared<LCategory>(x.algebra(), std::move(objects), std::move(hom));
}

}  // namespace

CategoryPtr product(const LCategory& x, const LCategory& y) {
  const auto& l = *x.algebra();
  return pair_category(x, y, [&](const Grade& p, const Grade& q) { return l.meet(p, q); });
}

CategoryPtr tensor_product(const LCategory& x, const LCategory& y) {
  const auto& l = *x.algebra();
  return pair_category(x, y, [&](const Grade& p, const Grade& q) { return l.tensor(p, q); });
}

CategoryPtr product_all(std::span<const CategoryPtr> factors, AlgebraPtr algebra) {
  CategoryPtr acc = one_point(std::move(algebra));
  for (const auto& f : factors) acc = product(*acc, *f);
  return acc;
}

CategoryPtr opposite(const LCategory& x) {
  const std::size_t n = x.size();
  std::vector<Grade> hom;
  hom.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) hom.push_back(x.hom(j, i));
  }
  return std::make_shared<LCategory>(x.algebra(), x.objects(), std::move(hom));
}

CategoryPtr enriched_closure(AlgebraPtr algebra, std::vector<ObjectKey> objects,
                             std::vector<Grade> seed) {
  const std::size_t n = objects.size();
  if (seed.size() != n * n) throw Error(ErrorKind::shape_mismatch, "seed table size mismatch");
  const auto& l = *algebra;
  for (const auto& g : seed) l.require(g);
  for (std::size_t i = 0; i < n; ++i) seed[i * n + i] = l.join(seed[i * n + i], l.unit());
  // Repeated Floyd-Warshall sweeps; homs only grow, so this terminates on
  // finite carriers and after two sweeps on integral unit-interval algebras.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        const Grade& xy = seed[x * n + y];
        if (xy == l.bottom()) continue;
        for (std::size_t z = 0; z < n; ++z) {
          Grade via = l.tensor(seed[y * n + z], xy);
          Grade& xz = seed[x * n + z];
          if (!l.leq(via, xz)) {
            xz = l.join(xz, via);
            changed = true;
          }
        }
      }
    }
  }
  return std::make_shared<LCategory>(std::move(algebra), std::move(objects), std::move(seed));
}

CategoryPtr meet_categories(const LCategory& x, const LCategory& y) {
  require_same_algebra(x, y);
  if (x.objects() != y.objects()) {
    throw Error(ErrorKind::shape_mismatch, "meet of categories needs identical objects");
  }
  const auto& l = *x.algebra();
  std::vector<Grade> hom;
  hom.reserve(x.hom_table().size());
  for (std::size_t i = 0; i < x.hom_table().size(); ++i) {
    hom.push_back(l.meet(x.hom_table()[i], y.hom_table()[i]));
  }
  return std::make_shared<LCategory>(x.algebra(), x.objects(), std::move(hom));
}

CategoryPtr underlying_preorder(const LCategory& x) {
  const auto& l = *x.algebra();
  std::vector<Grade> hom;
  hom.reserve(x.hom_table().size());
  for (const auto& g : x.hom_table()) hom.push_back(Grade::boolean(l.leq(l.unit(), g)));
  return std::make_shared<LCategory>(bool2(), x.objects(), std::move(hom));
}

CategoryPtr full_subcategory(const LCategory& x, std::span<const std::size_t> keep) {
  std::vector<ObjectKey> objects;
  std::vector<Grade> hom;
  for (std::size_t i : keep) objects.push_back(x.object(i));
  for (std::size_t i : keep) {
    for (std::size_t j : keep) hom.push_back(x.hom(i, j));
  }
  return std::make_shared<LCategory>(x.algebra(), std::move(objects), std::move(hom));
}

// ---------------------------------------------------------------------------
// LFunctor

LFunctor::LFunctor(CategoryPtr source, CategoryPtr target, std::vector<std::size_t> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  require_same_algebra(*source_, *target_);
  if (map_.size() != source_->size()) {
    throw Error(ErrorKind::shape_mismatch, "object map is not total on the source");
  }
  for (std::size_t t : map_) {
    if (t >= target_->size()) throw Error(ErrorKind::unknown_object, "object map leaves the target");
  }
}

LFunctor LFunctor::identity(CategoryPtr c) {
  std::vector<std::size_t> map(c->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return LFunctor(c, c, std::move(map));
}

LFunctor compose(const LFunctor& second, const LFunctor& first) {
  if (first.target() != second.source() && !(*first.target() == *second.source())) {
    throw Error(ErrorKind::shape_mismatch, "cannot compose: target and source differ");
  }
  std::vector<std::size_t> map;
  map.reserve(first.map().size());
  for (std::size_t x : first.map()) map.push_back(second(x));
  return LFunctor(first.source(), second.target(), std::move(map));
}

ValidationReport validate_functor(const LFunctor& f) {
  ValidationReport report;
  const auto& src = *f.source();
  const auto& tgt = *f.target();
  const auto& l = *src.algebra();
  for (std::size_t x = 0; x < src.size(); ++x) {
    for (std::size_t y = 0; y < src.size(); ++y) {
      if (!l.leq(src.hom(x, y), tgt.hom(f(x), f(y)))) {
        report.violations.push_back({"functoriality", {src.label(x), src.label(y)}});
      }
    }
  }
  return report;
}

bool nat_leq(const LFunctor& f, const LFunctor& g) {
  if (f.source() != g.source() && !(*f.source() == *g.source())) {
    throw Error(ErrorKind::shape_mismatch, "functors have different sources");
  }
  const auto& tgt = *f.target();
  const auto& l = *tgt.algebra();
  for (std::size_t x = 0; x < f.map().size(); ++x) {
    if (!l.leq(l.unit(), tgt.hom(f(x), g(x)))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LPredicate

LPredicate::LPredicate(CategoryPtr category, LatticePtr values, std::vector<Grade> grades)
    : category_(std::move(category)), values_(std::move(values)), grades_(std::move(grades)) {
  if (grades_.size() != category_->size()) {
    throw Error(ErrorKind::shape_mismatch, "predicate is not total on its category");
  }
  for (const auto& g : grades_) values_->require(g);
  Action(category_->algebra(), values_);  // throws if the algebra cannot act
}

LPredicate::LPredicate(CategoryPtr category, std::vector<Grade> grades)
    : LPredicate(category, category->algebra(), std::move(grades)) {}

LPredicate LPredicate::constant(CategoryPtr category, LatticePtr values, const Grade& g) {
  std::vector<Grade> grades(category->size(), g);
  return LPredicate(std::move(category), std::move(values), std::move(grades));
}

bool operator==(const LPredicate& a, const LPredicate& b) {
  return a.values_->same_as(*b.values_) && a.grades_ == b.grades_ &&
         (a.category_ == b.category_ || *a.category_ == *b.category_);
}

ValidationReport validate_predicate(const LPredicate& p) {
  ValidationReport report;
  const auto& c = *p.category();
  const auto& v = *p.values();
  const Action act = p.action();
  for (std::size_t x = 0; x < c.size(); ++x) {
    for (std::size_t y = 0; y < c.size(); ++y) {
      if (!v.leq(act.copower(c.hom(x, y), p[x]), p[y])) {
        report.violations.push_back({"monotonicity", {c.label(x), c.label(y)}});
      }
    }
  }
  return report;
}

void require_same_domain(const LPredicate& f, const LPredicate& g) {
  if (f.category() != g.category() && !(*f.category() == *g.category())) {
    throw Error(ErrorKind::shape_mismatch, "predicates live on different categories");
  }
  if (!f.values()->same_as(*g.values())) {
    throw Error(ErrorKind::algebra_mismatch, "predicates take values in different lattices");
  }
}

Grade hom_predicates(const LPredicate& f, const LPredicate& g) {
  require_same_domain(f, g);
  const Action act = f.action();
  const auto& l = *act.enrichment();
  Grade acc = l.top();
  for (std::size_t x = 0; x < f.size(); ++x) acc = l.meet(acc, act.hom(f[x], g[x]));
  return acc;
}

bool predicate_leq(const LPredicate& f, const LPredicate& g) {
  require_same_domain(f, g);
  const auto& v = *f.values();
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!v.leq(f[x], g[x])) return false;
  }
  return true;
}

LPredicate pointwise_meet(const LPredicate& f, const LPredicate& g) {
  require_same_domain(f, g);
  std::vector<Grade> out;
  for (std::size_t x = 0; x < f.size(); ++x) out.push_back(f.values()->meet(f[x], g[x]));
  return LPredicate(f.category(), f.values(), std::move(out));
}

LPredicate pointwise_join(const LPredicate& f, const LPredicate& g) {
  require_same_domain(f, g);
  std::vector<Grade> out;
  for (std::size_t x = 0; x < f.size(); ++x) out.push_back(f.values()->join(f[x], g[x]));
  return LPredicate(f.category(), f.values(), std::move(out));
}

// ---------------------------------------------------------------------------
// LRelation

LRelation::LRelation(CategoryPtr carrier, std::vector<Grade> values)
    : carrier_(std::move(carrier)), values_(std::move(values)) {
  if (values_.size() != carrier_->size() * carrier_->size()) {
    throw Error(ErrorKind::shape_mismatch, "relation table size does not match carrier");
  }
  for (const auto& g : values_) carrier_->algebra()->require(g);
}

ValidationReport validate_relation(const LRelation& s) {
  ValidationReport report;
  const auto& c = *s.carrier();
  const auto& l = *c.algebra();
  const std::size_t n = c.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x2 = 0; x2 < n; ++x2)
        for (std::size_t y2 = 0; y2 < n; ++y2) {
          if (!l.leq(l.tensor(c.hom(x, x2), c.hom(y, y2)), l.residual(s(x, y), s(x2, y2)))) {
            report.violations.push_back(
                {"relation functoriality", {c.label(x), c.label(y), c.label(x2), c.label(y2)}});
          }
        }
  return report;
}

}  // namespace roughcat
