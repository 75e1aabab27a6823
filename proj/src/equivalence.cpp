#include "roughcat/equivalence.hpp"

#include "roughcat/error.hpp"

namespace roughcat {

ValidationReport validate_equivalence(const LRelation& s) {
  ValidationReport report;
  const auto& c = *s.carrier();
  const auto& l = *s.algebra();
  const std::size_t n = s.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!l.leq(l.unit(), s(x, x))) {
      report.violations.push_back({"reflexivity", {c.label(x)}});
      break;
    }
  }
  bool transitive = true;
  for (std::size_t x = 0; x < n && transitive; ++x) {
    for (std::size_t y = 0; y < n && transitive; ++y) {
      for (std::size_t z = 0; z < n && transitive; ++z) {
        if (!l.leq(l.tensor(s(x, y), s(y, z)), s(x, z))) {
          report.violations.push_back({"transitivity", {c.label(x), c.label(y), c.label(z)}});
          transitive = false;
        }
      }
    }
  }
  bool symmetric = true;
  for (std::size_t x = 0; x < n && symmetric; ++x) {
    for (std::size_t y = x + 1; y < n && symmetric; ++y) {
      if (!(s(x, y) == s(y, x))) {
        report.violations.push_back({"symmetry", {c.label(x), c.label(y)}});
        symmetric = false;
      }
    }
  }
  return report;
}

Quotient quotient(const LRelation& s) {
  if (auto report = validate_equivalence(s); !report.ok()) {
    throw Error(ErrorKind::verification_failed,
                "quotient needs an equivalence relation; " + report.violations.front().rule +
                    " fails");
  }
  const auto& x = *s.carrier();
  const std::size_t n = s.size();
  const auto& l = *s.algebra();

  // curry(S)(y) is the column x |-> S(x, y)
  auto column = [&](std::size_t y) {
    std::vector<Grade> col;
    col.reserve(n);
    for (std::size_t i = 0; i < n; ++i) col.push_back(s(i, y));
    return col;
  };

  std::vector<std::vector<Grade>> classes;
  std::vector<std::size_t> reps;
  std::vector<std::size_t> map(n);
  for (std::size_t y = 0; y < n; ++y) {
    auto col = column(y);
    std::size_t k = 0;
    while (k < classes.size() && classes[k] != col) ++k;
    if (k == classes.size()) {
      classes.push_back(std::move(col));
      reps.push_back(y);
    }
    map[y] = k;
  }

  std::vector<ObjectKey> objects;
  for (std::size_t r : reps) objects.push_back({"[" + x.label(r) + "]"});
  const std::size_t m = classes.size();
  std::vector<Grade> hom;
  hom.reserve(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Grade acc = l.top();
      for (std::size_t i = 0; i < n; ++i) acc = l.meet(acc, l.residual(classes[a][i], classes[b][i]));
      hom.push_back(std::move(acc));
    }
  }
  auto cls = std::make_shared<LCategory>(s.algebra(), std::move(objects), std::move(hom));
  return Quotient{cls, LFunctor(s.carrier(), cls, std::move(map)), std::move(reps)};
}

LRelation induced_equivalence(const LRelation& s, const LFunctor& r) {
  if (r.target()->objects() != s.carrier()->objects()) {
    throw Error(ErrorKind::unknown_object, "object map does not land in the relation's carrier");
  }
  if (!r.target()->algebra()->same_as(*s.algebra())) {
    throw Error(ErrorKind::algebra_mismatch, "relation and map use different algebras");
  }
  const std::size_t n = r.source()->size();
  std::vector<Grade> values;
  values.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) values.push_back(s(r(x), r(y)));
  }
  return LRelation(r.source(), std::move(values));
}

LRelation kernel_relation(const LFunctor& r) {
  const auto& l = *r.source()->algebra();
  const std::size_t n = r.source()->size();
  std::vector<Grade> values;
  values.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) values.push_back(r(x) == r(y) ? l.unit() : l.bottom());
  }
  return LRelation(r.source(), std::move(values));
}

std::vector<Grade> covariant_representable(const LCategory& a, std::size_t obj) {
  std::vector<Grade> out;
  for (std::size_t b = 0; b < a.size(); ++b) out.push_back(a.hom(obj, b));
  return out;
}

std::vector<Grade> contravariant_representable(const LCategory& a, std::size_t obj) {
  std::vector<Grade> out;
  for (std::size_t b = 0; b < a.size(); ++b) out.push_back(a.hom(b, obj));
  return out;
}

Grade yoneda_hom(const LCategory& a, std::size_t from, std::size_t to) {
  if (from >= a.size() || to >= a.size()) throw Error(ErrorKind::unknown_object, "unknown object");
  const auto& l = *a.algebra();
  const auto hf = contravariant_representable(a, from);
  const auto ht = contravariant_representable(a, to);
  Grade acc = l.top();
  for (std::size_t b = 0; b < a.size(); ++b) acc = l.meet(acc, l.residual(hf[b], ht[b]));
  return acc;
}

Grade yoneda_hom(const LCategory& a, const ObjectKey& from, const ObjectKey& to) {
  return yoneda_hom(a, a.index_of(from), a.index_of(to));
}

LRelation similarity_from_metric(const std::vector<std::string>& points,
                                 const std::vector<std::int64_t>& d) {
  const std::size_t n = points.size();
  if (d.size() != n * n) throw Error(ErrorKind::shape_mismatch, "distance table is not square");
  auto at = [&](std::size_t i, std::size_t j) { return d[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    if (at(i, i) != 0) {
      throw Error(ErrorKind::invalid_structure, "distance from " + points[i] + " to itself is not 0");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (at(i, j) < 0) throw Error(ErrorKind::invalid_structure, "negative distance");
      if (at(i, j) != at(j, i)) {
        throw Error(ErrorKind::invalid_structure,
                    "distance is not symmetric between " + points[i] + " and " + points[j]);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (at(i, k) > at(i, j) + at(j, k)) {
          throw Error(ErrorKind::invalid_structure, "triangle inequality fails at " + points[i] +
                                                        ", " + points[j] + ", " + points[k]);
        }
      }
    }
  }
  std::vector<Grade> values;
  values.reserve(n * n);
  for (auto dist : d) {
    Integer den = boost::multiprecision::pow(Integer(2), static_cast<unsigned>(dist));
    values.push_back(Grade::rational(Rational(Integer(1), den)));
  }
  return LRelation(discrete(points, unit_product()), std::move(values));
}

CategoryPtr category_from_relation(const LRelation& s) {
  return std::make_shared<LCategory>(s.algebra(), s.carrier()->objects(), s.values());
}

}  // namespace roughcat
