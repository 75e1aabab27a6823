#pragma once

// Reference computations that do not go through the approximation engine.

#include "roughcat/approx.hpp"
#include "roughcat/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using roughcat::Grade;
using roughcat::Rational;

using Tuple = std::vector<std::string>;

/// Classical rough sets from equivalence classes of identical attribute
/// tuples: a class is in the upper approximation when some member says yes
/// and in the lower one when every member does.
struct Textbook {
  std::map<Tuple, bool> upper;
  std::map<Tuple, bool> lower;
  std::set<std::size_t> upper_objects;
  std::set<std::size_t> lower_objects;
};

inline Textbook textbook(const std::vector<Tuple>& rows, const std::vector<bool>& yes) {
  Textbook t;
  std::map<Tuple, std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < rows.size(); ++x) classes[rows[x]].push_back(x);
  for (const auto& [tuple, members] : classes) {
    bool any = false;
    bool all = true;
    for (auto x : members) {
      any = any || yes[x];
      all = all && yes[x];
    }
    t.upper[tuple] = any;
    t.lower[tuple] = all;
    for (auto x : members) {
      if (any) t.upper_objects.insert(x);
      if (all) t.lower_objects.insert(x);
    }
  }
  return t;
}

inline Tuple project(const Tuple& t, const std::vector<std::size_t>& keep) {
  Tuple out;
  for (auto k : keep) out.push_back(t[k]);
  return out;
}

/// Reducibility checked on the raw rows: the classical approximations of
/// every observed full tuple survive grouping by the kept columns.
inline bool textbook_reducible(const std::vector<Tuple>& rows, const std::vector<bool>& yes,
                               const std::vector<std::size_t>& keep) {
  const auto full = textbook(rows, yes);
  std::vector<Tuple> projected;
  for (const auto& r : rows) projected.push_back(project(r, keep));
  const auto coarse = textbook(projected, yes);
  for (const auto& [tuple, up] : full.upper) {
    const auto p = project(tuple, keep);
    if (coarse.upper.at(p) != up || coarse.lower.at(p) != full.lower.at(tuple)) return false;
  }
  return true;
}

/// Every inclusion-minimal reducible column subset, by exhaustive search.
inline std::vector<std::vector<std::size_t>> textbook_minimal_reducts(const std::vector<Tuple>& rows,
                                                                      const std::vector<bool>& yes,
                                                                      std::size_t columns) {
  std::vector<std::vector<std::size_t>> reducible;
  for (std::size_t mask = 0; mask < (std::size_t{1} << columns); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < columns; ++c) {
      if (mask & (std::size_t{1} << c)) keep.push_back(c);
    }
    if (textbook_reducible(rows, yes, keep)) reducible.push_back(keep);
  }
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& s : reducible) {
    bool has_smaller = false;
    for (const auto& t : reducible) {
      if (t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end())) has_smaller = true;
    }
    if (!has_smaller) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return minimal;
}

/// Fuzzy rough sets over [0,1] with multiplication, straight from the
/// formulas: sup of S(Rx,a)*mu(x), and inf of the Goguen implication.
/// `s` is the similarity on A (row-major, n x n).
inline std::vector<Rational> product_upper(const std::vector<Rational>& s, std::size_t n,
                                           const std::vector<std::size_t>& image,
                                           const std::vector<Rational>& mu) {
  std::vector<Rational> out(n, Rational(0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < image.size(); ++x) out[a] = std::max(out[a], Rational(s[image[x] * n + a] * mu[x]));
  }
  return out;
}

inline std::vector<Rational> product_lower(const std::vector<Rational>& s, std::size_t n,
                                           const std::vector<std::size_t>& image,
                                           const std::vector<Rational>& mu) {
  std::vector<Rational> out(n, Rational(1));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < image.size(); ++x) {
      const Rational& h = s[a * n + image[x]];
      const Rational imp = h <= mu[x] ? Rational(1) : Rational(mu[x] / h);
      out[a] = std::min(out[a], imp);
    }
  }
  return out;
}

/// Least fixpoint of h(i,k) >= h(i,j) * h(j,k) above the seed and the
/// unit diagonal, by naive iteration until nothing changes.
inline std::vector<Grade> naive_closure(const roughcat::ResiduatedLattice& l, std::size_t n,
                                        std::vector<Grade> h) {
  for (std::size_t i = 0; i < n; ++i) h[i * n + i] = l.join(h[i * n + i], l.unit());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          Grade next = l.join(h[i * n + k], l.tensor(h[i * n + j], h[j * n + k]));
          if (!(next == h[i * n + k])) {
            h[i * n + k] = next;
            changed = true;
          }
        }
      }
    }
  }
  return h;
}

/// Whether `g` on category `c` is a valid predicate, checked by hand: for
/// crisp homs a <= b forces g(a) <= g(b); for homs in the same algebra as
/// the values, hom(a,b) * g(a) <= g(b).
inline bool valid_predicate(const roughcat::LCategory& c, const roughcat::CompleteLattice& values,
                            const std::vector<Grade>& g) {
  const auto& alg = *c.algebra();
  const bool same = alg.same_as(values);
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      const Grade& h = c.hom(a, b);
      if (same) {
        if (!values.leq(alg.tensor(h, g[a]), g[b])) return false;
      } else if (h.as_bool() && !values.leq(g[a], g[b])) {
        return false;
      }
    }
  }
  return true;
}

/// Calls `visit` on every valid predicate over a finite carrier.
inline void for_each_predicate(const roughcat::LCategory& c, const roughcat::CompleteLattice& values,
                               const std::function<void(const std::vector<Grade>&)>& visit) {
  const auto carrier = *values.carrier();
  std::vector<std::size_t> digits(c.size(), 0);
  std::vector<Grade> g(c.size(), carrier[0]);
  while (true) {
    for (std::size_t i = 0; i < c.size(); ++i) g[i] = carrier[digits[i]];
    if (valid_predicate(c, values, g)) visit(g);
    std::size_t pos = 0;
    while (pos < digits.size() && ++digits[pos] == carrier.size()) digits[pos++] = 0;
    if (pos == digits.size()) break;
  }
}

/// Upper and lower approximations as extremal solutions: the meet of all
/// nu with mu <= nu.R, and the join of all nu with nu.R <= mu. Only
/// for finite value lattices and small A.
struct Extremal {
  std::vector<Grade> upper;
  std::vector<Grade> lower;
};

inline Extremal extremal_solutions(const roughcat::LFunctor& r, const roughcat::LPredicate& mu) {
  const auto& a = *r.target();
  const auto& values = *mu.values();
  Extremal e{std::vector<Grade>(a.size(), values.top()), std::vector<Grade>(a.size(), values.bottom())};
  for_each_predicate(a, values, [&](const std::vector<Grade>& nu) {
    bool above = true;
    bool below = true;
    for (std::size_t x = 0; x < r.source()->size(); ++x) {
      above = above && values.leq(mu[x], nu[r(x)]);
      below = below && values.leq(nu[r(x)], mu[x]);
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (above) e.upper[i] = values.meet(e.upper[i], nu[i]);
      if (below) e.lower[i] = values.join(e.lower[i], nu[i]);
    }
  });
  return e;
}

}  // namespace oracle
