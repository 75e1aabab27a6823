#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace roughcat {

/// Finite preordered set. The relation is stored closed, one bit row per
/// object: row(x)[y] set iff x <= y.
class Preorder {
 public:
  Preorder() = default;

  /// Least reflexive transitive relation containing `edges` (pairs x <= y).
  /// Throws Error(unknown_object) on undeclared endpoints.
  static Preorder closure(std::vector<std::string> objects,
                          const std::vector<std::pair<std::string, std::string>>& edges);

  static Preorder discrete(std::vector<std::string> objects);

  const std::vector<std::string>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }
  std::size_t index_of(const std::string& object) const;

  bool leq(std::size_t a, std::size_t b) const { return rows_[a][b]; }
  bool leq(const std::string& a, const std::string& b) const { return leq(index_of(a), index_of(b)); }

  /// {b | b <= a}, as object names in declaration order.
  std::vector<std::string> down_set(const std::string& a) const;
  /// {b | a <= b}
  std::vector<std::string> up_set(const std::string& a) const;

  /// All related pairs, for feeding back into closure().
  std::vector<std::pair<std::string, std::string>> pairs() const;

  friend bool operator==(const Preorder& a, const Preorder& b) {
    return a.objects_ == b.objects_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<boost::dynamic_bitset<>> rows_;
};

}  // namespace roughcat
