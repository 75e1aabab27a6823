#include "roughcat/preorder.hpp"

#include "roughcat/error.hpp"

namespace roughcat {

Preorder Preorder::closure(std::vector<std::string> objects,
                           const std::vector<std::pair<std::string, std::string>>& edges) {
  Preorder p = discrete(std::move(objects));
  for (const auto& [from, to] : edges) p.rows_[p.index_of(from)].set(p.index_of(to));
  // Warshall on bit rows
  const std::size_t n = p.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.rows_[i][k]) p.rows_[i] |= p.rows_[k];
    }
  }
  return p;
}

Preorder Preorder::discrete(std::vector<std::string> objects) {
  Preorder p;
  p.objects_ = std::move(objects);
  const std::size_t n = p.objects_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (p.objects_[i] == p.objects_[j]) {
        throw Error(ErrorKind::invalid_structure, "duplicate object '" + p.objects_[i] + "'");
      }
    }
  }
  p.rows_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t i = 0; i < n; ++i) p.rows_[i].set(i);
  return p;
}

std::size_t Preorder::index_of(const std::string& object) const {
  for (std::size_t i = 0; i < objects_.size(); ++i) {
    if (objects_[i] == object) return i;
  }
  throw Error(ErrorKind::unknown_object, "unknown object '" + object + "'");
}

std::vector<std::string> Preorder::down_set(const std::string& a) const {
  const std::size_t ai = index_of(a);
  std::vector<std::string> out;
  for (std::size_t b = 0; b < size(); ++b) {
    if (leq(b, ai)) out.push_back(objects_[b]);
  }
  return out;
}

std::vector<std::string> Preorder::up_set(const std::string& a) const {
  const std::size_t ai = index_of(a);
  std::vector<std::string> out;
  for (std::size_t b = 0; b < size(); ++b) {
    if (leq(ai, b)) out.push_back(objects_[b]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Preorder::pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (leq(a, b)) out.emplace_back(objects_[a], objects_[b]);
    }
  }
  return out;
}

}  // namespace roughcat
