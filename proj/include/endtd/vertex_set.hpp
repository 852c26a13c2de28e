#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "endtd/vertex.hpp"

namespace endtd {

/// Sorted, duplicate-free set of truncation indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Idx> xs) : items_(xs) { normalize(); }
  explicit VertexSet(std::vector<Idx> xs) : items_(std::move(xs)) { normalize(); }

  static VertexSet from_mask(const std::vector<char>& mask) {
    VertexSet s;
    for (Idx i = 0; i < static_cast<Idx>(mask.size()); ++i)
      if (mask[i]) s.items_.push_back(i);
    return s;
  }

  bool contains(Idx v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Idx>& items() const { return items_; }

  void insert(Idx v) {
    auto it = std::lower_bound(items_.begin(), items_.end(), v);
    if (it == items_.end() || *it != v) items_.insert(it, v);
  }

  std::vector<char> mask(std::size_t n) const {
    std::vector<char> m(n, 0);
    for (Idx v : items_) m[v] = 1;
    return m;
  }

  auto operator<=>(const VertexSet&) const = default;

 private:
  void normalize() {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }
  std::vector<Idx> items_;
};

inline VertexSet set_union(const VertexSet& x, const VertexSet& y) {
  std::vector<Idx> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& x, const VertexSet& y) {
  std::vector<Idx> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& x, const VertexSet& y) {
  std::vector<Idx> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

inline bool is_subset(const VertexSet& x, const VertexSet& y) {
  return std::includes(y.begin(), y.end(), x.begin(), x.end());
}

inline bool intersects(const VertexSet& x, const VertexSet& y) {
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

}  // namespace endtd
