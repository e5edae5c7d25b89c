#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gsp/errors.hpp"

namespace gsp {

/// Sorted set of indices inside a universe {0, ..., n-1}. Indices are
/// 0-based in code; every external surface (CLI flags, file formats) speaks
/// 1-based and converts at the boundary.
template <typename Tag>
class TypedIndexSet {
 public:
  TypedIndexSet() = default;

  static TypedIndexSet from_zero_based(std::vector<int> indices, int universe) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (int i : indices) {
      if (i < 0 || i >= universe)
        fail(Errc::index_out_of_range,
             "index " + std::to_string(i + 1) + " outside 1.." + std::to_string(universe));
    }
    return TypedIndexSet(std::move(indices), universe);
  }

  static TypedIndexSet from_one_based(const std::vector<int>& indices, int universe) {
    std::vector<int> zero;
    zero.reserve(indices.size());
    for (int i : indices) zero.push_back(i - 1);
    return from_zero_based(std::move(zero), universe);
  }

  static TypedIndexSet full(int universe) {
    std::vector<int> all(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) all[static_cast<std::size_t>(i)] = i;
    return TypedIndexSet(std::move(all), universe);
  }

  static TypedIndexSet none(int universe) { return TypedIndexSet({}, universe); }

  int universe() const { return universe_; }
  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool is_full() const { return size() == universe_; }

  const std::vector<int>& indices() const { return indices_; }

  bool contains(int i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
  }

  TypedIndexSet complement() const {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(universe_ - size()));
    std::size_t k = 0;
    for (int i = 0; i < universe_; ++i) {
      if (k < indices_.size() && indices_[k] == i) {
        ++k;
      } else {
        rest.push_back(i);
      }
    }
    return TypedIndexSet(std::move(rest), universe_);
  }

  std::vector<int> one_based() const {
    std::vector<int> out(indices_);
    for (int& i : out) ++i;
    return out;
  }

  friend bool operator==(const TypedIndexSet& a, const TypedIndexSet& b) {
    return a.universe_ == b.universe_ && a.indices_ == b.indices_;
  }

 private:
  TypedIndexSet(std::vector<int> indices, int universe)
      : indices_(std::move(indices)), universe_(universe) {}

  std::vector<int> indices_;
  int universe_ = 0;
};

using VertexSet = TypedIndexSet<struct VertexSetTag>;
using FrequencySet = TypedIndexSet<struct FrequencySetTag>;

}  // namespace gsp
