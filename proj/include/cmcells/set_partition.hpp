#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

namespace cmcells {

/// Union-find over indices 0..n-1 with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

  /// Classes as sorted index lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes() {
    std::map<std::size_t, std::vector<std::size_t>> by_root;
    for (std::size_t i = 0; i < parent_.size(); ++i) by_root[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : by_root) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Label-free normal form of a set partition: each class sorted, classes sorted.
template <typename T>
std::vector<std::vector<T>> canonical_set_partition(std::vector<std::vector<T>> classes) {
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end());
  return classes;
}

/// Groups items by key. Classes appear in order of first occurrence and keep
/// the input order internally.
template <typename T, typename Key>
std::vector<std::pair<Key, std::vector<T>>> group_by_key(const std::vector<T>& items,
                                                          const std::vector<Key>& keys) {
  std::map<Key, std::size_t> slot;
  std::vector<std::pair<Key, std::vector<T>>> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(keys[i], out.size());
    if (inserted) out.emplace_back(keys[i], std::vector<T>{});
    out[it->second].second.push_back(items[i]);
  }
  return out;
}

}  // namespace cmcells
