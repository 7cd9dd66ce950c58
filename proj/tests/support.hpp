#pragma once

#include <initializer_list>
#include <vector>

#include "pa/nestedsets.hpp"

namespace pa::test {

// A chain written as its sets, in any order: {{1,0,3},{1,0},{1}}.
inline Chain ch(std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<LabelSet> family;
  for (auto s : sets) family.push_back(LabelSet::of(s));
  return Chain::from_sets(std::move(family));
}

inline NestedSet ns(std::initializer_list<Chain> chains) { return NestedSet(std::vector<Chain>(chains)); }

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace pa::test
