#pragma once

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "moufang/perm.hpp"

namespace moufang {

// A finite permutation group given by generators together with its fully
// enumerated closure. Immutable once built; queries are freely concurrent.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;  // BFS order, identity first
  std::unordered_set<Permutation, PermHash> element_set;

  std::size_t order() const { return elements.size(); }
};

// Breadth-first product closure of the generators. Throws std::invalid_argument
// on an empty list or mixed degrees, and closure_cap_error if the closure
// would exceed max_order elements.
PermGroup closure(const std::vector<Permutation>& generators,
                  std::size_t max_order = 1000000);

bool contains(const PermGroup& group, const Permutation& p);

}  // namespace moufang
