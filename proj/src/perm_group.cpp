#include "moufang/perm_group.hpp"

#include <stdexcept>

#include "moufang/errors.hpp"

namespace moufang {

PermGroup closure(const std::vector<Permutation>& generators,
                  std::size_t max_order) {
  if (generators.empty())
    throw std::invalid_argument("closure: empty generator list");
  const int degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("closure: generator degree mismatch");

  PermGroup group;
  group.degree = degree;
  group.generators = generators;

  // Seed with the identity and generator inverses so every finite word in
  // the generators and their inverses is reached.
  std::vector<Permutation> seeds;
  seeds.push_back(Permutation::identity(degree));
  for (const auto& g : generators) {
    seeds.push_back(g);
    seeds.push_back(g.inverse());
  }

  std::vector<Permutation> frontier;
  for (const auto& s : seeds) {
    if (group.element_set.insert(s).second) {
      group.elements.push_back(s);
      frontier.push_back(s);
    }
  }

  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& p : frontier) {
      for (const auto& g : generators) {
        Permutation q = compose(p, g);
        if (group.element_set.insert(q).second) {
          if (group.elements.size() >= max_order)
            throw closure_cap_error("closure exceeded element cap of " +
                                    std::to_string(max_order));
          group.elements.push_back(q);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return group;
}

bool contains(const PermGroup& group, const Permutation& p) {
  if (p.degree() != group.degree) return false;
  return group.element_set.count(p) != 0;
}

}  // namespace moufang
