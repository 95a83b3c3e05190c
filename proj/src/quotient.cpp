#include "moufang/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "moufang/errors.hpp"

namespace moufang {

InnerMaps inner_maps(const CayleyTable& loop) {
  const int n = loop.order();
  std::vector<Permutation> L, R;
  L.reserve(static_cast<std::size_t>(n));
  R.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    L.push_back(left_translation(loop, g));
    R.push_back(right_translation(loop, g));
  }

  InnerMaps maps;
  for (int g = 0; g < n; ++g)
    maps.m_plus.push_back(
        compose(R[static_cast<std::size_t>(g)],
                L[static_cast<std::size_t>(g)].inverse()));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      maps.l_assoc.emplace(
          std::make_pair(g, h),
          compose(L[static_cast<std::size_t>(loop.at(g, h))].inverse(),
                  L[static_cast<std::size_t>(g)],
                  L[static_cast<std::size_t>(h)]));
  return maps;
}

bool is_subloop(const CayleyTable& loop, const std::set<element_t>& subset) {
  if (subset.empty()) return false;
  for (element_t g : subset) {
    if (g < 0 || g >= loop.order()) return false;
    if (subset.count(inverse(loop, g)) == 0) return false;
    for (element_t h : subset)
      if (subset.count(loop.at(g, h)) == 0) return false;
  }
  return subset.count(unit(loop)) != 0;
}

bool is_normal_divisor(const CayleyTable& loop,
                       const std::set<element_t>& subloop) {
  if (!is_subloop(loop, subloop))
    throw structure_error("candidate divisor is not a subloop");
  const InnerMaps maps = inner_maps(loop);
  auto invariant = [&](const Permutation& p) {
    return std::all_of(subloop.begin(), subloop.end(),
                       [&](element_t x) { return subloop.count(p(x)) != 0; });
  };
  for (const auto& p : maps.m_plus)
    if (!invariant(p)) return false;
  for (const auto& [pair, p] : maps.l_assoc)
    if (!invariant(p)) return false;
  return true;
}

std::vector<std::set<element_t>> normal_divisors(const CayleyTable& loop) {
  const int n = loop.order();
  std::set<std::vector<element_t>> seen;
  for (int g = 0; g < n; ++g) {
    seen.insert(generated_subloop(loop, {g}));
    for (int h = g; h < n; ++h) seen.insert(generated_subloop(loop, {g, h}));
  }
  // Two-generated subloops are associative by diassociativity, so a
  // nonassociative loop never shows up in the enumeration; the full carrier
  // is always a (trivially normal) divisor.
  std::vector<element_t> whole(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) whole[static_cast<std::size_t>(g)] = g;
  seen.insert(std::move(whole));
  std::vector<std::set<element_t>> result;
  for (const auto& members : seen) {
    std::set<element_t> candidate(members.begin(), members.end());
    if (is_normal_divisor(loop, candidate))
      result.push_back(std::move(candidate));
  }
  std::sort(result.begin(), result.end(),
            [](const std::set<element_t>& a, const std::set<element_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return std::lexicographical_compare(a.begin(), a.end(),
                                                  b.begin(), b.end());
            });
  return result;
}

QuotientStructure quotient(const CayleyTable& loop,
                           const std::set<element_t>& divisor) {
  if (!is_subloop(loop, divisor))
    throw structure_error("divisor is not a subloop");
  const int n = loop.order();

  QuotientStructure q;
  q.parent = loop;
  q.divisor = divisor;
  q.projection.assign(static_cast<std::size_t>(n), -1);

  for (int g = 0; g < n; ++g) {
    if (q.projection[static_cast<std::size_t>(g)] >= 0) continue;
    std::set<element_t> left, right;
    for (element_t x : divisor) {
      left.insert(loop.at(g, x));
      right.insert(loop.at(x, g));
    }
    if (left != right)
      throw structure_error("left and right cosets of " + std::to_string(g) +
                            " differ (divisor not normal)");
    const int index = static_cast<int>(q.cosets.size());
    q.cosets.emplace_back(left.begin(), left.end());
    for (element_t x : left) {
      if (q.projection[static_cast<std::size_t>(x)] >= 0)
        throw structure_error("cosets are not disjoint");
      q.projection[static_cast<std::size_t>(x)] = index;
    }
  }

  const int m = static_cast<int>(q.cosets.size());
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(m),
                                     std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int product = -1;
      for (element_t x : q.cosets[static_cast<std::size_t>(a)])
        for (element_t y : q.cosets[static_cast<std::size_t>(b)]) {
          const int c = q.projection[static_cast<std::size_t>(loop.at(x, y))];
          if (product < 0) product = c;
          if (c != product)
            throw structure_error(
                "coset product is representative-dependent (divisor not normal)");
        }
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = product;
    }
  q.quotient_table = CayleyTable(std::move(rows));

  const AlgebraClass cls = classify(q.quotient_table);
  if (!cls.is_moufang)
    throw structure_error("quotient table is not a Moufang loop");
  if (unit(q.quotient_table) != q.coset_of(unit(loop)))
    throw structure_error("quotient unit is not the coset of the divisor");
  return q;
}

Birepresentation pulled_back_birepresentation(const CayleyTable& loop,
                                              const std::set<element_t>& divisor) {
  const QuotientStructure q = quotient(loop, divisor);
  const int n = loop.order();
  std::vector<Permutation> S, T;
  S.reserve(static_cast<std::size_t>(n));
  T.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    S.push_back(left_translation(q.quotient_table, q.coset_of(g)));
    T.push_back(right_translation(q.quotient_table, q.coset_of(g)));
  }
  return Birepresentation(loop, std::move(S), std::move(T));
}

bool kernel_is_normal_check(const Birepresentation& birep) {
  const CayleyTable& loop = birep.loop();
  const std::set<element_t> k = kernel(birep);
  if (!is_normal_divisor(loop, k)) return false;

  // S and T must be trivial on the inner-map images of kernel elements.
  const InnerMaps maps = inner_maps(loop);
  for (element_t x : k) {
    for (const auto& p : maps.m_plus) {
      const element_t y = p(x);
      if (!birep.S(y).is_identity() || !birep.T(y).is_identity()) return false;
    }
    for (const auto& [pair, p] : maps.l_assoc) {
      const element_t y = p(x);
      if (!birep.S(y).is_identity() || !birep.T(y).is_identity()) return false;
    }
  }
  return true;
}

InducedBirepresentation induced_birepresentation(const Birepresentation& birep) {
  const CayleyTable& loop = birep.loop();
  const std::set<element_t> k = kernel(birep);
  QuotientStructure q = quotient(loop, k);

  // representative independence over every coset member
  for (const auto& coset : q.cosets) {
    const element_t rep = coset.front();
    for (element_t g : coset)
      if (!(birep.S(g) == birep.S(rep)) || !(birep.T(g) == birep.T(rep)))
        throw structure_error(
            "families are representative-dependent; divisor is not the kernel");
  }

  const int m = q.quotient_table.order();
  std::vector<Permutation> S, T;
  S.reserve(static_cast<std::size_t>(m));
  T.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    const element_t rep = q.cosets[static_cast<std::size_t>(c)].front();
    S.push_back(birep.S(rep));
    T.push_back(birep.T(rep));
  }
  Birepresentation induced(q.quotient_table, std::move(S), std::move(T));
  if (!is_faithful(induced))
    throw std::logic_error("induced birepresentation is not faithful");
  return {std::move(q), std::move(induced)};
}

}  // namespace moufang
