#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "moufang/birep.hpp"
#include "moufang/cayley.hpp"
#include "moufang/perm.hpp"

namespace moufang {

// The inner transformations L(g;h) = L_{gh}^-1 L_g L_h and M+_g = R_g L_g^-1
// of a Moufang loop, as permutations of the loop itself.
struct InnerMaps {
  std::map<std::pair<element_t, element_t>, Permutation> l_assoc;
  std::vector<Permutation> m_plus;
};

InnerMaps inner_maps(const CayleyTable& loop);

// Closed under product and inverse, contains the unit.
bool is_subloop(const CayleyTable& loop, const std::set<element_t>& subset);

// True iff every L(g;h) and every M+_g maps the subloop into itself.
// Throws structure_error when the subset is not a subloop.
bool is_normal_divisor(const CayleyTable& loop, const std::set<element_t>& subloop);

// All normal divisors found among subloops generated by at most two
// elements, sorted by size then lexicographically. Exhaustive at desk scale.
std::vector<std::set<element_t>> normal_divisors(const CayleyTable& loop);

// Coset partition of a loop by a normal divisor with the induced table.
struct QuotientStructure {
  CayleyTable parent;
  std::set<element_t> divisor;
  std::vector<std::vector<element_t>> cosets;  // ordered by smallest member
  std::vector<int> projection;                 // element -> coset index
  CayleyTable quotient_table;

  int coset_of(element_t g) const {
    return projection[static_cast<std::size_t>(g)];
  }
};

// Computes cosets gN, verifies gN = Ng for every g, builds the coset table,
// verifies that the product is representative-independent and that the
// result is a Moufang loop whose unit is the coset of the divisor.
// Throws structure_error on any of these failing (N not normal).
QuotientStructure quotient(const CayleyTable& loop, const std::set<element_t>& divisor);

// Lifts the regular birepresentation of G/N to G: S_g = L_{gN}, T_g = R_{gN}
// acting on the coset space. Kernel is exactly N.
Birepresentation pulled_back_birepresentation(const CayleyTable& loop,
                                              const std::set<element_t>& divisor);

// Checks that the kernel is a normal divisor, both via the inner-map
// criterion and by directly verifying that S and T are trivial on the
// images M+_g(k) and L(g;h)(k) of every kernel element.
bool kernel_is_normal_check(const Birepresentation& birep);

struct InducedBirepresentation {
  QuotientStructure structure;  // by the kernel of the source
  Birepresentation birep;       // on the quotient loop; faithful
};

// The induced birepresentation S'_{gK} = S_g, T'_{gK} = T_g of G/Ker(S,T).
// Representative independence is verified over every coset member and the
// result is checked faithful; violations throw structure_error
// (or std::logic_error for the faithfulness guarantee).
InducedBirepresentation induced_birepresentation(const Birepresentation& birep);

}  // namespace moufang
