#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "moufang/cayley.hpp"
#include "moufang/perm.hpp"

namespace moufang {

// Counterexample for a failed classification property. The meaning of the
// triple depends on the property (see note).
struct ClassWitness {
  std::string property;
  std::array<int, 3> triple{0, 0, 0};
  std::string note;
};

// Result of the classification chain
// groupoid -> quasigroup -> loop -> Moufang loop -> group.
struct AlgebraClass {
  bool is_quasigroup = false;
  bool is_loop = false;
  bool is_moufang = false;
  bool is_group = false;
  bool is_commutative = false;
  std::optional<element_t> unit;
  std::vector<ClassWitness> witnesses;  // one per failed property
};

// Exhaustive over all rows/columns and triples. Never throws.
AlgebraClass classify(const CayleyTable& table);

// The unique two-sided unit. Throws structure_error when none exists.
element_t unit(const CayleyTable& table);

// The two-sided inverse of g. Throws structure_error when the table is not
// a loop or when left and right inverses differ (non-Moufang input).
element_t inverse(const CayleyTable& table, element_t g);

// Row g as a permutation: h -> g*h. Throws if the row is not a bijection.
Permutation left_translation(const CayleyTable& table, element_t g);
// Column g as a permutation: h -> h*g.
Permutation right_translation(const CayleyTable& table, element_t g);

// One checked identity of the diassociativity consequence battery.
struct IdentityCheck {
  std::string identity;
  bool passed = true;
  std::array<int, 2> witness{-1, -1};  // first violating (g, h), if any
};

struct DiassociativityReport {
  std::vector<IdentityCheck> checks;
  bool all_passed() const;
};

// Verifies, exhaustively over all pairs: coincidence of left and right
// inverses, left/right alternativity, flexibility, g^-1(gh) = h,
// (hg)g^-1 = h, (g^-1)^-1 = g and (gh)^-1 = h^-1 g^-1. All identities hold
// on Moufang loops; on a plain loop the violated ones are reported.
DiassociativityReport check_diassociativity_identities(const CayleyTable& table);

// Smallest subset containing the generators that is closed under product
// and two-sided inverse. Breadth-first; requires a loop with two-sided
// inverses. Result is sorted.
std::vector<element_t> generated_subloop(const CayleyTable& table,
                                         const std::vector<element_t>& generators);

}  // namespace moufang
