#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moufang/cayley.hpp"

namespace moufang {

// A total map on [0, degree), not necessarily a bijection. Reconstruction
// inputs are raw data: nothing about them is assumed, everything is checked.
using Transformation = std::vector<int>;

Transformation identity_transformation(int degree);
Transformation compose_maps(const Transformation& a, const Transformation& b);
bool is_identity_map(const Transformation& t);

// A groupoid (no axioms assumed) with candidate families S, T, P of common
// degree and a bar map g -> g-bar.
struct ReconstructionInput {
  CayleyTable groupoid;
  int degree = 0;
  std::vector<Transformation> s, t, p;
  std::vector<element_t> bar;
};

struct ConditionWitness {
  int condition = 0;  // 1..4
  int g = 0;
  int h = -1;         // -1 for per-element conditions
  std::string detail;
};

struct ReconstructionVerdict {
  bool is_moufang_loop = false;
  std::optional<element_t> unit;
  std::vector<element_t> inverse_map;  // empty unless certified
  std::optional<ConditionWitness> failed;
};

// Decides the four hypotheses on finite data:
//   1) S_g T_g P_g = 1 for all g
//   2) S_{g-bar} inverts S_g and T_{g-bar} inverts T_g, two-sidedly
//   3) the six shifted relations with g-bar in place of g^-1
//   4) g -> (S_g, T_g) is injective
// On success the conclusion is re-derived from the table: e = g*g-bar is
// computed for every g, checked constant and two-sided, g-bar is checked to
// be the two-sided inverse, and classify confirms the Moufang identity.
// A conclusion failure after all conditions pass throws std::logic_error.
ReconstructionVerdict check_conditions(const ReconstructionInput& input);

// Packages (L, R, P = L^-1 R^-1) and bar = loop inversion of a Moufang loop
// as a ReconstructionInput. Throws structure_error on non-Moufang input.
ReconstructionInput reconstruct_from_regular(const CayleyTable& loop);

// Best-effort packaging of an arbitrary table's translations, assuming no
// axioms: S and T are the rows and columns as raw maps, P_g inverts
// S_g T_g when that composite is bijective (identity otherwise), and bar(g)
// is the element whose maps invert S_g and T_g when one exists (g
// otherwise). For a Moufang loop this coincides with
// reconstruct_from_regular; elsewhere it feeds check_conditions a candidate
// that must fail some hypothesis.
ReconstructionInput forge_translation_input(const CayleyTable& table);

}  // namespace moufang
