#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moufang/cayley.hpp"
#include "moufang/classify.hpp"
#include "moufang/perm.hpp"
#include "moufang/perm_group.hpp"

namespace moufang {

// One violated instance of a relation: the pair (g, h) and both sides.
// h is -1 for relations quantified over a single element.
struct Violation {
  int g = 0;
  int h = -1;
  Permutation lhs;
  Permutation rhs;
};

// Outcome of checking one relation exhaustively. At most
// kMaxRecordedViolations instances are recorded; total_violations counts
// all of them.
struct RelationReport {
  static constexpr std::size_t kMaxRecordedViolations = 32;

  std::string relation;
  long long checked = 0;
  long long total_violations = 0;
  std::vector<Violation> violations;

  bool ok() const { return total_violations == 0; }
  void add_violation(int g, int h, Permutation lhs, Permutation rhs);
};

// Element-indexed families (S, T) of permutations of a common acted set,
// satisfying S_e = T_e = 1, S_g T_g S_h = S_{gh} T_g and
// S_g T_g T_h = T_{hg} S_g for all g, h. Validated eagerly at construction;
// raw unvalidated families exist only as checker input.
class Birepresentation {
 public:
  // Throws birep_error when the defining relations fail, structure_error
  // when the table is not a Moufang loop or the families are malformed.
  Birepresentation(CayleyTable loop, std::vector<Permutation> s_family,
                   std::vector<Permutation> t_family);

  const CayleyTable& loop() const { return loop_; }
  int degree() const { return degree_; }
  const Permutation& S(element_t g) const {
    return s_[static_cast<std::size_t>(g)];
  }
  const Permutation& T(element_t g) const {
    return t_[static_cast<std::size_t>(g)];
  }
  const std::vector<Permutation>& s_family() const { return s_; }
  const std::vector<Permutation>& t_family() const { return t_; }

  friend bool operator==(const Birepresentation&, const Birepresentation&) =
      default;

 private:
  CayleyTable loop_;
  int degree_ = 0;
  std::vector<Permutation> s_;
  std::vector<Permutation> t_;
};

// Checker form of the defining relations: reports on S_e = T_e = 1, the two
// defining relations, and the equivalent pair S_h T_g S_g = T_g S_{hg},
// T_h T_g S_g = S_g T_{gh}. Never throws; violations are data.
std::vector<RelationReport> validate_birepresentation(
    const CayleyTable& loop, const std::vector<Permutation>& s_family,
    const std::vector<Permutation>& t_family);

// The pair (L, R) of translation families acting on the loop itself.
Birepresentation regular_birepresentation(const CayleyTable& loop);

// A birepresentation together with its quadratic family P_g = S_g^-1 T_g^-1,
// the third leg of the triality triple. P_e = 1, P_{g^-1} = P_g^-1 and
// S_g T_g P_g = 1 are enforced at construction.
struct TrialityTriple {
  Birepresentation base;
  std::vector<Permutation> p;

  const Permutation& S(element_t g) const { return base.S(g); }
  const Permutation& T(element_t g) const { return base.T(g); }
  const Permutation& P(element_t g) const {
    return p[static_cast<std::size_t>(g)];
  }
};

// Derives P from the base birepresentation and verifies the symmetric form
// S_g T_g P_g = 1 plus commutation of P_g with S_g and T_g. A failure
// signals corrupted input and throws birep_error.
TrialityTriple quadratic_family(const Birepresentation& birep);

// Builds a triple from explicit families, validating the base pair and the
// P-family properties.
TrialityTriple make_triality_triple(CayleyTable loop,
                                    std::vector<Permutation> s_family,
                                    std::vector<Permutation> t_family,
                                    std::vector<Permutation> p_family);

// S_{g^-1} = S_g^-1 and T_{g^-1} = T_g^-1, exhaustively.
RelationReport inverse_map_check(const Birepresentation& birep);

// The quartic relation S_g S_h T_h T_g = T_h T_g S_g S_h over all pairs.
RelationReport commutation_check(const Birepresentation& birep);

// The six relations expressing the families at shifted arguments:
//   S_{g^-1 h} = P_g S_h T_g     S_{h g^-1} = T_g S_h P_g
//   T_{g^-1 h} = S_g T_h P_g     T_{h g^-1} = P_g T_h S_g
//   P_{g^-1 h} = T_g P_h S_g     P_{h g^-1} = S_g P_h T_g
std::vector<RelationReport> shifted_relation_check(const TrialityTriple& triple);

// Conjugation-shaped expressions for the shifted families:
//   S_{g^-1 h} = T_g^-1 S_g^-1 S_h T_g     S_{h g^-1} = T_g S_h T_g^-1 S_g^-1
//   T_{g^-1 h} = S_g T_h T_g^-1 S_g^-1     T_{h g^-1} = S_g^-1 T_g^-1 T_h S_g
std::vector<RelationReport> division_expression_check(const TrialityTriple& triple);

// The six derived pairs (S,T), (T^-1,S^-1), (T,P), (P^-1,T^-1), (P,S),
// (S^-1,P^-1), each constructed and validated as a birepresentation.
std::vector<Birepresentation> triality_pairs(const TrialityTriple& triple);

// The six triality substitutions; they compose as the symmetric group on
// three letters.
enum class TrialitySub { identity, tau, rho, rho2, rho_tau, rho2_tau };

constexpr std::array<TrialitySub, 6> kAllTrialitySubs = {
    TrialitySub::identity, TrialitySub::tau,     TrialitySub::rho,
    TrialitySub::rho2,     TrialitySub::rho_tau, TrialitySub::rho2_tau};

std::string to_string(TrialitySub sub);

// Applies the substitution and revalidates the resulting triple:
//   1:    (S,T,P)                tau:   (T^-1,S^-1,P^-1)
//   rho:  (T,P,S)                rho2:  (P,S,T)
//   rho.tau: (P^-1,T^-1,S^-1)    rho2.tau: (S^-1,P^-1,T^-1)
TrialityTriple triality_substitute(const TrialityTriple& triple, TrialitySub sub);

// {g : S_g = T_g = 1}. Always contains the unit; the result is verified to
// be closed under product and inverse (throws std::logic_error otherwise).
std::set<element_t> kernel(const Birepresentation& birep);

// True iff the kernel is {e}. Cross-checked against joint injectivity of
// g -> (S_g, T_g); a criterion mismatch throws std::logic_error.
bool is_faithful(const Birepresentation& birep);

// Closure of all S_g and T_g under composition.
PermGroup enveloping_group(const Birepresentation& birep,
                           std::size_t max_order = 1000000);

// S_g S_h S_g = S_{ghg}, and likewise for T and P. The product ghg is
// bracket-independent by flexibility.
std::vector<RelationReport> triple_closure_check(const TrialityTriple& triple);

// Associators of a birepresentation, measuring the failure of homomorphy.
struct AssociatorSet {
  // (g,h) -> S_{gh}^-1 S_g S_h
  std::map<std::pair<element_t, element_t>, Permutation> s_assoc;
  // (g,h) -> T_{gh} T_g^-1 T_h^-1
  std::map<std::pair<element_t, element_t>, Permutation> t_assoc;
  // (g,h) -> [T_g, S_h^-1] = T_g S_h^-1 T_g^-1 S_h
  std::map<std::pair<element_t, element_t>, Permutation> commutators;
  // (g,h) -> [S_g^-1, T_h] = S_g^-1 T_h S_g T_h^-1
  std::map<std::pair<element_t, element_t>, Permutation> reversed_commutators;
};

AssociatorSet associators(const Birepresentation& birep);

// The minimality chains for the pairs (S,T), (T,P) and (P,S): for a pair
// (A,B) and all g, h the six expressions
//   [B_g, A_h^-1],  A_{gh}^-1 A_g A_h,  B_{gh} B_g^-1 B_h^-1,
//   [A_g^-1, B_h],  A_g^-1 A_h^-1 A_{hg},  B_g B_h B_{hg}^-1
// coincide. One report per pair.
std::vector<RelationReport> minimality_check(const TrialityTriple& triple);

// True iff S_g S_h = S_{gh} for all pairs. The three equivalent closure
// conditions (S_g S_h = S_{gh}, T_g T_h = T_{hg}, S_g T_h = T_h S_g) are all
// computed; a verdict mismatch throws std::logic_error.
bool is_associative_birep(const Birepresentation& birep);

}  // namespace moufang
