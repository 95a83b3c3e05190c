#include "moufang/birep.hpp"

#include <algorithm>
#include <stdexcept>

#include "moufang/errors.hpp"

namespace moufang {

void RelationReport::add_violation(int g, int h, Permutation lhs,
                                   Permutation rhs) {
  ++total_violations;
  if (violations.size() < kMaxRecordedViolations)
    violations.push_back({g, h, std::move(lhs), std::move(rhs)});
}

namespace {

void require_families(const CayleyTable& loop,
                      const std::vector<Permutation>& s,
                      const std::vector<Permutation>& t) {
  const int n = loop.order();
  if (n == 0) throw structure_error("empty table");
  if (static_cast<int>(s.size()) != n || static_cast<int>(t.size()) != n)
    throw structure_error("families must have one permutation per element");
  const int degree = s.front().degree();
  for (const auto& p : s)
    if (p.degree() != degree) throw structure_error("family degree mismatch");
  for (const auto& p : t)
    if (p.degree() != degree) throw structure_error("family degree mismatch");
}

// Exhaustive pair check; lhs/rhs compute the two sides for (g, h).
template <typename Lhs, typename Rhs>
RelationReport check_pairs(const std::string& relation, int n, Lhs&& lhs,
                           Rhs&& rhs) {
  RelationReport report{relation};
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      Permutation l = lhs(g, h);
      Permutation r = rhs(g, h);
      ++report.checked;
      if (!(l == r)) report.add_violation(g, h, std::move(l), std::move(r));
    }
  return report;
}

std::vector<element_t> inverse_table(const CayleyTable& loop) {
  std::vector<element_t> inv(static_cast<std::size_t>(loop.order()));
  for (int g = 0; g < loop.order(); ++g)
    inv[static_cast<std::size_t>(g)] = inverse(loop, g);
  return inv;
}

}  // namespace

std::vector<RelationReport> validate_birepresentation(
    const CayleyTable& loop, const std::vector<Permutation>& S,
    const std::vector<Permutation>& T) {
  require_families(loop, S, T);
  const int n = loop.order();
  const element_t e = unit(loop);
  const int degree = S.front().degree();
  const Permutation id = Permutation::identity(degree);

  std::vector<RelationReport> reports;

  RelationReport units{"S_e = T_e = 1"};
  units.checked = 2;
  if (!(S[static_cast<std::size_t>(e)] == id))
    units.add_violation(e, -1, S[static_cast<std::size_t>(e)], id);
  if (!(T[static_cast<std::size_t>(e)] == id))
    units.add_violation(e, -1, T[static_cast<std::size_t>(e)], id);
  reports.push_back(std::move(units));

  auto s = [&](int g) -> const Permutation& { return S[static_cast<std::size_t>(g)]; };
  auto t = [&](int g) -> const Permutation& { return T[static_cast<std::size_t>(g)]; };

  reports.push_back(check_pairs(
      "S_g T_g S_h = S_{gh} T_g", n,
      [&](int g, int h) { return compose(s(g), t(g), s(h)); },
      [&](int g, int h) { return compose(s(loop.at(g, h)), t(g)); }));
  reports.push_back(check_pairs(
      "S_g T_g T_h = T_{hg} S_g", n,
      [&](int g, int h) { return compose(s(g), t(g), t(h)); },
      [&](int g, int h) { return compose(t(loop.at(h, g)), s(g)); }));
  reports.push_back(check_pairs(
      "S_h T_g S_g = T_g S_{hg}", n,
      [&](int g, int h) { return compose(s(h), t(g), s(g)); },
      [&](int g, int h) { return compose(t(g), s(loop.at(h, g))); }));
  reports.push_back(check_pairs(
      "T_h T_g S_g = S_g T_{gh}", n,
      [&](int g, int h) { return compose(t(h), t(g), s(g)); },
      [&](int g, int h) { return compose(s(g), t(loop.at(g, h))); }));
  return reports;
}

Birepresentation::Birepresentation(CayleyTable loop,
                                   std::vector<Permutation> s_family,
                                   std::vector<Permutation> t_family)
    : loop_(std::move(loop)), s_(std::move(s_family)), t_(std::move(t_family)) {
  const AlgebraClass cls = classify(loop_);
  if (!cls.is_moufang)
    throw structure_error("birepresentation requires a Moufang loop table");
  require_families(loop_, s_, t_);
  degree_ = s_.front().degree();
  for (const auto& report : validate_birepresentation(loop_, s_, t_))
    if (!report.ok()) {
      const Violation& v = report.violations.front();
      throw birep_error("defining relation '" + report.relation +
                        "' fails at (g,h)=(" + std::to_string(v.g) + "," +
                        std::to_string(v.h) + ")");
    }
}

Birepresentation regular_birepresentation(const CayleyTable& loop) {
  const int n = loop.order();
  std::vector<Permutation> S, T;
  S.reserve(static_cast<std::size_t>(n));
  T.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    S.push_back(left_translation(loop, g));
    T.push_back(right_translation(loop, g));
  }
  return Birepresentation(loop, std::move(S), std::move(T));
}

TrialityTriple make_triality_triple(CayleyTable loop,
                                    std::vector<Permutation> s_family,
                                    std::vector<Permutation> t_family,
                                    std::vector<Permutation> p_family) {
  Birepresentation base(std::move(loop), std::move(s_family),
                        std::move(t_family));
  const CayleyTable& table = base.loop();
  const int n = table.order();
  if (static_cast<int>(p_family.size()) != n)
    throw structure_error("P family must have one permutation per element");
  const Permutation id = Permutation::identity(base.degree());
  const std::vector<element_t> inv = inverse_table(table);
  for (int g = 0; g < n; ++g) {
    const Permutation& p = p_family[static_cast<std::size_t>(g)];
    if (p.degree() != base.degree())
      throw structure_error("P family degree mismatch");
    if (!(compose(base.S(g), base.T(g), p) == id))
      throw birep_error("S_g T_g P_g = 1 fails at g=" + std::to_string(g));
    if (!(p.inverse() ==
          p_family[static_cast<std::size_t>(inv[static_cast<std::size_t>(g)])]))
      throw birep_error("P_{g^-1} = P_g^-1 fails at g=" + std::to_string(g));
  }
  if (!p_family[static_cast<std::size_t>(unit(table))].is_identity())
    throw birep_error("P_e = 1 fails");
  return TrialityTriple{std::move(base), std::move(p_family)};
}

TrialityTriple quadratic_family(const Birepresentation& birep) {
  const int n = birep.loop().order();
  std::vector<Permutation> P;
  P.reserve(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) {
    // commutation of S_g and T_g makes the symmetric form hold
    if (!(compose(birep.S(g), birep.T(g)) == compose(birep.T(g), birep.S(g))))
      throw birep_error("S_g T_g = T_g S_g fails at g=" + std::to_string(g));
    P.push_back(compose(birep.S(g).inverse(), birep.T(g).inverse()));
  }
  return make_triality_triple(birep.loop(), birep.s_family(), birep.t_family(),
                              std::move(P));
}

RelationReport inverse_map_check(const Birepresentation& birep) {
  const CayleyTable& loop = birep.loop();
  const int n = loop.order();
  const std::vector<element_t> inv = inverse_table(loop);
  RelationReport report{"S_{g^-1} = S_g^-1 and T_{g^-1} = T_g^-1"};
  for (int g = 0; g < n; ++g) {
    const element_t gi = inv[static_cast<std::size_t>(g)];
    ++report.checked;
    if (!(birep.S(gi) == birep.S(g).inverse()))
      report.add_violation(g, -1, birep.S(gi), birep.S(g).inverse());
    ++report.checked;
    if (!(birep.T(gi) == birep.T(g).inverse()))
      report.add_violation(g, -1, birep.T(gi), birep.T(g).inverse());
  }
  return report;
}

RelationReport commutation_check(const Birepresentation& birep) {
  const int n = birep.loop().order();
  return check_pairs(
      "S_g S_h T_h T_g = T_h T_g S_g S_h", n,
      [&](int g, int h) {
        return compose(birep.S(g), birep.S(h), birep.T(h), birep.T(g));
      },
      [&](int g, int h) {
        return compose(birep.T(h), birep.T(g), birep.S(g), birep.S(h));
      });
}

std::vector<RelationReport> shifted_relation_check(const TrialityTriple& t) {
  const CayleyTable& loop = t.base.loop();
  const int n = loop.order();
  const std::vector<element_t> inv = inverse_table(loop);
  auto gih = [&](int g, int h) {  // g^-1 h
    return loop.at(inv[static_cast<std::size_t>(g)], h);
  };
  auto hgi = [&](int g, int h) {  // h g^-1
    return loop.at(h, inv[static_cast<std::size_t>(g)]);
  };

  std::vector<RelationReport> reports;
  reports.push_back(check_pairs(
      "S_{g^-1 h} = P_g S_h T_g", n,
      [&](int g, int h) { return t.S(gih(g, h)); },
      [&](int g, int h) { return compose(t.P(g), t.S(h), t.T(g)); }));
  reports.push_back(check_pairs(
      "T_{g^-1 h} = S_g T_h P_g", n,
      [&](int g, int h) { return t.T(gih(g, h)); },
      [&](int g, int h) { return compose(t.S(g), t.T(h), t.P(g)); }));
  reports.push_back(check_pairs(
      "P_{g^-1 h} = T_g P_h S_g", n,
      [&](int g, int h) { return t.P(gih(g, h)); },
      [&](int g, int h) { return compose(t.T(g), t.P(h), t.S(g)); }));
  reports.push_back(check_pairs(
      "S_{h g^-1} = T_g S_h P_g", n,
      [&](int g, int h) { return t.S(hgi(g, h)); },
      [&](int g, int h) { return compose(t.T(g), t.S(h), t.P(g)); }));
  reports.push_back(check_pairs(
      "T_{h g^-1} = P_g T_h S_g", n,
      [&](int g, int h) { return t.T(hgi(g, h)); },
      [&](int g, int h) { return compose(t.P(g), t.T(h), t.S(g)); }));
  reports.push_back(check_pairs(
      "P_{h g^-1} = S_g P_h T_g", n,
      [&](int g, int h) { return t.P(hgi(g, h)); },
      [&](int g, int h) { return compose(t.S(g), t.P(h), t.T(g)); }));
  return reports;
}

std::vector<RelationReport> division_expression_check(const TrialityTriple& t) {
  const CayleyTable& loop = t.base.loop();
  const int n = loop.order();
  const std::vector<element_t> inv = inverse_table(loop);
  auto gih = [&](int g, int h) {
    return loop.at(inv[static_cast<std::size_t>(g)], h);
  };
  auto hgi = [&](int g, int h) {
    return loop.at(h, inv[static_cast<std::size_t>(g)]);
  };

  std::vector<RelationReport> reports;
  reports.push_back(check_pairs(
      "S_{g^-1 h} = T_g^-1 S_g^-1 S_h T_g", n,
      [&](int g, int h) { return t.S(gih(g, h)); },
      [&](int g, int h) {
        return compose(t.T(g).inverse(), t.S(g).inverse(), t.S(h), t.T(g));
      }));
  reports.push_back(check_pairs(
      "T_{g^-1 h} = S_g T_h T_g^-1 S_g^-1", n,
      [&](int g, int h) { return t.T(gih(g, h)); },
      [&](int g, int h) {
        return compose(t.S(g), t.T(h), t.T(g).inverse(), t.S(g).inverse());
      }));
  reports.push_back(check_pairs(
      "S_{h g^-1} = T_g S_h T_g^-1 S_g^-1", n,
      [&](int g, int h) { return t.S(hgi(g, h)); },
      [&](int g, int h) {
        return compose(t.T(g), t.S(h), t.T(g).inverse(), t.S(g).inverse());
      }));
  reports.push_back(check_pairs(
      "T_{h g^-1} = S_g^-1 T_g^-1 T_h S_g", n,
      [&](int g, int h) { return t.T(hgi(g, h)); },
      [&](int g, int h) {
        return compose(t.S(g).inverse(), t.T(g).inverse(), t.T(h), t.S(g));
      }));
  return reports;
}

namespace {

std::vector<Permutation> inverted_family(const std::vector<Permutation>& f) {
  std::vector<Permutation> out;
  out.reserve(f.size());
  for (const auto& p : f) out.push_back(p.inverse());
  return out;
}

}  // namespace

std::vector<Birepresentation> triality_pairs(const TrialityTriple& t) {
  const CayleyTable& loop = t.base.loop();
  const std::vector<Permutation>& S = t.base.s_family();
  const std::vector<Permutation>& T = t.base.t_family();
  const std::vector<Permutation>& P = t.p;
  const std::vector<Permutation> Si = inverted_family(S);
  const std::vector<Permutation> Ti = inverted_family(T);
  const std::vector<Permutation> Pi = inverted_family(P);

  std::vector<Birepresentation> pairs;
  pairs.emplace_back(loop, S, T);
  pairs.emplace_back(loop, Ti, Si);
  pairs.emplace_back(loop, T, P);
  pairs.emplace_back(loop, Pi, Ti);
  pairs.emplace_back(loop, P, S);
  pairs.emplace_back(loop, Si, Pi);
  return pairs;
}

std::string to_string(TrialitySub sub) {
  switch (sub) {
    case TrialitySub::identity: return "1";
    case TrialitySub::tau: return "tau";
    case TrialitySub::rho: return "rho";
    case TrialitySub::rho2: return "rho2";
    case TrialitySub::rho_tau: return "rho.tau";
    case TrialitySub::rho2_tau: return "rho2.tau";
  }
  return "?";
}

TrialityTriple triality_substitute(const TrialityTriple& t, TrialitySub sub) {
  const CayleyTable& loop = t.base.loop();
  const std::vector<Permutation>& S = t.base.s_family();
  const std::vector<Permutation>& T = t.base.t_family();
  const std::vector<Permutation>& P = t.p;

  switch (sub) {
    case TrialitySub::identity:
      return make_triality_triple(loop, S, T, P);
    case TrialitySub::tau:
      return make_triality_triple(loop, inverted_family(T), inverted_family(S),
                                  inverted_family(P));
    case TrialitySub::rho:
      return make_triality_triple(loop, T, P, S);
    case TrialitySub::rho2:
      return make_triality_triple(loop, P, S, T);
    case TrialitySub::rho_tau:
      return make_triality_triple(loop, inverted_family(P), inverted_family(T),
                                  inverted_family(S));
    case TrialitySub::rho2_tau:
      return make_triality_triple(loop, inverted_family(S), inverted_family(P),
                                  inverted_family(T));
  }
  throw std::logic_error("unknown substitution");
}

std::set<element_t> kernel(const Birepresentation& birep) {
  const CayleyTable& loop = birep.loop();
  const int n = loop.order();
  std::set<element_t> k;
  for (int g = 0; g < n; ++g)
    if (birep.S(g).is_identity() && birep.T(g).is_identity()) k.insert(g);

  if (k.count(unit(loop)) == 0)
    throw std::logic_error("kernel does not contain the unit");
  // subloop closure guarantee
  for (element_t a : k) {
    if (k.count(inverse(loop, a)) == 0)
      throw std::logic_error("kernel not closed under inverse");
    for (element_t b : k)
      if (k.count(loop.at(a, b)) == 0)
        throw std::logic_error("kernel not closed under product");
  }
  return k;
}

bool is_faithful(const Birepresentation& birep) {
  const std::set<element_t> k = kernel(birep);
  const bool trivial_kernel = k.size() == 1;

  // joint injectivity of g -> (S_g, T_g)
  bool injective = true;
  const int n = birep.loop().order();
  for (int g = 0; g < n && injective; ++g)
    for (int h = g + 1; h < n; ++h)
      if (birep.S(g) == birep.S(h) && birep.T(g) == birep.T(h)) {
        injective = false;
        break;
      }

  if (trivial_kernel != injective)
    throw std::logic_error("faithfulness criteria disagree");
  return trivial_kernel;
}

PermGroup enveloping_group(const Birepresentation& birep,
                           std::size_t max_order) {
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> seen;
  for (int g = 0; g < birep.loop().order(); ++g) {
    if (seen.insert(birep.S(g)).second) gens.push_back(birep.S(g));
    if (seen.insert(birep.T(g)).second) gens.push_back(birep.T(g));
  }
  return closure(gens, max_order);
}

std::vector<RelationReport> triple_closure_check(const TrialityTriple& t) {
  const CayleyTable& loop = t.base.loop();
  const int n = loop.order();
  auto ghg = [&](int g, int h) { return loop.at(loop.at(g, h), g); };

  std::vector<RelationReport> reports;
  reports.push_back(check_pairs(
      "S_g S_h S_g = S_{ghg}", n,
      [&](int g, int h) { return compose(t.S(g), t.S(h), t.S(g)); },
      [&](int g, int h) { return t.S(ghg(g, h)); }));
  reports.push_back(check_pairs(
      "T_g T_h T_g = T_{ghg}", n,
      [&](int g, int h) { return compose(t.T(g), t.T(h), t.T(g)); },
      [&](int g, int h) { return t.T(ghg(g, h)); }));
  reports.push_back(check_pairs(
      "P_g P_h P_g = P_{ghg}", n,
      [&](int g, int h) { return compose(t.P(g), t.P(h), t.P(g)); },
      [&](int g, int h) { return t.P(ghg(g, h)); }));
  return reports;
}

AssociatorSet associators(const Birepresentation& birep) {
  const CayleyTable& loop = birep.loop();
  const int n = loop.order();
  AssociatorSet set;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const element_t gh = loop.at(g, h);
      set.s_assoc.emplace(
          std::make_pair(g, h),
          compose(birep.S(gh).inverse(), birep.S(g), birep.S(h)));
      set.t_assoc.emplace(
          std::make_pair(g, h),
          compose(birep.T(gh), birep.T(g).inverse(), birep.T(h).inverse()));
      set.commutators.emplace(
          std::make_pair(g, h),
          compose(birep.T(g), birep.S(h).inverse(), birep.T(g).inverse(),
                  birep.S(h)));
      set.reversed_commutators.emplace(
          std::make_pair(g, h),
          compose(birep.S(g).inverse(), birep.T(h), birep.S(g),
                  birep.T(h).inverse()));
    }
  return set;
}

namespace {

// The six-member chain for a pair (A, B):
//   [B_g, A_h^-1], A_{gh}^-1 A_g A_h, B_{gh} B_g^-1 B_h^-1,
//   [A_g^-1, B_h], A_g^-1 A_h^-1 A_{hg}, B_g B_h B_{hg}^-1
RelationReport minimality_chain(const std::string& name, const CayleyTable& loop,
                                const std::vector<Permutation>& A,
                                const std::vector<Permutation>& B) {
  const int n = loop.order();
  auto a = [&](int g) -> const Permutation& { return A[static_cast<std::size_t>(g)]; };
  auto b = [&](int g) -> const Permutation& { return B[static_cast<std::size_t>(g)]; };

  RelationReport report{name};
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const element_t gh = loop.at(g, h);
      const element_t hg = loop.at(h, g);
      const Permutation members[6] = {
          compose(b(g), a(h).inverse(), b(g).inverse(), a(h)),
          compose(a(gh).inverse(), a(g), a(h)),
          compose(b(gh), b(g).inverse(), b(h).inverse()),
          compose(a(g).inverse(), b(h), a(g), b(h).inverse()),
          compose(a(g).inverse(), a(h).inverse(), a(hg)),
          compose(b(g), b(h), b(hg).inverse()),
      };
      ++report.checked;
      for (int i = 1; i < 6; ++i)
        if (!(members[i] == members[0])) {
          report.add_violation(g, h, members[0], members[i]);
          break;
        }
    }
  return report;
}

}  // namespace

std::vector<RelationReport> minimality_check(const TrialityTriple& t) {
  const CayleyTable& loop = t.base.loop();
  std::vector<RelationReport> reports;
  reports.push_back(
      minimality_chain("minimality chain (S,T)", loop, t.base.s_family(),
                       t.base.t_family()));
  reports.push_back(
      minimality_chain("minimality chain (T,P)", loop, t.base.t_family(), t.p));
  reports.push_back(
      minimality_chain("minimality chain (P,S)", loop, t.p, t.base.s_family()));
  return reports;
}

bool is_associative_birep(const Birepresentation& birep) {
  const CayleyTable& loop = birep.loop();
  const int n = loop.order();
  // With the right-factor-first composition the T-family closes with the
  // reversed subscript: full S T commutation turns S_g T_g T_h = T_{hg} S_g
  // into T_g T_h = T_{hg}, so the three equivalent conditions are
  // S-homomorphy, reversed T-homomorphy, and S T commutation.
  bool s_closes = true, t_closes = true, st_commute = true;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (!(compose(birep.S(g), birep.S(h)) == birep.S(loop.at(g, h))))
        s_closes = false;
      if (!(compose(birep.T(g), birep.T(h)) == birep.T(loop.at(h, g))))
        t_closes = false;
      if (!(compose(birep.S(g), birep.T(h)) == compose(birep.T(h), birep.S(g))))
        st_commute = false;
    }
  if (s_closes != t_closes || s_closes != st_commute)
    throw std::logic_error("associativity criteria disagree");
  return s_closes;
}

}  // namespace moufang
