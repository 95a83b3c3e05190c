#include "moufang/reconstruct.hpp"

#include <stdexcept>

#include "moufang/classify.hpp"
#include "moufang/errors.hpp"
#include "moufang/perm.hpp"

namespace moufang {

Transformation identity_transformation(int degree) {
  Transformation t(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) t[static_cast<std::size_t>(i)] = i;
  return t;
}

Transformation compose_maps(const Transformation& a, const Transformation& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compose_maps: degree mismatch");
  Transformation out(a.size());
  for (std::size_t x = 0; x < b.size(); ++x)
    out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

bool is_identity_map(const Transformation& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != static_cast<int>(i)) return false;
  return true;
}

namespace {

void require_well_formed(const ReconstructionInput& in) {
  const int n = in.groupoid.order();
  if (n == 0) throw std::invalid_argument("empty groupoid");
  if (static_cast<int>(in.s.size()) != n || static_cast<int>(in.t.size()) != n ||
      static_cast<int>(in.p.size()) != n)
    throw std::invalid_argument("families must be defined on the full carrier");
  if (static_cast<int>(in.bar.size()) != n)
    throw std::invalid_argument("bar map must be defined on the full carrier");
  for (element_t b : in.bar)
    if (b < 0 || b >= n) throw std::invalid_argument("bar map value out of range");
  auto check_family = [&](const std::vector<Transformation>& f) {
    for (const auto& m : f) {
      if (static_cast<int>(m.size()) != in.degree)
        throw std::invalid_argument("family degree mismatch");
      for (int v : m)
        if (v < 0 || v >= in.degree)
          throw std::invalid_argument("transformation value out of range");
    }
  };
  check_family(in.s);
  check_family(in.t);
  check_family(in.p);
}

}  // namespace

ReconstructionVerdict check_conditions(const ReconstructionInput& in) {
  require_well_formed(in);
  const int n = in.groupoid.order();
  ReconstructionVerdict verdict;

  auto fail = [&](int condition, int g, int h, std::string detail) {
    verdict.failed = ConditionWitness{condition, g, h, std::move(detail)};
    return verdict;
  };

  // 1) S_g T_g P_g = 1
  for (int g = 0; g < n; ++g) {
    const std::size_t gi = static_cast<std::size_t>(g);
    if (!is_identity_map(compose_maps(in.s[gi], compose_maps(in.t[gi], in.p[gi]))))
      return fail(1, g, -1, "S_g T_g P_g != 1");
  }

  // 2) S_{g-bar} and T_{g-bar} invert S_g and T_g two-sidedly
  for (int g = 0; g < n; ++g) {
    const std::size_t gi = static_cast<std::size_t>(g);
    const std::size_t bi = static_cast<std::size_t>(in.bar[gi]);
    if (!is_identity_map(compose_maps(in.s[gi], in.s[bi])) ||
        !is_identity_map(compose_maps(in.s[bi], in.s[gi])))
      return fail(2, g, -1, "S_{g-bar} does not invert S_g");
    if (!is_identity_map(compose_maps(in.t[gi], in.t[bi])) ||
        !is_identity_map(compose_maps(in.t[bi], in.t[gi])))
      return fail(2, g, -1, "T_{g-bar} does not invert T_g");
  }

  // 3) the six shifted relations with g-bar in place of g^-1
  struct Rel {
    const char* name;
    const std::vector<Transformation>* lhs_family;
    const std::vector<Transformation>* a;  // word a(g) b(h) c(g)
    const std::vector<Transformation>* b;
    const std::vector<Transformation>* c;
    bool left_shift;  // subscript (g-bar)h, else h(g-bar)
  };
  const Rel relations[6] = {
      {"S_{g-bar h} = P_g S_h T_g", &in.s, &in.p, &in.s, &in.t, true},
      {"T_{g-bar h} = S_g T_h P_g", &in.t, &in.s, &in.t, &in.p, true},
      {"P_{g-bar h} = T_g P_h S_g", &in.p, &in.t, &in.p, &in.s, true},
      {"S_{h g-bar} = T_g S_h P_g", &in.s, &in.t, &in.s, &in.p, false},
      {"T_{h g-bar} = P_g T_h S_g", &in.t, &in.p, &in.t, &in.s, false},
      {"P_{h g-bar} = S_g P_h T_g", &in.p, &in.s, &in.p, &in.t, false},
  };
  for (const Rel& rel : relations)
    for (int g = 0; g < n; ++g) {
      const std::size_t gi = static_cast<std::size_t>(g);
      const element_t gbar = in.bar[gi];
      for (int h = 0; h < n; ++h) {
        const std::size_t hi = static_cast<std::size_t>(h);
        const element_t shifted = rel.left_shift ? in.groupoid.at(gbar, h)
                                                 : in.groupoid.at(h, gbar);
        const Transformation rhs = compose_maps(
            (*rel.a)[gi], compose_maps((*rel.b)[hi], (*rel.c)[gi]));
        if ((*rel.lhs_family)[static_cast<std::size_t>(shifted)] != rhs)
          return fail(3, g, h, rel.name);
      }
    }

  // 4) joint injectivity of g -> (S_g, T_g)
  for (int g = 0; g < n; ++g)
    for (int h = g + 1; h < n; ++h)
      if (in.s[static_cast<std::size_t>(g)] == in.s[static_cast<std::size_t>(h)] &&
          in.t[static_cast<std::size_t>(g)] == in.t[static_cast<std::size_t>(h)])
        return fail(4, g, h, "S_g = S_h and T_g = T_h for distinct g, h");

  // Conditions hold; re-derive the conclusion from the table itself. A
  // failure past this point would contradict the conditions and can only be
  // an implementation bug.
  const element_t e = in.groupoid.at(0, in.bar[0]);
  for (int g = 0; g < n; ++g) {
    const std::size_t gi = static_cast<std::size_t>(g);
    if (in.groupoid.at(g, in.bar[gi]) != e || in.groupoid.at(in.bar[gi], g) != e)
      throw std::logic_error("unit g*g-bar is not independent of g");
  }
  for (int g = 0; g < n; ++g)
    if (in.groupoid.at(e, g) != g || in.groupoid.at(g, e) != g)
      throw std::logic_error("derived element e is not a two-sided unit");

  const AlgebraClass cls = classify(in.groupoid);
  if (!cls.is_moufang)
    throw std::logic_error("conditions hold but the table is not a Moufang loop");

  verdict.is_moufang_loop = true;
  verdict.unit = e;
  verdict.inverse_map = in.bar;
  return verdict;
}

ReconstructionInput forge_translation_input(const CayleyTable& table) {
  const int n = table.order();
  ReconstructionInput in;
  in.groupoid = table;
  in.degree = n;
  for (int g = 0; g < n; ++g) {
    Transformation s(static_cast<std::size_t>(n)), t(static_cast<std::size_t>(n));
    for (int h = 0; h < n; ++h) {
      s[static_cast<std::size_t>(h)] = table.at(g, h);
      t[static_cast<std::size_t>(h)] = table.at(h, g);
    }
    const Transformation st = compose_maps(s, t);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    bool bijective = true;
    for (int v : st) {
      if (seen[static_cast<std::size_t>(v)]) bijective = false;
      seen[static_cast<std::size_t>(v)] = 1;
    }
    Transformation p = identity_transformation(n);
    if (bijective)
      for (int x = 0; x < n; ++x)
        p[static_cast<std::size_t>(st[static_cast<std::size_t>(x)])] = x;
    in.s.push_back(std::move(s));
    in.t.push_back(std::move(t));
    in.p.push_back(std::move(p));
  }
  for (int g = 0; g < n; ++g) {
    element_t bar = g;
    for (int x = 0; x < n; ++x) {
      if (is_identity_map(compose_maps(in.s[static_cast<std::size_t>(g)],
                                       in.s[static_cast<std::size_t>(x)])) &&
          is_identity_map(compose_maps(in.s[static_cast<std::size_t>(x)],
                                       in.s[static_cast<std::size_t>(g)])) &&
          is_identity_map(compose_maps(in.t[static_cast<std::size_t>(g)],
                                       in.t[static_cast<std::size_t>(x)])) &&
          is_identity_map(compose_maps(in.t[static_cast<std::size_t>(x)],
                                       in.t[static_cast<std::size_t>(g)]))) {
        bar = x;
        break;
      }
    }
    in.bar.push_back(bar);
  }
  return in;
}

ReconstructionInput reconstruct_from_regular(const CayleyTable& loop) {
  const AlgebraClass cls = classify(loop);
  if (!cls.is_moufang)
    throw structure_error("reconstruction input requires a Moufang loop");
  const int n = loop.order();

  ReconstructionInput in;
  in.groupoid = loop;
  in.degree = n;
  for (int g = 0; g < n; ++g) {
    const Permutation L = left_translation(loop, g);
    const Permutation R = right_translation(loop, g);
    in.s.push_back(L.image());
    in.t.push_back(R.image());
    in.p.push_back(compose(L.inverse(), R.inverse()).image());
    in.bar.push_back(inverse(loop, g));
  }
  return in;
}

}  // namespace moufang
