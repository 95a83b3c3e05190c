#include "moufang/classify.hpp"

#include <algorithm>
#include <set>

#include "moufang/errors.hpp"

namespace moufang {

namespace {

std::optional<element_t> find_unit(const CayleyTable& t) {
  const int n = t.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int g = 0; g < n && ok; ++g)
      ok = t.at(e, g) == g && t.at(g, e) == g;
    if (ok) return e;
  }
  return std::nullopt;
}

// Returns a quasigroup counterexample: {kind 0=row,1=col, index, value}.
std::optional<std::array<int, 3>> latin_violation(const CayleyTable& t) {
  const int n = t.order();
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) {
      int v = t.at(i, j);
      if (seen[static_cast<std::size_t>(v)]) return std::array<int, 3>{0, i, v};
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      int v = t.at(i, j);
      if (seen[static_cast<std::size_t>(v)]) return std::array<int, 3>{1, j, v};
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  return std::nullopt;
}

// The identity (gh)(kg) = g(hk)g, with the right side checked in both
// bracketings; either bracketing alone characterizes Moufang loops, so
// requiring both stays equivalent while keeping raw-table checks
// unambiguous.
std::optional<std::array<int, 3>> moufang_violation(const CayleyTable& t) {
  const int n = t.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        const int lhs = t.at(t.at(g, h), t.at(k, g));
        const int hk = t.at(h, k);
        if (lhs != t.at(t.at(g, hk), g) || lhs != t.at(g, t.at(hk, g)))
          return std::array<int, 3>{g, h, k};
      }
  return std::nullopt;
}

std::optional<std::array<int, 3>> assoc_violation(const CayleyTable& t) {
  const int n = t.order();
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k)
        if (t.at(t.at(g, h), k) != t.at(g, t.at(h, k)))
          return std::array<int, 3>{g, h, k};
  return std::nullopt;
}

}  // namespace

AlgebraClass classify(const CayleyTable& t) {
  AlgebraClass result;
  const int n = t.order();

  const auto latin_bad = latin_violation(t);
  result.is_quasigroup = !latin_bad.has_value();
  if (latin_bad) {
    const auto [kind, index, value] = *latin_bad;
    result.witnesses.push_back(
        {"quasigroup",
         {index, value, 0},
         std::string(kind == 0 ? "row " : "column ") + std::to_string(index) +
             " repeats entry " + std::to_string(value)});
  }

  result.unit = find_unit(t);
  result.is_loop = result.is_quasigroup && result.unit.has_value();
  if (!result.unit) {
    result.witnesses.push_back(
        {"loop", {0, 0, t.at(0, 0)}, "no two-sided unit element"});
  } else if (!result.is_quasigroup) {
    result.witnesses.push_back(
        {"loop", {*result.unit, 0, 0}, "not a quasigroup"});
  }

  if (result.is_loop) {
    const auto bad = moufang_violation(t);
    result.is_moufang = !bad.has_value();
    if (bad)
      result.witnesses.push_back(
          {"moufang", *bad, "(gh)(kg) != g(hk)g at (g,h,k)"});
  } else {
    result.is_moufang = false;
    result.witnesses.push_back({"moufang", {0, 0, 0}, "not a loop"});
  }

  if (result.is_moufang) {
    const auto bad = assoc_violation(t);
    result.is_group = !bad.has_value();
    if (bad)
      result.witnesses.push_back(
          {"group", *bad, "(gh)k != g(hk) at (g,h,k)"});
  } else {
    result.is_group = false;
    if (result.is_loop) {
      // associativity would imply the Moufang identity
      const auto bad = assoc_violation(t);
      result.witnesses.push_back(
          {"group", bad.value_or(std::array<int, 3>{0, 0, 0}), "not Moufang"});
    } else {
      result.witnesses.push_back({"group", {0, 0, 0}, "not a loop"});
    }
  }

  result.is_commutative = true;
  for (int g = 0; g < n && result.is_commutative; ++g)
    for (int h = 0; h < n; ++h)
      if (t.at(g, h) != t.at(h, g)) {
        result.is_commutative = false;
        result.witnesses.push_back(
            {"commutative", {g, h, t.at(g, h)}, "gh != hg at (g,h)"});
        break;
      }

  return result;
}

element_t unit(const CayleyTable& t) {
  const auto e = find_unit(t);
  if (!e) throw structure_error("not a loop: no two-sided unit");
  return *e;
}

element_t inverse(const CayleyTable& t, element_t g) {
  const element_t e = unit(t);
  const int n = t.order();
  int left = -1, right = -1;  // xg = e and gx = e
  for (int x = 0; x < n; ++x) {
    if (t.at(x, g) == e) left = x;
    if (t.at(g, x) == e) right = x;
  }
  if (left < 0 || right < 0)
    throw structure_error("element " + std::to_string(g) + " has no inverse");
  if (left != right)
    throw structure_error("left and right inverses of " + std::to_string(g) +
                          " differ (non-Moufang input)");
  return left;
}

Permutation left_translation(const CayleyTable& t, element_t g) {
  return Permutation(t.rows()[static_cast<std::size_t>(g)]);
}

Permutation right_translation(const CayleyTable& t, element_t g) {
  const int n = t.order();
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int h = 0; h < n; ++h) image[static_cast<std::size_t>(h)] = t.at(h, g);
  return Permutation(std::move(image));
}

bool DiassociativityReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

DiassociativityReport check_diassociativity_identities(const CayleyTable& t) {
  const int n = t.order();
  const element_t e = unit(t);

  // Per-side inverses so that non-Moufang loops produce a violation report
  // instead of failing to evaluate. For Moufang inputs both sides coincide
  // and the first check is vacuous.
  std::vector<element_t> left_inv(static_cast<std::size_t>(n)),
      right_inv(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) {
      if (t.at(x, g) == e) left_inv[static_cast<std::size_t>(g)] = x;
      if (t.at(g, x) == e) right_inv[static_cast<std::size_t>(g)] = x;
    }
  const auto& inv = left_inv;

  DiassociativityReport report;
  auto run = [&](const std::string& name, auto&& holds) {
    IdentityCheck check{name, true, {-1, -1}};
    for (int g = 0; g < n && check.passed; ++g)
      for (int h = 0; h < n; ++h)
        if (!holds(g, h)) {
          check.passed = false;
          check.witness = {g, h};
          break;
        }
    report.checks.push_back(std::move(check));
  };

  run("g^-1_L = g^-1_R", [&](int g, int) {
    return left_inv[static_cast<std::size_t>(g)] ==
           right_inv[static_cast<std::size_t>(g)];
  });
  run("g(gh) = (gg)h", [&](int g, int h) {
    return t.at(g, t.at(g, h)) == t.at(t.at(g, g), h);
  });
  run("(hg)g = h(gg)", [&](int g, int h) {
    return t.at(t.at(h, g), g) == t.at(h, t.at(g, g));
  });
  run("(gh)g = g(hg)", [&](int g, int h) {
    return t.at(t.at(g, h), g) == t.at(g, t.at(h, g));
  });
  run("g^-1(gh) = h", [&](int g, int h) {
    return t.at(inv[static_cast<std::size_t>(g)], t.at(g, h)) == h;
  });
  run("(hg)g^-1 = h", [&](int g, int h) {
    return t.at(t.at(h, g), right_inv[static_cast<std::size_t>(g)]) == h;
  });
  run("(g^-1)^-1 = g", [&](int g, int) {
    return inv[static_cast<std::size_t>(inv[static_cast<std::size_t>(g)])] == g;
  });
  run("(gh)^-1 = h^-1 g^-1", [&](int g, int h) {
    return inv[static_cast<std::size_t>(t.at(g, h))] ==
           t.at(inv[static_cast<std::size_t>(h)], inv[static_cast<std::size_t>(g)]);
  });
  return report;
}

std::vector<element_t> generated_subloop(const CayleyTable& t,
                                         const std::vector<element_t>& generators) {
  const element_t e = unit(t);
  std::set<element_t> members{e};
  for (element_t g : generators) members.insert(g);
  for (;;) {
    std::set<element_t> grown = members;
    for (element_t a : members) {
      grown.insert(inverse(t, a));
      for (element_t b : members) grown.insert(t.at(a, b));
    }
    if (grown.size() == members.size()) break;
    members = std::move(grown);
  }
  return {members.begin(), members.end()};
}

}  // namespace moufang
