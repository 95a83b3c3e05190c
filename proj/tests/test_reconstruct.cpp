#include <doctest.h>

#include <random>

#include "moufang/catalog.hpp"
#include "moufang/classify.hpp"
#include "moufang/errors.hpp"
#include "moufang/reconstruct.hpp"

using namespace moufang;

namespace {

const CayleyTable& m12() {
  static const CayleyTable t = chein_double(symmetric3());
  return t;
}

// Order-5 quasigroup (2i + j) mod 5: Latin but has no unit.
CayleyTable q5() {
  std::vector<std::vector<int>> rows(5, std::vector<int>(5));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (2 * i + j) % 5;
  return CayleyTable(std::move(rows));
}

// Extends a passing input with a clone of element `dup`: the new element
// carries identical S/T/P rows and bar image, so conditions 1-3 still hold
// while condition 4 gains a witness pair.
ReconstructionInput clone_element(const ReconstructionInput& in, element_t dup) {
  const int n = in.groupoid.order();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n + 1),
                                     std::vector<int>(static_cast<std::size_t>(n + 1)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      const int src_i = i == n ? dup : i;
      const int src_j = j == n ? dup : j;
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          in.groupoid.at(src_i, src_j);
    }
  ReconstructionInput out;
  out.groupoid = CayleyTable(std::move(rows));
  out.degree = in.degree;
  out.s = in.s;
  out.t = in.t;
  out.p = in.p;
  out.bar = in.bar;
  out.s.push_back(in.s[static_cast<std::size_t>(dup)]);
  out.t.push_back(in.t[static_cast<std::size_t>(dup)]);
  out.p.push_back(in.p[static_cast<std::size_t>(dup)]);
  out.bar.push_back(in.bar[static_cast<std::size_t>(dup)]);
  return out;
}

}  // namespace

TEST_CASE("the regular triple of every catalog Moufang loop is certified") {
  for (const auto& entry : builtin_catalog()) {
    const ReconstructionInput input = reconstruct_from_regular(entry.table);
    const ReconstructionVerdict verdict = check_conditions(input);
    INFO(entry.name);
    REQUIRE(verdict.is_moufang_loop);
    CHECK(verdict.unit == unit(entry.table));
    for (int g = 0; g < entry.table.order(); ++g)
      CHECK(verdict.inverse_map[static_cast<std::size_t>(g)] ==
            inverse(entry.table, g));
    CHECK_FALSE(verdict.failed.has_value());
  }
}

TEST_CASE("a one-element groupoid with identity families is certified") {
  ReconstructionInput in;
  in.groupoid = CayleyTable(std::vector<std::vector<int>>{{0}});
  in.degree = 1;
  in.s = {identity_transformation(1)};
  in.t = {identity_transformation(1)};
  in.p = {identity_transformation(1)};
  in.bar = {0};
  const ReconstructionVerdict verdict = check_conditions(in);
  CHECK(verdict.is_moufang_loop);
  CHECK(verdict.unit == 0);
}

TEST_CASE("cloning an element defeats exactly condition 4") {
  const ReconstructionInput base = reconstruct_from_regular(m12());
  const ReconstructionVerdict verdict = check_conditions(clone_element(base, 11));
  CHECK_FALSE(verdict.is_moufang_loop);
  REQUIRE(verdict.failed.has_value());
  CHECK(verdict.failed->condition == 4);
  CHECK(verdict.failed->g == 11);
  CHECK(verdict.failed->h == 12);
}

TEST_CASE("the forged non-Moufang order-5 quasigroup fails") {
  const CayleyTable table = q5();
  CHECK(classify(table).is_quasigroup);
  CHECK_FALSE(classify(table).is_loop);

  const ReconstructionInput input = forge_translation_input(table);
  const ReconstructionVerdict verdict = check_conditions(input);
  CHECK_FALSE(verdict.is_moufang_loop);
  REQUIRE(verdict.failed.has_value());
  CHECK(verdict.failed->condition == 2);  // no element inverts the translations
}

TEST_CASE("a non-Moufang order-5 loop fails as well") {
  // the first flexibility violator from the order-5 enumeration
  const CayleyTable loop({{0, 1, 2, 3, 4},
                          {1, 0, 3, 4, 2},
                          {2, 3, 4, 0, 1},
                          {3, 4, 1, 2, 0},
                          {4, 2, 0, 1, 3}});
  CHECK(classify(loop).is_loop);
  CHECK_FALSE(classify(loop).is_moufang);
  const ReconstructionVerdict verdict =
      check_conditions(forge_translation_input(loop));
  CHECK_FALSE(verdict.is_moufang_loop);
  CHECK(verdict.failed.has_value());
}

TEST_CASE("every transposition mutation of an S row is detected") {
  const ReconstructionInput base = reconstruct_from_regular(m12());
  int mutations = 0;
  for (int g = 0; g < 12; ++g)
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j) {
        ReconstructionInput mutated = base;
        std::swap(mutated.s[static_cast<std::size_t>(g)][static_cast<std::size_t>(i)],
                  mutated.s[static_cast<std::size_t>(g)][static_cast<std::size_t>(j)]);
        const ReconstructionVerdict verdict = check_conditions(mutated);
        CHECK_FALSE(verdict.is_moufang_loop);
        CHECK(verdict.failed.has_value());
        ++mutations;
      }
  CHECK(mutations == 12 * 66);
}

TEST_CASE("100 random single-entry overwrites of the S family are detected") {
  const ReconstructionInput base = reconstruct_from_regular(m12());
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 11);
  for (int trial = 0; trial < 100; ++trial) {
    ReconstructionInput mutated = base;
    const int g = pick(rng);
    const int x = pick(rng);
    int v = pick(rng);
    if (v == mutated.s[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)])
      v = (v + 1) % 12;
    mutated.s[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = v;
    const ReconstructionVerdict verdict = check_conditions(mutated);
    CHECK_FALSE(verdict.is_moufang_loop);
    CHECK(verdict.failed.has_value());
  }
}

TEST_CASE("reconstruct_from_regular rejects non-Moufang tables") {
  CHECK_THROWS_AS(reconstruct_from_regular(q5()), structure_error);
}

TEST_CASE("malformed inputs are rejected before checking") {
  ReconstructionInput in = reconstruct_from_regular(cyclic(2));
  in.bar.pop_back();
  CHECK_THROWS_AS(check_conditions(in), std::invalid_argument);
  ReconstructionInput in2 = reconstruct_from_regular(cyclic(2));
  in2.s[0] = {0, 5};
  CHECK_THROWS_AS(check_conditions(in2), std::invalid_argument);
}
