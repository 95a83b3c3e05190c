#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "moufang/catalog.hpp"
#include "moufang/classify.hpp"
#include "moufang/errors.hpp"

using namespace moufang;

TEST_CASE("cyclic tables") {
  CHECK(cyclic(1).order() == 1);
  CHECK(cyclic(2) == CayleyTable({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(cyclic(0), std::invalid_argument);

  const AlgebraClass c = classify(cyclic(6));
  CHECK(c.is_group);
  CHECK(c.is_commutative);
}

TEST_CASE("symmetric3 is the expected nonabelian group") {
  const CayleyTable s3 = symmetric3();
  const AlgebraClass c = classify(s3);
  CHECK(c.is_group);
  CHECK_FALSE(c.is_commutative);
  CHECK(unit(s3) == 0);
  for (int g = 3; g < 6; ++g) CHECK(inverse(s3, g) == g);  // transpositions
  CHECK(inverse(s3, 1) == 2);                              // the 3-cycles
  // frozen from composing the image arrays directly
  CHECK(s3.rows() == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5},
                                                   {1, 2, 0, 4, 5, 3},
                                                   {2, 0, 1, 5, 3, 4},
                                                   {3, 5, 4, 0, 2, 1},
                                                   {4, 3, 5, 1, 0, 2},
                                                   {5, 4, 3, 2, 1, 0}});
}

TEST_CASE("chein doubles") {
  CHECK(chein_double(cyclic(1)) == cyclic(2));

  const AlgebraClass c4 = classify(chein_double(cyclic(2)));
  CHECK(c4.is_group);
  CHECK(chein_double(cyclic(2)).order() == 4);

  const AlgebraClass m12 = classify(chein_double(symmetric3()));
  CHECK(m12.is_moufang);
  CHECK_FALSE(m12.is_group);

  CHECK_THROWS_AS(chein_double(chein_double(symmetric3())), structure_error);
}

TEST_CASE("chein double is Moufang for every catalog group of order <= 8") {
  for (const auto& entry : builtin_catalog()) {
    if (entry.table.order() > 8) continue;
    if (!classify(entry.table).is_group) continue;
    CHECK(classify(chein_double(entry.table)).is_moufang);
  }
}

TEST_CASE("chein double is a group exactly for abelian input") {
  for (const char* name : {"Z2", "Z4", "Z2xZ2", "S3"}) {
    const CayleyTable& g = catalog_entry(name).table;
    const bool abelian = classify(g).is_commutative;
    CHECK(classify(chein_double(g)).is_group == abelian);
  }
}

TEST_CASE("every catalog entry matches its expected classification") {
  for (const auto& entry : builtin_catalog()) {
    const AlgebraClass c = classify(entry.table);
    INFO("entry ", entry.name);
    CHECK(c.is_quasigroup == entry.expected.quasigroup);
    CHECK(c.is_loop == entry.expected.loop);
    CHECK(c.is_moufang == entry.expected.moufang);
    CHECK(c.is_group == entry.expected.group);
    CHECK(c.is_commutative == entry.expected.commutative);
  }
}

TEST_CASE("save/load round trip") {
  for (const char* name : {"Z4", "M_S3_2"}) {
    const CayleyTable& t = catalog_entry(name).table;
    std::stringstream buffer;
    save(t, buffer);
    CHECK(load(buffer) == t);
  }
}

TEST_CASE("file round trip is bit-exact") {
  const std::string path = "catalog_roundtrip_tmp.tbl";
  const CayleyTable& t = catalog_entry("M_S3_2").table;
  save_file(t, path);
  CHECK(load_file(path) == t);

  std::ifstream in(path, std::ios::binary);
  std::ostringstream bytes;
  bytes << in.rdbuf();
  CHECK(bytes.str() == format_cayley_table(t));
  std::remove(path.c_str());
}

TEST_CASE("loading a truncated file reports the line") {
  const std::string path = "catalog_truncated_tmp.tbl";
  {
    std::ofstream out(path);
    out << "3\n0 1 2\n1 2 0\n";
  }
  try {
    load_file(path);
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 4);
  }
  std::remove(path.c_str());
}

TEST_CASE("catalog lookup") {
  CHECK(catalog_entry("M_S3_2").table.order() == 12);
  CHECK(builtin_catalog().size() == 20);
  CHECK_THROWS_AS(catalog_entry("nope"), std::out_of_range);
}
