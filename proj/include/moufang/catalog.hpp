#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "moufang/cayley.hpp"

namespace moufang {

// Z_n: table[i][j] = (i + j) mod n.
CayleyTable cyclic(int n);

// Z2 x Z2 with index 2a + b.
CayleyTable klein_four();

// The symmetric group on three letters, ordered: identity, the two
// 3-cycles, then the three transpositions.
CayleyTable symmetric3();

// The order-2n double of a group G on pairs (g, eps):
//   (g,0)(h,0) = (gh,0)      (g,0)(h,1) = (hg,1)
//   (g,1)(h,0) = (gh^-1,1)   (g,1)(h,1) = (h^-1 g,0)
// Index mapping (g, eps) -> g + eps*n. Moufang for every group input,
// nonassociative exactly when G is nonabelian. Throws structure_error when
// the input is not a group.
CayleyTable chein_double(const CayleyTable& group);

void save(const CayleyTable& table, std::ostream& out);
void save_file(const CayleyTable& table, const std::string& path);
// Throws parse_error with a 1-based line number on malformed input.
CayleyTable load(std::istream& in);
CayleyTable load_file(const std::string& path);

// Expected classification summary for a shipped table.
struct ExpectedClass {
  bool quasigroup = true;
  bool loop = true;
  bool moufang = true;
  bool group = true;
  bool commutative = true;
};

struct CatalogEntry {
  std::string name;  // file stem, e.g. "Z4" or "M_S3_2"
  CayleyTable table;
  ExpectedClass expected;
};

// Z1..Z8, Z2xZ2, S3 and the doubles M(G,2) of each.
const std::vector<CatalogEntry>& builtin_catalog();

// Entry lookup by name; throws std::out_of_range when absent.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace moufang
