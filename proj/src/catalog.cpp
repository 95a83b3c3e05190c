#include "moufang/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "moufang/classify.hpp"
#include "moufang/errors.hpp"

namespace moufang {

CayleyTable cyclic(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic: order must be positive");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  return CayleyTable(std::move(rows));
}

CayleyTable klein_four() {
  std::vector<std::vector<int>> rows(4, std::vector<int>(4));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          rows[static_cast<std::size_t>(2 * a + b)]
              [static_cast<std::size_t>(2 * c + d)] =
                  2 * ((a + c) % 2) + (b + d) % 2;
  return CayleyTable(std::move(rows));
}

CayleyTable symmetric3() {
  // e, (123), (132), (01), (02), (12) as image arrays on three points;
  // product applies the right factor first.
  const int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                           {1, 0, 2}, {2, 1, 0}, {0, 2, 1}};
  auto index_of = [&](const int* image) {
    for (int k = 0; k < 6; ++k)
      if (perms[k][0] == image[0] && perms[k][1] == image[1] &&
          perms[k][2] == image[2])
        return k;
    throw std::logic_error("composition left the permutation list");
  };
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      int image[3];
      for (int x = 0; x < 3; ++x) image[x] = perms[i][perms[j][x]];
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          index_of(image);
    }
  return CayleyTable(std::move(rows));
}

CayleyTable chein_double(const CayleyTable& group) {
  const AlgebraClass cls = classify(group);
  if (!cls.is_group)
    throw structure_error("chein_double requires a group table");
  const int n = group.order();
  std::vector<element_t> inv(static_cast<std::size_t>(n));
  for (int g = 0; g < n; ++g) inv[static_cast<std::size_t>(g)] = inverse(group, g);

  // pairs (g, eps) indexed as g + eps*n
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(2 * n),
                                     std::vector<int>(static_cast<std::size_t>(2 * n)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      rows[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
          group.at(g, h);
      rows[static_cast<std::size_t>(g)][static_cast<std::size_t>(h + n)] =
          group.at(h, g) + n;
      rows[static_cast<std::size_t>(g + n)][static_cast<std::size_t>(h)] =
          group.at(g, inv[static_cast<std::size_t>(h)]) + n;
      rows[static_cast<std::size_t>(g + n)][static_cast<std::size_t>(h + n)] =
          group.at(inv[static_cast<std::size_t>(h)], g);
    }
  CayleyTable result(std::move(rows));
  if (!classify(result).is_moufang)
    throw std::logic_error("chein double is not Moufang");
  return result;
}

void save(const CayleyTable& table, std::ostream& out) {
  out << format_cayley_table(table);
}

void save_file(const CayleyTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  save(table, out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

CayleyTable load(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_cayley_table(buffer.str());
}

CayleyTable load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return load(in);
}

namespace {

std::vector<CatalogEntry> build_catalog() {
  const ExpectedClass abelian_group{true, true, true, true, true};
  const ExpectedClass nonabelian_group{true, true, true, true, false};
  const ExpectedClass nonassoc_moufang{true, true, true, false, false};

  std::vector<CatalogEntry> entries;
  for (int n = 1; n <= 8; ++n)
    entries.push_back({"Z" + std::to_string(n), cyclic(n), abelian_group});
  entries.push_back({"Z2xZ2", klein_four(), abelian_group});
  entries.push_back({"S3", symmetric3(), nonabelian_group});

  // Chein doubles: M(G,2) of an abelian G is a group (dihedral for cyclic
  // G), commutative only for exponent-2 inputs; M(S3,2) is the
  // nonassociative workhorse.
  for (int n = 1; n <= 8; ++n) {
    const bool comm = n <= 2;
    entries.push_back({"M_Z" + std::to_string(n) + "_2",
                       chein_double(cyclic(n)),
                       {true, true, true, true, comm}});
  }
  entries.push_back({"M_Z2xZ2_2", chein_double(klein_four()), abelian_group});
  entries.push_back({"M_S3_2", chein_double(symmetric3()), nonassoc_moufang});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& entry : builtin_catalog())
    if (entry.name == name) return entry;
  throw std::out_of_range("no catalog entry named '" + name + "'");
}

}  // namespace moufang
