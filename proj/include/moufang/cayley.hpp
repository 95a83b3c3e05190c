#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace moufang {

// Element of a table, an index in [0, order).
using element_t = int;

// An n-by-n multiplication table over element indices: at(i, j) = i*j.
// Entries are range-checked at construction; labels, when present, must be
// n distinct strings.
class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(std::vector<std::vector<int>> rows,
                       std::vector<std::string> labels = {});

  int order() const { return static_cast<int>(rows_.size()); }
  int at(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  // Label when present, else the decimal index.
  std::string label(int i) const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  std::vector<std::string> labels_;
};

// Text format: first line n, then n rows of n whitespace-separated entries
// in [0, n); trailing lines starting with '#' are comments. A trailing
// "# labels: a b c ..." comment round-trips element labels.
CayleyTable parse_cayley_table(std::string_view text);

// Canonical text form; parse_cayley_table(format_cayley_table(t)) == t and
// the byte stream is stable under a format/parse round trip.
std::string format_cayley_table(const CayleyTable& table);

}  // namespace moufang
