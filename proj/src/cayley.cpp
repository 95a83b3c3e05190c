#include "moufang/cayley.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "moufang/errors.hpp"

namespace moufang {

CayleyTable::CayleyTable(std::vector<std::vector<int>> rows,
                         std::vector<std::string> labels)
    : rows_(std::move(rows)), labels_(std::move(labels)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("table must have positive order");
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("table rows must have length n");
    for (int v : row)
      if (v < 0 || v >= n)
        throw std::invalid_argument("table entry out of range");
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n)
      throw std::invalid_argument("labels must have exactly n entries");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (static_cast<int>(distinct.size()) != n)
      throw std::invalid_argument("labels must be distinct");
  }
}

std::string CayleyTable::label(int i) const {
  if (has_labels()) return labels_[static_cast<std::size_t>(i)];
  return std::to_string(i);
}

namespace {

// Splits into lines, keeping track of 1-based numbering.
std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

CayleyTable parse_cayley_table(std::string_view text) {
  const std::vector<std::string> lines = split_lines(text);
  std::size_t pos = 0;
  auto next_content_line = [&]() -> int {  // returns line index or -1
    while (pos < lines.size() && blank(lines[pos])) ++pos;
    return pos < lines.size() ? static_cast<int>(pos++) : -1;
  };

  const int header = next_content_line();
  if (header < 0) throw parse_error(1, "missing order header");
  int n = 0;
  {
    std::istringstream in(lines[static_cast<std::size_t>(header)]);
    std::string extra;
    if (!(in >> n) || n <= 0)
      throw parse_error(header + 1, "order header must be a positive integer");
    if (in >> extra)
      throw parse_error(header + 1, "unexpected token after order: '" + extra + "'");
  }

  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int li = next_content_line();
    if (li < 0)
      throw parse_error(static_cast<int>(lines.size()) + 1,
                        "expected " + std::to_string(n) + " rows, got " +
                            std::to_string(i));
    const std::string& line = lines[static_cast<std::size_t>(li)];
    if (!line.empty() && line[0] == '#')
      throw parse_error(li + 1, "expected a table row, found a comment");
    std::istringstream in(line);
    std::vector<int> row;
    int v;
    while (in >> v) {
      if (v < 0 || v >= n)
        throw parse_error(li + 1, "entry " + std::to_string(v) +
                                      " out of range [0, " + std::to_string(n) + ")");
      row.push_back(v);
    }
    if (!in.eof()) throw parse_error(li + 1, "non-integer token in row");
    if (static_cast<int>(row.size()) != n)
      throw parse_error(li + 1, "row has " + std::to_string(row.size()) +
                                    " entries, expected " + std::to_string(n));
    rows.push_back(std::move(row));
  }

  // Trailing lines must be comments; a "# labels:" comment restores labels.
  std::vector<std::string> labels;
  for (int li; (li = next_content_line()) >= 0;) {
    const std::string& line = lines[static_cast<std::size_t>(li)];
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] != '#')
      throw parse_error(li + 1, "unexpected content after table rows");
    const std::string comment = line.substr(first);
    const std::string prefix = "# labels:";
    if (comment.rfind(prefix, 0) == 0) {
      std::istringstream in(comment.substr(prefix.size()));
      std::string word;
      while (in >> word) labels.push_back(word);
      if (static_cast<int>(labels.size()) != n)
        throw parse_error(li + 1, "labels comment must list exactly n names");
    }
  }

  try {
    return CayleyTable(std::move(rows), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw parse_error(static_cast<int>(lines.size()), e.what());
  }
}

std::string format_cayley_table(const CayleyTable& table) {
  std::ostringstream out;
  const int n = table.order();
  out << n << '\n';
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j) out << ' ';
      out << table.at(i, j);
    }
    out << '\n';
  }
  if (table.has_labels()) {
    out << "# labels:";
    for (const auto& l : table.labels()) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

}  // namespace moufang
