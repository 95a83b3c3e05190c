#include "moufang/perm.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace moufang {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = degree();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : image_) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("permutation image entry out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation image entry repeated");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> image(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) image[static_cast<std::size_t>(i)] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < degree(); ++i)
    inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < degree(); ++i) {
    if (i) out << ' ';
    out << image_[static_cast<std::size_t>(i)];
  }
  out << ']';
  return out.str();
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<char> done(image_.size(), 0);
  bool any = false;
  for (int start = 0; start < degree(); ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start)
      continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      done[static_cast<std::size_t>(x)] = 1;
      x = (*this)(x);
      first = false;
    } while (x != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> image(static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x)
    image[static_cast<std::size_t>(x)] = a(b(x));
  return Permutation(std::move(image));
}

Permutation compose(const Permutation& a, const Permutation& b,
                    const Permutation& c) {
  return compose(a, compose(b, c));
}

Permutation compose(const Permutation& a, const Permutation& b,
                    const Permutation& c, const Permutation& d) {
  return compose(a, compose(b, compose(c, d)));
}

Permutation inverse_perm(const Permutation& p) { return p.inverse(); }

std::size_t PermHash::operator()(const Permutation& p) const {
  // FNV-1a over the image array
  std::size_t h = 1469598103934665603ull;
  for (int v : p.image()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace moufang
