#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace moufang {

// A bijection of [0, degree). Value type; equality and hashing go by the
// image array. Composition convention throughout the library: the right
// factor is applied first, so compose(a, b) maps x to a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  // "[1 2 3 0]"
  std::string to_string() const;
  // "(0 1 2 3)"; fixed points omitted, identity renders as "()"
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

Permutation compose(const Permutation& a, const Permutation& b);
Permutation compose(const Permutation& a, const Permutation& b,
                    const Permutation& c);
Permutation compose(const Permutation& a, const Permutation& b,
                    const Permutation& c, const Permutation& d);
Permutation inverse_perm(const Permutation& p);

inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace moufang
