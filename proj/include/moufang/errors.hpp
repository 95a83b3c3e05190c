#pragma once

#include <stdexcept>
#include <string>

namespace moufang {

// Text input could not be parsed; line is 1-based.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A precondition on the algebraic structure of an input table failed
// (not a loop, left/right inverses differ, not a subloop, ...).
class structure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Candidate (S,T) families failed the defining relations at construction.
class birep_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A breadth-first closure exceeded its configured element cap.
class closure_cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moufang
