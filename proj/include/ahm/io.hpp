#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ahm/matrix.hpp"

namespace ahm {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// AHM-MAT v1: first line is the order n, then n lines of n space-separated
// decimals printed with 17 significant digits. Reading accepts any whitespace.
void write_matrix(std::ostream& os, const SquareMatrix& m);
SquareMatrix read_matrix(std::istream& is);

std::string format_matrix(const SquareMatrix& m);
SquareMatrix parse_matrix(const std::string& text);

void save_matrix(const std::string& path, const SquareMatrix& m);
SquareMatrix load_matrix(const std::string& path);

}  // namespace ahm
