#pragma once

#include <istream>
#include <string>

#include "tleaf/numerics.hpp"

namespace tleaf::cli {

/// Input that could not be turned into a matrix; the message carries the position.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square complex matrix from JSON: an array of rows whose entries are
/// [re, im] pairs or plain numbers.
CMatrix parse_matrix(const std::string& text);
CMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const CMatrix& m);

}  // namespace tleaf::cli
