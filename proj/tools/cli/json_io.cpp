#include "cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tleaf::cli {

using nlohmann::json;

CMatrix parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_array() || doc.empty()) throw InputError("matrix must be a non-empty array of rows");
  const auto size = doc.size();
  CMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    const auto& row = doc[i];
    if (!row.is_array() || row.size() != size)
      throw InputError("row " + std::to_string(i) + ": expected " + std::to_string(size) + " entries");
    for (std::size_t j = 0; j < size; ++j) {
      const auto& e = row[j];
      const std::string where = "entry (" + std::to_string(i) + ", " + std::to_string(j) + ")";
      if (e.is_number()) {
        m(i, j) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, j) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw InputError(where + ": expected [re, im] or a number");
      }
    }
  }
  return m;
}

CMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string format_matrix(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows.dump();
}

}  // namespace tleaf::cli
