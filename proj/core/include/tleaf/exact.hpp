#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tleaf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense integer matrix, row-major. Weyl group elements and diagram
/// automorphisms live here (simple-root basis, entries are always integral).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long long& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  long long operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<long long>& data() const { return data_; }

  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix operator+(const IntMatrix& other) const;
  IntMatrix operator-(const IntMatrix& other) const;
  IntMatrix operator-() const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& other) const = default;
  auto operator<=>(const IntMatrix& other) const = default;

  std::vector<long long> apply(const std::vector<long long>& v) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long long> data_;
};

/// Dense exact rational matrix.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit ExactMatrix(const IntMatrix& m);
  static ExactMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  ExactMatrix operator*(const ExactMatrix& other) const;
  ExactMatrix operator+(const ExactMatrix& other) const;
  ExactMatrix operator-(const ExactMatrix& other) const;
  ExactMatrix operator-() const;
  bool operator==(const ExactMatrix& other) const = default;

  /// Horizontal concatenation [this | other].
  ExactMatrix hcat(const ExactMatrix& other) const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination after clearing row denominators.
int exact_rank(const ExactMatrix& m);
inline int exact_rank(const IntMatrix& m) { return exact_rank(ExactMatrix(m)); }

/// dim ker of a square matrix.
int exact_dim_ker(const ExactMatrix& m);

/// Basis of the kernel (columns), exact.
ExactMatrix exact_kernel(const ExactMatrix& m);

}  // namespace tleaf
