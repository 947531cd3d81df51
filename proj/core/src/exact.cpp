#include "tleaf/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace tleaf {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const long long a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const {
  IntMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

std::vector<long long> IntMatrix::apply(const std::vector<long long>& v) const {
  std::vector<long long> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

ExactMatrix::ExactMatrix(const IntMatrix& m) : ExactMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Rational(m(i, j));
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  ExactMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("ExactMatrix: shape mismatch");
  ExactMatrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out = *this;
  for (auto& v : out.data_) v = -v;
  return out;
}

ExactMatrix ExactMatrix::hcat(const ExactMatrix& other) const {
  if (rows_ != other.rows_) throw std::invalid_argument("ExactMatrix: row mismatch");
  ExactMatrix out(rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < other.cols_; ++j) out(i, cols_ + j) = other(i, j);
  }
  return out;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

std::vector<std::vector<BigInt>> integral_rows(const ExactMatrix& m) {
  std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const BigInt d = boost::multiprecision::denominator(m(i, j));
      lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational scaled = m(i, j) * Rational(lcm);
      rows[i][j] = boost::multiprecision::numerator(scaled);
    }
  }
  return rows;
}

}  // namespace

int exact_rank(const ExactMatrix& m) {
  auto a = integral_rows(m);
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a[piv][c] == 0) ++piv;
    if (piv == nr) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int exact_dim_ker(const ExactMatrix& m) {
  return static_cast<int>(m.cols()) - exact_rank(m);
}

ExactMatrix exact_kernel(const ExactMatrix& m) {
  // Reduced row echelon form over Q.
  ExactMatrix a = m;
  const std::size_t nr = a.rows();
  const std::size_t nc = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = r;
    while (piv < nr && a(piv, c) == 0) ++piv;
    if (piv == nr) continue;
    for (std::size_t j = 0; j < nc; ++j) std::swap(a(piv, j), a(r, j));
    const Rational p = a(r, c);
    for (std::size_t j = 0; j < nc; ++j) a(r, j) /= p;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < nc; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(nc, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < nc; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ExactMatrix k(nc, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], f) = -a(i, free_cols[f]);
  }
  return k;
}

}  // namespace tleaf
