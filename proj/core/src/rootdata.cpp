#include "tleaf/rootdata.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "tleaf/errors.hpp"

namespace tleaf {

int PositiveRoot::height() const { return std::accumulate(coeffs.begin(), coeffs.end(), 0); }

RootDatum RootDatum::type_a(int n) {
  if (n < 1) throw ConfigurationError("type A requires n >= 1, got " + std::to_string(n));
  RootDatum d;
  d.type_ = RootType::A;
  d.label_ = "A" + std::to_string(n);
  d.a_n_ = n;
  d.cartan_ = IntMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    d.cartan_(i, i) = 2;
    if (i + 1 < n) d.cartan_(i, i + 1) = d.cartan_(i + 1, i) = -1;
  }
  // alpha_ij = alpha_i + ... + alpha_{j-1}, 0 <= i < j <= n, lexicographic.
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      PositiveRoot r;
      r.coeffs.assign(n, 0);
      for (int k = i; k < j; ++k) r.coeffs[k] = 1;
      d.positive_.push_back(std::move(r));
    }
  return d;
}

RootDatum RootDatum::d4() {
  RootDatum d;
  d.type_ = RootType::D4;
  d.label_ = "D4";
  // alpha_2 (index 1) is the central node.
  d.cartan_ = IntMatrix(4, 4);
  for (int i = 0; i < 4; ++i) d.cartan_(i, i) = 2;
  for (int leaf : {0, 2, 3}) d.cartan_(leaf, 1) = d.cartan_(1, leaf) = -1;

  // Positive roots as the positive part of the W-orbit of the simple roots.
  std::set<std::vector<long long>> seen;
  std::deque<std::vector<long long>> queue;
  for (int i = 0; i < 4; ++i) {
    std::vector<long long> e(4, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto r = queue.front();
    queue.pop_front();
    for (int i = 0; i < 4; ++i) {
      // s_i(r) = r - <alpha_i^vee, r> alpha_i
      long long c = 0;
      for (int j = 0; j < 4; ++j) c += d.cartan_(i, j) * r[j];
      auto s = r;
      s[i] -= c;
      if (std::all_of(s.begin(), s.end(), [](long long v) { return v >= 0; }) && seen.insert(s).second)
        queue.push_back(s);
    }
  }
  std::vector<std::vector<long long>> roots(seen.begin(), seen.end());
  std::stable_sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), 0LL) < std::accumulate(b.begin(), b.end(), 0LL);
  });
  for (const auto& r : roots) d.positive_.push_back(PositiveRoot{std::vector<int>(r.begin(), r.end())});
  return d;
}

RootDatum RootDatum::product(const std::vector<RootDatum>& factors) {
  if (factors.empty()) throw ConfigurationError("product of zero root data");
  RootDatum d;
  d.type_ = RootType::Product;
  d.factors_ = static_cast<int>(factors.size());
  std::size_t total = 0;
  for (const auto& f : factors) total += f.rank();
  d.cartan_ = IntMatrix(total, total);
  std::size_t at = 0;
  bool all_same_a = true;
  for (const auto& f : factors) {
    d.label_ += (d.label_.empty() ? "" : "x") + f.label();
    for (int i = 0; i < f.rank(); ++i)
      for (int j = 0; j < f.rank(); ++j) d.cartan_(at + i, at + j) = f.cartan_(i, j);
    for (const auto& r : f.positive_) {
      PositiveRoot p;
      p.coeffs.assign(total, 0);
      std::copy(r.coeffs.begin(), r.coeffs.end(), p.coeffs.begin() + static_cast<long>(at));
      d.positive_.push_back(std::move(p));
    }
    at += f.rank();
    all_same_a = all_same_a && f.type_ == RootType::A && f.a_n_ == factors.front().a_n_;
  }
  d.a_n_ = all_same_a ? factors.front().a_n_ : 0;
  return d;
}

long long RootDatum::pairing(const std::vector<long long>& a, const std::vector<long long>& b) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a[i] * cartan_(i, j) * b[j];
  return s;
}

int RootDatum::find_positive(const std::vector<long long>& coeffs) const {
  for (std::size_t a = 0; a < positive_.size(); ++a) {
    if (std::equal(coeffs.begin(), coeffs.end(), positive_[a].coeffs.begin())) return static_cast<int>(a);
  }
  return -1;
}

RootDatum build_root_datum(std::string_view type_label, int n) {
  if (type_label == "A") return RootDatum::type_a(n);
  if (type_label == "D4" || type_label == "D") {
    if (type_label == "D" && n != 4) throw ConfigurationError("only D4 is supported");
    return RootDatum::d4();
  }
  throw ConfigurationError("unsupported root type '" + std::string(type_label) + "'");
}

MatrixRealization::MatrixRealization(int n, int copies) : n_(n), copies_(copies) {
  if (n < 1) throw ConfigurationError("sl(n+1) realization requires n >= 1");
  if (copies < 1) throw ConfigurationError("realization requires at least one factor");
  std::vector<RootDatum> factors(copies, RootDatum::type_a(n));
  datum_ = copies == 1 ? factors.front() : RootDatum::product(factors);

  const int nb = n + 1;
  const int size = nb * copies;
  // Gram-Schmidt on e_ii - e_{i+1,i+1} under 2 tr(XY), block by block.
  std::vector<CMatrix> ys;
  for (int c = 0; c < copies; ++c) {
    std::vector<CMatrix> block_ys;
    for (int i = 0; i < n; ++i) {
      CMatrix h = CMatrix::Zero(size, size);
      h(c * nb + i, c * nb + i) = 1.0;
      h(c * nb + i + 1, c * nb + i + 1) = -1.0;
      for (const auto& q : block_ys) h -= 2.0 * form(h, q) * q;
      h /= std::sqrt(2.0 * form(h, h).real());
      block_ys.push_back(h);
    }
    ys.insert(ys.end(), block_ys.begin(), block_ys.end());
  }
  basis_ = ys;
  for (int c = 0; c < copies; ++c)
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) roots_.emplace_back(c * nb + i, c * nb + j);
  for (auto [i, j] : roots_) {
    CMatrix e = CMatrix::Zero(size, size);
    e(i, j) = 1.0;
    basis_.push_back(e);
  }
  for (auto [i, j] : roots_) {
    CMatrix e = CMatrix::Zero(size, size);
    e(j, i) = 1.0;
    basis_.push_back(e);
  }
}

CMatrix MatrixRealization::simple_coroot(int i) const {
  const int c = i / n_;
  const int local = i % n_;
  const int nb = n_ + 1;
  CMatrix h = CMatrix::Zero(matrix_size(), matrix_size());
  h(c * nb + local, c * nb + local) = 1.0;
  h(c * nb + local + 1, c * nb + local + 1) = -1.0;
  return h;
}

CVector MatrixRealization::coordinates(const CMatrix& v) const {
  const int size = matrix_size();
  if (v.rows() != size || v.cols() != size)
    throw DomainError("coordinates: expected a " + std::to_string(size) + "x" + std::to_string(size) + " matrix");
  const double scale = std::max(v.cwiseAbs().maxCoeff(), 1.0);
  const double tol = 1e-10 * scale;
  const int nb = n_ + 1;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      if (i / nb != j / nb && std::abs(v(i, j)) > tol)
        throw DomainError("coordinates: matrix has entries outside the diagonal blocks");
  for (int c = 0; c < copies_; ++c) {
    const Complex tr = v.block(c * nb, c * nb, nb, nb).trace();
    if (std::abs(tr) > tol) throw DomainError("coordinates: matrix is not traceless");
  }
  CVector out(dim());
  for (int i = 0; i < cartan_dim(); ++i) {
    Complex s = 0.0;
    for (int d = 0; d < size; ++d) s += v(d, d) * basis_[i](d, d);
    out(i) = 2.0 * s;
  }
  for (int a = 0; a < num_positive(); ++a) {
    auto [i, j] = roots_[a];
    out(pos_index(a)) = v(i, j);
    out(neg_index(a)) = v(j, i);
  }
  return out;
}

CMatrix MatrixRealization::reconstruct(const CVector& c) const {
  CMatrix out = CMatrix::Zero(matrix_size(), matrix_size());
  for (int b = 0; b < dim(); ++b) out += c(b) * basis_[b];
  return out;
}

CMatrix MatrixRealization::adjoint(const CMatrix& g) const {
  const CMatrix ginv = g.partialPivLu().inverse();
  return linear_map([&](const CMatrix& x) { return CMatrix(g * x * ginv); });
}

CMatrix MatrixRealization::gram() const {
  CMatrix out(dim(), dim());
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) out(a, b) = form(basis_[a], basis_[b]);
  return out;
}

MatrixRealization build_sl_realization(int n) { return MatrixRealization(n, 1); }
MatrixRealization build_product_realization(int n, int copies) { return MatrixRealization(n, copies); }

}  // namespace tleaf
