#include "tleaf/weylgroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "tleaf/errors.hpp"

namespace tleaf {

// ---------------------------------------------------------------- DiagramAut

DiagramAut DiagramAut::identity(int rank) {
  DiagramAut d;
  d.perm.resize(rank);
  std::iota(d.perm.begin(), d.perm.end(), 0);
  return d;
}

DiagramAut DiagramAut::type_a_flip(int n) {
  DiagramAut d;
  for (int i = 0; i < n; ++i) d.perm.push_back(n - 1 - i);
  return d;
}

DiagramAut DiagramAut::factor_shift(int n, int copies) {
  DiagramAut d;
  for (int f = 0; f < copies; ++f)
    for (int i = 0; i < n; ++i) d.perm.push_back(((f - 1 + copies) % copies) * n + i);
  return d;
}

int DiagramAut::order() const {
  DiagramAut p = *this;
  int k = 1;
  while (!p.is_identity()) {
    p = p.compose(*this);
    ++k;
  }
  return k;
}

bool DiagramAut::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (perm[i] != i) return false;
  return true;
}

DiagramAut DiagramAut::compose(const DiagramAut& inner) const {
  DiagramAut d;
  d.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) d.perm[i] = perm[inner.perm[i]];
  return d;
}

DiagramAut DiagramAut::inverse() const {
  DiagramAut d;
  d.perm.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) d.perm[perm[i]] = static_cast<int>(i);
  return d;
}

IntMatrix DiagramAut::matrix() const {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(perm[i], i) = 1;
  return m;
}

void DiagramAut::validate(const RootDatum& datum) const {
  if (rank() != datum.rank()) throw ConfigurationError("diagram automorphism has the wrong rank");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < rank(); ++i)
    if (sorted[i] != i) throw ConfigurationError("diagram automorphism is not a permutation");
  const auto& a = datum.cartan_matrix();
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      if (a(perm[i], perm[j]) != a(i, j))
        throw ConfigurationError("permutation does not preserve the Cartan matrix");
}

DiagramAut d4_triality() { return DiagramAut{{2, 1, 3, 0}}; }

// --------------------------------------------------------------- WeylElement

std::string WeylElement::cycle_string() const {
  if (permutation.empty()) return word_string();
  std::ostringstream os;
  std::vector<bool> seen(permutation.size(), false);
  for (std::size_t i = 0; i < permutation.size(); ++i) {
    if (seen[i] || permutation[i] == static_cast<int>(i)) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<std::size_t>(permutation[j]);
    }
    os << ')';
  }
  const auto s = os.str();
  return s.empty() ? "e" : s;
}

std::string WeylElement::word_string() const {
  if (word.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << 's' << word[i] + 1;
  return os.str();
}

// ----------------------------------------------------------------- WeylGroup

WeylGroup::WeylGroup(const RootDatum& datum, std::size_t max_order) : datum_(datum) {
  const int k = datum_.rank();
  const auto& cartan = datum_.cartan_matrix();
  std::vector<IntMatrix> simple(k, IntMatrix::identity(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) simple[i](i, j) -= cartan(i, j);  // s_i(alpha_j) = alpha_j - A_ij alpha_i

  const bool type_a = datum_.type() == RootType::A;
  WeylElement e;
  e.group = datum_.label();
  e.index = 0;
  e.action = IntMatrix::identity(k);
  if (type_a) {
    e.permutation.resize(k + 1);
    std::iota(e.permutation.begin(), e.permutation.end(), 0);
  }
  elements_.push_back(e);
  by_matrix_[e.action.data()] = 0;

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < k; ++i) {
      IntMatrix m = elements_[cur].action * simple[i];
      if (by_matrix_.count(m.data())) continue;
      if (elements_.size() >= max_order)
        throw CapacityError("Weyl group of " + datum_.label() + " exceeds " + std::to_string(max_order) +
                            " elements");
      WeylElement w;
      w.group = datum_.label();
      w.index = elements_.size();
      w.action = std::move(m);
      w.word = elements_[cur].word;
      w.word.push_back(i);
      w.length = elements_[cur].length + 1;
      if (type_a) {
        w.permutation = elements_[cur].permutation;
        std::swap(w.permutation[i], w.permutation[i + 1]);
      }
      by_matrix_[w.action.data()] = w.index;
      queue.push_back(w.index);
      elements_.push_back(std::move(w));
    }
  }
  // BFS order is by length; move the (unique) longest element to the back.
  // It already is: BFS levels are non-decreasing and the top level has one element.

  right_simple_.assign(elements_.size(), std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < elements_.size(); ++a)
    for (int i = 0; i < k; ++i) right_simple_[a][i] = by_matrix_.at((elements_[a].action * simple[i]).data());
  if (type_a)
    for (const auto& w : elements_) by_permutation_[w.permutation] = w.index;

  for (int a = 0; a < datum_.num_positive_roots(); ++a) {
    const auto& beta = datum_.positive_roots()[a].coeffs;
    IntMatrix s = IntMatrix::identity(k);
    for (int j = 0; j < k; ++j) {
      long long pair = 0;
      for (int i = 0; i < k; ++i) pair += beta[i] * cartan(i, j);
      for (int i = 0; i < k; ++i) s(i, j) -= pair * beta[i];
    }
    reflections_.push_back(by_matrix_.at(s.data()));
  }

  if (elements_.size() <= 1000) {
    ideals_.reserve(elements_.size());
    for (std::size_t w = 0; w < elements_.size(); ++w) ideals_.push_back(compute_ideal(w));
  }
}

void WeylGroup::check(const WeylElement& w) const {
  if (w.group != datum_.label() || w.index >= elements_.size())
    throw DomainError("Weyl element of group " + w.group + " used with group " + datum_.label());
}

const WeylElement& WeylGroup::simple_reflection(int i) const {
  if (i < 0 || i >= rank()) throw DomainError("simple reflection index out of range");
  return elements_[right_simple_[0][i]];
}

const WeylElement& WeylGroup::reflection(int a) const {
  if (a < 0 || a >= static_cast<int>(reflections_.size())) throw DomainError("root index out of range");
  return elements_[reflections_[a]];
}

const WeylElement& WeylGroup::multiply(const WeylElement& a, const WeylElement& b) const {
  check(a);
  check(b);
  std::size_t cur = a.index;
  for (int i : b.word) cur = right_simple_[cur][i];
  return elements_[cur];
}

const WeylElement& WeylGroup::inverse(const WeylElement& a) const {
  check(a);
  std::size_t cur = 0;
  for (auto it = a.word.rbegin(); it != a.word.rend(); ++it) cur = right_simple_[cur][*it];
  return elements_[cur];
}

const WeylElement& WeylGroup::from_matrix(const IntMatrix& m) const {
  auto it = by_matrix_.find(m.data());
  if (it == by_matrix_.end() || m.rows() != static_cast<std::size_t>(rank()))
    throw DomainError("matrix is not an element of W(" + label() + ")");
  return elements_[it->second];
}

const WeylElement& WeylGroup::from_word(const std::vector<int>& word) const {
  std::size_t cur = 0;
  for (int i : word) {
    if (i < 0 || i >= rank()) throw DomainError("word letter out of range");
    cur = right_simple_[cur][i];
  }
  return elements_[cur];
}

const WeylElement& WeylGroup::from_permutation(const std::vector<int>& perm) const {
  if (datum_.type() != RootType::A) throw DomainError("permutations describe type A only");
  auto it = by_permutation_.find(perm);
  if (it == by_permutation_.end()) throw DomainError("not a permutation of the right size");
  return elements_[it->second];
}

std::vector<bool> WeylGroup::compute_ideal(std::size_t w) const {
  // Products of all subwords of one reduced word of w are exactly {u <= w}.
  std::vector<bool> in(elements_.size(), false);
  in[0] = true;
  std::vector<std::size_t> members{0};
  for (int letter : elements_[w].word) {
    const std::size_t count = members.size();
    for (std::size_t m = 0; m < count; ++m) {
      const std::size_t next = right_simple_[members[m]][letter];
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  return in;
}

bool WeylGroup::bruhat_leq(const WeylElement& u, const WeylElement& w) const {
  check(u);
  check(w);
  if (u.length > w.length) return false;
  if (!ideals_.empty()) return ideals_[w.index][u.index];
  return compute_ideal(w.index)[u.index];
}

std::vector<std::size_t> WeylGroup::lower_interval(const WeylElement& w) const {
  check(w);
  const auto ideal = ideals_.empty() ? compute_ideal(w.index) : ideals_[w.index];
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ideal.size(); ++i)
    if (ideal[i]) out.push_back(i);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> WeylGroup::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& u : elements_)
    for (std::size_t r : reflections_) {
      const auto& w = multiply(u, elements_[r]);
      if (w.length == u.length + 1) out.emplace_back(u.index, w.index);
    }
  return out;
}

const WeylElement& WeylGroup::twist(const WeylElement& w, const DiagramAut& theta) const {
  check(w);
  const IntMatrix p = theta.matrix();
  return from_matrix(p * w.action * p.transpose());
}

std::vector<std::size_t> WeylGroup::twisted_class(const WeylElement& w, const DiagramAut& theta) const {
  check(w);
  if (order() > kTwistedClassCapacity)
    throw CapacityError("twisted class enumeration limited to |W| <= 10^4");
  std::vector<bool> in(order(), false);
  for (const auto& v : elements_) {
    const auto& tv_inv = twist(inverse(v), theta);
    in[multiply(multiply(v, w), tv_inv).index] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> WeylGroup::twisted_classes(const DiagramAut& theta) const {
  std::vector<bool> done(order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& w : elements_) {
    if (done[w.index]) continue;
    auto cls = twisted_class(w, theta);
    for (auto i : cls) done[i] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

const WeylElement& WeylGroup::max_length_element(const std::vector<std::size_t>& cls) const {
  if (cls.empty()) throw DomainError("max_length_element of an empty set");
  int best = -1;
  std::vector<std::size_t> winners;
  for (auto i : cls) {
    const int l = elements_.at(i).length;
    if (l > best) {
      best = l;
      winners.clear();
    }
    if (l == best) winners.push_back(i);
  }
  if (winners.size() > 1) {
    std::ostringstream os;
    os << "maximal length " << best << " attained by " << winners.size() << " elements:";
    for (auto i : winners) os << ' ' << elements_[i].cycle_string();
    throw AmbiguityError(os.str(), winners);
  }
  return elements_[winners.front()];
}

std::vector<int> m_l_permutation(int n, int l) {
  if (n < 1) throw DomainError("m_l requires n >= 1");
  if (l < 0 || l > (n + 1) / 2)
    throw DomainError("m_l: l = " + std::to_string(l) + " outside [0, " + std::to_string((n + 1) / 2) + "]");
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 0);
  for (int j = 0; j < l; ++j) std::swap(p[j], p[n - j]);
  return p;
}

const WeylElement& m_l(const WeylGroup& group, int l) {
  return group.from_permutation(m_l_permutation(group.root_datum().type_a_n(), l));
}

int inversion_count(const std::vector<int>& perm) {
  int c = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++c;
  return c;
}

}  // namespace tleaf
