#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tleaf/exact.hpp"
#include "tleaf/rootdata.hpp"

namespace tleaf {

/// Permutation of the simple roots induced by an automorphism fixing (B, T).
struct DiagramAut {
  std::vector<int> perm;  // alpha_i -> alpha_{perm[i]}

  static DiagramAut identity(int rank);
  /// alpha_i -> alpha_{n+1-i} on A_n.
  static DiagramAut type_a_flip(int n);
  /// Cyclic shift of the factors of A_n^copies: factor f -> factor f-1.
  static DiagramAut factor_shift(int n, int copies);

  int rank() const { return static_cast<int>(perm.size()); }
  int order() const;
  bool is_identity() const;
  DiagramAut compose(const DiagramAut& inner) const;  // this after inner
  DiagramAut inverse() const;
  /// Matrix on h^* in the simple-root basis: column i is e_{perm[i]}.
  IntMatrix matrix() const;
  /// Throws ConfigurationError unless A_{perm(i) perm(j)} = A_{ij}.
  void validate(const RootDatum& datum) const;
  bool operator==(const DiagramAut&) const = default;
};

/// Triality of D4: fixes alpha_2 and cycles alpha_1 -> alpha_3 -> alpha_4 -> alpha_1.
DiagramAut d4_triality();

/// Weyl group element. Values are owned by a WeylGroup; `index` is the
/// position in that group's enumeration.
struct WeylElement {
  std::string group;
  std::size_t index = 0;
  IntMatrix action;              // on h^* in the simple-root basis
  std::vector<int> word;         // one reduced word, 0-based simple indices
  int length = 0;
  std::vector<int> permutation;  // type A only: w(i), 0-based

  bool operator==(const WeylElement& o) const { return group == o.group && index == o.index; }
  /// Cycle notation with 1-based letters, e.g. "(1 4)(2 3)"; "e" for identity.
  std::string cycle_string() const;
  std::string word_string() const;
};

class WeylGroup {
 public:
  /// Enumerates the whole group by breadth-first search over simple
  /// reflections; refuses groups larger than `max_order`.
  explicit WeylGroup(const RootDatum& datum, std::size_t max_order = 50000);

  const RootDatum& root_datum() const { return datum_; }
  const std::string& label() const { return datum_.label(); }
  int rank() const { return datum_.rank(); }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](std::size_t i) const { return elements_.at(i); }

  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }
  const WeylElement& simple_reflection(int i) const;
  /// Reflection s_beta for positive root index `a` of the root datum.
  const WeylElement& reflection(int a) const;

  const WeylElement& multiply(const WeylElement& a, const WeylElement& b) const;
  const WeylElement& inverse(const WeylElement& a) const;
  const WeylElement& from_matrix(const IntMatrix& m) const;
  const WeylElement& from_word(const std::vector<int>& word) const;
  /// Type A only; `perm[i] = w(i)` 0-based.
  const WeylElement& from_permutation(const std::vector<int>& perm) const;

  /// Bruhat order by the subword property on the stored reduced word of w.
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;
  /// All u <= w, as indices.
  std::vector<std::size_t> lower_interval(const WeylElement& w) const;
  /// Cover relations u < w = u s_beta with l(w) = l(u) + 1, as index pairs.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

  /// theta(w) = theta w theta^{-1}.
  const WeylElement& twist(const WeylElement& w, const DiagramAut& theta) const;
  /// {v w theta(v)^{-1} : v in W}, sorted indices. Capacity limit 10^4.
  std::vector<std::size_t> twisted_class(const WeylElement& w, const DiagramAut& theta) const;
  /// Partition of W into theta-twisted classes.
  std::vector<std::vector<std::size_t>> twisted_classes(const DiagramAut& theta) const;
  /// Unique element of maximal length; AmbiguityError listing all maximizers on a tie.
  const WeylElement& max_length_element(const std::vector<std::size_t>& cls) const;

  bool is_involution(const WeylElement& w) const { return multiply(w, w) == identity(); }

  static constexpr std::size_t kTwistedClassCapacity = 10000;

 private:
  void check(const WeylElement& w) const;
  std::vector<bool> compute_ideal(std::size_t w) const;

  RootDatum datum_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<std::size_t>> right_simple_;
  std::map<std::vector<long long>, std::size_t> by_matrix_;
  std::map<std::vector<int>, std::size_t> by_permutation_;
  std::vector<std::size_t> reflections_;
  std::vector<std::vector<bool>> ideals_;  // filled eagerly for small groups
};

/// m_l = (1, n+1)(2, n)...(l, n+2-l) in S_{n+1} as a 0-based permutation.
std::vector<int> m_l_permutation(int n, int l);
/// The same element inside a type-A Weyl group.
const WeylElement& m_l(const WeylGroup& group, int l);

/// Number of inversions of a permutation.
int inversion_count(const std::vector<int>& perm);

}  // namespace tleaf
