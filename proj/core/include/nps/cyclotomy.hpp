#pragma once

// Cyclotomic classes of the unit group of Z_q and the sequence constructions
// built from them.

#include <optional>
#include <string>
#include <vector>

#include "nps/sequence.hpp"

namespace nps {

/// Smallest generator of the unit group of Z_q. Requires q prime or q = 2p
/// with p an odd prime; throws std::invalid_argument otherwise.
Int unit_group_generator(Int q);

/// All generators of the unit group, ascending.
std::vector<Int> unit_group_generators(Int q);

class CyclotomicClasses {
 public:
  Int q() const noexcept { return q_; }
  int m() const noexcept { return m_; }
  Int f() const noexcept { return f_; }
  Int alpha() const noexcept { return alpha_; }

  /// D_k = {alpha^(m*i + k) mod q : i = 0..f-1}, sorted ascending.
  const std::vector<Int>& cls(int k) const { return classes_.at(static_cast<std::size_t>(k)); }
  const std::vector<std::vector<Int>>& classes() const noexcept { return classes_; }

  /// Index k with x in D_k, or nullopt for non-units (including 0).
  std::optional<int> class_of(Int x) const;

  friend CyclotomicClasses build_classes(Int q, int m, std::optional<Int> alpha);

 private:
  Int q_ = 0;
  int m_ = 0;
  Int f_ = 0;
  Int alpha_ = 0;
  std::vector<std::vector<Int>> classes_;
  std::vector<int> class_index_;  // -1 for non-units
};

/// The m-th cyclotomic classes. alpha defaults to the smallest generator and
/// must generate the unit group when given. Requires m | phi(q).
CyclotomicClasses build_classes(Int q, int m, std::optional<Int> alpha = std::nullopt);

/// A permutation of Z_m stored as an explicit table.
class Permutation {
 public:
  explicit Permutation(std::vector<int> table);
  static Permutation identity(int m);
  /// x -> (c*x + d) mod m, gcd(c, m) == 1.
  static Permutation affine(int m, int c, int d);

  int size() const noexcept { return static_cast<int>(table_.size()); }
  int operator()(int x) const { return table_.at(static_cast<std::size_t>(mod(x, size()))); }
  const std::vector<int>& table() const noexcept { return table_; }
  bool is_affine() const;

 private:
  std::vector<int> table_;
};

/// (k, l) = |(D_k + 1) n D_l|, indices taken mod m.
Int cyclotomic_number(const CyclotomicClasses& classes, int k, int l);

struct IdentityReport {
  bool ok = true;
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

/// Dickson's relations between cyclotomic numbers for prime q = m*f + 1:
///   (i)   (k,l) = (m-k, l-k); (k,l) = (l,k) for even f, (l+m/2, k+m/2) for odd f
///   (ii)  sum_l (k,l) = f-1 if (f even, k = 0) or (f odd, k = m/2), else f
///   (iii) sum_k (k,k+n) = f-1 if n = 0, else f
/// Every index combination is checked; violations name the indices.
IdentityReport verify_dickson(const CyclotomicClasses& classes);

/// sum(D_k) == 0 mod q for every k; for even f also
/// alpha^(m*i+k) + alpha^(m*(i+f/2)+k) == 0 mod q for i < f/2.
IdentityReport verify_sum_dk(const CyclotomicClasses& classes);

/// a_i = zeta_m^k for i in D_sigma(k); zero-symbol for every i in no class.
AlmostSequence sigma_sequence(const CyclotomicClasses& classes, const Permutation& sigma);

struct ConstructionCheck {
  AlmostSequence sequence;
  NpsClassification classification;
  bool matches = false;   // output has the claimed spectrum
  std::string expected;   // description of the claimed spectrum
};

/// sigma-sequence of prime q = m*f + 1 and its classification; claimed to be
/// an NPS of type -1 for affine sigma. Throws std::invalid_argument when q is
/// not prime or m does not divide q - 1.
ConstructionCheck verify_type_minus1(Int q, int m, const Permutation& sigma, std::optional<Int> alpha = std::nullopt);

/// sigma-sequence over the units of Z_{2p} with m*f = p - 1: p + 1
/// zero-symbols, C(t) = 0 for odd t and -1 for even t != 0.
ConstructionCheck construct_2p(Int p, int m, const Permutation& sigma, std::optional<Int> alpha = std::nullopt);

/// a_i = a_{q-i} for every i (position 0 pairs with itself).
bool verify_sigma_symmetry(const CyclotomicClasses& classes, const Permutation& sigma);

/// Quaternary sequence for prime q = 4f + 1: exponent 0 on D_0 u D_2,
/// exponent 1 on D_1 u D_3, zero at 0; claimed uniform type (q-3)/2.
ConstructionCheck construct_quaternary(Int q, std::optional<Int> alpha = std::nullopt);

/// Replace zeta_4 by zeta_2 in an almost quaternary sequence whose exponents
/// are all 0 or 1.
AlmostSequence binary_projection(const AlmostSequence& quaternary);

/// a_i = zeta_root_order^grouping[class of i], zero at 0. grouping has one
/// entry per class of the m_big-th cyclotomic classes of prime q.
AlmostSequence combine_classes(Int q, int m_big, const std::vector<int>& grouping, int root_order,
                               std::optional<Int> alpha = std::nullopt);

}  // namespace nps
