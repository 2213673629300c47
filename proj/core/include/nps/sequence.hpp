#pragma once

// Almost m-ary sequences: one period of entries that are either the
// zero-symbol or a power zeta_m^b. Autocorrelation values are computed exactly
// in Z[zeta_m].

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nps/cyclotomic.hpp"

namespace nps {

/// One entry of an almost m-ary sequence.
class Symbol {
 public:
  constexpr Symbol() noexcept = default;  // zero-symbol

  static constexpr Symbol zero() noexcept { return Symbol(); }
  static constexpr Symbol exp(int b) noexcept { return Symbol(b); }

  constexpr bool is_zero() const noexcept { return value_ < 0; }
  /// Exponent b of zeta^b; only meaningful when !is_zero().
  constexpr int exponent() const noexcept { return value_; }
  /// Sort key with the zero-symbol ordered before every exponent.
  constexpr int key() const noexcept { return value_; }

  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  constexpr explicit Symbol(int b) noexcept : value_(b) {}
  int value_ = -1;
};

class AlmostSequence {
 public:
  /// Throws std::invalid_argument if order < 2, the sequence is empty, or an
  /// exponent falls outside [0, order).
  AlmostSequence(int order, std::vector<Symbol> symbols, std::string label = {});

  /// Parse the comma-separated token form, e.g. "z,1,1,1,z,1,2,2,1".
  static AlmostSequence parse(std::string_view tokens, int order, std::string label = {});

  int order() const noexcept { return order_; }
  std::size_t period() const noexcept { return symbols_.size(); }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  Symbol operator[](std::size_t i) const { return symbols_[i % symbols_.size()]; }
  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  std::size_t zero_count() const noexcept;
  std::vector<std::size_t> zero_positions() const;

  /// Token form used by the text format ("z,1,2").
  std::string to_string() const;

  bool operator==(const AlmostSequence& o) const noexcept {
    return order_ == o.order_ && symbols_ == o.symbols_;
  }

 private:
  int order_;
  std::vector<Symbol> symbols_;
  std::string label_;
};

/// C(t) = sum_i a_i * conj(a_{i+t}), indices mod the period.
CycInt autocorrelation(const AlmostSequence& seq, std::size_t t);

/// C(1), ..., C(N-1). Requires N >= 2.
std::vector<CycInt> spectrum(const AlmostSequence& seq);

struct NpsClassification {
  enum class Kind { Perfect, UniformNps, TwoValuedNps, NotNps, NonIntegerSpectrum };

  Kind kind = Kind::NotNps;
  Int gamma1 = 0;         // value on {ell, N - ell} for TwoValuedNps; gamma for UniformNps
  Int gamma2 = 0;         // value on the remaining shifts
  std::size_t ell = 0;    // min(ell, N - ell), TwoValuedNps only
  std::vector<CycInt> distinct_values;  // sorted distinct out-of-phase values
  std::vector<CycInt> spectrum;         // index t-1 holds C(t)

  bool is_nps() const noexcept {
    return kind == Kind::Perfect || kind == Kind::UniformNps || kind == Kind::TwoValuedNps;
  }
  /// "perfect", "uniform(-1)", "pair(0,2;ell=4)", "not-nps", "non-integer".
  std::string type_string() const;
};

std::string_view to_string(NpsClassification::Kind kind) noexcept;

/// Classify the out-of-phase spectrum. Requires N >= 3.
///
/// A two-valued integer spectrum is an NPS only when one value occurs exactly
/// on {ell, N - ell} (a single shift when 2*ell == N). If both value classes
/// have that shape, the class at the distance between the two zero-symbols
/// wins (when there are exactly two), then the smaller class, then smaller ell.
NpsClassification classify(const AlmostSequence& seq);

/// zeta^k * seq.
AlmostSequence scalar_mul(const AlmostSequence& seq, int k);

/// Componentwise product; zero-symbols absorb.
AlmostSequence hadamard(const AlmostSequence& lhs, const AlmostSequence& rhs);

/// {zeta^k a} followed by {zeta^k (a*a)}, k = 0..m-1. Requires prime m and an
/// integer out-of-phase spectrum; every member is checked to share the
/// spectrum of the input.
std::vector<AlmostSequence> family_2m(const AlmostSequence& seq);

/// True iff a_i == a_{(c - i) mod N} for every i.
bool is_palindromic(const AlmostSequence& seq, long long axis);

/// out[i] = seq[i + r], i.e. shifts the sequence left by r.
AlmostSequence rotate(const AlmostSequence& seq, long long r);

/// out[i] = seq[-i].
AlmostSequence reversed(const AlmostSequence& seq);

/// True iff every nonzero entry has the same exponent.
bool is_trivial(const AlmostSequence& seq);

}  // namespace nps
