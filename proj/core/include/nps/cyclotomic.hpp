#pragma once

// Exact arithmetic in the ring of cyclotomic integers Z[zeta_m].
//
// A CycInt is stored as the canonical residue of a polynomial in zeta modulo
// the m-th cyclotomic polynomial Phi_m, so two values are equal exactly when
// their coefficient vectors are equal. Coefficients are 64-bit; every
// operation checks for overflow and throws std::overflow_error rather than
// silently wrapping. Workloads at the scale of this library stay far below
// the limit (|coefficients| <= period^2).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nps/arith.hpp"

namespace nps {

/// Integer polynomial, coefficients in ascending degree.
struct IntPoly {
  std::vector<Int> coeffs;

  /// Degree of the polynomial; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const IntPoly&) const = default;
};

/// Phi_m, by exact division of x^m - 1 by Phi_d for every proper divisor d.
/// Results are memoized per order; the returned reference stays valid for the
/// lifetime of the program and may be shared between threads.
const IntPoly& cyclotomic_poly(int m);

class CycInt {
 public:
  /// The zero element of Z[zeta_order].
  explicit CycInt(int order);

  static CycInt from_int(int order, Int value);

  /// zeta_order^e; e is reduced modulo the order.
  static CycInt root_power(int order, Int e);

  /// sum_j counts[j] * zeta^j for j in [0, counts.size()). The input need not
  /// be reduced and may be longer than the order.
  static CycInt from_power_counts(int order, std::span<const Int> counts);

  int order() const noexcept { return order_; }

  /// Canonical coefficients, length phi(order), ascending degree.
  std::span<const Int> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;

  /// The integer c when this value is c + 0*zeta + ...; nullopt otherwise.
  std::optional<Int> as_integer() const;

  /// Complex conjugation, i.e. the automorphism zeta -> zeta^{-1}.
  CycInt conjugate() const;

  /// Human-readable zeta-polynomial, highest degree first ("-4ζ_8^3 + 4ζ_8 + 7").
  std::string to_string() const;

  CycInt& operator+=(const CycInt& rhs);
  CycInt& operator-=(const CycInt& rhs);
  CycInt& operator*=(const CycInt& rhs);

  friend CycInt operator+(CycInt lhs, const CycInt& rhs) { return lhs += rhs; }
  friend CycInt operator-(CycInt lhs, const CycInt& rhs) { return lhs -= rhs; }
  friend CycInt operator*(CycInt lhs, const CycInt& rhs) { return lhs *= rhs; }
  CycInt operator-() const;

  bool operator==(const CycInt&) const = default;

  /// Lexicographic order on (order, coeffs); only used to build sorted,
  /// deterministic value sets.
  friend bool operator<(const CycInt& a, const CycInt& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.coeffs_ < b.coeffs_;
  }

 private:
  CycInt(int order, std::vector<Int> reduced);
  void require_same_order(const CycInt& other) const;

  int order_;
  std::vector<Int> coeffs_;
};

/// Reduce an arbitrary-length coefficient vector modulo Phi_order into the
/// canonical length-phi(order) residue.
std::vector<Int> reduce_mod_cyclotomic(int order, std::vector<Int> coeffs);

}  // namespace nps
