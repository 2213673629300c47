#include "nps/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace nps {
namespace {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out{std::vector<Int>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] = checked_add(out.coeffs[i + j], checked_mul(a.coeffs[i], b.coeffs[j]));
  return out;
}

// Exact division by a monic divisor; throws if the remainder is nonzero.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  const int dn = den.degree();
  const int nn = num.degree();
  if (nn < dn) throw std::logic_error("poly_div_exact: degree too small");
  IntPoly quot{std::vector<Int>(static_cast<std::size_t>(nn - dn + 1), 0)};
  for (int i = nn; i >= dn; --i) {
    const Int c = num.coeffs[static_cast<std::size_t>(i)];
    quot.coeffs[static_cast<std::size_t>(i - dn)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dn; ++j) {
      auto& slot = num.coeffs[static_cast<std::size_t>(i - dn + j)];
      slot = checked_sub(slot, checked_mul(c, den.coeffs[static_cast<std::size_t>(j)]));
    }
  }
  for (int i = 0; i < dn; ++i)
    if (num.coeffs[static_cast<std::size_t>(i)] != 0)
      throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::mutex g_poly_mutex;
std::map<int, IntPoly>& poly_cache() {
  static std::map<int, IntPoly> cache;
  return cache;
}

const IntPoly& cyclotomic_poly_locked(int m) {
  auto& cache = poly_cache();
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  IntPoly num{std::vector<Int>(static_cast<std::size_t>(m) + 1, 0)};
  num.coeffs.front() = -1;
  num.coeffs.back() = 1;
  IntPoly den{{1}};
  for (int d = 1; d < m; ++d)
    if (m % d == 0) den = poly_mul(den, cyclotomic_poly_locked(d));
  return cache.emplace(m, poly_div_exact(std::move(num), den)).first->second;
}

}  // namespace

const IntPoly& cyclotomic_poly(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_poly: order must be >= 1");
  std::lock_guard lock(g_poly_mutex);
  return cyclotomic_poly_locked(m);
}

std::vector<Int> reduce_mod_cyclotomic(int order, std::vector<Int> coeffs) {
  const IntPoly& phi = cyclotomic_poly(order);
  const auto d = static_cast<std::size_t>(phi.degree());
  // Phi is monic: eliminate the top coefficient repeatedly.
  for (std::size_t i = coeffs.size(); i-- > d;) {
    const Int c = coeffs[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= d; ++j)
      coeffs[i - d + j] = checked_sub(coeffs[i - d + j], checked_mul(c, phi.coeffs[j]));
  }
  coeffs.resize(d, 0);
  return coeffs;
}

CycInt::CycInt(int order) : order_(order) {
  if (order < 2) throw std::invalid_argument("CycInt: order must be >= 2");
  coeffs_.assign(static_cast<std::size_t>(cyclotomic_poly(order).degree()), 0);
}

CycInt::CycInt(int order, std::vector<Int> reduced) : order_(order), coeffs_(std::move(reduced)) {}

CycInt CycInt::from_int(int order, Int value) {
  CycInt out(order);
  out.coeffs_[0] = value;
  return out;
}

CycInt CycInt::root_power(int order, Int e) {
  if (order < 2) throw std::invalid_argument("CycInt: order must be >= 2");
  std::vector<Int> raw(static_cast<std::size_t>(order), 0);
  raw[static_cast<std::size_t>(mod(e, order))] = 1;
  return CycInt(order, reduce_mod_cyclotomic(order, std::move(raw)));
}

CycInt CycInt::from_power_counts(int order, std::span<const Int> counts) {
  if (order < 2) throw std::invalid_argument("CycInt: order must be >= 2");
  std::vector<Int> raw(static_cast<std::size_t>(order), 0);
  for (std::size_t j = 0; j < counts.size(); ++j) {
    auto& slot = raw[j % static_cast<std::size_t>(order)];
    slot = checked_add(slot, counts[j]);
  }
  return CycInt(order, reduce_mod_cyclotomic(order, std::move(raw)));
}

bool CycInt::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

std::optional<Int> CycInt::as_integer() const {
  if (std::any_of(coeffs_.begin() + 1, coeffs_.end(), [](Int c) { return c != 0; }))
    return std::nullopt;
  return coeffs_[0];
}

CycInt CycInt::conjugate() const {
  std::vector<Int> raw(static_cast<std::size_t>(order_), 0);
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    raw[(static_cast<std::size_t>(order_) - j) % static_cast<std::size_t>(order_)] = coeffs_[j];
  return CycInt(order_, reduce_mod_cyclotomic(order_, std::move(raw)));
}

void CycInt::require_same_order(const CycInt& other) const {
  if (order_ != other.order_)
    throw std::invalid_argument("CycInt: order mismatch (" + std::to_string(order_) + " vs " +
                                std::to_string(other.order_) + ")");
}

CycInt& CycInt::operator+=(const CycInt& rhs) {
  require_same_order(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_add(coeffs_[j], rhs.coeffs_[j]);
  return *this;
}

CycInt& CycInt::operator-=(const CycInt& rhs) {
  require_same_order(rhs);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] = checked_sub(coeffs_[j], rhs.coeffs_[j]);
  return *this;
}

CycInt& CycInt::operator*=(const CycInt& rhs) {
  require_same_order(rhs);
  if (coeffs_.size() == 1) {
    coeffs_[0] = checked_mul(coeffs_[0], rhs.coeffs_[0]);
    return *this;
  }
  std::vector<Int> prod(2 * coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      prod[i + j] = checked_add(prod[i + j], checked_mul(coeffs_[i], rhs.coeffs_[j]));
  }
  coeffs_ = reduce_mod_cyclotomic(order_, std::move(prod));
  return *this;
}

CycInt CycInt::operator-() const {
  CycInt out = *this;
  for (auto& c : out.coeffs_) c = checked_sub(0, c);
  return out;
}

std::string CycInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  const std::string z = "ζ_" + std::to_string(order_);
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const Int c = coeffs_[j];
    if (c == 0) continue;
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << z;
    if (j > 1) os << '^' << j;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace nps
