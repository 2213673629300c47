#include "nps/cyclotomy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nps {
namespace {

bool has_supported_unit_group(Int q) {
  if (is_prime(q)) return true;
  return q % 2 == 0 && q / 2 > 2 && is_prime(q / 2);
}

std::string idx(std::initializer_list<Int> v) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (Int x : v) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

std::vector<Int> unit_group_generators(Int q) {
  if (!has_supported_unit_group(q))
    throw std::invalid_argument("unit group of Z_" + std::to_string(q) +
                                " not supported: q must be prime or twice an odd prime");
  const Int phi = euler_phi(q);
  std::vector<Int> out;
  for (Int a = 1; a < q; ++a)
    if (multiplicative_order(a, q) == phi) out.push_back(a);
  return out;
}

Int unit_group_generator(Int q) { return unit_group_generators(q).front(); }

std::optional<int> CyclotomicClasses::class_of(Int x) const {
  const int c = class_index_.at(static_cast<std::size_t>(mod(x, q_)));
  if (c < 0) return std::nullopt;
  return c;
}

CyclotomicClasses build_classes(Int q, int m, std::optional<Int> alpha) {
  if (m < 1) throw std::invalid_argument("build_classes: m must be positive");
  const Int a = alpha ? mod(*alpha, q) : unit_group_generator(q);
  if (!has_supported_unit_group(q))
    throw std::invalid_argument("build_classes: q must be prime or twice an odd prime");
  const Int phi = euler_phi(q);
  if (multiplicative_order(a, q) != phi)
    throw std::invalid_argument("build_classes: " + std::to_string(a) + " does not generate the units of Z_" +
                                std::to_string(q));
  if (phi % m != 0)
    throw std::invalid_argument("build_classes: m=" + std::to_string(m) + " does not divide phi(q)=" +
                                std::to_string(phi));

  CyclotomicClasses out;
  out.q_ = q;
  out.m_ = m;
  out.f_ = phi / m;
  out.alpha_ = a;
  out.classes_.assign(static_cast<std::size_t>(m), {});
  out.class_index_.assign(static_cast<std::size_t>(q), -1);
  Int power = 1;
  for (Int e = 0; e < phi; ++e) {
    const auto k = static_cast<std::size_t>(e % m);
    out.classes_[k].push_back(power);
    out.class_index_[static_cast<std::size_t>(power)] = static_cast<int>(k);
    power = power * a % q;
  }
  for (auto& c : out.classes_) std::sort(c.begin(), c.end());
  return out;
}

Permutation::Permutation(std::vector<int> table) : table_(std::move(table)) {
  std::vector<int> sorted = table_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw std::invalid_argument("Permutation: table is not a bijection");
  if (table_.empty()) throw std::invalid_argument("Permutation: empty table");
}

Permutation Permutation::identity(int m) { return affine(m, 1, 0); }

Permutation Permutation::affine(int m, int c, int d) {
  if (m < 1) throw std::invalid_argument("Permutation: m must be positive");
  if (std::gcd(mod(c, m), static_cast<Int>(m)) != 1 && m > 1)
    throw std::invalid_argument("Permutation: affine map needs gcd(c, m) = 1");
  std::vector<int> table(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) table[static_cast<std::size_t>(x)] = static_cast<int>(mod(static_cast<Int>(c) * x + d, m));
  return Permutation(std::move(table));
}

bool Permutation::is_affine() const {
  const int m = size();
  const int d = table_[0];
  const int c = static_cast<int>(mod(table_[m > 1 ? 1 : 0] - d, m));
  if (m == 1) return true;
  if (std::gcd(static_cast<Int>(c), static_cast<Int>(m)) != 1) return false;
  for (int x = 0; x < m; ++x)
    if (table_[static_cast<std::size_t>(x)] != mod(static_cast<Int>(c) * x + d, m)) return false;
  return true;
}

Int cyclotomic_number(const CyclotomicClasses& classes, int k, int l) {
  const int m = classes.m();
  const auto& dk = classes.cls(static_cast<int>(mod(k, m)));
  const int lm = static_cast<int>(mod(l, m));
  Int count = 0;
  for (Int x : dk)
    if (classes.class_of(x + 1) == lm) ++count;
  return count;
}

IdentityReport verify_dickson(const CyclotomicClasses& classes) {
  IdentityReport rep;
  const int m = classes.m();
  const Int f = classes.f();
  auto cn = [&](Int k, Int l) { return cyclotomic_number(classes, static_cast<int>(mod(k, m)), static_cast<int>(mod(l, m))); };
  auto check = [&](bool ok, std::string what) {
    ++rep.checks;
    if (!ok) {
      rep.ok = false;
      rep.violations.push_back(std::move(what));
    }
  };
  const bool f_even = f % 2 == 0;

  for (Int k = 0; k < m; ++k) {
    for (Int l = 0; l < m; ++l) {
      const Int v = cn(k, l);
      check(v == cn(m - k, l - k), "(i) " + idx({k, l}) + "=" + std::to_string(v) + " != " + idx({mod(m - k, m), mod(l - k, m)}));
      if (f_even) {
        check(v == cn(l, k), "(i) f even: " + idx({k, l}) + " != " + idx({l, k}));
      } else if (m % 2 == 0) {
        check(v == cn(l + m / 2, k + m / 2),
              "(i) f odd: " + idx({k, l}) + " != " + idx({mod(l + m / 2, m), mod(k + m / 2, m)}));
      } else {
        check(false, "(i) f odd requires even m, got m=" + std::to_string(m));
      }
    }
  }

  for (Int k = 0; k < m; ++k) {
    Int sum = 0;
    for (Int l = 0; l < m; ++l) sum += cn(k, l);
    const bool short_row = (f_even && k == 0) || (!f_even && m % 2 == 0 && k == m / 2);
    const Int want = short_row ? f - 1 : f;
    check(sum == want, "(ii) k=" + std::to_string(k) + ": sum_l (k,l) = " + std::to_string(sum) +
                           ", expected " + std::to_string(want));
  }

  for (Int shift = 0; shift < m; ++shift) {
    Int sum = 0;
    for (Int k = 0; k < m; ++k) sum += cn(k, k + shift);
    const Int want = shift == 0 ? f - 1 : f;
    check(sum == want, "(iii) n=" + std::to_string(shift) + ": sum_k (k,k+n) = " + std::to_string(sum) +
                           ", expected " + std::to_string(want));
  }
  return rep;
}

IdentityReport verify_sum_dk(const CyclotomicClasses& classes) {
  IdentityReport rep;
  const Int q = classes.q();
  const int m = classes.m();
  const Int f = classes.f();
  const Int a = classes.alpha();
  for (int k = 0; k < m; ++k) {
    Int sum = 0;
    for (Int x : classes.cls(k)) sum = (sum + x) % q;
    ++rep.checks;
    if (sum != 0) {
      rep.ok = false;
      rep.violations.push_back("sum of D_" + std::to_string(k) + " is " + std::to_string(sum) + " mod " +
                               std::to_string(q));
    }
  }
  if (f % 2 == 0) {
    for (int k = 0; k < m; ++k) {
      for (Int i = 0; i < f / 2; ++i) {
        const Int x = pow_mod(a, m * i + k, q);
        const Int y = pow_mod(a, m * (i + f / 2) + k, q);
        ++rep.checks;
        if ((x + y) % q != 0) {
          rep.ok = false;
          rep.violations.push_back("alpha^" + std::to_string(m * i + k) + " + alpha^" +
                                   std::to_string(m * (i + f / 2) + k) + " = " + std::to_string((x + y) % q) +
                                   " mod " + std::to_string(q));
        }
      }
    }
  }
  return rep;
}

AlmostSequence sigma_sequence(const CyclotomicClasses& classes, const Permutation& sigma) {
  const int m = classes.m();
  if (sigma.size() != m) throw std::invalid_argument("sigma_sequence: permutation size must equal m");
  if (m < 2) throw std::invalid_argument("sigma_sequence: m must be >= 2");
  // a_i = zeta^k iff i in D_sigma(k), so the exponent at i is sigma^{-1}(class of i).
  std::vector<int> inverse(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) inverse[static_cast<std::size_t>(sigma(k))] = k;
  std::vector<Symbol> symbols(static_cast<std::size_t>(classes.q()), Symbol::zero());
  for (Int i = 0; i < classes.q(); ++i)
    if (auto c = classes.class_of(i)) symbols[static_cast<std::size_t>(i)] = Symbol::exp(inverse[static_cast<std::size_t>(*c)]);
  return AlmostSequence(m, std::move(symbols));
}

ConstructionCheck verify_type_minus1(Int q, int m, const Permutation& sigma, std::optional<Int> alpha) {
  if (!is_prime(q)) throw std::invalid_argument("verify_type_minus1: q must be prime");
  if (m < 2 || (q - 1) % m != 0) throw std::invalid_argument("verify_type_minus1: m must divide q - 1");
  auto classes = build_classes(q, m, alpha);
  ConstructionCheck out{sigma_sequence(classes, sigma), {}, false, "uniform(-1)"};
  out.classification = classify(out.sequence);
  out.matches = out.classification.kind == NpsClassification::Kind::UniformNps && out.classification.gamma1 == -1;
  return out;
}

ConstructionCheck construct_2p(Int p, int m, const Permutation& sigma, std::optional<Int> alpha) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("construct_2p: p must be an odd prime");
  if (m < 2 || (p - 1) % m != 0) throw std::invalid_argument("construct_2p: m must divide p - 1");
  auto classes = build_classes(2 * p, m, alpha);
  ConstructionCheck out{sigma_sequence(classes, sigma), {}, false, "C(t) = 0 for odd t, -1 for even t; p+1 zeros"};
  out.classification = classify(out.sequence);
  bool ok = out.sequence.zero_count() == static_cast<std::size_t>(p + 1);
  for (std::size_t t = 1; t < out.sequence.period(); ++t) {
    const Int want = t % 2 == 1 ? 0 : -1;
    ok = ok && out.classification.spectrum[t - 1].as_integer() == want;
  }
  out.matches = ok;
  return out;
}

bool verify_sigma_symmetry(const CyclotomicClasses& classes, const Permutation& sigma) {
  return is_palindromic(sigma_sequence(classes, sigma), 0);
}

ConstructionCheck construct_quaternary(Int q, std::optional<Int> alpha) {
  if (!is_prime(q) || q % 4 != 1) throw std::invalid_argument("construct_quaternary: q must be a prime = 1 mod 4");
  auto seq = combine_classes(q, 4, {0, 1, 0, 1}, 4, alpha);
  const Int gamma = (q - 3) / 2;
  ConstructionCheck out{std::move(seq), {}, false, "uniform(" + std::to_string(gamma) + ")"};
  out.classification = classify(out.sequence);
  out.matches = out.sequence.zero_count() == 1 && out.classification.kind == NpsClassification::Kind::UniformNps &&
                out.classification.gamma1 == gamma;
  return out;
}

AlmostSequence binary_projection(const AlmostSequence& quaternary) {
  std::vector<Symbol> out;
  for (Symbol s : quaternary.symbols()) {
    if (!s.is_zero() && s.exponent() > 1)
      throw std::invalid_argument("binary_projection: exponents must be 0 or 1");
    out.push_back(s);
  }
  return AlmostSequence(2, std::move(out));
}

AlmostSequence combine_classes(Int q, int m_big, const std::vector<int>& grouping, int root_order,
                               std::optional<Int> alpha) {
  if (!is_prime(q)) throw std::invalid_argument("combine_classes: q must be prime");
  if (static_cast<int>(grouping.size()) != m_big)
    throw std::invalid_argument("combine_classes: grouping needs one exponent per class");
  for (int g : grouping)
    if (g < 0 || g >= root_order) throw std::invalid_argument("combine_classes: grouping exponent out of range");
  auto classes = build_classes(q, m_big, alpha);
  std::vector<Symbol> symbols(static_cast<std::size_t>(q), Symbol::zero());
  for (Int i = 1; i < q; ++i)
    symbols[static_cast<std::size_t>(i)] = Symbol::exp(grouping[static_cast<std::size_t>(*classes.class_of(i))]);
  return AlmostSequence(root_order, std::move(symbols));
}

}  // namespace nps
