#include "nps/diffset.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace nps {

DiffSet::DiffSet(int n, int m, std::vector<GroupElem> elems) : n_(n), m_(m), elems_(std::move(elems)) {
  if (n_ < 1 || m_ < 1) throw std::invalid_argument("DiffSet: group orders must be positive");
  for (auto& x : elems_) {
    x.h = static_cast<int>(mod(x.h, n_));
    x.p = static_cast<int>(mod(x.p, m_));
  }
  std::sort(elems_.begin(), elems_.end());
  if (auto it = std::adjacent_find(elems_.begin(), elems_.end()); it != elems_.end())
    throw std::invalid_argument("DiffSet: duplicate element (" + std::to_string(it->h) + "," +
                                std::to_string(it->p) + ")");
}

bool DiffSet::contains(GroupElem x) const {
  x.h = static_cast<int>(mod(x.h, n_));
  x.p = static_cast<int>(mod(x.p, m_));
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

DiffSet DiffSet::translate(GroupElem g) const {
  std::vector<GroupElem> out;
  out.reserve(elems_.size());
  for (auto x : elems_) out.push_back(add(x, g, n_, m_));
  return DiffSet(n_, m_, std::move(out));
}

DiffSet DiffSet::scale(Int t) const {
  std::vector<GroupElem> out;
  out.reserve(elems_.size());
  for (auto x : elems_)
    out.push_back({static_cast<int>(mod(t % n_ * x.h, n_)), static_cast<int>(mod(t % m_ * x.p, m_))});
  return DiffSet(n_, m_, std::move(out));
}

GroupElem add(GroupElem a, GroupElem b, int n, int m) noexcept {
  return {static_cast<int>(mod(a.h + b.h, n)), static_cast<int>(mod(a.p + b.p, m))};
}

GroupElem sub(GroupElem a, GroupElem b, int n, int m) noexcept {
  return {static_cast<int>(mod(a.h - b.h, n)), static_cast<int>(mod(a.p - b.p, m))};
}

Int DifferenceTable::total() const {
  Int sum = 0;
  for (Int c : counts_) sum += c;
  return sum;
}

DifferenceTable difference_table(const DiffSet& r) {
  DifferenceTable table(r.n(), r.m());
  const auto& e = r.elements();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (i != j) ++table.at(sub(e[i], e[j], r.n(), r.m()));
  return table;
}

std::string PdpdsParams::to_string() const {
  std::ostringstream os;
  os << ell << "-(" << n << ',' << m << ',' << k << ',' << lambda1 << ',' << lambda2 << ',' << lambda3 << ','
     << mu1 << ',' << mu2 << ')';
  return os.str();
}

PdpdsParams PdpdsParams::parse(const std::string& text) {
  PdpdsParams p;
  long long v[9];
  char tail = 0;
  const int got = std::sscanf(text.c_str(), " %lld - ( %lld , %lld , %lld , %lld , %lld , %lld , %lld , %lld ) %c", &v[0],
                              &v[1], &v[2], &v[3], &v[4], &v[5], &v[6], &v[7], &v[8], &tail);
  if (got != 9) throw std::invalid_argument("malformed PDPDS parameters '" + text + "', expected ell-(n,m,k,l1,l2,l3,u1,u2)");
  p.ell = static_cast<int>(v[0]);
  p.n = static_cast<int>(v[1]);
  p.m = static_cast<int>(v[2]);
  p.k = v[3];
  p.lambda1 = v[4];
  p.lambda2 = v[5];
  p.lambda3 = v[6];
  p.mu1 = v[7];
  p.mu2 = v[8];
  if (p.n < 2 || p.m < 1 || p.ell <= 0 || p.ell >= p.n)
    throw std::invalid_argument("PDPDS parameters out of range: '" + text + "'");
  return p;
}

std::string_view to_string(Bucket b) noexcept {
  switch (b) {
    case Bucket::GenericH: return "generic-h";
    case Bucket::PureP: return "pure-p";
    case Bucket::EllH: return "ell-h";
    case Bucket::GenericMixed: return "generic-mixed";
    case Bucket::EllMixed: return "ell-mixed";
  }
  return "?";
}

Bucket bucket_of(GroupElem x, int n, int ell) noexcept {
  const bool ell_shift = x.h == ell || x.h == n - ell;
  if (x.p == 0) return ell_shift ? Bucket::EllH : Bucket::GenericH;
  if (x.h == 0) return Bucket::PureP;
  return ell_shift ? Bucket::EllMixed : Bucket::GenericMixed;
}

std::array<Int, 6> bucket_sizes(int n, int m, int ell) {
  const Int ell_values = (2 * ell == n) ? 1 : 2;
  const Int generic = n - 1 - ell_values;
  std::array<Int, 6> sizes{};
  sizes[1] = generic;
  sizes[2] = m - 1;
  sizes[3] = ell_values;
  sizes[4] = generic * (m - 1);
  sizes[5] = ell_values * (m - 1);
  return sizes;
}

std::string BucketFailure::to_string() const {
  std::ostringstream os;
  os << "bucket " << static_cast<int>(bucket) << " (" << nps::to_string(bucket) << ") is not constant: ("
     << first.h << ',' << first.p << ") occurs " << first_count << " times but (" << second.h << ','
     << second.p << ") occurs " << second_count << " times";
  return os.str();
}

namespace {

int normalize_ell(int ell, int n) {
  const int e = static_cast<int>(mod(ell, n));
  if (e == 0) throw std::invalid_argument("ell must be nonzero modulo n");
  return std::min(e, n - e);
}

}  // namespace

PdpdsVerdict verify_lpdpds(const DiffSet& r, int ell) {
  const int n = r.n();
  const int m = r.m();
  const int e = normalize_ell(ell, n);
  const DifferenceTable table = difference_table(r);

  struct Seen {
    bool any = false;
    GroupElem witness;
    Int value = 0;
  };
  std::array<Seen, 6> seen{};
  for (int h = 0; h < n; ++h) {
    for (int p = 0; p < m; ++p) {
      if (h == 0 && p == 0) continue;
      const GroupElem x{h, p};
      const int b = static_cast<int>(bucket_of(x, n, e));
      const Int c = table.count(x);
      if (!seen[b].any) {
        seen[b] = {true, x, c};
      } else if (seen[b].value != c) {
        return BucketFailure{static_cast<Bucket>(b), seen[b].witness, seen[b].value, x, c};
      }
    }
  }
  PdpdsParams params;
  params.ell = e;
  params.n = n;
  params.m = m;
  params.k = static_cast<Int>(r.size());
  params.lambda1 = seen[1].value;
  params.lambda2 = seen[2].value;
  params.lambda3 = seen[3].value;
  params.mu1 = seen[4].value;
  params.mu2 = seen[5].value;
  return params;
}

bool is_lpdpds(const DiffSet& r, const PdpdsParams& params) {
  if (params.n != r.n() || params.m != r.m() || params.k != static_cast<Int>(r.size())) return false;
  const int e = normalize_ell(params.ell, r.n());
  const DifferenceTable table = difference_table(r);
  const std::array<Int, 6> want{0, params.lambda1, params.lambda2, params.lambda3, params.mu1, params.mu2};
  for (int h = 0; h < r.n(); ++h)
    for (int p = 0; p < r.m(); ++p) {
      if (h == 0 && p == 0) continue;
      if (table.count({h, p}) != want[static_cast<std::size_t>(bucket_of({h, p}, r.n(), e))]) return false;
    }
  return true;
}

bool verify_group_ring_identity(const DiffSet& r, const PdpdsParams& params) {
  const int n = r.n();
  const int m = r.m();
  if (params.n != n || params.m != m || params.k != static_cast<Int>(r.size())) return false;
  const int e = normalize_ell(params.ell, n);

  // Left side: R R^(-1) including the k identity terms.
  DifferenceTable lhs = difference_table(r);
  lhs.at({0, 0}) += static_cast<Int>(r.size());

  const Int k = params.k;
  const Int l1 = params.lambda1, l2 = params.lambda2, l3 = params.lambda3;
  const Int u1 = params.mu1, u2 = params.mu2;
  for (int h = 0; h < n; ++h) {
    for (int p = 0; p < m; ++p) {
      // Coefficient of h^h g^p in
      //   (k - l1 - l2 + u1) e + (l1 - u1) H + (l2 - u1) P + u1 G
      //   + (l3 - l1) {h^ell, h^-ell} + (u2 - u1) ({h^ell, h^-ell} x (P \ e)).
      const bool in_h = p == 0;
      const bool in_p = h == 0;
      const bool ell_shift = h == e || h == n - e;
      Int rhs = u1;
      if (h == 0 && p == 0) rhs += k - l1 - l2 + u1;
      if (in_h) rhs += l1 - u1;
      if (in_p) rhs += l2 - u1;
      if (ell_shift && p == 0) rhs += l3 - l1;
      if (ell_shift && p != 0) rhs += u2 - u1;
      if (lhs.count({h, p}) != rhs) return false;
    }
  }
  return true;
}

std::string_view to_string(DesignKind k) noexcept {
  switch (k) {
    case DesignKind::DifferenceSet: return "DS";
    case DesignKind::RelativeDifferenceSet: return "RDS";
    case DesignKind::DirectProductDifferenceSet: return "DPDS";
    case DesignKind::ProperPdpds: return "ell-PDPDS";
  }
  return "?";
}

DesignKind special_case_of(const PdpdsParams& p) {
  if (p.lambda1 == p.lambda2 && p.lambda1 == p.lambda3 && p.lambda1 == p.mu1 && p.lambda1 == p.mu2)
    return DesignKind::DifferenceSet;
  const bool dpds = p.lambda3 == p.lambda1 && p.mu2 == p.mu1;
  if (!dpds) return DesignKind::ProperPdpds;
  if (p.lambda2 == 0 && p.lambda1 == p.mu1) return DesignKind::RelativeDifferenceSet;
  return DesignKind::DirectProductDifferenceSet;
}

Prop5Instance construct_prop5(int n, int a, int b) {
  if (n < 3) throw std::invalid_argument("construct_prop5 requires n >= 3");
  if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("construct_prop5 requires 0 <= a, b < n");
  std::vector<GroupElem> elems;
  for (int y = 0; y < n; ++y)
    if (y != b) elems.push_back({a, y});
  for (int x = 0; x < n; ++x)
    if (x != b) elems.push_back({x, b});

  const Int nn = n;
  PdpdsParams expected;
  expected.n = n;
  expected.m = n;
  expected.k = 2 * nn - 2;
  const int ell = static_cast<int>(mod(a - b, n));
  if (ell != 0) {
    expected.ell = std::min(ell, n - ell);
    expected.lambda1 = nn - 2;
    expected.lambda2 = nn;
    expected.lambda3 = nn - 2;
    expected.mu1 = 2;
    expected.mu2 = 1;
  } else {
    expected.ell = 1;
    expected.lambda1 = expected.lambda3 = nn - 2;
    expected.lambda2 = nn - 2;
    expected.mu1 = expected.mu2 = 2;
  }
  return {DiffSet(n, n, std::move(elems)), expected, ell == 0};
}

DiffSet seq_to_diffset(const AlmostSequence& seq) {
  std::vector<GroupElem> elems;
  for (std::size_t i = 0; i < seq.period(); ++i)
    if (!seq[i].is_zero()) elems.push_back({static_cast<int>(i), seq[i].exponent()});
  return DiffSet(static_cast<int>(seq.period()), seq.order(), std::move(elems));
}

AlmostSequence diffset_to_seq(const DiffSet& r) {
  std::vector<Symbol> symbols(static_cast<std::size_t>(r.n()), Symbol::zero());
  for (auto x : r.elements()) {
    auto& slot = symbols[static_cast<std::size_t>(x.h)];
    if (!slot.is_zero())
      throw std::invalid_argument("diffset_to_seq: h-coordinate " + std::to_string(x.h) + " occurs twice");
    slot = Symbol::exp(x.p);
  }
  return AlmostSequence(r.m(), std::move(symbols));
}

std::optional<PdpdsParams> nps_params(Int n_nonzero, int m, Int gamma1, Int gamma2, int ell, int period) {
  if (period != n_nonzero + 2) throw std::invalid_argument("nps_params: period must equal n_nonzero + 2");
  if (ell < 1 || ell >= period) throw std::invalid_argument("nps_params: ell must lie in [1, period)");
  const Int n = n_nonzero;
  const Int generic = n - gamma2 - 2;
  if (generic % m != 0) return std::nullopt;

  PdpdsParams p;
  p.ell = std::min(ell, period - ell);
  p.n = period;
  p.m = m;
  p.k = n;
  p.mu1 = generic / m;
  p.lambda1 = p.mu1 + gamma2;
  p.lambda2 = 0;
  const Int at_ell = (2 * ell == period) ? n - gamma1 : n - gamma1 - 1;
  if (at_ell % m != 0) return std::nullopt;
  p.mu2 = at_ell / m;
  p.lambda3 = p.mu2 + gamma1;
  return p;
}

ColumnSums column_sums(const DiffSet& r) {
  ColumnSums cs{std::vector<Int>(static_cast<std::size_t>(r.m()), 0)};
  for (auto x : r.elements()) ++cs.s[static_cast<std::size_t>(x.p)];
  return cs;
}

SiIdentityReport verify_si_identities(const DiffSet& r, const PdpdsParams& params) {
  SiIdentityReport rep;
  const auto s = column_sums(r).s;
  const Int m = r.m();
  const Int k = static_cast<Int>(r.size());
  const auto sizes = bucket_sizes(params.n, params.m, normalize_ell(params.ell, params.n));
  const Int generic_h = sizes[1];
  const Int ell_h = sizes[3];

  for (Int v : s) rep.sum_squares += v * v;
  rep.expected_sum_squares = generic_h * params.lambda1 + ell_h * params.lambda3 + k;
  if (rep.sum_squares != rep.expected_sum_squares) {
    rep.ok = false;
    rep.violations.push_back("(i) sum s_j^2 = " + std::to_string(rep.sum_squares) + " but expected " +
                             std::to_string(rep.expected_sum_squares));
  }

  rep.expected_shifted = generic_h * params.mu1 + params.lambda2 + ell_h * params.mu2;
  for (Int i = 1; i <= m / 2; ++i) {  // i = 1..ceil((m-1)/2)
    Int acc = 0;
    for (Int j = 0; j < m; ++j) acc += s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(mod(j - i, m))];
    rep.shifted_products.push_back(acc);
    if (acc != rep.expected_shifted) {
      rep.ok = false;
      rep.violations.push_back("(ii) i=" + std::to_string(i) + ": sum s_j s_{j-i} = " + std::to_string(acc) +
                               " but expected " + std::to_string(rep.expected_shifted));
    }
    if ((m - 1) * acc + rep.sum_squares != k * k) {
      rep.ok = false;
      rep.violations.push_back("(iii) i=" + std::to_string(i) + ": (m-1)*" + std::to_string(acc) + " + " +
                               std::to_string(rep.sum_squares) + " != k^2 = " + std::to_string(k * k));
    }
  }
  return rep;
}

std::optional<Int> nonexistence_bound(Int m, Int k1, Int k2) {
  const Int radicand = checked_add(checked_sub(checked_mul(checked_mul(m, m), checked_mul(k1, k1)), 4 * m * k1),
                                   checked_mul(8 * m, k2));
  if (radicand < 0) return std::nullopt;
  // floor((a + sqrt(D)) / 2) == floor((a + isqrt(D)) / 2) for integer a.
  return floor_div(-m * k1 - 4 + isqrt(radicand), 2);
}

Feasibility feasible(Int n, Int m, Int gamma1, Int gamma2) {
  const Int generic = n - gamma2 - 2;
  const Int at_ell = n - gamma1 - 1;
  if (generic % m != 0)
    return {false, "m does not divide n - gamma2 - 2 = " + std::to_string(generic)};
  if (at_ell % m != 0)
    return {false, "m does not divide n - gamma1 - 1 = " + std::to_string(at_ell)};
  const Int k1 = generic / m;
  const Int k2 = at_ell / m;
  if (k1 < 0 || k2 < 0) return {false, "negative multiplicity (mu1 or mu2 < 0)"};
  if (m % 2 == 1 && is_prime(m)) {
    if (gamma2 <= -3) return {false, "gamma2 <= -3 excluded by the nonexistence bound"};
    if (auto t = nonexistence_bound(m, k1, k2); t && gamma2 <= *t)
      return {false, "gamma2 <= T = " + std::to_string(*t)};
  }
  return {true, {}};
}

}  // namespace nps
