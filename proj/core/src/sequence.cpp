#include "nps/sequence.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nps {

AlmostSequence::AlmostSequence(int order, std::vector<Symbol> symbols, std::string label)
    : order_(order), symbols_(std::move(symbols)), label_(std::move(label)) {
  if (order_ < 2) throw std::invalid_argument("sequence order must be >= 2");
  if (symbols_.empty()) throw std::invalid_argument("sequence must have period >= 1");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const Symbol s = symbols_[i];
    if (!s.is_zero() && s.exponent() >= order_)
      throw std::invalid_argument("exponent " + std::to_string(s.exponent()) + " at position " +
                                  std::to_string(i) + " is not below m=" + std::to_string(order_));
  }
}

AlmostSequence AlmostSequence::parse(std::string_view tokens, int order, std::string label) {
  std::vector<Symbol> symbols;
  std::size_t pos = 0;
  while (pos <= tokens.size()) {
    std::size_t end = tokens.find(',', pos);
    if (end == std::string_view::npos) end = tokens.size();
    std::string_view tok = tokens.substr(pos, end - pos);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) {
      // Allow a single trailing comma, nothing else.
      if (end == tokens.size() && !symbols.empty()) break;
      throw std::invalid_argument("empty token in sequence at offset " + std::to_string(pos));
    }
    if (tok == "z" || tok == "Z") {
      symbols.push_back(Symbol::zero());
    } else {
      int b = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), b);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || b < 0)
        throw std::invalid_argument("malformed sequence token '" + std::string(tok) + "'");
      symbols.push_back(Symbol::exp(b));
    }
    pos = end + 1;
  }
  return AlmostSequence(order, std::move(symbols), std::move(label));
}

std::size_t AlmostSequence::zero_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(symbols_.begin(), symbols_.end(), [](Symbol s) { return s.is_zero(); }));
}

std::vector<std::size_t> AlmostSequence::zero_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].is_zero()) out.push_back(i);
  return out;
}

std::string AlmostSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (i) out += ',';
    out += symbols_[i].is_zero() ? std::string("z") : std::to_string(symbols_[i].exponent());
  }
  return out;
}

CycInt autocorrelation(const AlmostSequence& seq, std::size_t t) {
  const std::size_t n = seq.period();
  const int m = seq.order();
  std::vector<Int> counts(static_cast<std::size_t>(m), 0);
  const auto& a = seq.symbols();
  for (std::size_t i = 0; i < n; ++i) {
    const Symbol x = a[i];
    const Symbol y = a[(i + t) % n];
    if (x.is_zero() || y.is_zero()) continue;
    // zeta^x * conj(zeta^y) = zeta^(x - y)
    ++counts[static_cast<std::size_t>(mod(x.exponent() - y.exponent(), m))];
  }
  return CycInt::from_power_counts(m, counts);
}

std::vector<CycInt> spectrum(const AlmostSequence& seq) {
  if (seq.period() < 2) throw std::invalid_argument("spectrum requires period >= 2");
  std::vector<CycInt> out;
  out.reserve(seq.period() - 1);
  for (std::size_t t = 1; t < seq.period(); ++t) out.push_back(autocorrelation(seq, t));
  return out;
}

std::string_view to_string(NpsClassification::Kind kind) noexcept {
  switch (kind) {
    case NpsClassification::Kind::Perfect: return "Perfect";
    case NpsClassification::Kind::UniformNps: return "UniformNps";
    case NpsClassification::Kind::TwoValuedNps: return "TwoValuedNps";
    case NpsClassification::Kind::NotNps: return "NotNps";
    case NpsClassification::Kind::NonIntegerSpectrum: return "NonIntegerSpectrum";
  }
  return "?";
}

std::string NpsClassification::type_string() const {
  switch (kind) {
    case Kind::Perfect: return "perfect";
    case Kind::UniformNps: return "uniform(" + std::to_string(gamma1) + ")";
    case Kind::TwoValuedNps:
      return "pair(" + std::to_string(gamma1) + "," + std::to_string(gamma2) +
             ";ell=" + std::to_string(ell) + ")";
    case Kind::NotNps: return "not-nps";
    case Kind::NonIntegerSpectrum: return "non-integer";
  }
  return "?";
}

namespace {

// If `shifts` (sorted) is exactly {ell, N - ell} for some ell, return min(ell, N - ell).
std::optional<std::size_t> ell_pair_shape(const std::vector<std::size_t>& shifts, std::size_t n) {
  if (shifts.size() == 1 && 2 * shifts[0] == n) return shifts[0];
  if (shifts.size() == 2 && shifts[0] + shifts[1] == n && shifts[0] != shifts[1]) return shifts[0];
  return std::nullopt;
}

}  // namespace

NpsClassification classify(const AlmostSequence& seq) {
  const std::size_t n = seq.period();
  if (n < 3) throw std::invalid_argument("classify requires period >= 3");

  NpsClassification out;
  out.spectrum = spectrum(seq);
  {
    std::set<CycInt> distinct(out.spectrum.begin(), out.spectrum.end());
    out.distinct_values.assign(distinct.begin(), distinct.end());
  }

  std::map<Int, std::vector<std::size_t>> by_value;
  for (std::size_t t = 1; t < n; ++t) {
    auto v = out.spectrum[t - 1].as_integer();
    if (!v) {
      out.kind = NpsClassification::Kind::NonIntegerSpectrum;
      return out;
    }
    by_value[*v].push_back(t);
  }

  if (by_value.size() == 1) {
    const Int g = by_value.begin()->first;
    out.kind = g == 0 ? NpsClassification::Kind::Perfect : NpsClassification::Kind::UniformNps;
    out.gamma1 = out.gamma2 = g;
    return out;
  }
  if (by_value.size() != 2) {
    out.kind = NpsClassification::Kind::NotNps;
    return out;
  }

  struct Candidate {
    Int value;
    Int other;
    std::size_t ell;
    std::size_t size;
  };
  std::vector<Candidate> candidates;
  for (auto it = by_value.begin(); it != by_value.end(); ++it) {
    auto other = std::next(it) == by_value.end() ? by_value.begin() : std::next(it);
    if (auto ell = ell_pair_shape(it->second, n))
      candidates.push_back({it->first, other->first, *ell, it->second.size()});
  }
  if (candidates.empty()) {
    out.kind = NpsClassification::Kind::NotNps;
    return out;
  }

  std::optional<std::size_t> zero_distance;
  if (auto zeros = seq.zero_positions(); zeros.size() == 2) {
    const std::size_t d = zeros[1] - zeros[0];
    zero_distance = std::min(d, n - d);
  }
  auto rank = [&](const Candidate& c) {
    const int zero_match = (zero_distance && *zero_distance == c.ell) ? 0 : 1;
    return std::tuple(zero_match, c.size, c.ell);
  };
  const Candidate best = *std::min_element(candidates.begin(), candidates.end(),
                                           [&](const Candidate& a, const Candidate& b) { return rank(a) < rank(b); });
  out.kind = NpsClassification::Kind::TwoValuedNps;
  out.gamma1 = best.value;
  out.gamma2 = best.other;
  out.ell = best.ell;
  return out;
}

AlmostSequence scalar_mul(const AlmostSequence& seq, int k) {
  const int m = seq.order();
  std::vector<Symbol> out;
  out.reserve(seq.period());
  for (Symbol s : seq.symbols())
    out.push_back(s.is_zero() ? s : Symbol::exp(static_cast<int>(mod(s.exponent() + k, m))));
  return AlmostSequence(m, std::move(out));
}

AlmostSequence hadamard(const AlmostSequence& lhs, const AlmostSequence& rhs) {
  if (lhs.order() != rhs.order() || lhs.period() != rhs.period())
    throw std::invalid_argument("hadamard: sequences differ in order or period");
  const int m = lhs.order();
  std::vector<Symbol> out;
  out.reserve(lhs.period());
  for (std::size_t i = 0; i < lhs.period(); ++i) {
    const Symbol a = lhs[i];
    const Symbol b = rhs[i];
    if (a.is_zero() || b.is_zero())
      out.push_back(Symbol::zero());
    else
      out.push_back(Symbol::exp((a.exponent() + b.exponent()) % m));
  }
  return AlmostSequence(m, std::move(out));
}

std::vector<AlmostSequence> family_2m(const AlmostSequence& seq) {
  const int m = seq.order();
  if (!is_prime(m))
    throw std::invalid_argument("family_2m requires prime m (got " + std::to_string(m) + ")");
  const auto base = spectrum(seq);
  for (const auto& v : base)
    if (!v.as_integer()) throw std::invalid_argument("family_2m requires an integer out-of-phase spectrum");

  const AlmostSequence squared = hadamard(seq, seq);
  std::vector<AlmostSequence> family;
  family.reserve(2 * static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) family.push_back(scalar_mul(seq, k));
  for (int k = 0; k < m; ++k) family.push_back(scalar_mul(squared, k));
  for (const auto& member : family)
    if (spectrum(member) != base)
      throw std::logic_error("family_2m: member " + member.to_string() + " changed the spectrum");
  return family;
}

bool is_palindromic(const AlmostSequence& seq, long long axis) {
  const auto n = static_cast<Int>(seq.period());
  for (Int i = 0; i < n; ++i)
    if (seq[static_cast<std::size_t>(i)] != seq[static_cast<std::size_t>(mod(axis - i, n))]) return false;
  return true;
}

AlmostSequence rotate(const AlmostSequence& seq, long long r) {
  const auto n = static_cast<Int>(seq.period());
  std::vector<Symbol> out(seq.period());
  for (Int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>(mod(i + r, n))];
  return AlmostSequence(seq.order(), std::move(out), seq.label());
}

AlmostSequence reversed(const AlmostSequence& seq) {
  const auto n = static_cast<Int>(seq.period());
  std::vector<Symbol> out(seq.period());
  for (Int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = seq[static_cast<std::size_t>(mod(-i, n))];
  return AlmostSequence(seq.order(), std::move(out), seq.label());
}

bool is_trivial(const AlmostSequence& seq) {
  std::optional<int> first;
  for (Symbol s : seq.symbols()) {
    if (s.is_zero()) continue;
    if (!first) first = s.exponent();
    else if (*first != s.exponent()) return false;
  }
  return true;
}

}  // namespace nps
