#include "nps/text_format.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nps {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

long long to_int(std::string_view s, std::size_t line) {
  s = trim(s);
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) fail(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

// Splits "key = value"; nullopt when the line is not a header.
std::optional<std::pair<std::string_view, std::string_view>> header(std::string_view line) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) return std::nullopt;
  return std::make_pair(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
}

}  // namespace

AlmostSequence read_sequence(std::istream& in, std::optional<int> default_m) {
  std::optional<int> m = default_m;
  std::string label;
  std::string tokens;
  std::string raw;
  std::size_t lineno = 0;
  std::size_t token_line = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (auto kv = header(line)) {
      if (kv->first == "m") {
        m = static_cast<int>(to_int(kv->second, lineno));
      } else if (kv->first == "label") {
        label = std::string(kv->second);
      } else {
        fail(lineno, "unknown header '" + std::string(kv->first) + "'");
      }
      continue;
    }
    if (!tokens.empty() && tokens.back() != ',') tokens += ',';
    tokens += line;
    if (token_line == 0) token_line = lineno;
  }
  if (!m) throw std::invalid_argument("sequence text has no 'm =' header");
  if (tokens.empty()) throw std::invalid_argument("sequence text has no tokens");
  try {
    return AlmostSequence::parse(tokens, *m, label);
  } catch (const std::invalid_argument& e) {
    fail(token_line, e.what());
  }
}

AlmostSequence parse_sequence_text(std::string_view text, std::optional<int> default_m) {
  std::istringstream in{std::string(text)};
  return read_sequence(in, default_m);
}

void write_sequence(std::ostream& out, const AlmostSequence& seq) {
  out << "m = " << seq.order() << '\n';
  if (!seq.label().empty()) out << "label = " << seq.label() << '\n';
  out << seq.to_string() << '\n';
}

DiffSet read_diffset(std::istream& in) {
  std::optional<int> n;
  std::optional<int> m;
  std::vector<GroupElem> elems;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (auto kv = header(line)) {
      if (kv->first == "n") {
        n = static_cast<int>(to_int(kv->second, lineno));
      } else if (kv->first == "m") {
        m = static_cast<int>(to_int(kv->second, lineno));
      } else {
        fail(lineno, "unknown header '" + std::string(kv->first) + "'");
      }
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string_view::npos) fail(lineno, "expected 'h,p'");
    elems.push_back({static_cast<int>(to_int(line.substr(0, comma), lineno)),
                     static_cast<int>(to_int(line.substr(comma + 1), lineno))});
  }
  if (!n || !m) throw std::invalid_argument("set text needs 'n =' and 'm =' headers");
  if (*n < 1 || *m < 1) throw std::invalid_argument("set text: n and m must be positive");
  return DiffSet(*n, *m, std::move(elems));
}

DiffSet parse_diffset_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_diffset(in);
}

void write_diffset(std::ostream& out, const DiffSet& r) {
  out << "n = " << r.n() << '\n' << "m = " << r.m() << '\n';
  for (auto x : r.elements()) out << x.h << ',' << x.p << '\n';
}

}  // namespace nps
