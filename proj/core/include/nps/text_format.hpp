#pragma once

// Plain-text formats for sequences and subsets of Z_n x Z_m.
//
// Sequence file:        DiffSet file:
//   # comment             n = 9
//   m = 3                 m = 3
//   label = example       0,0
//   z,1,1,1,z,1,2,2,1     1,1
//
// Token lines may be split; they are concatenated in order.

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "nps/diffset.hpp"
#include "nps/sequence.hpp"

namespace nps {

/// Throws std::invalid_argument with a line number on malformed input.
/// default_m is used when the text has no "m =" header.
AlmostSequence read_sequence(std::istream& in, std::optional<int> default_m = std::nullopt);
AlmostSequence parse_sequence_text(std::string_view text, std::optional<int> default_m = std::nullopt);
void write_sequence(std::ostream& out, const AlmostSequence& seq);

DiffSet read_diffset(std::istream& in);
DiffSet parse_diffset_text(std::string_view text);
void write_diffset(std::ostream& out, const DiffSet& r);

}  // namespace nps
