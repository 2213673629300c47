#pragma once

// Subsets of G = Z_n x Z_m and the ell-partial direct product difference set
// (ell-PDPDS) conditions on them.
//
// H = <h> and P = <g> are written additively: the pair (i, b) stands for
// h^i g^b. A sequence with zero-symbols maps to R_a = {(i, b_i) : a_i != 0}.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nps/arith.hpp"
#include "nps/sequence.hpp"

namespace nps {

struct GroupElem {
  int h = 0;
  int p = 0;
  constexpr auto operator<=>(const GroupElem&) const = default;
};

class DiffSet {
 public:
  /// Elements are reduced into range, sorted and must be distinct.
  DiffSet(int n, int m, std::vector<GroupElem> elems);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const std::vector<GroupElem>& elements() const noexcept { return elems_; }
  bool contains(GroupElem x) const;

  /// Dense index h*m + p.
  std::size_t index(GroupElem x) const noexcept {
    return static_cast<std::size_t>(x.h) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(x.p);
  }

  DiffSet translate(GroupElem g) const;
  /// {t*r : r in R}, multiplying both coordinates.
  DiffSet scale(Int t) const;

  bool operator==(const DiffSet&) const = default;

 private:
  int n_;
  int m_;
  std::vector<GroupElem> elems_;
};

GroupElem add(GroupElem a, GroupElem b, int n, int m) noexcept;
GroupElem sub(GroupElem a, GroupElem b, int n, int m) noexcept;

/// Multiset of differences r1 - r2 over ordered pairs r1 != r2, stored densely.
class DifferenceTable {
 public:
  DifferenceTable(int n, int m) : n_(n), m_(m), counts_(static_cast<std::size_t>(n) * m, 0) {}

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  Int count(GroupElem x) const { return counts_[static_cast<std::size_t>(x.h) * m_ + x.p]; }
  Int& at(GroupElem x) { return counts_[static_cast<std::size_t>(x.h) * m_ + x.p]; }
  Int total() const;

 private:
  int n_;
  int m_;
  std::vector<Int> counts_;
};

DifferenceTable difference_table(const DiffSet& r);

struct PdpdsParams {
  int ell = 1;  // reported as min(ell, n - ell)
  int n = 0;
  int m = 0;
  Int k = 0;
  Int lambda1 = 0;
  Int lambda2 = 0;
  Int lambda3 = 0;
  Int mu1 = 0;
  Int mu2 = 0;

  bool operator==(const PdpdsParams&) const = default;

  /// "ell-(n,m,k,l1,l2,l3,u1,u2)".
  std::string to_string() const;
  /// Parses the to_string() form.
  static PdpdsParams parse(const std::string& text);
};

/// The five difference families, numbered as in the definition of an ell-PDPDS.
enum class Bucket : int {
  GenericH = 1,      // (d, 0), d not in {0, ell, n-ell}
  PureP = 2,         // (0, p), p != 0
  EllH = 3,          // (ell, 0) and (n-ell, 0)
  GenericMixed = 4,  // (d, p), d not in {0, ell, n-ell}, p != 0
  EllMixed = 5,      // (ell or n-ell, p), p != 0
};

std::string_view to_string(Bucket b) noexcept;

/// Bucket of a nonidentity element for the given ell (1 <= ell < n).
Bucket bucket_of(GroupElem x, int n, int ell) noexcept;

/// Number of group elements in each bucket; index by static_cast<int>(Bucket).
std::array<Int, 6> bucket_sizes(int n, int m, int ell);

struct BucketFailure {
  Bucket bucket;
  GroupElem first;
  Int first_count;
  GroupElem second;
  Int second_count;

  std::string to_string() const;
};

using PdpdsVerdict = std::variant<PdpdsParams, BucketFailure>;

/// Checks that every bucket of the difference table is constant. When
/// 2*ell == n the two ell-shifts coincide and buckets 3 and 5 each have a
/// single h-value. Empty buckets (e.g. no generic h-values when n == 3) are
/// reported as 0. Throws std::invalid_argument for ell == 0 mod n.
PdpdsVerdict verify_lpdpds(const DiffSet& r, int ell);

/// True iff R is an ell-PDPDS with exactly these parameters (ell and n - ell
/// are interchangeable). Constants of
/// empty buckets are unconstrained.
bool is_lpdpds(const DiffSet& r, const PdpdsParams& params);

/// Recomputes R R^(-1) (identity included) and compares it term by term with
/// the group-ring form of the parameters.
bool verify_group_ring_identity(const DiffSet& r, const PdpdsParams& params);

enum class DesignKind { DifferenceSet, RelativeDifferenceSet, DirectProductDifferenceSet, ProperPdpds };

std::string_view to_string(DesignKind k) noexcept;

/// Degeneration of an ell-PDPDS: DS when all five constants agree; RDS when
/// lambda2 = 0 and lambda1 = lambda3 = mu1 = mu2; DPDS when lambda3 = lambda1
/// and mu2 = mu1 (the ell-shifts are then indistinguishable from generic ones).
DesignKind special_case_of(const PdpdsParams& params);

struct Prop5Instance {
  DiffSet set;
  PdpdsParams expected;
  bool is_dpds;  // a == b
};

/// R = ({a} x (Z_n \ {b})) u ((Z_n \ {b}) x {b}) in Z_n x Z_n with its claimed
/// parameters: ell-(n,n,2n-2,n-2,n,n-2,2,1) for ell = (a-b) mod n != 0, or the
/// (n,n,2n-2,n-2,n-2,2)-DPDS (encoded with ell = 1, lambda3 = lambda1,
/// mu2 = mu1) when a == b.
Prop5Instance construct_prop5(int n, int a, int b);

/// {(i, b_i) : a_i != 0} in Z_N x Z_m.
DiffSet seq_to_diffset(const AlmostSequence& seq);

/// Inverse of seq_to_diffset; throws if two elements share an h-coordinate.
AlmostSequence diffset_to_seq(const DiffSet& r);

/// Parameters an NPS of type (gamma1, gamma2) with zero-symbols at 0 and ell
/// must give its R_a, or nullopt if the divisibility conditions fail.
/// For 2*ell == period the ell-shift pair collapses and mu2 = (n - gamma1)/m,
/// lambda3 = gamma1 + mu2.
std::optional<PdpdsParams> nps_params(Int n_nonzero, int m, Int gamma1, Int gamma2, int ell, int period);

struct ColumnSums {
  std::vector<Int> s;  // s[i] = |{(r1, r2) in R : r2 = i}|
};

ColumnSums column_sums(const DiffSet& r);

struct SiIdentityReport {
  bool ok = true;
  Int sum_squares = 0;                 // sum_j s_j^2
  Int expected_sum_squares = 0;        // g*lambda1 + e*lambda3 + k
  std::vector<Int> shifted_products;   // sum_j s_j s_{j-i}, i = 1..ceil((m-1)/2)
  Int expected_shifted = 0;            // g*mu1 + lambda2 + e*mu2
  std::vector<std::string> violations;
};

/// Column-sum identities of an ell-PDPDS. The multipliers of lambda1/mu1 and
/// lambda3/mu2 are the numbers of generic and ell-shift h-values: n-3 and 2,
/// or n-2 and 1 when 2*ell == n.
SiIdentityReport verify_si_identities(const DiffSet& r, const PdpdsParams& params);

/// floor((-m*k1 - 4 + sqrt(m^2 k1^2 - 4 m k1 + 8 m k2)) / 2) computed exactly,
/// or nullopt when the radicand is negative (bound not applicable).
std::optional<Int> nonexistence_bound(Int m, Int k1, Int k2);

struct Feasibility {
  bool feasible = true;
  std::string reason;
};

/// Necessary conditions for an almost m-ary NPS of type (gamma1, gamma2) with
/// two zero-symbols at 0 and ell (2*ell != period) and n nonzero entries
/// (period n + 2): integral, non-negative mu1 and mu2, and for odd prime m
/// the nonexistence bound (gamma2 <= T or gamma2 <= -3 is infeasible).
Feasibility feasible(Int n, Int m, Int gamma1, Int gamma2);

}  // namespace nps
