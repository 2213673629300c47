#include "nps/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <set>
#include <span>
#include <stdexcept>
#include <thread>

namespace nps {

void SearchSpec::validate() const {
  if (m < 2) throw std::invalid_argument("search spec: m must be >= 2");
  if (period < 3) throw std::invalid_argument("search spec: period must be >= 3");
  if (node_budget == 0) throw std::invalid_argument("search spec: node budget must be positive");
  if (time_budget_seconds && !(*time_budget_seconds > 0))
    throw std::invalid_argument("search spec: time budget must be positive");
  switch (zero_mode) {
    case ZeroMode::Explicit: {
      std::vector<int> z = zeros;
      std::sort(z.begin(), z.end());
      if (std::adjacent_find(z.begin(), z.end()) != z.end())
        throw std::invalid_argument("search spec: repeated zero position");
      for (int x : z)
        if (x < 0 || x >= period) throw std::invalid_argument("search spec: zero position out of range");
      if (static_cast<int>(z.size()) >= period) throw std::invalid_argument("search spec: no free positions");
      break;
    }
    case ZeroMode::Consecutive:
      break;
    case ZeroMode::Count:
      if (zero_count < 0 || zero_count >= period)
        throw std::invalid_argument("search spec: zero count must lie in [0, period)");
      break;
  }
}

namespace {

void combinations(int n, int s, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == s) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, s, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<int> sorted_image(const std::vector<int>& z, int n, int c, bool reflect) {
  std::vector<int> out;
  for (int x : z) out.push_back(static_cast<int>(reflect ? mod(c - x, n) : mod(x - c, n)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::vector<int>> SearchSpec::zero_sets() const {
  switch (zero_mode) {
    case ZeroMode::Explicit: {
      std::vector<int> z = zeros;
      std::sort(z.begin(), z.end());
      return {z};
    }
    case ZeroMode::Consecutive:
      return {{0, 1}};
    case ZeroMode::Count: {
      std::vector<std::vector<int>> all;
      std::vector<int> cur;
      combinations(period, zero_count, 0, cur, all);
      if (!dedup_rotation && !dedup_reversal) return all;
      std::vector<std::vector<int>> out;
      for (const auto& z : all) {
        bool least = true;
        for (int c = 0; c < period && least; ++c) {
          if (dedup_rotation && sorted_image(z, period, c, false) < z) least = false;
          if (dedup_reversal && sorted_image(z, period, c, true) < z) least = false;
        }
        if (least) out.push_back(z);
      }
      return out;
    }
  }
  return {};
}

AlmostSequence canonical_form(const AlmostSequence& seq, bool rotation, bool scalar, bool reversal) {
  const int n = static_cast<int>(seq.period());
  std::vector<int> z;
  for (auto p : seq.zero_positions()) z.push_back(static_cast<int>(p));

  std::vector<int> rotations{0};
  std::vector<int> reflections;
  if (reversal)
    for (int c = 0; c < n; ++c)
      if (sorted_image(z, n, c, true) == z) reflections.push_back(c);
  if (rotation || !reflections.empty())
    for (int r = 1; r < n; ++r)
      if (sorted_image(z, n, r, false) == z) rotations.push_back(r);

  std::vector<AlmostSequence> images;
  for (int r : rotations) images.push_back(rotate(seq, r));
  for (int c : reflections) images.push_back(rotate(reversed(seq), -c));
  AlmostSequence best = seq;
  for (const auto& img : images) {
    for (int k = 0; k < (scalar ? seq.order() : 1); ++k) {
      AlmostSequence cand = scalar_mul(img, k);
      if (cand.symbols() < best.symbols()) best = cand;
    }
  }
  best.set_label(seq.label());
  return best;
}

namespace {

// Admissible (gamma1, gamma2) for zeros at 0 and ell = d, period n + 2.
std::vector<std::pair<Int, Int>> admissible_pairs(int m, int period, int d) {
  const int ell = std::min(d, period - d);
  const bool degenerate = 2 * ell == period;
  const Int nonzero = period - 2;
  std::vector<std::pair<Int, Int>> out;
  for (Int g1 = -period; g1 <= period; ++g1) {
    for (Int g2 = -period; g2 <= period; ++g2) {
      auto params = nps_params(nonzero, m, g1, g2, ell, period);
      if (!params || params->mu1 < 0 || params->mu2 < 0 || params->lambda1 < 0 || params->lambda3 < 0) continue;
      if (!degenerate && !feasible(nonzero, m, g1, g2).feasible) continue;
      out.emplace_back(g1, g2);
    }
  }
  return out;
}

struct Candidate {
  int ell = 0;  // 0: uniform
  Int g1 = 0;
  Int g2 = 0;
  std::vector<Int> gamma;  // per shift t
  std::vector<Int> mu;     // per shift t
};

struct Problem {
  int n = 0;
  int m = 0;
  std::vector<int> zeros;
  std::vector<char> is_zero;
  std::vector<int> free_positions;
  std::vector<int> partner;  // forced-equal earlier position, or -1
  std::vector<Int> pairs;    // P_t, nonzero pairs at shift t
  bool prime_m = false;
  std::vector<Candidate> candidates;
  bool no_candidates = false;
};

bool matches_filter(const SearchSpec& spec, const NpsClassification& c) {
  using K = NpsClassification::Kind;
  switch (spec.filter) {
    case SearchSpec::Filter::AnyNps:
      return c.is_nps();
    case SearchSpec::Filter::Uniform:
      return (c.kind == K::UniformNps && c.gamma1 == spec.gamma1) || (c.kind == K::Perfect && spec.gamma1 == 0);
    case SearchSpec::Filter::Pair:
      return c.kind == K::TwoValuedNps && c.gamma1 == spec.gamma1 && c.gamma2 == spec.gamma2;
  }
  return false;
}

Problem make_problem(const SearchSpec& spec, const std::vector<int>& zeros) {
  Problem pr;
  pr.n = spec.period;
  pr.m = spec.m;
  pr.zeros = zeros;
  pr.is_zero.assign(static_cast<std::size_t>(pr.n), 0);
  for (int z : zeros) pr.is_zero[static_cast<std::size_t>(z)] = 1;
  for (int i = 0; i < pr.n; ++i)
    if (!pr.is_zero[static_cast<std::size_t>(i)]) pr.free_positions.push_back(i);
  pr.prime_m = is_prime(pr.m);

  pr.partner.assign(static_cast<std::size_t>(pr.n), -1);
  const bool consecutive = zeros == std::vector<int>{0, 1};
  if (spec.symmetry_prune && consecutive && pr.m % 2 == 1 && pr.prime_m) {
    for (int i = 2; i < pr.n; ++i) {
      const int j = static_cast<int>(mod(1 - i, pr.n));
      if (j < i) pr.partner[static_cast<std::size_t>(i)] = j;
    }
  }

  pr.pairs.assign(static_cast<std::size_t>(pr.n), 0);
  for (int t = 1; t < pr.n; ++t)
    for (int i = 0; i < pr.n; ++i)
      if (!pr.is_zero[static_cast<std::size_t>(i)] && !pr.is_zero[static_cast<std::size_t>((i + t) % pr.n)])
        ++pr.pairs[static_cast<std::size_t>(t)];

  if (!spec.correlation_prune || !pr.prime_m) return pr;

  std::set<std::pair<Int, Int>> allowed;
  int zero_distance = 0;
  const bool use_prefilter = spec.prefilter && zeros.size() == 2;
  if (use_prefilter) {
    zero_distance = zeros[1] - zeros[0];
    for (auto pq : admissible_pairs(pr.m, pr.n, zero_distance)) allowed.insert(pq);
    zero_distance = std::min(zero_distance, pr.n - zero_distance);
  }

  auto add = [&](int ell, Int g1, Int g2) {
    if (use_prefilter && (ell == 0 || ell == zero_distance) && !allowed.count({g1, g2})) return;
    Candidate c{ell, g1, g2, std::vector<Int>(static_cast<std::size_t>(pr.n), 0),
                std::vector<Int>(static_cast<std::size_t>(pr.n), 0)};
    for (int t = 1; t < pr.n; ++t) {
      const Int g = (ell != 0 && (t == ell || t == pr.n - ell)) ? g1 : g2;
      const Int p = pr.pairs[static_cast<std::size_t>(t)];
      if ((p - g) % pr.m != 0) return;
      const Int mu = (p - g) / pr.m;
      if (mu < 0 || g + mu < 0) return;
      c.gamma[static_cast<std::size_t>(t)] = g;
      c.mu[static_cast<std::size_t>(t)] = mu;
    }
    pr.candidates.push_back(std::move(c));
  };

  const Int lim = pr.n;
  switch (spec.filter) {
    case SearchSpec::Filter::Uniform:
      add(0, spec.gamma1, spec.gamma1);
      break;
    case SearchSpec::Filter::Pair:
      for (int ell = 1; 2 * ell <= pr.n; ++ell) add(ell, spec.gamma1, spec.gamma2);
      break;
    case SearchSpec::Filter::AnyNps:
      for (Int g = -lim; g <= lim; ++g) add(0, g, g);
      for (int ell = 1; 2 * ell <= pr.n; ++ell)
        for (Int g1 = -lim; g1 <= lim; ++g1)
          for (Int g2 = -lim; g2 <= lim; ++g2)
            if (g1 != g2) add(ell, g1, g2);
      break;
  }
  pr.no_candidates = pr.candidates.empty();
  return pr;
}

struct TaskResult {
  std::map<std::vector<Symbol>, AlmostSequence> found;
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned_correlation = 0;
  std::uint64_t pruned_symmetry = 0;
  bool budget_hit = false;
  bool time_hit = false;
};

class Worker {
 public:
  Worker(const SearchSpec& spec, const Problem& pr, std::uint64_t limit,
         std::optional<std::chrono::steady_clock::time_point> deadline, std::atomic<bool>& timed_out)
      : spec_(spec), pr_(pr), limit_(limit), deadline_(deadline), timed_out_(timed_out) {
    const auto n = static_cast<std::size_t>(pr.n);
    b_.assign(n, -1);
    counts_.assign(n * static_cast<std::size_t>(pr.m), 0);
    done_.assign(n, 0);
    std::vector<int> all(pr.candidates.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    alive_.push_back(std::move(all));
  }

  TaskResult run(std::optional<int> first_value) {
    if (pr_.free_positions.empty()) {
      leaf();
    } else if (first_value) {
      visit(0, *first_value);
    } else {
      descend(0);
    }
    return std::move(result_);
  }

 private:
  bool stopped() {
    if (result_.budget_hit || result_.time_hit) return true;
    if (result_.nodes >= limit_) {
      result_.budget_hit = true;
      return true;
    }
    if (timed_out_.load(std::memory_order_relaxed)) {
      result_.time_hit = true;
      return true;
    }
    if (deadline_ && (result_.nodes & 0x3ff) == 0 && std::chrono::steady_clock::now() > *deadline_) {
      timed_out_ = true;
      result_.time_hit = true;
      return true;
    }
    return false;
  }

  void descend(std::size_t depth) {
    if (depth == pr_.free_positions.size()) {
      leaf();
      return;
    }
    const int pos = pr_.free_positions[depth];
    const int partner = pr_.partner[static_cast<std::size_t>(pos)];
    if (partner >= 0) {
      result_.pruned_symmetry += static_cast<std::uint64_t>(pr_.m - 1);
      visit(depth, b_[static_cast<std::size_t>(partner)]);
      return;
    }
    for (int v = 0; v < pr_.m; ++v) {
      if (stopped()) return;
      visit(depth, v);
    }
  }

  Int& count(int t, Int j) {
    return counts_[static_cast<std::size_t>(t) * static_cast<std::size_t>(pr_.m) + static_cast<std::size_t>(mod(j, pr_.m))];
  }

  void apply(int pos, int v, int sign, std::vector<int>& touched) {
    for (std::size_t d = 0; d < assigned_.size(); ++d) {
      const int j = assigned_[d];
      const int bj = b_[static_cast<std::size_t>(j)];
      const int t1 = static_cast<int>(mod(j - pos, pr_.n));
      const int t2 = pr_.n - t1;
      count(t1, v - bj) += sign;
      count(t2, bj - v) += sign;
      done_[static_cast<std::size_t>(t1)] += sign;
      done_[static_cast<std::size_t>(t2)] += sign;
      touched.push_back(t1);
      touched.push_back(t2);
    }
  }

  bool consistent(const std::vector<int>& touched) {
    if (!spec_.correlation_prune) return true;
    if (pr_.prime_m) {
      std::vector<int> next;
      for (int ci : alive_.back()) {
        const Candidate& c = pr_.candidates[static_cast<std::size_t>(ci)];
        bool ok = true;
        for (int t : touched) {
          const auto ts = static_cast<std::size_t>(t);
          if (count(t, 0) > c.gamma[ts] + c.mu[ts]) {
            ok = false;
            break;
          }
          for (int j = 1; j < pr_.m && ok; ++j)
            if (count(t, j) > c.mu[ts]) ok = false;
          if (!ok) break;
        }
        if (ok) next.push_back(ci);
      }
      if (next.empty()) return false;
      alive_.push_back(std::move(next));
      return true;
    }
    // Composite m: only completed shifts are evaluated.
    for (int t : touched) {
      const auto ts = static_cast<std::size_t>(t);
      if (done_[ts] != pr_.pairs[ts]) continue;
      const auto* row = &counts_[ts * static_cast<std::size_t>(pr_.m)];
      auto value = CycInt::from_power_counts(pr_.m, std::span<const Int>(row, static_cast<std::size_t>(pr_.m))).as_integer();
      if (!value) return false;
      if (spec_.filter == SearchSpec::Filter::Uniform && *value != spec_.gamma1) return false;
      if (spec_.filter == SearchSpec::Filter::Pair && *value != spec_.gamma1 && *value != spec_.gamma2) return false;
    }
    return true;
  }

  void visit(std::size_t depth, int v) {
    if (stopped()) return;
    ++result_.nodes;
    const int pos = pr_.free_positions[depth];
    std::vector<int> touched;
    apply(pos, v, +1, touched);
    b_[static_cast<std::size_t>(pos)] = v;
    assigned_.push_back(pos);
    const std::size_t alive_depth = alive_.size();
    if (consistent(touched)) {
      descend(depth + 1);
    } else {
      ++result_.pruned_correlation;
    }
    alive_.resize(alive_depth);
    assigned_.pop_back();
    b_[static_cast<std::size_t>(pos)] = -1;
    touched.clear();
    apply(pos, v, -1, touched);
  }

  void leaf() {
    ++result_.leaves;
    std::vector<Symbol> symbols(static_cast<std::size_t>(pr_.n), Symbol::zero());
    for (int pos : pr_.free_positions) symbols[static_cast<std::size_t>(pos)] = Symbol::exp(b_[static_cast<std::size_t>(pos)]);
    AlmostSequence seq(pr_.m, std::move(symbols));
    if (spec_.nontrivial_only && is_trivial(seq)) return;
    if (!matches_filter(spec_, classify(seq))) return;
    AlmostSequence canon = canonical_form(seq, spec_.dedup_rotation, spec_.dedup_scalar, spec_.dedup_reversal);
    result_.found.emplace(canon.symbols(), std::move(canon));
  }

  const SearchSpec& spec_;
  const Problem& pr_;
  std::uint64_t limit_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::atomic<bool>& timed_out_;
  std::vector<int> b_;
  std::vector<int> assigned_;
  std::vector<Int> counts_;
  std::vector<Int> done_;
  std::vector<std::vector<int>> alive_;
  TaskResult result_;
};

unsigned resolve_jobs(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("NPS_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<std::pair<Int, Int>> feasibility_prefilter(const SearchSpec& spec) {
  spec.validate();
  const auto sets = spec.zero_sets();
  if (sets.size() != 1 || sets.front().size() != 2)
    throw std::invalid_argument("feasibility_prefilter: spec must fix exactly two zero positions");
  const auto& z = sets.front();
  return admissible_pairs(spec.m, spec.period, z[1] - z[0]);
}

SearchReport exhaustive_search(const SearchSpec& spec) {
  spec.validate();
  SearchReport report;
  report.spec = spec;

  struct Task {
    std::size_t problem;
    std::optional<int> first_value;
  };
  std::vector<Problem> problems;
  std::vector<Task> tasks;
  for (const auto& z : spec.zero_sets()) {
    problems.push_back(make_problem(spec, z));
    const Problem& pr = problems.back();
    if (pr.no_candidates) continue;
    if (pr.free_positions.empty()) {
      tasks.push_back({problems.size() - 1, std::nullopt});
    } else {
      for (int v = 0; v < spec.m; ++v) tasks.push_back({problems.size() - 1, v});
    }
  }

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (spec.time_budget_seconds)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(*spec.time_budget_seconds));
  std::atomic<bool> timed_out{false};

  auto run_task = [&](const Task& task, std::uint64_t limit) {
    Worker w(spec, problems[task.problem], limit, deadline, timed_out);
    return w.run(task.first_value);
  };

  std::vector<TaskResult> results(tasks.size());
  const unsigned jobs = std::min<unsigned>(resolve_jobs(spec.jobs), static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = run_task(tasks[i], spec.node_budget);
  };
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  std::map<std::vector<Symbol>, AlmostSequence> found;
  auto merge = [&](TaskResult& r) {
    report.nodes += r.nodes;
    report.leaves += r.leaves;
    report.pruned_correlation += r.pruned_correlation;
    report.pruned_symmetry += r.pruned_symmetry;
    for (auto& [key, seq] : r.found) found.emplace(key, std::move(seq));
  };
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    TaskResult& r = results[i];
    if (r.time_hit) {
      merge(r);
      report.exhaustive = false;
      break;
    }
    const std::uint64_t remaining = spec.node_budget - report.nodes;
    if (r.nodes <= remaining && !r.budget_hit) {
      merge(r);
      continue;
    }
    // This task crosses the global budget: replay it with the exact remainder.
    TaskResult partial = run_task(tasks[i], remaining);
    merge(partial);
    report.exhaustive = false;
    break;
  }

  for (auto& [key, seq] : found) {
    ++report.counts_by_type[classify(seq).type_string()];
    report.found.push_back(std::move(seq));
  }
  return report;
}

namespace {

Int saturating_binomial(Int n, Int k, Int cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide r = 1;
  for (Int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<Int>(r);
}

struct CompositionCheck {
  int m;
  Int k;
  Int squares_target;
  Int shifted_target;
  std::vector<Int> s;
  bool found = false;

  void run(int idx, Int left, Int squares) {
    if (found || squares > squares_target) return;
    if (idx == m - 1) {
      s[static_cast<std::size_t>(idx)] = left;
      if (squares + left * left == squares_target && shifted_ok()) found = true;
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      s[static_cast<std::size_t>(idx)] = v;
      run(idx + 1, left - v, squares + v * v);
    }
  }

  bool shifted_ok() const {
    for (int i = 1; i <= m / 2; ++i) {
      Int acc = 0;
      for (int j = 0; j < m; ++j) acc += s[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(mod(j - i, m))];
      if (acc != shifted_target) return false;
    }
    return true;
  }
};

PdpdsParams normalized_params(int n, int m, int ell, const PdpdsParams& params) {
  if (n < 2 || m < 1) throw std::invalid_argument("pdpds_search: n must be >= 2 and m >= 1");
  if (params.n != n || params.m != m) throw std::invalid_argument("pdpds_search: params do not match (n, m)");
  if (params.k < 1 || params.k > static_cast<Int>(n) * m) throw std::invalid_argument("pdpds_search: k out of range");
  PdpdsParams p = params;
  if (ell == 0) {
    if (p.lambda3 != p.lambda1 || p.mu2 != p.mu1)
      throw std::invalid_argument("pdpds_search: ell = 0 needs DPDS parameters (lambda3 = lambda1, mu2 = mu1)");
    p.ell = 1;
  } else {
    const int e = static_cast<int>(mod(ell, n));
    if (e == 0) throw std::invalid_argument("pdpds_search: ell must be nonzero modulo n");
    p.ell = std::min(e, n - e);
  }
  return p;
}

}  // namespace

bool pdpds_params_admissible(int n, int m, int ell, const PdpdsParams& params) {
  const PdpdsParams p = normalized_params(n, m, ell, params);
  const auto sizes = bucket_sizes(n, m, p.ell);
  const std::array<Int, 6> want{0, p.lambda1, p.lambda2, p.lambda3, p.mu1, p.mu2};
  for (Int w : want)
    if (w < 0) return false;
  Int total = 0;
  for (int b = 1; b <= 5; ++b) total += sizes[static_cast<std::size_t>(b)] * want[static_cast<std::size_t>(b)];
  if (total != p.k * (p.k - 1)) return false;

  CompositionCheck check{m, p.k, sizes[1] * p.lambda1 + sizes[3] * p.lambda3 + p.k,
                         sizes[1] * p.mu1 + p.lambda2 + sizes[3] * p.mu2, std::vector<Int>(static_cast<std::size_t>(m), 0)};
  check.run(0, p.k, 0);
  return check.found;
}

std::vector<DiffSet> pdpds_search(int n, int m, int ell, const PdpdsParams& params, const PdpdsSearchOptions& options) {
  const PdpdsParams p = normalized_params(n, m, ell, params);
  if (!pdpds_params_admissible(n, m, ell, params)) return {};

  const Int order = static_cast<Int>(n) * m;
  const Int limit = static_cast<Int>(std::min<std::uint64_t>(options.enumeration_limit, std::numeric_limits<Int>::max() / 2));
  if (saturating_binomial(order - 1, p.k - 1, limit) > limit)
    throw std::invalid_argument("pdpds_search: binomial(" + std::to_string(order - 1) + ", " + std::to_string(p.k - 1) +
                                ") exceeds the enumeration limit");

  const std::array<Int, 6> want{0, p.lambda1, p.lambda2, p.lambda3, p.mu1, p.mu2};
  std::vector<Int> target(static_cast<std::size_t>(order), 0);
  for (int h = 0; h < n; ++h)
    for (int q = 0; q < m; ++q)
      if (h != 0 || q != 0)
        target[static_cast<std::size_t>(h * m + q)] = want[static_cast<std::size_t>(bucket_of({h, q}, n, p.ell))];

  std::vector<Int> cnt(static_cast<std::size_t>(order), 0);
  std::vector<int> chosen{0};
  std::set<std::vector<GroupElem>> seen;
  std::vector<DiffSet> out;

  auto diff_index = [&](int a, int b) {
    const int h = static_cast<int>(mod(a / m - b / m, n));
    const int q = static_cast<int>(mod(a % m - b % m, m));
    return static_cast<std::size_t>(h * m + q);
  };

  auto record = [&] {
    std::vector<GroupElem> elems;
    for (int x : chosen) elems.push_back({x / m, x % m});
    DiffSet r(n, m, elems);
    if (!is_lpdpds(r, p)) return;
    DiffSet best = r;
    for (auto x : r.elements()) {
      DiffSet t = r.translate({(n - x.h) % n, (m - x.p) % m});
      if (t.elements() < best.elements()) best = std::move(t);
    }
    if (seen.insert(best.elements()).second) out.push_back(std::move(best));
  };

  auto dfs = [&](auto&& self, int start) -> void {
    if (static_cast<Int>(chosen.size()) == p.k) {
      record();
      return;
    }
    const Int need = p.k - static_cast<Int>(chosen.size());
    for (int x = start; x + need <= order; ++x) {
      bool ok = true;
      std::size_t applied = 0;
      for (; applied < chosen.size(); ++applied) {
        const int y = chosen[applied];
        const auto d1 = diff_index(x, y);
        const auto d2 = diff_index(y, x);
        ++cnt[d1];
        ++cnt[d2];
        if (cnt[d1] > target[d1] || cnt[d2] > target[d2]) {
          ++applied;
          ok = false;
          break;
        }
      }
      if (ok) {
        chosen.push_back(x);
        self(self, x + 1);
        chosen.pop_back();
      }
      for (std::size_t i = 0; i < applied; ++i) {
        --cnt[diff_index(x, chosen[i])];
        --cnt[diff_index(chosen[i], x)];
      }
    }
  };
  dfs(dfs, 1);

  std::sort(out.begin(), out.end(), [](const DiffSet& a, const DiffSet& b) { return a.elements() < b.elements(); });
  return out;
}

}  // namespace nps
