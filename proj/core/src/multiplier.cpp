#include "nps/multiplier.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nps {
namespace {

GroupElem scale_elem(GroupElem x, Int t, int n, int m) {
  return {static_cast<int>(mod(mod(t, n) * x.h, n)), static_cast<int>(mod(mod(t, m) * x.p, m))};
}

}  // namespace

std::vector<Multiplier> find_multipliers(const DiffSet& r) {
  const int n = r.n();
  const int m = r.m();
  const Int order = static_cast<Int>(n) * m;
  std::vector<Multiplier> out;

  std::vector<char> member(static_cast<std::size_t>(order), 0);
  for (auto x : r.elements()) member[r.index(x)] = 1;

  std::vector<GroupElem> image;
  for (Int t = 1; t < std::max<Int>(order, 2); ++t) {
    if (std::gcd(t, order) != 1) continue;
    image.clear();
    for (auto x : r.elements()) image.push_back(scale_elem(x, t, n, m));
    // t*R = R + g forces g = image[0] - r for some r in R.
    std::vector<GroupElem> shifts;
    if (r.size() == 0) {
      for (int h = 0; h < n; ++h)
        for (int p = 0; p < m; ++p) out.push_back({t, {h, p}});
      continue;
    }
    for (auto base : r.elements()) {
      const GroupElem g = sub(image.front(), base, n, m);
      // |t*R| == |R|, so t*R - g contained in R means equality.
      bool matches = true;
      for (auto y : image) {
        if (!member[r.index(sub(y, g, n, m))]) {
          matches = false;
          break;
        }
      }
      if (matches) shifts.push_back(g);
    }
    std::sort(shifts.begin(), shifts.end());
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
    for (auto g : shifts) out.push_back({t, g});
  }
  return out;
}

bool acts_trivially(int n, int m, Int t) { return mod(t - 1, n) == 0 && mod(t - 1, m) == 0; }

std::vector<Orbit> orbits(int n, int m, Int t) {
  const Int order = static_cast<Int>(n) * m;
  if (std::gcd(mod(t, order), order) != 1 && order > 1)
    throw std::invalid_argument("orbits: gcd(t, n*m) must be 1");
  std::vector<char> seen(static_cast<std::size_t>(order), 0);
  std::vector<Orbit> out;
  for (int h = 0; h < n; ++h) {
    for (int p = 0; p < m; ++p) {
      const GroupElem start{h, p};
      if (seen[static_cast<std::size_t>(h) * m + p]) continue;
      Orbit orbit;
      GroupElem x = start;
      do {
        seen[static_cast<std::size_t>(x.h) * m + x.p] = 1;
        orbit.elements.push_back(x);
        x = scale_elem(x, t, n, m);
      } while (x != start);
      std::sort(orbit.elements.begin(), orbit.elements.end());
      out.push_back(std::move(orbit));
    }
  }
  // Scanning in element order already yields orbits sorted by minimal element.
  return out;
}

bool is_orbit_union(const DiffSet& r, Int t) { return r.scale(t) == r; }

namespace {

struct OrbitSearch {
  int n;
  int m;
  const OrbitSearchConstraints& c;
  std::vector<Orbit> candidates;     // sorted by size, descending
  std::vector<std::size_t> suffix;   // total size of candidates[i..]
  std::vector<char> h_used;
  std::vector<std::size_t> chosen;
  std::vector<OrbitCollection> results;

  void run(std::size_t next, std::size_t size) {
    if (size == c.k) {
      record();
      return;
    }
    if (next == candidates.size() || size + suffix[next] < c.k) return;
    for (std::size_t i = next; i < candidates.size(); ++i) {
      const Orbit& o = candidates[i];
      if (size + o.elements.size() > c.k) continue;
      if (size + suffix[i] < c.k) break;
      if (c.one_per_h && std::any_of(o.elements.begin(), o.elements.end(),
                                     [&](GroupElem x) { return h_used[static_cast<std::size_t>(x.h)] != 0; }))
        continue;
      for (auto x : o.elements) h_used[static_cast<std::size_t>(x.h)] = 1;
      chosen.push_back(i);
      run(i + 1, size + o.elements.size());
      chosen.pop_back();
      for (auto x : o.elements) h_used[static_cast<std::size_t>(x.h)] = 0;
    }
  }

  void record() {
    std::vector<GroupElem> elems;
    std::vector<Orbit> picked;
    for (auto i : chosen) {
      picked.push_back(candidates[i]);
      elems.insert(elems.end(), candidates[i].elements.begin(), candidates[i].elements.end());
    }
    DiffSet set(n, m, std::move(elems));
    std::optional<PdpdsParams> params;
    if (c.require_pdpds || c.ell) {
      if (c.ell) {
        auto verdict = verify_lpdpds(set, *c.ell);
        if (auto* p = std::get_if<PdpdsParams>(&verdict)) params = *p;
      } else {
        for (int ell = 1; 2 * ell <= n && !params; ++ell) {
          auto verdict = verify_lpdpds(set, ell);
          if (auto* p = std::get_if<PdpdsParams>(&verdict)) params = *p;
        }
      }
      if (c.require_pdpds && !params) return;
    }
    std::sort(picked.begin(), picked.end(), [](const Orbit& a, const Orbit& b) { return a.min() < b.min(); });
    results.push_back({std::move(picked), std::move(set), params});
  }
};

}  // namespace

std::vector<OrbitCollection> orbit_union_search(int n, int m, Int t, const OrbitSearchConstraints& constraints) {
  OrbitSearch search{n, m, constraints, {}, {}, std::vector<char>(static_cast<std::size_t>(n), 0), {}, {}};
  for (auto& o : orbits(n, m, t)) {
    if (constraints.one_per_h) {
      std::vector<int> hs;
      for (auto x : o.elements) hs.push_back(x.h);
      std::sort(hs.begin(), hs.end());
      if (std::adjacent_find(hs.begin(), hs.end()) != hs.end()) continue;
    }
    if (std::any_of(o.elements.begin(), o.elements.end(), [&](GroupElem x) {
          return std::find(constraints.zero_positions.begin(), constraints.zero_positions.end(), x.h) !=
                 constraints.zero_positions.end();
        }))
      continue;
    search.candidates.push_back(std::move(o));
  }
  std::stable_sort(search.candidates.begin(), search.candidates.end(),
                   [](const Orbit& a, const Orbit& b) { return a.elements.size() > b.elements.size(); });
  // Parity-style cut: the union size is a combination of orbit sizes.
  std::size_t size_gcd = 0;
  for (const auto& o : search.candidates) size_gcd = std::gcd(size_gcd, o.elements.size());
  if (constraints.k > 0 && (size_gcd == 0 || constraints.k % size_gcd != 0)) return {};

  search.suffix.assign(search.candidates.size() + 1, 0);
  for (std::size_t i = search.candidates.size(); i-- > 0;)
    search.suffix[i] = search.suffix[i + 1] + search.candidates[i].elements.size();

  search.run(0, 0);

  auto key = [](const OrbitCollection& c) {
    std::vector<GroupElem> mins;
    for (const auto& o : c.orbits) mins.push_back(o.min());
    return mins;
  };
  std::sort(search.results.begin(), search.results.end(),
            [&](const OrbitCollection& a, const OrbitCollection& b) { return key(a) < key(b); });
  return std::move(search.results);
}

bool check_symmetry_thm(const DiffSet& ra) {
  const int n = ra.n();
  std::vector<int> b(static_cast<std::size_t>(n), -1);
  for (auto x : ra.elements()) {
    if (b[static_cast<std::size_t>(x.h)] != -1)
      throw std::invalid_argument("check_symmetry_thm: h-coordinate " + std::to_string(x.h) + " occurs twice");
    b[static_cast<std::size_t>(x.h)] = x.p;
  }
  for (int i = 0; i < n; ++i) {
    const bool expect_zero = i == 0 || i == 1 % n;
    if ((b[static_cast<std::size_t>(i)] == -1) != expect_zero)
      throw std::invalid_argument("check_symmetry_thm: R must cover every h except 0 and 1");
  }
  for (int i = 2; i < n; ++i)
    if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(mod(1 - i, n))]) return false;
  return true;
}

}  // namespace nps
