// Shared randomized generators and brute-force oracles for the test suites.
#pragma once

#include <random>
#include <set>
#include <vector>

#include "sigdelay/conditions.hpp"
#include "sigdelay/window.hpp"

namespace testsupport {

using namespace sigdelay;

using Rng = std::mt19937_64;

/// Random rational j/den with j uniform in [0, hi*den].
inline Rat rand_rat(Rng& rng, int hi, int den) {
  std::uniform_int_distribution<int> dist(0, hi * den);
  return Rat(dist(rng), den);
}

/// Random signal with up to max_toggles transitions on the 1/den grid
/// inside [0, horizon]. May end high (finite variability is all we need).
inline Signal rand_signal(Rng& rng, int horizon, int den, int max_toggles) {
  std::uniform_int_distribution<int> cnt(0, max_toggles);
  std::uniform_int_distribution<int> point(0, horizon * den);
  int n = cnt(rng);
  std::set<Rat> pts;
  for (int guard = 0; static_cast<int>(pts.size()) < n && guard < 10 * n + 10;
       ++guard)
    pts.insert(Rat(point(rng), den));
  std::vector<Rat> ts(pts.begin(), pts.end());
  return Signal{StepFunction{false, std::move(ts)}};
}

/// Random window parameters on the 1/den grid, 0 <= m <= d <= hi.
inline WindowSpec rand_window(Rng& rng, int hi, int den) {
  Rat d = rand_rat(rng, hi, den);
  std::uniform_int_distribution<long long> m_dist(
      0, static_cast<long long>(numerator(Rat(d * den))));
  return WindowSpec{d, Rat(m_dist(rng), den)};
}

/// Random CC-valid bounded-delay parameters on the 1/den grid.
inline BdcParams rand_cc_params(Rng& rng, int hi, int den) {
  for (;;) {
    WindowSpec r = rand_window(rng, hi, den);
    WindowSpec f = rand_window(rng, hi, den);
    BdcParams p{r.m, r.d, f.m, f.d};
    if (cc_bdc(p)) return p;
  }
}

/// Random CC-violating bounded-delay parameters.
inline BdcParams rand_cc_invalid(Rng& rng, int hi, int den) {
  for (;;) {
    WindowSpec r = rand_window(rng, hi, den);
    WindowSpec f = rand_window(rng, hi, den);
    BdcParams p{r.m, r.d, f.m, f.d};
    if (!cc_bdc(p)) return p;
  }
}

/// Closed-window infimum of u over [t-d, t-d+m], sampled at 1/sub steps.
/// Exact when every breakpoint of u and both window endpoints lie on the
/// 1/sub grid: u is then constant between adjacent sample points.
inline bool window_inf(const StepFunction& u, const Rat& t,
                       const WindowSpec& w, int sub) {
  Rat lo = t - w.d;
  Rat hi = lo + w.m;
  for (Rat s = lo; s <= hi; s += Rat(1, sub))
    if (!u.at(s)) return false;
  return true;
}

inline bool window_sup(const StepFunction& u, const Rat& t,
                       const WindowSpec& w, int sub) {
  Rat lo = t - w.d;
  Rat hi = lo + w.m;
  for (Rat s = lo; s <= hi; s += Rat(1, sub))
    if (u.at(s)) return true;
  return false;
}

/// Toggle a random nonempty pulse [a, b) on the 1/den grid into x.
inline Signal mutate(Rng& rng, const Signal& x, int horizon, int den) {
  std::uniform_int_distribution<int> point(0, horizon * den);
  for (;;) {
    Rat a(point(rng), den);
    Rat b(point(rng), den);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    StepFunction pulse{false, {a, b}};
    return Signal{x.fn() ^ pulse};
  }
}

}  // namespace testsupport
