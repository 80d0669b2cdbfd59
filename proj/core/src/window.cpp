#include "sigdelay/window.hpp"

namespace sigdelay {

WindowSpec WindowSpec::checked(Rat d, Rat m) {
  if (m < 0 || d < 0 || m > d)
    throw InvalidWindow("window needs 0 <= m <= d");
  return {std::move(d), std::move(m)};
}

namespace {

// Maximal 1-region of a step function; missing lo means a ray from -inf,
// missing hi a ray to +inf.
struct OneRegion {
  std::optional<Rat> lo;
  std::optional<Rat> hi;
};

std::vector<OneRegion> one_regions(const StepFunction& u) {
  std::vector<OneRegion> regions;
  bool value = u.initial_value();
  std::optional<Rat> open_lo;
  bool open_ray = value;  // 1 since -inf
  for (const Rat& t : u.transitions()) {
    value = !value;
    if (value) {
      open_lo = t;
    } else {
      if (open_ray) {
        regions.push_back({std::nullopt, t});
        open_ray = false;
      } else {
        regions.push_back({open_lo, t});
      }
      open_lo.reset();
    }
  }
  if (value) {
    if (open_ray)
      regions.push_back({std::nullopt, std::nullopt});
    else
      regions.push_back({open_lo, std::nullopt});
  }
  return regions;
}

StepFunction from_one_regions(std::vector<OneRegion> regions) {
  // regions arrive sorted and disjoint but may have become empty or adjacent
  std::vector<OneRegion> kept;
  for (auto& r : regions) {
    if (r.lo && r.hi && !(*r.lo < *r.hi)) continue;
    if (!kept.empty()) {
      auto& last = kept.back();
      bool touches = last.hi && r.lo && *r.lo <= *last.hi;
      if (!last.hi) touches = true;  // previous ray swallows everything after
      if (touches) {
        if (!r.hi)
          last.hi.reset();
        else if (last.hi && *r.hi > *last.hi)
          last.hi = r.hi;
        continue;
      }
    }
    kept.push_back(std::move(r));
  }
  bool initial = !kept.empty() && !kept.front().lo;
  std::vector<Rat> transitions;
  for (auto& r : kept) {
    if (r.lo) transitions.push_back(*r.lo);
    if (r.hi) transitions.push_back(*r.hi);
  }
  return {initial, std::move(transitions)};
}

}  // namespace

StepFunction erode(const StepFunction& u, const WindowSpec& w) {
  WindowSpec::checked(w.d, w.m);
  std::vector<OneRegion> out;
  for (const OneRegion& r : one_regions(u)) {
    OneRegion e;
    if (r.lo) e.lo = *r.lo + w.d;
    if (r.hi) e.hi = *r.hi + w.d - w.m;
    out.push_back(std::move(e));
  }
  return from_one_regions(std::move(out));
}

StepFunction dilate(const StepFunction& u, const WindowSpec& w) {
  WindowSpec::checked(w.d, w.m);
  std::vector<OneRegion> out;
  for (const OneRegion& r : one_regions(u)) {
    OneRegion e;
    if (r.lo) e.lo = *r.lo + w.d - w.m;
    if (r.hi) e.hi = *r.hi + w.d;
    out.push_back(std::move(e));
  }
  return from_one_regions(std::move(out));
}

StepFunction erode_via_derivative(const StepFunction& u, const WindowSpec& w) {
  WindowSpec::checked(w.d, w.m);
  // value = u(t - d + m) AND no transition of u in (t - d, t - d + m].
  // A transition at s blocks exactly t in [s + d - m, s + d).
  StepFunction shifted = translate(u, w.d - w.m);
  if (w.m == 0) return shifted;  // the reunion over the empty window is 0
  std::vector<OneRegion> blocks;
  for (const Rat& s : derivative_set(u))
    blocks.push_back({s + w.d - w.m, s + w.d});
  StepFunction blocked = from_one_regions(std::move(blocks));
  return shifted & ~blocked;
}

Signal erode(const Signal& u, const WindowSpec& w) {
  return Signal{erode(u.fn(), w)};
}

Signal dilate(const Signal& u, const WindowSpec& w) {
  return Signal{dilate(u.fn(), w)};
}

}  // namespace sigdelay
