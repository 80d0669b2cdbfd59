#include "sigdelay/step_function.hpp"

#include <algorithm>

namespace sigdelay {

IntervalSet normalize_intervals(IntervalSet intervals) {
  std::erase_if(intervals,
                [](const Interval& i) { return i.hi && *i.hi <= i.lo; });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (auto& iv : intervals) {
    if (!out.empty()) {
      Interval& last = out.back();
      if (!last.hi || *last.hi >= iv.lo) {
        // overlap or adjacency: extend
        if (last.hi && iv.hi && *iv.hi > *last.hi) last.hi = iv.hi;
        if (!iv.hi) last.hi.reset();
        continue;
      }
    }
    out.push_back(iv);
  }
  return out;
}

StepFunction::StepFunction(bool initial_value, std::vector<Rat> transitions)
    : initial_(initial_value), transitions_(std::move(transitions)) {
  for (size_t i = 1; i < transitions_.size(); ++i)
    if (!(transitions_[i - 1] < transitions_[i]))
      throw Error("step function transitions must be strictly increasing");
}

bool StepFunction::at(const Rat& t) const {
  // value at a transition time is the new value (right continuity)
  auto it = std::upper_bound(transitions_.begin(), transitions_.end(), t);
  auto toggles = static_cast<size_t>(it - transitions_.begin());
  return initial_ ^ static_cast<bool>(toggles & 1);
}

bool StepFunction::before(const Rat& t) const {
  auto it = std::lower_bound(transitions_.begin(), transitions_.end(), t);
  auto toggles = static_cast<size_t>(it - transitions_.begin());
  return initial_ ^ static_cast<bool>(toggles & 1);
}

bool StepFunction::final_value() const {
  return initial_ ^ static_cast<bool>(transitions_.size() & 1);
}

namespace {

template <typename Op>
StepFunction sweep2(const StepFunction& f, const StepFunction& g, Op op) {
  std::vector<Rat> events;
  events.reserve(f.transitions().size() + g.transitions().size());
  std::merge(f.transitions().begin(), f.transitions().end(),
             g.transitions().begin(), g.transitions().end(),
             std::back_inserter(events));
  events.erase(std::unique(events.begin(), events.end()), events.end());

  bool initial = op(f.initial_value(), g.initial_value());
  std::vector<Rat> out;
  bool value = initial;
  for (const Rat& t : events) {
    bool v = op(f.at(t), g.at(t));
    if (v != value) {
      out.push_back(t);
      value = v;
    }
  }
  return {initial, std::move(out)};
}

}  // namespace

StepFunction operator~(const StepFunction& f) {
  return {!f.initial_value(), f.transitions()};
}

StepFunction operator&(const StepFunction& f, const StepFunction& g) {
  return sweep2(f, g, [](bool a, bool b) { return a && b; });
}

StepFunction operator|(const StepFunction& f, const StepFunction& g) {
  return sweep2(f, g, [](bool a, bool b) { return a || b; });
}

StepFunction operator^(const StepFunction& f, const StepFunction& g) {
  return sweep2(f, g, [](bool a, bool b) { return a != b; });
}

bool leq(const StepFunction& f, const StepFunction& g) {
  return (f & ~g).is_zero();
}

StepFunction translate(const StepFunction& f, const Rat& d) {
  std::vector<Rat> shifted = f.transitions();
  for (Rat& t : shifted) t += d;
  return {f.initial_value(), std::move(shifted)};
}

std::vector<Rat> derivative_set(const StepFunction& f) {
  return f.transitions();
}

StepFunction combine(BoolOp op, const StepFunction& f, const StepFunction* g) {
  if (op == BoolOp::Not) return ~f;
  if (g == nullptr) throw Error("binary combine needs a second operand");
  switch (op) {
    case BoolOp::And:
      return f & *g;
    case BoolOp::Or:
      return f | *g;
    case BoolOp::Xor:
      return f ^ *g;
    default:
      throw Error("unreachable");
  }
}

Signal::Signal(StepFunction f) : fn_(std::move(f)) {
  if (fn_.initial_value())
    throw NegativeSupport("signal must be 0 at -inf");
  if (!fn_.transitions().empty() && fn_.transitions().front() < 0)
    throw NegativeSupport("signal has a transition before t = 0");
}

Signal make_signal(const IntervalSet& ones) {
  for (const Interval& iv : ones) {
    if (iv.lo < 0 || (iv.hi && *iv.hi < 0))
      throw NegativeSupport("interval endpoint before t = 0");
    if (iv.hi && !(iv.lo < *iv.hi))
      throw Error("empty or inverted interval");
  }
  IntervalSet canon = normalize_intervals(ones);
  std::vector<Rat> transitions;
  for (const Interval& iv : canon) {
    transitions.push_back(iv.lo);
    if (iv.hi) transitions.push_back(*iv.hi);
  }
  return Signal{StepFunction{false, std::move(transitions)}};
}

IntervalSet signal_support(const Signal& s) {
  IntervalSet out;
  const auto& ts = s.transitions();
  for (size_t i = 0; i < ts.size(); i += 2) {
    if (i + 1 < ts.size())
      out.push_back({ts[i], ts[i + 1]});
    else
      out.push_back({ts[i], std::nullopt});
  }
  return out;
}

Signal operator&(const Signal& f, const Signal& g) {
  return Signal{f.fn() & g.fn()};
}
Signal operator|(const Signal& f, const Signal& g) {
  return Signal{f.fn() | g.fn()};
}
Signal operator^(const Signal& f, const Signal& g) {
  return Signal{f.fn() ^ g.fn()};
}

Signal translate(const Signal& s, const Rat& d) {
  if (d < 0) throw NegativeDelay("signal translation needs d >= 0");
  return Signal{translate(s.fn(), d)};
}

}  // namespace sigdelay
