#pragma once

#include <optional>
#include <vector>

#include "sigdelay/errors.hpp"
#include "sigdelay/rational.hpp"

namespace sigdelay {

/// Half-open interval [lo, hi). hi == nullopt means unbounded to the right.
struct Interval {
  Rat lo;
  std::optional<Rat> hi;

  bool operator==(const Interval&) const = default;
};

/// Sorted, disjoint, maximal list of half-open intervals.
using IntervalSet = std::vector<Interval>;

/// Merges overlapping/adjacent intervals and sorts; drops empty ones.
IntervalSet normalize_intervals(IntervalSet intervals);

/// Right-continuous piecewise-constant function R -> {0,1} with finitely many
/// transitions. The value at a transition instant is the new value, so every
/// constancy interval is half-open [a, b). Canonical by construction:
/// transition times are strictly increasing and the value toggles at each.
class StepFunction {
 public:
  /// The zero function.
  StepFunction() : initial_(false) {}

  /// Throws Error unless `transitions` is strictly increasing.
  StepFunction(bool initial_value, std::vector<Rat> transitions);

  bool initial_value() const { return initial_; }
  const std::vector<Rat>& transitions() const { return transitions_; }

  /// Value at t (right-continuous).
  bool at(const Rat& t) const;

  /// Left limit: value on (t - eps, t) for small eps.
  bool before(const Rat& t) const;

  /// Limit at +infinity; always exists for this representation.
  bool final_value() const;

  bool is_zero() const { return !initial_ && transitions_.empty(); }

  bool operator==(const StepFunction&) const = default;

 private:
  bool initial_;
  std::vector<Rat> transitions_;
};

StepFunction operator~(const StepFunction& f);
StepFunction operator&(const StepFunction& f, const StepFunction& g);
StepFunction operator|(const StepFunction& f, const StepFunction& g);
StepFunction operator^(const StepFunction& f, const StepFunction& g);

/// f(t) <= g(t) for all t, decided by a sweep over the merged transition set.
bool leq(const StepFunction& f, const StepFunction& g);

/// (f o tau^d)(t) = f(t - d).
StepFunction translate(const StepFunction& f, const Rat& d);

/// Transition instants, i.e. {t | Df(t) = 1}.
std::vector<Rat> derivative_set(const StepFunction& f);

enum class BoolOp { Not, And, Or, Xor };

/// Dispatcher mirroring the named operators; g is ignored for Not.
StepFunction combine(BoolOp op, const StepFunction& f,
                     const StepFunction* g = nullptr);

/// A StepFunction with value 0 at -inf and support in [0, inf).
class Signal {
 public:
  Signal() = default;

  /// Throws NegativeSupport if f has initial value 1 or a transition < 0.
  explicit Signal(StepFunction f);

  const StepFunction& fn() const { return fn_; }
  operator const StepFunction&() const { return fn_; }

  bool at(const Rat& t) const { return fn_.at(t); }
  bool before(const Rat& t) const { return fn_.before(t); }
  bool final_value() const { return fn_.final_value(); }
  bool is_zero() const { return fn_.is_zero(); }
  const std::vector<Rat>& transitions() const { return fn_.transitions(); }

  bool operator==(const Signal&) const = default;

 private:
  StepFunction fn_;
};

/// Characteristic function of a union of intervals with endpoints >= 0.
/// Throws NegativeSupport if any endpoint is negative.
Signal make_signal(const IntervalSet& ones);

/// Support of a signal as a canonical IntervalSet.
IntervalSet signal_support(const Signal& s);

Signal operator&(const Signal& f, const Signal& g);
Signal operator|(const Signal& f, const Signal& g);
Signal operator^(const Signal& f, const Signal& g);

/// Shift a signal right by d >= 0; throws NegativeDelay for d < 0
/// (use the StepFunction overload for unrestricted shifts).
Signal translate(const Signal& s, const Rat& d);

}  // namespace sigdelay
