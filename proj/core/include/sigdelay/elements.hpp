#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sigdelay/conditions.hpp"

namespace sigdelay {

/// Composing two inertial elements does not stay in the class; the error
/// carries the bounded-delay envelope (summed parameters) when both operands
/// have one.
struct NotClosed : Error {
  NotClosed(std::string what, std::optional<BdcParams> env)
      : Error(std::move(what)), envelope(std::move(env)) {}
  std::optional<BdcParams> envelope;
};

struct Wire {
  bool operator==(const Wire&) const = default;
};
struct Fixed {
  Rat d;
  bool operator==(const Fixed&) const = default;
};
struct FullBde {
  BdcParams p;
  bool operator==(const FullBde&) const = default;
};
struct FullRide {
  RidcParams p;
  bool operator==(const FullRide&) const = default;
};
struct FullBride {
  BridcParams p;
  bool operator==(const FullBride&) const = default;
};
struct Dride {
  BdcParams p;
  bool operator==(const Dride&) const = default;
};

/// A delay element as a first-class value. Parameter predicates are enforced
/// at construction: CC for BDEs/DRIDEs, NZC for RIDEs, the BRIDC consistency
/// disjunction for BRIDEs, d >= 0 for fixed delays.
class DelayElement {
 public:
  using Kind = std::variant<Wire, Fixed, FullBde, FullRide, FullBride, Dride>;

  static DelayElement wire();
  static DelayElement fixed(Rat d);
  static DelayElement full_bde(BdcParams p);
  static DelayElement full_ride(RidcParams p);
  static DelayElement full_bride(BridcParams p);
  static DelayElement dride(BdcParams p);

  const Kind& kind() const { return kind_; }
  bool deterministic() const;
  std::string describe() const;

  /// Bounded-delay envelope, when the element has one (everything but RIDE).
  std::optional<BdcParams> bde_envelope() const;

  bool operator==(const DelayElement&) const = default;

 private:
  explicit DelayElement(Kind k) : kind_(std::move(k)) {}
  Kind kind_;
};

/// (u, x) membership in the element's relation.
CheckReport membership(const DelayElement& e, const Signal& u, const Signal& x);

/// The unique output; throws Nondeterministic for FullBde/FullRide/FullBride.
Signal apply_deterministic(const DelayElement& e, const Signal& u);

/// Draws a random BDC selector on a grid derived from the window functions
/// and returns the generated solution; deterministic in (u, seed); seed 0
/// selects the zero selector (minimum solution). Throws Unsupported for
/// anything but FullBde.
Signal sample(const DelayElement& e, const Signal& u, std::uint64_t seed);

/// Serial connection, arguments in signal-flow order (`first` feeds `second`).
/// Theorem-backed parameter arithmetic only; throws NotClosed for
/// inertial-with-inertial pairs.
DelayElement compose_params(const DelayElement& first,
                            const DelayElement& second);

/// Trace of a chain run: stage outputs plus per-stage membership verdicts.
struct CompositionReport {
  Signal input;
  std::vector<Signal> stage_outputs;  // one per element, in flow order
  std::vector<CheckReport> stage_verdicts;

  const Signal& final_output() const { return stage_outputs.back(); }
};

/// Threads u through the elements in signal-flow order; nondeterministic
/// stages are sampled (the per-stage seed mixes `seed` with the stage index).
CompositionReport chain_apply(const std::vector<DelayElement>& elements,
                              const Signal& u, std::uint64_t seed);

/// Machine-checked reconstruction of the two-stage inertial chain whose
/// composite fits no single symmetric inertial element: the composite rises
/// at t = 5 (forcing memory < 2) yet stays low at t = 12 (forcing
/// memory >= 2).
struct CounterexampleReport {
  Signal u, x, y;
  Rat rise_time;           // 5
  Rat fall_time;           // 9
  Rat silent_time;         // 12, no rising edge here
  std::string upper_constraint;  // derived "mu < 2"
  std::string lower_constraint;  // derived "mu >= 2"
  bool contradiction_confirmed = false;
};

CounterexampleReport counterexample_ride_composition();

}  // namespace sigdelay
