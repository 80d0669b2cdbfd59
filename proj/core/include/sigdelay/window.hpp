#pragma once

#include "sigdelay/errors.hpp"
#include "sigdelay/step_function.hpp"

namespace sigdelay {

/// Sliding closed window [t - d, t - d + m] with 0 <= m <= d.
struct WindowSpec {
  Rat d;  // offset
  Rat m;  // width

  /// Throws InvalidWindow unless 0 <= m <= d.
  static WindowSpec checked(Rat d, Rat m);
};

/// Erosion: result(t) = 1 iff u == 1 on the whole closed window
/// [t - d, t - d + m]. A maximal 1-interval [a, b) of u contributes
/// [a + d, b + d - m); a pulse is transmitted iff strictly longer than m.
/// Accepts general step functions (an initial 1-ray (-inf, b) contributes
/// (-inf, b + d - m)).
StepFunction erode(const StepFunction& u, const WindowSpec& w);

/// Dilation: result(t) = 1 iff u(xi) = 1 for some xi in [t - d, t - d + m].
/// A 1-interval [a, b) contributes [a + d - m, b + d).
StepFunction dilate(const StepFunction& u, const WindowSpec& w);

/// Same function as erode, computed along an independent route:
/// u(t - d + m) AND no transition of u inside the half-open (t - d, t - d + m].
StepFunction erode_via_derivative(const StepFunction& u, const WindowSpec& w);

Signal erode(const Signal& u, const WindowSpec& w);
Signal dilate(const Signal& u, const WindowSpec& w);

}  // namespace sigdelay
