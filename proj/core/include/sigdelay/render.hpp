#pragma once

#include <string>
#include <vector>

#include "sigdelay/text_format.hpp"

namespace sigdelay {

struct RenderOptions {
  Rat step = 1;    // sampling step, must evenly hit every transition
  int width = 40;  // columns, >= 10
};

/// Deterministic two-level ASCII strip per signal, sampled only at exact
/// rational multiples of the step; `_` is low, the overline is high, `|`
/// marks a transition column. Throws PreconditionFailed when the step does
/// not evenly sample some transition (the message suggests the gcd step).
std::string render_ascii(const std::vector<NamedSignal>& signals,
                         const RenderOptions& opts);

/// Largest step that evenly samples every transition of every signal.
Rat suggested_step(const std::vector<NamedSignal>& signals);

}  // namespace sigdelay
