#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sigdelay/elements.hpp"
#include "sigdelay/step_function.hpp"

namespace sigdelay {

/// One line of the interchange format: `NAME := [a,b) [c,d) ...` or
/// `NAME := empty`. Endpoints are integers, decimals or p/q fractions;
/// `inf` is accepted as a right endpoint. `#` starts a comment.
struct NamedSignal {
  std::string name;
  Signal signal;
};

/// Parses a whole signal file; throws ParseError with a line number on
/// malformed input, overlapping or unsorted intervals.
std::vector<NamedSignal> parse_signal_file(std::string_view text);

/// First signal with the given name, or the first signal when name is empty.
/// Throws ParseError when absent.
Signal find_signal(const std::vector<NamedSignal>& signals,
                   std::string_view name);

/// `NAME := [a,b) ...` with `p/q` endpoints where non-integral; lossless.
std::string format_signal_line(std::string_view name, const Signal& s);

/// Parameter literals: `bdc(mr,dr,mf,df)`, `ridc(ur,qr,uf,qf)`,
/// `bridc(mr,dr,mf,df;ur,qr,uf,qf)`.
BdcParams parse_bdc_literal(std::string_view text);
RidcParams parse_ridc_literal(std::string_view text);
BridcParams parse_bridc_literal(std::string_view text);

/// Element literals: `wire`, `fixed(d)`, `bde(...)`, `ride(...)`,
/// `bride(...;...)`, `dride(...)`.
DelayElement parse_element_literal(std::string_view text);

/// Chain of element literals joined by `;` at top level (semicolons inside
/// parentheses belong to bride literals), listed in signal-flow order.
std::vector<DelayElement> parse_chain(std::string_view text);

std::string format_element(const DelayElement& e);
std::string format_bdc(const BdcParams& p);

}  // namespace sigdelay
