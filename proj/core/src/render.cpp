#include "sigdelay/render.hpp"

#include <algorithm>

#include "sigdelay/errors.hpp"

namespace sigdelay {

namespace {

using boost::multiprecision::cpp_int;

// gcd(p/q, r/s) = gcd(p, r) / lcm(q, s)
Rat rat_gcd(const Rat& a, const Rat& b) {
  cpp_int n = gcd(numerator(a), numerator(b));
  cpp_int d = lcm(denominator(a), denominator(b));
  return Rat(n, d);
}

}  // namespace

Rat suggested_step(const std::vector<NamedSignal>& signals) {
  Rat g = 0;
  for (const auto& s : signals)
    for (const Rat& t : s.signal.transitions())
      if (t != 0) g = (g == 0) ? abs(t) : rat_gcd(g, t);
  return g == 0 ? Rat(1) : g;
}

std::string render_ascii(const std::vector<NamedSignal>& signals,
                         const RenderOptions& opts) {
  if (opts.width < 10)
    throw PreconditionFailed("render width must be at least 10");
  if (opts.step <= 0) throw PreconditionFailed("render step must be positive");
  for (const auto& s : signals)
    for (const Rat& t : s.signal.transitions())
      if (denominator(Rat(t / opts.step)) != 1)
        throw PreconditionFailed(
            "step " + format_rational(opts.step) + " misses a transition of '" +
            s.name + "' at t = " + format_rational(t) + "; try step " +
            format_rational(suggested_step(signals)));

  size_t name_w = 0;
  for (const auto& s : signals) name_w = std::max(name_w, s.name.size());

  std::string out;
  for (const auto& s : signals) {
    std::string line = s.name;
    line.append(name_w - s.name.size(), ' ');
    line += ' ';
    const auto& ts = s.signal.transitions();
    for (int k = 0; k < opts.width; ++k) {
      Rat t = opts.step * k;
      if (std::binary_search(ts.begin(), ts.end(), t))
        line += '|';
      else
        line += s.signal.at(t) ? '-' : '_';
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace sigdelay
