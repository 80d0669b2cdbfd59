#include "sigdelay/rational.hpp"

#include <cctype>

namespace sigdelay {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(std::string_view text) {
  bool negative = false;
  if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;

  using Int = boost::multiprecision::cpp_int;
  Rat value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    Int d{std::string(den)};
    if (d == 0) return std::nullopt;
    value = Rat(Int{std::string(num)}, d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
    Int scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rat(Int{std::string(whole)} * scale + Int{std::string(frac)}, scale);
  } else {
    if (!all_digits(text)) return std::nullopt;
    value = Rat(Int{std::string(text)});
  }
  return negative ? Rat(-value) : value;
}

std::string format_rational(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

}  // namespace sigdelay
