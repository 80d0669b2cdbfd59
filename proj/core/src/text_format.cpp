#include "sigdelay/text_format.hpp"

#include <sstream>

namespace sigdelay {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Rat parse_endpoint(std::string_view text, int line) {
  auto r = parse_rational(trim(text));
  if (!r)
    throw ParseError("line " + std::to_string(line) + ": bad number '" +
                     std::string(text) + "'");
  return *r;
}

// `[a,b)` or `[a,inf)`
Interval parse_interval(std::string_view token, int line) {
  if (token.size() < 5 || token.front() != '[' || token.back() != ')')
    throw ParseError("line " + std::to_string(line) + ": expected [a,b), got '" +
                     std::string(token) + "'");
  auto inner = token.substr(1, token.size() - 2);
  auto comma = inner.find(',');
  if (comma == std::string_view::npos)
    throw ParseError("line " + std::to_string(line) + ": missing comma in '" +
                     std::string(token) + "'");
  Interval iv;
  iv.lo = parse_endpoint(inner.substr(0, comma), line);
  auto hi = trim(inner.substr(comma + 1));
  if (hi != "inf") {
    iv.hi = parse_endpoint(hi, line);
    if (!(iv.lo < *iv.hi))
      throw ParseError("line " + std::to_string(line) + ": empty interval '" +
                       std::string(token) + "'");
  }
  return iv;
}

}  // namespace

std::vector<NamedSignal> parse_signal_file(std::string_view text) {
  std::vector<NamedSignal> out;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos
                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto def = line.find(":=");
    if (def == std::string_view::npos)
      throw ParseError("line " + std::to_string(line_no) + ": expected ':='");
    std::string name{trim(line.substr(0, def))};
    if (name.empty())
      throw ParseError("line " + std::to_string(line_no) + ": missing name");
    std::string_view body = trim(line.substr(def + 2));

    if (body == "empty") {
      out.push_back({std::move(name), Signal{}});
      continue;
    }
    IntervalSet intervals;
    std::istringstream tokens{std::string(body)};
    std::string token;
    while (tokens >> token)
      intervals.push_back(parse_interval(token, line_no));
    for (size_t i = 1; i < intervals.size(); ++i) {
      const auto& prev = intervals[i - 1];
      if (!prev.hi || !(*prev.hi <= intervals[i].lo))
        throw ParseError("line " + std::to_string(line_no) +
                         ": intervals must be disjoint and sorted");
    }
    try {
      out.push_back({std::move(name), make_signal(intervals)});
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

Signal find_signal(const std::vector<NamedSignal>& signals,
                   std::string_view name) {
  if (signals.empty()) throw ParseError("no signals in file");
  if (name.empty()) return signals.front().signal;
  for (const auto& s : signals)
    if (s.name == name) return s.signal;
  throw ParseError("no signal named '" + std::string(name) + "'");
}

std::string format_signal_line(std::string_view name, const Signal& s) {
  std::string out{name};
  out += " := ";
  auto support = signal_support(s);
  if (support.empty()) {
    out += "empty";
    return out;
  }
  for (size_t i = 0; i < support.size(); ++i) {
    if (i) out += ' ';
    out += '[';
    out += format_rational(support[i].lo);
    out += ',';
    out += support[i].hi ? format_rational(*support[i].hi) : "inf";
    out += ')';
  }
  return out;
}

namespace {

// `head(a,b,...)` -> args; semicolons are returned as separator markers.
std::vector<Rat> parse_args(std::string_view text, std::string_view head,
                            size_t expected, size_t* semicolon_at = nullptr) {
  text = trim(text);
  if (text.substr(0, head.size()) != head)
    throw ParseError("expected '" + std::string(head) + "(...)'");
  auto rest = trim(text.substr(head.size()));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')')
    throw ParseError("expected '" + std::string(head) + "(...)'");
  auto inner = rest.substr(1, rest.size() - 2);
  std::vector<Rat> args;
  if (semicolon_at) *semicolon_at = std::string::npos;
  size_t start = 0;
  for (size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || inner[i] == ',' || inner[i] == ';') {
      auto piece = trim(inner.substr(start, i - start));
      auto r = parse_rational(piece);
      if (!r) throw ParseError("bad number '" + std::string(piece) + "'");
      args.push_back(*r);
      if (i < inner.size() && inner[i] == ';') {
        if (!semicolon_at || *semicolon_at != std::string::npos)
          throw ParseError("unexpected ';' in parameter list");
        *semicolon_at = args.size();
      }
      start = i + 1;
    }
  }
  if (args.size() != expected)
    throw ParseError(std::string(head) + " takes " + std::to_string(expected) +
                     " parameters");
  return args;
}

}  // namespace

BdcParams parse_bdc_literal(std::string_view text) {
  auto a = parse_args(text, "bdc", 4);
  return BdcParams::checked(a[0], a[1], a[2], a[3]);
}

RidcParams parse_ridc_literal(std::string_view text) {
  auto a = parse_args(text, "ridc", 4);
  return RidcParams::checked(a[0], a[1], a[2], a[3]);
}

BridcParams parse_bridc_literal(std::string_view text) {
  size_t semi = 0;
  auto a = parse_args(text, "bridc", 8, &semi);
  if (semi != 4) throw ParseError("bridc needs 'bridc(mr,dr,mf,df;ur,qr,uf,qf)'");
  return {BdcParams::checked(a[0], a[1], a[2], a[3]),
          RidcParams::checked(a[4], a[5], a[6], a[7])};
}

DelayElement parse_element_literal(std::string_view text) {
  text = trim(text);
  if (text == "wire") return DelayElement::wire();
  auto head = text.substr(0, text.find('('));
  if (head == "fixed") {
    auto a = parse_args(text, "fixed", 1);
    return DelayElement::fixed(a[0]);
  }
  if (head == "bde") {
    auto a = parse_args(text, "bde", 4);
    return DelayElement::full_bde(BdcParams::checked(a[0], a[1], a[2], a[3]));
  }
  if (head == "ride") {
    auto a = parse_args(text, "ride", 4);
    return DelayElement::full_ride(RidcParams::checked(a[0], a[1], a[2], a[3]));
  }
  if (head == "bride") {
    size_t semi = 0;
    auto a = parse_args(text, "bride", 8, &semi);
    if (semi != 4)
      throw ParseError("bride needs 'bride(mr,dr,mf,df;ur,qr,uf,qf)'");
    return DelayElement::full_bride(
        {BdcParams::checked(a[0], a[1], a[2], a[3]),
         RidcParams::checked(a[4], a[5], a[6], a[7])});
  }
  if (head == "dride") {
    auto a = parse_args(text, "dride", 4);
    return DelayElement::dride(BdcParams::checked(a[0], a[1], a[2], a[3]));
  }
  throw ParseError("unknown element '" + std::string(text) + "'");
}

std::vector<DelayElement> parse_chain(std::string_view text) {
  std::vector<DelayElement> chain;
  int depth = 0;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ';' && depth == 0)) {
      auto piece = trim(text.substr(start, i - start));
      if (!piece.empty()) chain.push_back(parse_element_literal(piece));
      start = i + 1;
    }
  }
  if (chain.empty()) throw ParseError("empty element chain");
  return chain;
}

std::string format_bdc(const BdcParams& p) {
  return "bde(" + format_rational(p.m_r) + "," + format_rational(p.d_r) + "," +
         format_rational(p.m_f) + "," + format_rational(p.d_f) + ")";
}

std::string format_element(const DelayElement& e) {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Wire>) return "wire";
        if constexpr (std::is_same_v<K, Fixed>)
          return "fixed(" + format_rational(k.d) + ")";
        if constexpr (std::is_same_v<K, FullBde>) return format_bdc(k.p);
        if constexpr (std::is_same_v<K, FullRide>)
          return "ride(" + format_rational(k.p.mu_r) + "," +
                 format_rational(k.p.delta_r) + "," +
                 format_rational(k.p.mu_f) + "," +
                 format_rational(k.p.delta_f) + ")";
        if constexpr (std::is_same_v<K, FullBride>)
          return "bride(" + format_rational(k.p.bdc.m_r) + "," +
                 format_rational(k.p.bdc.d_r) + "," +
                 format_rational(k.p.bdc.m_f) + "," +
                 format_rational(k.p.bdc.d_f) + ";" +
                 format_rational(k.p.ridc.mu_r) + "," +
                 format_rational(k.p.ridc.delta_r) + "," +
                 format_rational(k.p.ridc.mu_f) + "," +
                 format_rational(k.p.ridc.delta_f) + ")";
        if constexpr (std::is_same_v<K, Dride>)
          return "dride(" + format_rational(k.p.m_r) + "," +
                 format_rational(k.p.d_r) + "," + format_rational(k.p.m_f) +
                 "," + format_rational(k.p.d_f) + ")";
      },
      e.kind());
}

}  // namespace sigdelay
