// Command-line front end: check/solve/compose/cc/render/counterexample over
// the signal interchange format. Exit codes: 0 member/success, 1 non-member,
// 2 usage or consistency error.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigdelay/conditions.hpp"
#include "sigdelay/elements.hpp"
#include "sigdelay/render.hpp"
#include "sigdelay/text_format.hpp"

namespace sd = sigdelay;
using nlohmann::json;

namespace {

constexpr int kMember = 0;
constexpr int kNonMember = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sd::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

sd::Signal load_signal(const std::string& path, const std::string& name) {
  return sd::find_signal(sd::parse_signal_file(read_file(path)), name);
}

json signal_json(const sd::Signal& s) {
  json arr = json::array();
  for (const auto& iv : sd::signal_support(s))
    arr.push_back({sd::format_rational(iv.lo),
                   iv.hi ? sd::format_rational(*iv.hi) : "inf"});
  return arr;
}

json report_json(const sd::CheckReport& r) {
  json j;
  j["verdict"] = r.ok;
  j["witness"] = r.witness_time ? json(sd::format_rational(*r.witness_time))
                                : json(nullptr);
  j["detail"] = r.detail;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  bool verify = false;

  bool data() const { return format == "data"; }
};

int report_verdict(const Options& opt, const sd::CheckReport& r) {
  if (opt.data()) {
    emit(report_json(r));
  } else if (r.ok) {
    std::cout << "member\n";
  } else {
    std::cout << "not a member";
    if (r.witness_time)
      std::cout << " at t = " << sd::format_rational(*r.witness_time);
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
  }
  return r.ok ? kMember : kNonMember;
}

std::string_view head_of(std::string_view literal) {
  return literal.substr(0, literal.find('('));
}

int cmd_check(const Options& opt, const std::string& literal,
              const std::string& u_file, const std::string& x_file,
              const std::string& u_name, const std::string& x_name) {
  sd::Signal u = load_signal(u_file, u_name);
  sd::Signal x = load_signal(x_file, x_name);
  auto head = head_of(literal);
  if (head == "bdc") {
    auto p = sd::parse_bdc_literal(literal);
    if (!sd::cc_bdc(p))
      throw sd::ConsistencyViolated(
          "CC violated: need d_r - m_r <= d_f and d_f - m_f <= d_r");
    return report_verdict(opt, sd::check_bdc(u, p, x));
  }
  if (head == "ridc") {
    auto p = sd::parse_ridc_literal(literal);
    if (!sd::nzc(p).holds)
      throw sd::ConsistencyViolated(
          "NZC violated: need delta_r - mu_r <= delta_f and "
          "delta_f - mu_f <= delta_r");
    return report_verdict(opt, sd::check_ridc(u, p, x));
  }
  if (head == "bridc") {
    auto p = sd::parse_bridc_literal(literal);
    if (!sd::cc_bridc(p))
      throw sd::ConsistencyViolated("CC violated: no consistent chain holds");
    return report_verdict(opt, sd::check_bridc(u, p, x));
  }
  // element literals double as membership checks
  return report_verdict(opt, sd::membership(sd::parse_element_literal(literal), u, x));
}

int cmd_cc(const Options& opt, const std::string& literal) {
  auto head = head_of(literal);
  bool ok;
  std::string kind;
  if (head == "bdc") {
    ok = sd::cc_bdc(sd::parse_bdc_literal(literal));
    kind = "cc_bdc";
  } else if (head == "ridc") {
    auto v = sd::nzc(sd::parse_ridc_literal(literal));
    ok = v.holds;
    kind = v.trivial ? "nzc (trivial)" : "nzc";
  } else if (head == "bridc") {
    ok = sd::cc_bridc(sd::parse_bridc_literal(literal));
    kind = "cc_bridc";
  } else {
    throw sd::ParseError("cc expects bdc(...), ridc(...) or bridc(...)");
  }
  if (opt.data())
    emit({{"predicate", kind}, {"verdict", ok}});
  else
    std::cout << kind << ": " << (ok ? "consistent" : "inconsistent") << "\n";
  return ok ? kMember : kNonMember;
}

int cmd_solve(const Options& opt, const std::string& literal,
              const std::string& u_file, const std::string& u_name) {
  sd::Signal u = load_signal(u_file, u_name);
  sd::DelayElement e = sd::parse_element_literal(literal);
  sd::Signal x = sd::apply_deterministic(e, u);
  bool verified = false;
  if (opt.verify) {
    if (const auto* d = std::get_if<sd::Dride>(&e.kind())) {
      for (auto form :
           {sd::DridcForm::A, sd::DridcForm::B, sd::DridcForm::C,
            sd::DridcForm::D, sd::DridcForm::E, sd::DridcForm::F}) {
        auto r = sd::check_dridc_form(u, d->p, x, form);
        if (!r)
          throw sd::Error("internal: solution rejected by an equivalent form");
      }
    } else {
      auto r = sd::membership(e, u, x);
      if (!r) throw sd::Error("internal: solution rejected by the element");
    }
    verified = true;
  }
  if (opt.data()) {
    json j{{"command", "solve"},
           {"element", sd::format_element(e)},
           {"input", signal_json(u)},
           {"output", signal_json(x)}};
    if (opt.verify) j["verified"] = verified;
    emit(j);
  } else {
    std::cout << sd::format_signal_line("x", x) << "\n";
  }
  return kMember;
}

int cmd_compose(const Options& opt, const std::string& chain_text,
                const std::string& u_file, const std::string& u_name) {
  sd::Signal u = load_signal(u_file, u_name);
  auto chain = sd::parse_chain(chain_text);
  auto report = sd::chain_apply(chain, u, opt.seed);

  std::optional<sd::DelayElement> equivalent = chain.front();
  std::optional<sd::BdcParams> envelope;
  std::string not_closed_reason;
  for (size_t i = 1; i < chain.size() && equivalent; ++i) {
    try {
      equivalent = sd::compose_params(*equivalent, chain[i]);
    } catch (const sd::NotClosed& e) {
      not_closed_reason = e.what();
      envelope = e.envelope;
      equivalent.reset();
    }
  }

  if (opt.data()) {
    json stages = json::array();
    for (size_t i = 0; i < chain.size(); ++i)
      stages.push_back({{"element", sd::format_element(chain[i])},
                        {"output", signal_json(report.stage_outputs[i])},
                        {"member", report.stage_verdicts[i].ok}});
    json j{{"command", "compose"}, {"input", signal_json(u)},
           {"stages", stages},    {"closed", equivalent.has_value()}};
    j["equivalent"] =
        equivalent ? json(sd::format_element(*equivalent)) : json(nullptr);
    j["envelope"] = envelope ? json(sd::format_bdc(*envelope)) : json(nullptr);
    emit(j);
  } else {
    std::cout << sd::format_signal_line("u", u) << "\n";
    for (size_t i = 0; i < chain.size(); ++i)
      std::cout << sd::format_signal_line("stage" + std::to_string(i + 1),
                                          report.stage_outputs[i])
                << "  # " << sd::format_element(chain[i]) << "\n";
    if (equivalent) {
      std::cout << "equivalent := " << sd::format_element(*equivalent) << "\n";
    } else {
      std::cout << "NOT CLOSED\n";
      if (envelope)
        std::cout << "envelope := " << sd::format_bdc(*envelope) << "\n";
    }
  }
  for (const auto& v : report.stage_verdicts)
    if (!v.ok) return kNonMember;
  return kMember;
}

int cmd_render(const Options& opt, const std::vector<std::string>& files,
               const std::string& step_text, int width) {
  auto step = sd::parse_rational(step_text);
  if (!step || *step <= 0) throw sd::ParseError("--step must be positive");
  std::vector<sd::NamedSignal> signals;
  for (const auto& f : files)
    for (auto& s : sd::parse_signal_file(read_file(f)))
      signals.push_back(std::move(s));
  std::string strip = sd::render_ascii(signals, {*step, width});
  if (opt.data()) {
    json rows = json::array();
    std::istringstream lines(strip);
    for (std::string line; std::getline(lines, line);) rows.push_back(line);
    emit({{"command", "render"},
          {"step", sd::format_rational(*step)},
          {"width", width},
          {"rows", rows}});
  } else {
    std::cout << strip;
  }
  return kMember;
}

int cmd_counterexample(const Options& opt, const std::string& name) {
  if (name != "ride-composition")
    throw sd::ParseError("unknown counterexample '" + name + "'");
  auto r = sd::counterexample_ride_composition();
  if (opt.data()) {
    emit({{"command", "counterexample"},
          {"name", name},
          {"u", signal_json(r.u)},
          {"x", signal_json(r.x)},
          {"y", signal_json(r.y)},
          {"rise", sd::format_rational(r.rise_time)},
          {"fall", sd::format_rational(r.fall_time)},
          {"silent", sd::format_rational(r.silent_time)},
          {"upper_constraint", r.upper_constraint},
          {"lower_constraint", r.lower_constraint},
          {"contradiction_confirmed", r.contradiction_confirmed}});
  } else {
    std::cout << sd::format_signal_line("u", r.u) << "\n"
              << sd::format_signal_line("x", r.x) << "\n"
              << sd::format_signal_line("y", r.y) << "\n"
              << "rise at t = " << sd::format_rational(r.rise_time) << "\n"
              << "fall at t = " << sd::format_rational(r.fall_time) << "\n"
              << "no rise at t = " << sd::format_rational(r.silent_time)
              << "\n"
              << "the rise at 5 needs " << r.upper_constraint << "\n"
              << "the silence at 12 needs " << r.lower_constraint << "\n"
              << (r.contradiction_confirmed ? "contradiction confirmed"
                                            : "NOT CONFIRMED")
              << "\n";
  }
  return r.contradiction_confirmed ? kMember : kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact delay calculus for binary signals"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "text or data (machine readable)")
      ->check(CLI::IsMember({"text", "data"}));
  app.add_option("--seed", opt.seed, "seed for sampled stages");
  app.add_flag("--verify", opt.verify,
               "re-check solver output against the equivalent systems");

  std::string literal, u_file, x_file, u_name, x_name, chain_text, step = "1",
                                                                   name;
  std::vector<std::string> files;
  int width = 40;

  auto* check = app.add_subcommand("check", "membership of (u, x)");
  check->add_option("params", literal)->required();
  check->add_option("u", u_file)->required();
  check->add_option("x", x_file)->required();
  check->add_option("--u-name", u_name);
  check->add_option("--x-name", x_name);

  auto* cc = app.add_subcommand("cc", "consistency of a parameter literal");
  cc->add_option("params", literal)->required();

  auto* solve = app.add_subcommand("solve", "unique output of an element");
  solve->add_option("element", literal)->required();
  solve->add_option("u", u_file)->required();
  solve->add_option("--u-name", u_name);

  auto* compose = app.add_subcommand("compose", "run a chain of elements");
  compose->add_option("chain", chain_text)->required();
  compose->add_option("u", u_file)->required();
  compose->add_option("--u-name", u_name);

  auto* render = app.add_subcommand("render", "ASCII waveform strip");
  render->add_option("files", files)->required();
  render->add_option("--step", step);
  render->add_option("--width", width)->check(CLI::Range(10, 4000));

  auto* cx = app.add_subcommand("counterexample", "bundled counterexamples");
  cx->add_option("name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*check) return cmd_check(opt, literal, u_file, x_file, u_name, x_name);
    if (*cc) return cmd_cc(opt, literal);
    if (*solve) return cmd_solve(opt, literal, u_file, u_name);
    if (*compose) return cmd_compose(opt, chain_text, u_file, u_name);
    if (*render) return cmd_render(opt, files, step, width);
    if (*cx) return cmd_counterexample(opt, name);
  } catch (const sd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
