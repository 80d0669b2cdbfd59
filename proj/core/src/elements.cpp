#include "sigdelay/elements.hpp"

#include <random>

#include "sigdelay/rational.hpp"

namespace sigdelay {

DelayElement DelayElement::wire() { return DelayElement{Wire{}}; }

DelayElement DelayElement::fixed(Rat d) {
  if (d < 0) throw NegativeDelay("fixed delay needs d >= 0");
  return DelayElement{Fixed{std::move(d)}};
}

DelayElement DelayElement::full_bde(BdcParams p) {
  BdcParams::checked(p.m_r, p.d_r, p.m_f, p.d_f);
  if (!cc_bdc(p)) throw ConsistencyViolated("cc_bdc fails for this bde");
  return DelayElement{FullBde{std::move(p)}};
}

DelayElement DelayElement::full_ride(RidcParams p) {
  RidcParams::checked(p.mu_r, p.delta_r, p.mu_f, p.delta_f);
  if (!nzc(p).holds) throw ConsistencyViolated("nzc fails for this ride");
  return DelayElement{FullRide{std::move(p)}};
}

DelayElement DelayElement::full_bride(BridcParams p) {
  BdcParams::checked(p.bdc.m_r, p.bdc.d_r, p.bdc.m_f, p.bdc.d_f);
  RidcParams::checked(p.ridc.mu_r, p.ridc.delta_r, p.ridc.mu_f, p.ridc.delta_f);
  if (!cc_bridc(p)) throw ConsistencyViolated("cc_bridc fails for this bride");
  return DelayElement{FullBride{std::move(p)}};
}

DelayElement DelayElement::dride(BdcParams p) {
  BdcParams::checked(p.m_r, p.d_r, p.m_f, p.d_f);
  if (!cc_bdc(p)) throw ConsistencyViolated("cc_bdc fails for this dride");
  return DelayElement{Dride{std::move(p)}};
}

bool DelayElement::deterministic() const {
  return std::holds_alternative<Wire>(kind_) ||
         std::holds_alternative<Fixed>(kind_) ||
         std::holds_alternative<Dride>(kind_);
}

std::string DelayElement::describe() const {
  return std::visit(
      [](const auto& k) -> std::string {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Wire>) return "wire";
        if constexpr (std::is_same_v<K, Fixed>)
          return "fixed(" + format_rational(k.d) + ")";
        if constexpr (std::is_same_v<K, FullBde>) return "bde";
        if constexpr (std::is_same_v<K, FullRide>) return "ride";
        if constexpr (std::is_same_v<K, FullBride>) return "bride";
        if constexpr (std::is_same_v<K, Dride>) return "dride";
      },
      kind_);
}

std::optional<BdcParams> DelayElement::bde_envelope() const {
  return std::visit(
      [](const auto& k) -> std::optional<BdcParams> {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Wire>)
          return BdcParams{0, 0, 0, 0};
        else if constexpr (std::is_same_v<K, Fixed>)
          return BdcParams{0, k.d, 0, k.d};
        else if constexpr (std::is_same_v<K, FullBde>)
          return k.p;
        else if constexpr (std::is_same_v<K, FullBride>)
          return k.p.bdc;
        else if constexpr (std::is_same_v<K, Dride>)
          return k.p;
        else
          return std::nullopt;  // a ride has no bounded envelope
      },
      kind_);
}

CheckReport membership(const DelayElement& e, const Signal& u,
                       const Signal& x) {
  return std::visit(
      [&](const auto& k) -> CheckReport {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Wire>)
          return check_fdc(u, 0, x);
        else if constexpr (std::is_same_v<K, Fixed>)
          return check_fdc(u, k.d, x);
        else if constexpr (std::is_same_v<K, FullBde>)
          return check_bdc(u, k.p, x);
        else if constexpr (std::is_same_v<K, FullRide>)
          return check_ridc(u, k.p, x);
        else if constexpr (std::is_same_v<K, FullBride>)
          return check_bridc(u, k.p, x);
        else
          return check_dridc_form(u, k.p, x, DridcForm::A);
      },
      e.kind());
}

Signal apply_deterministic(const DelayElement& e, const Signal& u) {
  return std::visit(
      [&](const auto& k) -> Signal {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, Wire>)
          return u;
        else if constexpr (std::is_same_v<K, Fixed>)
          return fdc_apply(u, k.d);
        else if constexpr (std::is_same_v<K, Dride>)
          return solve_dridc(u, k.p);
        else
          throw Nondeterministic(
              "element has many outputs; use sample or membership");
      },
      e.kind());
}

Signal sample(const DelayElement& e, const Signal& u, std::uint64_t seed) {
  const auto* bde = std::get_if<FullBde>(&e.kind());
  if (bde == nullptr)
    throw Unsupported("sampling is available for full bdes only");
  if (seed == 0) return bdc_solution(u, bde->p, Signal{});

  // Selector transitions live on the endpoints of the two window functions
  // plus midpoints; solutions differ from the erosion only inside
  // supp Psi - supp Phi, so this grid reaches representative solutions.
  Signal lower = erode(u, bde->p.rise_window());
  Signal upper = dilate(u, bde->p.fall_window());
  std::vector<Rat> grid;
  std::merge(lower.transitions().begin(), lower.transitions().end(),
             upper.transitions().begin(), upper.transitions().end(),
             std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<Rat> candidates;
  for (size_t i = 0; i < grid.size(); ++i) {
    candidates.push_back(grid[i]);
    if (i + 1 < grid.size()) candidates.push_back((grid[i] + grid[i + 1]) / 2);
  }
  std::mt19937_64 rng(seed);
  std::vector<Rat> toggles;
  for (Rat& c : candidates)
    if (rng() & 1) toggles.push_back(std::move(c));
  Signal selector{StepFunction{false, std::move(toggles)}};
  return bdc_solution(u, bde->p, selector);
}

namespace {

BdcParams sum_params(const BdcParams& a, const BdcParams& b) {
  return {a.m_r + b.m_r, a.d_r + b.d_r, a.m_f + b.m_f, a.d_f + b.d_f};
}

}  // namespace

DelayElement compose_params(const DelayElement& first,
                            const DelayElement& second) {
  if (std::holds_alternative<Wire>(first.kind())) return second;
  if (std::holds_alternative<Wire>(second.kind())) return first;

  const auto* f1 = std::get_if<Fixed>(&first.kind());
  const auto* f2 = std::get_if<Fixed>(&second.kind());
  if (f1 && f2) return DelayElement::fixed(f1->d + f2->d);

  const auto* b1 = std::get_if<FullBde>(&first.kind());
  const auto* b2 = std::get_if<FullBde>(&second.kind());
  if (b1 && b2) return DelayElement::full_bde(sum_params(b1->p, b2->p));
  if (b1 && f2)
    return DelayElement::full_bde(
        {b1->p.m_r, b1->p.d_r + f2->d, b1->p.m_f, b1->p.d_f + f2->d});
  if (f1 && b2)
    return DelayElement::full_bde(
        {b2->p.m_r, b2->p.d_r + f1->d, b2->p.m_f, b2->p.d_f + f1->d});

  const auto* r1 = std::get_if<Dride>(&first.kind());
  const auto* r2 = std::get_if<Dride>(&second.kind());
  if (r1 && f2)
    return DelayElement::dride(
        {r1->p.m_r, r1->p.d_r + f2->d, r1->p.m_f, r1->p.d_f + f2->d});
  if (f1 && r2)
    return DelayElement::dride(
        {r2->p.m_r, r2->p.d_r + f1->d, r2->p.m_f, r2->p.d_f + f1->d});

  std::optional<BdcParams> envelope;
  auto e1 = first.bde_envelope();
  auto e2 = second.bde_envelope();
  if (e1 && e2) envelope = sum_params(*e1, *e2);
  throw NotClosed("composition leaves the class of " + first.describe() +
                      " and " + second.describe(),
                  std::move(envelope));
}

CompositionReport chain_apply(const std::vector<DelayElement>& elements,
                              const Signal& u, std::uint64_t seed) {
  if (elements.empty()) throw Error("empty chain");
  CompositionReport report;
  report.input = u;
  Signal current = u;
  for (size_t i = 0; i < elements.size(); ++i) {
    const DelayElement& e = elements[i];
    Signal next = e.deterministic()
                      ? apply_deterministic(e, current)
                      : sample(e, current, seed + 0x9E3779B97F4A7C15ull * i);
    report.stage_verdicts.push_back(membership(e, current, next));
    report.stage_outputs.push_back(next);
    current = std::move(next);
  }
  return report;
}

CounterexampleReport counterexample_ride_composition() {
  CounterexampleReport r;
  r.u = make_signal({{0, Rat(2)}, {3, Rat(4)}, {7, Rat(9)}});
  BdcParams p1{1, 2, 1, 2};
  BdcParams p2{2, 3, 2, 3};
  r.x = solve_dridc(r.u, p1);
  r.y = solve_dridc(r.x, p2);
  r.rise_time = 5;
  r.fall_time = 9;
  r.silent_time = 12;

  bool edges_ok = !r.y.before(r.rise_time) && r.y.at(r.rise_time) &&
                  r.y.before(r.fall_time) && !r.y.at(r.fall_time) &&
                  !r.y.at(r.silent_time) && !r.y.before(r.silent_time);

  // The rising edge at 5 needs the window [0, mu] inside u's first pulse
  // [0, 2), so mu = 2 already fails there.
  bool upper_ok =
      erode(r.u.fn(), WindowSpec{5, 1}).at(r.rise_time) &&
      !erode(r.u.fn(), WindowSpec{5, 2}).at(r.rise_time);
  r.upper_constraint = "mu < 2";

  // With mu < 2 the window [7, 7 + mu] sits inside [7, 9), so the symmetric
  // model demands a rising edge at 12 that y does not have; every such mu
  // fails the deterministic system.
  bool lower_ok = true;
  for (const Rat& mu : {Rat(0), Rat(1), Rat(3) / 2}) {
    lower_ok = lower_ok && erode(r.u.fn(), WindowSpec{5, mu}).at(r.silent_time);
    lower_ok =
        lower_ok &&
        !check_dridc_form(r.u, BdcParams{mu, 5, mu, 5}, r.y, DridcForm::A);
  }
  r.lower_constraint = "mu >= 2";

  r.contradiction_confirmed = edges_ok && upper_ok && lower_ok;
  return r;
}

}  // namespace sigdelay
