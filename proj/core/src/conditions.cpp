#include "sigdelay/conditions.hpp"

#include <algorithm>

namespace sigdelay {

BdcParams BdcParams::checked(Rat m_r, Rat d_r, Rat m_f, Rat d_f) {
  if (m_r < 0 || m_r > d_r || m_f < 0 || m_f > d_f)
    throw InvalidWindow("bdc parameters need 0 <= m_r <= d_r and 0 <= m_f <= d_f");
  return {std::move(m_r), std::move(d_r), std::move(m_f), std::move(d_f)};
}

RidcParams RidcParams::checked(Rat mu_r, Rat delta_r, Rat mu_f, Rat delta_f) {
  if (mu_r < 0 || mu_r > delta_r || mu_f < 0 || mu_f > delta_f)
    throw InvalidWindow("ridc parameters need 0 <= mu <= delta on both edges");
  return {std::move(mu_r), std::move(delta_r), std::move(mu_f),
          std::move(delta_f)};
}

// --- stability ---------------------------------------------------------------

CheckReport check_sc(const Signal& u, const Signal& x) {
  if (u.final_value() == x.final_value()) return CheckReport::pass();
  Rat from = 0;
  if (!u.transitions().empty()) from = u.transitions().back();
  if (!x.transitions().empty()) from = std::max(from, x.transitions().back());
  return CheckReport::fail(from, "limits at +inf differ");
}

// --- BDC ---------------------------------------------------------------------

bool cc_bdc(const BdcParams& p) {
  return p.d_r - p.m_r <= p.d_f && p.d_f - p.m_f <= p.d_r;
}

std::optional<CcWitness> cc_witness(const BdcParams& p) {
  if (cc_bdc(p)) return std::nullopt;
  // CC failing means the two windows are disjoint at every t. Pick a t that
  // puts both windows inside [0, inf) and make u equal 1 exactly on a cover
  // of the rising window that misses the falling one.
  Rat t = p.d_r + p.d_f + 1;
  Rat lo = t - p.d_r;
  Rat hi;
  if (p.d_r - p.m_r > p.d_f) {
    // rising window lies strictly left of the falling one
    Rat gap = (p.d_r - p.m_r) - p.d_f;
    hi = lo + p.m_r + gap / 2;
  } else {
    // falling window lies strictly left of the rising one
    hi = lo + p.m_r + 1;
  }
  return CcWitness{make_signal({{lo, hi}}), t};
}

namespace {

// First time where the step function is 1, if any.
std::optional<Rat> first_one(const StepFunction& f) {
  if (f.initial_value()) return std::nullopt;  // 1 since -inf, no first time
  bool value = false;
  for (const Rat& t : f.transitions()) {
    value = !value;
    if (value) return t;
  }
  return std::nullopt;
}

}  // namespace

CheckReport check_bdc(const Signal& u, const BdcParams& p, const Signal& x) {
  Signal lower = erode(u, p.rise_window());
  Signal upper = dilate(u, p.fall_window());
  std::optional<Rat> below = first_one(lower.fn() & ~x.fn());
  std::optional<Rat> above = first_one(x.fn() & ~upper.fn());
  if (below && (!above || *below <= *above))
    return CheckReport::fail(*below, "x below the erosion bound");
  if (above) return CheckReport::fail(*above, "x above the dilation bound");
  return CheckReport::pass();
}

Signal bdc_solution(const Signal& u, const BdcParams& p, const Signal& y) {
  if (!cc_bdc(p))
    throw ConsistencyViolated("cc_bdc fails; the solution set may be empty");
  Signal lower = erode(u, p.rise_window());
  Signal upper = dilate(u, p.fall_window());
  return lower | (y & upper);
}

// --- FDC ---------------------------------------------------------------------

Signal fdc_apply(const Signal& u, const Rat& d) {
  if (d < 0) throw NegativeDelay("fixed delay needs d >= 0");
  return translate(u, d);
}

CheckReport check_fdc(const Signal& u, const Rat& d, const Signal& x) {
  Signal expected = fdc_apply(u, d);
  StepFunction diff = expected.fn() ^ x.fn();
  if (diff.is_zero()) return CheckReport::pass();
  return CheckReport::fail(*first_one(diff), "x differs from u shifted by d");
}

// --- RIDC --------------------------------------------------------------------

NzcVerdict nzc(const RidcParams& p) {
  bool a = p.delta_r - p.mu_r <= p.delta_f;
  bool b = p.delta_f - p.mu_f <= p.delta_r;
  bool trivial =
      p.delta_r - p.mu_r == p.delta_f && p.delta_f - p.mu_f == p.delta_r;
  return {a && b, trivial};
}

CheckReport check_ridc(const Signal& u, const RidcParams& p, const Signal& x) {
  if (auto sc = check_sc(u, x); !sc) return sc;
  Signal rise_ok = erode(u, p.rise_window());
  StepFunction fall_ok = erode(~u.fn(), p.fall_window());
  for (const Rat& t : x.transitions()) {
    if (x.at(t)) {
      if (!rise_ok.at(t))
        return CheckReport::fail(t, "rising edge not licensed by the input");
    } else {
      if (!fall_ok.at(t))
        return CheckReport::fail(t, "falling edge not licensed by the input");
    }
  }
  return CheckReport::pass();
}

CheckReport edge_separation_check(const Signal& u, const RidcParams& p,
                                  const Signal& x) {
  if (!nzc(p).holds) throw PreconditionFailed("nzc fails");
  if (!check_ridc(u, p, x)) throw PreconditionFailed("x is not ridc-accepted");
  const auto& edges = x.transitions();
  for (size_t i = 1; i < edges.size(); ++i) {
    Rat gap = edges[i] - edges[i - 1];
    bool rise_then_fall = !x.at(edges[i]);
    Rat bound = rise_then_fall ? p.delta_f - p.delta_r + p.mu_r
                               : p.delta_r - p.delta_f + p.mu_f;
    if (!(gap > bound))
      return CheckReport::fail(edges[i], "opposite edges too close");
  }
  return CheckReport::pass();
}

// --- BRIDC -------------------------------------------------------------------

bool cc_bridc(const BridcParams& p) {
  const auto& [m_r, d_r, m_f, d_f] = p.bdc;
  const auto& [u_r, q_r, u_f, q_f] = p.ridc;  // mu_r, delta_r, mu_f, delta_f
  bool a = d_f - m_f <= q_r && q_r <= d_r && d_r <= q_r - u_r + m_r &&
           d_r - m_r <= q_f && q_f <= d_f && d_f <= q_f - u_f + m_f;
  bool b = d_r - m_r + u_r <= q_r && q_r <= d_f - m_f && d_f - m_f <= d_r &&
           d_f - m_f + u_f <= q_f && q_f <= d_r - m_r && d_r - m_r <= d_f;
  bool c = d_f - m_f <= q_r && q_r <= d_r - m_r + u_r &&
           d_r - m_r + u_r <= d_r && d_r - m_r <= q_f &&
           q_f <= d_f - m_f + u_f && d_f - m_f + u_f <= d_f;
  bool d = q_r <= d_f - m_f && d_f - m_f <= q_r + m_r - u_r &&
           q_r + m_r - u_r <= d_r && q_f <= d_r - m_r &&
           d_r - m_r <= q_f + m_f - u_f && q_f + m_f - u_f <= d_f;
  return a || b || c || d;
}

CheckReport check_bridc(const Signal& u, const BridcParams& p,
                        const Signal& x) {
  if (auto r = check_bdc(u, p.bdc, x); !r) return r;
  return check_ridc(u, p.ridc, x);
}

// --- DRIDC -------------------------------------------------------------------

Signal solve_dridc(const Signal& u, const BdcParams& p) {
  if (!cc_bdc(p))
    throw ConsistencyViolated("cc_bdc fails; the dridc system has no solution");
  Signal set_one = erode(u, p.rise_window());
  StepFunction set_zero = erode(~u.fn(), p.fall_window());

  std::vector<Rat> events;
  std::merge(set_one.transitions().begin(), set_one.transitions().end(),
             set_zero.transitions().begin(), set_zero.transitions().end(),
             std::back_inserter(events));
  events.erase(std::unique(events.begin(), events.end()), events.end());

  bool state = false;  // set_zero is 1 near -inf, so x starts at 0
  std::vector<Rat> transitions;
  for (const Rat& t : events) {
    bool next = state;
    if (set_one.at(t))
      next = true;
    else if (set_zero.at(t))
      next = false;
    if (next != state) {
      transitions.push_back(t);
      state = next;
    }
  }
  return Signal{StepFunction{false, std::move(transitions)}};
}

namespace {

// Representative sample times covering every constancy interval and every
// breakpoint of the given functions.
std::vector<Rat> sample_times(std::initializer_list<const StepFunction*> fns) {
  std::vector<Rat> points;
  for (const StepFunction* f : fns)
    points.insert(points.end(), f->transitions().begin(),
                  f->transitions().end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.empty()) return {Rat(0)};
  std::vector<Rat> samples;
  samples.push_back(points.front() - 1);
  for (size_t i = 0; i < points.size(); ++i) {
    samples.push_back(points[i]);
    if (i + 1 < points.size())
      samples.push_back((points[i] + points[i + 1]) / 2);
  }
  samples.push_back(points.back() + 1);
  return samples;
}

}  // namespace

CheckReport check_dridc_form(const Signal& u, const BdcParams& p,
                             const Signal& x, DridcForm form) {
  if (!cc_bdc(p)) throw ConsistencyViolated("cc_bdc fails");
  StepFunction a_fn = erode(u.fn(), p.rise_window());
  StepFunction b_fn = erode(~u.fn(), p.fall_window());
  for (const Rat& t : sample_times({&u.fn(), &x.fn(), &a_fn, &b_fn})) {
    bool xv = x.at(t);
    bool xp = x.before(t);
    bool a = a_fn.at(t);
    bool b = b_fn.at(t);
    bool ok = true;
    switch (form) {
      case DridcForm::A:
        ok = ((!xp && xv) == (!xp && a)) && ((xp && !xv) == (xp && b));
        break;
      case DridcForm::B:
        ok = (!a || xv) && (!b || !xv) && (a || b || xv == xp);
        break;
      case DridcForm::C:
        ok = xv == (a ? true : (b ? false : xp));
        break;
      case DridcForm::D:
        ok = xv == (a || (xp && !b));
        break;
      case DridcForm::E:
        ok = (xv != xp) == ((!xp && a) || (xp && b));
        break;
      case DridcForm::F:
        ok = (!xp && xv && a) || (xp && !xv && b) || (!xp && !xv && !a) ||
             (xp && xv && !b);
        break;
    }
    if (!ok) return CheckReport::fail(t, "dridc system violated");
  }
  return CheckReport::pass();
}

// --- constant delays ---------------------------------------------------------

CheckReport check_constant_bounds(const Signal& u, const Signal& x,
                                  const Rat& d_r, const Rat& d_f) {
  if (d_r < 0 || d_f < 0) throw NegativeDelay("constant bounds need d >= 0");
  for (const Rat& t : x.transitions()) {
    if (x.at(t)) {
      if (!u.at(t - d_r))
        return CheckReport::fail(t, "rising edge with u(t - d_r) = 0");
    } else {
      if (u.at(t - d_f))
        return CheckReport::fail(t, "falling edge with u(t - d_f) = 1");
    }
  }
  return CheckReport::pass();
}

// --- min/max reparameterization ----------------------------------------------

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw PreconditionFailed(what);
}

}  // namespace

MinMaxParams to_minmax(const BridcParams& p) {
  const auto& [m_r, d_r, m_f, d_f] = p.bdc;
  const auto& [u_r, q_r, u_f, q_f] = p.ridc;
  require(d_f - m_f <= q_f - u_f, "d_f - m_f <= delta_f - mu_f");
  require(q_f - u_f <= q_r, "delta_f - mu_f <= delta_r");
  require(q_r <= d_r, "delta_r <= d_r");
  require(d_r - m_r <= q_r - u_r, "d_r - m_r <= delta_r - mu_r");
  require(q_r - u_r <= q_f, "delta_r - mu_r <= delta_f");
  require(q_f <= d_f, "delta_f <= d_f");
  return {u_r, q_r, m_r, d_r, u_f, q_f, m_f, d_f};
}

BridcParams to_bridc(const MinMaxParams& p) {
  require(p.m_r_max >= 0 && p.m_r_max <= p.d_r_max &&
              p.m_f_max >= 0 && p.m_f_max <= p.d_f_max,
          "0 <= m_max <= d_max");
  require(p.m_r_min >= 0 && p.m_r_min <= p.d_r_min &&
              p.m_f_min >= 0 && p.m_f_min <= p.d_f_min,
          "0 <= m_min <= d_min");
  require(p.d_f_max - p.m_f_max <= p.d_f_min - p.m_f_min,
          "d_f_max - m_f_max <= d_f_min - m_f_min");
  require(p.d_f_min - p.m_f_min <= p.d_r_min,
          "d_f_min - m_f_min <= d_r_min");
  require(p.d_r_min <= p.d_r_max, "d_r_min <= d_r_max");
  require(p.d_r_max - p.m_r_max <= p.d_r_min - p.m_r_min,
          "d_r_max - m_r_max <= d_r_min - m_r_min");
  require(p.d_r_min - p.m_r_min <= p.d_f_min,
          "d_r_min - m_r_min <= d_f_min");
  require(p.d_f_min <= p.d_f_max, "d_f_min <= d_f_max");
  return {BdcParams{p.m_r_max, p.d_r_max, p.m_f_max, p.d_f_max},
          RidcParams{p.m_r_min, p.d_r_min, p.m_f_min, p.d_f_min}};
}

CheckReport check_two_sided_edges(const Signal& u, const MinMaxParams& p,
                                  const Signal& x) {
  StepFunction rise_max = erode(u.fn(), {p.d_r_max, p.m_r_max});
  StepFunction rise_min = erode(u.fn(), {p.d_r_min, p.m_r_min});
  StepFunction fall_max = erode(~u.fn(), {p.d_f_max, p.m_f_max});
  StepFunction fall_min = erode(~u.fn(), {p.d_f_min, p.m_f_min});
  for (const Rat& t : sample_times(
           {&u.fn(), &x.fn(), &rise_max, &rise_min, &fall_max, &fall_min})) {
    bool xv = x.at(t);
    bool xp = x.before(t);
    bool r1 = !xp && rise_max.at(t);
    bool r2 = !xp && xv;
    bool r3 = !xp && rise_min.at(t);
    if ((r1 && !r2) || (r2 && !r3))
      return CheckReport::fail(t, "two-sided rising inequality violated");
    bool f1 = xp && fall_max.at(t);
    bool f2 = xp && !xv;
    bool f3 = xp && fall_min.at(t);
    if ((f1 && !f2) || (f2 && !f3))
      return CheckReport::fail(t, "two-sided falling inequality violated");
  }
  return CheckReport::pass();
}

}  // namespace sigdelay
