#pragma once

#include <optional>
#include <string>

#include "sigdelay/step_function.hpp"
#include "sigdelay/window.hpp"

namespace sigdelay {

/// Parameters of the bounded delay condition: rising/falling memories and
/// upper transmission delays, 0 <= m_r <= d_r, 0 <= m_f <= d_f.
struct BdcParams {
  Rat m_r, d_r, m_f, d_f;

  static BdcParams checked(Rat m_r, Rat d_r, Rat m_f, Rat d_f);

  WindowSpec rise_window() const { return {d_r, m_r}; }
  WindowSpec fall_window() const { return {d_f, m_f}; }

  bool operator==(const BdcParams&) const = default;
};

/// Inertia parameters of the relative inertial delay condition.
struct RidcParams {
  Rat mu_r, delta_r, mu_f, delta_f;

  static RidcParams checked(Rat mu_r, Rat delta_r, Rat mu_f, Rat delta_f);

  WindowSpec rise_window() const { return {delta_r, mu_r}; }
  WindowSpec fall_window() const { return {delta_f, mu_f}; }

  bool operator==(const RidcParams&) const = default;
};

struct BridcParams {
  BdcParams bdc;
  RidcParams ridc;

  bool operator==(const BridcParams&) const = default;
};

/// Verdict plus, on failure, the first violating time and a short diagnosis.
struct CheckReport {
  bool ok = true;
  std::optional<Rat> witness_time;
  std::string detail;

  static CheckReport pass() { return {}; }
  static CheckReport fail(Rat t, std::string what) {
    return {false, std::move(t), std::move(what)};
  }

  explicit operator bool() const { return ok; }
};

// --- stability -------------------------------------------------------------

/// SC: both limits at +inf exist (always, here) and coincide.
CheckReport check_sc(const Signal& u, const Signal& x);

// --- bounded delay condition ----------------------------------------------

/// CC: d_r - m_r <= d_f and d_f - m_f <= d_r.
bool cc_bdc(const BdcParams& p);

/// When CC fails, a signal u with empty BDC solution set together with a
/// certificate time where erosion is 1 and dilation is 0.
struct CcWitness {
  Signal u;
  Rat certificate_time;
};
std::optional<CcWitness> cc_witness(const BdcParams& p);

/// Phi <= x <= Psi over all of R.
CheckReport check_bdc(const Signal& u, const BdcParams& p, const Signal& x);

/// Representation of the BDC solution set: x = Phi | (y & Psi). As the
/// selector y ranges over signals, exactly the solution set is generated.
/// Throws ConsistencyViolated unless cc_bdc(p).
Signal bdc_solution(const Signal& u, const BdcParams& p, const Signal& y);

// --- fixed delay condition -------------------------------------------------

/// Throws NegativeDelay if d < 0.
Signal fdc_apply(const Signal& u, const Rat& d);
CheckReport check_fdc(const Signal& u, const Rat& d, const Signal& x);

// --- relative inertial delay condition ---------------------------------------

struct NzcVerdict {
  bool holds;
  bool trivial;  // both defining inequalities are equalities
};

/// Non-zenoness: delta_r - mu_r <= delta_f and delta_f - mu_f <= delta_r.
NzcVerdict nzc(const RidcParams& p);

/// SC, every rising edge of x licensed by the rising erosion, every falling
/// edge by the erosion of ~u. The inequalities are nontrivial only at
/// transitions of x, so the edge sweep is exact.
CheckReport check_ridc(const Signal& u, const RidcParams& p, const Signal& x);

/// Strict separation of consecutive opposite edges of an accepted x.
/// Throws PreconditionFailed unless nzc(p) holds and check_ridc passes.
CheckReport edge_separation_check(const Signal& u, const RidcParams& p,
                                  const Signal& x);

// --- bounded relative inertial delay condition -------------------------------

/// CC for BRIDC: the four-way parameter disjunction making solutions exist
/// for every input.
bool cc_bridc(const BridcParams& p);

CheckReport check_bridc(const Signal& u, const BridcParams& p, const Signal& x);

// --- deterministic relative inertial delay condition -------------------------

/// The unique solution of the DRIDC system. Sweep over the merged transition
/// set of A = erode(u, rise) and B = erode(~u, fall): state goes to 1 where
/// A = 1, to 0 where B = 1, holds otherwise; CC guarantees A & B = 0.
/// Throws ConsistencyViolated unless cc_bdc(p).
Signal solve_dridc(const Signal& u, const BdcParams& p);

enum class DridcForm { A, B, C, D, E, F };

/// Evaluates the selected equivalent system verbatim over the merged event
/// set of u, x and the window functions. Throws ConsistencyViolated unless
/// cc_bdc(p).
CheckReport check_dridc_form(const Signal& u, const BdcParams& p,
                             const Signal& x, DridcForm form);

// --- constant delays ---------------------------------------------------------

/// Every rising edge t of x has u(t - d_r) = 1 and every falling edge has
/// u(t - d_f) = 0. Throws NegativeDelay for negative lags.
CheckReport check_constant_bounds(const Signal& u, const Signal& x,
                                  const Rat& d_r, const Rat& d_f);

// --- min/max reparameterization ----------------------------------------------

/// The equivalent min/max-bundle form of the eight BRIDC parameters.
struct MinMaxParams {
  Rat m_r_min, d_r_min, m_r_max, d_r_max;
  Rat m_f_min, d_f_min, m_f_max, d_f_max;

  bool operator==(const MinMaxParams&) const = default;
};

/// Bijective renaming (min = inertial, max = bounded); throws
/// PreconditionFailed naming the first violated chain inequality.
MinMaxParams to_minmax(const BridcParams& p);
BridcParams to_bridc(const MinMaxParams& p);

/// The two-sided edge-inequality form over the min/max parameters; agrees
/// with check_bridc on every pair of signals when the chain preconditions
/// of to_minmax hold.
CheckReport check_two_sided_edges(const Signal& u, const MinMaxParams& p,
                                  const Signal& x);

}  // namespace sigdelay
