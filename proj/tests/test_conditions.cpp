#include <doctest.h>

#include "support.hpp"

using namespace sigdelay;
using testsupport::Rng;

namespace {

Signal sig(const IntervalSet& ones) { return make_signal(ones); }

const Signal kTriple = sig({{0, Rat(2)}, {3, Rat(4)}, {7, Rat(9)}});

constexpr DridcForm kForms[] = {DridcForm::A, DridcForm::B, DridcForm::C,
                                DridcForm::D, DridcForm::E, DridcForm::F};

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(BdcParams::checked(2, 1, 0, 0), InvalidWindow);
  CHECK_THROWS_AS(BdcParams::checked(0, 0, -1, 2), InvalidWindow);
  CHECK_THROWS_AS(RidcParams::checked(3, 2, 0, 0), InvalidWindow);
  CHECK_NOTHROW(BdcParams::checked(1, 2, 1, 2));
}

TEST_CASE("stability of the limits at infinity") {
  CHECK(check_sc(sig({{0, Rat(3)}}), sig({{3, Rat(5)}})).ok);
  auto r = check_sc(sig({{0, Rat(3)}}), Signal{StepFunction{false, {2}}});
  CHECK_FALSE(r.ok);
  CHECK(r.witness_time.has_value());
  CHECK(check_sc(Signal{}, Signal{}).ok);
}

TEST_CASE("bounded-delay consistency predicate") {
  CHECK(cc_bdc({1, 2, 1, 2}));
  CHECK_FALSE(cc_bdc({0, 3, 0, 1}));
  for (int d = 0; d < 6; ++d) CHECK(cc_bdc({0, d, 0, d}));
}

TEST_CASE("inconsistent parameters admit an input with no solution") {
  CHECK_FALSE(cc_witness({1, 2, 1, 2}).has_value());
  for (const BdcParams& p :
       {BdcParams{0, 3, 0, 1}, BdcParams{0, 5, 0, 1}, BdcParams{1, 7, 2, 3}}) {
    auto w = cc_witness(p);
    REQUIRE(w.has_value());
    // erosion demands 1 where dilation forbids it: the solution set is empty
    CHECK(erode(w->u, p.rise_window()).at(w->certificate_time));
    CHECK_FALSE(dilate(w->u, p.fall_window()).at(w->certificate_time));
  }
}

TEST_CASE("bounded-delay membership") {
  Signal u = sig({{0, Rat(3)}});
  BdcParams p{1, 3, 1, 3};
  CHECK(check_bdc(u, p, sig({{3, Rat(5)}})).ok);
  CHECK(check_bdc(u, p, sig({{2, Rat(6)}})).ok);
  auto r = check_bdc(u, p, sig({{0, Rat(1)}}));
  CHECK_FALSE(r.ok);
  CHECK(*r.witness_time == 0);
}

TEST_CASE("solution generator spans the sandwich") {
  Signal u = sig({{0, Rat(3)}});
  BdcParams p{1, 3, 1, 3};
  CHECK(bdc_solution(u, p, Signal{}) == sig({{3, Rat(5)}}));
  CHECK(bdc_solution(u, p, Signal{StepFunction{false, {0}}}) ==
        sig({{2, Rat(6)}}));
  CHECK(bdc_solution(u, p, sig({{0, Rat(4)}})) == sig({{2, Rat(5)}}));
  CHECK_THROWS_AS(bdc_solution(u, {0, 3, 0, 1}, Signal{}),
                  ConsistencyViolated);

  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    Signal v = testsupport::rand_signal(rng, 10, 4, 8);
    BdcParams q = testsupport::rand_cc_params(rng, 5, 4);
    Signal y = testsupport::rand_signal(rng, 16, 4, 8);
    Signal x = bdc_solution(v, q, y);
    CHECK(check_bdc(v, q, x).ok);
    CHECK(check_sc(v, x).ok);
  }
}

TEST_CASE("consistency vs the erosion/dilation order") {
  Rng rng(43);
  for (int i = 0; i < 100; ++i) {
    BdcParams p = testsupport::rand_cc_params(rng, 5, 4);
    Signal u = testsupport::rand_signal(rng, 10, 4, 8);
    CHECK(leq(erode(u, p.rise_window()).fn(),
              dilate(u, p.fall_window()).fn()));
  }
  for (int i = 0; i < 100; ++i) {
    BdcParams p = testsupport::rand_cc_invalid(rng, 5, 4);
    auto w = cc_witness(p);
    REQUIRE(w.has_value());
    CHECK_FALSE(leq(erode(w->u, p.rise_window()).fn(),
                    dilate(w->u, p.fall_window()).fn()));
  }
}

TEST_CASE("fixed delay") {
  Signal u = sig({{0, Rat(3)}});
  CHECK(fdc_apply(u, 2) == sig({{2, Rat(5)}}));
  CHECK(check_fdc(u, 2, sig({{2, Rat(5)}})).ok);
  CHECK_FALSE(check_fdc(u, 2, sig({{3, Rat(5)}})).ok);
  CHECK_THROWS_AS(fdc_apply(u, -1), NegativeDelay);
}

TEST_CASE("pure translations sit inside compatible bounded delays") {
  Rng rng(47);
  for (int i = 0; i < 40; ++i) {
    BdcParams p = testsupport::rand_cc_params(rng, 5, 4);
    Rat lo = std::max(p.d_r - p.m_r, p.d_f - p.m_f);
    Rat hi = std::min(p.d_r, p.d_f);
    REQUIRE(lo <= hi);  // guaranteed by consistency
    for (int k = 0; k <= 4; ++k) {
      Rat d = lo + (hi - lo) * k / 4;
      Signal u = testsupport::rand_signal(rng, 10, 4, 8);
      CHECK(check_bdc(u, p, fdc_apply(u, d)).ok);
    }
  }
}

TEST_CASE("non-zenoness predicate") {
  CHECK(nzc({1, 2, 1, 2}).holds);
  CHECK_FALSE(nzc({1, 2, 1, 2}).trivial);
  CHECK_FALSE(nzc({1, 10, 1, 2}).holds);
  for (int d = 0; d < 4; ++d) {
    auto v = nzc({0, d, 0, d});
    CHECK(v.holds);
    CHECK(v.trivial);
  }
}

TEST_CASE("relative inertial membership") {
  RidcParams p{1, 2, 1, 2};
  CHECK(check_ridc(kTriple, p, sig({{2, Rat(6)}, {9, Rat(11)}})).ok);
  auto r = check_ridc(kTriple, p, sig({{1, Rat(6)}}));
  CHECK_FALSE(r.ok);
  CHECK(*r.witness_time == 1);
  CHECK(check_ridc(Signal{}, p, Signal{}).ok);
}

TEST_CASE("edge separation bounds") {
  RidcParams p{1, 2, 1, 2};
  Signal x = sig({{2, Rat(6)}, {9, Rat(11)}});
  CHECK(edge_separation_check(kTriple, p, x).ok);
  CHECK(edge_separation_check(Signal{}, p, Signal{}).ok);
  CHECK_THROWS_AS(edge_separation_check(kTriple, {1, 10, 1, 2}, x),
                  PreconditionFailed);
  CHECK_THROWS_AS(edge_separation_check(kTriple, p, sig({{1, Rat(6)}})),
                  PreconditionFailed);

  // no accepted output may violate the bounds
  Rng rng(53);
  for (int i = 0; i < 100; ++i) {
    BdcParams q = testsupport::rand_cc_params(rng, 5, 4);
    Signal u = testsupport::rand_signal(rng, 10, 4, 8);
    Signal y = solve_dridc(u, q);
    CHECK(edge_separation_check(u, {q.m_r, q.d_r, q.m_f, q.d_f}, y).ok);
  }
}

TEST_CASE("combined consistency disjunction") {
  CHECK(cc_bridc({{3, 6, 3, 6}, {1, 4, 1, 4}}));
  CHECK(cc_bridc({{1, 2, 1, 2}, {1, 2, 1, 2}}));
  CHECK_FALSE(cc_bridc({{0, 1, 0, 1}, {0, 100, 0, 100}}));
}

TEST_CASE("combined membership is the conjunction of both checks") {
  BridcParams p{{1, 2, 1, 2}, {1, 2, 1, 2}};
  Signal x = sig({{2, Rat(6)}, {9, Rat(11)}});
  CHECK(check_bridc(kTriple, p, x).ok);
  CHECK(check_bridc(Signal{}, p, Signal{}).ok);
  Signal bad = sig({{3, Rat(5)}});
  CHECK(check_bridc(kTriple, p, bad).ok ==
        (check_bdc(kTriple, p.bdc, bad).ok &&
         check_ridc(kTriple, p.ridc, bad).ok));
}

TEST_CASE("deterministic solver reproduces the worked chain") {
  Signal x = solve_dridc(kTriple, {1, 2, 1, 2});
  CHECK(x == sig({{2, Rat(6)}, {9, Rat(11)}}));
  CHECK(solve_dridc(x, {2, 3, 2, 3}) == sig({{5, Rat(9)}}));
  CHECK_THROWS_AS(solve_dridc(kTriple, {0, 3, 0, 1}), ConsistencyViolated);
}

TEST_CASE("memory-free inertial delay is a pure translation") {
  Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    Signal u = testsupport::rand_signal(rng, 10, 4, 8);
    Rat d = testsupport::rand_rat(rng, 5, 4);
    CHECK(solve_dridc(u, {0, d, 0, d}) == translate(u, d));
  }
}

TEST_CASE("all six system forms accept the solver output") {
  Signal x = solve_dridc(kTriple, {1, 2, 1, 2});
  for (auto form : kForms)
    CHECK(check_dridc_form(kTriple, {1, 2, 1, 2}, x, form).ok);
  // a perturbed output fails every form
  Signal bad = Signal{x.fn() ^ StepFunction{false, {4, 5}}};
  for (auto form : kForms)
    CHECK_FALSE(check_dridc_form(kTriple, {1, 2, 1, 2}, bad, form).ok);
  // the degenerate input
  for (auto form : kForms)
    CHECK(check_dridc_form(Signal{}, {1, 2, 1, 2}, Signal{}, form).ok);
  CHECK_THROWS_AS(check_dridc_form(kTriple, {0, 3, 0, 1}, x, DridcForm::A),
                  ConsistencyViolated);
}

TEST_CASE("solver output doubles as combined membership with doubled params") {
  Rng rng(61);
  for (int i = 0; i < 60; ++i) {
    BdcParams p = testsupport::rand_cc_params(rng, 5, 4);
    Signal u = testsupport::rand_signal(rng, 10, 4, 8);
    Signal x = solve_dridc(u, p);
    CHECK(check_bridc(u, {p, {p.m_r, p.d_r, p.m_f, p.d_f}}, x).ok);
  }
}

TEST_CASE("degenerate zero input forces the zero output") {
  Rng rng(67);
  for (int i = 0; i < 30; ++i) {
    BdcParams p = testsupport::rand_cc_params(rng, 5, 4);
    CHECK(solve_dridc(Signal{}, p).is_zero());
    CHECK(check_bdc(Signal{}, p, Signal{}).ok);
    CHECK_FALSE(check_bdc(Signal{}, p, sig({{1, Rat(2)}})).ok);
  }
}

TEST_CASE("edge-licensing with fixed lags") {
  Signal u = sig({{0, Rat(3)}});
  CHECK(check_constant_bounds(u, fdc_apply(u, 2), 2, 2).ok);
  CHECK_FALSE(check_constant_bounds(u, sig({{1, Rat(2)}}), 5, 5).ok);
  Rng rng(71);
  for (int i = 0; i < 40; ++i) {
    BdcParams p = testsupport::rand_cc_params(rng, 5, 4);
    Signal v = testsupport::rand_signal(rng, 10, 4, 8);
    CHECK(check_constant_bounds(v, solve_dridc(v, p), p.d_r, p.d_f).ok);
  }
  CHECK_THROWS_AS(check_constant_bounds(u, u, -1, 0), NegativeDelay);
}

TEST_CASE("min/max reparameterization round trip") {
  BridcParams a{{3, 6, 3, 6}, {1, 4, 1, 4}};
  MinMaxParams b = to_minmax(a);
  CHECK(b.m_r_min == 1);
  CHECK(b.d_r_min == 4);
  CHECK(b.m_r_max == 3);
  CHECK(b.d_r_max == 6);
  CHECK(b.m_f_min == 1);
  CHECK(b.d_f_min == 4);
  CHECK(b.m_f_max == 3);
  CHECK(b.d_f_max == 6);
  CHECK(to_bridc(b) == a);
  // chain preconditions gate the renaming
  CHECK_THROWS_AS(to_minmax({{0, 1, 0, 1}, {0, 100, 0, 100}}),
                  PreconditionFailed);
}

TEST_CASE("two-sided edge checker agrees with the conjunction checker") {
  BridcParams a{{3, 6, 3, 6}, {1, 4, 1, 4}};
  MinMaxParams b = to_minmax(a);
  Rng rng(73);
  int disagreements = 0;
  for (int i = 0; i < 200; ++i) {
    Signal u = testsupport::rand_signal(rng, 10, 4, 8);
    Signal x = i % 2 ? solve_dridc(u, a.bdc)
                     : testsupport::rand_signal(rng, 16, 4, 8);
    if (check_bridc(u, a, x).ok != check_two_sided_edges(u, b, x).ok)
      ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("membership is invariant under joint translation") {
  Rng rng(79);
  for (int i = 0; i < 60; ++i) {
    BdcParams p = testsupport::rand_cc_params(rng, 5, 4);
    Signal u = testsupport::rand_signal(rng, 10, 4, 8);
    Signal x = solve_dridc(u, p);
    Signal bad = testsupport::mutate(rng, x, 16, 4);
    for (const Rat& d : {Rat(1), Rat(5) / 4, Rat(7) / 2}) {
      Signal ud = translate(u, d);
      CHECK(check_bdc(ud, p, translate(x, d)).ok == check_bdc(u, p, x).ok);
      CHECK(check_bdc(ud, p, translate(bad, d)).ok ==
            check_bdc(u, p, bad).ok);
      RidcParams rp{p.m_r, p.d_r, p.m_f, p.d_f};
      CHECK(check_ridc(ud, rp, translate(x, d)).ok ==
            check_ridc(u, rp, x).ok);
      CHECK(check_ridc(ud, rp, translate(bad, d)).ok ==
            check_ridc(u, rp, bad).ok);
    }
  }
}
