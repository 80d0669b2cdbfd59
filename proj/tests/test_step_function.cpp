#include <doctest.h>

#include "sigdelay/text_format.hpp"
#include "support.hpp"

using namespace sigdelay;
using testsupport::Rng;

namespace {

Signal sig(const IntervalSet& ones) { return make_signal(ones); }

}  // namespace

TEST_CASE("make_signal canonical forms") {
  CHECK(sig({}).transitions().empty());
  CHECK(sig({{0, Rat(3)}}).transitions() == std::vector<Rat>{0, 3});
  CHECK(sig({{0, Rat(2)}, {3, Rat(4)}, {7, Rat(9)}}).transitions() ==
        std::vector<Rat>{0, 2, 3, 4, 7, 9});
  // overlapping and adjacent pieces merge
  CHECK(sig({{0, Rat(2)}, {2, Rat(3)}}).transitions() ==
        std::vector<Rat>{0, 3});
  CHECK(sig({{1, Rat(4)}, {0, Rat(2)}}).transitions() ==
        std::vector<Rat>{0, 4});
  CHECK_THROWS_AS(sig({{-1, Rat(1)}}), NegativeSupport);
}

TEST_CASE("evaluation is right-continuous") {
  Signal f = sig({{0, Rat(3)}});
  CHECK(f.at(0));
  CHECK_FALSE(f.at(3));
  CHECK_FALSE(f.at(-1));
  CHECK(f.at(Rat(1) / 3));
  // left limits
  CHECK(f.before(3));
  CHECK_FALSE(f.before(0));
  CHECK(f.before(1));
}

TEST_CASE("value at a transition equals value at the following midpoint") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    Signal f = testsupport::rand_signal(rng, 12, 4, 8);
    const auto& ts = f.transitions();
    for (size_t k = 0; k < ts.size(); ++k) {
      Rat mid = k + 1 < ts.size() ? Rat((ts[k] + ts[k + 1]) / 2)
                                  : Rat(ts[k] + 1);
      CHECK(f.at(ts[k]) == f.at(mid));
    }
  }
}

TEST_CASE("boolean combinations") {
  Signal a = sig({{0, Rat(3)}});
  Signal b = sig({{2, Rat(5)}});
  CHECK((a & b).transitions() == std::vector<Rat>{2, 3});
  CHECK((a | b).transitions() == std::vector<Rat>{0, 5});
  CHECK((a ^ a).fn().is_zero());
  StepFunction na = ~a.fn();
  CHECK(na.initial_value());
  CHECK(na.transitions() == std::vector<Rat>{0, 3});
  CHECK(combine(BoolOp::Not, a.fn()) == na);
  CHECK(combine(BoolOp::And, a.fn(), &b.fn()) == (a & b).fn());
}

TEST_CASE("support algebra laws on random pairs") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    StepFunction f = testsupport::rand_signal(rng, 10, 4, 6).fn();
    StepFunction g = testsupport::rand_signal(rng, 10, 4, 6).fn();
    for (const Rat& t : {Rat(-1), Rat(0), Rat(7) / 2, Rat(10), Rat(12)}) {
      CHECK((f & g).at(t) == (f.at(t) && g.at(t)));
      CHECK((f | g).at(t) == (f.at(t) || g.at(t)));
      CHECK((f ^ g).at(t) == (f.at(t) != g.at(t)));
      CHECK((~f).at(t) == !f.at(t));
    }
  }
}

TEST_CASE("leq is an exact sweep") {
  Signal small = sig({{2, Rat(3)}});
  Signal big = sig({{0, Rat(3)}});
  CHECK(leq(small.fn(), big.fn()));
  CHECK_FALSE(leq(big.fn(), small.fn()));
  CHECK(leq(StepFunction{}, big.fn()));
}

TEST_CASE("translate") {
  Signal f = sig({{0, Rat(3)}});
  CHECK(translate(f, 2) == sig({{2, Rat(5)}}));
  CHECK(translate(f, 0) == f);
  StepFunction back = translate(f.fn(), -1);
  CHECK(back.transitions() == std::vector<Rat>{-1, 2});
  CHECK_THROWS_AS(Signal{back}, NegativeSupport);
  CHECK_THROWS_AS(translate(f, -1), NegativeDelay);
  // composition of shifts
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Signal g = testsupport::rand_signal(rng, 8, 4, 6);
    CHECK(translate(translate(g, Rat(1) / 2), Rat(3) / 2) == translate(g, 2));
  }
}

TEST_CASE("derivative set and final value") {
  CHECK(derivative_set(sig({{0, Rat(3)}}).fn()) == std::vector<Rat>{0, 3});
  CHECK(derivative_set(StepFunction{}).empty());
  CHECK(derivative_set(sig({{0, Rat(2)}, {3, Rat(4)}}).fn()) ==
        std::vector<Rat>{0, 2, 3, 4});
  CHECK_FALSE(sig({{0, Rat(3)}}).final_value());
  CHECK(Signal{StepFunction{false, {2}}}.final_value());
  CHECK_FALSE(Signal{}.final_value());
}

TEST_CASE("support round trip") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    Signal f = testsupport::rand_signal(rng, 10, 8, 8);
    CHECK(make_signal(signal_support(f)) == f);
  }
}
