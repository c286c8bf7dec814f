#include <doctest.h>

#include <random>

#include "support/oracle.hpp"
#include "upn/builder/upn.hpp"
#include "upn/dipn/engine.hpp"
#include "upn/dipn/text_format.hpp"
#include "upn/errors.hpp"

using namespace upn;
using namespace upn::dipn;
using namespace upn::dipn::literals;

namespace {

// t1: p1 -> p2 (weight 2 in, 1 out), t2: p2 -> p1, inhibited by p1.
Net two_cycle() {
  Net n(2, 2);
  n.add_input(1_t, 1_p, 2);
  n.add_output(1_t, 2_p, 1);
  n.add_input(2_t, 2_p, 1);
  n.add_inhibitor(2_t, 1_p);
  n.add_output(2_t, 1_p, 3);
  return n;
}

Marking marking(std::initializer_list<int> v) {
  std::vector<Natural> t;
  for (int x : v) t.emplace_back(x);
  return Marking(t);
}

std::vector<Firing> expand(const std::vector<Firing>& seq) {
  std::vector<Firing> out;
  for (const auto& f : seq)
    for (std::uint64_t i = 0; i < f.count; ++i) out.push_back({f.transition, 1});
  return out;
}

}  // namespace

TEST_CASE("firing rule: regular inputs, inhibitors, weights") {
  const Net n = two_cycle();
  CHECK(is_enabled(n, marking({2, 0}), 1_t));
  CHECK_FALSE(is_enabled(n, marking({1, 0}), 1_t));
  CHECK_FALSE(is_enabled(n, marking({1, 1}), 2_t));  // inhibited by p1
  CHECK(is_enabled(n, marking({0, 1}), 2_t));

  CHECK(fire(n, marking({5, 0}), 1_t) == marking({3, 1}));
  CHECK(fire(n, marking({0, 2}), 2_t) == marking({3, 1}));
  CHECK_THROWS_AS(fire(n, marking({1, 0}), 1_t), ContractViolation);
  CHECK_THROWS_AS(is_enabled(n, marking({1, 0}), 3_t), UsageError);
  CHECK_THROWS_AS(is_enabled(n, marking({1}), 1_t), UsageError);
}

TEST_CASE("fire leaves the caller's marking untouched") {
  const Net n = two_cycle();
  const Marking m = marking({4, 0});
  const Marking before = m;
  (void)fire(n, m, 1_t);
  CHECK(m == before);
}

TEST_CASE("minimal index fires first") {
  Net n(2, 2);
  n.add_input(1_t, 1_p, 1);
  n.add_output(1_t, 2_p, 1);
  n.add_input(2_t, 1_p, 1);
  auto [out, next] = step_exact(n, marking({1, 0}));
  REQUIRE(out.fired);
  CHECK(out.fired->transition == 1_t);
  CHECK(next == marking({0, 1}));
  auto [out2, next2] = step_exact(n, next);
  CHECK(out2.halted());
  CHECK(next2 == next);
}

TEST_CASE("run: budget, halting, empty budget") {
  const Net n = two_cycle();
  auto r0 = run(n, marking({5, 0}), 0, Mode::exact);
  CHECK(r0.firings == 0);
  CHECK_FALSE(r0.halted);
  CHECK(r0.marking == marking({5, 0}));

  // From (5,0): t1 t1 (1,2) then t2 is inhibited by p1=1, nothing enabled.
  auto r = run(n, marking({5, 0}), 100, Mode::exact);
  CHECK(r.halted);
  CHECK(r.firings == 2);
  CHECK(r.marking == marking({1, 2}));
}

TEST_CASE("validate") {
  CHECK(validate(builder::build_upn14_29()).empty());

  Net dup(2, 1);
  dup.add_output(1_t, 2_p, 1);
  CHECK_THROWS_AS(dup.add_output(1_t, 2_p, 4), UsageError);

  Net inhib_out(1, 1);
  inhib_out.add_input(1_t, 1_p, 1);
  inhib_out.add_arc(1_t, 1_p, ArcSpec{ArcDirection::output, ArcKind::inhibitor, 0});
  CHECK(validate(inhib_out).size() == 1);

  Net out_of_range(2, 1);
  out_of_range.add_input(1_t, 1_p, 1);
  out_of_range.add_output(1_t, 2_p, 1);
  out_of_range.add_output(1_t, 3_p, 1);
  CHECK(validate(out_of_range).size() == 1);
  CHECK_THROWS_AS(run(out_of_range, Marking(2), 10, Mode::exact), ValidationError);

  Net unused(3, 1);
  unused.add_input(1_t, 1_p, 1);
  unused.add_output(1_t, 2_p, 1);
  CHECK(validate(unused).size() == 1);
  CHECK(structural_errors(unused).empty());
}

TEST_CASE("accelerated mode batches the hot loop") {
  // t1 moves p1 to p2 one token at a time while p3 is empty.
  Net n(3, 2);
  n.add_input(1_t, 1_p, 1);
  n.add_output(1_t, 2_p, 1);
  n.add_inhibitor(1_t, 3_p);
  n.add_input(2_t, 2_p, 1);
  n.add_output(2_t, 3_p, 1);
  auto [out, next] = step_accelerated(n, marking({1000, 0, 0}));
  REQUIRE(out.fired);
  CHECK(out.fired->transition == 1_t);
  CHECK(out.fired->count == 1000);
  CHECK(next == marking({0, 1000, 0}));
}

TEST_CASE("accelerated batch stops where a lower transition wakes up") {
  // t1 needs 7 tokens in p2; t2 feeds p2 from p1.
  Net n(3, 2);
  n.add_input(1_t, 2_p, 7);
  n.add_output(1_t, 3_p, 1);
  n.add_input(2_t, 1_p, 1);
  n.add_output(2_t, 2_p, 1);
  auto [out, next] = step_accelerated(n, marking({100, 0, 0}));
  CHECK(out.fired->count == 7);
  CHECK(next == marking({93, 7, 0}));
}

TEST_CASE("acceleration equivalence on random nets") {
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    auto rn = oracle::random_net(rng);
    CAPTURE(serialize_dipn(rn.net, rn.initial));
    const auto ref = oracle::run(rn.net, rn.initial.tokens(), 3000);
    const auto exact = firing_sequence(rn.net, rn.initial, 3000, Mode::exact);
    const auto fast = firing_sequence(rn.net, rn.initial, 3000, Mode::accelerated);
    REQUIRE(exact.size() == ref.sequence.size());
    for (std::size_t k = 0; k < exact.size(); ++k) {
      CHECK(exact[k].transition.value == ref.sequence[k].t);
      CHECK(exact[k].count == ref.sequence[k].count);
    }
    CHECK(expand(fast) == expand(exact));
    const auto r_exact = run(rn.net, rn.initial, 3000, Mode::exact);
    const auto r_fast = run(rn.net, rn.initial, 3000, Mode::accelerated);
    CHECK(r_exact.marking.tokens() == ref.final_marking);
    CHECK(r_fast.marking == r_exact.marking);
    CHECK(r_fast.halted == ref.halted);
    CHECK(r_exact.halted == ref.halted);
  }
}

TEST_CASE("priority soundness: every lower transition is disabled when t fires") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto rn = oracle::random_net(rng);
    Marking m = rn.initial;
    for (int s = 0; s < 200; ++s) {
      auto [out, next] = step_exact(rn.net, m);
      if (out.halted()) break;
      for (std::size_t u = 1; u < out.fired->transition.value; ++u) CHECK_FALSE(is_enabled(rn.net, m, TransitionId{u}));
      m = next;
    }
  }
}

TEST_CASE("exact mode crosses from fixed width to arbitrary precision") {
  // Doubling loop: t1 moves p1 into p2 twice over, t2 moves it back.
  Net n(3, 3);
  n.add_input(1_t, 1_p, 1);
  n.add_output(1_t, 2_p, 2);
  n.add_inhibitor(1_t, 3_p);
  n.add_input(2_t, 2_p, 1);
  n.add_output(2_t, 1_p, 1);
  n.add_inhibitor(2_t, 1_p);
  n.add_output(2_t, 3_p, 1);
  n.add_input(3_t, 3_p, 1);
  Marking m(3);
  m[1_p] = 10;
  m[2_p] = (Natural(1) << 61) - 3;
  Simulator sim(n, m, Mode::exact);
  CHECK(sim.on_fixed_width_path());
  sim.step();
  CHECK(sim.on_fixed_width_path());
  sim.step();  // p2 = 2^61 + 1
  CHECK_FALSE(sim.on_fixed_width_path());
  for (int i = 0; i < 20; ++i) sim.step();
  CHECK(sim.tokens(2_p) > (Natural(1) << 61));
  const auto ref = oracle::run(n, m.tokens(), 22);
  CHECK(sim.marking().tokens() == ref.final_marking);
}

TEST_CASE("huge weights run on the arbitrary-precision path") {
  Net n(2, 1);
  const Natural big = Natural(1) << 100;
  n.add_input(1_t, 1_p, big);
  n.add_output(1_t, 2_p, big * 3);
  Marking m(2);
  m[1_p] = big * 5 + 1;
  for (auto mode : {Mode::exact, Mode::accelerated}) {
    auto r = run(n, m, 100, mode);
    CHECK(r.halted);
    CHECK(r.firings == 5);
    CHECK(r.marking[1_p] == 1);
    CHECK(r.marking[2_p] == big * 15);
  }
}

TEST_CASE("watched place changes only at batch ends") {
  // t1 drains p1 into p2; p1 is watched, so no batch may pass p1 == 0 inside.
  Net n(2, 1);
  n.add_input(1_t, 1_p, 1);
  n.add_output(1_t, 2_p, 1);
  Simulator sim(n, marking({10, 0}), Mode::accelerated);
  sim.watch(1_p);
  auto out = sim.step();
  CHECK(out.fired->count == 10);
  CHECK(sim.is_zero(1_p));

  Net grow(2, 1);
  grow.add_output(1_t, 1_p, 1);
  grow.add_inhibitor(1_t, 2_p);
  Simulator g(grow, marking({0, 0}), Mode::accelerated);
  g.watch(1_p);
  CHECK(g.step(1000).fired->count == 1);  // 0 -> 1 must be its own batch
  CHECK(g.step(1000).fired->count == 1000);
}

TEST_CASE(".dipn parse and serialize") {
  const std::string text =
      "# comment\n"
      "dipn 2 2\n"
      "name p1 A\n"
      "name t2 back\n"
      "arc t2 p1 inhib\n"
      "arc t1 p1 in 2   # trailing comment\n"
      "arc t1 p2 out 1\n"
      "arc t2 p2 in 1\n"
      "arc t2 p1 out 3\n"
      "init p1 5\n";
  auto f = parse_dipn(text);
  CHECK(f.net == [] {
    Net n = two_cycle();
    n.set_place_name(1_p, "A");
    n.set_transition_name(2_t, "back");
    return n;
  }());
  CHECK(f.initial == marking({5, 0}));
  const std::string canon = serialize_dipn(f.net, f.initial);
  CHECK(canon ==
        "dipn 2 2\nname p1 A\nname t2 back\narc t1 p1 in 2\narc t1 p2 out 1\narc t2 p1 inhib\narc t2 p1 out 3\n"
        "arc t2 p2 in 1\ninit p1 5\n");
  auto again = parse_dipn(canon);
  CHECK(again.net == f.net);
  CHECK(serialize_dipn(again.net, again.initial) == canon);
}

TEST_CASE(".dipn unbounded numbers") {
  auto f = parse_dipn("dipn 1 1\narc t1 p1 out 123456789012345678901234567890\ninit p1 99999999999999999999999\n");
  CHECK(f.net.find_arc(1_t, 1_p, ArcDirection::output)->weight == Natural("123456789012345678901234567890"));
  CHECK(f.initial[1_p] == Natural("99999999999999999999999"));
}

TEST_CASE(".dipn parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_dipn(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("petri 1 1\n") == 1);
  CHECK(line_of("dipn 1 1\narc t1 p1 in 1\narc t1 p1 in 2\n") == 3);  // duplicate
  CHECK(line_of("dipn 1 1\n\narc t1 p2 in 1\n") == 3);                // place out of range
  CHECK(line_of("dipn 1 1\narc t1 p1 in 0\n") == 2);                  // zero weight
  CHECK(line_of("dipn 1 1\narc t1 p1 in -3\n") == 2);
  CHECK(line_of("dipn 1 1\narc t1 p1 out\n") == 2);
  CHECK(line_of("dipn 1 1\ninit p1 1\ninit p1 2\n") == 3);
  CHECK(line_of("dipn 1 1\nfoo\n") == 2);
  CHECK(line_of("dipn 1 1\nname p1 a\nname p1 b\n") == 3);
  CHECK(line_of("dipn 1 1\narc t0 p1 in 1\n") == 2);
}
