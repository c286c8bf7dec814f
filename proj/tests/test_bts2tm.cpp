#include <doctest.h>

#include <algorithm>

#include "support/random_bts.hpp"
#include "upn/bts/compile.hpp"
#include "upn/errors.hpp"
#include "upn/tm/text_format.hpp"

using namespace upn;
using namespace upn::bts;

namespace {

System small() {
  System s;
  s.A = {"a"};
  s.E = {"e", "h"};
  s.halt = "h";
  s.a_rules = {{"a", {"a"}}};
  s.e_rules = {{{"e", "a"}, {"a", "a", "h"}}};
  return s;
}

}  // namespace

TEST_CASE("state set for |A| = 1, |E| = 2") {
  const Compilation c = compile(small());
  const auto& names = c.machine.state_names();
  CHECK(names.size() == 3 + 1 + 2 + 3 * 2 * 1);
  for (const char* n : {"qs", "qh", "ql", "qa_a", "qe_e", "qe_h", "qea_e_a", "q1_e_a", "q2_e_a", "qea_h_a",
                        "q1_h_a", "q2_h_a"})
    CHECK(std::count(names.begin(), names.end(), n) == 1);
  CHECK(c.machine.symbol_names() == std::vector<std::string>{"_", "a", "e", "h"});
  CHECK(c.machine.halt() == c.qh);
  CHECK(c.machine.start() == c.qs);
  CHECK(c.machine.validate().empty());
}

TEST_CASE("halt rule and A-rule append") {
  const Compilation c = compile(small());
  const auto& m = c.machine;
  const tm::Rule* r11 = m.rule(c.qs, m.symbol("h"));
  REQUIRE(r11);
  CHECK(*r11 == tm::Rule{m.symbol("h"), tm::Move::stay, c.qh});
  const tm::Rule* r23 = m.rule(m.state("qa_a"), c.blank);
  REQUIRE(r23);
  CHECK(*r23 == tm::Rule{m.symbol("a"), tm::Move::left, c.ql});
  // qs on a blank is deliberately undefined.
  CHECK_FALSE(m.rule(c.qs, c.blank));
  // No rules leave the e_h carry states.
  for (const char* n : {"qe_h", "qea_h_a", "q1_h_a", "q2_h_a"})
    for (tm::Symbol x = 0; x < m.symbol_names().size(); ++x) CHECK_FALSE(m.rule(m.state(n), x));
}

TEST_CASE("invalid systems are refused") {
  System s = small();
  s.e_rules.clear();
  CHECK_THROWS_AS(compile(s), ValidationError);
}

TEST_CASE("tape bridge") {
  const Compilation c = compile(small());
  const Word w = parse_word("e a a");
  const tm::Config t = to_tape(c, w);
  CHECK(t.state == c.qs);
  CHECK(tm::format_config(c.machine, t) == "[e] a a");
  CHECK(from_tape(c, t) == w);

  tm::Config moved = t;
  moved.state = c.ql;
  CHECK_THROWS_AS(from_tape(c, moved), BridgeError);
  tm::Config off = t;
  off.left.push_back(c.machine.symbol("a"));
  CHECK_THROWS_AS(from_tape(c, off), BridgeError);
  tm::Config foreign = t;
  foreign.right.push_back(99);
  CHECK_THROWS_AS(from_tape(c, foreign), BridgeError);

  // Leading blanks in the stored zone are tolerated only to the left of the head.
  tm::Config padded = t;
  padded.right.push_back(c.blank);
  CHECK(from_tape(c, padded) == w);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const System s = rbts::random_system(rng);
    const Compilation cs = compile(s);
    const Word x = rbts::random_word(rng, s);
    CHECK(from_tape(cs, to_tape(cs, x)) == x);
  }
}

TEST_CASE("one production matches the interpreter") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const System s = rbts::random_system(rng);
    const Word w = rbts::random_word(rng, s);
    const auto rep = cosimulate(s, w, 1);
    CHECK(rep.ok());
    const auto next = step(s, w);
    if (next) {
      CHECK(rep.productions == 1);
      CHECK(rep.final_word == *next);
    } else {
      CHECK(rep.bts_halted);
      CHECK(rep.tm_halted);
      CHECK(rep.final_word == w);
    }
  }
}

TEST_CASE("halting toy: both sides halt on the same word") {
  const System s = small();
  const auto rep = cosimulate(s, parse_word("a e a"), 50);
  CHECK(rep.ok());
  CHECK(rep.bts_halted);
  CHECK(rep.tm_halted);
  CHECK(format_word(rep.final_word) == format_word(run(s, parse_word("a e a"), 50).word));
}

TEST_CASE("cosimulation on random systems") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 150; ++i) {
    const System s = rbts::random_system(rng);
    const Word w = rbts::random_word(rng, s);
    const auto rep = cosimulate(s, w, 50);
    CAPTURE(i);
    CHECK(rep.ok());
    if (rep.mismatch) MESSAGE(*rep.mismatch);
    CHECK(rep.growth_ok());
    CHECK(rep.step_bound_ok());
    CHECK(rep.bts_halted == rep.tm_halted);
    const auto ref = run(s, w, 50);
    CHECK(rep.final_word == ref.word);
    CHECK(rep.productions == ref.steps);
    // Per-production step counts: 2n + 1 for an A-rule, 2n + 4 for an E-rule.
    for (const auto& st : rep.stats) {
      CHECK(st.tm_steps <= 2 * st.length_before + 8);
      CHECK(st.length_after <= st.length_before + 1);
    }
  }
}

TEST_CASE("compiled .tm round trip") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 30; ++i) {
    const Compilation c = compile(rbts::random_system(rng));
    const std::string text = tm::serialize_tm(c.machine);
    CHECK(tm::parse_tm(text) == c.machine);
    CHECK(tm::serialize_tm(tm::parse_tm(text)) == text);
  }
}
