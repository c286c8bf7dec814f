#include "upn/bts/compile.hpp"

#include "upn/errors.hpp"

namespace upn::bts {

using tm::Move;

Compilation compile(const System& sys) {
  if (auto diags = validate_system(sys); !diags.empty()) throw ValidationError(std::move(diags));
  Compilation c;
  auto& m = c.machine;
  c.blank = m.add_symbol(std::string(kReservedBlank));
  for (const auto& a : sys.A) m.add_symbol(a);
  for (const auto& e : sys.E) m.add_symbol(e);
  m.set_blank(c.blank);

  c.qs = m.add_state("qs");
  c.qh = m.add_state("qh");
  c.ql = m.add_state("ql");
  for (const auto& a : sys.A) m.add_state("qa_" + a);
  for (const auto& e : sys.E) m.add_state("qe_" + e);
  for (const char* prefix : {"qea_", "q1_", "q2_"})
    for (const auto& e : sys.E)
      for (const auto& a : sys.A) m.add_state(prefix + e + "_" + a);
  m.set_start(c.qs);
  m.set_halt(c.qh);

  const tm::Symbol lambda = c.blank;
  std::vector<tm::Symbol> nonblank;
  for (tm::Symbol x = 0; x < m.symbol_names().size(); ++x)
    if (x != lambda) nonblank.push_back(x);
  auto sweep = [&](tm::State q, Move mv) {
    for (tm::Symbol x : nonblank) m.set_rule(q, x, {x, mv, q});
  };

  // halt on e_h
  m.set_rule(c.qs, m.symbol(sys.halt), {m.symbol(sys.halt), Move::stay, c.qh});
  // A-rule: erase a, carry it to the first blank, append
  for (const auto& a : sys.A) {
    const tm::State qa = m.state("qa_" + a);
    m.set_rule(c.qs, m.symbol(a), {lambda, Move::right, qa});
    sweep(qa, Move::right);
    m.set_rule(qa, lambda, {m.symbol(sys.a_rules.at(a).front()), Move::left, c.ql});
  }
  // E-rule: erase e and a, carry (e, a) right, append s1 s2 s3 (s3 may be blank)
  for (const auto& e : sys.E) {
    if (e == sys.halt) continue;
    const tm::State qe = m.state("qe_" + e);
    m.set_rule(c.qs, m.symbol(e), {lambda, Move::right, qe});
    for (const auto& a : sys.A) {
      const std::string tag = e + "_" + a;
      const tm::State qea = m.state("qea_" + tag), q1 = m.state("q1_" + tag), q2 = m.state("q2_" + tag);
      const Word& rhs = sys.e_rules.at({e, a});
      const tm::Symbol s1 = m.symbol(rhs[0]);
      const tm::Symbol s2 = m.symbol(rhs[1]);
      const tm::Symbol s3 = rhs.size() == 3 ? m.symbol(rhs[2]) : lambda;
      m.set_rule(qe, m.symbol(a), {lambda, Move::right, qea});
      sweep(qea, Move::right);
      m.set_rule(qea, lambda, {s1, Move::right, q1});
      m.set_rule(q1, lambda, {s2, Move::right, q2});
      m.set_rule(q2, lambda, {s3, Move::left, c.ql});
    }
  }
  // walk back to the left end
  sweep(c.ql, Move::left);
  m.set_rule(c.ql, lambda, {lambda, Move::right, c.qs});
  return c;
}

tm::Config to_tape(const Compilation& c, const Word& word) {
  tm::Config config;
  config.state = c.qs;
  config.current = c.blank;
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto x = c.machine.find_symbol(word[i]);
    if (!x || *x == c.blank) throw BridgeError("symbol '" + word[i] + "' is not in A or E");
    if (i == 0)
      config.current = *x;
    else
      config.right.push_back(*x);
  }
  return config;
}

Word from_tape(const Compilation& c, const tm::Config& config) {
  if (config.state != c.qs && config.state != c.qh)
    throw BridgeError("machine is in state " + c.machine.state_names().at(config.state) + ", not qs or qh");
  const auto& names = c.machine.symbol_names();
  auto name = [&](tm::Symbol x) -> const std::string& {
    if (x >= names.size()) throw BridgeError("tape symbol " + std::to_string(x) + " is not in the alphabet");
    return names[x];
  };
  for (tm::Symbol x : config.left)
    if (x != c.blank) throw BridgeError("nonblank '" + name(x) + "' left of the head");
  Word w;
  if (config.current == c.blank) {
    for (tm::Symbol x : config.right)
      if (x != c.blank) throw BridgeError("head is not on the leftmost nonblank cell");
    return w;
  }
  std::vector<tm::Symbol> cells{config.current};
  cells.insert(cells.end(), config.right.begin(), config.right.end());
  while (!cells.empty() && cells.back() == c.blank) cells.pop_back();
  for (tm::Symbol x : cells) {
    if (x == c.blank) throw BridgeError("blank inside the word");
    w.push_back(name(x));
  }
  return w;
}

bool CosimReport::growth_ok() const {
  for (const auto& s : stats)
    if (s.length_after > s.length_before + 1) return false;
  return true;
}

bool CosimReport::step_bound_ok() const {
  for (const auto& s : stats)
    if (s.tm_steps > 2 * s.length_before + 8) return false;
  return true;
}

CosimReport cosimulate(const System& sys, const Word& word, std::uint64_t k) {
  const Compilation c = compile(sys);
  CosimReport report;
  Word w = word;
  tm::Config config = to_tape(c, w);

  auto fail = [&](std::string what) {
    report.mismatch = "after " + std::to_string(report.productions) + " productions: " + std::move(what);
  };

  while (true) {
    const bool bts_halts = !w.empty() && w.front() == sys.halt;
    if (!bts_halts && report.productions == k) break;

    // Advance the machine to its next synchronisation point.
    const std::uint64_t limit = 4 * (w.size() + 8);
    std::uint64_t steps = 0;
    bool synced = false;
    try {
      while (steps < limit) {
        auto next = tm::step(c.machine, config);
        if (!next) break;
        const bool entered_qs = config.state == c.ql && next->state == c.qs;
        config = std::move(*next);
        ++steps;
        if (entered_qs || config.state == c.qh) {
          synced = true;
          break;
        }
      }
    } catch (const UndefinedTransition& e) {
      report.tm_steps += steps;
      fail(std::string("machine stuck: ") + e.what());
      break;
    }
    report.tm_steps += steps;
    if (!synced) {
      fail("machine did not return to qs within " + std::to_string(limit) + " steps");
      break;
    }
    report.tm_halted = config.state == c.qh;

    if (bts_halts) {
      report.bts_halted = true;
      if (!report.tm_halted) fail("BTS halted but the machine did not");
    } else {
      const Word before = w;
      w = *step(sys, w);
      ++report.productions;
      report.stats.push_back({before.size(), w.size(), steps});
      if (report.tm_halted) {
        fail("machine halted but the BTS did not");
        break;
      }
    }
    Word tape;
    try {
      tape = from_tape(c, config);
    } catch (const BridgeError& e) {
      fail(std::string("unreadable tape: ") + e.what());
      break;
    }
    if (tape != w) {
      fail("BTS has '" + format_word(w) + "', machine has '" + format_word(tape) + "'");
      break;
    }
    if (bts_halts) break;
  }
  report.final_word = w;
  return report;
}

}  // namespace upn::bts
