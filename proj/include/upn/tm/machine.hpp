#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace upn::tm {

using Symbol = std::uint32_t;
using State = std::uint32_t;
using Word = std::vector<Symbol>;

enum class Move { left, right, stay };

struct Rule {
  Symbol write;
  Move move;
  State next;
  bool operator==(const Rule&) const = default;
};

// Blank words of a weak machine, both written left to right as they appear
// on the tape: the left periphery is ...w_l w_l, the right one w_r w_r...
struct WeakBlanks {
  Word left;
  Word right;
  bool operator==(const WeakBlanks&) const = default;
};

// M = (states, alphabet, rules, start, halt) with an optional blank symbol
// or, for weak machines, a pair of blank words.
class Machine {
 public:
  State add_state(const std::string& name);
  Symbol add_symbol(const std::string& name);
  std::optional<State> find_state(const std::string& name) const;
  std::optional<Symbol> find_symbol(const std::string& name) const;
  State state(const std::string& name) const;    // throws UsageError if unknown
  Symbol symbol(const std::string& name) const;  // throws UsageError if unknown

  const std::vector<std::string>& state_names() const { return states_; }
  const std::vector<std::string>& symbol_names() const { return symbols_; }

  void set_start(State s) { start_ = s; }
  void set_halt(State s) { halt_ = s; }
  void set_blank(Symbol s) { blank_ = s; }
  void set_weak_blanks(WeakBlanks blanks) { weak_ = std::move(blanks); }
  State start() const { return start_; }
  const std::optional<State>& halt() const { return halt_; }
  const std::optional<Symbol>& blank() const { return blank_; }
  const std::optional<WeakBlanks>& weak_blanks() const { return weak_; }
  bool is_weak() const { return weak_.has_value(); }

  // Throws UsageError on a second rule for the same pair.
  void set_rule(State s, Symbol x, Rule rule);
  const Rule* rule(State s, Symbol x) const;
  std::size_t rule_count() const;

  // Membership and weak/blank consistency checks; empty means usable.
  std::vector<std::string> validate() const;

  bool operator==(const Machine&) const = default;

 private:
  void grow_table();

  std::vector<std::string> states_;
  std::vector<std::string> symbols_;
  State start_ = 0;
  std::optional<State> halt_;
  std::optional<Symbol> blank_;
  std::optional<WeakBlanks> weak_;
  std::vector<std::vector<std::optional<Rule>>> table_;  // [state][symbol]
};

// Tape as (left, current, right): `left` is read left to right and ends next
// to the head, `right` starts next to the head. Only the working zone is
// stored; the periphery is implied by the machine's blank or blank words.
struct Config {
  Word left;
  Symbol current = 0;
  std::deque<Symbol> right;
  State state = 0;
  bool operator==(const Config&) const = default;
};

// One step. Returns nullopt if the machine is already in its halt state.
// Throws UndefinedTransition when no rule applies. Moving off the zone
// edge of a weak machine first unrolls one copy of the relevant blank word;
// a plain machine reads its blank symbol instead and drops blanks that fall
// off the edge behind the head.
std::optional<Config> step(const Machine& machine, const Config& config);

struct RunResult {
  Config config;
  std::uint64_t steps = 0;
  bool halted = false;
  bool stuck = false;
};

RunResult run(const Machine& machine, Config config, std::uint64_t max_steps);

// Zone as text: "l l l [c] r r" with symbol names, head in brackets.
std::string format_config(const Machine& machine, const Config& config);

// Parses the format_config() zone syntax (state is given separately). With
// no bracketed token the head sits on the first symbol; an empty word puts
// the head on the blank.
Config parse_config(const Machine& machine, const std::string& zone, State state);

// Canonical zone for weak machines: strips whole copies of w_l from the far
// left end and of w_r from the far right end. Two configurations denote the
// same infinite tape iff their normal forms are equal.
Config normalize_weak(const Machine& machine, Config config);

// The 2-state, 4-symbol weakly universal machine with symbols 0 1 Z O
// (Z and O are the slashed zero and slashed one), states u1 u2, start u1,
// no halt state, w_l = 0 0 Z 1 and w_r = 0 O Z Z 0 O.
Machine wutm24();

}  // namespace upn::tm
