#include "upn/tm/machine.hpp"

#include <algorithm>
#include <sstream>

#include "upn/errors.hpp"

namespace upn::tm {

State Machine::add_state(const std::string& name) {
  if (find_state(name)) throw UsageError("duplicate state '" + name + "'");
  states_.push_back(name);
  grow_table();
  return static_cast<State>(states_.size() - 1);
}

Symbol Machine::add_symbol(const std::string& name) {
  if (find_symbol(name)) throw UsageError("duplicate symbol '" + name + "'");
  symbols_.push_back(name);
  grow_table();
  return static_cast<Symbol>(symbols_.size() - 1);
}

void Machine::grow_table() {
  table_.resize(states_.size());
  for (auto& row : table_) row.resize(symbols_.size());
}

std::optional<State> Machine::find_state(const std::string& name) const {
  auto it = std::find(states_.begin(), states_.end(), name);
  if (it == states_.end()) return std::nullopt;
  return static_cast<State>(it - states_.begin());
}

std::optional<Symbol> Machine::find_symbol(const std::string& name) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), name);
  if (it == symbols_.end()) return std::nullopt;
  return static_cast<Symbol>(it - symbols_.begin());
}

State Machine::state(const std::string& name) const {
  if (auto s = find_state(name)) return *s;
  throw UsageError("unknown state '" + name + "'");
}

Symbol Machine::symbol(const std::string& name) const {
  if (auto s = find_symbol(name)) return *s;
  throw UsageError("unknown symbol '" + name + "'");
}

void Machine::set_rule(State s, Symbol x, Rule rule) {
  if (s >= states_.size() || rule.next >= states_.size()) throw UsageError("rule refers to an undeclared state");
  if (x >= symbols_.size() || rule.write >= symbols_.size()) throw UsageError("rule refers to an undeclared symbol");
  auto& slot = table_[s][x];
  if (slot) throw UsageError("second rule for (" + states_[s] + ", " + symbols_[x] + ")");
  slot = rule;
}

const Rule* Machine::rule(State s, Symbol x) const {
  if (s >= table_.size() || x >= symbols_.size()) return nullptr;
  const auto& slot = table_[s][x];
  return slot ? &*slot : nullptr;
}

std::size_t Machine::rule_count() const {
  std::size_t n = 0;
  for (const auto& row : table_)
    for (const auto& slot : row) n += slot.has_value();
  return n;
}

std::vector<std::string> Machine::validate() const {
  std::vector<std::string> diags;
  if (states_.empty()) diags.push_back("no states declared");
  if (start_ >= states_.size()) diags.push_back("start state undeclared");
  if (halt_ && *halt_ >= states_.size()) diags.push_back("halt state undeclared");
  if (blank_ && *blank_ >= symbols_.size()) diags.push_back("blank symbol undeclared");
  if (weak_) {
    if (weak_->left.empty() || weak_->right.empty()) diags.push_back("weak machine needs nonempty blank words");
    for (const Word* w : {&weak_->left, &weak_->right})
      for (Symbol x : *w)
        if (x >= symbols_.size()) diags.push_back("blank word uses an undeclared symbol");
  } else if (!blank_) {
    diags.push_back("machine has neither a blank symbol nor blank words");
  }
  if (halt_ && *halt_ < states_.size()) {
    for (std::size_t x = 0; x < symbols_.size(); ++x)
      if (table_[*halt_][x]) diags.push_back("halt state has outgoing rules");
  }
  return diags;
}

std::optional<Config> step(const Machine& machine, const Config& config) {
  if (machine.halt() && config.state == *machine.halt()) return std::nullopt;
  const Rule* rule = machine.rule(config.state, config.current);
  if (!rule) {
    const auto& st = machine.state_names();
    const auto& sy = machine.symbol_names();
    throw UndefinedTransition("no rule for state '" + (config.state < st.size() ? st[config.state] : "?") +
                              "' reading '" + (config.current < sy.size() ? sy[config.current] : "?") + "'");
  }
  Config next = config;
  next.state = rule->next;
  const auto& weak = machine.weak_blanks();
  const bool plain = !weak.has_value();
  const Symbol blank = machine.blank().value_or(0);

  switch (rule->move) {
    case Move::stay:
      next.current = rule->write;
      break;
    case Move::left:
      if (!(plain && next.right.empty() && rule->write == blank)) next.right.push_front(rule->write);
      if (next.left.empty()) {
        if (plain) {
          next.current = blank;
          break;
        }
        next.left = weak->left;
      }
      next.current = next.left.back();
      next.left.pop_back();
      break;
    case Move::right:
      if (!(plain && next.left.empty() && rule->write == blank)) next.left.push_back(rule->write);
      if (next.right.empty()) {
        if (plain) {
          next.current = blank;
          break;
        }
        next.right.assign(weak->right.begin(), weak->right.end());
      }
      next.current = next.right.front();
      next.right.pop_front();
      break;
  }
  return next;
}

RunResult run(const Machine& machine, Config config, std::uint64_t max_steps) {
  RunResult result{std::move(config)};
  while (true) {
    if (machine.halt() && result.config.state == *machine.halt()) {
      result.halted = true;
      break;
    }
    if (result.steps == max_steps) break;
    try {
      auto next = step(machine, result.config);
      if (!next) {
        result.halted = true;
        break;
      }
      result.config = std::move(*next);
    } catch (const UndefinedTransition&) {
      result.stuck = true;
      break;
    }
    ++result.steps;
  }
  return result;
}

std::string format_config(const Machine& machine, const Config& config) {
  const auto& names = machine.symbol_names();
  std::string out;
  auto put = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (Symbol x : config.left) put(names.at(x));
  put("[" + names.at(config.current) + "]");
  for (Symbol x : config.right) put(names.at(x));
  return out;
}

Config parse_config(const Machine& machine, const std::string& zone, State state) {
  std::istringstream in(zone);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  Config config;
  config.state = state;
  if (tokens.empty()) {
    if (!machine.blank()) throw UsageError("empty input needs a machine with a blank symbol");
    config.current = *machine.blank();
    return config;
  }
  std::size_t head = 0;
  bool bracketed = false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto& t = tokens[i];
    if (t.size() > 2 && t.front() == '[' && t.back() == ']') {
      if (bracketed) throw UsageError("more than one head position in '" + zone + "'");
      bracketed = true;
      head = i;
      t = t.substr(1, t.size() - 2);
    }
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Symbol x = machine.symbol(tokens[i]);
    if (i < head)
      config.left.push_back(x);
    else if (i == head)
      config.current = x;
    else
      config.right.push_back(x);
  }
  return config;
}

Config normalize_weak(const Machine& machine, Config config) {
  const auto& weak = machine.weak_blanks();
  if (!weak) return config;
  const Word& wl = weak->left;
  const Word& wr = weak->right;
  std::size_t strip = 0;
  while (config.left.size() - strip >= wl.size() && std::equal(wl.begin(), wl.end(), config.left.begin() + strip))
    strip += wl.size();
  config.left.erase(config.left.begin(), config.left.begin() + static_cast<std::ptrdiff_t>(strip));
  while (config.right.size() >= wr.size() &&
         std::equal(wr.begin(), wr.end(), config.right.end() - static_cast<std::ptrdiff_t>(wr.size())))
    config.right.erase(config.right.end() - static_cast<std::ptrdiff_t>(wr.size()), config.right.end());
  return config;
}

Machine wutm24() {
  Machine m;
  const State u1 = m.add_state("u1");
  const State u2 = m.add_state("u2");
  const Symbol zero = m.add_symbol("0");
  const Symbol one = m.add_symbol("1");
  const Symbol zero_s = m.add_symbol("Z");
  const Symbol one_s = m.add_symbol("O");
  m.set_start(u1);
  m.set_weak_blanks({{zero, zero, zero_s, one}, {zero, one_s, zero_s, zero_s, zero, one_s}});
  m.set_rule(u1, zero, {zero_s, Move::left, u1});
  m.set_rule(u2, zero, {one_s, Move::right, u1});
  m.set_rule(u1, one, {one_s, Move::left, u2});
  m.set_rule(u2, one, {zero_s, Move::left, u2});
  m.set_rule(u1, zero_s, {one_s, Move::left, u1});
  m.set_rule(u2, zero_s, {zero, Move::right, u2});
  m.set_rule(u1, one_s, {one_s, Move::left, u1});
  m.set_rule(u2, one_s, {one, Move::right, u2});
  return m;
}

}  // namespace upn::tm
