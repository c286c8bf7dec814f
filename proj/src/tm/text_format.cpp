#include "upn/tm/text_format.hpp"

#include "../text_util.hpp"
#include "upn/errors.hpp"

namespace upn::tm {

char move_letter(Move m) {
  switch (m) {
    case Move::left:
      return 'L';
    case Move::right:
      return 'R';
    case Move::stay:
      break;
  }
  return 'S';
}

Machine parse_tm(std::string_view source) {
  const auto lines = text::tokenize(source);
  if (lines.empty()) throw ParseError(1, "empty file, expected 'tm'");
  if (lines[0].tokens.size() != 1 || lines[0].tokens[0] != "tm") throw ParseError(lines[0].number, "expected 'tm'");

  Machine m;
  bool have_states = false, have_symbols = false, have_start = false, have_halt = false, have_blank = false;
  std::optional<Word> blank_left, blank_right;

  auto symbol_of = [&](const text::Line& line, const std::string& name) {
    if (auto s = m.find_symbol(name)) return *s;
    if (have_symbols) throw ParseError(line.number, "undeclared symbol '" + name + "'");
    return m.add_symbol(name);
  };
  auto state_of = [&](const text::Line& line, const std::string& name) {
    if (auto s = m.find_state(name)) return *s;
    throw ParseError(line.number, "undeclared state '" + name + "'");
  };
  auto once = [](const text::Line& line, bool& flag, const std::string& kw) {
    if (flag) throw ParseError(line.number, "repeated '" + kw + "' line");
    flag = true;
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto& tok = line.tokens;
    const std::string& kw = tok[0];
    if (kw == "states") {
      once(line, have_states, kw);
      if (tok.size() < 2) throw ParseError(line.number, "no states listed");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (m.find_state(tok[i])) throw ParseError(line.number, "duplicate state '" + tok[i] + "'");
        m.add_state(tok[i]);
      }
    } else if (kw == "symbols") {
      once(line, have_symbols, kw);
      if (m.symbol_names().size()) throw ParseError(line.number, "'symbols' must precede any symbol use");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (m.find_symbol(tok[i])) throw ParseError(line.number, "duplicate symbol '" + tok[i] + "'");
        m.add_symbol(tok[i]);
      }
    } else if (kw == "start" || kw == "halt") {
      if (tok.size() != 2) throw ParseError(line.number, "expected '" + kw + " <state>'");
      if (kw == "start") {
        once(line, have_start, kw);
        m.set_start(state_of(line, tok[1]));
      } else {
        once(line, have_halt, kw);
        m.set_halt(state_of(line, tok[1]));
      }
    } else if (kw == "blank") {
      if (tok.size() != 2) throw ParseError(line.number, "expected 'blank <symbol>'");
      once(line, have_blank, kw);
      m.set_blank(symbol_of(line, tok[1]));
    } else if (kw == "blankL" || kw == "blankR") {
      auto& slot = kw == "blankL" ? blank_left : blank_right;
      if (slot) throw ParseError(line.number, "repeated '" + kw + "' line");
      if (tok.size() < 2) throw ParseError(line.number, "empty blank word");
      Word w;
      for (std::size_t i = 1; i < tok.size(); ++i) w.push_back(symbol_of(line, tok[i]));
      slot = std::move(w);
    } else if (kw == "rule") {
      if (tok.size() != 7 || tok[3] != "->")
        throw ParseError(line.number, "expected 'rule <state> <sym> -> <sym'> <L|R|S> <state'>'");
      const State s = state_of(line, tok[1]);
      const Symbol x = symbol_of(line, tok[2]);
      const Symbol y = symbol_of(line, tok[4]);
      Move mv;
      if (tok[5] == "L")
        mv = Move::left;
      else if (tok[5] == "R")
        mv = Move::right;
      else if (tok[5] == "S")
        mv = Move::stay;
      else
        throw ParseError(line.number, "move must be L, R or S");
      const State next = state_of(line, tok[6]);
      if (m.rule(s, x)) throw ParseError(line.number, "second rule for (" + tok[1] + ", " + tok[2] + ")");
      m.set_rule(s, x, {y, mv, next});
    } else if (kw == "tm") {
      throw ParseError(line.number, "repeated header");
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  if (!have_states) throw ParseError(lines.back().number, "missing 'states' line");
  if (!have_start) throw ParseError(lines.back().number, "missing 'start' line");
  if (blank_left.has_value() != blank_right.has_value())
    throw ParseError(lines.back().number, "blankL and blankR must be given together");
  if (blank_left) m.set_weak_blanks({std::move(*blank_left), std::move(*blank_right)});
  return m;
}

std::string serialize_tm(const Machine& m) {
  const auto& st = m.state_names();
  const auto& sy = m.symbol_names();
  std::string out = "tm\nstates " + text::join(st) + "\nsymbols " + text::join(sy) + "\n";
  out += "start " + st.at(m.start()) + "\n";
  if (m.halt()) out += "halt " + st.at(*m.halt()) + "\n";
  if (m.blank()) out += "blank " + sy.at(*m.blank()) + "\n";
  if (const auto& weak = m.weak_blanks()) {
    auto word = [&](const Word& w) {
      std::vector<std::string> names;
      for (Symbol x : w) names.push_back(sy.at(x));
      return text::join(names);
    };
    out += "blankL " + word(weak->left) + "\nblankR " + word(weak->right) + "\n";
  }
  for (State s = 0; s < st.size(); ++s)
    for (Symbol x = 0; x < sy.size(); ++x)
      if (const Rule* r = m.rule(s, x))
        out += "rule " + st[s] + " " + sy[x] + " -> " + sy[r->write] + " " + move_letter(r->move) + " " +
               st[r->next] + "\n";
  return out;
}

}  // namespace upn::tm
