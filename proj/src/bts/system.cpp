#include "upn/bts/system.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "../text_util.hpp"
#include "upn/errors.hpp"

namespace upn::bts {

bool System::in_A(const std::string& s) const { return std::find(A.begin(), A.end(), s) != A.end(); }
bool System::in_E(const std::string& s) const { return std::find(E.begin(), E.end(), s) != E.end(); }

std::vector<std::string> validate_system(const System& sys) {
  std::vector<std::string> diags;
  std::set<std::string> seen;
  for (const auto* set : {&sys.A, &sys.E})
    for (const auto& s : *set) {
      if (!seen.insert(s).second) diags.push_back("symbol '" + s + "' declared twice or in both A and E");
      if (s == kReservedBlank) diags.push_back("symbol '_' is reserved for the blank");
    }
  if (sys.A.empty()) diags.push_back("A is empty");
  if (!sys.in_E(sys.halt)) diags.push_back("halt symbol '" + sys.halt + "' is not in E");

  for (const auto& a : sys.A) {
    auto it = sys.a_rules.find(a);
    if (it == sys.a_rules.end())
      diags.push_back("R(" + a + ") is undefined");
    else if (it->second != Word{a})
      diags.push_back("R(" + a + ") = " + format_word(it->second) + ", expected R(a) = a");
  }
  for (const auto& [a, rhs] : sys.a_rules)
    if (!sys.in_A(a)) diags.push_back("R(" + a + ") given for a symbol outside A");

  for (const auto& e : sys.E)
    for (const auto& a : sys.A) {
      const bool has = sys.e_rules.count({e, a}) > 0;
      if (e == sys.halt && has) diags.push_back("R(" + e + "," + a + ") must be undefined for the halt symbol");
      if (e != sys.halt && !has) diags.push_back("R(" + e + "," + a + ") is undefined");
    }
  for (const auto& [key, rhs] : sys.e_rules) {
    const std::string name = "R(" + key.first + "," + key.second + ")";
    if (!sys.in_E(key.first) || !sys.in_A(key.second)) diags.push_back(name + " given outside E x A");
    const bool form = (rhs.size() == 2 || rhs.size() == 3) && sys.in_E(rhs.back()) &&
                      std::all_of(rhs.begin(), rhs.end() - 1, [&](const std::string& s) { return sys.in_A(s); });
    if (!form) diags.push_back(name + " = " + format_word(rhs) + " is not of the form AE or AAE");
  }
  return diags;
}

bool shape_ok(const System& sys, const Word& w) {
  if (w.size() < 2) return false;
  std::size_t e_count = 0;
  for (const auto& s : w) {
    if (sys.in_E(s))
      ++e_count;
    else if (!sys.in_A(s))
      return false;
  }
  return e_count == 1;
}

std::optional<Word> step(const System& sys, const Word& w) {
  if (!w.empty() && w.front() == sys.halt) return std::nullopt;
  if (!shape_ok(sys, w)) throw MalformedConfiguration("'" + format_word(w) + "' is not a configuration");
  Word next;
  if (sys.in_A(w.front())) {
    auto it = sys.a_rules.find(w.front());
    if (it == sys.a_rules.end()) throw SystemInvalid("R(" + w.front() + ") is undefined");
    next.assign(w.begin() + 1, w.end());
    next.insert(next.end(), it->second.begin(), it->second.end());
    return next;
  }
  if (!sys.in_A(w[1])) throw MalformedConfiguration("'" + w.front() + "' is not followed by a symbol of A");
  auto it = sys.e_rules.find({w[0], w[1]});
  if (it == sys.e_rules.end()) throw SystemInvalid("R(" + w[0] + "," + w[1] + ") is undefined");
  next.assign(w.begin() + 2, w.end());
  next.insert(next.end(), it->second.begin(), it->second.end());
  return next;
}

RunResult run(const System& sys, Word word, std::uint64_t max_steps) {
  RunResult r{std::move(word)};
  while (true) {
    if (!r.word.empty() && r.word.front() == sys.halt) {
      r.halted = true;
      break;
    }
    if (r.steps == max_steps) break;
    r.word = *step(sys, r.word);
    ++r.steps;
  }
  return r;
}

std::string format_word(const Word& w) { return text::join(w); }

Word parse_word(std::string_view source) {
  std::istringstream in{std::string(source)};
  Word w;
  for (std::string t; in >> t;) w.push_back(t);
  return w;
}

BtsFile parse_bts(std::string_view source) {
  BtsFile f;
  auto& sys = f.system;
  bool have_A = false, have_E = false, have_halt = false;
  std::size_t last = 1;
  auto symbol = [&](const text::Line& line, const std::string& s) {
    if (!sys.in_A(s) && !sys.in_E(s)) throw ParseError(line.number, "undeclared symbol '" + s + "'");
    return s;
  };
  for (const auto& line : text::tokenize(source)) {
    last = line.number;
    const auto& tok = line.tokens;
    const std::string& kw = tok[0];
    if (kw == "A" || kw == "E") {
      bool& have = kw == "A" ? have_A : have_E;
      if (have) throw ParseError(line.number, "repeated '" + kw + "' line");
      have = true;
      auto& set = kw == "A" ? sys.A : sys.E;
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (tok[i] == kReservedBlank || tok[i] == "->")
          throw ParseError(line.number, "'" + tok[i] + "' is reserved");
        if (sys.in_A(tok[i]) || sys.in_E(tok[i])) throw ParseError(line.number, "symbol '" + tok[i] + "' declared twice");
        set.push_back(tok[i]);
      }
    } else if (kw == "halt") {
      if (have_halt) throw ParseError(line.number, "repeated 'halt' line");
      if (tok.size() != 2) throw ParseError(line.number, "expected 'halt <symbol>'");
      have_halt = true;
      sys.halt = symbol(line, tok[1]);
    } else if (kw == "prod") {
      auto arrow = std::find(tok.begin(), tok.end(), "->");
      if (arrow == tok.end()) throw ParseError(line.number, "expected '->'");
      const std::size_t lhs = static_cast<std::size_t>(arrow - tok.begin()) - 1;
      Word rhs;
      for (auto it = arrow + 1; it != tok.end(); ++it) rhs.push_back(symbol(line, *it));
      if (rhs.empty()) throw ParseError(line.number, "empty right-hand side");
      if (lhs == 1) {
        const auto a = symbol(line, tok[1]);
        if (!sys.a_rules.emplace(a, rhs).second) throw ParseError(line.number, "second production for " + a);
      } else if (lhs == 2) {
        const auto e = symbol(line, tok[1]);
        const auto a = symbol(line, tok[2]);
        if (!sys.e_rules.emplace(std::pair{e, a}, rhs).second)
          throw ParseError(line.number, "second production for " + e + " " + a);
      } else {
        throw ParseError(line.number, "left-hand side must be 'a' or 'e a'");
      }
    } else if (kw == "input") {
      if (f.input) throw ParseError(line.number, "repeated 'input' line");
      Word w;
      for (std::size_t i = 1; i < tok.size(); ++i) w.push_back(symbol(line, tok[i]));
      f.input = std::move(w);
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  if (!have_A) throw ParseError(last, "missing 'A' line");
  if (!have_E) throw ParseError(last, "missing 'E' line");
  if (!have_halt) throw ParseError(last, "missing 'halt' line");
  return f;
}

std::string serialize_bts(const BtsFile& f) {
  const auto& sys = f.system;
  std::string out = "A " + text::join(sys.A) + "\nE " + text::join(sys.E) + "\nhalt " + sys.halt + "\n";
  std::set<std::string> done_a;
  std::set<std::pair<std::string, std::string>> done_e;
  auto put_a = [&](const std::string& a, const Word& rhs) { out += "prod " + a + " -> " + format_word(rhs) + "\n"; };
  auto put_e = [&](const std::pair<std::string, std::string>& k, const Word& rhs) {
    out += "prod " + k.first + " " + k.second + " -> " + format_word(rhs) + "\n";
  };
  for (const auto& a : sys.A)
    if (auto it = sys.a_rules.find(a); it != sys.a_rules.end()) {
      put_a(a, it->second);
      done_a.insert(a);
    }
  for (const auto& e : sys.E)
    for (const auto& a : sys.A)
      if (auto it = sys.e_rules.find({e, a}); it != sys.e_rules.end()) {
        put_e(it->first, it->second);
        done_e.insert(it->first);
      }
  for (const auto& [a, rhs] : sys.a_rules)
    if (!done_a.count(a)) put_a(a, rhs);
  for (const auto& [k, rhs] : sys.e_rules)
    if (!done_e.count(k)) put_e(k, rhs);
  if (f.input) out += "input " + format_word(*f.input) + "\n";
  return out;
}

}  // namespace upn::bts
