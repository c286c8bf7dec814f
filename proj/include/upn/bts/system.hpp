#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace upn::bts {

using Word = std::vector<std::string>;

// B = (A, E, e_h, R). Symbols are names; "_" is reserved for the blank of
// compiled machines and "->" for the file syntax.
struct System {
  std::vector<std::string> A;
  std::vector<std::string> E;
  std::string halt;
  std::map<std::string, Word> a_rules;                           // R(a)
  std::map<std::pair<std::string, std::string>, Word> e_rules;  // R(e, a)

  bool in_A(const std::string& s) const;
  bool in_E(const std::string& s) const;
  bool operator==(const System&) const = default;
};

inline constexpr std::string_view kReservedBlank = "_";

// Alphabet disjointness, e_h in E, R(a) = a for every a, R(e, a) in AE or AAE
// for every e != e_h, nothing for e_h. Empty means valid.
std::vector<std::string> validate_system(const System& system);

// w in A*(EA + AE)A*: exactly one symbol from E, every other from A,
// length at least 2.
bool shape_ok(const System& system, const Word& word);

// nullopt when e_h is leftmost. Throws MalformedConfiguration for a word of
// the wrong shape and SystemInvalid when R has no entry.
std::optional<Word> step(const System& system, const Word& word);

struct RunResult {
  Word word;
  std::uint64_t steps = 0;
  bool halted = false;
};

RunResult run(const System& system, Word word, std::uint64_t max_steps);

std::string format_word(const Word& w);
Word parse_word(std::string_view text);

struct BtsFile {
  System system;
  std::optional<Word> input;
  bool operator==(const BtsFile&) const = default;
};

// Lines: `A <symbols>`, `E <symbols>`, `halt <e_h>`, `prod <a> -> <a>`,
// `prod <e> <a> -> <rhs>`, `input <word>`. Structural problems (unknown
// symbols, duplicates) are parse errors; semantic ones are left to
// validate_system().
BtsFile parse_bts(std::string_view source);

// Canonical order: A, E, halt, A-rules in A order, E-rules by (E, A) order,
// then rules on undeclared keys, then input.
std::string serialize_bts(const BtsFile& file);

}  // namespace upn::bts
