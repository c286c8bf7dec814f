#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "upn/bts/system.hpp"
#include "upn/tm/machine.hpp"

namespace upn::bts {

// The machine M_B together with the handles needed to drive it.
struct Compilation {
  tm::Machine machine;
  tm::State qs = 0;
  tm::State qh = 0;
  tm::State ql = 0;
  tm::Symbol blank = 0;
};

// Throws ValidationError if validate_system() reports anything.
// Symbols: "_" then A then E. States: qs qh ql, qa_<a>, qe_<e>, then
// qea_<e>_<a>, q1_<e>_<a>, q2_<e>_<a> for every e in E (e_h included,
// though only qs ever sees e_h) and a in A.
Compilation compile(const System& system);

// Head on the first symbol in state qs, blanks around.
tm::Config to_tape(const Compilation& c, const Word& word);

// Inverse of to_tape. The head must be in qs or qh on the leftmost nonblank
// cell; throws BridgeError otherwise or on symbols outside A, E and blank.
Word from_tape(const Compilation& c, const tm::Config& config);

struct ProductionStat {
  std::size_t length_before = 0;
  std::size_t length_after = 0;
  std::uint64_t tm_steps = 0;
};

struct CosimReport {
  std::uint64_t productions = 0;  // BTS steps taken
  bool bts_halted = false;
  bool tm_halted = false;
  std::uint64_t tm_steps = 0;
  std::vector<ProductionStat> stats;
  std::optional<std::string> mismatch;  // first divergence, human readable
  Word final_word;

  bool ok() const { return !mismatch; }
  // Length grows by at most one per production.
  bool growth_ok() const;
  // At most 2 * length + 8 machine steps per production.
  bool step_bound_ok() const;
};

// Runs both models for up to k productions. The machine is synchronised at
// each return to qs (entering qs from ql) or at qh, and its tape is
// compared with the BTS word there.
CosimReport cosimulate(const System& system, const Word& word, std::uint64_t k);

}  // namespace upn::bts
