#pragma once

#include <vector>

#include "upn/natural.hpp"
#include "upn/tm/machine.hpp"

namespace upn::codec {

inline constexpr unsigned kSymbolRadix = 5;
inline constexpr unsigned kStateRadix = 2;

// Digits are listed head-outward: digits[0] is the symbol next to the head.
Natural encode_word(const std::vector<unsigned>& digits, unsigned radix = kSymbolRadix);

// Inverse of encode_word. Throws MalformedCode on a zero digit.
std::vector<unsigned> decode_word(const Natural& code, unsigned radix = kSymbolRadix);

struct BlankCodes {
  Natural left;   // s(w_l)
  Natural right;  // s(w_r)
};

// Computed from wutm24()'s blank words and the symbol codes below.
BlankCodes blank_codes();

struct TapeCodes {
  Natural U;
  Natural L;
  Natural X;
  Natural R;
  bool operator==(const TapeCodes&) const = default;
};

// Symbol and state codes for one machine. Machines over the glyphs 0 1 Z O
// use 0->1, 1->2, Z->3, O->4; others get 1..n in declaration order. States
// are numbered from 0 in declaration order (u1->0, u2->1).
class Coding {
 public:
  explicit Coding(const tm::Machine& machine);
  unsigned symbol_radix() const { return symbol_radix_; }
  unsigned state_radix() const { return state_radix_; }
  unsigned symbol_code(tm::Symbol x) const { return symbol_code_.at(x); }
  unsigned state_code(tm::State s) const { return s; }
  tm::Symbol symbol_of(unsigned code) const;  // throws MalformedCode
  tm::State state_of(const Natural& code) const;

 private:
  std::vector<unsigned> symbol_code_;
  unsigned symbol_radix_;
  unsigned state_radix_;
};

// Encodes the stored working zone as it stands; blank words are not added.
TapeCodes encode_config(const tm::Machine& machine, const tm::Config& config);
tm::Config decode_config(const TapeCodes& codes, const tm::Machine& machine);

std::string to_string(const TapeCodes& codes);

}  // namespace upn::codec
