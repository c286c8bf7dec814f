#include "upn/codec/tape_codec.hpp"

#include <algorithm>

#include "upn/errors.hpp"

namespace upn::codec {

Natural encode_word(const std::vector<unsigned>& digits, unsigned radix) {
  Natural code = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it == 0 || *it >= radix) throw MalformedCode("symbol code " + std::to_string(*it) + " outside 1.." +
                                                      std::to_string(radix - 1));
    code = code * radix + *it;
  }
  return code;
}

std::vector<unsigned> decode_word(const Natural& code, unsigned radix) {
  std::vector<unsigned> digits;
  Natural rest = code;
  while (rest != 0) {
    const unsigned d = static_cast<unsigned>(rest % radix);
    if (d == 0) throw MalformedCode("zero digit inside code " + upn::to_string(code));
    digits.push_back(d);
    rest /= radix;
  }
  return digits;
}

namespace {

std::vector<unsigned> head_outward_left(const Coding& c, const tm::Word& left) {
  std::vector<unsigned> d;
  d.reserve(left.size());
  for (auto it = left.rbegin(); it != left.rend(); ++it) d.push_back(c.symbol_code(*it));
  return d;
}

template <class Seq>
std::vector<unsigned> head_outward_right(const Coding& c, const Seq& right) {
  std::vector<unsigned> d;
  d.reserve(right.size());
  for (auto x : right) d.push_back(c.symbol_code(x));
  return d;
}

}  // namespace

BlankCodes blank_codes() {
  const tm::Machine m = tm::wutm24();
  const Coding c(m);
  const auto& w = *m.weak_blanks();
  return {encode_word(head_outward_left(c, w.left), c.symbol_radix()),
          encode_word(head_outward_right(c, w.right), c.symbol_radix())};
}

Coding::Coding(const tm::Machine& machine) {
  const auto& names = machine.symbol_names();
  static const std::vector<std::string> glyphs{"0", "1", "Z", "O"};
  bool table1 = !names.empty();
  for (const auto& n : names) table1 = table1 && std::find(glyphs.begin(), glyphs.end(), n) != glyphs.end();
  if (table1) {
    for (const auto& n : names)
      symbol_code_.push_back(static_cast<unsigned>(std::find(glyphs.begin(), glyphs.end(), n) - glyphs.begin()) + 1);
    symbol_radix_ = kSymbolRadix;
  } else {
    for (std::size_t i = 0; i < names.size(); ++i) symbol_code_.push_back(static_cast<unsigned>(i + 1));
    symbol_radix_ = static_cast<unsigned>(names.size() + 1);
  }
  state_radix_ = std::max<unsigned>(2, static_cast<unsigned>(machine.state_names().size()));
}

tm::Symbol Coding::symbol_of(unsigned code) const {
  auto it = std::find(symbol_code_.begin(), symbol_code_.end(), code);
  if (code == 0 || it == symbol_code_.end()) throw MalformedCode("no symbol has code " + std::to_string(code));
  return static_cast<tm::Symbol>(it - symbol_code_.begin());
}

tm::State Coding::state_of(const Natural& code) const {
  if (code >= state_radix_) throw MalformedCode("state code " + upn::to_string(code) + " out of range");
  return static_cast<tm::State>(code);
}

TapeCodes encode_config(const tm::Machine& machine, const tm::Config& config) {
  const Coding c(machine);
  TapeCodes out;
  out.U = c.state_code(config.state);
  out.L = encode_word(head_outward_left(c, config.left), c.symbol_radix());
  out.X = c.symbol_code(config.current);
  out.R = encode_word(head_outward_right(c, config.right), c.symbol_radix());
  return out;
}

tm::Config decode_config(const TapeCodes& codes, const tm::Machine& machine) {
  const Coding c(machine);
  tm::Config config;
  config.state = c.state_of(codes.U);
  if (codes.X == 0 || codes.X >= c.symbol_radix()) throw MalformedCode("current-cell code " + upn::to_string(codes.X));
  config.current = c.symbol_of(static_cast<unsigned>(codes.X));
  const auto left = decode_word(codes.L, c.symbol_radix());
  for (auto it = left.rbegin(); it != left.rend(); ++it) config.left.push_back(c.symbol_of(*it));
  for (unsigned d : decode_word(codes.R, c.symbol_radix())) config.right.push_back(c.symbol_of(d));
  return config;
}

std::string to_string(const TapeCodes& codes) {
  return "U=" + upn::to_string(codes.U) + " L=" + upn::to_string(codes.L) + " X=" + upn::to_string(codes.X) +
         " R=" + upn::to_string(codes.R);
}

}  // namespace upn::codec
