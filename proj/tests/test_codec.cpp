#include <doctest.h>

#include <random>

#include "upn/codec/tape_codec.hpp"
#include "upn/errors.hpp"

using namespace upn;
using namespace upn::codec;

namespace {

// Horner over glyphs, head-outward, with the symbol codes 0->1 1->2 Z->3 O->4.
Natural horner(const std::string& head_outward) {
  Natural v = 0;
  for (auto it = head_outward.rbegin(); it != head_outward.rend(); ++it) {
    const std::string glyphs = "01ZO";
    v = v * 5 + (glyphs.find(*it) + 1);
  }
  return v;
}

}  // namespace

TEST_CASE("blank word codes") {
  const auto b = blank_codes();
  CHECK(b.left == 167);
  CHECK(b.right == 13596);
  // w_l = 0 0 Z 1 read from the head outward is 1 Z 0 0; w_r = 0 O Z Z 0 O.
  CHECK(b.left == horner("1Z00"));
  CHECK(b.right == horner("0OZZ0O"));
}

TEST_CASE("encode_word / decode_word") {
  CHECK(encode_word({}) == 0);
  CHECK(encode_word({2, 3, 1, 1}) == 167);
  CHECK(decode_word(167) == std::vector<unsigned>{2, 3, 1, 1});
  CHECK(decode_word(31) == std::vector<unsigned>{1, 1, 1});
  CHECK(decode_word(0).empty());
  CHECK_THROWS_AS(decode_word(5), MalformedCode);   // digits 0,1
  CHECK_THROWS_AS(decode_word(26), MalformedCode);  // 1,0,1
  CHECK_THROWS_AS(encode_word({1, 0, 2}), MalformedCode);
  CHECK_THROWS_AS(encode_word({5}), MalformedCode);
}

TEST_CASE("round trip on random words") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 40)(rng);
    std::vector<unsigned> w(len);
    for (auto& d : w) d = std::uniform_int_distribution<unsigned>(1, 4)(rng);
    const auto code = encode_word(w);
    CHECK(decode_word(code) == w);
    CHECK((len == 0) == (code == 0));
  }
}

TEST_CASE("configurations") {
  const auto m = tm::wutm24();
  const auto u1 = m.state("u1"), u2 = m.state("u2");

  const auto c0 = tm::parse_config(m, "0 0 0 [1]", u1);
  CHECK(encode_config(m, c0) == TapeCodes{0, 31, 2, 0});
  CHECK(decode_config({0, 31, 2, 0}, m) == c0);

  const auto c7 = tm::parse_config(m, "0 0 [Z] O Z Z O O 0 O Z Z 0 O", u2);
  CHECK(encode_config(m, c7) == TapeCodes{1, 6, 3, 42490594});
  CHECK(decode_config(encode_config(m, c7), m) == c7);

  const auto single = tm::parse_config(m, "[0]", u1);
  CHECK(encode_config(m, single) == TapeCodes{0, 0, 1, 0});

  CHECK_THROWS_AS(decode_config({0, 31, 0, 0}, m), MalformedCode);
  CHECK_THROWS_AS(decode_config({2, 31, 1, 0}, m), MalformedCode);
  CHECK_THROWS_AS(decode_config({0, 30, 1, 0}, m), MalformedCode);
}

TEST_CASE("generic coding for other alphabets") {
  tm::Machine m;
  m.add_state("q");
  m.add_symbol("a");
  m.add_symbol("b");
  m.add_symbol("c");
  Coding c(m);
  CHECK(c.symbol_radix() == 4);
  CHECK(c.symbol_code(m.symbol("c")) == 3);
}
