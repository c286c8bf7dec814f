#pragma once

// Random valid bi-tag systems and shape-valid words for differential tests.

#include <random>

#include "upn/bts/system.hpp"

namespace rbts {

using upn::bts::System;
using upn::bts::Word;

inline System random_system(std::mt19937_64& rng, std::size_t max_a = 3, std::size_t max_e = 3) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  System s;
  const std::size_t na = pick(1, max_a), ne = pick(1, max_e);
  for (std::size_t i = 0; i < na; ++i) s.A.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < ne; ++i) s.E.push_back("e" + std::to_string(i));
  s.halt = s.E[pick(0, ne - 1)];
  for (const auto& a : s.A) s.a_rules[a] = {a};
  for (const auto& e : s.E) {
    if (e == s.halt) continue;
    for (const auto& a : s.A) {
      Word rhs{s.A[pick(0, na - 1)]};
      if (pick(0, 1)) rhs.push_back(s.A[pick(0, na - 1)]);
      rhs.push_back(s.E[pick(0, ne - 1)]);
      s.e_rules[{e, a}] = rhs;
    }
  }
  return s;
}

// Exactly one E symbol, length 2..max_len.
inline Word random_word(std::mt19937_64& rng, const System& s, std::size_t max_len = 8) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t len = pick(2, max_len);
  Word w(len);
  for (auto& x : w) x = s.A[pick(0, s.A.size() - 1)];
  w[pick(0, len - 1)] = s.E[pick(0, s.E.size() - 1)];
  return w;
}

}  // namespace rbts
