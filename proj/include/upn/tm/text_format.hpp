#pragma once

#include <string>
#include <string_view>

#include "upn/tm/machine.hpp"

namespace upn::tm {

// ".tm" files:
//   tm
//   states <names...>
//   symbols <names...>        optional on input, always written
//   start <s>
//   halt <s>                  optional
//   blank <sym>               optional
//   blankL <word...> / blankR <word...>   weak machines only
//   rule <state> <sym> -> <sym'> <L|R|S> <state'>
// Symbols not listed on a `symbols` line are declared on first use.
Machine parse_tm(std::string_view source);

// Canonical form: rules ordered by (state, symbol) declaration order.
std::string serialize_tm(const Machine& machine);

char move_letter(Move m);

}  // namespace upn::tm
