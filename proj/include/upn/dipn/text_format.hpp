#pragma once

#include <string>
#include <string_view>

#include "upn/dipn/net.hpp"

namespace upn::dipn {

// Line-oriented ".dipn" format:
//
//   dipn <places> <transitions>
//   name p<j> <label>            | name t<i> <label>
//   arc t<i> p<j> in <weight>    | arc t<i> p<j> inhib | arc t<i> p<j> out <weight>
//   init p<j> <count>
//
// '#' starts a comment. Unlisted places start empty.
struct NetFile {
  Net net;
  Marking initial;
};

// Throws ParseError (with line number) on malformed or duplicate lines.
NetFile parse_dipn(std::string_view text);

// Canonical text: names by index, arcs by (transition, place, in before
// out), then nonzero init lines. parse_dipn(serialize_dipn(x)) == x.
std::string serialize_dipn(const Net& net, const Marking& initial);
std::string serialize_dipn(const Net& net);

}  // namespace upn::dipn
