#include "upn/dipn/text_format.hpp"

#include <set>
#include <stdexcept>

#include "../text_util.hpp"
#include "upn/errors.hpp"

namespace upn::dipn {

namespace {

Natural number_at(const text::Line& line, std::size_t i) {
  try {
    return parse_natural(line.tokens.at(i));
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected a decimal number");
  }
}

}  // namespace

NetFile parse_dipn(std::string_view source) {
  const auto lines = text::tokenize(source);
  if (lines.empty()) throw ParseError(1, "empty file, expected 'dipn <places> <transitions>'");
  const auto& header = lines.front();
  if (header.tokens.size() != 3 || header.tokens[0] != "dipn")
    throw ParseError(header.number, "expected 'dipn <places> <transitions>'");
  const auto places = number_at(header, 1);
  const auto transitions = number_at(header, 2);
  if (places > 100'000'000u || transitions > 100'000'000u) throw ParseError(header.number, "net too large");

  NetFile file{Net(places.convert_to<std::size_t>(), transitions.convert_to<std::size_t>()),
               Marking(places.convert_to<std::size_t>())};
  Net& net = file.net;
  std::set<std::size_t> named_places, named_transitions, init_places;

  auto place_at = [&](const text::Line& line, std::size_t i) {
    auto p = text::parse_indexed(line.tokens.at(i), 'p');
    if (!p || *p > net.place_count()) throw ParseError(line.number, "bad place '" + line.tokens.at(i) + "'");
    return PlaceId{*p};
  };
  auto transition_at = [&](const text::Line& line, std::size_t i) {
    auto t = text::parse_indexed(line.tokens.at(i), 't');
    if (!t || *t > net.transition_count())
      throw ParseError(line.number, "bad transition '" + line.tokens.at(i) + "'");
    return TransitionId{*t};
  };

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto& line = lines[li];
    const auto& tok = line.tokens;
    const std::string& kw = tok[0];
    if (kw == "name") {
      if (tok.size() != 3) throw ParseError(line.number, "expected 'name p<j>|t<i> <label>'");
      if (tok[1].starts_with('p')) {
        auto p = place_at(line, 1);
        if (!named_places.insert(p.value).second) throw ParseError(line.number, "duplicate name for " + tok[1]);
        net.set_place_name(p, tok[2]);
      } else {
        auto t = transition_at(line, 1);
        if (!named_transitions.insert(t.value).second) throw ParseError(line.number, "duplicate name for " + tok[1]);
        net.set_transition_name(t, tok[2]);
      }
    } else if (kw == "arc") {
      if (tok.size() < 4) throw ParseError(line.number, "expected 'arc t<i> p<j> in|out <w>' or 'arc t<i> p<j> inhib'");
      auto t = transition_at(line, 1);
      auto p = place_at(line, 2);
      ArcSpec spec;
      if (tok[3] == "inhib" && tok.size() == 4) {
        spec = ArcSpec::inhibitor();
      } else if ((tok[3] == "in" || tok[3] == "out") && tok.size() == 5) {
        auto w = number_at(line, 4);
        if (w == 0) throw ParseError(line.number, "arc weight must be positive");
        spec = tok[3] == "in" ? ArcSpec::input(w) : ArcSpec::output(w);
      } else {
        throw ParseError(line.number, "malformed arc line");
      }
      if (net.find_arc(t, p, spec.direction)) throw ParseError(line.number, "duplicate arc " + tok[1] + " " + tok[2]);
      net.add_arc(t, p, spec);
    } else if (kw == "init") {
      if (tok.size() != 3) throw ParseError(line.number, "expected 'init p<j> <count>'");
      auto p = place_at(line, 1);
      if (!init_places.insert(p.value).second) throw ParseError(line.number, "duplicate init for " + tok[1]);
      file.initial[p] = number_at(line, 2);
    } else if (kw == "dipn") {
      throw ParseError(line.number, "repeated header");
    } else {
      throw ParseError(line.number, "unknown directive '" + kw + "'");
    }
  }
  return file;
}

std::string serialize_dipn(const Net& net, const Marking& initial) {
  std::string out = "dipn " + std::to_string(net.place_count()) + " " + std::to_string(net.transition_count()) + "\n";
  for (const auto& [idx, label] : net.place_names()) out += "name p" + std::to_string(idx) + " " + label + "\n";
  for (const auto& [idx, label] : net.transition_names()) out += "name t" + std::to_string(idx) + " " + label + "\n";
  for (const auto& [key, spec] : net.arcs()) {
    out += "arc t" + std::to_string(key.transition.value) + " p" + std::to_string(key.place.value);
    if (spec.kind == ArcKind::inhibitor)
      out += " inhib\n";
    else
      out += (key.direction == ArcDirection::input ? " in " : " out ") + spec.weight.str() + "\n";
  }
  for (std::size_t p = 0; p < initial.size(); ++p)
    if (initial.tokens()[p] != 0) out += "init p" + std::to_string(p + 1) + " " + initial.tokens()[p].str() + "\n";
  return out;
}

std::string serialize_dipn(const Net& net) { return serialize_dipn(net, Marking{}); }

}  // namespace upn::dipn
