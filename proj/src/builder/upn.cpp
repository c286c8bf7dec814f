#include "upn/builder/upn.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "upn/errors.hpp"

namespace upn::builder {

using dipn::Net;
using dipn::PlaceId;
using dipn::TransitionId;

std::string_view role_name(PlaceRole r) {
  static const std::array<std::string_view, kPlaces> names{"X",     "U",  "L",  "R",   "STEP", "MOVE", "RIGHT",
                                                            "MOVE1", "p9", "p10", "p11", "p12",  "p13",  "p14"};
  return names.at(static_cast<std::size_t>(r) - 1);
}

SubnetTag subnet_of(TransitionId t) {
  if (t.value == 1) return SubnetTag::lb;
  if (t.value == 2) return SubnetTag::rb;
  if (t.value >= 3 && t.value <= 10) return SubnetTag::FS;
  if (t.value >= 11 && t.value <= 19) return SubnetTag::MA5LR;
  if (t.value >= 20 && t.value <= 29) return SubnetTag::MD5LR;
  throw UsageError("UPN(14,29) has no transition t" + std::to_string(t.value));
}

std::string_view tag_name(SubnetTag tag) {
  switch (tag) {
    case SubnetTag::lb:
      return "lb";
    case SubnetTag::rb:
      return "rb";
    case SubnetTag::FS:
      return "FS";
    case SubnetTag::MA5LR:
      return "MA5LR";
    case SubnetTag::MD5LR:
      return "MD5LR";
  }
  return "?";
}

namespace {

using enum PlaceRole;

struct Emitter {
  Net& net;
  std::size_t t;
  void in(PlaceRole p, Natural w = 1) { net.add_input(TransitionId{t}, place(p), std::move(w)); }
  void out(PlaceRole p, Natural w = 1) { net.add_output(TransitionId{t}, place(p), std::move(w)); }
  void read(PlaceRole p) { net.add_read(TransitionId{t}, place(p), 1); }
  void inhib(PlaceRole p) { net.add_inhibitor(TransitionId{t}, place(p)); }
};

// S is R for the first twin and L for the second; the R twin fires when
// RIGHT is empty in MA5LR and when it is marked in MD5LR.
void emit_ma5lr(Net& net) {
  for (int side = 0; side < 2; ++side) {
    const PlaceRole s = side == 0 ? R : L;
    auto guard = [&](Emitter& e) { side == 0 ? e.inhib(RIGHT) : e.read(RIGHT); };
    Emitter a{net, 11u + side};
    a.in(s);
    guard(a);
    a.read(MOVE);
    a.out(AUX9, 5);
    Emitter c{net, 14u + side};
    c.out(s);
    guard(c);
    c.in(AUX9);
    c.read(AUX10);
    Emitter e{net, 17u + side};
    e.in(X);
    e.out(s);
    guard(e);
    e.read(AUX11);
  }
  Emitter b{net, 13};
  b.in(MOVE);
  b.out(AUX10);
  Emitter d{net, 16};
  d.in(AUX10);
  d.out(AUX11);
  Emitter f{net, 19};
  f.in(AUX11);
  f.out(MOVE1);
}

void emit_md5lr(Net& net) {
  for (int side = 0; side < 2; ++side) {
    const PlaceRole s = side == 0 ? R : L;
    auto guard = [&](Emitter& e) { side == 0 ? e.read(RIGHT) : e.inhib(RIGHT); };
    Emitter a{net, 20u + side};
    a.in(s, 5);
    guard(a);
    a.read(MOVE1);
    a.out(AUX14);
    Emitter c{net, 23u + side};
    c.out(X);
    c.in(s);
    guard(c);
    c.read(AUX12);
    Emitter e{net, 26u + side};
    e.out(s);
    guard(e);
    e.read(AUX13);
    e.in(AUX14);
  }
  Emitter b{net, 22};
  b.in(MOVE1);
  b.out(AUX12);
  Emitter d{net, 25};
  d.in(AUX12);
  d.out(AUX13);
  Emitter clean{net, 28};
  clean.out(STEP);
  clean.in(RIGHT);
  clean.in(AUX13);
  Emitter last{net, 29};
  last.out(STEP);
  last.in(AUX13);
}

struct FsRule {
  unsigned x, u, x2, u2;
  bool right;
};

// One transition per (symbol, state) rule. Higher X codes come first, and
// for equal X the rule that consumes the larger U code comes first, so the
// transition reading U=0 is reached only when U is empty.
std::vector<FsRule> fs_rules(const tm::Machine& machine) {
  const codec::Coding c(machine);
  std::vector<FsRule> rules;
  for (tm::State s = 0; s < machine.state_names().size(); ++s)
    for (tm::Symbol x = 0; x < machine.symbol_names().size(); ++x)
      if (const tm::Rule* r = machine.rule(s, x)) {
        if (r->move == tm::Move::stay) throw UsageError("UPN cannot simulate a stay move");
        rules.push_back({c.symbol_code(x), c.state_code(s), c.symbol_code(r->write), c.state_code(r->next),
                         r->move == tm::Move::right});
      }
  std::stable_sort(rules.begin(), rules.end(), [](const FsRule& a, const FsRule& b) {
    return a.x != b.x ? a.x > b.x : a.u > b.u;
  });
  return rules;
}

void emit_fs(Net& net, const tm::Machine& machine) {
  const auto rules = fs_rules(machine);
  if (rules.size() != 8) throw UsageError("UPN(14,29) needs exactly 8 machine rules");
  std::size_t t = 3;
  for (const auto& r : rules) {
    Emitter e{net, t++};
    e.in(X, r.x);
    e.out(X, r.x2);
    if (r.u) e.in(U, r.u);
    if (r.u2) e.out(U, r.u2);
    e.in(STEP);
    e.out(MOVE);
    if (r.right) e.out(RIGHT);
  }
}

Fragment cut(const Net& full, const std::vector<std::size_t>& transitions, std::vector<PlaceRole> drop) {
  std::vector<std::size_t> places;
  for (auto t : transitions)
    for (const auto& [key, spec] : full.arcs_of(TransitionId{t})) {
      const auto role = static_cast<PlaceRole>(key.place.value);
      if (std::find(drop.begin(), drop.end(), role) == drop.end()) places.push_back(key.place.value);
    }
  std::sort(places.begin(), places.end());
  places.erase(std::unique(places.begin(), places.end()), places.end());

  Fragment f{Net(places.size(), transitions.size()), {}, {}};
  for (auto p : places) f.place_origin.push_back(PlaceId{p});
  for (auto t : transitions) f.transition_origin.push_back(TransitionId{t});
  for (std::size_t i = 0; i < places.size(); ++i)
    f.net.set_place_name(PlaceId{i + 1}, std::string(role_name(static_cast<PlaceRole>(places[i]))));
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const TransitionId local{i + 1};
    f.net.set_transition_name(local, "t" + std::to_string(transitions[i]));
    for (const auto& [key, spec] : full.arcs_of(TransitionId{transitions[i]})) {
      auto it = std::find(places.begin(), places.end(), key.place.value);
      if (it == places.end()) continue;
      f.net.add_arc(local, PlaceId{static_cast<std::size_t>(it - places.begin()) + 1}, spec);
    }
  }
  return f;
}

}  // namespace

Net build_upn14_29(const tm::Machine& machine) {
  Net net(kPlaces, kTransitions);
  const auto blanks = [&] {
    const codec::Coding c(machine);
    if (!machine.weak_blanks()) throw UsageError("UPN(14,29) needs a weak machine");
    const auto& w = *machine.weak_blanks();
    std::vector<unsigned> left, right;
    for (auto it = w.left.rbegin(); it != w.left.rend(); ++it) left.push_back(c.symbol_code(*it));
    for (auto x : w.right) right.push_back(c.symbol_code(x));
    return codec::BlankCodes{codec::encode_word(left, c.symbol_radix()), codec::encode_word(right, c.symbol_radix())};
  }();

  Emitter lb{net, 1};
  lb.inhib(L);
  lb.out(L, blanks.left);
  lb.read(STEP);
  Emitter rb{net, 2};
  rb.inhib(R);
  rb.out(R, blanks.right);
  rb.read(STEP);
  emit_fs(net, machine);
  emit_ma5lr(net);
  emit_md5lr(net);

  for (std::size_t p = 1; p <= 8; ++p)
    net.set_place_name(PlaceId{p}, std::string(role_name(static_cast<PlaceRole>(p))));
  net.set_transition_name(TransitionId{1}, "lb");
  net.set_transition_name(TransitionId{2}, "rb");
  return net;
}

PlaceId Fragment::local(PlaceRole r) const {
  auto it = std::find(place_origin.begin(), place_origin.end(), place(r));
  if (it == place_origin.end()) throw UsageError("fragment has no place " + std::string(role_name(r)));
  return PlaceId{static_cast<std::size_t>(it - place_origin.begin()) + 1};
}

dipn::Marking Fragment::marking(std::initializer_list<std::pair<PlaceRole, Natural>> tokens) const {
  dipn::Marking m(net.place_count());
  for (const auto& [role, n] : tokens) m[local(role)] = n;
  return m;
}

Fragment build_fs(const tm::Machine& machine) {
  return cut(build_upn14_29(machine), {3, 4, 5, 6, 7, 8, 9, 10}, {});
}

Fragment build_ma5() { return cut(build_upn14_29(), {12, 13, 15, 16, 18, 19}, {RIGHT}); }

Fragment build_md5() { return cut(build_upn14_29(), {21, 22, 24, 25, 27, 29}, {RIGHT}); }

dipn::Marking load_marking(const codec::TapeCodes& codes) {
  dipn::Marking m(kPlaces);
  m[place(X)] = codes.X;
  m[place(U)] = codes.U;
  m[place(L)] = codes.L;
  m[place(R)] = codes.R;
  m[place(STEP)] = 1;
  return m;
}

codec::TapeCodes extract_codes(const dipn::Marking& m) {
  if (m.size() != kPlaces) throw SnapshotError("marking has " + std::to_string(m.size()) + " places, expected 14");
  if (m[place(STEP)] != 1) throw SnapshotError("STEP holds " + to_string(m[place(STEP)]) + " tokens, expected 1");
  return {m[place(U)], m[place(L)], m[place(X)], m[place(R)]};
}

}  // namespace upn::builder
