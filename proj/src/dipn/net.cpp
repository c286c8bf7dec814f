#include "upn/dipn/net.hpp"

#include <set>

#include "upn/errors.hpp"

namespace upn::dipn {

void Net::add_arc(TransitionId t, PlaceId p, ArcSpec spec) {
  ArcKey key{t, p, spec.direction};
  if (!arcs_.emplace(key, std::move(spec)).second) {
    throw UsageError("duplicate " + std::string(key.direction == ArcDirection::input ? "input" : "output") +
                     " arc t" + std::to_string(t.value) + " p" + std::to_string(p.value));
  }
}

const ArcSpec* Net::find_arc(TransitionId t, PlaceId p, ArcDirection d) const {
  auto it = arcs_.find(ArcKey{t, p, d});
  return it == arcs_.end() ? nullptr : &it->second;
}

std::vector<std::pair<ArcKey, ArcSpec>> Net::arcs_of(TransitionId t) const {
  std::vector<std::pair<ArcKey, ArcSpec>> out;
  auto it = arcs_.lower_bound(ArcKey{t, PlaceId{0}, ArcDirection::input});
  for (; it != arcs_.end() && it->first.transition == t; ++it) out.emplace_back(*it);
  return out;
}

void Net::set_place_name(PlaceId p, std::string label) { place_names_[p.value] = std::move(label); }

void Net::set_transition_name(TransitionId t, std::string label) {
  transition_names_[t.value] = std::move(label);
}

std::optional<PlaceId> Net::find_place(const std::string& label) const {
  for (const auto& [idx, name] : place_names_)
    if (name == label) return PlaceId{idx};
  return std::nullopt;
}

std::optional<TransitionId> Net::find_transition(const std::string& label) const {
  for (const auto& [idx, name] : transition_names_)
    if (name == label) return TransitionId{idx};
  return std::nullopt;
}

std::string Net::transition_label(TransitionId t) const {
  auto it = transition_names_.find(t.value);
  return it == transition_names_.end() ? "t" + std::to_string(t.value) : it->second;
}

std::string to_string(const Marking& m) {
  std::string out = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ' ';
    out += m.tokens()[i].str();
  }
  return out + ")";
}

std::vector<std::string> structural_errors(const Net& net) {
  std::vector<std::string> diags;
  for (const auto& [key, spec] : net.arcs()) {
    const std::string where = "arc t" + std::to_string(key.transition.value) + " p" + std::to_string(key.place.value);
    if (key.transition.value == 0 || key.transition.value > net.transition_count())
      diags.push_back(where + ": transition index out of range 1.." + std::to_string(net.transition_count()));
    if (key.place.value == 0 || key.place.value > net.place_count())
      diags.push_back(where + ": place index out of range 1.." + std::to_string(net.place_count()));
    if (spec.kind == ArcKind::inhibitor && key.direction == ArcDirection::output)
      diags.push_back(where + ": inhibitor arc on an output");
    if (spec.kind == ArcKind::regular && spec.weight == 0) diags.push_back(where + ": zero weight");
  }
  for (const auto& [idx, _] : net.place_names())
    if (idx == 0 || idx > net.place_count()) diags.push_back("name for nonexistent place p" + std::to_string(idx));
  for (const auto& [idx, _] : net.transition_names())
    if (idx == 0 || idx > net.transition_count())
      diags.push_back("name for nonexistent transition t" + std::to_string(idx));
  return diags;
}

std::vector<std::string> validate(const Net& net) {
  auto diags = structural_errors(net);
  std::set<std::size_t> referenced;
  for (const auto& [key, _] : net.arcs()) referenced.insert(key.place.value);
  for (std::size_t p = 1; p <= net.place_count(); ++p)
    if (!referenced.count(p)) diags.push_back("place p" + std::to_string(p) + " is not connected to any transition");
  return diags;
}

void require_valid(const Net& net) {
  auto diags = structural_errors(net);
  if (!diags.empty()) throw ValidationError(std::move(diags));
}

}  // namespace upn::dipn
