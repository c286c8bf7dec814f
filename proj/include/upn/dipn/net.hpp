#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "upn/natural.hpp"

namespace upn::dipn {

// 1-based, as in the usual p1..pm / t1..tn numbering.
struct PlaceId {
  std::size_t value = 0;
  auto operator<=>(const PlaceId&) const = default;
};

struct TransitionId {
  std::size_t value = 0;
  auto operator<=>(const TransitionId&) const = default;
};

namespace literals {
constexpr PlaceId operator""_p(unsigned long long v) { return PlaceId{static_cast<std::size_t>(v)}; }
constexpr TransitionId operator""_t(unsigned long long v) {
  return TransitionId{static_cast<std::size_t>(v)};
}
}  // namespace literals

enum class ArcDirection { input, output };
enum class ArcKind { regular, inhibitor };

struct ArcSpec {
  ArcDirection direction = ArcDirection::input;
  ArcKind kind = ArcKind::regular;
  Natural weight = 0;  // unused for inhibitor arcs

  static ArcSpec input(Natural w) { return {ArcDirection::input, ArcKind::regular, std::move(w)}; }
  static ArcSpec output(Natural w) { return {ArcDirection::output, ArcKind::regular, std::move(w)}; }
  static ArcSpec inhibitor() { return {ArcDirection::input, ArcKind::inhibitor, 0}; }

  bool operator==(const ArcSpec&) const = default;
};

// (transition, place, direction). Ordering matches the canonical
// serialization order: by transition, then place, inputs before outputs.
struct ArcKey {
  TransitionId transition;
  PlaceId place;
  ArcDirection direction;
  auto operator<=>(const ArcKey&) const = default;
};

// A net N = (P, T, F) without its initial marking. Transition priority is
// the index order: lower index wins.
//
// The container accepts structurally dubious arcs (out-of-range indices,
// inhibitor outputs, zero weights) so that validate() can report them;
// only a second arc on the same (transition, place, direction) is rejected.
class Net {
 public:
  Net() = default;
  Net(std::size_t places, std::size_t transitions) : places_(places), transitions_(transitions) {}

  std::size_t place_count() const { return places_; }
  std::size_t transition_count() const { return transitions_; }

  void add_arc(TransitionId t, PlaceId p, ArcSpec spec);
  void add_input(TransitionId t, PlaceId p, Natural weight) { add_arc(t, p, ArcSpec::input(std::move(weight))); }
  void add_output(TransitionId t, PlaceId p, Natural weight) { add_arc(t, p, ArcSpec::output(std::move(weight))); }
  void add_inhibitor(TransitionId t, PlaceId p) { add_arc(t, p, ArcSpec::inhibitor()); }
  // Read arc: equal-weight input/output pair.
  void add_read(TransitionId t, PlaceId p, Natural weight = 1) {
    add_input(t, p, weight);
    add_output(t, p, std::move(weight));
  }

  const std::map<ArcKey, ArcSpec>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const ArcSpec* find_arc(TransitionId t, PlaceId p, ArcDirection d) const;

  // Arcs of one transition, in key order.
  std::vector<std::pair<ArcKey, ArcSpec>> arcs_of(TransitionId t) const;

  void set_place_name(PlaceId p, std::string label);
  void set_transition_name(TransitionId t, std::string label);
  const std::map<std::size_t, std::string>& place_names() const { return place_names_; }
  const std::map<std::size_t, std::string>& transition_names() const { return transition_names_; }
  std::optional<PlaceId> find_place(const std::string& label) const;
  std::optional<TransitionId> find_transition(const std::string& label) const;
  std::string transition_label(TransitionId t) const;

  bool operator==(const Net&) const = default;

 private:
  std::size_t places_ = 0;
  std::size_t transitions_ = 0;
  std::map<ArcKey, ArcSpec> arcs_;
  std::map<std::size_t, std::string> place_names_;
  std::map<std::size_t, std::string> transition_names_;
};

// Token vector indexed by place. Entries are Natural, so nonnegativity holds
// by construction.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::size_t places) : tokens_(places) {}
  explicit Marking(std::vector<Natural> tokens) : tokens_(std::move(tokens)) {}

  std::size_t size() const { return tokens_.size(); }
  const Natural& operator[](PlaceId p) const { return tokens_.at(p.value - 1); }
  Natural& operator[](PlaceId p) { return tokens_.at(p.value - 1); }
  const std::vector<Natural>& tokens() const { return tokens_; }

  bool operator==(const Marking&) const = default;

 private:
  std::vector<Natural> tokens_;
};

std::string to_string(const Marking& m);

// Diagnostics that make a net unexecutable: bad indices, inhibitor
// outputs, zero weights.
std::vector<std::string> structural_errors(const Net& net);

// structural_errors() plus places with no arcs. Empty means well-formed.
std::vector<std::string> validate(const Net& net);

// Throws ValidationError when structural_errors() is non-empty.
void require_valid(const Net& net);

}  // namespace upn::dipn
