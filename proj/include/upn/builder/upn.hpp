#pragma once

#include <initializer_list>
#include <string_view>
#include <utility>
#include <vector>

#include "upn/codec/tape_codec.hpp"
#include "upn/dipn/net.hpp"
#include "upn/tm/machine.hpp"

namespace upn::builder {

// Place roles of UPN(14,29); the value is the place index.
enum class PlaceRole : std::size_t {
  X = 1,
  U,
  L,
  R,
  STEP,
  MOVE,
  RIGHT,
  MOVE1,
  AUX9,
  AUX10,
  AUX11,
  AUX12,
  AUX13,
  AUX14,
};

inline constexpr std::size_t kPlaces = 14;
inline constexpr std::size_t kTransitions = 29;

constexpr dipn::PlaceId place(PlaceRole r) { return dipn::PlaceId{static_cast<std::size_t>(r)}; }
std::string_view role_name(PlaceRole r);  // "X", ..., "MOVE1", "p9", ..., "p14"

enum class SubnetTag { lb, rb, FS, MA5LR, MD5LR };
SubnetTag subnet_of(dipn::TransitionId t);  // t1..t29, UsageError otherwise
std::string_view tag_name(SubnetTag tag);

// The full net. FS (t3..t10) is generated from the rules of `machine` with
// its tape coding; t1/t2 insert the codes of its blank words.
dipn::Net build_upn14_29(const tm::Machine& machine = tm::wutm24());

// A sub-net cut out of the full net with compact numbering. Transition order
// is kept, so priorities are unchanged; origin maps give the full-net ids.
struct Fragment {
  dipn::Net net;
  std::vector<dipn::PlaceId> place_origin;            // local index - 1 -> full id
  std::vector<dipn::TransitionId> transition_origin;  // local index - 1 -> full id

  dipn::PlaceId local(PlaceRole r) const;  // UsageError if absent
  dipn::Marking marking(std::initializer_list<std::pair<PlaceRole, Natural>> tokens) const;
  Natural tokens(const dipn::Marking& m, PlaceRole r) const { return m[local(r)]; }
  dipn::TransitionId origin(dipn::TransitionId local_t) const { return transition_origin.at(local_t.value - 1); }
};

// t3..t10 over X, U, STEP, MOVE, RIGHT.
Fragment build_fs(const tm::Machine& machine = tm::wutm24());
// The L-side halves of MA5LR / MD5LR without their RIGHT guards:
// t12 t13 t15 t16 t18 t19 and t21 t22 t24 t25 t27 t29.
Fragment build_ma5();
Fragment build_md5();

// Snapshot marking: X, U, L, R from the codes, STEP = 1, all else 0.
dipn::Marking load_marking(const codec::TapeCodes& codes);
// Inverse of load_marking. Throws SnapshotError unless STEP = 1.
codec::TapeCodes extract_codes(const dipn::Marking& marking);

}  // namespace upn::builder
