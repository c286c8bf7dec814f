#include "upn/dipn/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "upn/dipn/net.hpp"
#include "upn/errors.hpp"

namespace upn::dipn::kernels {

std::optional<DenseNet> make_dense(const Net& net) {
  DenseNet d;
  d.places = net.place_count();
  d.lanes = std::max<std::size_t>(4, (d.places + 3) / 4 * 4);
  d.transitions = net.transition_count();
  d.need.assign(d.transitions * d.lanes, 0);
  d.cap.assign(d.transitions * d.lanes, std::numeric_limits<std::int64_t>::max());
  d.delta.assign(d.transitions * d.lanes, 0);
  for (const auto& [key, spec] : net.arcs()) {
    const std::size_t at = (key.transition.value - 1) * d.lanes + (key.place.value - 1);
    if (spec.kind == ArcKind::inhibitor) {
      d.cap[at] = 0;
      continue;
    }
    if (spec.weight >= static_cast<std::uint64_t>(kLimit)) return std::nullopt;
    const auto w = spec.weight.convert_to<std::int64_t>();
    if (key.direction == ArcDirection::input) {
      d.need[at] = w;
      d.delta[at] -= w;
    } else {
      d.delta[at] += w;
    }
  }
  return d;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  return std::nullopt;
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(UPN_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar; }

const KernelTable& table(Isa isa) {
  static const KernelTable scalar_table{Isa::scalar, &scalar::first_enabled, &scalar::enabled, &scalar::apply};
#if defined(UPN_HAVE_AVX2_KERNELS)
  static const KernelTable avx2_table{Isa::avx2, &avx2::first_enabled, &avx2::enabled, &avx2::apply};
#endif
  if (!isa_supported(isa)) throw UsageError("instruction set not supported on this CPU: " + std::string(isa_name(isa)));
#if defined(UPN_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) return avx2_table;
#endif
  return scalar_table;
}

namespace {
std::atomic<Isa>& default_isa_slot() {
  static std::atomic<Isa> slot{best_isa()};
  return slot;
}
}  // namespace

Isa default_isa() { return default_isa_slot().load(std::memory_order_relaxed); }

void set_default_isa(Isa isa) {
  (void)table(isa);
  default_isa_slot().store(isa, std::memory_order_relaxed);
}

}  // namespace upn::dipn::kernels
