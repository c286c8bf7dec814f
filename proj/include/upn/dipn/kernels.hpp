#pragma once

// Fixed-width firing kernels used by exact-mode simulation while every token
// count and weight fits comfortably in 64 bits. Each kernel has a scalar
// reference implementation and an AVX2 variant; the variant is picked at
// runtime from CPU features and the two are equivalence-tested.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace upn::dipn {

class Net;

namespace kernels {

// Counts above this leave the fixed-width path. Adding one delta (also
// bounded by kLimit) to a count below kLimit cannot overflow int64.
inline constexpr std::int64_t kLimit = std::int64_t{1} << 61;

// Per-transition rows padded to a multiple of four lanes. Transition t is
// enabled at marking m iff need[t][p] <= m[p] <= cap[t][p] for every lane:
// regular inputs raise need, inhibitors drop cap to zero. Padding lanes
// carry need = 0, cap = INT64_MAX and a zero delta.
struct DenseNet {
  std::size_t places = 0;
  std::size_t lanes = 0;
  std::size_t transitions = 0;
  std::vector<std::int64_t> need;
  std::vector<std::int64_t> cap;
  std::vector<std::int64_t> delta;

  const std::int64_t* need_row(std::size_t t) const { return need.data() + t * lanes; }
  const std::int64_t* cap_row(std::size_t t) const { return cap.data() + t * lanes; }
  const std::int64_t* delta_row(std::size_t t) const { return delta.data() + t * lanes; }
};

// Returns nullopt when some weight is too large for the fixed-width path.
// Assumes a structurally valid net.
std::optional<DenseNet> make_dense(const Net& net);

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);
bool isa_supported(Isa isa);
Isa best_isa();

struct KernelTable {
  Isa isa;
  // 0-based index of the minimal enabled transition with index >= from,
  // or -1 if none.
  std::ptrdiff_t (*first_enabled)(const DenseNet& net, const std::int64_t* marking, std::size_t from);
  bool (*enabled)(const DenseNet& net, const std::int64_t* marking, std::size_t t);
  // marking += delta row of t; returns false if any lane now exceeds kLimit.
  bool (*apply)(const DenseNet& net, std::int64_t* marking, std::size_t t);
};

// Throws UsageError if the CPU lacks the requested instruction set.
const KernelTable& table(Isa isa);

// Process-wide default used by simulators that do not request an ISA.
// Initialised to best_isa().
Isa default_isa();
void set_default_isa(Isa isa);

namespace scalar {
std::ptrdiff_t first_enabled(const DenseNet& net, const std::int64_t* marking, std::size_t from = 0);
bool enabled(const DenseNet& net, const std::int64_t* marking, std::size_t t);
bool apply(const DenseNet& net, std::int64_t* marking, std::size_t t);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
#define UPN_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::ptrdiff_t first_enabled(const DenseNet& net, const std::int64_t* marking, std::size_t from = 0);
bool enabled(const DenseNet& net, const std::int64_t* marking, std::size_t t);
bool apply(const DenseNet& net, std::int64_t* marking, std::size_t t);
}  // namespace avx2
#endif

}  // namespace kernels
}  // namespace upn::dipn
