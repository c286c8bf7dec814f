#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "upn/dipn/kernels.hpp"
#include "upn/dipn/net.hpp"

namespace upn::dipn {

enum class Mode { exact, accelerated };

struct Firing {
  TransitionId transition;
  std::uint64_t count = 1;  // always 1 in exact mode
  bool operator==(const Firing&) const = default;
};

struct StepOutcome {
  std::optional<Firing> fired;  // empty when no transition is enabled
  bool halted() const { return !fired.has_value(); }
  bool operator==(const StepOutcome&) const = default;
};

// Single-step API over value-semantic markings. These recompile the net on
// every call; use Simulator or run() for long executions.
bool is_enabled(const Net& net, const Marking& marking, TransitionId t);
Marking fire(const Net& net, const Marking& marking, TransitionId t);
std::pair<StepOutcome, Marking> step_exact(const Net& net, const Marking& marking);
std::pair<StepOutcome, Marking> step_accelerated(const Net& net, const Marking& marking);

struct CompiledNet;

// Stateful executor for one net and one evolving marking.
//
// Exact mode fires one transition per step and runs on the fixed-width
// kernels while counts stay below kernels::kLimit, falling back to
// arbitrary precision afterwards. Accelerated mode fires the minimal enabled
// transition t in a batch of k, where k is the largest count for which t
// stays the minimal enabled transition; the bound is computed in closed form
// from per-firing deltas, never by replay.
class Simulator {
 public:
  Simulator(const Net& net, const Marking& initial, Mode mode = Mode::exact,
            std::optional<kernels::Isa> isa = std::nullopt);
  ~Simulator();
  Simulator(Simulator&&) noexcept;
  Simulator& operator=(Simulator&&) noexcept;

  // Accelerated batches never change a watched place between zero and
  // nonzero at a point strictly inside the batch, so observers that key on
  // those places see the same boundaries as in exact mode.
  void watch(PlaceId p);

  StepOutcome step(std::uint64_t max_batch = std::numeric_limits<std::uint64_t>::max());

  Mode mode() const { return mode_; }
  std::uint64_t firings() const { return firings_; }
  bool on_fixed_width_path() const { return small_; }
  std::optional<kernels::Isa> isa() const;

  Marking marking() const;
  Natural tokens(PlaceId p) const;
  bool is_zero(PlaceId p) const;
  bool is_enabled(TransitionId t) const;
  std::optional<TransitionId> first_enabled() const;
  const Net& net() const;

 private:
  void leave_fixed_width();
  StepOutcome step_small();
  StepOutcome step_big(std::uint64_t max_batch);

  std::shared_ptr<const CompiledNet> compiled_;
  Mode mode_;
  bool small_ = false;
  const kernels::KernelTable* kernels_ = nullptr;
  std::vector<std::int64_t> small_tokens_;
  std::vector<Natural> big_tokens_;
  std::vector<bool> watched_;
  std::uint64_t firings_ = 0;
  // Last transition fired on the fixed-width path. Everything below it was
  // disabled before that firing, so only its affected_lower set and the
  // suffix starting at it need rechecking.
  std::ptrdiff_t last_fired_ = -1;
};

using Observer = std::function<void(const StepOutcome&, const Simulator&)>;

struct RunResult {
  Marking marking;
  std::uint64_t firings = 0;  // exact-equivalent
  bool halted = false;
};

// Steps until the net halts or `budget` exact-equivalent firings have
// happened. Accelerated batches are clipped to the remaining budget.
RunResult run(const Net& net, const Marking& marking, std::uint64_t budget, Mode mode,
              const Observer& observer = {});

// Convenience for tests and tools: the run-length encoded firing sequence,
// merging adjacent batches of the same transition.
std::vector<Firing> firing_sequence(const Net& net, const Marking& marking, std::uint64_t budget, Mode mode);

}  // namespace upn::dipn
