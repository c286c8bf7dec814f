#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "upn/codec/tape_codec.hpp"
#include "upn/dipn/engine.hpp"
#include "upn/tm/machine.hpp"

namespace upn::trace {

// A blank-word insertion by t1 (lb, into L) or t2 (rb, into R).
struct BlankEvent {
  bool left = false;
  Natural code;
  std::uint64_t count = 1;
  bool operator==(const BlankEvent&) const = default;
};

// One simulated TM step. U, L, X, R are read when STEP receives its token;
// blank insertions that follow are listed as events. `firings` is the
// exact-equivalent firing count at that moment.
struct TraceRecord {
  std::uint64_t step = 0;
  codec::TapeCodes codes;
  std::vector<BlankEvent> events;
  std::uint64_t firings = 0;
  bool operator==(const TraceRecord&) const = default;

  // Codes after the blank insertions, i.e. what FS works on.
  codec::TapeCodes inserted() const;
};

// step=0 U=0 L=31 X=2 R=0 events=rb:13596 firings=0
std::string format_record(const TraceRecord& r);

struct TraceOptions {
  dipn::Mode mode = dipn::Mode::accelerated;
  std::uint64_t budget = UINT64_MAX;
  std::optional<std::uint64_t> max_records;
  std::optional<dipn::kernels::Isa> isa;
};

struct TraceResult {
  std::vector<TraceRecord> records;
  dipn::Marking final_marking;
  std::uint64_t firings = 0;
  bool halted = false;
  bool record_limit_reached = false;
  bool stopped = false;  // on_record returned false
};

// Runs a net laid out like UPN(14,29) (X U L R STEP in p1..p5, lb/rb in
// t1/t2). A record is complete at the first marking where STEP is marked and
// neither t1 nor t2 is enabled; markings are inspected initially and after
// every step. on_record may return false to stop the run after that record.
// Throws UsageError for nets with fewer than 5 places or 2 transitions.
TraceResult trace_upn(const dipn::Net& net, const dipn::Marking& initial, const TraceOptions& options,
                      const std::function<bool(const TraceRecord&)>& on_record = {});

// Reference start: 0 0 0 [1] in state u1.
tm::Config reference_initial();

struct XvalStep {
  std::uint64_t step = 0;
  TraceRecord record;
  codec::TapeCodes tm_codes;       // encode_config of the direct TM, unnormalized
  bool match = false;              // equal after blank-word normalization
  std::optional<std::uint64_t> firings_in_step;  // until the next record
  bool linear_bound_ok = true;     // firings_in_step >= (L + R) / 5 after insertion
};

struct XvalReport {
  std::vector<XvalStep> steps;
  std::optional<std::uint64_t> first_mismatch;
  bool linear_bound_ok = true;
  bool complete = false;  // all K+1 snapshots were reached
  bool halted = false;    // the net died before reaching them
};

// Runs WUTM(2,4) and UPN(14,29) side by side for `steps` TM steps and
// compares snapshots 0..steps. Stops at the first mismatch. `net` replaces
// the built UPN(14,29), e.g. to check a hand-edited copy.
XvalReport xval(std::uint64_t steps, const TraceOptions& options, const tm::Config& initial = reference_initial(),
                const dipn::Net* net = nullptr);

// Leftward drift: left word 0^n, head on 0, state u1. Every TM step writes Z
// and moves left, so the right code grows fivefold per step. Returns the
// exact-equivalent firings of each of the first `steps` TM steps.
std::vector<std::uint64_t> drift_firings(std::size_t n, std::uint64_t steps, const TraceOptions& options);

}  // namespace upn::trace
