#include <doctest.h>

#include "upn/builder/upn.hpp"
#include "upn/errors.hpp"
#include "upn/trace/trace.hpp"

using namespace upn;
using namespace upn::trace;
using codec::TapeCodes;

namespace {

// Reference run, one row per TM step: U and (L, X, R).
const std::vector<TapeCodes> kReference = {
    {0, 31, 2, 0},           {1, 6, 1, 67984},        {0, 34, 4, 13596},     {0, 6, 4, 67984},
    {0, 1, 1, 339924},       {0, 0, 1, 1699623},      {0, 33, 2, 8498118},   {1, 6, 3, 42490594},
    {1, 31, 4, 8498118},     {1, 157, 3, 1699623},    {1, 786, 3, 339924},   {1, 3931, 4, 67984},
    {1, 19657, 4, 13596},    {1, 98287, 1, 2719},     {0, 491439, 4, 543},
};

TraceResult reference(dipn::Mode mode, std::uint64_t records) {
  TraceOptions o;
  o.mode = mode;
  o.max_records = records;
  return trace_upn(builder::build_upn14_29(), builder::load_marking({0, 31, 2, 0}), o);
}

}  // namespace

TEST_CASE("accelerated trace reproduces the reference run") {
  const auto r = reference(dipn::Mode::accelerated, 15);
  REQUIRE(r.records.size() == 15);
  CHECK(r.record_limit_reached);
  for (std::size_t k = 0; k < 15; ++k) {
    CAPTURE(k);
    CHECK(r.records[k].step == k);
    CHECK(r.records[k].codes == kReference[k]);
  }
  // The two unnumbered rows: after rb at step 0 and after lb at step 5.
  CHECK(r.records[0].events == std::vector<BlankEvent>{{false, 13596, 1}});
  CHECK(r.records[0].inserted() == TapeCodes{0, 31, 2, 13596});
  CHECK(r.records[5].events == std::vector<BlankEvent>{{true, 167, 1}});
  CHECK(r.records[5].inserted() == TapeCodes{0, 167, 1, 1699623});
  for (std::size_t k : {1u, 2u, 3u, 4u, 6u, 13u, 14u}) CHECK(r.records[k].events.empty());
  CHECK(r.records[14].firings == 85806700u);
}

TEST_CASE("exact and accelerated traces agree") {
  const auto fast = reference(dipn::Mode::accelerated, 7);
  const auto exact = reference(dipn::Mode::exact, 7);
  CHECK(exact.records == fast.records);
  CHECK(exact.final_marking == fast.final_marking);
  CHECK(exact.firings == fast.firings);
  CHECK(format_record(exact.records[0]) == "step=0 U=0 L=31 X=2 R=0 events=rb:13596 firings=0");
}

TEST_CASE("budget 0 gives an empty trace") {
  TraceOptions o;
  o.budget = 0;
  const auto r = trace_upn(builder::build_upn14_29(), builder::load_marking({0, 31, 2, 0}), o);
  CHECK(r.records.empty());
  CHECK(r.firings == 0);
  // A snapshot with both sides nonempty is complete immediately.
  const auto s = trace_upn(builder::build_upn14_29(), builder::load_marking({0, 34, 4, 13596}), o);
  REQUIRE(s.records.size() == 1);
  CHECK(s.records[0].codes == TapeCodes{0, 34, 4, 13596});
}

TEST_CASE("trace rejects nets of the wrong shape") {
  dipn::Net tiny(3, 1);
  CHECK_THROWS_AS(trace_upn(tiny, dipn::Marking(3), {}), UsageError);
}

TEST_CASE("xval") {
  TraceOptions o;
  const auto one = xval(1, o);
  CHECK(one.complete);
  CHECK_FALSE(one.first_mismatch);
  REQUIRE(one.steps.size() == 2);
  CHECK(one.steps[0].record.events == std::vector<BlankEvent>{{false, 13596, 1}});
  CHECK(one.steps[0].firings_in_step == 81601u);
  CHECK_FALSE(one.steps[1].firings_in_step);

  const auto full = xval(14, o);
  CHECK(full.complete);
  CHECK_FALSE(full.first_mismatch);
  CHECK(full.linear_bound_ok);
  for (const auto& s : full.steps) CHECK(s.match);

  // A different start configuration.
  const auto m = tm::wutm24();
  const auto other = xval(30, o, tm::parse_config(m, "1 Z [O] 0 1", m.state("u2")));
  CHECK(other.complete);
  CHECK_FALSE(other.first_mismatch);
}

TEST_CASE("leftward drift grows fivefold per step") {
  // 0^8 drifts left for 8 steps. L starts near 5^8 and shrinks while R grows
  // fivefold, so the ratio settles near 5 once R dominates.
  TraceOptions o;
  const auto f = drift_firings(8, 8, o);
  REQUIRE(f.size() == 8);
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] > f[i - 1]);
  for (std::size_t i = 2; i < f.size(); ++i) CHECK(f[i] >= 4 * f[i - 1]);
}
