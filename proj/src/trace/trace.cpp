#include "upn/trace/trace.hpp"

#include "upn/builder/upn.hpp"
#include "upn/errors.hpp"

namespace upn::trace {

using builder::PlaceRole;
using builder::place;
using dipn::TransitionId;

codec::TapeCodes TraceRecord::inserted() const {
  codec::TapeCodes c = codes;
  for (const auto& e : events) (e.left ? c.L : c.R) += e.code * e.count;
  return c;
}

std::string format_record(const TraceRecord& r) {
  std::string out = "step=" + std::to_string(r.step) + " U=" + to_string(r.codes.U) + " L=" + to_string(r.codes.L) +
                    " X=" + to_string(r.codes.X) + " R=" + to_string(r.codes.R) + " events=";
  if (r.events.empty()) out += "-";
  for (std::size_t i = 0; i < r.events.size(); ++i) {
    const auto& e = r.events[i];
    if (i) out += ",";
    out += (e.left ? "lb:" : "rb:") + to_string(e.code);
    if (e.count != 1) out += "x" + std::to_string(e.count);
  }
  out += " firings=" + std::to_string(r.firings);
  return out;
}

TraceResult trace_upn(const dipn::Net& net, const dipn::Marking& initial, const TraceOptions& options,
                      const std::function<bool(const TraceRecord&)>& on_record) {
  if (net.place_count() < 5 || net.transition_count() < 2)
    throw UsageError("snapshot tracing needs places X U L R STEP and transitions lb rb");
  const auto step_place = place(PlaceRole::STEP);
  const TransitionId lb{1}, rb{2};
  auto output_weight = [&](TransitionId t, PlaceRole p) -> Natural {
    const auto* arc = net.find_arc(t, place(p), dipn::ArcDirection::output);
    return arc ? arc->weight : Natural(0);
  };
  const Natural lb_code = output_weight(lb, PlaceRole::L);
  const Natural rb_code = output_weight(rb, PlaceRole::R);

  dipn::Simulator sim(net, initial, options.mode, options.isa);
  sim.watch(step_place);

  TraceResult result;
  std::optional<TraceRecord> pending;
  bool step_marked = false;
  std::uint64_t next_index = 0;

  // Returns true once the record limit is reached.
  auto inspect = [&] {
    const bool marked = !sim.is_zero(step_place);
    if (marked && !step_marked) {
      pending = TraceRecord{next_index,
                            {sim.tokens(place(PlaceRole::U)), sim.tokens(place(PlaceRole::L)),
                             sim.tokens(place(PlaceRole::X)), sim.tokens(place(PlaceRole::R))},
                            {},
                            sim.firings()};
    }
    step_marked = marked;
    if (pending && marked && !sim.is_enabled(lb) && !sim.is_enabled(rb)) {
      const bool go_on = !on_record || on_record(*pending);
      result.records.push_back(std::move(*pending));
      pending.reset();
      ++next_index;
      if (!go_on) {
        result.stopped = true;
        return true;
      }
      if (options.max_records && result.records.size() >= *options.max_records) return true;
    }
    return false;
  };

  bool stop = options.max_records && *options.max_records == 0;
  if (!stop) stop = inspect();
  while (!stop && sim.firings() < options.budget) {
    const auto outcome = sim.step(options.budget - sim.firings());
    if (outcome.halted()) {
      result.halted = true;
      break;
    }
    const auto& f = *outcome.fired;
    if (pending && (f.transition == lb || f.transition == rb)) {
      const bool left = f.transition == lb;
      auto& ev = pending->events;
      if (!ev.empty() && ev.back().left == left)
        ev.back().count += f.count;
      else
        ev.push_back({left, left ? lb_code : rb_code, f.count});
    }
    stop = inspect();
  }
  result.record_limit_reached = stop && !result.stopped;
  result.final_marking = sim.marking();
  result.firings = sim.firings();
  return result;
}

tm::Config reference_initial() {
  const auto m = tm::wutm24();
  return tm::parse_config(m, "0 0 0 [1]", m.state("u1"));
}

XvalReport xval(std::uint64_t steps, const TraceOptions& options, const tm::Config& initial, const dipn::Net* net) {
  const auto machine = tm::wutm24();
  const auto built = net ? dipn::Net(0, 0) : builder::build_upn14_29(machine);
  if (!net) net = &built;
  const auto start = builder::load_marking(codec::encode_config(machine, initial));

  XvalReport report;
  tm::Config tm_config = initial;
  TraceOptions opts = options;
  opts.max_records = steps + 1;

  // Records arrive in order; the TM is advanced one step per record.
  const auto result = trace_upn(*net, start, opts, [&](const TraceRecord& rec) {
    if (rec.step > 0) tm_config = *tm::step(machine, tm_config);
    XvalStep s;
    s.step = rec.step;
    s.record = rec;
    s.tm_codes = codec::encode_config(machine, tm_config);
    try {
      const auto upn_side = tm::normalize_weak(machine, codec::decode_config(rec.codes, machine));
      s.match = upn_side == tm::normalize_weak(machine, tm_config);
    } catch (const MalformedCode&) {
      s.match = false;
    }
    if (!report.steps.empty()) {
      auto& prev = report.steps.back();
      prev.firings_in_step = rec.firings - prev.record.firings;
      const auto ins = prev.record.inserted();
      prev.linear_bound_ok = Natural(*prev.firings_in_step) * 5 >= ins.L + ins.R;
      report.linear_bound_ok = report.linear_bound_ok && prev.linear_bound_ok;
    }
    if (!s.match) report.first_mismatch = s.step;
    report.steps.push_back(std::move(s));
    return !report.first_mismatch;
  });
  report.complete = report.steps.size() == steps + 1 && !report.first_mismatch;
  report.halted = result.halted;
  return report;
}

std::vector<std::uint64_t> drift_firings(std::size_t n, std::uint64_t steps, const TraceOptions& options) {
  const auto machine = tm::wutm24();
  const auto net = builder::build_upn14_29(machine);
  tm::Config c;
  c.state = machine.state("u1");
  c.current = machine.symbol("0");
  c.left.assign(n, machine.symbol("0"));
  TraceOptions opts = options;
  opts.max_records = steps + 1;
  const auto result = trace_upn(net, builder::load_marking(codec::encode_config(machine, c)), opts);
  std::vector<std::uint64_t> out;
  for (std::size_t i = 1; i < result.records.size(); ++i)
    out.push_back(result.records[i].firings - result.records[i - 1].firings);
  return out;
}

}  // namespace upn::trace
