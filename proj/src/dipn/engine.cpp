#include "upn/dipn/engine.hpp"

#include <algorithm>

#include "upn/errors.hpp"

namespace upn::dipn {

struct InputTerm {
  std::size_t place;  // 0-based
  Natural need;
};

struct TransitionPlan {
  std::vector<InputTerm> regular;
  std::vector<std::size_t> inhibit;
  std::vector<std::pair<std::size_t, Integer>> changes;  // places with nonzero net delta
  std::vector<Integer> delta;                            // dense, per place
  std::vector<std::size_t> affected_lower;               // lower transitions reading a changed place
};

struct CompiledNet {
  Net net;
  std::vector<TransitionPlan> plans;
  std::optional<kernels::DenseNet> dense;
};

namespace {

std::shared_ptr<const CompiledNet> compile(const Net& net) {
  require_valid(net);
  auto c = std::make_shared<CompiledNet>();
  c->net = net;
  const std::size_t m = net.place_count();
  c->plans.resize(net.transition_count());
  for (auto& plan : c->plans) plan.delta.assign(m, 0);
  for (const auto& [key, spec] : net.arcs()) {
    auto& plan = c->plans[key.transition.value - 1];
    const std::size_t p = key.place.value - 1;
    if (spec.kind == ArcKind::inhibitor) {
      plan.inhibit.push_back(p);
    } else if (key.direction == ArcDirection::input) {
      plan.regular.push_back({p, spec.weight});
      plan.delta[p] -= Integer(spec.weight);
    } else {
      plan.delta[p] += Integer(spec.weight);
    }
  }
  for (std::size_t t = 0; t < c->plans.size(); ++t) {
    auto& plan = c->plans[t];
    std::vector<bool> changed(m, false);
    for (std::size_t p = 0; p < m; ++p) {
      if (plan.delta[p] != 0) {
        plan.changes.emplace_back(p, plan.delta[p]);
        changed[p] = true;
      }
    }
    for (std::size_t u = 0; u < t; ++u) {
      const auto& lower = c->plans[u];
      bool touches = std::any_of(lower.regular.begin(), lower.regular.end(),
                                 [&](const InputTerm& in) { return changed[in.place]; }) ||
                     std::any_of(lower.inhibit.begin(), lower.inhibit.end(), [&](std::size_t p) { return changed[p]; });
      if (touches) plan.affected_lower.push_back(u);
    }
  }
  c->dense = kernels::make_dense(net);
  return c;
}

bool plan_enabled(const TransitionPlan& plan, const std::vector<Natural>& tokens) {
  for (const auto& in : plan.regular)
    if (tokens[in.place] < in.need) return false;
  for (std::size_t p : plan.inhibit)
    if (tokens[p] != 0) return false;
  return true;
}

Natural ceil_div(const Natural& a, const Natural& b) { return (a + b - 1u) / b; }

void check_transition(const Net& net, TransitionId t) {
  if (t.value == 0 || t.value > net.transition_count())
    throw UsageError("transition index t" + std::to_string(t.value) + " out of range 1.." +
                     std::to_string(net.transition_count()));
}

void check_marking(const Net& net, const Marking& marking) {
  if (marking.size() != net.place_count())
    throw UsageError("marking has " + std::to_string(marking.size()) + " entries, net has " +
                     std::to_string(net.place_count()) + " places");
}

}  // namespace

// --- single-step API ------------------------------------------------------

bool is_enabled(const Net& net, const Marking& marking, TransitionId t) {
  check_transition(net, t);
  require_valid(net);
  check_marking(net, marking);
  for (const auto& [key, spec] : net.arcs_of(t)) {
    if (key.direction != ArcDirection::input) continue;
    const Natural& have = marking[key.place];
    if (spec.kind == ArcKind::inhibitor ? have != 0 : have < spec.weight) return false;
  }
  return true;
}

Marking fire(const Net& net, const Marking& marking, TransitionId t) {
  if (!is_enabled(net, marking, t))
    throw ContractViolation("transition " + net.transition_label(t) + " is not enabled at " + to_string(marking));
  Marking next = marking;
  const auto arcs = net.arcs_of(t);
  for (const auto& [key, spec] : arcs)
    if (key.direction == ArcDirection::input && spec.kind == ArcKind::regular) next[key.place] -= spec.weight;
  for (const auto& [key, spec] : arcs)
    if (key.direction == ArcDirection::output) next[key.place] += spec.weight;
  return next;
}

std::pair<StepOutcome, Marking> step_exact(const Net& net, const Marking& marking) {
  Simulator sim(net, marking, Mode::exact);
  auto outcome = sim.step();
  return {outcome, sim.marking()};
}

std::pair<StepOutcome, Marking> step_accelerated(const Net& net, const Marking& marking) {
  Simulator sim(net, marking, Mode::accelerated);
  auto outcome = sim.step();
  return {outcome, sim.marking()};
}

// --- Simulator ------------------------------------------------------------

Simulator::Simulator(const Net& net, const Marking& initial, Mode mode, std::optional<kernels::Isa> isa)
    : compiled_(compile(net)), mode_(mode), watched_(net.place_count(), false) {
  check_marking(net, initial);
  big_tokens_ = initial.tokens();
  const bool fits = std::all_of(big_tokens_.begin(), big_tokens_.end(),
                                [](const Natural& v) { return v <= static_cast<std::uint64_t>(kernels::kLimit); });
  if (mode_ == Mode::exact && compiled_->dense && fits) {
    kernels_ = &kernels::table(isa.value_or(kernels::default_isa()));
    small_tokens_.assign(compiled_->dense->lanes, 0);
    for (std::size_t p = 0; p < big_tokens_.size(); ++p) small_tokens_[p] = big_tokens_[p].convert_to<std::int64_t>();
    small_ = true;
  }
}

Simulator::~Simulator() = default;
Simulator::Simulator(Simulator&&) noexcept = default;
Simulator& Simulator::operator=(Simulator&&) noexcept = default;

void Simulator::watch(PlaceId p) {
  if (p.value == 0 || p.value > watched_.size())
    throw UsageError("cannot watch nonexistent place p" + std::to_string(p.value));
  watched_[p.value - 1] = true;
}

std::optional<kernels::Isa> Simulator::isa() const {
  if (!small_) return std::nullopt;
  return kernels_->isa;
}

const Net& Simulator::net() const { return compiled_->net; }

void Simulator::leave_fixed_width() {
  for (std::size_t p = 0; p < big_tokens_.size(); ++p) big_tokens_[p] = Natural(small_tokens_[p]);
  small_ = false;
}

Marking Simulator::marking() const {
  if (!small_) return Marking(big_tokens_);
  std::vector<Natural> tokens(big_tokens_.size());
  for (std::size_t p = 0; p < tokens.size(); ++p) tokens[p] = Natural(small_tokens_[p]);
  return Marking(std::move(tokens));
}

Natural Simulator::tokens(PlaceId p) const {
  if (p.value == 0 || p.value > big_tokens_.size()) throw UsageError("no place p" + std::to_string(p.value));
  return small_ ? Natural(small_tokens_[p.value - 1]) : big_tokens_[p.value - 1];
}

bool Simulator::is_zero(PlaceId p) const {
  if (p.value == 0 || p.value > big_tokens_.size()) throw UsageError("no place p" + std::to_string(p.value));
  return small_ ? small_tokens_[p.value - 1] == 0 : big_tokens_[p.value - 1] == 0;
}

bool Simulator::is_enabled(TransitionId t) const {
  check_transition(compiled_->net, t);
  if (small_) return kernels_->enabled(*compiled_->dense, small_tokens_.data(), t.value - 1);
  return plan_enabled(compiled_->plans[t.value - 1], big_tokens_);
}

std::optional<TransitionId> Simulator::first_enabled() const {
  if (small_) {
    auto idx = kernels_->first_enabled(*compiled_->dense, small_tokens_.data(), 0);
    if (idx < 0) return std::nullopt;
    return TransitionId{static_cast<std::size_t>(idx) + 1};
  }
  for (std::size_t t = 0; t < compiled_->plans.size(); ++t)
    if (plan_enabled(compiled_->plans[t], big_tokens_)) return TransitionId{t + 1};
  return std::nullopt;
}

StepOutcome Simulator::step(std::uint64_t max_batch) {
  if (max_batch == 0) throw UsageError("step needs a batch limit of at least 1");
  return small_ ? step_small() : step_big(max_batch);
}

StepOutcome Simulator::step_small() {
  const auto& dense = *compiled_->dense;
  std::ptrdiff_t idx = -1;
  if (last_fired_ < 0) {
    idx = kernels_->first_enabled(dense, small_tokens_.data(), 0);
  } else {
    for (std::size_t u : compiled_->plans[static_cast<std::size_t>(last_fired_)].affected_lower) {
      if (kernels_->enabled(dense, small_tokens_.data(), u)) {
        idx = static_cast<std::ptrdiff_t>(u);
        break;
      }
    }
    if (idx < 0) idx = kernels_->first_enabled(dense, small_tokens_.data(), static_cast<std::size_t>(last_fired_));
  }
  if (idx < 0) return {};
  const auto t = static_cast<std::size_t>(idx);
  if (!kernels_->apply(dense, small_tokens_.data(), t)) leave_fixed_width();
  last_fired_ = idx;
  ++firings_;
  return StepOutcome{Firing{TransitionId{t + 1}, 1}};
}

StepOutcome Simulator::step_big(std::uint64_t max_batch) {
  const auto& plans = compiled_->plans;
  std::size_t t = plans.size();
  for (std::size_t i = 0; i < plans.size(); ++i) {
    if (plan_enabled(plans[i], big_tokens_)) {
      t = i;
      break;
    }
  }
  if (t == plans.size()) return {};
  const auto& plan = plans[t];
  const auto& m = big_tokens_;

  Natural k = max_batch;
  if (mode_ == Mode::exact) k = 1;
  auto limit = [&](const Natural& bound) {
    if (bound < k) k = bound;
  };

  if (k > 1) {
    // t itself must stay enabled before each of the k firings.
    for (const auto& in : plan.regular) {
      const Integer& d = plan.delta[in.place];
      if (d < 0) limit((m[in.place] - in.need) / Natural(-d) + 1u);
    }
    for (std::size_t p : plan.inhibit)
      if (plan.delta[p] != 0) limit(1);
  }
  if (k > 1) {
    // Every lower transition must stay disabled at the k intermediate
    // markings m + j*delta, j < k. It is disabled at j iff some witness
    // condition holds; each witness holds on a prefix of j, so the batch
    // bound for u is one past the longest witness prefix.
    for (std::size_t u : plan.affected_lower) {
      const auto& lower = plans[u];
      bool forever = false;
      Natural longest = 0;
      for (const auto& in : lower.regular) {
        if (m[in.place] >= in.need) continue;
        const Integer& d = plan.delta[in.place];
        if (d <= 0) {
          forever = true;
          break;
        }
        longest = std::max(longest, Natural(ceil_div(in.need - m[in.place], Natural(d)) - 1u));
      }
      if (!forever) {
        for (std::size_t p : lower.inhibit) {
          if (m[p] == 0) continue;
          const Integer& d = plan.delta[p];
          if (d >= 0) {
            forever = true;
            break;
          }
          longest = std::max(longest, Natural(ceil_div(m[p], Natural(-d)) - 1u));
        }
      }
      if (!forever) limit(longest + 1u);
      if (k == 1) break;
    }
  }
  if (k > 1) {
    for (const auto& [p, d] : plan.changes) {
      if (!watched_[p]) continue;
      if (m[p] == 0)
        limit(1);
      else if (d < 0)
        limit(ceil_div(m[p], Natural(-d)));
    }
  }

  for (const auto& [p, d] : plan.changes) {
    if (d > 0)
      big_tokens_[p] += k * Natural(d);
    else
      big_tokens_[p] -= k * Natural(-d);
  }
  const auto count = k.convert_to<std::uint64_t>();
  firings_ += count;
  return StepOutcome{Firing{TransitionId{t + 1}, count}};
}

// --- run ------------------------------------------------------------------

RunResult run(const Net& net, const Marking& marking, std::uint64_t budget, Mode mode, const Observer& observer) {
  Simulator sim(net, marking, mode);
  RunResult result;
  while (sim.firings() < budget) {
    auto outcome = sim.step(budget - sim.firings());
    if (outcome.halted()) {
      result.halted = true;
      break;
    }
    if (observer) observer(outcome, sim);
  }
  result.marking = sim.marking();
  result.firings = sim.firings();
  return result;
}

std::vector<Firing> firing_sequence(const Net& net, const Marking& marking, std::uint64_t budget, Mode mode) {
  std::vector<Firing> seq;
  run(net, marking, budget, mode, [&](const StepOutcome& outcome, const Simulator&) {
    const Firing& f = *outcome.fired;
    if (!seq.empty() && seq.back().transition == f.transition)
      seq.back().count += f.count;
    else
      seq.push_back(f);
  });
  return seq;
}

}  // namespace upn::dipn
