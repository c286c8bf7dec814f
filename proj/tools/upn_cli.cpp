// upn: command-line front end for the DIPN engine, the Turing machine and
// bi-tag interpreters, the BTS compiler and the UPN(14,29) cross-check.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "upn/bts/compile.hpp"
#include "upn/bts/system.hpp"
#include "upn/builder/upn.hpp"
#include "upn/dipn/engine.hpp"
#include "upn/dipn/text_format.hpp"
#include "upn/errors.hpp"
#include "upn/tm/text_format.hpp"
#include "upn/trace/trace.hpp"

namespace {

using namespace upn;

enum Exit : int {
  ok = 0,
  usage = 1,
  budget = 2,
  parse = 3,
  invalid = 4,
  mismatch = 5,
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "-" or empty means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

dipn::Mode parse_mode(const std::string& s) {
  if (s == "exact") return dipn::Mode::exact;
  if (s == "fast" || s == "accelerated") return dipn::Mode::accelerated;
  throw UsageError("--mode must be exact or fast");
}

struct Common {
  std::string isa = "auto";
  void apply() const {
    if (isa == "auto") return;
    auto parsed = dipn::kernels::parse_isa(isa);
    if (!parsed) throw UsageError("--isa must be auto, scalar or avx2");
    if (!dipn::kernels::isa_supported(*parsed)) throw UsageError("this CPU does not support " + isa);
    dipn::kernels::set_default_isa(*parsed);
  }
};

// --- run-net ---------------------------------------------------------------

struct RunNetArgs {
  std::string file;
  std::vector<std::string> init;
  std::string mode = "exact";
  std::uint64_t budget = 100'000'000;
  std::optional<std::uint64_t> steps;
  std::string trace;
  bool quiet = false;
};

int run_net(const RunNetArgs& a) {
  auto nf = dipn::parse_dipn(slurp(a.file));
  if (auto diags = dipn::structural_errors(nf.net); !diags.empty()) throw ValidationError(diags);
  for (const auto& kv : a.init) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--init expects p<j>=<count> or <label>=<count>, got " + kv);
    const std::string lhs = kv.substr(0, eq);
    std::optional<dipn::PlaceId> p = nf.net.find_place(lhs);
    if (!p && lhs.size() > 1 && lhs[0] == 'p') {
      try {
        const std::size_t j = std::stoul(lhs.substr(1));
        if (j >= 1 && j <= nf.net.place_count()) p = dipn::PlaceId{j};
      } catch (const std::exception&) {
      }
    }
    if (!p) throw UsageError("no place " + lhs);
    try {
      nf.initial[*p] = parse_natural(kv.substr(eq + 1));
    } catch (const std::invalid_argument&) {
      throw UsageError("bad count in " + kv);
    }
  }
  const auto mode = parse_mode(a.mode);

  if (!a.trace.empty() || a.steps) {
    Output out(a.trace.empty() ? "-" : a.trace);
    trace::TraceOptions opts;
    opts.mode = mode;
    opts.budget = a.budget;
    if (a.steps) opts.max_records = *a.steps + 1;
    auto result = trace::trace_upn(nf.net, nf.initial, opts,
                                   [&](const trace::TraceRecord& r) {
                                     out.stream() << trace::format_record(r) << "\n";
                                     return true;
                                   });
    out.stream().flush();
    if (!a.quiet) {
      std::cerr << "firings=" << result.firings << " records=" << result.records.size()
                << (result.halted ? " halted" : "") << "\n";
    }
    if (result.halted || result.record_limit_reached) return Exit::ok;
    return Exit::budget;
  }

  auto result = dipn::run(nf.net, nf.initial, a.budget, mode);
  if (!a.quiet) std::cout << "marking " << dipn::to_string(result.marking) << "\n";
  std::cout << "firings " << result.firings << "\n" << (result.halted ? "halted" : "budget exhausted") << "\n";
  return result.halted ? Exit::ok : Exit::budget;
}

// --- run-tm ----------------------------------------------------------------

struct RunTmArgs {
  std::string file;
  std::optional<std::string> input;
  std::optional<std::string> state;
  std::uint64_t steps = 1000;
  bool trace = false;
  bool codes = false;
};

int run_tm(const RunTmArgs& a) {
  const auto machine = tm::parse_tm(slurp(a.file));
  if (auto diags = machine.validate(); !diags.empty()) throw ValidationError(diags);
  const tm::State start = a.state ? machine.state(*a.state) : machine.start();
  if (!a.input && machine.is_weak()) throw UsageError("weak machines need --input");
  tm::Config config = tm::parse_config(machine, a.input.value_or(""), start);

  auto show = [&](std::uint64_t k, const tm::Config& c) {
    std::cout << "step=" << k << " state=" << machine.state_names()[c.state] << " tape=" << tm::format_config(machine, c);
    if (a.codes) std::cout << " " << codec::to_string(codec::encode_config(machine, c));
    std::cout << "\n";
  };
  if (a.trace) show(0, config);
  std::uint64_t k = 0;
  bool halted = false;
  while (true) {
    if (machine.halt() && config.state == *machine.halt()) {
      halted = true;
      break;
    }
    if (k == a.steps) break;
    try {
      config = *tm::step(machine, config);
    } catch (const UndefinedTransition& e) {
      if (!a.trace) show(k, config);
      std::cout << "stuck: " << e.what() << "\n";
      return Exit::invalid;
    }
    ++k;
    if (a.trace) show(k, config);
  }
  if (!a.trace) show(k, config);
  std::cout << (halted ? "halted" : "budget exhausted") << "\n";
  return halted ? Exit::ok : Exit::budget;
}

// --- run-bts ---------------------------------------------------------------

struct RunBtsArgs {
  std::string file;
  std::optional<std::string> input;
  std::uint64_t steps = 1000;
  bool trace = false;
};

int run_bts(const RunBtsArgs& a) {
  const auto f = bts::parse_bts(slurp(a.file));
  if (auto diags = bts::validate_system(f.system); !diags.empty()) throw ValidationError(diags);
  bts::Word w;
  if (a.input)
    w = bts::parse_word(*a.input);
  else if (f.input)
    w = *f.input;
  else
    throw UsageError("no input word: give --input or an 'input' line");
  if (!bts::shape_ok(f.system, w) && !(!w.empty() && w.front() == f.system.halt))
    throw ValidationError({"'" + bts::format_word(w) + "' is not a configuration of this system"});

  std::uint64_t k = 0;
  bool halted = false;
  if (a.trace) std::cout << "step=0 word=" << bts::format_word(w) << "\n";
  while (true) {
    if (!w.empty() && w.front() == f.system.halt) {
      halted = true;
      break;
    }
    if (k == a.steps) break;
    w = *bts::step(f.system, w);
    ++k;
    if (a.trace) std::cout << "step=" << k << " word=" << bts::format_word(w) << "\n";
  }
  if (!a.trace) std::cout << "step=" << k << " word=" << bts::format_word(w) << "\n";
  std::cout << (halted ? "halted" : "budget exhausted") << "\n";
  return halted ? Exit::ok : Exit::budget;
}

// --- xval ------------------------------------------------------------------

int run_xval(std::uint64_t steps, const std::string& mode, const std::string& net_file, std::uint64_t budget) {
  if (steps < 1) throw UsageError("--steps must be at least 1");
  trace::TraceOptions opts;
  opts.mode = parse_mode(mode);
  opts.budget = budget;
  std::optional<dipn::NetFile> nf;
  if (!net_file.empty()) {
    nf = dipn::parse_dipn(slurp(net_file));
    if (auto diags = dipn::structural_errors(nf->net); !diags.empty()) throw ValidationError(diags);
  }
  const auto report = trace::xval(steps, opts, trace::reference_initial(), nf ? &nf->net : nullptr);
  for (const auto& s : report.steps) {
    std::cout << trace::format_record(s.record) << " tm: " << codec::to_string(s.tm_codes)
              << (s.match ? " ok" : " MISMATCH");
    if (s.firings_in_step) std::cout << " step_firings=" << *s.firings_in_step;
    std::cout << "\n";
  }
  if (report.first_mismatch) {
    const auto& s = report.steps.back();
    std::cout << "mismatch at step " << *report.first_mismatch << "\n  upn: " << codec::to_string(s.record.codes)
              << "\n  tm:  " << codec::to_string(s.tm_codes) << "\n";
    return Exit::mismatch;
  }
  if (!report.complete) {
    std::cout << "UPN " << (report.halted ? "halted" : "exhausted its budget") << " after " << report.steps.size()
              << " snapshots\n";
    return report.halted ? Exit::mismatch : Exit::budget;
  }
  std::cout << "steps " << steps << " mismatches 0 linear_bound " << (report.linear_bound_ok ? "ok" : "VIOLATED")
            << "\n";
  return report.linear_bound_ok ? Exit::ok : Exit::mismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal Petri net toolkit"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--isa", common.isa, "fixed-width kernel: auto, scalar or avx2");

  RunNetArgs rn;
  auto* c_net = app.add_subcommand("run-net", "run a .dipn net");
  c_net->add_option("file", rn.file)->required();
  c_net->add_option("--init", rn.init, "override initial tokens, p<j>=<count> or <label>=<count>");
  c_net->add_option("--mode", rn.mode, "exact or fast")->capture_default_str();
  c_net->add_option("--budget", rn.budget, "maximum exact-equivalent firings")->capture_default_str();
  c_net->add_option("--trace", rn.trace, "write UPN snapshot records to this file (- for stdout)");
  c_net->add_option("--steps", rn.steps, "stop after this many simulated TM steps (implies tracing)");
  c_net->add_flag("--quiet", rn.quiet);

  RunTmArgs rt;
  auto* c_tm = app.add_subcommand("run-tm", "run a .tm machine");
  c_tm->add_option("file", rt.file)->required();
  c_tm->add_option("--input", rt.input, "working zone, head in brackets, e.g. \"0 0 0 [1]\"");
  c_tm->add_option("--state", rt.state, "initial state (default: start state)");
  c_tm->add_option("--steps", rt.steps)->capture_default_str();
  c_tm->add_flag("--trace", rt.trace, "print every configuration");
  c_tm->add_flag("--codes", rt.codes, "also print U L X R tape codes");

  RunBtsArgs rb;
  auto* c_bts = app.add_subcommand("run-bts", "run a .bts bi-tag system");
  c_bts->add_option("file", rb.file)->required();
  c_bts->add_option("--input", rb.input, "initial word (default: the file's input line)");
  c_bts->add_option("--steps", rb.steps)->capture_default_str();
  c_bts->add_flag("--trace", rb.trace);

  std::string cb_file, cb_out;
  auto* c_comp = app.add_subcommand("compile-bts", "compile a .bts system into a .tm machine");
  c_comp->add_option("file", cb_file)->required();
  c_comp->add_option("-o,--output", cb_out, "output file (default stdout)");

  std::string bu_out;
  auto* c_build = app.add_subcommand("build-upn", "emit UPN(14,29) as .dipn");
  c_build->add_option("-o,--output", bu_out, "output file (default stdout)");

  std::uint64_t xv_steps = 14;
  std::string xv_mode = "fast";
  auto* c_xval = app.add_subcommand("xval", "cross-check UPN(14,29) against WUTM(2,4)");
  c_xval->add_option("--steps", xv_steps)->capture_default_str();
  c_xval->add_option("--mode", xv_mode, "exact or fast")->capture_default_str();
  std::string xv_net;
  std::uint64_t xv_budget = UINT64_MAX;
  c_xval->add_option("--net", xv_net, "check this .dipn instead of the built UPN(14,29)");
  c_xval->add_option("--budget", xv_budget, "maximum exact-equivalent firings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    common.apply();
    if (*c_net) return run_net(rn);
    if (*c_tm) return run_tm(rt);
    if (*c_bts) return run_bts(rb);
    if (*c_comp) {
      const auto f = bts::parse_bts(slurp(cb_file));
      const auto compiled = bts::compile(f.system);
      Output out(cb_out);
      out.stream() << tm::serialize_tm(compiled.machine);
      return Exit::ok;
    }
    if (*c_build) {
      Output out(bu_out);
      out.stream() << dipn::serialize_dipn(builder::build_upn14_29());
      return Exit::ok;
    }
    if (*c_xval) return run_xval(xv_steps, xv_mode, xv_net, xv_budget);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Exit::parse;
  } catch (const ValidationError& e) {
    std::cerr << "invalid:\n";
    for (const auto& d : e.diagnostics) std::cerr << "  " << d << "\n";
    return Exit::invalid;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::invalid;
  }
  return Exit::usage;
}
