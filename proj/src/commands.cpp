#include "nodalk/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <yaml-cpp/exceptions.h>

#include "nodalk/oracle.hpp"
#include "nodalk/report.hpp"

namespace nodalk {

using nlohmann::json;

std::pair<long long, long long> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size())
      throw std::invalid_argument("malformed range '" + text + "' (expected a..b or a)");
    return v;
  };
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    long long v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

namespace {

struct VerdictArgs {
  std::string path;
  std::string format;
};

struct ScanArgs {
  std::string path;
  std::string format;
  std::int64_t grid = 0;
};

struct SweepArgs {
  std::string tmpl = "general-subspace";
  std::string g1, g2, r, d1, d2, k, k_offset;
  std::int64_t d_cap = 0;
  std::string out_path;
};

OutputFormat pick_format(const std::string& flag, const Scenario& s) {
  return flag.empty() ? s.options.format : output_format_from_string(flag);
}

int cmd_verdict(const VerdictArgs& args, std::ostream& out) {
  const Scenario s = load_scenario(args.path);
  const Verdict v = classify(s.pair, s.curve, s.hypotheses);
  if (pick_format(args.format, s) == OutputFormat::Json)
    write_verdict_json(out, s, v);
  else
    write_verdict_text(out, s, v);
  return kExitOk;
}

int cmd_window(const VerdictArgs& args, std::ostream& out) {
  const Scenario s = load_scenario(args.path);
  infer_facts(s.hypotheses, s.pair, s.curve); // surfaces contradictions
  const RatInterval w = polarization_window(s.pair, s.curve);
  const Rat sample = Rat::mediant(w.lo(), w.hi());
  const std::string mediant = "(" + std::to_string(w.lo().num()) + "+" + std::to_string(w.hi().num()) + ")/(" +
                              std::to_string(w.lo().den()) + "+" + std::to_string(w.hi().den()) + ")";
  if (pick_format(args.format, s) == OutputFormat::Json) {
    json j{{"a1", w.lo().str()},
           {"b1", w.hi().str()},
           {"window", interval_to_json(w)},
           {"interior", interval_to_json(w.interior())},
           {"sample", sample.str()},
           {"scenario", scenario_to_json(s)}};
    out << j.dump(2) << '\n';
  } else {
    out << "a1: " << w.lo() << '\n'
        << "b1: " << w.hi() << '\n'
        << "window: " << w << '\n'
        << "open interior: " << w.interior() << '\n'
        << "sample: " << mediant << " = " << sample << '\n';
  }
  return kExitOk;
}

std::string describe_points(const std::vector<std::int64_t>& pts) {
  if (pts.empty())
    return "none";
  return std::to_string(pts.size()) + " points, t in [" + std::to_string(pts.front()) + ", " +
         std::to_string(pts.back()) + "]";
}

std::vector<std::int64_t> grid_members(const RatInterval& w, const GridSpec& grid) {
  std::vector<std::int64_t> out;
  for (std::int64_t t = 1; t < grid.denominator; ++t)
    if (w.contains(grid.point(t)))
      out.push_back(t);
  return out;
}

int cmd_oracle_scan(const ScanArgs& args, std::ostream& out) {
  const Scenario s = load_scenario(args.path);
  const HypothesisSet h = infer_facts(s.hypotheses, s.pair, s.curve);
  const GridSpec grid(args.grid > 0 ? args.grid : s.options.grid);

  const DepthOneNumerics kernel = kernel_depth_one(s.pair);
  const auto teixidor_pts = scan_teixidor(kernel, s.curve, grid);
  const RatInterval teixidor = teixidor_window(kernel, s.curve);
  const RatInterval window = polarization_window(s.pair, s.curve);
  const bool teixidor_agrees = teixidor_pts == grid_members(teixidor, grid) && teixidor == window;

  json j{{"grid", grid.denominator},
         {"teixidor_points", teixidor_pts.size()},
         {"teixidor_window", interval_to_json(teixidor)},
         {"polarization_window", interval_to_json(window)},
         {"teixidor_agrees", teixidor_agrees}};

  PairNumerics p = s.pair;
  p.s1 = p.s1 ? p.s1 : h.s_exact(Side::One);
  p.s2 = p.s2 ? p.s2 : h.s_exact(Side::Two);
  std::string destab_line;
  if (p.s1 && p.s2) {
    const auto feasible = scan_destabilizers(p, s.curve, grid).feasible();
    const RatInterval region = destabilizer_region(p, s.curve);
    const bool agrees = feasible == grid_members(region, grid);
    j["destabilizer_feasible_points"] = feasible.size();
    j["destabilizer_region"] = interval_to_json(region);
    j["destabilizer_agrees"] = agrees;
    destab_line = "destabilizers s=(" + std::to_string(*p.s1) + "," + std::to_string(*p.s2) +
                  "): feasible " + describe_points(feasible) + "; closed form " + region.str() +
                  "; agreement: " + (agrees ? "yes" : "NO");
  } else {
    j["destabilizer_region"] = nullptr;
    destab_line = "destabilizer scan skipped: s_1, s_2 not determined";
  }

  if (pick_format(args.format, s) == OutputFormat::Json) {
    out << j.dump(2) << '\n';
  } else {
    const KernelNumerics kn = kernel_numerics(s.pair, s.curve);
    out << "grid: N=" << grid.denominator << '\n'
        << "kernel: rank " << kn.rank << ", degrees (" << -s.pair.d1 << "," << -s.pair.d2 << "), chi " << kn.chi
        << '\n'
        << "teixidor scan: " << describe_points(teixidor_pts) << '\n'
        << "closed-form window: " << window << "; agreement: " << (teixidor_agrees ? "yes" : "NO") << '\n'
        << destab_line << '\n';
  }
  return kExitOk;
}

IntRange to_range(const std::string& text) {
  auto [lo, hi] = parse_range(text);
  return {lo, hi};
}

void override_range(IntRange& target, const std::string& flag) {
  if (!flag.empty())
    target = to_range(flag);
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepRange range = args.tmpl == "claim" ? default_claim_range() : SweepRange{};
  override_range(range.g1, args.g1);
  override_range(range.g2, args.g2);
  override_range(range.r, args.r);
  override_range(range.d1, args.d1);
  override_range(range.d2, args.d2);
  override_range(range.k, args.k_offset);
  if (!args.k.empty()) {
    range.k = to_range(args.k);
    range.k_above_r = false;
  }
  if (args.d_cap > 0)
    range.d_cap_per_genus = args.d_cap;

  if (args.tmpl == "claim") {
    const ClaimSweepReport rep = sweep_claim(range);
    if (!args.out_path.empty()) {
      std::ofstream csv(args.out_path);
      if (!csv)
        throw IoError("cannot write '" + args.out_path + "'");
      csv << "g1,g2,r,d1,d2,k\n";
      for (const auto& c : rep.counterexamples)
        csv << c.g1 << ',' << c.g2 << ',' << c.r << ',' << c.d1 << ',' << c.d2 << ',' << c.k << '\n';
      if (!csv)
        throw IoError("error while writing '" + args.out_path + "'");
    }
    out << "claim sweep: " << rep.tuples << " tuples, " << rep.k_checks << " k checks, case1 "
        << rep.case_tally[0] << ", case2 " << rep.case_tally[1] << ", case3 " << rep.case_tally[2] << ", skipped "
        << rep.skipped << '\n'
        << rep.counterexamples.size() << " counterexamples\n";
    return kExitOk;
  }

  auto tmpl = fact_template_from_string(args.tmpl);
  if (!tmpl)
    throw SchemaError("unknown template '" + args.tmpl +
                      "' (expected bare, complete, general-subspace, star, linear-series, claim)");

  SweepTally tally;
  if (args.out_path.empty()) {
    tally = sweep_classify(range, *tmpl, out);
  } else {
    std::ofstream csv(args.out_path);
    if (!csv)
      throw IoError("cannot write '" + args.out_path + "'");
    tally = sweep_classify(range, *tmpl, csv);
    csv.flush();
    if (!csv)
      throw IoError("error while writing '" + args.out_path + "'");
  }
  std::ostream& summary = args.out_path.empty() ? err : out;
  summary << tally.rows << " rows";
  for (VerdictKind k : {VerdictKind::StronglyUnstable, VerdictKind::WSemistable, VerdictKind::WStable,
                        VerdictKind::RestrictionUnstable, VerdictKind::Inconclusive})
    summary << ", " << to_string(k) << ' ' << tally.by_kind[static_cast<int>(k)];
  summary << ", Contradiction " << tally.contradictions << '\n';
  return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decision engine for kernel bundles on two-component nodal curves", "nodalk"};
  app.require_subcommand(1);

  VerdictArgs verdict_args, window_args;
  ScanArgs scan_args;
  SweepArgs sweep_args;
  const auto formats = CLI::IsMember({"text", "json"});

  auto* verdict = app.add_subcommand("verdict", "Classify a scenario and print the certificate chain");
  verdict->add_option("scenario", verdict_args.path, "Scenario file (YAML)")->required();
  verdict->add_option("--format", verdict_args.format, "text or json")->check(formats);

  auto* window = app.add_subcommand("window", "Print the polarization window [a1, b1]");
  window->add_option("scenario", window_args.path, "Scenario file (YAML)")->required();
  window->add_option("--format", window_args.format, "text or json")->check(formats);

  auto* scan = app.add_subcommand("oracle-scan", "Cross-check closed forms against a rational grid scan");
  scan->add_option("scenario", scan_args.path, "Scenario file (YAML)")->required();
  scan->add_option("--grid", scan_args.grid, "Grid denominator N (default: scenario option, else 1000)");
  scan->add_option("--format", scan_args.format, "text or json")->check(formats);

  auto* sweep = app.add_subcommand("sweep", "Classify every tuple of a parameter range into CSV");
  sweep->add_option("--template", sweep_args.tmpl,
                    "bare | complete | general-subspace | star | linear-series | claim");
  sweep->add_option("--g1", sweep_args.g1, "Range a..b (default 2..4; claim 2..8)");
  sweep->add_option("--g2", sweep_args.g2, "Range a..b (default 2..4; claim 2..8)");
  sweep->add_option("--r", sweep_args.r, "Range a..b (default 1..2; claim 1..4)");
  sweep->add_option("--d1", sweep_args.d1, "Range a..b (default 1..12; claim 1..32)");
  sweep->add_option("--d2", sweep_args.d2, "Range a..b (default 1..12; claim 1..32)");
  auto* k_abs = sweep->add_option("--k", sweep_args.k, "Absolute range for k");
  sweep->add_option("--k-offset", sweep_args.k_offset, "Range for k - r (default 1..6)")->excludes(k_abs);
  sweep->add_option("--d-cap", sweep_args.d_cap, "Also cap d_i at this multiple of g_i (claim default 4)");
  sweep->add_option("--out", sweep_args.out_path, "CSV output path (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSchema;
  }

  try {
    if (*verdict)
      return cmd_verdict(verdict_args, out);
    if (*window)
      return cmd_window(window_args, out);
    if (*scan)
      return cmd_oracle_scan(scan_args, out);
    if (*sweep)
      return cmd_sweep(sweep_args, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ContradictionError& e) {
    err << "contradiction: " << e.what() << '\n';
    return kExitContradiction;
  } catch (const YAML::Exception& e) {
    err << "error: malformed scenario: " << e.what() << '\n';
    return kExitSchema;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchema;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSchema;
  }
  return kExitSchema;
}

} // namespace nodalk
