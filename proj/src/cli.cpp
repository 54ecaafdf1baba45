// SPDX-License-Identifier: Apache-2.0
#include "cobb/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cobb/audit.hpp"
#include "cobb/codecs.hpp"
#include "cobb/curves.hpp"
#include "cobb/dota.hpp"
#include "cobb/errors.hpp"
#include "cobb/report.hpp"

namespace cobb {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::map<std::string, std::string> cli;
  std::map<std::string, CLI::Option*> opts;
  std::map<std::string, std::string> defaults;
  std::map<std::string, std::string> file;

  void add(CLI::App* app, const std::string& key, const std::string& def, const std::string& help) {
    defaults[key] = def;
    opts[key] = app->add_option("--" + key, cli[key], help + (def.empty() ? "" : " (default " + def + ")"));
  }

  std::string get(const std::string& key) const {
    if (opts.at(key)->count() > 0) return cli.at(key);
    if (auto it = file.find(key); it != file.end()) return it->second;
    return defaults.at(key);
  }

  void load(const std::string& path) {
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    file = parse_config_text(ss.str());
    for (const auto& [k, v] : file)
      if (!opts.count(k)) throw UsageError("unknown config key '" + k + "'");
  }
};

template <typename T>
T parse_number(const std::string& key, const std::string& s) {
  T v{};
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end) throw UsageError("bad value for --" + key + ": '" + s + "'");
  return v;
}

std::vector<double> parse_list(const std::string& key, const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number<double>(key, item));
  if (out.empty()) throw UsageError("--" + key + " needs at least one value");
  return out;
}

std::vector<std::unique_ptr<Codec>> codecs_for(const std::string& spec) {
  std::vector<std::unique_ptr<Codec>> out;
  if (spec == "all") {
    for (const std::string& n : codec_names()) out.push_back(make_codec(n));
    return out;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(make_codec(item));
  if (out.empty()) throw UsageError("no codec given");
  return out;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("error while writing " + path);
}

ProbeConfig probe_config(const Flags& f) {
  ProbeConfig cfg;
  cfg.seed = parse_number<std::uint64_t>("seed", f.get("seed"));
  cfg.samples = parse_number<std::size_t>("samples", f.get("samples"));
  if (f.opts.count("steps")) cfg.steps = parse_list("steps", f.get("steps"));
  if (f.opts.count("directions")) cfg.directions = parse_number<std::size_t>("directions", f.get("directions"));
  cfg.validate();
  return cfg;
}

int run_audit_cmd(const Flags& f, std::ostream& out) {
  const ProbeConfig cfg = probe_config(f);
  const std::string format = f.get("format");
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
  const auto owned = codecs_for(f.get("codec"));
  std::vector<const Codec*> codecs;
  for (const auto& c : owned) codecs.push_back(c.get());
  const std::vector<MetricReport> reports = run_audit(codecs, cfg);
  const std::string text = format == "json" ? reports_to_json(reports) : reports_to_csv(reports);
  const std::string path = f.get("out");
  write_output(path, text, out);
  bool ok = true;
  for (const MetricReport& r : reports) {
    ok = ok && r.all_pass();
    if (!path.empty()) {
      for (const MetricResult& m : r.metrics)
        out << r.codec << ' ' << metric_name(m.metric) << ' ' << (m.pass ? "pass" : "fail") << '\n';
    }
  }
  return ok ? 0 : 1;
}

int run_roundtrip_cmd(const Flags& f, std::ostream& out) {
  const ProbeConfig cfg = probe_config(f);
  int code = 0;
  for (const auto& c : codecs_for(f.get("codec"))) {
    const MetricResult r = check_decoding_completeness(*c, cfg);
    out << c->name() << " worst_iou=" << format_double(1.0 - r.steps.front().gap)
        << " verdict=" << (r.pass ? "pass" : "fail") << '\n';
    if (!r.pass) code = 1;
  }
  return code;
}

int run_iou_check_cmd(const Flags& f, std::ostream& out) {
  const auto seed = parse_number<std::uint64_t>("seed", f.get("seed"));
  const auto samples = parse_number<std::size_t>("samples", f.get("samples"));
  if (samples < 1) throw UsageError("--samples must be at least 1");
  const IoUCheck r = iou_matrix_check(samples, seed);
  const bool ok = r.max_error <= 1e-7;
  out << "max_abs_error=" << format_double(r.max_error) << " w=" << format_double(r.w)
      << " h=" << format_double(r.h) << " rs=" << format_double(r.rs) << " verdict=" << (ok ? "pass" : "fail")
      << '\n';
  return ok ? 0 : 1;
}

int run_convert_cmd(const Flags& f, const std::string& input, std::ostream& out, std::ostream& err) {
  const std::string path = f.get("out");
  if (path.empty()) throw UsageError("convert needs --out");
  const auto codec = make_codec(f.get("codec"));
  const ConvertSummary s = convert_annotations(input, *codec, path);
  for (const SkippedLine& k : s.skipped) err << "skipped line " << k.line << ": " << k.reason << '\n';
  out << "rows=" << s.rows << " skipped=" << s.skipped.size() << '\n';
  return 0;
}

int run_curves_cmd(const Flags& f, std::ostream& out) {
  const auto codec = make_codec(f.get("codec"));
  const std::vector<double> box = parse_list("box", f.get("box"));
  if (box.size() != 3) throw UsageError("--box takes w,h,theta");
  CurveSpec spec;
  spec.w_side = box[0];
  spec.h_side = box[1];
  spec.theta = box[2];
  spec.points = parse_number<std::size_t>("points", f.get("points"));
  const std::string sweep = f.get("sweep");
  if (sweep == "rotation") {
    spec.sweep = Sweep::rotation;
    spec.lo = 0.0;
    spec.hi = 2.0 * kPi;
  } else if (sweep == "aspect") {
    spec.sweep = Sweep::aspect;
    spec.lo = 0.5;
    spec.hi = 1.5;
  } else {
    throw UsageError("--sweep must be rotation or aspect");
  }
  const std::string range = f.get("range");
  if (!range.empty()) {
    const std::vector<double> r = parse_list("range", range);
    if (r.size() != 2) throw UsageError("--range takes lo,hi");
    spec.lo = r[0];
    spec.hi = r[1];
  }
  write_output(f.get("out"), curves_to_csv(compute_curves(*codec, spec)), out);
  return 0;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  std::size_t n = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(ss, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value", n);
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError("empty key", n);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous oriented bounding boxes: codecs and continuity audit", "cobb"};
  app.require_subcommand(1);

  CLI::App* audit = app.add_subcommand("audit", "run the continuity audit");
  CLI::App* roundtrip = app.add_subcommand("roundtrip", "encode/decode every sample and report the worst IoU");
  CLI::App* iou = app.add_subcommand("iou-check", "compare the closed-form IoU matrix with polygon clipping");
  CLI::App* convert = app.add_subcommand("convert", "fit and encode DOTA annotations");
  CLI::App* curves = app.add_subcommand("curves", "write encoding curves over a rotation or aspect sweep");

  std::map<CLI::App*, Flags> flags;
  std::map<CLI::App*, std::string> config;
  for (CLI::App* sub : {audit, roundtrip, iou, convert, curves})
    sub->add_option("--config", config[sub], "key=value file; flags given on the command line win");

  flags[audit].add(audit, "codec", "all", "codec name, comma list or 'all'");
  flags[audit].add(audit, "seed", "7", "random seed");
  flags[audit].add(audit, "samples", "64", "random boxes per family");
  flags[audit].add(audit, "steps", "1e-3,1e-4,1e-5", "decreasing step sizes");
  flags[audit].add(audit, "directions", "16", "perturbation directions per box");
  flags[audit].add(audit, "format", "json", "json or csv");
  flags[audit].add(audit, "out", "", "output file (stdout if empty)");

  flags[roundtrip].add(roundtrip, "codec", "cobb", "codec name, comma list or 'all'");
  flags[roundtrip].add(roundtrip, "seed", "7", "random seed");
  flags[roundtrip].add(roundtrip, "samples", "2500", "random boxes per family");

  flags[iou].add(iou, "seed", "7", "random seed");
  flags[iou].add(iou, "samples", "10000", "random (w, h, rs) triples");

  std::string input;
  convert->add_option("input", input, "DOTA annotation file")->required();
  flags[convert].add(convert, "codec", "cobb", "codec name");
  flags[convert].add(convert, "out", "", "output CSV file");

  flags[curves].add(curves, "codec", "cobb", "codec name");
  flags[curves].add(curves, "sweep", "rotation", "rotation or aspect");
  flags[curves].add(curves, "box", "4,2,0", "w,h,theta of the swept box");
  flags[curves].add(curves, "points", "720", "grid size");
  flags[curves].add(curves, "range", "", "lo,hi (rotation default 0,2pi; aspect default 0.5,1.5)");
  flags[curves].add(curves, "out", "", "output file (stdout if empty)");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    Flags& f = flags[sub];
    f.load(config[sub]);
    if (sub == audit) return run_audit_cmd(f, out);
    if (sub == roundtrip) return run_roundtrip_cmd(f, out);
    if (sub == iou) return run_iou_check_cmd(f, out);
    if (sub == convert) return run_convert_cmd(f, input, out, err);
    return run_curves_cmd(f, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << sub->help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace cobb
