// Copyright 2026 The chordset Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "chordset/chord_scan.hpp"
#include "chordset/errors.hpp"
#include "chordset/function_spec.hpp"
#include "chordset/hopf.hpp"
#include "chordset/integer_hopf.hpp"
#include "chordset/json_io.hpp"
#include "chordset/synthesis.hpp"

#ifndef CHORDSET_VERSION
#define CHORDSET_VERSION "0.0.0"
#endif

namespace chordset::cli {

namespace {

enum class Format { kJson, kCsv };

struct Globals {
  std::string out_path;
  std::string format = "json";
  int jobs = 1;
  bool no_meta = false;
};

// Collected payload lines; written once the command has finished.
struct Sink {
  Format format = Format::kJson;
  std::string text;
  void json(const Json& j) { text += j.dump() + "\n"; }
  void raw(const std::string& s) { text += s; }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Handler = std::function<int(Sink&)>;

struct ScanFlags {
  double ell_res = 1e-3;
  double x_res = 1e-4;
  double tol = 1e-9;
  double cluster_radius = 1e-3;

  void attach(CLI::App* sub) {
    sub->add_option("--ell-res", ell_res, "chord-length grid step (1/integer)")->capture_default_str();
    sub->add_option("--x-res", x_res, "x grid step (1/integer)")->capture_default_str();
    sub->add_option("--tol", tol, "zero tolerance for f(x+l) - f(x)")->capture_default_str();
    sub->add_option("--cluster-radius", cluster_radius, "witness merge radius")->capture_default_str();
  }

  ScanParams params(int jobs) const {
    ScanParams p;
    p.ell_res = ell_res;
    p.x_res = x_res;
    p.tol = tol;
    p.cluster_radius = cluster_radius;
    p.jobs = jobs;
    return p;
  }
};

void require_json(const Sink& sink, const std::string& command) {
  if (sink.format != Format::kJson) throw UsageError(command + " supports --format json only");
}

HopfSet parse_target(const std::string& text) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "vn") {
    const Rational n = Rational::parse(rest);
    if (!n.is_integer()) throw UsageError("vn: N must be an integer");
    return canonical_vn(n.numerator().convert_to<std::int64_t>());
  }
  if (kind == "union") return make_hopf(parse_union_text(rest));
  if (kind == "isolate") return isolated_point_set(Rational::parse(rest));
  if (kind == "picksinwn") {
    const auto next = rest.find(':');
    if (next == std::string::npos) throw UsageError("expected picksinwn:N:W");
    const Rational n = Rational::parse(rest.substr(0, next));
    if (!n.is_integer()) throw UsageError("picksinwn: N must be an integer");
    return picksinwn_construct(n.numerator().convert_to<std::int64_t>(),
                               parse_union_text(rest.substr(next + 1)));
  }
  throw UsageError("unknown target \"" + text +
                   "\" (expected vn:N, picksinwn:N:W, union:V, isolate:p/q)");
}

Json domain_error_json(const DomainError& e) {
  Json out = {{"error", e.kind()}, {"message", e.what()}};
  if (const auto* a = dynamic_cast<const AdditivityViolation*>(&e)) {
    out["witness"] = {{"x", to_json(a->x())}, {"y", to_json(a->y())}, {"sum", to_json(a->sum())}};
  }
  return out;
}

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hopf sets, integer censuses and numerical chord scans", "chordset"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--out", g.out_path, "write the payload to this file instead of stdout");
  app.add_option("--format", g.format, "payload format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for scans and enumeration")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--no-meta", g.no_meta, "omit the metadata header line");

  std::map<CLI::App*, Handler> handlers;

  // Exact unions of the unit interval.
  std::string v_text;
  std::string a_text;
  std::int64_t n_arg = 1;

  auto* check = app.add_subcommand("hopf-check", "additivity, maximality and tail threshold of V u (1, inf)");
  check->add_option("--v", v_text, "open intervals, e.g. 1/3,1/2;2/3,1")->required();
  handlers[check] = [&](Sink& sink) {
    require_json(sink, "hopf-check");
    const OpenIntervalUnion v = parse_union_text(v_text);
    const auto witness = additivity_witness(v);
    Json j = {{"v", to_json(v)}, {"additive", !witness.has_value()}, {"measure", to_json(measure(v))}};
    if (witness) {
      j["witness"] = {{"x", to_json(witness->x)}, {"y", to_json(witness->y)},
                      {"sum", to_json(witness->x + witness->y)}};
    } else {
      j["maximal"] = is_maximal(make_hopf(v));
    }
    if (!v.empty() && v.front().lo() > Rational(0)) j["tail_threshold"] = to_json(tail_threshold(v));
    sink.json(j);
    return witness ? kExitDomainError : kExitOk;
  };

  auto* extend = app.add_subcommand("hopf-extend", "maximal Hopf set built on the part of V below 1/2");
  extend->add_option("--v", v_text, "open intervals, e.g. 2/5,1/2")->required();
  handlers[extend] = [&](Sink& sink) {
    require_json(sink, "hopf-extend");
    sink.json(to_json(maximal_extension(parse_union_text(v_text))));
    return kExitOk;
  };

  auto* vn = app.add_subcommand("hopf-vn", "canonical maximal set, union of k J_n for k = 1..n");
  vn->add_option("--n", n_arg, "n >= 1")->required()->check(CLI::PositiveNumber);
  handlers[vn] = [&](Sink& sink) {
    require_json(sink, "hopf-vn");
    sink.json(to_json(canonical_vn(n_arg)));
    return kExitOk;
  };

  auto* isolate = app.add_subcommand("hopf-isolate", "maximal Hopf set in which a is an isolated chord length");
  isolate->add_option("--a", a_text, "exact p/q in (0, 1), not of the form 1/m")->required();
  handlers[isolate] = [&](Sink& sink) {
    require_json(sink, "hopf-isolate");
    sink.json(to_json(isolated_point_set(Rational::parse(a_text))));
    return kExitOk;
  };

  auto* symmetry = app.add_subcommand("hopf-symmetry", "[0,1] minus V as closed pieces plus isolated points, both ways");
  symmetry->add_option("--v", v_text, "open intervals of a maximal set")->required();
  handlers[symmetry] = [&](Sink& sink) {
    require_json(sink, "hopf-symmetry");
    sink.json(to_json(symmetry_identity(make_hopf(parse_union_text(v_text)))));
    return kExitOk;
  };

  // Integer sets.
  std::string set_text;
  bool allow_touching = false;
  int n_intervals = 3;
  std::int64_t max_m = 20;
  std::int64_t a_max = 10;

  auto* iverify = app.add_subcommand("int-verify", "check an integer primitive maximal Hopf set");
  iverify->add_option("--set", set_text, "finite intervals then tail start, e.g. 4,5;6,10;10")->required();
  iverify->add_flag("--allow-touching", allow_touching, "accept finite intervals sharing an endpoint");
  handlers[iverify] = [&](Sink& sink) {
    require_json(sink, "int-verify");
    const IntegerHopfSet s = parse_integer_set_text(set_text);
    const VerifyResult r = verify(s, {.allow_touching = allow_touching});
    Json j = to_json(s);
    j["n"] = s.n_intervals();
    j.update(to_json(r));
    if (r.ok) {
      const Origin o = picksinwn_origin(s);
      j["picksinwn"] = o != Origin::kNone;
      j["origin"] = to_string(o);
    }
    sink.json(j);
    return r.ok ? kExitOk : kExitDomainError;
  };

  auto* ienum = app.add_subcommand("int-enumerate", "all integer primitive maximal Hopf sets with n intervals");
  ienum->add_option("--n", n_intervals, "interval count including the tail, >= 2")->required()->check(CLI::Range(2, 64));
  ienum->add_option("--max", max_m, "largest tail start")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  handlers[ienum] = [&](Sink& sink) {
    const auto census = enumerate(n_intervals, max_m, g.jobs);
    if (sink.format == Format::kCsv) {
      std::map<std::int64_t, int> per_m;
      for (const auto& e : census) ++per_m[e.max_endpoint];
      sink.raw("n,M,count\n");
      for (const auto& [m, count] : per_m) {
        sink.raw(std::to_string(n_intervals) + "," + std::to_string(m) + "," + std::to_string(count) + "\n");
      }
    } else {
      for (const auto& e : census) sink.json(census_line(e));
    }
    return kExitOk;
  };

  auto* in3 = app.add_subcommand("int-n3", "closed-form three-interval family (a,b) u (2b-a,2b) u (2b,inf)");
  in3->add_option("--a-max", a_max, "largest a")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 20));
  handlers[in3] = [&](Sink& sink) {
    require_json(sink, "int-n3");
    for (const auto& s : n3_family(a_max)) {
      Json j = to_json(s);
      j["n"] = s.n_intervals();
      sink.json(j);
    }
    return kExitOk;
  };

  // Numerical scans.
  std::string fn_text;
  ScanFlags flags;
  std::vector<std::string> probes;
  std::string plot_path;
  int vec_n = 1;
  double margin = 0.01;

  auto* scan_cmd = app.add_subcommand("scan", "approximate the chord set H(f) on a grid");
  scan_cmd->add_option("--fn", fn_text, "function, e.g. sinesum:3, levy:3/11, fd, pl:0,0;0.5,1;1,0")->required();
  scan_cmd->add_option("--probe", probes, "extra exact chord lengths p/q to test");
  scan_cmd->add_option("--plot-data", plot_path, "also write ell,presence,multiplicity CSV here");
  flags.attach(scan_cmd);
  handlers[scan_cmd] = [&](Sink& sink) {
    std::vector<Rational> exact;
    for (const auto& p : probes) exact.push_back(Rational::parse(p));
    const auto report = scan(parse_function(fn_text), flags.params(g.jobs), exact);
    if (!plot_path.empty()) {
      std::ofstream plot(plot_path);
      if (!plot) throw UsageError("cannot write " + plot_path);
      plot << plot_csv(report);
    }
    if (sink.format == Format::kCsv) {
      sink.raw(plot_csv(report));
    } else {
      sink.json(to_json(report));
    }
    return kExitOk;
  };

  auto* vec_cmd = app.add_subcommand("chord-vector", "multiplicities of the chord lengths k/n, k = 1..n");
  vec_cmd->add_option("--fn", fn_text, "function")->required();
  vec_cmd->add_option("--n", vec_n, "n >= 1")->required()->check(CLI::Range(1, 100000));
  flags.attach(vec_cmd);
  handlers[vec_cmd] = [&](Sink& sink) {
    const auto v = chord_vector_unchecked(parse_function(fn_text), vec_n, flags.params(g.jobs));
    if (sink.format == Format::kCsv) {
      sink.raw("k,ell,count\n");
      for (int k = 1; k <= v.n; ++k) {
        const int c = v.counts[k - 1];
        sink.raw(std::to_string(k) + "," + Rational(k, v.n).to_string() + "," +
                 (c == kContinuum ? std::string("continuum") : std::to_string(c)) + "\n");
      }
    } else {
      sink.json(to_json(v));
    }
    return v.first_ok && v.sum_ok ? kExitOk : kExitDomainError;
  };

  auto* conj_cmd = app.add_subcommand("conjecture-k", "compare the chord set of sum sin(2 pi k x) with V_n");
  conj_cmd->add_option("--n", vec_n, "n >= 1")->required()->check(CLI::Range(1, 64));
  conj_cmd->add_option("--margin", margin, "skip grid points this close to the boundary of V_n")->capture_default_str();
  flags.attach(conj_cmd);
  handlers[conj_cmd] = [&](Sink& sink) {
    require_json(sink, "conjecture-k");
    sink.json(to_json(conjecture_k_compare(vec_n, margin, flags.params(g.jobs))));
    return kExitOk;
  };

  std::string target_text;
  std::string family_text = "auto";
  bool with_report = false;
  auto* synth_cmd = app.add_subcommand("synth", "build and verify a function whose chord-set complement is the target");
  synth_cmd->add_option("--target", target_text, "vn:N, picksinwn:N:W, union:V or isolate:p/q")->required();
  synth_cmd->add_option("--family", family_text, "auto, sinesum, two-bump, arch-pair")->capture_default_str();
  synth_cmd->add_flag("--with-report", with_report, "include the full verification scan");
  flags.attach(synth_cmd);
  handlers[synth_cmd] = [&](Sink& sink) {
    require_json(sink, "synth");
    const SynthesisFamily family = parse_family(family_text);
    try {
      sink.json(to_json(synthesize(parse_target(target_text), family, flags.params(g.jobs)), with_report));
    } catch (const VerificationFailed& e) {
      Json j = to_json(e.result(), with_report);
      j["error"] = e.kind();
      sink.json(j);
      return kExitDomainError;
    }
    return kExitOk;
  };

  auto* inv_cmd = app.add_subcommand("invariance", "presence grids under negation, vertical scaling and reflection");
  inv_cmd->add_option("--fn", fn_text, "function")->required();
  flags.attach(inv_cmd);
  handlers[inv_cmd] = [&](Sink& sink) {
    require_json(sink, "invariance");
    const auto r = invariance_check(parse_function(fn_text), flags.params(g.jobs));
    sink.json(to_json(r));
    return r.ok ? kExitOk : kExitDomainError;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "chordset: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Sink sink;
  sink.format = g.format == "csv" ? Format::kCsv : Format::kJson;
  int code = kExitOk;
  try {
    code = handlers.at(sub)(sink);
  } catch (const UsageError& e) {
    err << "chordset " << sub->get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "chordset " << sub->get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    sink.text.clear();
    sink.json(domain_error_json(e));
    err << "chordset " << sub->get_name() << ": " << e.what() << "\n";
    code = kExitDomainError;
  } catch (const std::exception& e) {
    err << "chordset " << sub->get_name() << ": internal error: " << e.what() << "\n";
    return kExitDomainError;
  }

  std::string payload;
  if (!g.no_meta) {
    if (sink.format == Format::kCsv) {
      payload = "# chordset " CHORDSET_VERSION " " + join(args) + "\n";
    } else {
      const Json meta = {{"meta", {{"tool", "chordset"}, {"version", CHORDSET_VERSION},
                                   {"command", sub->get_name()}, {"args", args}}}};
      payload = meta.dump() + "\n";
    }
  }
  payload += sink.text;

  if (g.out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(g.out_path, std::ios::binary);
    if (!file) {
      err << "chordset: cannot write " << g.out_path << "\n";
      return kExitUsage;
    }
    file << payload;
  }
  return code;
}

}  // namespace chordset::cli
