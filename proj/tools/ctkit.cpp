// Copyright 2026 The ctkit Authors.
//
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


// Command-line front end: gamma, dgamma, gct, tabulate, verify, random.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ctkit/dgamma/dgamma.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/gamma/gamma.hpp"
#include "ctkit/gct/census.hpp"
#include "ctkit/gct/diagram.hpp"
#include "ctkit/symcalc/format.hpp"
#include "ctkit/tangle/dsl.hpp"
#include "ctkit/verify/verify.hpp"

namespace {

using namespace ctkit;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

// One of a text option and a file option.
struct Source {
  std::string text;
  std::string file;
  bool given() const { return !text.empty() || !file.empty(); }
  std::string get() const { return file.empty() ? text : read_file(file); }
};

std::string unit_text(const symcalc::LaurentNormal& n) {
  std::string s = n.unit_sign < 0 ? "-" : "";
  if (n.unit_exponent == 0) return s + "1";
  if (n.unit_exponent == 1) return s + "t";
  return s + "t^" + std::to_string(n.unit_exponent);
}

std::string entry_name(tangle::Label i, tangle::Label j) {
  return "A(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void print_state_text(const gamma::GammaState& st) {
  std::cout << "omega: " << symcalc::to_text(st.omega) << "\n";
  for (const auto& [ij, v] : st.entries) {
    std::cout << entry_name(ij.first, ij.second) << ": " << symcalc::to_text(v) << "\n";
  }
}

json state_json(const gamma::GammaState& st) {
  json j;
  j["omega"] = symcalc::to_text(st.omega);
  j["labels"] = st.labels;
  json entries = json::array();
  for (const auto& [ij, v] : st.entries) {
    entries.push_back({{"row", ij.first}, {"col", ij.second}, {"value", symcalc::to_text(v)}});
  }
  j["entries"] = entries;
  return j;
}

int run_gamma(const Source& src, const std::string& format) {
  const gamma::GammaState st = gamma::eval_gamma(tangle::parse_expr(src.get()));
  if (format == "json") {
    std::cout << state_json(st).dump(2) << "\n";
  } else {
    print_state_text(st);
  }
  return 0;
}

int run_dgamma(const Source& expr, const Source& gct, const std::string& format,
               bool with_matrix, bool frame_zero) {
  tangle::Expr e;
  std::string notation;
  if (gct.given()) {
    const gct::Diagram d = gct::parse_gct(gct.get());
    notation = gct::print(d);
    e = gct::compile(d);
  } else {
    e = tangle::parse_expr(expr.get());
  }
  dgamma::ReportOptions opts;
  opts.with_matrix = with_matrix;
  opts.frame_zero = frame_zero;
  const dgamma::InvariantReport r = dgamma::dgamma1(e, opts);
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";

  if (format == "json") {
    json j;
    if (!notation.empty()) j["gct"] = notation;
    j["source"] = r.source;
    j["dgamma1"] = symcalc::to_text(r.dgamma1.poly);
    j["unit_sign"] = r.dgamma1.unit_sign;
    j["unit_exponent"] = r.dgamma1.unit_exponent;
    json h = json::object();
    for (const auto& [name, i] : r.h_labeling) h["h" + std::to_string(i)] = name;
    j["h_labeling"] = h;
    json pw = json::array();
    for (const auto& p : r.piece_writhes) {
      pw.push_back({{"piece", p.piece}, {"strand", p.strand}, {"writhe", p.writhe}});
    }
    j["piece_writhes"] = pw;
    j["warnings"] = r.warnings;
    if (r.a_part) j["state"] = state_json(*r.a_part);
    std::cout << j.dump(2) << "\n";
  } else if (format == "latex") {
    std::cout << symcalc::to_latex(r.dgamma1.poly) << "\n";
    if (r.a_part) {
      for (const auto& [ij, v] : r.a_part->entries) {
        std::cout << "A_{" << ij.first << "," << ij.second << "} = " << symcalc::to_latex(v) << "\n";
      }
    }
  } else {
    std::cout << "dgamma1: " << symcalc::to_text(r.dgamma1.poly) << "\n";
    std::cout << "unit: " << unit_text(r.dgamma1) << "\n";
    if (!r.h_labeling.empty()) {
      std::map<int, std::string> by_index;
      for (const auto& [name, i] : r.h_labeling) by_index[i] = name;
      std::cout << "vertices:";
      for (const auto& [i, name] : by_index) std::cout << " h" << i << "=" << name;
      std::cout << "\n";
    }
    if (r.a_part) print_state_text(*r.a_part);
  }
  return 0;
}

int run_gct_compile(const Source& src, bool emit_dsl, bool raw_framing) {
  const gct::Diagram d = gct::parse_gct(src.get());
  gct::CompileOptions opts;
  opts.frame_zero = !raw_framing;
  const tangle::Expr e = gct::compile(d, opts);
  const std::string dsl = tangle::to_dsl(e);
  if (emit_dsl) {
    std::cout << dsl << "\n";
    return 0;
  }
  std::size_t crossings = 0, vertices = 0;
  for (const tangle::Node* a : tangle::atoms(e)) {
    if (a->kind == tangle::NodeKind::kCrossing) ++crossings;
    if (a->kind == tangle::NodeKind::kHVertex) ++vertices;
  }
  std::cout << "gct: " << gct::print(d) << "\n";
  std::cout << "vertices: " << vertices << "\n";
  std::cout << "crossings: " << crossings << "\n";
  std::cout << "dsl: " << dsl << "\n";
  return 0;
}

int run_gct_matrix(const Source& src, const std::string& format) {
  const gct::Diagram d = gct::parse_gct(src.get());
  const std::vector<std::string> m = gct::relation_matrix(d);
  if (format == "json") {
    std::cout << json{{"gct", gct::print(d)}, {"matrix", m}}.dump(2) << "\n";
  } else {
    for (const auto& row : m) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
      std::cout << "\n";
    }
  }
  return 0;
}

int run_tabulate(int n, const std::string& format, std::optional<unsigned> jobs,
                 bool drop_loose, bool hard_only, bool raw_framing) {
  if (n < 1 || n > 6) throw UsageError("-n must be between 1 and 6");
  gct::CensusOptions opts;
  if (jobs) {
    opts.jobs = *jobs;
  } else if (const char* env = std::getenv("CTKIT_JOBS")) {
    try {
      opts.jobs = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError("CTKIT_JOBS must be a non-negative integer");
    }
  } else {
    opts.jobs = 0;
  }
  opts.drop_loose_clasps = drop_loose;
  opts.hard_only = hard_only;
  opts.frame_zero = !raw_framing;
  gct::CensusFormat f = gct::CensusFormat::kMarkdown;
  if (format == "csv") f = gct::CensusFormat::kCsv;
  if (format == "json") f = gct::CensusFormat::kJson;
  if (format == "latex") f = gct::CensusFormat::kLatex;
  const gct::Census c = gct::tabulate(n, opts);
  std::cout << gct::format_census(c, f);
  for (const auto& row : c.rows) {
    if (!row.value) return 1;
  }
  return 0;
}

int run_verify(const std::string& engine, const std::string& move,
               const std::string& format, bool naive) {
  if (naive) {
    const verify::NaiveReport r = verify::naive_h_constraints();
    std::cout << verify::naive_to_text(r);
    return r.equivalent && r.series_equals_parallel ? 0 : 3;
  }
  std::vector<verify::MoveReport> reports;
  std::vector<verify::Engine> engines;
  if (engine.empty()) {
    engines = {verify::Engine::kGamma, verify::Engine::kDGamma};
  } else {
    engines = {verify::parse_engine(engine)};
  }
  for (verify::Engine e : engines) {
    for (auto& r : verify::builtin_suite(e, move)) reports.push_back(std::move(r));
  }
  if (reports.empty()) throw UsageError("no built-in move matches '" + move + "'");
  std::cout << (format == "json" ? verify::reports_to_json(reports)
                                 : verify::reports_to_text(reports));
  return verify::all_passed(reports) ? 0 : 3;
}

int run_random(int n, std::uint64_t seed, const std::string& format) {
  if (n < 1) throw UsageError("-n must be positive");
  const gct::Diagram d = gct::random_diagram(n, seed);
  std::cout << (format == "json" ? gct::to_json(d) : gct::print(d)) << "\n";
  return 0;
}

void add_source(CLI::App* app, Source& src, const std::string& name, const std::string& what) {
  app->add_option("--" + name, src.text, what);
  app->add_option("--" + name + "-file", src.file, what + ", read from a file")
      ->check(CLI::ExistingFile);
}

void require_one(std::initializer_list<const Source*> sources) {
  int given = 0;
  for (const Source* s : sources) {
    if (!s->text.empty()) ++given;
    if (!s->file.empty()) ++given;
  }
  if (given != 1) throw UsageError("exactly one input source is required");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander-type invariants of tangles, H-tangles and gCT diagrams"};
  app.require_subcommand(1);

  Source expr, gct_src;
  std::string format = "text";
  bool with_matrix = false, frame_zero = false, emit_dsl = false, raw_framing = false;
  int n = 0;
  std::optional<unsigned> jobs;
  bool drop_loose = false, hard_only = false, naive = false;
  std::string engine, move;
  std::uint64_t seed = 1;

  auto* g = app.add_subcommand("gamma", "Evaluate Gamma on a tangle expression");
  add_source(g, expr, "expr", "tangle expression");
  g->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* dg = app.add_subcommand("dgamma", "Evaluate the double Gamma invariant");
  add_source(dg, expr, "expr", "H-tangle expression");
  add_source(dg, gct_src, "gct", "gCT diagram");
  dg->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  dg->add_flag("--with-matrix", with_matrix, "also print the matrix part");
  dg->add_flag("--frame-zero", frame_zero, "add curls so every strand piece has writhe 0");

  auto* gc = app.add_subcommand("gct", "gCT diagram tools");
  gc->require_subcommand(1);
  auto* gcc = gc->add_subcommand("compile", "Compile a diagram to an H-tangle expression");
  add_source(gcc, gct_src, "gct", "gCT diagram");
  gcc->add_flag("--emit-dsl", emit_dsl, "print only the expression");
  gcc->add_flag("--raw-framing", raw_framing, "skip the writhe-zero curls");
  auto* gcm = gc->add_subcommand("matrix", "Print the pairwise relation matrix");
  add_source(gcm, gct_src, "gct", "gCT diagram");
  gcm->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* tab = app.add_subcommand("tabulate", "Census of all diagrams with n contacts");
  tab->add_option("-n", n, "number of contacts")->required();
  tab->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"md", "csv", "json", "latex"}));
  tab->add_option("--jobs", jobs, "worker threads, 0 for all cores (default: CTKIT_JOBS)");
  tab->add_flag("--drop-loose-clasps", drop_loose, "skip diagrams with a clasp on adjacent sites");
  tab->add_flag("--hard-only", hard_only, "only diagrams without clasps");
  tab->add_flag("--raw-framing", raw_framing, "skip the writhe-zero curls");

  auto* ver = app.add_subcommand("verify", "Check the built-in Reidemeister move instances");
  ver->add_option("--engine", engine, "gamma or dgamma (default: both)")
      ->check(CLI::IsMember({"gamma", "dgamma"}));
  ver->add_option("--move", move, "move name or name prefix");
  ver->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  ver->add_flag("--naive", naive, "solve for the naive H-vertex value instead");

  auto* rnd = app.add_subcommand("random", "Print a random gCT diagram");
  rnd->add_option("-n", n, "number of contacts")->required();
  rnd->add_option("--seed", seed, "random seed");
  rnd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (g->parsed()) {
      require_one({&expr});
      return run_gamma(expr, format);
    }
    if (dg->parsed()) {
      require_one({&expr, &gct_src});
      return run_dgamma(expr, gct_src, format, with_matrix, frame_zero);
    }
    if (gcc->parsed()) {
      require_one({&gct_src});
      return run_gct_compile(gct_src, emit_dsl, raw_framing);
    }
    if (gcm->parsed()) {
      require_one({&gct_src});
      return run_gct_matrix(gct_src, format);
    }
    if (tab->parsed()) {
      if (format == "text") format = "md";
      return run_tabulate(n, format, jobs, drop_loose, hard_only, raw_framing);
    }
    if (ver->parsed()) return run_verify(engine, move, format, naive);
    if (rnd->parsed()) return run_random(n, seed, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
