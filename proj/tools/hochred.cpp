// Command-line front end: runs session files and prints reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hochred/hochred.hpp"

namespace {

enum Exit { kOk = 0, kFailed = 1, kInputError = 2 };

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

hochred::Window parse_window_flag(const std::string& s) {
  return hochred::detail::parse_window({s, 0, 1});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology and reduction checks for graded commutative algebras"};
  app.require_subcommand(1);

  std::string session_path, format = "json", output, window, statement;
  int nmax = -1, depth = -1, jobs = 1;
  std::vector<std::string> modules;

  auto common = [&](CLI::App* sub) {
    sub->add_option("session", session_path, "session file")->required();
    sub->add_option("--nmax", nmax, "largest index n")->check(CLI::NonNegativeNumber);
    sub->add_option("--window", window, "internal degree window LO:HI");
    sub->add_option("--depth", depth, "truncation depth of resolutions")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--jobs", jobs, "tasks run in parallel")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", output, "write the report here instead of stdout");
  };

  auto* run = app.add_subcommand("run", "run every task of a session");
  common(run);
  auto* hh = app.add_subcommand("hh", "Ext over S (x) S of (S, M (x) N)");
  common(hh);
  hh->add_option("modules", modules, "M N")->expected(2)->required();
  auto* hhh = app.add_subcommand("hh-homology", "Tor over S (x) S of (S, Hom(M, N))");
  common(hhh);
  hhh->add_option("modules", modules, "M N")->expected(2)->required();
  auto* dual = app.add_subcommand("dualizing", "homology of the dualizing complex");
  common(dual);
  auto* verify = app.add_subcommand("verify", "compare the two sides of an identity");
  common(verify);
  verify->add_option("--statement", statement, "4.1, 4.1.2, 4.6, 4.7, 4.5, 4.2, 1.1, 1.2 or a statement name")
      ->required();
  verify->add_option("modules", modules, "module arguments")->expected(0, 2);
  auto* smooth = app.add_subcommand("smooth-check", "smoothness diagnostics and non-smoothness certificate");
  common(smooth);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  std::string text;
  if (!read_file(session_path, text)) {
    std::cerr << session_path << ": cannot read file\n";
    return kInputError;
  }

  hochred::SessionSpec spec;
  hochred::RunOptions opt;
  try {
    if (nmax >= 0) opt.n_max = nmax;
    if (depth >= 0) opt.depth = depth;
    if (!window.empty()) opt.window = parse_window_flag(window);
    opt.jobs = jobs;
    spec = hochred::parse_session(text);
    std::string task;
    auto joined = [&] {
      std::string s;
      for (const auto& m : modules) s += " " + m;
      return s;
    };
    if (hh->parsed()) task = "hh" + joined();
    else if (hhh->parsed()) task = "hh-homology" + joined();
    else if (dual->parsed()) task = "dualizing";
    else if (smooth->parsed()) task = "smooth-check";
    else if (verify->parsed()) task = "verify " + statement + joined();
    if (!task.empty()) {
      spec = hochred::with_single_task(spec, task);
      text = spec.source;
    }
  } catch (const hochred::Error& e) {
    auto diags = hochred::diagnose_session(text);
    if (diags.empty()) diags.push_back({std::string(e.kind()), e.what()});
    for (const auto& d : diags) std::cerr << session_path << ":" << d.message << " [" << d.kind << "]\n";
    return kInputError;
  }

  auto results = hochred::run_session(spec, opt);
  std::string report;
  if (format == "json") report = hochred::emit_json(results, hochred::session_hash(text));
  else if (format == "csv") report = hochred::emit_csv(results);
  else report = hochred::emit_table(results);

  if (output.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << output << ": cannot write file\n";
      return kInputError;
    }
    out << report;
  }
  for (const auto& r : results)
    if (r.failed()) return kFailed;
  return kOk;
}
