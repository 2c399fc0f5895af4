// autorbit: automorphism-orbit reports and verification runs.

#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "autorbit/error.hpp"
#include "autorbit/report.hpp"
#include "autorbit/verifier.hpp"

namespace {

using namespace autorbit;

int emit_status(const report::VerdictReport& r) {
  for (const auto& v : r.verdicts)
    if (v.status == verify::Status::Fail) return 1;
  return r.skipped ? 2 : 0;
}

struct Common {
  std::uint64_t max_order = 0;
  double timeout_secs = 0;
  bool timing = false;
  std::string emit = "text";

  verify::Options options() const {
    verify::Options o;
    o.max_order = max_order;
    if (timeout_secs > 0) o.timeout_secs = timeout_secs;
    return o;
  }
};

void add_limits(CLI::App* cmd, Common& c) {
  cmd->add_option("--max-order", c.max_order, "Skip groups above this order (default: element cap)");
  cmd->add_option("--timeout-secs", c.timeout_secs, "Per-group time limit for the automorphism search");
}

int cmd_info(const std::string& spec, const Common& c) {
  auto entry = report::resolve(spec);
  auto r = report::build(entry, c.options(), true);
  std::cout << (c.emit == "json" ? report::to_json(r, c.timing) : report::to_text(r, c.timing));
  return emit_status(r);
}

int cmd_omega(const std::string& spec, const Common& c) {
  auto entry = report::resolve(spec);
  auto r = report::build(entry, c.options(), false);
  std::cout << (c.emit == "json" ? report::to_json(r, c.timing) : report::to_omega_text(r, c.timing));
  if (r.skipped) std::cerr << "autorbit: " << *r.skipped << '\n';
  return r.skipped ? 2 : 0;
}

int cmd_verify(const std::string& target, const std::string& corpus_dir, bool no_defaults,
               const Common& c) {
  verify::Options o = c.options();
  if (!corpus_dir.empty()) o.corpus_dir = corpus_dir;
  o.include_defaults = !no_defaults;
  const auto outcome = verify::run(target, o);
  for (const auto& v : outcome.verdicts)
    std::cout << verify::to_string(v.status) << ' ' << v.check << ' ' << v.subject << ": "
              << v.reason << '\n';
  for (const auto& d : outcome.diagnostics) std::cout << "SKIP " << target << ' ' << d << '\n';
  std::cout << target << ": " << outcome.count(verify::Status::Pass) << " pass, "
            << outcome.count(verify::Status::Fail) << " fail, "
            << outcome.count(verify::Status::Skip) + outcome.diagnostics.size() << " skip\n";
  return outcome.exit_code();
}

int cmd_scan(const std::string& dir, const Common& c) {
  const auto corpus = verify::load_directory(dir);
  int status = 0;
  bool first = true;
  for (const auto& e : corpus.entries) {
    auto r = report::build(e, c.options(), true);
    if (c.emit == "json") {
      std::cout << report::to_json(r, c.timing, -1);
    } else {
      if (!first) std::cout << '\n';
      std::cout << report::to_text(r, c.timing);
    }
    first = false;
    const int s = emit_status(r);
    if (s == 1 || (s == 2 && status == 0)) status = s;
  }
  for (const auto& d : corpus.diagnostics) std::cerr << "autorbit: " << d << '\n';
  if (!corpus.diagnostics.empty() && status == 0) status = 2;
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism orbits of finite permutation groups"};
  app.require_subcommand(1);

  Common common;
  std::string spec, target, corpus_dir, scan_dir;
  bool no_defaults = false;

  auto* info = app.add_subcommand("info", "Full invariant report for a group");
  info->add_option("spec", spec, "Catalog name or group file")->required();
  info->add_option("--emit", common.emit, "text or json")->check(CLI::IsMember({"text", "json"}));
  info->add_flag("--timing", common.timing, "Include wall-clock seconds");
  add_limits(info, common);

  auto* omega = app.add_subcommand("omega", "Number of automorphism orbits and their census");
  omega->add_option("spec", spec, "Catalog name or group file")->required();
  omega->add_option("--emit", common.emit, "text or json")->check(CLI::IsMember({"text", "json"}));
  omega->add_flag("--timing", common.timing, "Include wall-clock seconds");
  add_limits(omega, common);

  auto* verify = app.add_subcommand("verify", "Check a classification statement over a corpus");
  verify->add_option("target", target, "Verification target")
      ->required()
      ->check(CLI::IsMember(verify::targets()));
  verify->add_option("--corpus", corpus_dir, "Directory of .group files added to the corpus");
  verify->add_flag("--no-defaults", no_defaults, "Use only the --corpus directory");
  add_limits(verify, common);

  auto* scan = app.add_subcommand("scan", "Report every .group file in a directory");
  scan->add_option("dir", scan_dir, "Directory")->required();
  scan->add_option("--emit", common.emit, "text or json")->check(CLI::IsMember({"text", "json"}));
  scan->add_flag("--timing", common.timing, "Include wall-clock seconds");
  add_limits(scan, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*info) return cmd_info(spec, common);
    if (*omega) return cmd_omega(spec, common);
    if (*verify) return cmd_verify(target, corpus_dir, no_defaults, common);
    if (*scan) return cmd_scan(scan_dir, common);
  } catch (const Error& e) {
    std::cerr << "autorbit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "autorbit: internal error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
