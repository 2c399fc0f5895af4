#include "autorbit/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include "json.hpp"
#include <sstream>

#include "autorbit/catalog.hpp"
#include "autorbit/error.hpp"
#include "autorbit/group_file.hpp"

namespace autorbit::report {

namespace {

std::string join(const std::set<std::uint64_t>& s) {
  std::string out;
  for (auto v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string seconds_text(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

verify::CorpusEntry resolve(std::string_view spec) {
  std::error_code ec;
  const std::filesystem::path path{std::string(spec)};
  if (std::filesystem::is_regular_file(path, ec)) {
    GroupFile f = load_group_file(path);
    return {f.name, path.string(), f.group(), f.omega_claim};
  }
  auto d = catalog::describe(spec);
  return {d.name, "catalog", d.group(), std::nullopt};
}

VerdictReport build(const verify::CorpusEntry& entry, const verify::Options& options, bool full) {
  const auto start = std::chrono::steady_clock::now();
  VerdictReport r;
  r.name = entry.name;
  r.source = entry.source;
  r.degree = entry.group.degree();
  r.order = entry.group.order();
  r.primes = prime_set(entry.group);

  GroupAnalysis a(entry.group, options.search_options(), options.effective_max_order());
  r.solvable = a.solvable();
  try {
    if (r.order > options.effective_max_order())
      throw CapacityError(r.order, options.effective_max_order());
    r.spectrum = a.spectrum();
    r.classes = a.classes().classes.size();
    const auto& part = a.orbits();
    r.omega = part.size();
    r.at = a.is_at();
    r.aut_order = a.automorphism_group_order();
    for (std::size_t i = 0; i < part.cells.size(); ++i)
      r.cells.push_back({part.cell_orders[i], part.cells[i].size()});
    std::sort(r.cells.begin(), r.cells.end(), [](const OrbitCell& x, const OrbitCell& y) {
      return std::pair(x.element_order, x.size) < std::pair(y.element_order, y.size);
    });
    if (full) {
      r.simple = a.is_simple();
      for (const auto& k : a.characteristic_subgroups())
        r.characteristic.push_back({k.order(), verify::elementary_abelian_prime(a.table(), k)});
    }
  } catch (const CapacityError& e) {
    r.skipped = e.what();
  } catch (const TimeoutError& e) {
    r.skipped = std::string("timeout: ") + e.what();
  }
  if (full && !r.skipped) {
    if (entry.omega_claim) r.verdicts.push_back(verify::check_omega_claim(entry, a));
    r.verdicts.push_back(verify::check_small_classification(entry.name, a));
    r.verdicts.push_back(verify::check_six_orbits(entry.name, a));
    r.verdicts.push_back(verify::check_at_list(entry.name, a));
    r.verdicts.push_back(verify::check_orbit_inequality(entry.name, a));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string to_text(const VerdictReport& r, bool timing) {
  std::ostringstream out;
  out << "name: " << r.name << '\n';
  out << "source: " << r.source << '\n';
  out << "degree: " << r.degree << '\n';
  out << "order: " << r.order << '\n';
  out << "primes: " << join(r.primes) << '\n';
  out << "solvable: " << yes_no(r.solvable) << '\n';
  if (r.skipped) {
    out << "skipped: " << *r.skipped << '\n';
  } else {
    if (r.simple) out << "simple: " << yes_no(*r.simple) << '\n';
    out << "spectrum: " << join(r.spectrum) << '\n';
    out << "classes: " << *r.classes << '\n';
    out << "omega: " << *r.omega << '\n';
    out << "orbits:";
    for (const auto& c : r.cells) out << ' ' << c.element_order << 'x' << c.size;
    out << '\n';
    out << "at: " << yes_no(*r.at) << '\n';
    out << "aut_order: " << *r.aut_order << '\n';
    if (!r.characteristic.empty()) {
      out << "characteristic:";
      for (const auto& k : r.characteristic) {
        out << ' ' << k.order;
        if (k.elementary_abelian_prime) out << "(E" << *k.elementary_abelian_prime << ')';
      }
      out << '\n';
    }
  }
  for (const auto& v : r.verdicts)
    out << "verdict " << v.check << ": " << verify::to_string(v.status) << ' ' << v.reason << '\n';
  if (timing) out << "seconds: " << seconds_text(r.seconds) << '\n';
  return out.str();
}

std::string to_omega_text(const VerdictReport& r, bool timing) {
  std::ostringstream out;
  out << "name: " << r.name << '\n';
  out << "order: " << r.order << '\n';
  if (r.skipped) {
    out << "skipped: " << *r.skipped << '\n';
  } else {
    out << "omega: " << *r.omega << '\n';
    out << "orbits:";
    for (const auto& c : r.cells) out << ' ' << c.element_order << 'x' << c.size;
    out << '\n';
  }
  if (timing) out << "seconds: " << seconds_text(r.seconds) << '\n';
  return out.str();
}

std::string to_json(const VerdictReport& r, bool timing, int indent) {
  using nlohmann::json;
  json j;
  j["name"] = r.name;
  j["source"] = r.source;
  j["degree"] = r.degree;
  j["order"] = r.order;
  j["primes"] = r.primes;
  j["solvable"] = r.solvable;
  if (r.skipped) {
    j["skipped"] = *r.skipped;
  } else {
    if (r.simple) j["simple"] = *r.simple;
    j["spectrum"] = r.spectrum;
    j["classes"] = *r.classes;
    j["omega"] = *r.omega;
    j["at"] = *r.at;
    j["aut_order"] = *r.aut_order;
    json cells = json::array();
    for (const auto& c : r.cells) cells.push_back({{"order", c.element_order}, {"size", c.size}});
    j["orbits"] = cells;
    json chars = json::array();
    for (const auto& k : r.characteristic) {
      json e{{"order", k.order}};
      if (k.elementary_abelian_prime) e["elementary_abelian_prime"] = *k.elementary_abelian_prime;
      chars.push_back(e);
    }
    j["characteristic"] = chars;
  }
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(
        {{"check", v.check}, {"status", verify::to_string(v.status)}, {"reason", v.reason}});
  j["verdicts"] = verdicts;
  if (timing) j["seconds"] = r.seconds;
  return j.dump(indent) + "\n";
}

}  // namespace autorbit::report
