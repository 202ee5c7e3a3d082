// takman: build fundamental-group presentations of Dehn-surgery chain-link
// manifolds and cyclic branched covers of two-bridge knots, compute their
// abelian invariants, and cross-check the constructions against independent
// exact-arithmetic oracles.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "takman/cover.hpp"
#include "takman/takahashi.hpp"
#include "takman/twobridge.hpp"
#include "takman/verify.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw takman::invalid_input("cannot open file '" + path + "'",
                                takman::errc::parse);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out)
    throw takman::invalid_input("cannot write file '" + out_path + "'",
                                takman::errc::parse);
  out << content;
}

json presentation_json(const takman::Presentation& p) {
  json j;
  j["generators"] = p.generators;
  std::vector<std::string> rels;
  rels.reserve(p.relators.size());
  for (const takman::Word& r : p.relators)
    rels.push_back(takman::word_to_string(r, p.generators));
  j["relators"] = rels;
  return j;
}

void cmd_present_takahashi(const std::string& file, bool homology_flag,
                           bool json_flag) {
  takman::SurgeryData d = takman::parse_surgery_data(read_file(file));
  takman::Presentation p = takman::takahashi_presentation(d);
  if (json_flag) {
    json j = presentation_json(p);
    j["command"] = "present takahashi";
    j["n"] = d.n;
    j["m"] = d.m;
    if (homology_flag) j["homology"] = takman::to_string(takman::homology(p));
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << takman::presentation_to_text(p);
  if (homology_flag)
    std::cout << "homology: " << takman::to_string(takman::homology(p)) << "\n";
}

void cmd_present_cyclic(const std::string& conway, std::int64_t n,
                        bool homology_flag, bool json_flag) {
  if (n < 1) throw takman::invalid_input("--n must be >= 1");
  takman::ConwayEven c = takman::parse_conway(conway);
  takman::Word w =
      takman::cover_word(c.q_values(), c.s_values(), static_cast<std::size_t>(n));
  takman::Presentation p =
      takman::cover_presentation(c, static_cast<std::size_t>(n));
  std::string word_text = takman::word_to_string(w, p.generators);
  if (json_flag) {
    json j = presentation_json(p);
    j["command"] = "present cyclic";
    j["conway"] = takman::conway_to_string(c);
    j["n"] = n;
    j["word"] = word_text;
    if (homology_flag) j["homology"] = takman::to_string(takman::homology(p));
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "w: " << word_text << "\n" << takman::presentation_to_text(p);
  if (homology_flag)
    std::cout << "homology: " << takman::to_string(takman::homology(p)) << "\n";
}

void cmd_invariants(const std::string& conway, const std::string& fraction,
                    std::int64_t n) {
  if (n < 1) throw takman::invalid_input("--n must be >= 1");
  if (conway.empty() == fraction.empty())
    throw takman::invalid_input("pass exactly one of --conway and --fraction");

  takman::ConwayEven c;
  takman::Fraction f;
  if (!conway.empty()) {
    c = takman::parse_conway(conway);
    f = takman::conway_to_fraction(c);
  } else {
    f = takman::parse_fraction(fraction);
    c = takman::fraction_to_conway(f);
  }

  json j;
  j["fraction"] = takman::fraction_to_string(takman::canonical_fraction(f));
  j["alexander"] = takman::poly_to_string(takman::alexander_polynomial(f));
  if (n == 1) {
    j["order"] = "1";
  } else {
    auto order = takman::cover_homology_order(f, static_cast<std::size_t>(n));
    j["order"] = order ? order->str() : "infinite";
  }
  j["homology"] = takman::to_string(takman::homology(
      takman::cover_presentation(c, static_cast<std::size_t>(n))));
  std::cout << j.dump(2) << "\n";
}

int cmd_verify(const std::string& grid_name, bool json_flag) {
  takman::verify::Grid grid;
  if (grid_name == "small")
    grid = takman::verify::Grid::small;
  else if (grid_name == "full")
    grid = takman::verify::Grid::full;
  else
    throw takman::invalid_input("--grid must be 'small' or 'full'");

  takman::verify::Report report = takman::verify::run_all(grid);

  if (json_flag) {
    json j;
    j["command"] = "verify";
    j["grid"] = grid_name;
    j["pass"] = report.pass();
    json suites = json::array();
    for (const auto& s : report.suites) {
      json js;
      js["name"] = s.name;
      js["description"] = s.description;
      js["pass"] = s.pass();
      js["seconds"] = s.seconds;
      json checks = json::array();
      for (const auto& c : s.checks)
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
      js["checks"] = checks;
      suites.push_back(js);
    }
    j["suites"] = suites;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& s : report.suites) {
      std::cout << "suite " << s.name << ": " << (s.pass() ? "PASS" : "FAIL")
                << " (" << s.checks.size() << " checks, " << std::fixed
                << std::setprecision(3) << s.seconds << "s) -- " << s.description
                << "\n";
      if (s.checks.size() <= 6) {
        for (const auto& c : s.checks)
          std::cout << "  " << (c.pass ? "ok  " : "FAIL") << " " << c.name
                    << ": expected " << c.expected << "; got " << c.actual << "\n";
      } else {
        for (const auto& c : s.checks)
          if (!c.pass)
            std::cout << "  FAIL " << c.name << ": expected " << c.expected
                      << "; got " << c.actual << "\n";
      }
    }
    std::cout << "verification: " << (report.pass() ? "PASS" : "FAIL") << " ("
              << report.suites.size() << " suites)\n";
  }
  return report.pass() ? 0 : 1;
}

void cmd_export(const std::string& format, const std::string& file,
                const std::string& conway, std::int64_t n,
                const std::string& out_path, bool json_flag) {
  if (file.empty() == conway.empty())
    throw takman::invalid_input("pass exactly one of --file and --conway");

  takman::Presentation p;
  if (!file.empty()) {
    p = takman::takahashi_presentation(takman::parse_surgery_data(read_file(file)));
  } else {
    if (n < 1) throw takman::invalid_input("--n must be >= 1");
    p = takman::cover_presentation(takman::parse_conway(conway),
                                   static_cast<std::size_t>(n));
  }

  std::string content;
  if (format == "presentation")
    content = takman::presentation_to_text(p);
  else if (format == "generic-cgt")
    content = takman::presentation_to_cgt(p);
  else
    throw takman::invalid_input("unknown export format '" + format +
                                "' (use presentation or generic-cgt)");

  if (json_flag) {
    json j;
    j["command"] = "export";
    j["format"] = format;
    j["content"] = content;
    write_output(out_path, j.dump(2) + "\n");
  } else {
    write_output(out_path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fundamental groups of chain-link surgery manifolds and "
               "cyclic branched covers of two-bridge knots"};
  app.require_subcommand(1);

  int exit_code = 0;

  // present
  auto* present = app.add_subcommand("present", "build a group presentation");
  present->require_subcommand(1);

  std::string tak_file;
  bool tak_homology = false, tak_json = false;
  auto* ptak = present->add_subcommand(
      "takahashi", "balanced presentation from a surgery data file");
  ptak->add_option("--file", tak_file, "surgery data file")->required();
  ptak->add_flag("--homology", tak_homology, "append the first homology");
  ptak->add_flag("--json", tak_json, "JSON output");
  ptak->callback([&] { cmd_present_takahashi(tak_file, tak_homology, tak_json); });

  std::string cyc_conway;
  std::int64_t cyc_n = 0;
  bool cyc_homology = false, cyc_json = false;
  auto* pcyc = present->add_subcommand(
      "cyclic", "cyclic presentation of an n-fold branched cover");
  pcyc->add_option("--conway", cyc_conway, "even Conway form, e.g. [2,2]")->required();
  pcyc->add_option("--n", cyc_n, "covering degree")->required();
  pcyc->add_flag("--homology", cyc_homology, "append the first homology");
  pcyc->add_flag("--json", cyc_json, "JSON output");
  pcyc->callback([&] { cmd_present_cyclic(cyc_conway, cyc_n, cyc_homology, cyc_json); });

  // invariants
  std::string inv_conway, inv_fraction;
  std::int64_t inv_n = 0;
  bool inv_json = false;
  auto* inv = app.add_subcommand(
      "invariants", "fraction, Alexander polynomial, |H1| and H1 of a cover");
  inv->add_option("--conway", inv_conway, "even Conway form");
  inv->add_option("--fraction", inv_fraction, "two-bridge fraction a/b");
  inv->add_option("--n", inv_n, "covering degree")->required();
  inv->add_flag("--json", inv_json, "JSON output (always on for this command)");
  inv->callback([&] { cmd_invariants(inv_conway, inv_fraction, inv_n); });

  // verify
  std::string grid = "small";
  bool ver_json = false;
  auto* ver = app.add_subcommand("verify", "run the cross-verification suites");
  ver->add_option("--grid", grid, "small or full")->capture_default_str();
  ver->add_flag("--json", ver_json, "JSON report");
  ver->callback([&] { exit_code = cmd_verify(grid, ver_json); });

  // export
  std::string exp_format, exp_file, exp_conway, exp_out;
  std::int64_t exp_n = 0;
  bool exp_json = false;
  auto* exp = app.add_subcommand("export", "write a presentation to a file format");
  exp->add_option("--format", exp_format, "presentation or generic-cgt")->required();
  exp->add_option("--file", exp_file, "surgery data file");
  exp->add_option("--conway", exp_conway, "even Conway form");
  exp->add_option("--n", exp_n, "covering degree (with --conway)");
  exp->add_option("--out", exp_out, "output path (default: stdout)");
  exp->add_flag("--json", exp_json, "JSON output");
  exp->callback(
      [&] { cmd_export(exp_format, exp_file, exp_conway, exp_n, exp_out, exp_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const takman::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const takman::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
