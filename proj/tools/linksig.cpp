// Command-line surface: invariants, signature step functions, theorem
// checks, the random property campaign, and matrix generation.
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "linksig/io.hpp"
#include "linksig/verify.hpp"

namespace {

linksig::SeifertMatrix load(const std::string& path, std::string& name) {
  linksig::NamedMatrix nm = linksig::load_matrix_file(path);
  name = nm.name;
  return linksig::validate_seifert(std::move(nm.matrix));
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linksig: exact link signature / Alexander polynomial engine"};
  app.require_subcommand(1);

  std::string file, svg_out, csv_out, theorems;
  int samples_per_arc = 1;

  CLI::App* cmd_inv = app.add_subcommand("invariants", "link invariants from a Seifert matrix");
  cmd_inv->add_option("file", file, "matrix JSON file")->required();

  CLI::App* cmd_sig = app.add_subcommand("signature", "signature step function");
  cmd_sig->add_option("file", file, "matrix JSON file")->required();
  cmd_sig->add_option("--svg", svg_out, "write an SVG plot");
  cmd_sig->add_option("--csv", csv_out, "write the step function as CSV");
  cmd_sig->add_option("--samples-per-arc", samples_per_arc, "consistency diagnostic")
      ->check(CLI::PositiveNumber);

  CLI::App* cmd_check = app.add_subcommand("check", "verify the theorem inequalities");
  cmd_check->add_option("file", file, "matrix JSON file")->required();
  cmd_check->add_option("--theorems", theorems,
                        "comma list from main,bound,bound2,cong,even,estmult,module7");

  linksig::CampaignOptions opts;
  CLI::App* cmd_camp = app.add_subcommand("campaign", "random property campaign");
  cmd_camp->add_option("--count", opts.count, "number of matrices")->check(CLI::PositiveNumber);
  cmd_camp->add_option("--size-bound", opts.size_bound, "entry bound")
      ->check(CLI::PositiveNumber);
  cmd_camp->add_option("--seed", opts.seed, "master seed");
  cmd_camp->add_option("--samples-per-arc", opts.samples_per_arc, "consistency diagnostic")
      ->check(CLI::PositiveNumber);
  cmd_camp->add_flag("--inject-fault", opts.inject_fault,
                     "flip one theorem inequality (harness self-test)");

  int rg = 0, rmu = 1;
  long rbound = 1;
  std::uint64_t rseed = 1;
  CLI::App* cmd_rand = app.add_subcommand("random", "emit a random Seifert matrix as JSON");
  cmd_rand->add_option("--genus", rg, "genus g >= 0")->required();
  cmd_rand->add_option("--components", rmu, "number of components mu >= 1")->required();
  cmd_rand->add_option("--bound", rbound, "entry bound >= 1")->required();
  cmd_rand->add_option("--seed", rseed, "seed")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_inv->parsed()) {
      std::string name;
      linksig::SeifertMatrix s = load(file, name);
      std::cout << linksig::invariants_report_json(name, s, linksig::link_invariants(s))
                << "\n";
      return 0;
    }
    if (cmd_sig->parsed()) {
      std::string name;
      linksig::SeifertMatrix s = load(file, name);
      linksig::StepFunction sf = linksig::signature_function(s, samples_per_arc);
      std::vector<linksig::ShadowSample> shadow = linksig::floating_shadow(s, sf);
      std::cout << linksig::step_function_report_json(name, s, sf, shadow) << "\n";
      if (!csv_out.empty()) linksig::write_file(csv_out, linksig::step_function_csv(sf));
      if (!svg_out.empty()) linksig::write_file(svg_out, linksig::step_function_svg(sf));
      return 0;
    }
    if (cmd_check->parsed()) {
      std::string name;
      linksig::SeifertMatrix s = load(file, name);
      std::vector<std::string> ids =
          theorems.empty() ? linksig::all_theorem_ids() : split_csv(theorems);
      linksig::LinkData ld = linksig::analyze(s);
      std::vector<linksig::TheoremReport> reports = linksig::run_checks(ld, ids);
      std::cout << linksig::check_reports_json(name, reports) << "\n";
      for (const linksig::TheoremReport& r : reports)
        if (r.applicable && !r.overall()) return 1;
      return 0;
    }
    if (cmd_camp->parsed()) {
      linksig::CampaignSummary summary = linksig::run_campaign(opts);
      std::cout << linksig::campaign_summary_json(summary) << "\n";
      return summary.failures.empty() ? 0 : 1;
    }
    if (cmd_rand->parsed()) {
      linksig::SeifertMatrix s = linksig::random_seifert(rg, rmu, rbound, rseed);
      std::ostringstream name;
      name << "random(g=" << rg << ",mu=" << rmu << ",bound=" << rbound << ",seed=" << rseed
           << ")";
      std::cout << linksig::matrix_to_json(name.str(), s.v()) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
