// meyniel: verification campaigns and single-digraph inspection.
//
//   meyniel verify --mode exhaustive --n 4 --out report.txt
//   meyniel verify --mode random --n 8 --samples 100000 --prob 0.75 --seed 42
//   meyniel inspect cutfam7,4
//   meyniel inspect --file graph.dg
//
// Exit status: 0 clean, 1 a theorem statement was violated, 2 usage error,
// 3 input/output error.

#include <CLI11.hpp>

#include <charconv>
#include <iostream>
#include <string>

#include "meyniel/campaign.hpp"
#include "meyniel/cycles.hpp"
#include "meyniel/digraph_io.hpp"
#include "meyniel/families.hpp"
#include "meyniel/parallel.hpp"
#include "meyniel/theorem_d.hpp"

using namespace meyniel;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

// Accepts decimals ("0.75") and fractions ("3/4").
double parse_probability(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return std::stod(text);
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    if (den == 0) throw UsageError("zero denominator in probability '" + text + "'");
    return num / den;
  } catch (const std::logic_error&) {
    throw UsageError("malformed probability '" + text + "'");
  }
}

Digraph load(const std::string& file, const std::string& tag, std::string& label) {
  if (!file.empty()) {
    label = file;
    return read_digraph_file(file);
  }
  label = tag;
  return generate(parse_family_tag(tag));
}

void print_inspection(std::ostream& out, const std::string& label, const Digraph& d) {
  out << "digraph " << label << " hash=" << hash_hex(digraph_hash(d)) << " p=" << d.order()
      << " arcs=" << d.arc_count() << '\n';
  Verification v = verify(d);
  out << "screen: " << to_string(v.screen) << '\n';
  if (v.decomposition) {
    const Decomposition& dec = *v.decomposition;
    out << "longest cycle: m=" << dec.m() << " C=" << to_string(dec.cycle) << '\n';
    out << "off-cycle A (size " << dec.off_cycle.size() << "): " << to_string(dec.off_cycle) << '\n';
    out << "components (h=" << dec.h() << "):";
    for (int i = 0; i < dec.h(); ++i) out << " D_" << i + 1 << "=" << to_string(dec.components[i]);
    out << '\n';
    for (int i = 0; i < dec.h(); ++i) {
      const auto& gap = dec.gaps[static_cast<std::size_t>(i)];
      if (!gap) continue;
      out << "gap D_" << i + 1 << ": x_a=" << gap->a_anchor << " x_b=" << gap->b_anchor
          << " B=" << to_string(gap->gap) << " u=" << gap->entry_u << " v=" << gap->exit_v << '\n';
    }
    out << "cycle spectrum: ";
    bool first = true;
    for (int r : cycle_spectrum(d)) {
      out << (first ? "" : ",") << r;
      first = false;
    }
    out << '\n';
  }
  for (const StatementReport& r : v.reports) {
    out << "statement " << to_string(r.id) << ": " << to_string(r.verdict) << " (" << r.detail << ")";
    if (!r.witness.empty()) {
      out << " witness=";
      for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? "," : "") << r.witness[i];
    }
    out << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Meyniel-condition digraph verifier"};
  app.require_subcommand(1);

  CampaignConfig config;
  config.jobs = default_parallelism();
  std::string mode = "exhaustive";
  int n = 0;
  std::vector<std::string> probabilities;
  std::string file;
  std::string family;

  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->add_option("--mode", mode, "exhaustive | random | single | family")->capture_default_str();
  verify_cmd->add_option("--n", n, "vertex count (sets both --n-min and --n-max)");
  verify_cmd->add_option("--n-min", config.n_min, "smallest vertex count");
  verify_cmd->add_option("--n-max", config.n_max, "largest vertex count");
  verify_cmd->add_option("--samples", config.samples, "random digraphs per (n, probability)");
  verify_cmd->add_option("--prob", probabilities, "arc probability, repeatable (default 1/2 and 3/4)");
  verify_cmd->add_option("--seed", config.seed, "random seed");
  verify_cmd->add_option("--out", config.output_path, "write per-digraph records here");
  verify_cmd->add_option("--jobs", config.jobs, "worker threads (default: MEYNIEL_JOBS or hardware)");
  verify_cmd->add_option("--file", file, "digraph file (single mode)");
  verify_cmd->add_option("--family", family, "family tag (single mode)");

  std::string inspect_tag;
  std::string inspect_file;
  auto* inspect_cmd = app.add_subcommand("inspect", "print the decomposition and statement reports of one digraph");
  inspect_cmd->add_option("tag", inspect_tag, "family tag such as kbip*2,3 or cutfam5,3");
  inspect_cmd->add_option("--file", inspect_file, "digraph file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*inspect_cmd) {
      if (inspect_tag.empty() == inspect_file.empty()) throw UsageError("inspect needs exactly one of a tag or --file");
      std::string label;
      Digraph d = load(inspect_file, inspect_tag, label);
      print_inspection(std::cout, label, d);
      return 0;
    }

    config.mode = parse_campaign_mode(mode);
    if (n > 0) config.n_min = config.n_max = n;
    if (!probabilities.empty()) {
      config.probabilities.clear();
      for (const auto& p : probabilities) config.probabilities.push_back(parse_probability(p));
    }
    if (config.mode == CampaignMode::single) {
      if (file.empty() == family.empty()) throw UsageError("single mode needs exactly one of --file or --family");
      config.single = load(file, family, config.single_label);
    }
    CampaignSummary summary = run_campaign(config);
    print_summary(std::cout, config, summary);
    return summary.clean() ? 0 : kExitViolation;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
