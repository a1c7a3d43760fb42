#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "meyniel/digraph.hpp"
#include "meyniel/theorem_d.hpp"

namespace meyniel {

/// Invalid campaign configuration.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class CampaignMode { exhaustive, random, single, family };

std::string to_string(CampaignMode mode);
CampaignMode parse_campaign_mode(const std::string& text);

struct CampaignConfig {
  CampaignMode mode = CampaignMode::exhaustive;
  int n_min = 3;
  int n_max = 3;
  /// Random mode draws `samples` digraphs per (n, probability).
  std::vector<double> probabilities{0.5, 0.75};
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  /// Single mode: the digraph and a label for it.
  std::optional<Digraph> single;
  std::string single_label;
  /// Where per-digraph records go; empty means none.
  std::string output_path;
  int jobs = 1;
};

/// Throws UsageError when the configuration is inconsistent.
void validate(const CampaignConfig& config);

struct Violation {
  std::string hash;
  std::string source;
  StatementReport report;
};

struct CampaignSummary {
  std::uint64_t processed = 0;
  /// Indexed by Screen.
  std::array<std::uint64_t, 5> screens{};
  /// tallies[statement - 1][verdict] for statements I..IV.
  std::array<std::array<std::uint64_t, 3>, 4> tallies{};
  std::vector<Violation> violations;
  std::uint64_t retried = 0;
  double seconds = 0.0;

  std::uint64_t applicable() const { return screens[static_cast<int>(Screen::applicable)]; }
  std::uint64_t count(StatementId id, Verdict v) const;
  bool clean() const { return violations.empty(); }

  void merge(const CampaignSummary& other);
  void record(const std::string& hash, const std::string& source, const Verification& v);
};

/// Header line of every report; bump the version when the record layout changes.
inline constexpr const char* kReportHeader = "# meyniel-verify report v1";

/// One line per statement report: hash, source, statement, verdict, detail, witness (tab-separated).
std::string format_records(const std::string& hash, const std::string& source, const Verification& v);

/// Streams the configured digraphs through verify() on config.jobs threads.
/// Records, if requested, are written in input order followed by the summary.
/// Throws UsageError for a bad config and std::runtime_error for an
/// unwritable output path.
CampaignSummary run_campaign(const CampaignConfig& config);
/// Same, writing records to `records` (may be null).
CampaignSummary run_campaign(const CampaignConfig& config, std::ostream* records);

void print_summary(std::ostream& out, const CampaignConfig& config, const CampaignSummary& summary);

}  // namespace meyniel
