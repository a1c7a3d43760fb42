#include "meyniel/campaign.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "meyniel/digraph_io.hpp"
#include "meyniel/families.hpp"
#include "meyniel/parallel.hpp"

namespace meyniel {

namespace {

constexpr std::uint64_t kChunk = 512;

// One contiguous block of campaign inputs: `count` digraphs produced on demand.
struct Segment {
  std::uint64_t count;
  std::function<std::pair<Digraph, std::string>(std::uint64_t)> make;
};

std::string probability_text(double p) {
  std::ostringstream out;
  out << p;
  return out.str();
}

std::vector<Segment> segments_for(const CampaignConfig& config) {
  std::vector<Segment> segments;
  switch (config.mode) {
    case CampaignMode::exhaustive:
      for (int n = config.n_min; n <= config.n_max; ++n) {
        segments.push_back({DigraphEnumerator::total(n), [n](std::uint64_t mask) {
                              return std::pair{digraph_from_arc_mask(n, mask),
                                               "n=" + std::to_string(n) + ":mask=" + std::to_string(mask)};
                            }});
      }
      break;
    case CampaignMode::random:
      for (int n = config.n_min; n <= config.n_max; ++n) {
        for (std::size_t k = 0; k < config.probabilities.size(); ++k) {
          const double prob = config.probabilities[k];
          const std::uint64_t seed = config.seed;
          // Substream id: n in the top 16 bits, probability slot in the next 8.
          const std::uint64_t base = (static_cast<std::uint64_t>(n) << 48) | (static_cast<std::uint64_t>(k) << 40);
          segments.push_back({config.samples, [=](std::uint64_t i) {
                                return std::pair{random_digraph(n, prob, seed, base | i),
                                                 "n=" + std::to_string(n) + ":prob=" + probability_text(prob) +
                                                     ":sample=" + std::to_string(i)};
                              }});
        }
      }
      break;
    case CampaignMode::single: {
      Digraph d = *config.single;
      std::string label = config.single_label.empty() ? "single" : config.single_label;
      segments.push_back({1, [d, label](std::uint64_t) { return std::pair{d, label}; }});
      break;
    }
    case CampaignMode::family: {
      std::vector<FamilyTag> tags = all_family_tags(config.n_min, config.n_max);
      segments.push_back({tags.size(), [tags](std::uint64_t i) {
                            return std::pair{generate(tags[i]), to_string(tags[i])};
                          }});
      break;
    }
  }
  return segments;
}

std::string escape(std::string text) {
  for (char& c : text) {
    if (c == '\t' || c == '\n') c = ' ';
  }
  return text;
}

struct ChunkResult {
  CampaignSummary summary;
  std::string records;
};

}  // namespace

std::string to_string(CampaignMode mode) {
  switch (mode) {
    case CampaignMode::exhaustive: return "exhaustive";
    case CampaignMode::random: return "random";
    case CampaignMode::single: return "single";
    case CampaignMode::family: return "family";
  }
  return "?";
}

CampaignMode parse_campaign_mode(const std::string& text) {
  for (auto mode : {CampaignMode::exhaustive, CampaignMode::random, CampaignMode::single, CampaignMode::family}) {
    if (text == to_string(mode)) return mode;
  }
  throw UsageError("unknown mode '" + text + "' (expected exhaustive, random, single or family)");
}

void validate(const CampaignConfig& config) {
  if (config.jobs < 1) throw UsageError("parallelism width must be at least 1");
  switch (config.mode) {
    case CampaignMode::exhaustive:
      if (config.n_min < 1 || config.n_min > config.n_max) throw UsageError("exhaustive mode needs 1 <= n_min <= n_max");
      if (config.n_max > kMaxEnumerationOrder) {
        throw UsageError("exhaustive mode requires n <= " + std::to_string(kMaxEnumerationOrder) +
                         " (2^(n(n-1)) labeled digraphs)");
      }
      break;
    case CampaignMode::random:
      if (config.n_min < 1 || config.n_min > config.n_max || config.n_max > kMaxOrder) {
        throw UsageError("random mode needs 1 <= n_min <= n_max <= " + std::to_string(kMaxOrder));
      }
      if (config.samples < 1) throw UsageError("random mode requires at least one sample");
      if (config.probabilities.empty() || config.probabilities.size() > 255) {
        throw UsageError("random mode needs between 1 and 255 arc probabilities");
      }
      for (double p : config.probabilities) {
        if (!(p >= 0.0 && p <= 1.0)) throw UsageError("arc probability must lie in [0, 1]");
      }
      break;
    case CampaignMode::single:
      if (!config.single) throw UsageError("single mode needs a digraph");
      break;
    case CampaignMode::family:
      if (config.n_min < 1 || config.n_min > config.n_max) throw UsageError("family mode needs 1 <= n_min <= n_max");
      break;
  }
}

std::uint64_t CampaignSummary::count(StatementId id, Verdict v) const {
  if (id == StatementId::screen) return 0;
  return tallies[static_cast<std::size_t>(id) - 1][static_cast<std::size_t>(v)];
}

void CampaignSummary::merge(const CampaignSummary& other) {
  processed += other.processed;
  for (std::size_t i = 0; i < screens.size(); ++i) screens[i] += other.screens[i];
  for (std::size_t s = 0; s < tallies.size(); ++s)
    for (std::size_t v = 0; v < tallies[s].size(); ++v) tallies[s][v] += other.tallies[s][v];
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  retried += other.retried;
}

void CampaignSummary::record(const std::string& hash, const std::string& source, const Verification& v) {
  ++processed;
  ++screens[static_cast<std::size_t>(v.screen)];
  retried += static_cast<std::uint64_t>(v.retried);
  for (const StatementReport& r : v.reports) {
    if (r.id != StatementId::screen) {
      ++tallies[static_cast<std::size_t>(r.id) - 1][static_cast<std::size_t>(r.verdict)];
    }
    if (r.verdict == Verdict::violated) violations.push_back({hash, source, r});
  }
}

std::string format_records(const std::string& hash, const std::string& source, const Verification& v) {
  std::string out;
  for (const StatementReport& r : v.reports) {
    out += hash + '\t' + source + '\t' + to_string(r.id) + '\t' + to_string(r.verdict) + '\t' + escape(r.detail) + '\t';
    for (std::size_t i = 0; i < r.witness.size(); ++i) out += (i ? "," : "") + std::to_string(r.witness[i]);
    out += '\n';
  }
  return out;
}

CampaignSummary run_campaign(const CampaignConfig& config, std::ostream* records) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Segment> segments = segments_for(config);
  const bool keep_records = records != nullptr;

  if (records) {
    *records << kReportHeader << '\n';
    *records << "# mode=" << to_string(config.mode) << " n=" << config.n_min << ".." << config.n_max;
    if (config.mode == CampaignMode::random) {
      *records << " samples=" << config.samples << " seed=" << config.seed << " prob=";
      for (std::size_t i = 0; i < config.probabilities.size(); ++i) {
        *records << (i ? "," : "") << probability_text(config.probabilities[i]);
      }
    }
    if (config.mode == CampaignMode::single) *records << " source=" << config.single_label;
    *records << '\n';
  }

  CampaignSummary summary;
  for (const Segment& segment : segments) {
    auto chunks = map_chunks(segment.count, kChunk, config.jobs, [&](std::uint64_t first, std::uint64_t last) {
      ChunkResult result;
      for (std::uint64_t i = first; i < last; ++i) {
        auto [d, source] = segment.make(i);
        const std::string hash = hash_hex(digraph_hash(d));
        Verification v = verify(d);
        result.summary.record(hash, source, v);
        if (keep_records) result.records += format_records(hash, source, v);
      }
      return result;
    });
    for (const ChunkResult& chunk : chunks) {
      summary.merge(chunk.summary);
      if (records) *records << chunk.records;
    }
  }
  summary.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (records) {
    std::ostringstream tail;
    print_summary(tail, config, summary);
    std::istringstream lines(tail.str());
    for (std::string line; std::getline(lines, line);) *records << "# " << line << '\n';
  }
  return summary;
}

CampaignSummary run_campaign(const CampaignConfig& config) {
  validate(config);
  if (config.output_path.empty()) return run_campaign(config, nullptr);
  std::ofstream out(config.output_path);
  if (!out) throw std::runtime_error("cannot write report to " + config.output_path);
  CampaignSummary summary = run_campaign(config, &out);
  out.flush();
  if (!out) throw std::runtime_error("error while writing " + config.output_path);
  return summary;
}

void print_summary(std::ostream& out, const CampaignConfig& config, const CampaignSummary& summary) {
  out << "summary mode=" << to_string(config.mode) << " processed=" << summary.processed;
  if (config.mode == CampaignMode::random) out << " seed=" << config.seed;
  out << '\n';
  out << "screens";
  for (auto s : {Screen::too_small, Screen::not_strong, Screen::hamiltonian, Screen::not_m0, Screen::applicable}) {
    out << ' ' << to_string(s) << '=' << summary.screens[static_cast<std::size_t>(s)];
  }
  out << '\n';
  for (auto id : {StatementId::I, StatementId::II, StatementId::III, StatementId::IV}) {
    out << "statement " << std::setw(3) << std::left << to_string(id) << std::right;
    for (auto v : {Verdict::holds, Verdict::not_applicable, Verdict::violated}) {
      out << ' ' << to_string(v) << '=' << summary.count(id, v);
    }
    out << '\n';
  }
  out << "retried-on-alternate-cycle=" << summary.retried << '\n';
  out << "violations=" << summary.violations.size() << '\n';
  for (const Violation& v : summary.violations) {
    out << "violation " << v.hash << ' ' << v.source << ' ' << to_string(v.report.id) << ": " << v.report.detail
        << '\n';
  }
  out << "seconds=" << std::fixed << std::setprecision(3) << summary.seconds << std::defaultfloat << '\n';
}

}  // namespace meyniel
