// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "meyniel/campaign.hpp"
#include "meyniel/cycles.hpp"
#include "meyniel/families.hpp"
#include "meyniel/lemmas.hpp"
#include "meyniel/parallel.hpp"
#include "meyniel/theorem_d.hpp"
#include "oracles.hpp"

using namespace meyniel;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

constexpr std::uint64_t kChunk = 1 << 14;

// Sums per-chunk counters over every labeled digraph on n vertices.
template <class Count>
std::vector<std::uint64_t> sweep(int n, std::size_t slots, Count count) {
  const std::uint64_t total = DigraphEnumerator::total(n);
  auto chunks = map_chunks(total, kChunk, default_parallelism(), [&](std::uint64_t first, std::uint64_t last) {
    std::vector<std::uint64_t> tally(slots, 0);
    DigraphEnumerator stream(n, first, last);
    while (auto d = stream.next()) count(*d, tally);
    return tally;
  });
  std::vector<std::uint64_t> sum(slots, 0);
  for (const auto& c : chunks)
    for (std::size_t i = 0; i < slots; ++i) sum[i] += c[i];
  return sum;
}

std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

void theorem_b(Outcome& out) {
  std::uint64_t checked = 0;
  for (int n = 2; n <= 5; ++n) {
    auto t = sweep(n, 2, [](const Digraph& d, std::vector<std::uint64_t>& tally) {
      if (!is_strong(d) || !satisfies_condition_m(d, 1).holds) return;
      ++tally[0];
      if (!hamiltonian_cycle(d)) ++tally[1];
    });
    checked += t[0];
    if (t[1]) out.fail("n=" + std::to_string(n) + ": " + std::to_string(t[1]) + " non-Hamiltonian");
  }
  out.expect(checked > 0, "no strong M1 digraphs found");
  out.note << (out.pass ? "" : "; ") << "strong M1 digraphs checked=" << checked;
}

void corollary(Outcome& out) {
  std::uint64_t checked = 0;
  for (int n = 2; n <= 5; ++n) {
    auto t = sweep(n, 2, [](const Digraph& d, std::vector<std::uint64_t>& tally) {
      if (!satisfies_condition_m(d, -1).holds) return;
      ++tally[0];
      auto path = hamiltonian_path(d);
      if (!path || !is_valid_path(d, *path) || path->vertex_set() != d.vertices()) ++tally[1];
    });
    checked += t[0];
    if (t[1]) out.fail("n=" + std::to_string(n) + ": " + std::to_string(t[1]) + " without a Hamiltonian path");
  }
  out.note << (out.pass ? "" : "; ") << "digraphs checked=" << checked;
}

void theorem_d_exhaustive(Outcome& out) {
  CampaignConfig config;
  config.mode = CampaignMode::exhaustive;
  config.n_min = 3;
  config.n_max = 5;
  const CampaignSummary s = run_campaign(config);
  out.expect(s.processed == 64 + 4096 + (1ULL << 20), "wrong digraph count");
  out.expect(s.violations.empty(), std::to_string(s.violations.size()) + " violations");
  out.expect(s.applicable() > 0, "no applicable instances");
  for (auto id : {StatementId::I, StatementId::II, StatementId::III, StatementId::IV}) {
    out.expect(s.count(id, Verdict::holds) + s.count(id, Verdict::not_applicable) == s.applicable(),
               "statement " + to_string(id) + " verdicts do not cover the applicable set");
  }
  out.note << (out.pass ? "" : "; ") << "processed=" << s.processed << " applicable=" << s.applicable()
           << " violated=0 II-not-applicable=" << s.count(StatementId::II, Verdict::not_applicable)
           << " III-not-applicable=" << s.count(StatementId::III, Verdict::not_applicable);
}

void theorem_d_random(Outcome& out) {
  CampaignConfig config;
  config.mode = CampaignMode::random;
  config.n_min = 6;
  config.n_max = 8;
  config.samples = 10000;
  config.probabilities = {0.75};
  config.seed = 20240601;
  const CampaignSummary s = run_campaign(config);
  out.expect(s.processed == 30000, "wrong sample count");
  out.expect(s.violations.empty(), std::to_string(s.violations.size()) + " violations");
  // Dense digraphs are nearly always Hamiltonian, so a sparser sweep also runs.
  config.probabilities = {0.35, 0.45};
  const CampaignSummary sparse = run_campaign(config);
  out.expect(sparse.violations.empty(), std::to_string(sparse.violations.size()) + " violations in the sparse sweep");
  out.note << (out.pass ? "" : "; ") << "p=3/4 processed=" << s.processed << " applicable=" << s.applicable()
           << "; p=0.35,0.45 processed=" << sparse.processed << " applicable=" << sparse.applicable()
           << "; seed=" << config.seed;
}

void named_instances(Outcome& out) {
  const Digraph k23 = generate(CompleteBipartiteSymmetric{2, 3});
  {
    const Verification v = verify(k23);
    out.expect(v.screen == Screen::applicable, "K*_{2,3} not applicable");
    if (v.decomposition) out.expect(v.decomposition->m() == 4, "K*_{2,3}: m != 4");
    out.expect(cycle_spectrum(k23) == CycleSpectrum{2, 4}, "K*_{2,3}: spectrum");
    out.expect(oracle::spectrum(k23) == std::set<int>{2, 4}, "K*_{2,3}: oracle spectrum");
    out.expect(v.reports.size() == 4 && v.reports[3].verdict == Verdict::holds &&
                   v.reports[3].detail.find("exception branch") != std::string::npos,
               "K*_{2,3}: statement IV exception branch not taken");
    out.expect(!v.violated(), "K*_{2,3}: violation");
  }
  const Digraph k34 = generate(CompleteBipartiteSymmetric{3, 4});
  {
    auto longest = longest_cycle(k34);
    out.expect(longest && longest->length == 6, "K*_{3,4}: m != 6");
    out.expect(cycle_spectrum(k34) == CycleSpectrum{2, 4, 6}, "K*_{3,4}: spectrum");
    out.expect(oracle::spectrum(k34) == std::set<int>{2, 4, 6}, "K*_{3,4}: oracle spectrum");
    out.expect(!verify(k34).violated(), "K*_{3,4}: violation");
  }
  const Digraph cut = generate(CutVertexFamily{5, 3});
  {
    const Verification v = verify(cut);
    out.expect(v.screen == Screen::applicable, "cutfam5,3 not applicable");
    if (v.decomposition) {
      out.expect(v.decomposition->m() == 3, "cutfam5,3: m != 3");
      for (Vertex z : v.decomposition->off_cycle) {
        out.expect(degree(cut, z) == 4 && oracle::degree(cut, z) == 4, "cutfam5,3: off-cycle degree != 4");
      }
    }
    out.expect(v.reports.size() == 4 && v.reports[1].verdict == Verdict::not_applicable,
               "cutfam5,3: statement II not marked not-applicable");
    out.expect(!v.violated(), "cutfam5,3: violation");
  }
  out.note << (out.pass ? "" : "; ") << "K*_{2,3} m=4 {2,4}; K*_{3,4} m=6 {2,4,6}; cutfam5,3 m=3 d(z)=4";
}

// Lemma 2: draws (D, P, x) until `per_class` triples satisfy each hypothesis.
void lemma2_suite(Outcome& out, std::mt19937_64& rng, int per_class) {
  int hits[3] = {0, 0, 0};
  std::uint64_t failures = 0;
  std::uint64_t draws = 0;
  for (int target = 0; target < 3; ++target) {
    while (hits[target] < per_class) {
      ++draws;
      const int n = 3 + static_cast<int>(rng() % 8);
      const int m = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
      Digraph d = random_digraph(n, 0.4, rng());
      const auto order = random_permutation(n, rng);
      PathWitness path{{order.begin(), order.begin() + m}};
      for (int i = 0; i + 1 < m; ++i) d.add_arc(path.vertices[static_cast<std::size_t>(i)], path.vertices[static_cast<std::size_t>(i + 1)]);
      const Vertex x = order[static_cast<std::size_t>(m)];
      for (Vertex v : path.vertices) {
        d.remove_arc(x, v);
        d.remove_arc(v, x);
        if (rng() % 5 != 0) d.add_arc(x, v);
        if (rng() % 5 != 0) d.add_arc(v, x);
      }
      if (target >= 1 && rng() % 2) d.remove_arc(x, path.vertices.front());
      if (target >= 1 && rng() % 2) d.remove_arc(path.vertices.back(), x);
      if (target == 2) {
        d.remove_arc(x, path.vertices.front());
        d.remove_arc(path.vertices.back(), x);
      }
      const auto h = insertion_hypotheses(d, path, x);
      const bool holds[3] = {h.degree_at_least_m_plus_2, h.degree_at_least_m_plus_1_one_end_open,
                             h.degree_at_least_m_both_ends_open};
      if (!holds[target]) continue;
      ++hits[target];
      auto at = lemma2_insert(d, path, x);
      if (!at || !is_valid_path(d, insert_at(path, x, *at))) ++failures;
    }
  }
  out.expect(failures == 0, "lemma 2: " + std::to_string(failures) + " failed insertions");
  out.note << "lemma2 (i)=" << hits[0] << " (ii)=" << hits[1] << " (iii)=" << hits[2] << " draws=" << draws;
}

void lemma1_suite(Outcome& out, std::mt19937_64& rng, int wanted) {
  int instances = 0;
  std::uint64_t failures = 0;
  while (instances < wanted) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const int m = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 2));
    Digraph d = random_digraph(n, 0.35, rng());
    const auto order = random_permutation(n, rng);
    CycleWitness cycle{{order.begin(), order.begin() + m}};
    for (int i = 0; i < m; ++i) d.add_arc(cycle.at(i), cycle.at(i + 1));
    const Vertex x = order[static_cast<std::size_t>(m)];
    for (Vertex v : cycle.vertices) {
      if (rng() % 4 != 0) d.add_arc(x, v);
      if (rng() % 4 != 0) d.add_arc(v, x);
    }
    if (degree_toward(d, x, cycle.vertex_set()) < m + 1) continue;
    ++instances;
    try {
      auto cycles = lemma1_cycles_through(d, cycle, x);
      const VertexSet allowed = cycle.vertex_set() | VertexSet{x};
      std::vector<Vertex> allowed_list = allowed.members();
      bool ok = static_cast<int>(cycles.size()) == m;
      for (int r = 2; ok && r <= m + 1; ++r) {
        const auto& c = cycles[static_cast<std::size_t>(r - 2)];
        ok = c.length() == r && is_valid_cycle(d, c) && c.vertex_set().contains(x) && c.vertex_set().is_subset_of(allowed) &&
             oracle::has_cycle_through(d, r, x, allowed_list);
      }
      if (!ok) ++failures;
    } catch (const std::exception&) {
      ++failures;
    }
  }
  out.expect(failures == 0, "lemma 1: " + std::to_string(failures) + " failures");
  out.note << "; lemma1 instances=" << instances;
}

// Every (D, P, x) with n <= 5 that meets the hypotheses of Lemma 3.
void lemma3_suite(Outcome& out) {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  for (int n = 4; n <= 5; ++n) {
    std::vector<std::vector<Vertex>> sequences;
    for (int m = 2; m <= n - 2; ++m) {
      oracle::for_each_sequence(n, m, [&](const std::vector<Vertex>& s) { sequences.push_back(s); });
    }
    auto t = sweep(n, 2, [&](const Digraph& d, std::vector<std::uint64_t>& tally) {
      for (const auto& seq : sequences) {
        bool chained = true;
        for (std::size_t i = 0; chained && i + 1 < seq.size(); ++i) chained = d.has_arc(seq[i], seq[i + 1]);
        if (!chained) continue;
        const int m = static_cast<int>(seq.size());
        VertexSet on;
        for (Vertex v : seq) on.insert(v);
        const VertexSet off = d.vertices() - on;
        bool degrees = true;
        for (Vertex z : off) degrees = degrees && degree_toward(d, z, on) == m + 1;
        if (!degrees || !is_strong_on(d, off)) continue;
        const PathWitness path{seq};
        if (!is_longest_path_between_ends(d, path)) continue;
        for (Vertex x : off) {
          ++tally[0];
          try {
            const int l = lemma3_split_index(d, path, x);
            VertexSet prefix;
            VertexSet suffix;
            for (int i = 0; i < m; ++i) {
              if (i < l) prefix.insert(seq[static_cast<std::size_t>(i)]);
              if (i >= l - 1) suffix.insert(seq[static_cast<std::size_t>(i)]);
            }
            if ((d.out_set(x) & on) != prefix || (d.in_set(x) & on) != suffix) ++tally[1];
          } catch (const std::exception&) {
            ++tally[1];
          }
        }
      }
    });
    instances += t[0];
    failures += t[1];
  }
  out.expect(instances > 0, "lemma 3: no instances meet the hypotheses");
  out.expect(failures == 0, "lemma 3: " + std::to_string(failures) + " failures");
  out.note << "; lemma3 instances=" << instances;
}

void lemmas(Outcome& out) {
  std::mt19937_64 rng(606);
  lemma2_suite(out, rng, 10000);
  lemma1_suite(out, rng, 1000);
  lemma3_suite(out);
}

bool isomorphic_to_exception(const Digraph& d) {
  const int p = d.order();
  if (p % 2 == 0 || p < 3) return false;
  const Digraph target = generate(CompleteBipartiteSymmetric{p / 2, p / 2 + 1});
  if (target.arc_count() != d.arc_count()) return false;
  std::vector<int> a;
  std::vector<int> b;
  for (Vertex v = 0; v < p; ++v) {
    a.push_back(degree(d, v));
    b.push_back(degree(target, v));
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && oracle::isomorphic(d, target);
}

void recognizers(Outcome& out) {
  std::mt19937_64 rng(99);
  int pairs = 0;
  for (int p = 3; p <= 9; ++p) {
    for (int m = 2; m <= p - 1; ++m) {
      const CutVertexFamily tag{p, m};
      try {
        validate(FamilyTag{tag});
      } catch (const DomainError&) {
        continue;
      }
      ++pairs;
      const Digraph base = generate(tag);
      for (int i = 0; i < 20; ++i) {
        const auto found = is_cut_vertex_family(relabel(base, random_permutation(p, rng)));
        if (!found || !(*found == tag)) out.fail("cutfam" + std::to_string(p) + "," + std::to_string(m) + " not recovered");
      }
    }
  }
  int accepted = 0;
  for (const FamilyTag& tag : all_family_tags(1, 9)) {
    const Digraph d = generate(tag);
    const bool expected = isomorphic_to_exception(d);
    if (is_balanced_bipartite_exception(d) != expected) out.fail("bipartite recognizer wrong on " + to_string(tag));
    if (expected) ++accepted;
  }
  for (int q = 1; q <= 4; ++q) {
    const Digraph d = generate(CompleteBipartiteSymmetric{q, q + 1});
    out.expect(is_balanced_bipartite_exception(d), "K*_{q,q+1} rejected for q=" + std::to_string(q));
  }
  out.note << (out.pass ? "" : "; ") << "cut-vertex (p,m) pairs=" << pairs << " bipartite accepted=" << accepted;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"strong + M1 implies Hamiltonian cycle, n=2..5 exhaustive", theorem_b},
      {"M_{-1} implies Hamiltonian path, n=2..5 exhaustive", corollary},
      {"Theorem D exhaustive sweep, n=3..5", theorem_d_exhaustive},
      {"Theorem D random sweep, n=6..8, 10^4 each at 3/4", theorem_d_random},
      {"named instances", named_instances},
      {"lemma property suites", lemmas},
      {"round-trip and recognizers", recognizers},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!out.pass) ++failed;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].name << " ["
              << out.note.str() << "] (" << std::fixed << std::setprecision(1) << seconds << "s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
