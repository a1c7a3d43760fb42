#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meyniel/cycles.hpp"
#include "meyniel/digraph.hpp"

namespace meyniel {

/// Anchors x_a, x_b on the longest cycle for one off-cycle component D_l.
/// gap (B_l) is the open cycle interval x_{a+1} .. x_{b-1}, indices modulo m.
struct GapData {
  Vertex a_anchor;
  Vertex b_anchor;
  int a_position;  // index of a_anchor in the cycle witness
  int b_position;
  VertexSet gap;
  Vertex entry_u;  // a_anchor -> entry_u, entry_u in D_l
  Vertex exit_v;   // exit_v -> b_anchor, exit_v in D_l
};

struct Decomposition {
  CycleWitness cycle;
  VertexSet off_cycle;
  ComponentOrder components;
  std::vector<std::optional<GapData>> gaps;  // one slot per component

  int m() const { return cycle.length(); }
  int h() const { return components.size(); }
};

enum class StatementId { screen, I, II, III, IV };
enum class Verdict { holds, violated, not_applicable };

std::string to_string(StatementId id);
std::string to_string(Verdict v);

/// Outcome of one statement check. A violated verdict always carries a
/// witness: for I-III the vertices the failed condition was observed on, for
/// IV the cycle lengths that are missing (or present against the exception).
struct StatementReport {
  StatementId id;
  Verdict verdict;
  std::string detail;
  std::vector<int> witness;
};

/// Reasons a digraph falls outside the theorem's hypotheses, checked in this order.
enum class Screen { too_small, not_strong, hamiltonian, not_m0, applicable };
std::string to_string(Screen s);

Screen screen(const Digraph& d);

/// Decomposition around the deterministic longest cycle.
/// Throws PreconditionError naming the failed hypothesis.
Decomposition decompose(const Digraph& d);
/// Decomposition around a caller-chosen longest cycle.
Decomposition decompose_with_cycle(const Digraph& d, const CycleWitness& cycle);

StatementReport check_statement_i(const Digraph& d, const Decomposition& dec);

struct StatementIIResult {
  StatementReport report;
  std::vector<std::optional<GapData>> gaps;
};

/// Anchors for component l (0-based) satisfying every statement-II
/// condition, first in cycle order, or nothing.
std::optional<GapData> find_gap(const Digraph& d, const Decomposition& dec, int l);
/// Re-checks every statement-II condition for the given anchors, recomputing
/// all degrees from the arc data. Returns the first failed condition, or an
/// empty string.
std::string gap_failure(const Digraph& d, const Decomposition& dec, int l, const GapData& gap);

StatementIIResult check_statement_ii(const Digraph& d, const Decomposition& dec);
StatementReport check_statement_iii(const Digraph& d, const Decomposition& dec);
StatementReport check_statement_iv(const Digraph& d, const Decomposition& dec);

/// Full verification of one digraph.
struct Verification {
  Screen screen = Screen::too_small;
  std::optional<Decomposition> decomposition;
  std::vector<StatementReport> reports;
  /// Statements that failed on the deterministic cycle but held on another
  /// longest cycle.
  int retried = 0;

  bool violated() const;
};

/// Screens d, then decomposes and runs all four checks. A statement that
/// fails on the deterministic longest cycle is retried on every other
/// longest cycle before it is reported as violated.
Verification verify(const Digraph& d);
std::vector<StatementReport> verify_all(const Digraph& d);

}  // namespace meyniel
