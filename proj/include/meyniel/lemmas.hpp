#pragma once

#include <optional>
#include <vector>

#include "meyniel/cycles.hpp"
#include "meyniel/digraph.hpp"

namespace meyniel {

/// Cycles through an off-cycle vertex x of every length 2..m+1, where m is
/// the length of `cycle` and x sends/receives at least m+1 arcs to/from it.
/// result[k-2] is a cycle of length k that contains x and uses only
/// vertices of the given cycle besides x.
/// Throws PreconditionError when x lies on the cycle, the cycle is not a
/// cycle of d, or d(x, V(cycle)) <= m. Throws TheoremViolation if some
/// length cannot be realised.
std::vector<CycleWitness> lemma1_cycles_through(const Digraph& d, const CycleWitness& cycle, Vertex x);

/// x fits between path vertices at positions index-1 and index (0-based),
/// i.e. vertices[index-1] -> x -> vertices[index]. In 1-based path
/// notation x_i -> x -> x_{i+1} this is i = index.
struct InsertionResult {
  std::size_t index;
  friend bool operator==(const InsertionResult&, const InsertionResult&) = default;
};

/// Which insertion hypotheses hold for x against P = x_1 ... x_m:
///   (i)   d(x, V(P)) >= m + 2
///   (ii)  d(x, V(P)) >= m + 1 and (x -> x_1 absent or x_m -> x absent)
///   (iii) d(x, V(P)) >= m, x -> x_1 absent and x_m -> x absent
/// Any one of them guarantees an insertion position.
struct InsertionHypotheses {
  bool degree_at_least_m_plus_2 = false;
  bool degree_at_least_m_plus_1_one_end_open = false;
  bool degree_at_least_m_both_ends_open = false;

  bool any() const {
    return degree_at_least_m_plus_2 || degree_at_least_m_plus_1_one_end_open || degree_at_least_m_both_ends_open;
  }
};

InsertionHypotheses insertion_hypotheses(const Digraph& d, const PathWitness& path, Vertex x);

/// Smallest insertion position for x, if any. x must not lie on the path.
std::optional<InsertionResult> lemma2_insert(const Digraph& d, const PathWitness& path, Vertex x);

/// Path with x inserted at the given position.
PathWitness insert_at(const PathWitness& path, Vertex x, InsertionResult where);

/// The split index l in [1, m] (1-based) such that
/// O(x, V(P)) = {x_1 .. x_l} and I(x, V(P)) = {x_l .. x_m}.
/// Hypotheses, all re-checked: d has order p >= 4, P is a path of d with
/// 2 <= m <= p - 2 and a longest path from x_1 to x_m, the digraph induced off the path is strong, x is off the path,
/// and every off-path vertex z has d(z, V(P)) = m + 1. Violated hypotheses
/// raise PreconditionError; a missing split index raises TheoremViolation.
int lemma3_split_index(const Digraph& d, const PathWitness& path, Vertex x);

/// True iff no path from path.front() to path.back() has more vertices than `path`.
bool is_longest_path_between_ends(const Digraph& d, const PathWitness& path);

struct ExtendedPath {
  PathWitness path;
  VertexSet leftover;
};

/// Inserts pool vertices into the path one at a time (smallest label, then
/// smallest position first) until none fits. The endpoints never move.
ExtendedPath extend_path_maximally(const Digraph& d, const PathWitness& path, VertexSet pool);

}  // namespace meyniel
