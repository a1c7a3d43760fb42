#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "meyniel/digraph.hpp"

namespace meyniel {

/// Distinct vertices x_1 ... x_m with x_i -> x_{i+1}. Length counts arcs.
struct PathWitness {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  VertexSet vertex_set() const;
  friend bool operator==(const PathWitness&, const PathWitness&) = default;
};

/// Distinct vertices x_1 ... x_m (m >= 2) with x_i -> x_{i+1} and x_m -> x_1.
struct CycleWitness {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const;
  /// Vertex at cycle position i, indices taken modulo the length.
  Vertex at(int i) const;
  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

std::string to_string(const PathWitness& p);
std::string to_string(const CycleWitness& c);

bool is_valid_path(const Digraph& d, const PathWitness& p);
bool is_valid_cycle(const Digraph& d, const CycleWitness& c);

/// Rotation of c that starts at its smallest vertex.
CycleWitness canonical_rotation(const CycleWitness& c);

struct ConditionCheck {
  bool holds = true;
  /// Non-adjacent pair with the smallest degree sum (lexicographically
  /// smallest among ties); set only when the condition fails.
  std::optional<std::pair<Vertex, Vertex>> violating_pair;
  int violating_sum = 0;

  explicit operator bool() const { return holds; }
};

/// d(x) + d(y) >= 2p - 2 + k for every pair of non-adjacent vertices.
/// k = -1 is the Hamiltonian-path threshold 2p - 3.
ConditionCheck satisfies_condition_m(const Digraph& d, int k);
/// Every vertex has degree at least p.
bool satisfies_ghouila_houri(const Digraph& d);

std::optional<CycleWitness> hamiltonian_cycle(const Digraph& d);
std::optional<PathWitness> hamiltonian_path(const Digraph& d);

/// First cycle of the given length inside `within`, in depth-first order from
/// the smallest start vertex; the witness starts at its smallest vertex.
/// If `through` is set, only cycles containing it are considered, and the
/// witness starts at that vertex instead.
std::optional<CycleWitness> find_cycle(const Digraph& d, int length, VertexSet within,
                                       std::optional<Vertex> through = std::nullopt);

/// Every cycle of the given length, each listed once (starting at its smallest vertex).
std::vector<CycleWitness> all_cycles_of_length(const Digraph& d, int length);

struct LongestCycle {
  int length;
  CycleWitness witness;
};

/// Absent iff d is acyclic.
std::optional<LongestCycle> longest_cycle(const Digraph& d);

using CycleSpectrum = std::set<int>;

/// {r in [2, p] : d contains a cycle of length r}
CycleSpectrum cycle_spectrum(const Digraph& d);

}  // namespace meyniel
