#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "meyniel/errors.hpp"

namespace meyniel {

using Vertex = int;
using Arc = std::pair<Vertex, Vertex>;

/// Largest order a Digraph can hold; adjacency rows are 32-bit words.
inline constexpr int kMaxOrder = 32;

/// A subset of {0, ..., kMaxOrder-1} stored as a bit mask.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint32_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members);

  /// {0, ..., n-1}
  static VertexSet first(int n);

  bool contains(Vertex v) const { return v >= 0 && v < kMaxOrder && ((bits_ >> v) & 1U) != 0; }
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }
  /// Smallest member; the set must be nonempty.
  Vertex min() const;
  std::vector<Vertex> members() const;
  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  friend bool operator==(VertexSet, VertexSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

std::string to_string(VertexSet s);

/// Loop-free digraph without multiple arcs on vertices 0..order-1.
/// Arc membership is a pair of bit-matrix lookups (out rows and in rows).
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int order);
  Digraph(int order, std::initializer_list<Arc> arcs);
  Digraph(int order, const std::vector<Arc>& arcs);

  int order() const { return order_; }
  VertexSet vertices() const { return VertexSet::first(order_); }

  bool has_arc(Vertex u, Vertex v) const;
  /// Adds u->v; adding an existing arc is a no-op. Loops are rejected.
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);
  /// Adds u->v and v->u.
  void add_edge(Vertex u, Vertex v) {
    add_arc(u, v);
    add_arc(v, u);
  }

  VertexSet out_set(Vertex x) const { return VertexSet(out_[check(x)]); }
  VertexSet in_set(Vertex x) const { return VertexSet(in_[check(x)]); }

  int arc_count() const;
  /// All arcs in lexicographic order.
  std::vector<Arc> arcs() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int check(Vertex x) const;

  int order_ = 0;
  std::array<std::uint32_t, kMaxOrder> out_{};
  std::array<std::uint32_t, kMaxOrder> in_{};
};

/// Strong components listed so that no arc leads from a later component to
/// an earlier one.
struct ComponentOrder {
  std::vector<VertexSet> components;

  int size() const { return static_cast<int>(components.size()); }
  const VertexSet& operator[](int i) const { return components[static_cast<std::size_t>(i)]; }
  /// Union of components [first, last] (inclusive, 0-based); empty if first > last.
  VertexSet span(int first, int last) const;
  /// Index of the component containing v, or -1.
  int index_of(Vertex v) const;
};

/// Digraph induced by a vertex subset, relabeled densely. labels[i] is the
/// original label of new vertex i.
struct InducedDigraph {
  Digraph graph;
  std::vector<Vertex> labels;

  VertexSet lift(VertexSet local) const;
};

int degree(const Digraph& d, Vertex x);
int out_degree(const Digraph& d, Vertex x);
int in_degree(const Digraph& d, Vertex x);
/// Arcs between x and members of a, both directions.
int degree_toward(const Digraph& d, Vertex x, VertexSet a);
VertexSet out_neighbors(const Digraph& d, Vertex x);
VertexSet in_neighbors(const Digraph& d, Vertex x);
/// Out- and in-neighbours together.
VertexSet neighbors(const Digraph& d, Vertex x);
bool are_adjacent(const Digraph& d, Vertex x, Vertex y);

/// Number of arcs from a vertex of `from` to a vertex of `to`.
int arcs_between(const Digraph& d, VertexSet from, VertexSet to);
/// True iff every vertex of `from` dominates every vertex of `to`.
bool dominates(const Digraph& d, VertexSet from, VertexSet to);
/// True iff every ordered pair of distinct members of s is an arc.
bool is_complete_on(const Digraph& d, VertexSet s);

InducedDigraph induced(const Digraph& d, VertexSet a);
Digraph converse(const Digraph& d);
/// Digraph with the vertices of `removed` deleted (relabeled densely).
Digraph remove_vertices(const Digraph& d, VertexSet removed);
/// Applies a relabeling: arc (u,v) becomes (perm[u], perm[v]).
Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm);

/// Vertices reachable from x by directed paths inside `within` (x included).
VertexSet reachable_from(const Digraph& d, Vertex x, VertexSet within);
VertexSet reaching_to(const Digraph& d, Vertex x, VertexSet within);
/// True iff the subdigraph induced by `within` is strongly connected.
/// The empty set and singletons count as strong.
bool is_strong_on(const Digraph& d, VertexSet within);
bool is_strong(const Digraph& d);
/// Strong after deleting any k-1 vertices, with order >= k+1.
bool is_k_strong(const Digraph& d, int k);
ComponentOrder strong_components_ordered(const Digraph& d, VertexSet a);

}  // namespace meyniel
