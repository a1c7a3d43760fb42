#include "meyniel/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace meyniel {

namespace {

void check_set(const Digraph& d, VertexSet a) {
  if (!a.is_subset_of(d.vertices())) {
    throw DomainError("vertex set " + to_string(a) + " exceeds order " + std::to_string(d.order()));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::first(int n) {
  if (n < 0 || n > kMaxOrder) throw DomainError("vertex count out of range: " + std::to_string(n));
  return VertexSet(n == 32 ? ~0U : ((1U << n) - 1U));
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= kMaxOrder) throw DomainError("vertex label out of range: " + std::to_string(v));
  bits_ |= 1U << v;
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= kMaxOrder) throw DomainError("vertex label out of range: " + std::to_string(v));
  bits_ &= ~(1U << v);
}

Vertex VertexSet::min() const {
  if (bits_ == 0) throw DomainError("min() of empty vertex set");
  return std::countr_zero(bits_);
}

std::vector<Vertex> VertexSet::members() const { return {begin(), end()}; }

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Digraph::Digraph(int order) : order_(order) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("digraph order must lie in [0, " + std::to_string(kMaxOrder) + "], got " +
                      std::to_string(order));
  }
}

Digraph::Digraph(int order, std::initializer_list<Arc> arcs) : Digraph(order) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

Digraph::Digraph(int order, const std::vector<Arc>& arcs) : Digraph(order) {
  for (auto [u, v] : arcs) add_arc(u, v);
}

int Digraph::check(Vertex x) const {
  if (x < 0 || x >= order_) {
    throw DomainError("vertex " + std::to_string(x) + " not in digraph of order " + std::to_string(order_));
  }
  return x;
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  check(u);
  check(v);
  return ((out_[u] >> v) & 1U) != 0;
}

void Digraph::add_arc(Vertex u, Vertex v) {
  check(u);
  check(v);
  if (u == v) throw DomainError("loop at vertex " + std::to_string(u));
  out_[u] |= 1U << v;
  in_[v] |= 1U << u;
}

void Digraph::remove_arc(Vertex u, Vertex v) {
  check(u);
  check(v);
  out_[u] &= ~(1U << v);
  in_[v] &= ~(1U << u);
}

int Digraph::arc_count() const {
  int total = 0;
  for (int u = 0; u < order_; ++u) total += std::popcount(out_[u]);
  return total;
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  for (int u = 0; u < order_; ++u) {
    for (Vertex v : VertexSet(out_[u])) result.emplace_back(u, v);
  }
  return result;
}

VertexSet ComponentOrder::span(int first, int last) const {
  VertexSet s;
  for (int i = std::max(first, 0); i <= last && i < size(); ++i) s |= (*this)[i];
  return s;
}

int ComponentOrder::index_of(Vertex v) const {
  for (int i = 0; i < size(); ++i) {
    if ((*this)[i].contains(v)) return i;
  }
  return -1;
}

VertexSet InducedDigraph::lift(VertexSet local) const {
  VertexSet s;
  for (Vertex v : local) s.insert(labels.at(static_cast<std::size_t>(v)));
  return s;
}

int degree(const Digraph& d, Vertex x) { return d.out_set(x).size() + d.in_set(x).size(); }
int out_degree(const Digraph& d, Vertex x) { return d.out_set(x).size(); }
int in_degree(const Digraph& d, Vertex x) { return d.in_set(x).size(); }

int degree_toward(const Digraph& d, Vertex x, VertexSet a) {
  check_set(d, a);
  return (d.out_set(x) & a).size() + (d.in_set(x) & a).size();
}

VertexSet out_neighbors(const Digraph& d, Vertex x) { return d.out_set(x); }
VertexSet in_neighbors(const Digraph& d, Vertex x) { return d.in_set(x); }
VertexSet neighbors(const Digraph& d, Vertex x) { return d.out_set(x) | d.in_set(x); }

bool are_adjacent(const Digraph& d, Vertex x, Vertex y) {
  if (x == y) throw DomainError("adjacency of a vertex with itself is undefined");
  return d.has_arc(x, y) || d.has_arc(y, x);
}

int arcs_between(const Digraph& d, VertexSet from, VertexSet to) {
  int total = 0;
  for (Vertex u : from) total += (d.out_set(u) & to).size();
  return total;
}

bool dominates(const Digraph& d, VertexSet from, VertexSet to) {
  for (Vertex u : from) {
    if (!(to - VertexSet{u}).is_subset_of(d.out_set(u))) return false;
  }
  return true;
}

bool is_complete_on(const Digraph& d, VertexSet s) { return dominates(d, s, s); }

InducedDigraph induced(const Digraph& d, VertexSet a) {
  check_set(d, a);
  InducedDigraph result{Digraph(a.size()), a.members()};
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    for (std::size_t j = 0; j < result.labels.size(); ++j) {
      if (i != j && d.has_arc(result.labels[i], result.labels[j])) {
        result.graph.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return result;
}

Digraph converse(const Digraph& d) {
  Digraph result(d.order());
  for (auto [u, v] : d.arcs()) result.add_arc(v, u);
  return result;
}

Digraph remove_vertices(const Digraph& d, VertexSet removed) {
  return induced(d, d.vertices() - removed).graph;
}

Digraph relabel(const Digraph& d, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != d.order()) throw DomainError("permutation size mismatch");
  VertexSet image;
  for (Vertex v : perm) image.insert(v);
  if (image != d.vertices()) throw DomainError("relabeling is not a permutation of the vertices");
  Digraph result(d.order());
  for (auto [u, v] : d.arcs()) {
    result.add_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return result;
}

VertexSet reachable_from(const Digraph& d, Vertex x, VertexSet within) {
  VertexSet seen{x};
  VertexSet frontier{x};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= d.out_set(u);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

VertexSet reaching_to(const Digraph& d, Vertex x, VertexSet within) {
  VertexSet seen{x};
  VertexSet frontier{x};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= d.in_set(u);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_strong_on(const Digraph& d, VertexSet within) {
  check_set(d, within);
  if (within.size() <= 1) return true;
  Vertex root = within.min();
  return reachable_from(d, root, within) == within && reaching_to(d, root, within) == within;
}

bool is_strong(const Digraph& d) { return is_strong_on(d, d.vertices()); }

bool is_k_strong(const Digraph& d, int k) {
  if (k < 1) throw DomainError("connectivity parameter k must be positive, got " + std::to_string(k));
  const int p = d.order();
  if (p < k + 1) return false;
  const std::uint32_t all = d.vertices().bits();
  // Every deletion set of size <= k-1 (sub-masks of the vertex mask).
  for (std::uint32_t removed = 0;; removed = (removed - all) & all) {
    if (std::popcount(removed) <= k - 1 && !is_strong_on(d, VertexSet(all & ~removed))) return false;
    if (removed == all) break;
  }
  return true;
}

ComponentOrder strong_components_ordered(const Digraph& d, VertexSet a) {
  check_set(d, a);
  std::vector<VertexSet> parts;
  VertexSet rest = a;
  while (!rest.empty()) {
    Vertex v = rest.min();
    VertexSet comp = reachable_from(d, v, a) & reaching_to(d, v, a);
    parts.push_back(comp);
    rest = rest - comp;
  }
  // Kahn's algorithm on the condensation; ties go to the smallest minimum label.
  // parts is already sorted by minimum label.
  ComponentOrder order;
  std::vector<bool> placed(parts.size(), false);
  for (std::size_t round = 0; round < parts.size(); ++round) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (placed[i]) continue;
      bool has_pending_predecessor = false;
      for (std::size_t j = 0; j < parts.size() && !has_pending_predecessor; ++j) {
        if (j != i && !placed[j] && arcs_between(d, parts[j], parts[i]) > 0) has_pending_predecessor = true;
      }
      if (!has_pending_predecessor) {
        placed[i] = true;
        order.components.push_back(parts[i]);
        break;
      }
    }
  }
  return order;
}

}  // namespace meyniel
