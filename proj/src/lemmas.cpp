#include "meyniel/lemmas.hpp"

#include <string>

namespace meyniel {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

// Depth-first search for an (from, to)-path with more than `vertex_count` vertices.
bool longer_path_exists(const Digraph& d, Vertex current, Vertex to, VertexSet used, int vertex_count) {
  for (Vertex next : d.out_set(current) - used) {
    VertexSet now = used;
    now.insert(next);
    if (next == to) {
      if (now.size() > vertex_count) return true;
      continue;
    }
    // Reaching `to` still needs at least one more vertex.
    if (longer_path_exists(d, next, to, now, vertex_count)) return true;
  }
  return false;
}

}  // namespace

std::vector<CycleWitness> lemma1_cycles_through(const Digraph& d, const CycleWitness& cycle, Vertex x) {
  require(is_valid_cycle(d, cycle), "lemma 1: the given vertex sequence is not a cycle of the digraph");
  const VertexSet on_cycle = cycle.vertex_set();
  require(x >= 0 && x < d.order() && !on_cycle.contains(x), "lemma 1: x must be a vertex off the cycle");
  const int m = cycle.length();
  const int toward = degree_toward(d, x, on_cycle);
  require(toward >= m + 1, "lemma 1: d(x, V(C)) = " + std::to_string(toward) + " < m + 1 = " + std::to_string(m + 1));

  std::vector<CycleWitness> cycles;
  const VertexSet within = on_cycle | VertexSet{x};
  for (int k = 2; k <= m + 1; ++k) {
    auto found = find_cycle(d, k, within, x);
    if (!found) {
      throw TheoremViolation("lemma 1: no cycle of length " + std::to_string(k) + " through vertex " +
                             std::to_string(x) + " within " + to_string(within));
    }
    cycles.push_back(*found);
  }
  return cycles;
}

InsertionHypotheses insertion_hypotheses(const Digraph& d, const PathWitness& path, Vertex x) {
  const int m = static_cast<int>(path.vertices.size());
  const int toward = degree_toward(d, x, path.vertex_set());
  const bool first_closed = d.has_arc(x, path.vertices.front());
  const bool last_closed = d.has_arc(path.vertices.back(), x);
  InsertionHypotheses h;
  h.degree_at_least_m_plus_2 = toward >= m + 2;
  h.degree_at_least_m_plus_1_one_end_open = toward >= m + 1 && (!first_closed || !last_closed);
  h.degree_at_least_m_both_ends_open = toward >= m && !first_closed && !last_closed;
  return h;
}

std::optional<InsertionResult> lemma2_insert(const Digraph& d, const PathWitness& path, Vertex x) {
  require(!path.vertex_set().contains(x), "insertion: vertex " + std::to_string(x) + " already lies on the path");
  const VertexSet into = d.out_set(x);
  const VertexSet from = d.in_set(x);
  for (std::size_t i = 1; i < path.vertices.size(); ++i) {
    if (from.contains(path.vertices[i - 1]) && into.contains(path.vertices[i])) return InsertionResult{i};
  }
  return std::nullopt;
}

PathWitness insert_at(const PathWitness& path, Vertex x, InsertionResult where) {
  PathWitness result = path;
  result.vertices.insert(result.vertices.begin() + static_cast<std::ptrdiff_t>(where.index), x);
  return result;
}

bool is_longest_path_between_ends(const Digraph& d, const PathWitness& path) {
  const Vertex from = path.vertices.front();
  const Vertex to = path.vertices.back();
  return !longer_path_exists(d, from, to, VertexSet{from}, static_cast<int>(path.vertices.size()));
}

int lemma3_split_index(const Digraph& d, const PathWitness& path, Vertex x) {
  require(path.vertices.size() >= 2 && is_valid_path(d, path), "lemma 3: not a path of the digraph with m >= 2");
  const VertexSet on_path = path.vertex_set();
  const VertexSet off_path = d.vertices() - on_path;
  require(x >= 0 && x < d.order() && off_path.contains(x), "lemma 3: x must be a vertex off the path");
  const int m = static_cast<int>(path.vertices.size());
  require(d.order() >= 4 && m <= d.order() - 2, "lemma 3: needs order p >= 4 and m <= p - 2");
  for (Vertex z : off_path) {
    require(degree_toward(d, z, on_path) == m + 1,
            "lemma 3: off-path vertex " + std::to_string(z) + " has d(z, V(P)) = " +
                std::to_string(degree_toward(d, z, on_path)) + " != m + 1");
  }
  require(is_strong_on(d, off_path), "lemma 3: the digraph induced off the path is not strong");
  require(is_longest_path_between_ends(d, path), "lemma 3: P is not a longest path between its ends");

  const VertexSet out = d.out_set(x) & on_path;
  const VertexSet in = d.in_set(x) & on_path;
  for (int l = 1; l <= m; ++l) {
    VertexSet prefix;
    VertexSet suffix;
    for (int i = 0; i < m; ++i) {
      if (i < l) prefix.insert(path.vertices[static_cast<std::size_t>(i)]);
      if (i >= l - 1) suffix.insert(path.vertices[static_cast<std::size_t>(i)]);
    }
    if (out == prefix && in == suffix) return l;
  }
  throw TheoremViolation("lemma 3: no split index for vertex " + std::to_string(x) + " against path " +
                         to_string(path) + " (out " + to_string(out) + ", in " + to_string(in) + ")");
}

ExtendedPath extend_path_maximally(const Digraph& d, const PathWitness& path, VertexSet pool) {
  require((pool & path.vertex_set()).empty(), "extension pool must be disjoint from the path");
  ExtendedPath result{path, pool};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex v : result.leftover) {
      if (auto where = lemma2_insert(d, result.path, v)) {
        result.path = insert_at(result.path, v, *where);
        result.leftover.erase(v);
        grew = true;
        break;
      }
    }
  }
  return result;
}

}  // namespace meyniel
