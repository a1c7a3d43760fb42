#include "meyniel/cycles.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace meyniel {

namespace {

std::string join(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
  return out.str();
}

bool distinct_in_range(const Digraph& d, const std::vector<Vertex>& vs) {
  VertexSet seen;
  for (Vertex v : vs) {
    if (v < 0 || v >= d.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

// Depth-first search for simple paths that start at `start`, stay inside
// `allowed`, and close back to `start` after exactly `length` vertices.
class CycleSearch {
 public:
  CycleSearch(const Digraph& d, int length, VertexSet allowed, Vertex start)
      : d_(d), length_(length), allowed_(allowed), start_(start) {
    path_.reserve(static_cast<std::size_t>(length));
  }

  // Calls visit(path) for every closing path; stops when visit returns false.
  template <class Visit>
  bool run(Visit&& visit) {
    path_.assign(1, start_);
    return extend(VertexSet{start_}, visit);
  }

 private:
  template <class Visit>
  bool extend(VertexSet used, Visit& visit) {
    const Vertex last = path_.back();
    if (static_cast<int>(path_.size()) == length_) {
      if (d_.has_arc(last, start_)) return visit(path_);
      return true;
    }
    VertexSet candidates = (d_.out_set(last) & allowed_) - used;
    const int missing = length_ - static_cast<int>(path_.size());
    if (candidates.empty() || (allowed_ - used).size() < missing) return true;
    for (Vertex next : candidates) {
      // The final vertex must return to the start.
      if (missing == 1 && !d_.has_arc(next, start_)) continue;
      path_.push_back(next);
      VertexSet now = used;
      now.insert(next);
      bool go_on = extend(now, visit);
      path_.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const Digraph& d_;
  int length_;
  VertexSet allowed_;
  Vertex start_;
  std::vector<Vertex> path_;
};

}  // namespace

VertexSet PathWitness::vertex_set() const {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

VertexSet CycleWitness::vertex_set() const {
  VertexSet s;
  for (Vertex v : vertices) s.insert(v);
  return s;
}

Vertex CycleWitness::at(int i) const {
  const int m = length();
  return vertices[static_cast<std::size_t>(((i % m) + m) % m)];
}

std::string to_string(const PathWitness& p) { return join(p.vertices); }

std::string to_string(const CycleWitness& c) {
  if (c.vertices.empty()) return "";
  return join(c.vertices) + " " + std::to_string(c.vertices.front());
}

bool is_valid_path(const Digraph& d, const PathWitness& p) {
  if (p.vertices.empty() || !distinct_in_range(d, p.vertices)) return false;
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    if (!d.has_arc(p.vertices[i], p.vertices[i + 1])) return false;
  }
  return true;
}

bool is_valid_cycle(const Digraph& d, const CycleWitness& c) {
  if (c.vertices.size() < 2 || !distinct_in_range(d, c.vertices)) return false;
  for (int i = 0; i < c.length(); ++i) {
    if (!d.has_arc(c.at(i), c.at(i + 1))) return false;
  }
  return true;
}

CycleWitness canonical_rotation(const CycleWitness& c) {
  CycleWitness r = c;
  auto smallest = std::min_element(r.vertices.begin(), r.vertices.end());
  std::rotate(r.vertices.begin(), smallest, r.vertices.end());
  return r;
}

ConditionCheck satisfies_condition_m(const Digraph& d, int k) {
  ConditionCheck result;
  const int p = d.order();
  const int threshold = 2 * p - 2 + k;
  for (Vertex x = 0; x < p; ++x) {
    for (Vertex y = x + 1; y < p; ++y) {
      if (are_adjacent(d, x, y)) continue;
      int sum = degree(d, x) + degree(d, y);
      if (sum < threshold && (result.holds || sum < result.violating_sum)) {
        result.holds = false;
        result.violating_pair = {x, y};
        result.violating_sum = sum;
      }
    }
  }
  return result;
}

bool satisfies_ghouila_houri(const Digraph& d) {
  for (Vertex x = 0; x < d.order(); ++x) {
    if (degree(d, x) < d.order()) return false;
  }
  return true;
}

std::optional<CycleWitness> hamiltonian_cycle(const Digraph& d) {
  const int p = d.order();
  if (p < 2) return std::nullopt;
  for (Vertex v = 0; v < p; ++v) {
    if (d.out_set(v).empty() || d.in_set(v).empty()) return std::nullopt;
  }
  if (!is_strong(d)) return std::nullopt;
  return find_cycle(d, p, d.vertices(), 0);
}

std::optional<PathWitness> hamiltonian_path(const Digraph& d) {
  const int p = d.order();
  if (p == 0) return std::nullopt;
  const VertexSet all = d.vertices();
  std::vector<Vertex> path;
  path.reserve(static_cast<std::size_t>(p));

  std::function<bool(VertexSet)> extend = [&](VertexSet used) {
    if (used == all) return true;
    for (Vertex next : d.out_set(path.back()) - used) {
      path.push_back(next);
      VertexSet now = used;
      now.insert(next);
      if (extend(now)) return true;
      path.pop_back();
    }
    return false;
  };

  // A vertex with no in-arcs must start the path; one with no out-arcs must end it.
  int sources = 0;
  for (Vertex v = 0; v < p; ++v) sources += d.in_set(v).empty() ? 1 : 0;
  if (sources > 1) return std::nullopt;

  for (Vertex start = 0; start < p; ++start) {
    if (sources == 1 && !d.in_set(start).empty()) continue;
    path.assign(1, start);
    if (extend(VertexSet{start})) return PathWitness{path};
  }
  return std::nullopt;
}

std::optional<CycleWitness> find_cycle(const Digraph& d, int length, VertexSet within,
                                       std::optional<Vertex> through) {
  if (length < 2 || length > within.size()) return std::nullopt;
  std::optional<CycleWitness> found;
  auto take = [&](const std::vector<Vertex>& path) {
    found = CycleWitness{path};
    return false;
  };
  if (through) {
    if (!within.contains(*through)) return std::nullopt;
    CycleSearch(d, length, within, *through).run(take);
    return found;
  }
  // Each cycle is found from its smallest vertex, so later starts only use larger labels.
  VertexSet allowed = within;
  for (Vertex start : within) {
    if (allowed.size() < length) break;
    CycleSearch(d, length, allowed, start).run(take);
    if (found) return found;
    allowed.erase(start);
  }
  return std::nullopt;
}

std::vector<CycleWitness> all_cycles_of_length(const Digraph& d, int length) {
  std::vector<CycleWitness> cycles;
  if (length < 2) return cycles;
  VertexSet allowed = d.vertices();
  for (Vertex start : d.vertices()) {
    if (allowed.size() < length) break;
    CycleSearch(d, length, allowed, start).run([&](const std::vector<Vertex>& path) {
      cycles.push_back(CycleWitness{path});
      return true;
    });
    allowed.erase(start);
  }
  return cycles;
}

std::optional<LongestCycle> longest_cycle(const Digraph& d) {
  for (int length = d.order(); length >= 2; --length) {
    if (auto c = find_cycle(d, length, d.vertices())) return LongestCycle{length, *c};
  }
  return std::nullopt;
}

CycleSpectrum cycle_spectrum(const Digraph& d) {
  CycleSpectrum spectrum;
  for (int length = 2; length <= d.order(); ++length) {
    if (find_cycle(d, length, d.vertices())) spectrum.insert(length);
  }
  return spectrum;
}

}  // namespace meyniel
