#include "meyniel/families.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <vector>

namespace meyniel {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_order(int n, const std::string& name) {
  require(n >= 1 && n <= kMaxOrder,
          name + ": vertex count must lie in [1, " + std::to_string(kMaxOrder) + "], got " + std::to_string(n));
}

std::vector<int> parse_ints(std::string_view body, std::string_view whole) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = body.find(',', pos);
    std::string_view part = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw DomainError("malformed family tag '" + std::string(whole) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

bool is_symmetric(const Digraph& d) {
  for (Vertex v = 0; v < d.order(); ++v) {
    if (d.out_set(v) != d.in_set(v)) return false;
  }
  return true;
}

}  // namespace

void validate(const FamilyTag& tag) {
  std::visit(overloaded{
                 [](const CompleteSymmetric& t) { require_order(t.n, "k*"); },
                 [](const CompleteBipartiteSymmetric& t) {
                   require(t.p >= 1 && t.q >= 1, "kbip*: both parts must be nonempty");
                   require_order(t.p + t.q, "kbip*");
                 },
                 [](const TransitiveTournament& t) { require_order(t.n, "tt"); },
                 [](const CutVertexFamily& t) {
                   require_order(t.p, "cutfam");
                   require(t.m >= 2 && t.m <= t.p - 1,
                           "cutfam: need 2 <= m <= p-1, got p=" + std::to_string(t.p) + " m=" + std::to_string(t.m));
                   require(t.m >= t.p - t.m + 1, "cutfam: need m >= p-m+1 so that m is the longest cycle length, got p=" +
                                                     std::to_string(t.p) + " m=" + std::to_string(t.m));
                 },
                 [](const DirectedCycle& t) {
                   require_order(t.n, "cyc");
                   require(t.n >= 2, "cyc: a cycle needs at least 2 vertices");
                 },
             },
             tag);
}

int order_of(const FamilyTag& tag) {
  return std::visit(overloaded{
                        [](const CompleteSymmetric& t) { return t.n; },
                        [](const CompleteBipartiteSymmetric& t) { return t.p + t.q; },
                        [](const TransitiveTournament& t) { return t.n; },
                        [](const CutVertexFamily& t) { return t.p; },
                        [](const DirectedCycle& t) { return t.n; },
                    },
                    tag);
}

std::vector<FamilyTag> all_family_tags(int min_order, int max_order) {
  min_order = std::max(min_order, 1);
  max_order = std::min(max_order, kMaxOrder);
  std::vector<FamilyTag> tags;
  for (int n = min_order; n <= max_order; ++n) tags.push_back(CompleteSymmetric{n});
  for (int n = min_order; n <= max_order; ++n)
    for (int p = 1; p < n; ++p) tags.push_back(CompleteBipartiteSymmetric{p, n - p});
  for (int n = min_order; n <= max_order; ++n) tags.push_back(TransitiveTournament{n});
  for (int n = min_order; n <= max_order; ++n)
    for (int m = 2; m <= n - 1; ++m)
      if (m >= n - m + 1) tags.push_back(CutVertexFamily{n, m});
  for (int n = std::max(min_order, 2); n <= max_order; ++n) tags.push_back(DirectedCycle{n});
  return tags;
}

FamilyTag parse_family_tag(std::string_view text) {
  auto starts = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };
  FamilyTag tag;
  auto expect = [&](std::size_t count, std::string_view prefix) {
    auto values = parse_ints(text.substr(prefix.size()), text);
    if (values.size() != count) throw DomainError("malformed family tag '" + std::string(text) + "'");
    return values;
  };
  if (starts("kbip*")) {
    auto v = expect(2, "kbip*");
    tag = CompleteBipartiteSymmetric{v[0], v[1]};
  } else if (starts("k*")) {
    tag = CompleteSymmetric{expect(1, "k*")[0]};
  } else if (starts("tt")) {
    tag = TransitiveTournament{expect(1, "tt")[0]};
  } else if (starts("cutfam")) {
    auto v = expect(2, "cutfam");
    tag = CutVertexFamily{v[0], v[1]};
  } else if (starts("cyc")) {
    tag = DirectedCycle{expect(1, "cyc")[0]};
  } else {
    throw DomainError("unknown family tag '" + std::string(text) + "'");
  }
  validate(tag);
  return tag;
}

std::string to_string(const FamilyTag& tag) {
  return std::visit(overloaded{
                        [](const CompleteSymmetric& t) { return "k*" + std::to_string(t.n); },
                        [](const CompleteBipartiteSymmetric& t) {
                          return "kbip*" + std::to_string(t.p) + "," + std::to_string(t.q);
                        },
                        [](const TransitiveTournament& t) { return "tt" + std::to_string(t.n); },
                        [](const CutVertexFamily& t) { return "cutfam" + std::to_string(t.p) + "," + std::to_string(t.m); },
                        [](const DirectedCycle& t) { return "cyc" + std::to_string(t.n); },
                    },
                    tag);
}

Digraph generate(const FamilyTag& tag) {
  validate(tag);
  return std::visit(overloaded{
                        [](const CompleteSymmetric& t) {
                          Digraph d(t.n);
                          for (Vertex u = 0; u < t.n; ++u)
                            for (Vertex v = u + 1; v < t.n; ++v) d.add_edge(u, v);
                          return d;
                        },
                        [](const CompleteBipartiteSymmetric& t) {
                          Digraph d(t.p + t.q);
                          for (Vertex u = 0; u < t.p; ++u)
                            for (Vertex v = t.p; v < t.p + t.q; ++v) d.add_edge(u, v);
                          return d;
                        },
                        [](const TransitiveTournament& t) {
                          Digraph d(t.n);
                          for (Vertex u = 0; u < t.n; ++u)
                            for (Vertex v = u + 1; v < t.n; ++v) d.add_arc(u, v);
                          return d;
                        },
                        [](const CutVertexFamily& t) {
                          Digraph d(t.p);
                          const Vertex hub = t.m - 1;
                          for (Vertex u = 0; u < t.p; ++u) {
                            for (Vertex v = u + 1; v < t.p; ++v) {
                              bool same_side = (u < hub && v < hub) || (u > hub && v > hub);
                              if (same_side || u == hub || v == hub) d.add_edge(u, v);
                            }
                          }
                          return d;
                        },
                        [](const DirectedCycle& t) {
                          Digraph d(t.n);
                          for (Vertex u = 0; u < t.n; ++u) d.add_arc(u, (u + 1) % t.n);
                          return d;
                        },
                    },
                    tag);
}

std::optional<CutVertexFamily> is_cut_vertex_family(const Digraph& d) {
  const int p = d.order();
  if (p < 3 || !is_symmetric(d) || !is_strong(d)) return std::nullopt;
  std::optional<Vertex> hub;
  for (Vertex x = 0; x < p; ++x) {
    if (!is_strong_on(d, d.vertices() - VertexSet{x})) {
      if (hub) return std::nullopt;
      hub = x;
    }
  }
  if (!hub || neighbors(d, *hub) != d.vertices() - VertexSet{*hub}) return std::nullopt;
  ComponentOrder parts = strong_components_ordered(d, d.vertices() - VertexSet{*hub});
  if (parts.size() != 2) return std::nullopt;
  for (const VertexSet& part : parts.components) {
    if (!is_complete_on(d, part)) return std::nullopt;
  }
  int larger = std::max(parts[0].size(), parts[1].size());
  return CutVertexFamily{p, larger + 1};
}

bool is_balanced_bipartite_exception(const Digraph& d) {
  const int p = d.order();
  if (p < 3 || p % 2 == 0) return false;
  const VertexSet all = d.vertices();
  const VertexSet first_side = all - neighbors(d, 0);
  const VertexSet second_side = all - first_side;
  const int q = p / 2;
  if (!((first_side.size() == q || first_side.size() == q + 1))) return false;
  if (arcs_between(d, first_side, first_side) != 0 || arcs_between(d, second_side, second_side) != 0) return false;
  return dominates(d, first_side, second_side) && dominates(d, second_side, first_side);
}

int arc_slot_count(int n) { return n * (n - 1); }

Digraph digraph_from_arc_mask(int n, std::uint64_t mask) {
  Digraph d(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if ((mask >> bit) & 1U) d.add_arc(u, v);
      ++bit;
    }
  }
  return d;
}

std::uint64_t DigraphEnumerator::total(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw DomainError("exhaustive enumeration is capped at n = " + std::to_string(kMaxEnumerationOrder) +
                      ": there are 2^(n(n-1)) labeled digraphs on n vertices (2^" +
                      std::to_string(n < 1 ? 0 : n * (n - 1)) + " for n = " + std::to_string(n) + ")");
  }
  return std::uint64_t{1} << arc_slot_count(n);
}

DigraphEnumerator::DigraphEnumerator(int n) : DigraphEnumerator(n, 0, total(n)) {}

DigraphEnumerator::DigraphEnumerator(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), next_(first), last_(std::min(last, total(n))) {}

std::optional<Digraph> DigraphEnumerator::next() {
  if (next_ >= last_) return std::nullopt;
  return digraph_from_arc_mask(n_, next_++);
}

Digraph random_digraph(int n, double arc_probability, std::uint64_t seed, std::uint64_t stream) {
  if (!(arc_probability >= 0.0 && arc_probability <= 1.0)) {
    throw DomainError("arc probability must lie in [0, 1]");
  }
  if (n < 1) throw DomainError("random digraph needs at least one vertex");
  Digraph d(n);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      // 53-bit uniform in [0,1); probability 1 always includes, 0 never does.
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < arc_probability) d.add_arc(u, v);
    }
  }
  return d;
}

}  // namespace meyniel
