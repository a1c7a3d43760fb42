#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "meyniel/digraph.hpp"

namespace meyniel {

struct CompleteSymmetric {
  int n;
  friend bool operator==(const CompleteSymmetric&, const CompleteSymmetric&) = default;
};
/// K*_{p,q}: arcs both ways between the parts, none inside.
struct CompleteBipartiteSymmetric {
  int p;
  int q;
  friend bool operator==(const CompleteBipartiteSymmetric&, const CompleteBipartiteSymmetric&) = default;
};
struct TransitiveTournament {
  int n;
  friend bool operator==(const TransitiveTournament&, const TransitiveTournament&) = default;
};
/// [(K_{p-m} u K_{m-1}) + K_1]*: two symmetric cliques joined through one hub.
/// Valid when 2 <= m <= p-1 and m >= p-m+1, so that m is the longest cycle length.
struct CutVertexFamily {
  int p;
  int m;
  friend bool operator==(const CutVertexFamily&, const CutVertexFamily&) = default;
};
struct DirectedCycle {
  int n;
  friend bool operator==(const DirectedCycle&, const DirectedCycle&) = default;
};

using FamilyTag =
    std::variant<CompleteSymmetric, CompleteBipartiteSymmetric, TransitiveTournament, CutVertexFamily, DirectedCycle>;

int order_of(const FamilyTag& tag);

/// Every valid tag whose digraph has order in [min_order, max_order],
/// grouped by family, parameters ascending.
std::vector<FamilyTag> all_family_tags(int min_order, int max_order);

/// Throws DomainError when the parameters are invalid.
void validate(const FamilyTag& tag);

/// Parses "k*<n>", "kbip*<p>,<q>", "tt<n>", "cutfam<p>,<m>", "cyc<n>".
FamilyTag parse_family_tag(std::string_view text);
std::string to_string(const FamilyTag& tag);

/// Vertex layout: CutVertexFamily(p,m) puts the (m-1)-clique on 0..m-2, the
/// hub on m-1 and the (p-m)-clique on m..p-1; K*_{p,q} puts the p-side first.
Digraph generate(const FamilyTag& tag);

/// Recognises [(K_{p-m} u K_{m-1}) + K_1]* up to isomorphism: a symmetric
/// digraph with a unique cut vertex adjacent to everything whose removal
/// leaves exactly two complete components.
std::optional<CutVertexFamily> is_cut_vertex_family(const Digraph& d);

/// True iff d is isomorphic to K*_{q,q+1} for some q >= 1.
bool is_balanced_bipartite_exception(const Digraph& d);

/// Number of ordered vertex pairs, i.e. the bit width of an arc mask.
int arc_slot_count(int n);
/// Decodes an arc mask: bit k is the k-th ordered pair (u,v), u != v, in
/// lexicographic order.
Digraph digraph_from_arc_mask(int n, std::uint64_t mask);

inline constexpr int kMaxEnumerationOrder = 5;

/// Stream over every labeled digraph on n vertices in ascending arc-mask
/// order. A sub-range [first, last) of masks can be requested so several
/// consumers can split the space.
class DigraphEnumerator {
 public:
  explicit DigraphEnumerator(int n);
  DigraphEnumerator(int n, std::uint64_t first, std::uint64_t last);

  static std::uint64_t total(int n);

  std::optional<Digraph> next();
  std::uint64_t position() const { return next_; }

 private:
  int n_;
  std::uint64_t next_;
  std::uint64_t last_;
};

inline DigraphEnumerator enumerate_all(int n) { return DigraphEnumerator(n); }

/// Each ordered pair is included independently with the given probability.
/// The generator is std::mt19937_64 seeded through std::seed_seq with the
/// seed words followed by the optional stream index, so sample i of a
/// campaign can be drawn without drawing samples 0..i-1.
Digraph random_digraph(int n, double arc_probability, std::uint64_t seed, std::uint64_t stream = 0);

}  // namespace meyniel
