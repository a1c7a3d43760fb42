#include "meyniel/theorem_d.hpp"

#include <algorithm>
#include <sstream>

#include "meyniel/families.hpp"
#include "meyniel/lemmas.hpp"

namespace meyniel {

namespace {

std::string pair_text(Vertex a, Vertex b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string lengths_text(const CycleSpectrum& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int r : s) {
    out << (first ? "" : ",") << r;
    first = false;
  }
  out << '}';
  return out.str();
}

StatementReport holds(StatementId id, std::string detail) { return {id, Verdict::holds, std::move(detail), {}}; }

StatementReport not_applicable(StatementId id, std::string detail) {
  return {id, Verdict::not_applicable, std::move(detail), {}};
}

StatementReport violated(StatementId id, std::string detail, std::vector<int> witness) {
  return {id, Verdict::violated, std::move(detail), std::move(witness)};
}

// Cycle positions strictly between a and b going forward, modulo m.
VertexSet open_interval(const CycleWitness& c, int a, int b) {
  VertexSet s;
  const int m = c.length();
  for (int i = (a + 1) % m; i != b; i = (i + 1) % m) s.insert(c.at(i));
  return s;
}

// C[x_b, x_a]: the cycle walked forward from position b to position a.
PathWitness cycle_segment(const CycleWitness& c, int b, int a) {
  PathWitness path;
  const int m = c.length();
  for (int i = b;; i = (i + 1) % m) {
    path.vertices.push_back(c.at(i));
    if (i == a) break;
  }
  return path;
}

}  // namespace

std::string to_string(StatementId id) {
  switch (id) {
    case StatementId::screen: return "screen";
    case StatementId::I: return "I";
    case StatementId::II: return "II";
    case StatementId::III: return "III";
    case StatementId::IV: return "IV";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

std::string to_string(Screen s) {
  switch (s) {
    case Screen::too_small: return "order-below-3";
    case Screen::not_strong: return "not-strong";
    case Screen::hamiltonian: return "hamiltonian";
    case Screen::not_m0: return "not-m0";
    case Screen::applicable: return "applicable";
  }
  return "?";
}

Screen screen(const Digraph& d) {
  if (d.order() < 3) return Screen::too_small;
  if (!is_strong(d)) return Screen::not_strong;
  if (hamiltonian_cycle(d)) return Screen::hamiltonian;
  if (!satisfies_condition_m(d, 0)) return Screen::not_m0;
  return Screen::applicable;
}

Decomposition decompose(const Digraph& d) {
  if (d.order() < 3) throw PreconditionError("decompose: order p >= 3 required");
  if (!is_strong(d)) throw PreconditionError("decompose: digraph is not strong");
  if (hamiltonian_cycle(d)) throw PreconditionError("decompose: digraph is Hamiltonian");
  if (auto m0 = satisfies_condition_m(d, 0); !m0) {
    throw PreconditionError("decompose: condition M0 fails at pair " +
                            pair_text(m0.violating_pair->first, m0.violating_pair->second));
  }
  // Strong with p >= 3, so a cycle exists.
  return decompose_with_cycle(d, longest_cycle(d)->witness);
}

Decomposition decompose_with_cycle(const Digraph& d, const CycleWitness& cycle) {
  if (!is_valid_cycle(d, cycle)) throw PreconditionError("decompose: not a cycle of the digraph");
  for (int longer = cycle.length() + 1; longer <= d.order(); ++longer) {
    if (find_cycle(d, longer, d.vertices())) throw PreconditionError("decompose: the given cycle is not a longest cycle");
  }
  Decomposition dec;
  dec.cycle = cycle;
  dec.off_cycle = d.vertices() - cycle.vertex_set();
  dec.components = strong_components_ordered(d, dec.off_cycle);
  dec.gaps.assign(static_cast<std::size_t>(dec.components.size()), std::nullopt);
  return dec;
}

StatementReport check_statement_i(const Digraph& d, const Decomposition& dec) {
  const int p = d.order();
  const std::vector<Vertex> off = dec.off_cycle.members();
  for (std::size_t i = 0; i < off.size(); ++i) {
    for (std::size_t j = i + 1; j < off.size(); ++j) {
      if (!are_adjacent(d, off[i], off[j])) {
        return violated(StatementId::I, "off-cycle vertices " + pair_text(off[i], off[j]) + " are not adjacent",
                        {off[i], off[j]});
      }
    }
  }
  for (Vertex z : off) {
    if (degree(d, z) > p - 1) {
      return violated(StatementId::I,
                      "off-cycle vertex " + std::to_string(z) + " has degree " + std::to_string(degree(d, z)) +
                          " > p-1 = " + std::to_string(p - 1),
                      {z});
    }
  }
  for (int i = 0; i < dec.h(); ++i) {
    const VertexSet comp = dec.components[i];
    for (Vertex u : comp) {
      for (Vertex v : comp) {
        if (u != v && !d.has_arc(u, v)) {
          return violated(StatementId::I,
                          "component " + std::to_string(i + 1) + " is not complete: missing arc " + pair_text(u, v),
                          {u, v});
        }
      }
    }
  }
  int max_degree = 0;
  for (Vertex z : off) max_degree = std::max(max_degree, degree(d, z));
  return holds(StatementId::I, "|A|=" + std::to_string(off.size()) + " pairwise adjacent, max d(z)=" +
                                   std::to_string(max_degree) + " <= " + std::to_string(p - 1) + ", " +
                                   std::to_string(dec.h()) + " complete component(s)");
}

std::string gap_failure(const Digraph& d, const Decomposition& dec, int l, const GapData& gap) {
  const CycleWitness& c = dec.cycle;
  const int m = c.length();
  const int h = dec.h();
  const VertexSet on_cycle = c.vertex_set();
  const VertexSet comp = dec.components[l];
  const VertexSet b = gap.gap;

  if (gap.a_position < 0 || gap.a_position >= m || gap.b_position < 0 || gap.b_position >= m) {
    return "anchor position out of range";
  }
  if (c.at(gap.a_position) != gap.a_anchor || c.at(gap.b_position) != gap.b_anchor) return "anchors not on the cycle";
  if (gap.a_anchor == gap.b_anchor) return "anchors coincide";
  if (b != open_interval(c, gap.a_position, gap.b_position)) return "gap is not the open interval between the anchors";
  if (b.empty()) return "empty gap";
  if (!comp.contains(gap.entry_u) || !d.has_arc(gap.a_anchor, gap.entry_u)) return "no arc x_a -> u into D_l";
  if (!comp.contains(gap.exit_v) || !d.has_arc(gap.exit_v, gap.b_anchor)) return "no arc v -> x_b out of D_l";
  if (arcs_between(d, b, dec.components.span(0, l)) != 0) return "arc from B_l into A_{1,l}";
  if (arcs_between(d, dec.components.span(l, h - 1), b) != 0) return "arc from A_{l,h} into B_l";
  if (!is_complete_on(d, b)) return "B_l does not induce a complete digraph";
  if (!dominates(d, dec.components.span(0, l - 1), b | comp)) return "A_{1,l-1} does not dominate B_l u A_l";
  if (!dominates(d, b | comp, dec.components.span(l + 1, h - 1))) return "B_l u A_l does not dominate A_{l+1,h}";
  for (Vertex z : comp) {
    int got = degree_toward(d, z, on_cycle);
    if (got != m - b.size() + 1) {
      return "d(z,C_m) = " + std::to_string(got) + " != m-|B_l|+1 for z = " + std::to_string(z);
    }
  }
  for (Vertex y : b) {
    int got = degree_toward(d, y, on_cycle);
    if (got != m + b.size() - 1) {
      return "d(y,C_m) = " + std::to_string(got) + " != m+|B_l|-1 for y = " + std::to_string(y);
    }
  }
  if (b.size() < comp.size()) return "|B_l| < |A_l|";
  if (!dominates(d, VertexSet{gap.a_anchor}, b | comp)) return "x_a does not dominate B_l u A_l";
  if (!dominates(d, b | comp, VertexSet{gap.b_anchor})) return "B_l u A_l does not dominate x_b";
  const PathWitness rest = cycle_segment(c, gap.b_position, gap.a_position);
  for (Vertex v : b | comp) {
    if (lemma2_insert(d, rest, v)) return "vertex " + std::to_string(v) + " can be inserted into C_m[x_b,x_a]";
  }
  return {};
}

std::optional<GapData> find_gap(const Digraph& d, const Decomposition& dec, int l) {
  const CycleWitness& c = dec.cycle;
  const int m = c.length();
  const VertexSet comp = dec.components[l];
  for (int a = 0; a < m; ++a) {
    const VertexSet entries = d.out_set(c.at(a)) & comp;
    if (entries.empty()) continue;
    for (int step = 2; step < m; ++step) {
      const int b = (a + step) % m;
      const VertexSet exits = d.in_set(c.at(b)) & comp;
      if (exits.empty()) continue;
      GapData gap{c.at(a), c.at(b), a, b, open_interval(c, a, b), entries.min(), exits.min()};
      if (gap_failure(d, dec, l, gap).empty()) return gap;
    }
  }
  return std::nullopt;
}

StatementIIResult check_statement_ii(const Digraph& d, const Decomposition& dec) {
  StatementIIResult result;
  result.gaps.assign(static_cast<std::size_t>(dec.h()), std::nullopt);
  if (auto family = is_cut_vertex_family(d)) {
    result.report = not_applicable(StatementId::II, "exceptional family [(K_" + std::to_string(family->p - family->m) +
                                                        " u K_" + std::to_string(family->m - 1) + ") + K_1]*");
    return result;
  }
  std::ostringstream detail;
  for (int l = 0; l < dec.h(); ++l) {
    auto gap = find_gap(d, dec, l);
    if (!gap) {
      result.report = violated(StatementId::II,
                               "component " + std::to_string(l + 1) + " " + to_string(dec.components[l]) +
                                   " has no anchors x_a, x_b on cycle " + to_string(dec.cycle),
                               dec.components[l].members());
      return result;
    }
    detail << (l ? "; " : "") << "D_" << l + 1 << ": x_a=" << gap->a_anchor << " x_b=" << gap->b_anchor
           << " B=" << to_string(gap->gap);
    result.gaps[static_cast<std::size_t>(l)] = gap;
  }
  result.report = holds(StatementId::II, detail.str());
  return result;
}

StatementReport check_statement_iii(const Digraph& d, const Decomposition& dec) {
  if (!is_k_strong(d, 2)) return not_applicable(StatementId::III, "not 2-strong");
  const std::vector<Vertex> off = dec.off_cycle.members();
  for (std::size_t i = 0; i < off.size(); ++i) {
    for (std::size_t j = i + 1; j < off.size(); ++j) {
      const bool forward = d.has_arc(off[i], off[j]);
      const bool backward = d.has_arc(off[j], off[i]);
      if (forward == backward) {
        return violated(StatementId::III,
                        "pair " + pair_text(off[i], off[j]) + (forward ? " joined both ways" : " not joined"),
                        {off[i], off[j]});
      }
    }
  }
  for (Vertex u : off) {
    for (Vertex v : d.out_set(u) & dec.off_cycle) {
      for (Vertex w : d.out_set(v) & dec.off_cycle) {
        if (w != u && !d.has_arc(u, w)) {
          return violated(StatementId::III,
                          "domination not transitive on " + std::to_string(u) + "->" + std::to_string(v) + "->" +
                              std::to_string(w),
                          {u, v, w});
        }
      }
    }
  }
  return holds(StatementId::III, "D<A> is a transitive tournament on " + std::to_string(off.size()) + " vertex(es)");
}

StatementReport check_statement_iv(const Digraph& d, const Decomposition& dec) {
  const int m = dec.m();
  const CycleSpectrum spectrum = cycle_spectrum(d);
  if (is_balanced_bipartite_exception(d)) {
    CycleSpectrum evens;
    for (int r = 2; r <= m; r += 2) evens.insert(r);
    if (spectrum != evens) {
      std::vector<int> odd_or_missing;
      for (int r = 2; r <= d.order(); ++r) {
        if (spectrum.contains(r) != evens.contains(r)) odd_or_missing.push_back(r);
      }
      return violated(StatementId::IV,
                      "exception K*_{q,q+1}: spectrum " + lengths_text(spectrum) + " != even lengths " +
                          lengths_text(evens),
                      odd_or_missing);
    }
    return holds(StatementId::IV, "exception branch K*_{q,q+1}: spectrum " + lengths_text(spectrum));
  }
  std::vector<int> missing;
  for (int r = 2; r <= m; ++r) {
    if (!spectrum.contains(r)) missing.push_back(r);
  }
  if (!missing.empty()) {
    return violated(StatementId::IV, "spectrum " + lengths_text(spectrum) + " misses lengths in [2," +
                                         std::to_string(m) + "]",
                    missing);
  }
  return holds(StatementId::IV, "spectrum " + lengths_text(spectrum) + " covers [2," + std::to_string(m) + "]");
}

bool Verification::violated() const {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == Verdict::violated; });
}

Verification verify(const Digraph& d) {
  Verification v;
  v.screen = screen(d);
  switch (v.screen) {
    case Screen::too_small: v.reports.push_back(not_applicable(StatementId::screen, "order below 3")); return v;
    case Screen::not_strong: v.reports.push_back(not_applicable(StatementId::screen, "not strong")); return v;
    case Screen::hamiltonian:
      v.reports.push_back(not_applicable(StatementId::screen, "Hamiltonian, theorem vacuous"));
      return v;
    case Screen::not_m0: {
      auto m0 = satisfies_condition_m(d, 0);
      v.reports.push_back(not_applicable(StatementId::screen,
                                         "condition M0 fails at pair " +
                                             pair_text(m0.violating_pair->first, m0.violating_pair->second)));
      return v;
    }
    case Screen::applicable: break;
  }

  Decomposition dec = decompose(d);
  std::vector<CycleWitness> alternates;
  bool alternates_loaded = false;

  // Runs a cycle-dependent check; on violation retries every other longest cycle.
  auto with_retry = [&](auto&& check) {
    StatementReport report = check(dec);
    if (report.verdict != Verdict::violated) return report;
    if (!alternates_loaded) {
      alternates = all_cycles_of_length(d, dec.m());
      alternates_loaded = true;
    }
    const CycleWitness chosen = canonical_rotation(dec.cycle);
    for (const CycleWitness& other : alternates) {
      if (other == chosen) continue;
      StatementReport again = check(decompose_with_cycle(d, other));
      if (again.verdict != Verdict::violated) {
        ++v.retried;
        again.detail += " [on alternate longest cycle " + to_string(other) + "]";
        return again;
      }
    }
    return report;
  };

  v.reports.push_back(with_retry([&](const Decomposition& x) { return check_statement_i(d, x); }));
  auto first_ii = check_statement_ii(d, dec);
  if (first_ii.report.verdict != Verdict::violated) {
    dec.gaps = first_ii.gaps;
    v.reports.push_back(first_ii.report);
  } else {
    v.reports.push_back(with_retry([&](const Decomposition& x) { return check_statement_ii(d, x).report; }));
  }
  v.reports.push_back(with_retry([&](const Decomposition& x) { return check_statement_iii(d, x); }));
  v.reports.push_back(check_statement_iv(d, dec));
  v.decomposition = std::move(dec);
  return v;
}

std::vector<StatementReport> verify_all(const Digraph& d) { return verify(d).reports; }

}  // namespace meyniel
