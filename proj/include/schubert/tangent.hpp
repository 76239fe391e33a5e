#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schubert/galleries.hpp"

namespace schubert {

// The 2r+2 slots of a gallery, ordered [B_r, P_r, B_{r-1}, ..., B_0, P_0],
// each carrying the root set of its parabolic subgroup:
//
//   R_{B_l} = w_l(R+),
//   R_{P_j} = w_j(R+ u {-alpha_{i_j}})        for r >= j >= 1,
//   R_{P_0} = w_0(R+ u -(Levi positives of the target type)).
//
// Chamber slot B_l sits at index 2(r-l), face slot P_j at index 2(r-j)+1.
struct SlotProfile {
  int r = 0;
  // contains[slot][root_index] over the system's all_roots() order.
  std::vector<std::vector<bool>> contains;
};

inline SlotProfile slot_profile(const Gallery& g) {
  const RootSystemPtr& rs = g.type().system();
  const int r = g.r();
  const int num_roots = static_cast<int>(rs->all_roots().size());
  const auto ch = g.chambers();

  SlotProfile prof;
  prof.r = r;
  prof.contains.assign(2 * static_cast<std::size_t>(r) + 2, std::vector<bool>(num_roots, false));

  auto chamber_row = [&](const WeylElement& w) {
    std::vector<bool> row(num_roots, false);
    for (const Root& b : rs->positive_roots()) row[static_cast<std::size_t>(rs->index_of(w.act(b)))] = true;
    return row;
  };

  for (int l = r; l >= 0; --l)
    prof.contains[2 * static_cast<std::size_t>(r - l)] = chamber_row(ch[static_cast<std::size_t>(l)]);

  for (int j = r; j >= 1; --j) {
    const WeylElement& w_j = ch[static_cast<std::size_t>(j)];
    std::vector<bool> row = prof.contains[2 * static_cast<std::size_t>(r - j)];
    Root extra = w_j.act(-rs->simple_root(g.type().letter(j)));
    row[static_cast<std::size_t>(rs->index_of(extra))] = true;
    prof.contains[2 * static_cast<std::size_t>(r - j) + 1] = std::move(row);
  }

  {
    const WeylElement& w_0 = ch[0];
    std::vector<bool> row = prof.contains[2 * static_cast<std::size_t>(r)];
    for (const Root& m : levi_positive_roots(*rs, g.type().target_type()))
      row[static_cast<std::size_t>(rs->index_of(w_0.act(-m)))] = true;
    prof.contains[2 * static_cast<std::size_t>(r) + 1] = std::move(row);
  }
  return prof;
}

// A basis class of the gallery's tangent space: a root together with the
// maximal run of consecutive slots omitting it.  Runs touching the source
// slot B_r are not part of the basis (that factor is pinned to B).
struct TangentClass {
  Root root;
  int first_slot = 0;
  int last_slot = 0;

  bool operator==(const TangentClass& other) const = default;
};

inline std::vector<TangentClass> bs_tangent_classes(const Gallery& g) {
  const RootSystemPtr& rs = g.type().system();
  const SlotProfile prof = slot_profile(g);
  const int slots = 2 * prof.r + 2;

  std::vector<TangentClass> out;
  for (std::size_t idx = 0; idx < rs->all_roots().size(); ++idx) {
    int run_start = -1;
    for (int s = 0; s <= slots; ++s) {
      const bool missing = s < slots && !prof.contains[static_cast<std::size_t>(s)][idx];
      if (missing && run_start < 0) run_start = s;
      if (!missing && run_start >= 0) {
        if (run_start > 0) out.push_back(TangentClass{rs->all_roots()[idx], run_start, s - 1});
        run_start = -1;
      }
    }
  }
  std::sort(out.begin(), out.end(), [&](const TangentClass& a, const TangentClass& b) {
    const int ia = rs->index_of(a.root), ib = rs->index_of(b.root);
    if (ia != ib) return ia < ib;
    return a.first_slot < b.first_slot;
  });
  return out;
}

// Canonical weight ordering: positive weights in root order, then negative
// weights ordered by their positive representatives.
inline std::vector<Root> sort_weights(const RootSystem& rs, std::set<Root> weights) {
  std::vector<Root> pos, neg;
  for (const Root& w : weights) (w.is_positive() ? pos : neg).push_back(w);
  auto by_index = [&](const Root& a, const Root& b) {
    return rs.index_of(canonical_positive(a)) < rs.index_of(canonical_positive(b));
  };
  std::sort(pos.begin(), pos.end(), by_index);
  std::sort(neg.begin(), neg.end(), by_index);
  pos.insert(pos.end(), neg.begin(), neg.end());
  return pos;
}

// Weights contributed by one gallery: roots of the classes whose run reaches
// the final slot P_0 (those are the classes whose basis vector survives the
// projection to the target factor).
inline std::vector<Root> contributing_weights(const Gallery& g) {
  std::set<Root> ws;
  const int last = 2 * g.r() + 1;
  for (const TangentClass& c : bs_tangent_classes(g))
    if (c.last_slot == last) ws.insert(c.root);
  return sort_weights(*g.type().system(), std::move(ws));
}

// The T-weights of the combinatorial tangent space at a point.
struct WeightSet {
  std::vector<Root> weights;  // sort_weights order
  WeylElement point;          // minimal coset representative
  std::vector<int> word;      // gallery-type word used for the computation
  ParabolicType parabolic;

  int dim() const { return static_cast<int>(weights.size()); }
};

// Union of the per-gallery contributions over the whole fiber above u.
inline WeightSet combinatorial_weights(const GalleryTypePtr& typ, const WeylElement& u) {
  u.check_same_system(typ->top());
  if (!is_min_coset_rep(u, typ->target_type()))
    fail(errc::not_minimal_rep, "point is not a minimal coset representative");
  if (!bruhat_leq(u, typ->top()))
    fail(errc::not_in_schubert, "'" + word_string(u) + "' is not below '" +
                                    format_word(*typ->system(), typ->word()) + "'");
  std::set<Root> ws;
  for (const Gallery& g : enumerate_fiber(typ, u))
    for (const Root& w : contributing_weights(g)) ws.insert(w);
  return WeightSet{sort_weights(*typ->system(), std::move(ws)), u, typ->word(), typ->target_type()};
}

// Closed form: one signed weight for each positive root beta whose reflection
// moves the coset of u to a different coset still below w.  The sign is
// positive exactly when the wall of beta separates the fundamental chamber
// from the point, i.e. when u^-1(beta) is negative.
inline WeightSet weights_closed_form(const WeylElement& u, const WeylElement& w,
                                     const ParabolicType& t_in) {
  u.check_same_system(w);
  const RootSystemPtr& rs = u.system();
  const ParabolicType t = normalize_parabolic(*rs, t_in);
  if (!is_min_coset_rep(u, t)) fail(errc::not_minimal_rep, "point is not a minimal coset representative");
  if (!is_min_coset_rep(w, t)) fail(errc::not_minimal_rep, "top element is not a minimal coset representative");
  if (!bruhat_leq(u, w))
    fail(errc::not_in_schubert, "'" + word_string(u) + "' is not below '" + word_string(w) + "'");

  std::set<Root> ws;
  for (const Root& beta : rs->positive_roots()) {
    WeylElement moved = min_coset_rep(reflection_for_root(rs, beta) * u, t);
    if (moved == u) continue;
    if (!bruhat_leq(moved, w)) continue;
    ws.insert(u.act_inverse(beta).is_positive() ? -beta : beta);
  }
  return WeightSet{sort_weights(*rs, std::move(ws)), u, reduced_word(w), t};
}

// The T-invariant curves through the point: (beta, other endpoint) pairs.
inline std::vector<std::pair<Root, WeylElement>> t_invariant_curves(const WeylElement& u,
                                                                    const WeylElement& w,
                                                                    const ParabolicType& t_in) {
  u.check_same_system(w);
  const RootSystemPtr& rs = u.system();
  const ParabolicType t = normalize_parabolic(*rs, t_in);
  if (!is_min_coset_rep(u, t)) fail(errc::not_minimal_rep, "point is not a minimal coset representative");
  if (!bruhat_leq(u, w))
    fail(errc::not_in_schubert, "'" + word_string(u) + "' is not below '" + word_string(w) + "'");

  std::vector<std::pair<Root, WeylElement>> out;
  for (const Root& beta : rs->positive_roots()) {
    WeylElement moved = min_coset_rep(reflection_for_root(rs, beta) * u, t);
    if (moved == u) continue;
    if (!bruhat_leq(moved, w)) continue;
    out.emplace_back(beta, std::move(moved));
  }
  return out;
}

// The graph of combinatorial T-invariant curves: all galleries of a type as
// vertices, one edge per single-slot difference.  An edge is fold-labeled
// when the global folding of the apartment at its wall towards the
// fundamental chamber maps one endpoint onto the other, i.e. when the
// bend-side endpoint never leaves the fundamental side of that wall.
struct GalleryGraph {
  GalleryTypePtr typ;
  std::vector<Gallery> vertices;      // all_galleries order
  std::vector<WeylElement> targets;   // minimal coset representatives

  struct Edge {
    int a = 0;
    int b = 0;     // vertex indices, a < b
    int step = 0;  // the step j where the endpoints differ
    Root wall;
    bool fold = false;
  };
  std::vector<Edge> edges;

  int row(int vertex) const { return targets[static_cast<std::size_t>(vertex)].length(); }
};

inline GalleryGraph gallery_graph(const GalleryTypePtr& typ) {
  const int r = typ->r();
  GalleryGraph graph;
  graph.typ = typ;
  graph.vertices = all_galleries(typ);
  graph.targets.reserve(graph.vertices.size());
  for (const Gallery& g : graph.vertices) graph.targets.push_back(g.target());

  std::vector<std::vector<WeylElement>> chambers;
  chambers.reserve(graph.vertices.size());
  for (const Gallery& g : graph.vertices) chambers.push_back(g.chambers());

  for (std::size_t k = 0; k < graph.vertices.size(); ++k) {
    for (int p = 0; p < r; ++p) {
      const std::size_t partner = k ^ (static_cast<std::size_t>(1) << (r - 1 - p));
      if (partner < k) continue;
      const int j = r - p;
      // Shared prefix: the wall is the same seen from either endpoint.
      Root wall = canonical_positive(chambers[k][static_cast<std::size_t>(j)].act(
          typ->system()->simple_root(typ->letter(j))));
      const std::size_t bend_side = graph.vertices[k].choice(j) ? partner : k;
      bool fold = true;
      for (const WeylElement& c : chambers[bend_side])
        if (!on_base_side(c, wall)) {
          fold = false;
          break;
        }
      graph.edges.push_back(GalleryGraph::Edge{static_cast<int>(k), static_cast<int>(partner), j,
                                               std::move(wall), fold});
    }
  }
  return graph;
}

// Reads the weights at a point off the graph: fold-labeled edges leaving the
// fiber towards shorter targets give the positive weights, those arriving
// from longer targets give the negatives.
inline WeightSet weights_from_graph(const GalleryGraph& graph, const WeylElement& u) {
  u.check_same_system(graph.typ->top());
  if (!is_min_coset_rep(u, graph.typ->target_type()))
    fail(errc::not_minimal_rep, "point is not a minimal coset representative");
  std::vector<bool> in_fiber(graph.vertices.size(), false);
  bool found = false;
  for (std::size_t k = 0; k < graph.vertices.size(); ++k)
    if (graph.targets[k] == u) in_fiber[k] = found = true;
  if (!found)
    fail(errc::point_not_in_graph, "'" + word_string(u) + "' is not a row of this graph");

  const int lu = u.length();
  std::set<Root> ws;
  for (const auto& e : graph.edges) {
    if (!e.fold) continue;
    for (const auto& [mine, other] : {std::pair<int, int>{e.a, e.b}, {e.b, e.a}}) {
      if (!in_fiber[static_cast<std::size_t>(mine)]) continue;
      const int lo = graph.row(other);
      if (lo < lu) ws.insert(e.wall);
      if (lo > lu) ws.insert(-e.wall);
    }
  }
  return WeightSet{sort_weights(*graph.typ->system(), std::move(ws)), u, graph.typ->word(),
                   graph.typ->target_type()};
}

}  // namespace schubert
