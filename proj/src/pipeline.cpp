#include "orichrome/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "orichrome/dipath.hpp"
#include "orichrome/error.hpp"

namespace orichrome {

namespace {

using P = SurfaceParams;

bool is_low(int degree) { return degree >= P::kLowDegreeMin && degree <= P::kLowDegreeMax; }

// Lowest-index alive vertex of minimum degree, if that degree is <= 3.
int vertex_rule_candidate(const OrientedGraph& h, const std::vector<char>& alive) {
  int best = -1;
  for (int v = 0; v < h.order(); ++v) {
    if (alive[v] == 0 || h.degree(v) > P::kVertexRuleMaxDegree) continue;
    if (best < 0 || h.degree(v) < h.degree(best)) best = v;
  }
  return best;
}

std::optional<Edge> edge_rule_candidate(const OrientedGraph& h, const std::vector<char>& alive) {
  for (int v = 0; v < h.order(); ++v) {
    if (alive[v] == 0 || !is_low(h.degree(v))) continue;
    for (int w : h.neighbour_list(v)) {
      if (h.degree(w) < P::kHighDegreeMin) return Edge{v, w};
    }
  }
  return std::nullopt;
}

Arc arc_between(const OrientedGraph& h, int u, int v) { return h.has_arc(u, v) ? Arc{u, v} : Arc{v, u}; }

}  // namespace

ReductionResult reduce(const OrientedGraph& g) {
  ReductionResult result;
  OrientedGraph h = g;
  std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  for (;;) {
    if (const int v = vertex_rule_candidate(h, alive); v >= 0) {
      ReductionStep step;
      step.kind = ReductionKind::kRemoveLowDegreeVertex;
      step.vertex = v;
      step.vertex_degree = h.degree(v);
      const std::vector<int> nb = h.neighbour_list(v);
      for (int u : nb) step.removed_arcs.push_back(arc_between(h, v, u));
      for (const Arc& a : step.removed_arcs) h.remove_arc(a.from, a.to);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          if (!h.adjacent(nb[i], nb[j])) {
            h.add_arc(nb[i], nb[j]);
            step.completion_arcs.push_back({nb[i], nb[j]});
          }
        }
      }
      alive[v] = 0;
      result.steps.push_back(std::move(step));
      continue;
    }
    const auto edge = edge_rule_candidate(h, alive);
    if (!edge) break;
    ReductionStep step;
    step.kind = ReductionKind::kRemoveLowDegreeEdge;
    step.vertex = edge->u;
    step.other = edge->v;
    step.vertex_degree = h.degree(edge->u);
    step.other_degree = h.degree(edge->v);
    step.removed_arcs.push_back(arc_between(h, edge->u, edge->v));
    h.remove_edge(edge->u, edge->v);
    result.steps.push_back(std::move(step));
  }
  for (int v = 0; v < g.order(); ++v) {
    if (alive[v] != 0) result.core_vertices.push_back(v);
  }
  result.core = h.induced(result.core_vertices);
  result.reduced = std::move(h);
  return result;
}

bool is_reduced(const OrientedGraph& g) {
  const std::vector<char> alive(static_cast<std::size_t>(g.order()), 1);
  return vertex_rule_candidate(g, alive) < 0 && !edge_rule_candidate(g, alive);
}

Charge ChargeLedger::initial_sum() const { return std::accumulate(initial.begin(), initial.end(), Charge(0)); }

Charge ChargeLedger::final_sum() const { return std::accumulate(final.begin(), final.end(), Charge(0)); }

DischargeResult discharge_check(const OrientedGraph& core, int genus) {
  if (!is_reduced(core)) throw Error(ErrorCode::kNotReduced, "discharging needs a fully reduced core");
  DischargeResult result;
  ChargeLedger& ledger = result.ledger;
  const int n = core.order();
  for (int v = 0; v < n; ++v) ledger.initial.emplace_back(core.degree(v) - 6);
  ledger.final = ledger.initial;
  for (int v = 0; v < n; ++v) {
    const int d = core.degree(v);
    if (!is_low(d)) continue;
    const Charge amount = d == P::kLowDegreeMin ? Charge(1, 2) : Charge(1, 5);
    for (int u : core.neighbour_list(v)) {
      ledger.transfers.push_back({u, v, amount});
      ledger.final[u] -= amount;
      ledger.final[v] += amount;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (ledger.final[v] < 0) throw std::logic_error("negative final charge at vertex " + std::to_string(v));
  }
  result.max_degree = core.max_degree();
  result.max_degree_ok = result.max_degree <= SurfaceParams{genus}.max_degree_bound();
  return result;
}

std::size_t Homomorphism::distinct_images() const {
  std::unordered_set<TargetVertex, TargetVertexHash> seen;
  for (const auto& img : image) {
    if (img) seen.insert(*img);
  }
  return seen.size();
}

void embed_small(const OrientedGraph& g, std::span<const int> vertices, Target& target, Homomorphism& hom) {
  if (static_cast<std::int64_t>(vertices.size()) > target.pool_capacity()) {
    throw Error(ErrorCode::kCapacityExceeded, std::to_string(vertices.size()) + " vertices do not fit a pool of " +
                                                  std::to_string(target.pool_capacity()));
  }
  if (target.pool_has_arcs()) throw Error(ErrorCode::kPreconditionViolated, "the pool already carries arcs");
  std::vector<int> slot(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    slot[vertices[i]] = static_cast<int>(i);
    hom.image[vertices[i]] = target.pool_vertex(static_cast<std::int64_t>(i));
  }
  for (const Arc& a : g.arcs()) {
    if (slot[a.from] >= 0 && slot[a.to] >= 0) target.install_pool_arc(hom[a.from], hom[a.to]);
  }
}

Homomorphism embed_small(const OrientedGraph& g, Target& target) {
  Homomorphism hom(g.order());
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  embed_small(g, all, target, hom);
  return hom;
}

TargetVertex extend_vertex(const OrientedGraph& g, Homomorphism& hom, int v, int cls, Target& target,
                           std::span<const TargetVertex> exclude) {
  std::vector<Constraint> constraints;
  std::unordered_map<TargetVertex, int, TargetVertexHash> seen;
  for (int u : g.neighbour_list(v)) {
    if (!hom.mapped(u)) continue;
    const int sign = g.sign(v, u);
    const auto [it, inserted] = seen.emplace(hom[u], sign);
    if (!inserted) {
      if (it->second != sign) {
        throw Error(ErrorCode::kConstraintConflict,
                    "neighbours of " + std::to_string(v) + " share an image with opposite orientations");
      }
      continue;
    }
    constraints.push_back({hom[u], sign});
  }
  if (const auto arity = target.arity(); arity && static_cast<int>(constraints.size()) > *arity) {
    throw Error(ErrorCode::kArityExceeded, "vertex " + std::to_string(v) + " carries " +
                                               std::to_string(constraints.size()) + " constraints, arity is " +
                                               std::to_string(*arity));
  }
  const auto found = target.query(cls, constraints, exclude);
  if (!found) {
    throw Error(ErrorCode::kNoRealizer, "class " + std::to_string(cls) + " has no realizer for vertex " +
                                            std::to_string(v));
  }
  hom.image[v] = *found;
  return *found;
}

bool validate_homomorphism(const OrientedGraph& g, const Homomorphism& hom, Target& target, bool partial) {
  if (hom.image.size() != static_cast<std::size_t>(g.order())) return false;
  std::unordered_set<TargetVertex, TargetVertexHash> pool_used;
  for (int v = 0; v < g.order(); ++v) {
    if (!hom.mapped(v)) {
      if (!partial) return false;
      continue;
    }
    if (hom[v].cls == 0 && !pool_used.insert(hom[v]).second) return false;
  }
  try {
    for (const Arc& a : g.arcs()) {
      if (!hom.mapped(a.from) || !hom.mapped(a.to)) continue;
      if (target.arc_sign(hom[a.from], hom[a.to]) != 1) return false;
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

namespace {

// Lowest free class holding none of the images of `vertices`.
int lowest_free_class(const Homomorphism& hom, const std::vector<int>& vertices, const Target& target) {
  std::set<int> used;
  for (int u : vertices) {
    if (hom.mapped(u)) used.insert(hom[u].cls);
  }
  for (int cls = 1; cls <= target.free_classes(); ++cls) {
    if (!used.contains(cls)) return cls;
  }
  throw Error(ErrorCode::kCapacityExceeded, "every free class meets the neighbour images");
}

std::vector<int> without(std::vector<int> vertices, int drop) {
  vertices.erase(std::remove(vertices.begin(), vertices.end(), drop), vertices.end());
  return vertices;
}

void require_valid(bool ok, const std::string& where) {
  if (!ok) throw std::logic_error("homomorphism check failed " + where);
}

std::string describe_vertex(const TargetVertex& t) {
  return "(" + std::to_string(t.cls) + "," + std::to_string(t.index) + ")";
}

}  // namespace

PipelineResult colour_surface_graph(const OrientedGraph& g, int genus, Target& target, const PipelineOptions& options) {
  if (genus < 0) throw Error(ErrorCode::kDomainError, "Euler genus cannot be negative");
  const SurfaceParams params{std::max(genus, 2)};
  PipelineResult result;
  result.genus = params.genus;
  auto log = [&](const std::string& line) {
    if (options.trace) result.trace.push_back(line);
  };

  // (a) reduce
  ReductionResult red = reduce(g);
  result.reduction_steps = red.steps.size();
  result.core_size = red.core_vertices.size();
  if (options.trace) {
    for (const ReductionStep& s : red.steps) {
      if (s.kind == ReductionKind::kRemoveLowDegreeVertex) {
        log("reduce vertex " + std::to_string(s.vertex) + " deg " + std::to_string(s.vertex_degree) + " completions " +
            std::to_string(s.completion_arcs.size()));
      } else {
        log("reduce edge " + std::to_string(s.vertex) + "-" + std::to_string(s.other) + " deg " +
            std::to_string(s.vertex_degree) + "/" + std::to_string(s.other_degree));
      }
    }
  }

  // (b) the core must respect the degree bound implied by the genus
  const OrientedGraph& core = red.core;
  result.discharge = discharge_check(core, params.genus);
  if (!result.discharge->max_degree_ok) {
    throw Error(ErrorCode::kGenusAssumptionViolated,
                "core has maximum degree " + std::to_string(result.discharge->max_degree) + " > 12g-12 = " +
                    std::to_string(params.max_degree_bound()));
  }

  // (c)-(e) embed the core
  const VertexOrdering ord = degeneracy_ordering(core);
  Homomorphism core_hom(core.order());
  const auto small = static_cast<std::size_t>(params.small_order());
  std::vector<int> psi;
  if (ord.order.size() <= small) {
    if (core.order() > 0) embed_small(core, ord.order, target, core_hom);
    log("core " + std::to_string(core.order()) + " vertices embedded in the pool");
  } else {
    DipathColouring colouring;
    try {
      colouring = surface_two_dipath(core, params.genus, ord);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDegeneracyViolation) throw;
      throw Error(ErrorCode::kGenusAssumptionViolated, e.what());
    }
    result.psi_palette = colouring.palette_size;
    if (colouring.palette_size > target.free_classes()) {
      throw Error(ErrorCode::kCapacityExceeded, "psi needs " + std::to_string(colouring.palette_size) +
                                                    " free classes, target has " +
                                                    std::to_string(target.free_classes()));
    }
    psi = colouring.colours;
    embed_small(core, std::span<const int>(ord.order.data(), small), target, core_hom);
    for (std::size_t i = small; i < ord.order.size(); ++i) {
      const int v = ord.order[i];
      extend_vertex(core, core_hom, v, psi[v], target);
    }
    log("core " + std::to_string(core.order()) + " vertices, psi palette " + std::to_string(colouring.palette_size));
  }
  result.core_structure_ok = true;
  for (std::size_t i = 0; i < ord.order.size(); ++i) {
    const int v = ord.order[i];
    const int expected = i < small ? 0 : psi[v];
    if (core_hom[v].cls != expected) result.core_structure_ok = false;
  }
  if (options.debug_checks) require_valid(validate_homomorphism(core, core_hom, target), "on the core");

  // (f) undo the reductions
  Homomorphism& hom = result.hom;
  hom = Homomorphism(g.order());
  for (std::size_t i = 0; i < red.core_vertices.size(); ++i) {
    hom.image[red.core_vertices[i]] = core_hom.image[i];
  }
  OrientedGraph current = std::move(red.reduced);
  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    const ReductionStep& s = *it;
    if (s.kind == ReductionKind::kRemoveLowDegreeVertex) {
      for (const Arc& a : s.completion_arcs) current.remove_arc(a.from, a.to);
      for (const Arc& a : s.removed_arcs) current.add_arc(a.from, a.to);
      const int cls = lowest_free_class(hom, current.neighbour_list(s.vertex), target);
      const TargetVertex img = extend_vertex(current, hom, s.vertex, cls, target);
      log("restore vertex " + std::to_string(s.vertex) + " -> " + describe_vertex(img));
    } else {
      const int v = s.vertex;
      const int w = s.other;
      current.add_arc(s.removed_arcs.front().from, s.removed_arcs.front().to);
      hom.image[v].reset();
      std::vector<TargetVertex> avoid;
      for (int u : without(current.neighbour_list(v), w)) avoid.push_back(hom[u]);
      const int cls_w = lowest_free_class(hom, without(current.neighbour_list(w), v), target);
      const TargetVertex img_w = extend_vertex(current, hom, w, cls_w, target, avoid);
      const int cls_v = lowest_free_class(hom, current.neighbour_list(v), target);
      const TargetVertex img_v = extend_vertex(current, hom, v, cls_v, target);
      log("restore edge " + std::to_string(v) + "-" + std::to_string(w) + " -> " + describe_vertex(img_v) + " " +
          describe_vertex(img_w));
    }
    if (options.debug_checks) require_valid(validate_homomorphism(current, hom, target, true), "after a replay step");
  }
  if (!(current == g)) throw std::logic_error("replay did not rebuild the input graph");

  // (g)
  result.valid = validate_homomorphism(g, hom, target);
  result.colours_used = hom.distinct_images();
  log("valid " + std::string(result.valid ? "true" : "false") + " colours " + std::to_string(result.colours_used));
  return result;
}

nlohmann::json pipeline_result_to_json(const PipelineResult& r) {
  return {{"valid", r.valid},
          {"colours_used", r.colours_used},
          {"reduction_steps", r.reduction_steps},
          {"core_size", r.core_size},
          {"psi_palette", r.psi_palette}};
}

}  // namespace orichrome
