#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>
#include <nlohmann/json.hpp>

#include "orichrome/graph.hpp"
#include "orichrome/surface_params.hpp"
#include "orichrome/target.hpp"

namespace orichrome {

enum class ReductionKind { kRemoveLowDegreeVertex, kRemoveLowDegreeEdge };

struct ReductionStep {
  ReductionKind kind = ReductionKind::kRemoveLowDegreeVertex;
  // Removed vertex, or the degree-4/5 endpoint of the removed edge.
  int vertex = -1;
  // Other endpoint of the removed edge; -1 for vertex steps.
  int other = -1;
  // Arcs that disappeared with the step (all arcs at `vertex`, or the one edge).
  std::vector<Arc> removed_arcs;
  // Arcs added between former neighbours of a removed vertex.
  std::vector<Arc> completion_arcs;
  int vertex_degree = 0;
  int other_degree = 0;
};

struct ReductionResult {
  // Surviving vertices (original ids, ascending) and the graph they induce
  // after all completions, relabelled 0..|core|-1 in that order.
  std::vector<int> core_vertices;
  OrientedGraph core;
  // The reduced graph on the original vertex ids (removed vertices isolated).
  OrientedGraph reduced;
  std::vector<ReductionStep> steps;
};

// Removes a minimum-degree vertex while some vertex has degree <= 3 (lowest
// index on ties), first completing its neighbourhood to a tournament with
// arcs from lower to higher index. When no such vertex exists, removes the
// edge between the lowest-index vertex v of degree 4 or 5 that has a
// neighbour of degree < 12 and its lowest-index such neighbour, then starts
// over. Stops when neither rule applies.
ReductionResult reduce(const OrientedGraph& g);

// Neither reduction rule applies.
bool is_reduced(const OrientedGraph& g);

using Charge = boost::rational<long long>;

struct ChargeTransfer {
  int from = 0;
  int to = 0;
  Charge amount;
};

struct ChargeLedger {
  std::vector<Charge> initial;
  std::vector<Charge> final;
  std::vector<ChargeTransfer> transfers;

  Charge initial_sum() const;
  Charge final_sum() const;
};

struct DischargeResult {
  ChargeLedger ledger;
  int max_degree = 0;
  // Max degree <= 12g - 12.
  bool max_degree_ok = true;
};

// Charges deg(v) - 6; every neighbour of a degree-4 vertex sends it 1/2 and
// every neighbour of a degree-5 vertex sends it 1/5. Throws kNotReduced if
// `core` is not reduced and std::logic_error if some final charge is negative.
DischargeResult discharge_check(const OrientedGraph& core, int genus);

struct Homomorphism {
  std::vector<std::optional<TargetVertex>> image;

  Homomorphism() = default;
  explicit Homomorphism(int n) : image(static_cast<std::size_t>(n)) {}

  bool mapped(int v) const { return image[static_cast<std::size_t>(v)].has_value(); }
  const TargetVertex& operator[](int v) const { return *image[static_cast<std::size_t>(v)]; }
  std::size_t distinct_images() const;
};

// Maps vertices[i] to pool vertex i and installs the arcs of g among them in
// the pool. Throws kCapacityExceeded if the pool is too small and
// kPreconditionViolated if the pool already carries arcs.
void embed_small(const OrientedGraph& g, std::span<const int> vertices, Target& target, Homomorphism& hom);
// All of g into the pool.
Homomorphism embed_small(const OrientedGraph& g, Target& target);

// Maps v into class `cls` so that every arc between v and an already mapped
// neighbour is preserved, avoiding `exclude`. Constraints are deduplicated by
// image. Throws kConstraintConflict if two neighbours share an image with
// opposite orientations, kArityExceeded, kClassCollision, and kNoRealizer if
// the target has no suitable vertex.
TargetVertex extend_vertex(const OrientedGraph& g, Homomorphism& hom, int v, int cls, Target& target,
                           std::span<const TargetVertex> exclude = {});

// Every arc between mapped vertices lands on a target arc of the same
// direction, every vertex of g is mapped, and pool images are pairwise
// distinct. With `partial`, unmapped vertices and their arcs are skipped.
bool validate_homomorphism(const OrientedGraph& g, const Homomorphism& hom, Target& target, bool partial = false);

struct PipelineOptions {
  // Validate the partial map after every replay step.
  bool debug_checks = false;
  bool trace = false;
};

struct PipelineResult {
  Homomorphism hom;
  bool valid = false;
  int genus = 0;
  std::size_t colours_used = 0;
  std::size_t reduction_steps = 0;
  std::size_t core_size = 0;
  int psi_palette = 0;
  // First 6g core vertices in the pool, the rest in class psi(v).
  bool core_structure_ok = false;
  std::optional<DischargeResult> discharge;
  std::vector<std::string> trace;
};

// Colours an oriented graph of Euler genus at most `genus` into `target`:
// reduce, check the core against the genus, embed it (pool prefix plus
// psi-classes from the surface 2-dipath colouring), then undo the reductions
// in reverse order. A genus below 2 is treated as 2. Throws
// kGenusAssumptionViolated when the core contradicts the asserted genus, and
// kCapacityExceeded when the target lacks the classes or pool room needed.
PipelineResult colour_surface_graph(const OrientedGraph& g, int genus, Target& target,
                                    const PipelineOptions& options = {});

// {"valid","colours_used","reduction_steps","core_size","psi_palette"}.
nlohmann::json pipeline_result_to_json(const PipelineResult& r);

}  // namespace orichrome
