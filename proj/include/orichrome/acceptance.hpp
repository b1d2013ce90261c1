#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orichrome/graph.hpp"

namespace orichrome {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Regression values of the minimum arc count of an oriented clique, computed
// by the exhaustive search and frozen.
inline constexpr int kFrozenMinCliqueArcs3 = 2;
inline constexpr int kFrozenMinCliqueArcs4 = 4;

struct PipelineInstance {
  std::string name;
  OrientedGraph graph;
  int genus = 2;
};

// Instance i of the pipeline suite: toroidal grids (plain and triangulated),
// planar triangulations and random 3-degenerate subgraphs of planar or
// toroidal triangulations, randomly oriented, with asserted genus 2 + i % 4.
PipelineInstance pipeline_instance(int i, std::uint64_t seed);
inline constexpr int kPipelineInstances = 200;

// Deterministic text reports used for the repeat-run comparison: one JSON
// line per sampled target, and one per pipeline instance.
std::string sampling_report(std::uint64_t seed);
std::string pipeline_report(std::uint64_t seed);

// Runs criteria 1..9 in order, calling `on_result` as each one finishes.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace orichrome
