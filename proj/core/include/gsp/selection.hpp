#pragma once

#include <cstdint>

#include "gsp/sets.hpp"
#include "gsp/spectral.hpp"

namespace gsp {

enum class SelectionMethod { random, greedy_bdc_norm, greedy_g_conditioning };

const char* selection_method_name(SelectionMethod m);

/// A chosen sampling set and the criterion value it achieved. `feasible`
/// records whether the sampling condition holds for (S, F); `score` is
/// ||B D^c||_2 for random and greedy-bdc selections and the smallest singular
/// value of the localization matrix for greedy-g.
struct SelectionResult {
  VertexSet S;
  double score = 0.0;
  SelectionMethod method = SelectionMethod::random;
  bool feasible = false;
};

/// Uniform random m-subset of {0..n-1}; identical seeds give identical sets.
VertexSet random_vertex_set(int n, int m, std::uint64_t seed);

SelectionResult select_random(const GftBasis& basis, const FrequencySet& f, int m,
                              std::uint64_t seed);

/// Forward greedy: each step adds the vertex minimizing ||B D^c||_2 of the
/// grown set, ties broken by smallest vertex index.
SelectionResult select_greedy_min_bdc(const GftBasis& basis, const FrequencySet& f, int m);

/// Forward greedy on the localization matrix: each step adds the vertex
/// maximizing its smallest singular value. The value is 0 by shape whenever
/// |S| exceeds the matrix's row count; early rank-deficient steps are
/// permitted and resolved by the index tie-break.
SelectionResult select_greedy_maxcond_g(const GftBasis& basis, const FrequencySet& f, int m);

}  // namespace gsp
