#pragma once

// Test-only data and oracles. Nothing here calls the solver, the
// supervaluation code or the model builders; the oracles re-derive their
// answers by exhaustive enumeration.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kslogic/linalg.hpp"
#include "kslogic/model.hpp"
#include "kslogic/valuation.hpp"

namespace kslogic::testing {

/// The twelve matrices exactly as printed for C_z, C_x, C_y, keyed by label.
std::map<std::string, ExactMatrix> literal_set_o_matrices();

/// Labels of C_z, C_x, C_y in printed order.
std::vector<std::string> literal_labels();

/// Number of {0,1} assignments to the distinct matrices of the set with
/// exactly one true member per context and no true orthogonal pair.
/// Variables are identified by exact matrix equality. 2^n enumeration.
std::size_t brute_force_coloring_count(const OperatorSet& set);

/// Number of distinct matrices among all members.
std::size_t distinct_matrix_count(const OperatorSet& set);

/// Supervaluation by filtering all 2^n raw assignments of the context.
SuperVerdict brute_force_supervaluation(const PartialBivalentValuation& v, const Context& c, const Formula& f,
                                        std::size_t* completions = nullptr);

/// Random set of at most max_contexts valid contexts in dimension
/// [2, max_dim], built from coordinate rays, rotated pairs and rank-2
/// blocks so that rays are shared and orthogonal across contexts.
OperatorSet random_small_set(std::mt19937& rng, std::size_t max_dim, std::size_t max_contexts);

/// Random matrix with small Gaussian-integer / half-integer entries.
ExactMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_bias = 0);
GaussianRational random_scalar(std::mt19937& rng);

std::string read_file(const std::string& path);

}  // namespace kslogic::testing
