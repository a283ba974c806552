#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "siegel/spaces.hpp"

namespace siegel {

using Rng = std::mt19937_64;

/// num / den with num uniform in [-num_range, num_range], den in [1, max_den].
Scalar random_rational(Rng& rng, int num_range, int max_den);

/// Generators of Sp(2 g0, Z): J, J^-1 and the translations [[Id, +-S], [0, Id]]
/// for S running over the elementary symmetric integer matrices.
std::vector<Matrix> sp_generators(int g0);

/// Generators of the G subgroup for the even single-oval locus of genus 2 g0:
/// the first-family embeddings of sp_generators(g0) plus the second-family
/// embedding of the identity.
std::vector<Matrix> g_generators(int g0);

/// Product of `length` generators drawn uniformly.
Matrix random_word(Rng& rng, const std::vector<Matrix>& generators, std::size_t length);

/// Product of elementary unimodular moves and sign flips with small entries.
Matrix random_unimodular(Rng& rng, std::size_t n, std::size_t moves);

/// Random rational symmetric positive definite matrix L^T L + D.
Matrix random_spd(Rng& rng, std::size_t n, int entry_range = 3, int max_den = 3);

/// Genus-two locus point with rational beta, gamma, delta.
SiegelPoint random_w21(Rng& rng);

/// Genus-four locus point sigma_inverse(q_map(s)) for a random rational s > 0.
SiegelPoint random_w41(Rng& rng);

}  // namespace siegel
