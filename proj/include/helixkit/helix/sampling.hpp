#ifndef HELIXKIT_HELIX_SAMPLING_HPP
#define HELIXKIT_HELIX_SAMPLING_HPP

#include <optional>
#include <random>
#include <utility>

#include "helixkit/bundles/chern.hpp"
#include "helixkit/helix/helix.hpp"

namespace helixkit {

// Deterministic generators for randomized property runs.

/// Simple bundle with rank in [1, max_rank] and |degree| <= max_degree.
ChernVector random_simple(std::mt19937_64& rng, long max_rank = 7, long max_degree = 25);

/// Simple pair with mu(first) < mu(second).
std::pair<ChernVector, ChernVector> random_ordered_pair(std::mt19937_64& rng);

/// Triad whose right mutation is defined; gives up after `attempts` draws.
std::optional<Triad> random_right_mutable_triad(std::mt19937_64& rng, int attempts = 1000);

/// Seed with numerators in [-30, 30] and denominators in [1, 6].
Seed random_seed(std::mt19937_64& rng);

/// Random seed whose table stays non-degenerate up to `horizon`.
std::optional<Seed> random_nondegenerate_seed(std::mt19937_64& rng, std::size_t horizon, int attempts = 1000);

}  // namespace helixkit

#endif  // HELIXKIT_HELIX_SAMPLING_HPP
