#include "helixkit/helix/sampling.hpp"

#include <algorithm>
#include <array>

namespace helixkit {

ChernVector random_simple(std::mt19937_64& rng, long max_rank, long max_degree) {
  std::uniform_int_distribution<long> rank_dist(1, max_rank);
  std::uniform_int_distribution<long> deg_dist(-max_degree, max_degree);
  for (;;) {
    ChernVector c(rank_dist(rng), deg_dist(rng));
    if (c.is_simple()) return c;
  }
}

std::pair<ChernVector, ChernVector> random_ordered_pair(std::mt19937_64& rng) {
  for (;;) {
    ChernVector e = random_simple(rng);
    ChernVector f = random_simple(rng);
    if (e.slope() < f.slope()) return {e, f};
    if (f.slope() < e.slope()) return {f, e};
  }
}

std::optional<Triad> random_right_mutable_triad(std::mt19937_64& rng, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    std::array<ChernVector, 3> v{random_simple(rng), random_simple(rng), random_simple(rng)};
    std::sort(v.begin(), v.end(), [](const ChernVector& x, const ChernVector& y) { return x.slope() < y.slope(); });
    if (!(v[0].slope() < v[1].slope() && v[1].slope() < v[2].slope())) continue;
    Triad t(v[0], v[1], v[2]);
    const BigInt rc = t.c().rank();
    if (hom_dim(t.a(), t.c()) * rc > t.a().rank() && hom_dim(t.b(), t.c()) * rc > t.b().rank()) return t;
  }
  return std::nullopt;
}

Seed random_seed(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 6);
  for (;;) {
    std::array<Rational, 3> v{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                              Rational(num(rng), den(rng))};
    std::sort(v.begin(), v.end());
    if (v[0] < v[1] && v[1] < v[2]) return Seed(v[0], v[1], v[2]);
  }
}

std::optional<Seed> random_nondegenerate_seed(std::mt19937_64& rng, std::size_t horizon, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    Seed s = random_seed(rng);
    if (!invariants_from_seed(s, horizon).degenerate()) return s;
  }
  return std::nullopt;
}

}  // namespace helixkit
