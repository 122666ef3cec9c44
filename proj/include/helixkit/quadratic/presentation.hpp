#ifndef HELIXKIT_QUADRATIC_PRESENTATION_HPP
#define HELIXKIT_QUADRATIC_PRESENTATION_HPP

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "helixkit/exact/matrix.hpp"
#include "helixkit/exact/rational.hpp"

namespace helixkit {

inline constexpr std::size_t kDefaultDimCap = 1'000'000;

/// Z-indexed quadratic algebra over a single field, given by generators
/// V_i = A_{i,i+1} of dimension g_i and relations I_i in V_i (x) V_{i+1}.
/// All data repeats with the period p; index i is read modulo p.
///
/// Tensor basis convention: u_a (x) w_b has coordinate a * g_{i+1} + b, and the dual
/// space is paired by <f (x) g, u (x) w> = f(u) g(w), so dual coordinates use the
/// same ordering. Relations are stored as rows in that basis.
class QuadraticPresentation {
public:
  /// Throws InvalidPresentation when shapes disagree or relation rows are dependent.
  QuadraticPresentation(std::vector<std::size_t> gen_dims, std::vector<RationalMatrix> relations);

  std::size_t period() const { return gen_dims_.size(); }
  std::size_t gen_dim(std::size_t i) const { return gen_dims_[i % period()]; }
  const std::vector<std::size_t>& gen_dims() const { return gen_dims_; }
  const RationalMatrix& relations(std::size_t i) const { return relations_[i % period()]; }
  std::size_t tensor_dim(std::size_t i) const { return gen_dim(i) * gen_dim(i + 1); }

  friend bool operator==(const QuadraticPresentation&, const QuadraticPresentation&) = default;

private:
  std::vector<std::size_t> gen_dims_;
  std::vector<RationalMatrix> relations_;
};

/// dims[i][n] = dim A_{i,i+n} for 0 <= i < period, 0 <= n <= max_degree.
struct DimTable {
  std::size_t period = 1;
  std::size_t max_degree = 0;
  std::vector<std::vector<BigInt>> dims;

  const BigInt& at(std::size_t i, std::size_t n) const { return dims[i % period][n]; }
  /// zero beyond the tabulated range
  BigInt at_or_zero(std::size_t i, std::size_t n) const {
    return n <= max_degree ? at(i, n) : BigInt(0);
  }
};

/// Relations replaced by their annihilators in the dual tensor square.
QuadraticPresentation koszul_dual(const QuadraticPresentation& p);

/// Row-space equality of koszul_dual(koszul_dual(p)) with p at every index.
bool double_dual_check(const QuadraticPresentation& p);

/// dim A_{i,i+n} = prod g - dim(sum_a T^a (x) I (x) T^b), by exact stacked rank.
/// Throws DimensionCapExceeded when a tensor power exceeds `cap`.
DimTable degree_dims(const QuadraticPresentation& p, std::size_t max_degree, std::size_t cap = kDefaultDimCap);

struct WitnessEntry {
  std::size_t j = 0;  // offset class
  std::size_t q = 0;  // absolute target index, q - j <= D
  BigInt sum;         // sum_l (-1)^l dim !A_{j+l,j} dim A_{j+l,q}
  bool pass = false;
};

/// Necessary Euler-characteristic condition for Koszulity. An all-pass result is
/// only a witness; exactness of the Koszul complex is not decided.
struct KoszulityWitness {
  std::vector<WitnessEntry> entries;
  bool all_pass = true;
  std::string label() const { return all_pass ? "witness" : "violated"; }
};

/// `primal` and `dual` must have the same period and cover degrees <= max_offset.
KoszulityWitness witness_from_dims(const DimTable& primal, const DimTable& dual, std::size_t max_offset);

KoszulityWitness koszulity_witness(const QuadraticPresentation& p, std::size_t max_offset,
                                   std::size_t cap = kDefaultDimCap);

struct ClassicalFixture {
  QuadraticPresentation presentation;
  std::vector<BigInt> expected_dual_dims;  // C(n+1, l), l = 0..n+1
};

/// Polynomial ring on n+1 variables with commutator relations, 1 <= n <= 4.
ClassicalFixture classical_euler_fixture(std::size_t n);

/// Free algebra on g generators (no relations).
QuadraticPresentation free_presentation(std::size_t g);

/// Random presentation: period 1..max_period, g_i in 1..max_gen, random independent
/// relation rows with small integer entries.
QuadraticPresentation random_presentation(std::mt19937_64& rng, std::size_t max_gen = 4,
                                          std::size_t max_period = 3);

}  // namespace helixkit

#endif  // HELIXKIT_QUADRATIC_PRESENTATION_HPP
