#include "helixkit/quadratic/presentation.hpp"

#include <string>

#include "helixkit/error.hpp"

namespace helixkit {

QuadraticPresentation::QuadraticPresentation(std::vector<std::size_t> gen_dims,
                                             std::vector<RationalMatrix> relations)
    : gen_dims_(std::move(gen_dims)), relations_(std::move(relations)) {
  if (gen_dims_.empty()) throw Error(Errc::InvalidPresentation, "period must be positive");
  for (std::size_t g : gen_dims_)
    if (g == 0) throw Error(Errc::InvalidPresentation, "generator dimensions must be positive");
  if (relations_.empty()) relations_.resize(period());
  if (relations_.size() != period())
    throw Error(Errc::InvalidPresentation, "need one relation block per index in the period");
  for (std::size_t i = 0; i < period(); ++i) {
    RationalMatrix& rel = relations_[i];
    if (rel.rows() == 0 && rel.cols() == 0) rel = RationalMatrix(0, tensor_dim(i));
    if (rel.cols() != tensor_dim(i))
      throw Error(Errc::InvalidPresentation, "relations at index " + std::to_string(i) + " have " +
                                                 std::to_string(rel.cols()) + " columns, expected " +
                                                 std::to_string(tensor_dim(i)));
    if (rank(rel) != rel.rows())
      throw Error(Errc::InvalidPresentation, "relations at index " + std::to_string(i) + " are linearly dependent");
  }
}

QuadraticPresentation koszul_dual(const QuadraticPresentation& p) {
  std::vector<RationalMatrix> rel;
  rel.reserve(p.period());
  for (std::size_t i = 0; i < p.period(); ++i) rel.push_back(annihilator(p.relations(i), p.tensor_dim(i)));
  return QuadraticPresentation(p.gen_dims(), std::move(rel));
}

bool double_dual_check(const QuadraticPresentation& p) {
  QuadraticPresentation dd = koszul_dual(koszul_dual(p));
  for (std::size_t i = 0; i < p.period(); ++i)
    if (!same_row_space(dd.relations(i), p.relations(i))) return false;
  return true;
}

namespace {

BigInt dim_in_degree(const QuadraticPresentation& p, std::size_t i, std::size_t n, std::size_t cap) {
  std::vector<std::size_t> g(n);
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    g[k] = p.gen_dim(i + k);
    if (total > cap / g[k])
      throw Error(Errc::DimensionCapExceeded, "tensor dimension at index " + std::to_string(i) + ", degree " +
                                                  std::to_string(n) + " exceeds cap " + std::to_string(cap));
    total *= g[k];
  }
  if (n < 2) return BigInt(static_cast<unsigned long>(total));

  SparseEchelon span(total);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    const RationalMatrix& rel = p.relations(i + a);
    std::size_t left = 1, right = 1;
    for (std::size_t k = 0; k < a; ++k) left *= g[k];
    for (std::size_t k = a + 2; k < n; ++k) right *= g[k];
    const std::size_t pair = g[a] * g[a + 1];
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      auto coeffs = rel.row(r);
      for (std::size_t l = 0; l < left; ++l) {
        for (std::size_t rr = 0; rr < right; ++rr) {
          SparseRow row;
          for (std::size_t c = 0; c < pair; ++c)
            if (!coeffs[c].is_zero()) row.emplace_back((l * pair + c) * right + rr, coeffs[c]);
          span.insert(std::move(row));
          if (span.rank() == total) return BigInt(0);
        }
      }
    }
  }
  return BigInt(static_cast<unsigned long>(total - span.rank()));
}

}  // namespace

DimTable degree_dims(const QuadraticPresentation& p, std::size_t max_degree, std::size_t cap) {
  DimTable t;
  t.period = p.period();
  t.max_degree = max_degree;
  t.dims.assign(p.period(), std::vector<BigInt>(max_degree + 1));
  for (std::size_t i = 0; i < p.period(); ++i) {
    bool vanished = false;
    for (std::size_t n = 0; n <= max_degree; ++n) {
      // a quadratic algebra that vanishes in degree n vanishes in all higher degrees
      t.dims[i][n] = vanished ? BigInt(0) : dim_in_degree(p, i, n, cap);
      vanished = t.dims[i][n] == 0;
    }
  }
  return t;
}

KoszulityWitness witness_from_dims(const DimTable& primal, const DimTable& dual, std::size_t max_offset) {
  if (primal.period != dual.period)
    throw Error(Errc::InvalidArgument, "primal and dual dimension tables have different periods");
  if (primal.max_degree < max_offset || dual.max_degree < max_offset)
    throw Error(Errc::InvalidArgument, "dimension tables do not reach the requested offset");
  KoszulityWitness w;
  for (std::size_t j = 0; j < primal.period; ++j) {
    for (std::size_t k = 0; k <= max_offset; ++k) {
      BigInt sum = 0;
      for (std::size_t l = 0; l <= k; ++l) {
        BigInt term = dual.at(j, l) * primal.at(j + l, k - l);
        if (l % 2) sum -= term;
        else sum += term;
      }
      bool pass = sum == (k == 0 ? 1 : 0);
      w.all_pass = w.all_pass && pass;
      w.entries.push_back({j, j + k, std::move(sum), pass});
    }
  }
  return w;
}

KoszulityWitness koszulity_witness(const QuadraticPresentation& p, std::size_t max_offset, std::size_t cap) {
  DimTable primal = degree_dims(p, max_offset, cap);
  DimTable dual = degree_dims(koszul_dual(p), max_offset, cap);
  return witness_from_dims(primal, dual, max_offset);
}

ClassicalFixture classical_euler_fixture(std::size_t n) {
  if (n < 1 || n > 4) throw Error(Errc::InvalidArgument, "classical fixture needs 1 <= n <= 4");
  const std::size_t vars = n + 1;
  RationalMatrix rel(0, vars * vars);
  std::vector<Rational> row(vars * vars);
  for (std::size_t a = 0; a < vars; ++a) {
    for (std::size_t b = a + 1; b < vars; ++b) {
      std::fill(row.begin(), row.end(), Rational(0));
      row[a * vars + b] = Rational(1);
      row[b * vars + a] = Rational(-1);
      rel.append_row(row);
    }
  }
  std::vector<BigInt> binom(vars + 1);
  for (std::size_t l = 0; l <= vars; ++l) mpz_bin_uiui(binom[l].get_mpz_t(), vars, l);
  return {QuadraticPresentation({vars}, {rel}), std::move(binom)};
}

QuadraticPresentation free_presentation(std::size_t g) {
  return QuadraticPresentation({g}, {RationalMatrix(0, g * g)});
}

QuadraticPresentation random_presentation(std::mt19937_64& rng, std::size_t max_gen, std::size_t max_period) {
  std::uniform_int_distribution<std::size_t> period_dist(1, max_period);
  std::uniform_int_distribution<std::size_t> gen_dist(1, max_gen);
  std::uniform_int_distribution<long> entry_dist(-2, 2);
  std::bernoulli_distribution sparse(0.5);

  const std::size_t period = period_dist(rng);
  std::vector<std::size_t> gens(period);
  for (auto& g : gens) g = gen_dist(rng);

  std::vector<RationalMatrix> rels;
  for (std::size_t i = 0; i < period; ++i) {
    const std::size_t dim = gens[i] * gens[(i + 1) % period];
    std::uniform_int_distribution<std::size_t> count_dist(0, dim);
    const std::size_t wanted = count_dist(rng);
    RationalMatrix m(0, dim);
    std::vector<Rational> row(dim);
    for (std::size_t attempt = 0; m.rows() < wanted && attempt < 8 * dim + 8; ++attempt) {
      for (auto& x : row) x = sparse(rng) ? Rational(0) : Rational(entry_dist(rng));
      RationalMatrix trial = m;
      trial.append_row(row);
      if (rank(trial) == trial.rows()) m = std::move(trial);
    }
    rels.push_back(std::move(m));
  }
  return QuadraticPresentation(std::move(gens), std::move(rels));
}

}  // namespace helixkit
