#ifndef HELIXKIT_BUNDLES_CHERN_HPP
#define HELIXKIT_BUNDLES_CHERN_HPP

#include <string>
#include <string_view>

#include "helixkit/error.hpp"
#include "helixkit/exact/rational.hpp"

namespace helixkit {

/// Numerical class (rank, degree) of a vector bundle on an elliptic curve.
/// Rank is at least 1; torsion sheaves are not modelled.
class ChernVector {
public:
  ChernVector(BigInt rank, BigInt degree);
  ChernVector(long rank, long degree) : ChernVector(BigInt(rank), BigInt(degree)) {}

  /// "rank:degree"
  static ChernVector parse(std::string_view text);

  const BigInt& rank() const { return rank_; }
  const BigInt& degree() const { return degree_; }

  /// gcd(rank, |degree|) = 1
  bool is_simple() const;
  Rational slope() const { return Rational(degree_, rank_); }

  std::string to_string() const;  // "rank:degree"

  friend bool operator==(const ChernVector&, const ChernVector&) = default;

private:
  BigInt rank_;
  BigInt degree_;
};

inline Rational slope(const ChernVector& c) { return c.slope(); }

/// d_F r_E - d_E r_F; equals dim Hom(E, F) for simple E, F with mu(E) < mu(F).
BigInt euler_pairing(const ChernVector& e, const ChernVector& f);

/// Hom dimension of simple bundles with mu(E) < mu(F).
/// Throws NotSimple or SlopeOrderViolation.
BigInt hom_dim(const ChernVector& e, const ChernVector& f);

enum class EvalClass { Injective, Surjective };
std::string_view to_string(EvalClass c);

/// Whether (E,F) (x) E -> F is injective or surjective.
EvalClass classify_evaluation(const ChernVector& e, const ChernVector& f);

/// Cokernel of A -> Hom(A,B)^* (x) B: (h r_B - r_A, h d_B - d_A).
/// Throws NotMutable when h r_B <= r_A.
ChernVector right_mutate(const ChernVector& a, const ChernVector& b);

/// Kernel of Hom(E,F) (x) E -> F: (h r_E - r_F, h d_E - d_F).
/// Throws NotMutable when h r_E <= r_F.
ChernVector left_mutate(const ChernVector& e, const ChernVector& f);

ChernVector dualize(const ChernVector& c);

struct HomDims {
  BigInt ab;
  BigInt ac;
  BigInt bc;
  friend bool operator==(const HomDims&, const HomDims&) = default;
};

/// Three simple bundles with strictly increasing slopes.
class Triad {
public:
  /// Throws InvalidTriad.
  Triad(ChernVector a, ChernVector b, ChernVector c);

  const ChernVector& a() const { return a_; }
  const ChernVector& b() const { return b_; }
  const ChernVector& c() const { return c_; }

  std::string to_string() const;  // "(r:d, r:d, r:d)"

  friend bool operator==(const Triad&, const Triad&) = default;

private:
  ChernVector a_;
  ChernVector b_;
  ChernVector c_;
};

/// A triad mutation failed because one member does not mutate through the pivot.
class TriadMutationError : public Error {
public:
  TriadMutationError(char member, const std::string& what)
      : Error(Errc::NotMutable, what), member_(member) {}
  /// 'A' or 'B' for right mutation, 'B' or 'C' for left.
  char member() const noexcept { return member_; }

private:
  char member_;
};

HomDims hom_dims(const Triad& t);

/// (C, R_C A, R_C B)
Triad mutate_triad_right(const Triad& t);
/// (L_A B, L_A C, A), inverse of mutate_triad_right
Triad mutate_triad_left(const Triad& t);

/// (A*, B*, C*) reversed: (C*, B*, A*)
Triad dualize_triad(const Triad& t);

}  // namespace helixkit

#endif  // HELIXKIT_BUNDLES_CHERN_HPP
