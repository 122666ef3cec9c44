#include "helixkit/bundles/chern.hpp"

namespace helixkit {

ChernVector::ChernVector(BigInt rank, BigInt degree) : rank_(std::move(rank)), degree_(std::move(degree)) {
  if (rank_ < 1)
    throw Error(Errc::InvalidChern, "rank must be positive, got " + helixkit::to_string(rank_));
}

ChernVector ChernVector::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error(Errc::ParseError, "expected rank:degree, got '" + std::string(text) + "'");
  return ChernVector(parse_bigint(text.substr(0, colon)), parse_bigint(text.substr(colon + 1)));
}

bool ChernVector::is_simple() const {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), rank_.get_mpz_t(), degree_.get_mpz_t());
  return g == 1;
}

std::string ChernVector::to_string() const {
  return helixkit::to_string(rank_) + ":" + helixkit::to_string(degree_);
}

BigInt euler_pairing(const ChernVector& e, const ChernVector& f) {
  return f.degree() * e.rank() - e.degree() * f.rank();
}

namespace {

void require_ordered_simple(const ChernVector& e, const ChernVector& f, const char* who) {
  if (!e.is_simple() || !f.is_simple())
    throw Error(Errc::NotSimple, std::string(who) + ": inputs must be simple (coprime rank and degree), got " +
                                     e.to_string() + " and " + f.to_string());
  if (!(e.slope() < f.slope()))
    throw Error(Errc::SlopeOrderViolation, std::string(who) + ": need mu(" + e.to_string() + ") < mu(" +
                                               f.to_string() + ")");
}

}  // namespace

BigInt hom_dim(const ChernVector& e, const ChernVector& f) {
  require_ordered_simple(e, f, "hom_dim");
  return euler_pairing(e, f);
}

std::string_view to_string(EvalClass c) {
  return c == EvalClass::Injective ? "Injective" : "Surjective";
}

EvalClass classify_evaluation(const ChernVector& e, const ChernVector& f) {
  BigInt h = hom_dim(e, f);
  return h * e.rank() <= f.rank() ? EvalClass::Injective : EvalClass::Surjective;
}

ChernVector right_mutate(const ChernVector& a, const ChernVector& b) {
  BigInt h = hom_dim(a, b);
  BigInt r = h * b.rank() - a.rank();
  if (r <= 0)
    throw Error(Errc::NotMutable, a.to_string() + " does not right mutate through " + b.to_string() +
                                      " (hom " + helixkit::to_string(h) + ")");
  return ChernVector(r, h * b.degree() - a.degree());
}

ChernVector left_mutate(const ChernVector& e, const ChernVector& f) {
  BigInt h = hom_dim(e, f);
  BigInt r = h * e.rank() - f.rank();
  if (r <= 0)
    throw Error(Errc::NotMutable, f.to_string() + " does not left mutate through " + e.to_string() +
                                      " (hom " + helixkit::to_string(h) + ")");
  return ChernVector(r, h * e.degree() - f.degree());
}

ChernVector dualize(const ChernVector& c) { return ChernVector(c.rank(), -c.degree()); }

Triad::Triad(ChernVector a, ChernVector b, ChernVector c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  for (const auto* v : {&a_, &b_, &c_})
    if (!v->is_simple()) throw Error(Errc::InvalidTriad, "triad member " + v->to_string() + " is not simple");
  if (!(a_.slope() < b_.slope() && b_.slope() < c_.slope()))
    throw Error(Errc::InvalidTriad, "triad slopes must strictly increase: " + to_string());
}

std::string Triad::to_string() const {
  return "(" + a_.to_string() + ", " + b_.to_string() + ", " + c_.to_string() + ")";
}

HomDims hom_dims(const Triad& t) {
  return {hom_dim(t.a(), t.b()), hom_dim(t.a(), t.c()), hom_dim(t.b(), t.c())};
}

Triad mutate_triad_right(const Triad& t) {
  auto mutate = [&](const ChernVector& x, char member) {
    try {
      return right_mutate(x, t.c());
    } catch (const Error& e) {
      if (e.code() != Errc::NotMutable) throw;
      throw TriadMutationError(member, std::string("member ") + member + ": " + e.what());
    }
  };
  ChernVector ra = mutate(t.a(), 'A');
  ChernVector rb = mutate(t.b(), 'B');
  return Triad(t.c(), std::move(ra), std::move(rb));
}

Triad mutate_triad_left(const Triad& t) {
  auto mutate = [&](const ChernVector& x, char member) {
    try {
      return left_mutate(t.a(), x);
    } catch (const Error& e) {
      if (e.code() != Errc::NotMutable) throw;
      throw TriadMutationError(member, std::string("member ") + member + ": " + e.what());
    }
  };
  ChernVector lb = mutate(t.b(), 'B');
  ChernVector lc = mutate(t.c(), 'C');
  return Triad(std::move(lb), std::move(lc), t.a());
}

Triad dualize_triad(const Triad& t) {
  return Triad(dualize(t.c()), dualize(t.b()), dualize(t.a()));
}

}  // namespace helixkit
