#ifndef HELIXKIT_ERROR_HPP
#define HELIXKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace helixkit {

enum class Errc {
  ZeroConstantTerm,
  OrderTooLarge,
  RadicandMismatch,
  DivisionByZero,
  ColumnMismatch,
  ParseError,
  InvalidChern,
  NotSimple,
  SlopeOrderViolation,
  NotMutable,
  InvalidTriad,
  InvalidSeed,
  TableTooShort,
  UnsupportedD,
  NotEquigeneratedSeed,
  InvalidPresentation,
  DimensionCapExceeded,
  InvalidArgument,
  InternalInvariant,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace helixkit

#endif  // HELIXKIT_ERROR_HPP
