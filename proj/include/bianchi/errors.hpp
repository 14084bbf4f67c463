#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bianchi {

enum class Errc {
  DivisionByZero,
  UnsupportedField,
  ParseError,
  ZeroModulus,
  NotCoprime,
  NotFound,
  NotProjectivePoint,
  BadDeterminant,
  BadGeneratorId,
  NotUnimodular,
  NotInSubgroup,
  BadModulus,
  LevelMismatch,
  ProjectionFailure,
  NonIntegralConjugate,
  ShapeMismatch,
  NotCoprimeToLevel,
  NotPrime,
  ConstructionFailure,
  PermutationFailure,
  ExhaustedSearch,
  NotStable,
  InternalError,
};

std::string_view errc_name(Errc c) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bianchi
