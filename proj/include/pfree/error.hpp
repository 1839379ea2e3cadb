#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pfree {

enum class Errc {
  NotInvertible,
  InvalidModulus,
  EmptyInput,
  ZeroEntry,
  InvalidLocalData,
  NotCoprime,
  ZeroLeadWeight,
  LengthMismatch,
  ZeroWeight,
  NotEffective,
  BadIndex,
  NotPrime,
  PrimeTooSmall,
  PrimeTooLarge,
  DuplicateParameter,
  NotPairwiseCoprime,
  NotApplicable,
  InvalidStratum,
  BadDimension,
  InvalidArgument,
  Parse,
};

std::string_view errc_name(Errc e) noexcept;

/// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace pfree
