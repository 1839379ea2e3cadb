#pragma once

#include <vector>

#include <json.hpp>

#include "pfree/checkers.hpp"
#include "pfree/local_data.hpp"
#include "pfree/model_zoo.hpp"

namespace pfree::io {

using Json = nlohmann::ordered_json;

/// Raised when parsed local data violates its invariants.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<Violation> v)
      : Error(Errc::InvalidLocalData, v.empty() ? "invalid local data" : v.front().message),
        violations_(std::move(v)) {}
  const std::vector<Violation>& violations() const { return violations_; }

private:
  std::vector<Violation> violations_;
};

/// JSON number or decimal string.
Integer parse_integer(const Json& j);
/// Numbers that fit in 64 bits are emitted as JSON numbers, larger ones as strings.
Json to_json(const Integer& v);

std::vector<Integer> parse_integer_array(const Json& j);
Json to_json(const std::vector<Integer>& v);

/// Parses {"n": int, "orbits": [{"p": int, "q": [int...], "label"?: str}]},
/// validates it, and returns the canonical form. Extra keys are ignored.
/// `canonicalized` is set when the input was not already canonical.
LocalData parse_local_data(const Json& j, bool* canonicalized = nullptr);
Json to_json(const LocalData& L);

FixedPointData parse_fixed_points(const Json& j);
Json to_json(const FixedPointData& f);

std::vector<SymplecticStratum> parse_strata(const Json& j);

Json to_json(const CheckReport& r);

}  // namespace pfree::io
