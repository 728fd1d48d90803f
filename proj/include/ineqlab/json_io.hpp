#pragma once

#include <cstdint>
#include <optional>

#include "json.hpp"

#include "ineqlab/majorization.hpp"
#include "ineqlab/report.hpp"
#include "ineqlab/scalar_function.hpp"
#include "ineqlab/search.hpp"

namespace ineqlab {

using Json = nlohmann::ordered_json;

/// Non-finite numbers serialize as null.
Json number(double v);

Json to_json(const InequalityReport& r, std::optional<std::uint64_t> seed = std::nullopt);
Json to_json(const ShapeFlags& f);
Json to_json(const MajorizationVerdict& v);
Json to_json(const SearchResult& r);
Json to_json(const std::vector<SuiteRowResult>& rows, std::uint64_t seed, bool reference);

}  // namespace ineqlab
