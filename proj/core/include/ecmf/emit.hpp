#pragma once

#include <string>

#include <json.hpp>

#include "ecmf/bigint.hpp"
#include "ecmf/qseries.hpp"

namespace ecmf {

// Deterministic JSON: keys sorted (nlohmann::json already stores objects
// sorted), exact integers as decimal strings, floats printed with 12
// significant digits. Identical input renders byte-identical output.
std::string render_json(const nlohmann::json& j);

// Flat "path = value" lines for --format text, one per leaf, sorted.
std::string render_text(const nlohmann::json& j);

nlohmann::json json_of(const BigInt& v);
nlohmann::json json_of(const BigRat& v);
nlohmann::json series_to_json(const QSeries& s);

} // namespace ecmf
