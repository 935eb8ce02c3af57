#pragma once

#include "carlson/bounds.hpp"
#include "carlson/classifier.hpp"
#include "carlson/verifier.hpp"

#include <nlohmann/json.hpp>

#include <span>
#include <string>

namespace carlson {

inline constexpr const char* kTableCsvHeader = "x,lower,upper,reference,width,lower_family,upper_family";

nlohmann::ordered_json to_json(const TableRow& row);
nlohmann::ordered_json to_json(const BoundInterval& iv);
nlohmann::ordered_json to_json(const ExtremaReport& r);
nlohmann::ordered_json to_json(const Witness& w);
nlohmann::ordered_json to_json(const VerificationReport& r);

/// Header line plus one line per row; numbers at %.17g.
std::string table_to_csv(std::span<const TableRow> rows);
std::string table_to_json(std::span<const TableRow> rows);

std::string reports_to_json(std::span<const VerificationReport> reports);
std::string reports_to_csv(std::span<const VerificationReport> reports);

/// %.17g
std::string format_double(double v);

}  // namespace carlson
