#include "carlson/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace carlson {

namespace {

// Non-finite doubles have no JSON literal; they go out as strings.
nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
}

nlohmann::ordered_json optional_number(const std::optional<double>& v) { return v ? number(*v) : nlohmann::ordered_json(nullptr); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

nlohmann::ordered_json to_json(const TableRow& row) {
    return {{"x", number(row.x)},
            {"lower", number(row.lower)},
            {"upper", number(row.upper)},
            {"reference", number(row.reference)},
            {"width", number(row.width)},
            {"lower_family", row.lower_family},
            {"upper_family", row.upper_family}};
}

nlohmann::ordered_json to_json(const BoundInterval& iv) {
    return {{"lower", optional_number(iv.lower)},
            {"upper", optional_number(iv.upper)},
            {"lower_family", iv.lower_family.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(iv.lower_family)},
            {"upper_family", iv.upper_family.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(iv.upper_family)}};
}

nlohmann::ordered_json to_json(const ExtremaReport& r) {
    return {{"disc_closed", number(r.disc_closed)},
            {"disc_quadratic", number(r.disc_quadratic)},
            {"x1", optional_number(r.x1)},
            {"x2", optional_number(r.x2)},
            {"max_coeff", optional_number(r.max_coeff)},
            {"min_coeff", optional_number(r.min_coeff)}};
}

nlohmann::ordered_json to_json(const Witness& w) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    if (w.x) j["x"] = number(*w.x);
    if (w.a) j["a"] = number(*w.a);
    if (w.b) j["b"] = number(*w.b);
    j["violation"] = w.violation;
    j["detail"] = w.detail;
    return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return {{"check_id", r.check_id},
            {"samples", r.samples},
            {"worst_margin", number(r.worst_margin)},
            {"passed", r.passed},
            {"witnesses", std::move(witnesses)}};
}

std::string table_to_csv(std::span<const TableRow> rows) {
    std::string out = std::string(kTableCsvHeader) + "\n";
    for (const auto& r : rows) {
        out += format_double(r.x) + "," + format_double(r.lower) + "," + format_double(r.upper) + ","
               + format_double(r.reference) + "," + format_double(r.width) + "," + csv_field(r.lower_family) + ","
               + csv_field(r.upper_family) + "\n";
    }
    return out;
}

std::string table_to_json(std::span<const TableRow> rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_json(std::span<const VerificationReport> reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const VerificationReport> reports) {
    std::string out = "check_id,samples,worst_margin,passed,witnesses\n";
    for (const auto& r : reports) {
        out += csv_field(r.check_id) + "," + std::to_string(r.samples) + "," + format_double(r.worst_margin) + ","
               + (r.passed ? "true" : "false") + "," + std::to_string(r.witnesses.size()) + "\n";
    }
    return out;
}

}  // namespace carlson
