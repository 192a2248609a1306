#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "disquant/particle.hpp"
#include "disquant/rotator.hpp"
#include "disquant/verify.hpp"

namespace disquant {

inline constexpr const char* schema_tag = "dirac-disquant/1";

// 17 significant digits, '.' decimal separator.
std::string fmt_num(double v);

// Comma-separated table with a single header line and LF endings.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void comment(const std::string& line);
    void row(const std::vector<double>& values);
    void row_text(const std::vector<std::string>& values);
    std::string str() const;

private:
    std::string comments_;
    std::string header_;
    std::string body_;
    std::size_t cols_;
};

nlohmann::ordered_json to_json(const VerificationReport& r);
std::string to_csv(const VerificationReport& r);

nlohmann::ordered_json to_json(const HelixSolution& h);
HelixSolution helix_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json units_json(double m, double hbar, double c);

} // namespace disquant
