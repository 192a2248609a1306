#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace disquant {

struct CheckRecord {
    std::string suite;
    std::string id;
    std::string reference;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    std::uint64_t seed = 0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    double tol_scale = 1.0;
    std::vector<CheckRecord> records;
    std::vector<std::string> notes;

    std::size_t passed() const;
    std::size_t failed() const;
    bool all_pass() const { return failed() == 0; }
};

struct VerifyConfig {
    std::uint64_t seed = 42;
    double tol_scale = 1.0;
    unsigned threads = 1;
    double m = 1.0;
    double m0 = 1.0;
    double hbar = 1.0;
    double c = 1.0;
    double e = 1.0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_verification(const std::string& suite, const VerifyConfig& cfg);

} // namespace disquant
