#pragma once

#include <stdexcept>
#include <string>

namespace disquant {

enum class ErrorKind {
    Domain,
    NumericConsistency,
    LightlikeFlux,
    Antipodal,
    Division,
    SubThreshold,
    StepSize,
    Stability,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace disquant
