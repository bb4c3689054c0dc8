#pragma once

#include <stdexcept>
#include <string>

namespace imf {

enum class ErrorKind {
    Parse,
    TailNotExact,
    HorizonExhausted,
    EquivalenceUndecidable,
    PrecisionUnreachable,
    SumOrDifferenceInteger,
    BothEquivalentToTau,
    SearchBoundExceeded,
    NoPositiveWindow,
    TargetOutOfRange,
    NoSuchLetter,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    // Process exit code contract: 2 = precondition violation, 3 = precision
    // failure, 1 = internal error.
    int exit_code() const {
        switch (kind_) {
            case ErrorKind::Parse:
            case ErrorKind::SumOrDifferenceInteger:
            case ErrorKind::BothEquivalentToTau:
            case ErrorKind::TargetOutOfRange:
            case ErrorKind::NoSuchLetter:
            case ErrorKind::TailNotExact:
            case ErrorKind::EquivalenceUndecidable:
                return 2;
            case ErrorKind::PrecisionUnreachable:
            case ErrorKind::HorizonExhausted:
            case ErrorKind::SearchBoundExceeded:
            case ErrorKind::NoPositiveWindow:
                return 3;
            default:
                return 1;
        }
    }

private:
    ErrorKind kind_;
};

}  // namespace imf
