#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcolour {

// Status values double as CLI exit codes.
enum class Status { ok = 0, negative = 1, usage = 2, budget = 3, io = 4 };

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string & message) :
        std::runtime_error(message),
        status_(status)
    {
    }

    Status status() const { return status_; }

private:
    Status status_;
};

struct InvalidPairError : Error {
    explicit InvalidPairError(const std::string & message) : Error(Status::usage, message) {}
};

struct OutOfDomainError : Error {
    explicit OutOfDomainError(const std::string & message) : Error(Status::usage, message) {}
};

struct ParseError : Error {
    ParseError(int line, const std::string & message) :
        Error(Status::io, "line " + std::to_string(line) + ": " + message),
        line_number(line)
    {
    }

    int line_number;
};

struct BudgetError : Error {
    BudgetError(const std::string & message, long lower_bound) :
        Error(Status::budget, message),
        best_lower_bound(lower_bound)
    {
    }

    // Best length / cover size found before the budget ran out.
    long best_lower_bound;
};

// A depth-limited search reached its cap without exhausting: the true value
// is >= cap and cannot be certified.
struct CapHitError : Error {
    CapHitError(const std::string & message, long cap) :
        Error(Status::budget, message),
        cap(cap)
    {
    }

    long cap;
};

struct NotCrError : Error {
    NotCrError(const std::string & message, long residual) :
        Error(Status::negative, message),
        residual_violations(residual)
    {
    }

    long residual_violations;
};

}
