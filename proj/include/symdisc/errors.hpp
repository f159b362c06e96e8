/*
 * errors.hpp
 * ----------
 * Error taxonomy shared by every module.  Each failure mode carries a stable
 * machine-readable code so that callers (and the CLI) can distinguish
 * bad input from internal computation failures.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace symdisc {

// Base class for all library errors.  `code()` is a stable identifier;
// `what()` adds human-readable context.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Malformed user input (CLI flags, rational literals, partition keys, ...).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
};

// Operands live in polynomial rings with different variable counts.
struct VarCountMismatch : Error {
    explicit VarCountMismatch(const std::string& msg) : Error("VarCountMismatch", msg) {}
};

// Exact polynomial division left a nonzero remainder.
struct InexactDivision : Error {
    explicit InexactDivision(const std::string& msg) : Error("InexactDivision", msg) {}
};

// An elimination step needed a linear form that turned out to be
// identically zero.
struct ZeroLinearForm : Error {
    explicit ZeroLinearForm(const std::string& msg) : Error("ZeroLinearForm", msg) {}
};

// A matrix construction exceeded its configured size budget.
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error("BudgetExceeded", msg) {}
};

// Every admissible variable ordering produced a singular denominator
// minor; the input coefficients need a perturbation.
struct NeedsPerturbation : Error {
    explicit NeedsPerturbation(const std::string& msg) : Error("NeedsPerturbation", msg) {}
};

// A combinatorial exponent that must be an integer failed to be one.
struct NonIntegralExponent : Error {
    explicit NonIntegralExponent(const std::string& msg) : Error("NonIntegralExponent", msg) {}
};

// Input outside the supported parameter range.
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error("DomainError", msg) {}
};

} // namespace symdisc
