#pragma once

#include <stdexcept>
#include <string>

namespace jharm {

// Typed failures. Everything derives from Error so callers can catch the
// library's own problems separately from std:: ones.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation at (or within tolerance of) a pole of Gamma / the c-function.
struct PoleError : Error { using Error::Error; };

// Series or iteration failed to meet tolerance within its budget.
struct ConvergenceError : Error { using Error::Error; };

// Argument outside an operation's contract.
struct DomainError : Error { using Error::Error; };

// A value that would exceed double range (weight exponent, etc).
struct OverflowError : Error { using Error::Error; };

// Half-line integration kept doubling the cutoff without the tail dying off.
struct NoDecayDetected : Error { using Error::Error; };

// Paley functional diverges for the supplied weight.
struct InfiniteConstant : Error { using Error::Error; };

// Multiplier level-set functional diverges (e.g. constant symbol).
struct InfiniteBound : Error { using Error::Error; };

// A profile that must be nonincreasing is not.
struct NotMonotone : Error { using Error::Error; };

// Log-log fit too poor to report an exponent.
struct DegenerateFit : Error { using Error::Error; };

// Symbol exceeds its declared envelope by a wild margin.
struct EnvelopeViolation : Error { using Error::Error; };

// Internal consistency check failed (e.g. imaginary residue above tolerance).
struct NumericError : Error { using Error::Error; };

// Normalizing by a zero norm.
struct DivisionByZero : Error { using Error::Error; };

// Config file / CLI input problems.
struct ConfigError : Error { using Error::Error; };
struct CsvError : Error { using Error::Error; };

}  // namespace jharm
