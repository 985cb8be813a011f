#ifndef BGC_ERRORS_HPP
#define BGC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bgc {

// Matrix or vector sizes do not fit the 2n x 2n layout.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A caller-side precondition was violated (non-Hermitian input,
// non-symplectic matrix, invalid certificate, ...).
class ContractViolation : public std::invalid_argument {
public:
    explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// Input is outside the mathematical domain of the operation
// (non-positive-definite covariance, non-CP channel, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Evaluation would overflow or leave the numerically trustworthy range.
class RangeError : public std::range_error {
public:
    explicit RangeError(const std::string& what) : std::range_error(what) {}
};

} // namespace bgc

#endif
