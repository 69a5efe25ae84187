#ifndef POLYU2_ERRORS_HPP
#define POLYU2_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace polyu2 {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad input: parse failures, parity violations, out-of-range arguments.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// The requested chain would need a strictly negative structure-function
// value, so no unitary representation exists on it.
class NonUnitarizable : public Error {
public:
    explicit NonUnitarizable(const std::string& msg) : Error(msg) {}
};

// Two-mode space with kappa < 0 whose -1/kappa is not a positive integer.
class UnsupportedKappa : public Error {
public:
    explicit UnsupportedKappa(const std::string& msg) : Error(msg) {}
};

// Contraction table requested with some 2j < n_max.
class DomainTooSmall : public Error {
public:
    explicit DomainTooSmall(const std::string& msg) : Error(msg) {}
};

// Sector whose m-range is clipped by the per-mode cap.
class SectorTruncated : public Error {
public:
    explicit SectorTruncated(const std::string& msg) : Error(msg) {}
};

// Some ladder value f(n) is negative: the sector is not unitary.
class NegativeLadder : public Error {
public:
    explicit NegativeLadder(const std::string& msg) : Error(msg) {}
};

// Basis index beyond the top of the sector chain.
class OutOfSector : public Error {
public:
    explicit OutOfSector(const std::string& msg) : Error(msg) {}
};

} // namespace polyu2

#endif
