#ifndef QMZV_ERRORS_HPP
#define QMZV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qmzv
{

// Base for every error raised by the library. The CLI maps each subclass to
// a stable exit code.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented range of an operation (i out of 1..k-1,
// Eisenstein weight not in {2,4,6}, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

// Malformed textual or JSON input.
class ParseError : public Error
{
public:
    using Error::Error;
};

// An index entry outside the support of a polynomial family.
class UnsupportedIndexError : public Error
{
public:
    UnsupportedIndexError(std::string family, std::size_t slot, int entry);

    const std::string &family() const noexcept { return family_; }
    std::size_t slot() const noexcept { return slot_; }
    int entry() const noexcept { return entry_; }

private:
    std::string family_;
    std::size_t slot_;
    int entry_;
};

// A family polynomial that violates Q(0) = 0, Q(1) != 0 or a degree bound.
class InvalidFamilyError : public Error
{
public:
    using Error::Error;
};

// The reduction relation Q_r Q_s = sum lambda_j (1-t)^(r+s-j) Q_j has no
// solution. residual() is the exact least residual polynomial, rendered.
class ClosureFailure : public Error
{
public:
    ClosureFailure(int r, int s, std::string residual);

    int r() const noexcept { return r_; }
    int s() const noexcept { return s_; }
    const std::string &residual() const noexcept { return residual_; }

private:
    int r_;
    int s_;
    std::string residual_;
};

// An element that cannot be written in the requested basis (a bracket entry
// equal to 1 when converting into qMZV).
class NotRepresentableError : public Error
{
public:
    using Error::Error;
};

// A constructed identity failed its series check.
class VerificationFailure : public Error
{
public:
    VerificationFailure(const std::string &what, std::size_t exponent);

    std::size_t exponent() const noexcept { return exponent_; }

private:
    std::size_t exponent_;
};

} // namespace qmzv

#endif
