#pragma once

#include <stdexcept>
#include <string>

namespace meyer {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Grid metadata violates dt > 0, N >= 2 or contains non-finite samples.
class InvalidGrid : public Error {
public:
    using Error::Error;
};

/// Sampling step too coarse to resolve the wavelet band edge 8*pi/3.
class GridTooCoarse : public Error {
public:
    using Error::Error;
};

class GridMismatch : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

class InvalidRequest : public Error {
public:
    using Error::Error;
};

/// Panel doubling budget exhausted before the tolerance was met.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& what, double estimate, double achieved_error)
        : Error(what), estimate_(estimate), achieved_error_(achieved_error) {}

    double estimate() const noexcept { return estimate_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double estimate_;
    double achieved_error_;
};

}  // namespace meyer
