#pragma once

#include <stdexcept>
#include <string>

namespace carlson {

/// Argument outside the domain of the requested function (|x| > 1, x outside (0,1), ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Requested number of digits is outside the supported range.
class PrecisionError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The envelope denominator a+b+(a-b)x vanishes.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A bound family was used outside its validity region, or could not be built.
class InvalidFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// a = b = 0: the envelope quadratic vanishes identically.
class DegenerateParams : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Generic bad-argument error (unknown constant name, unordered grid, empty family set, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace carlson
