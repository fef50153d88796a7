#pragma once

#include <stdexcept>
#include <string>

namespace umbra
{

// Base of every exception thrown by the engine.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error
{
public:
    using error::error;
};

// A series does not carry enough coefficients for the requested operation.
class precision_error : public error
{
public:
    using error::error;
};

// Precondition on the mathematical shape of an argument (order, constant term, range).
class domain_error : public error
{
public:
    using error::error;
};

class variant_mismatch : public error
{
public:
    using error::error;
};

// Two routes that must agree by construction did not.
class consistency_error : public error
{
public:
    using error::error;
};

} // namespace umbra
