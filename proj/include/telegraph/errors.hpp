#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace telegraph
{

// Malformed expression text, nonlinearity text or configuration.
class parse_error : public std::runtime_error
{
public:
    parse_error(const std::string &msg, std::size_t pos = npos)
        : std::runtime_error(pos == npos ? msg : msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos)
    {
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t position() const noexcept
    {
        return pos_;
    }

private:
    std::size_t pos_;
};

// A symbolic expression grew beyond the node cap.
class expr_size_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic between truncated series of different orders.
class order_mismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Arithmetic between symbolic and grid fields, or grids on different nodes.
class backend_mismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Evaluation point outside the spatial domain of a grid field.
class domain_error : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Non-finite values, quadrature failure, unstable time stepping.
class numeric_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace telegraph
