#pragma once

#include <boost/multiprecision/float128.hpp>

namespace telegraph
{

// Extended precision scalar used for expression constants and grid values.
// 113-bit significand; nested spectral second derivatives lose roughly
// p^4 per application, which double precision cannot absorb.
using real_ext = boost::multiprecision::float128;

inline const real_ext &pi_ext()
{
    static const real_ext value = boost::multiprecision::acos(real_ext(-1));
    return value;
}

} // namespace telegraph
