#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace pbmac {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt int_gcd(BigInt a, BigInt b) {
    return boost::multiprecision::gcd(a, b);
}

}  // namespace pbmac
