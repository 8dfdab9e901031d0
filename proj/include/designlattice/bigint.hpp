#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "designlattice/errors.hpp"

namespace designlattice {

/// Exact integer of unbounded magnitude. All arithmetic in this library is
/// exact; fixed-width overflow is never permitted.
using Int = boost::multiprecision::cpp_int;

/// Exact rational over Int.
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

/// n!! with the convention (-1)!! = 0!! = 1.
inline Int double_factorial(long long n) {
    Int r = 1;
    for (long long i = n; i > 1; i -= 2) r *= i;
    return r;
}

/// Quotient rounded toward negative infinity (cpp_int '/' truncates).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Residue in [0, |b|).
inline Int mod_floor(const Int& a, const Int& b) {
    Int m = a % b;
    if (m < 0) m += abs(b);
    return m;
}

/// Serialize exactly: a JSON number when the value fits in 64 bits, a
/// decimal string beyond that.
inline nlohmann::json json_int(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

inline Int int_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a decimal string");
}

}  // namespace designlattice
