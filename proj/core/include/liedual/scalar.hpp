#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace liedual {

/// Arbitrary-precision integer.
using BigInt =
    boost::multiprecision::number<boost::multiprecision::backends::cpp_int_backend<>,
                                  boost::multiprecision::et_off>;

/// Exact rational scalar. Always held in lowest terms with a positive
/// denominator; every field operation is exact.
using Scalar = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// num/den in canonical form. Throws std::invalid_argument when den == 0.
Scalar scalar_from_fraction(const BigInt& num, const BigInt& den);

/// Parses "p" or "p/q" (decimal, optional leading '-').
Scalar parse_scalar(const std::string& text);

/// Lowest-terms fraction string: "3", "-1/2", "0".
std::string scalar_str(const Scalar& s);

}  // namespace liedual
