#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace ambicard {

// Exact scalars. Expression templates are off so the types behave as plain
// values inside Eigen kernels.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rational& r) { return denom(r) == 1; }

/// True when the reduced denominator of `r` is coprime to `p`.
inline bool is_p_integral(const Rational& r, std::uint64_t p) {
  return denom(r) % p != 0;
}

/// Reduced form "a" or "a/b", sign on the numerator.
std::string to_string(const Rational& r);

/// Parses "a" or "a/b"; throws InputError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// r^e for any integer e; throws NotInvertibleError for 0^(negative).
Rational pow(const Rational& r, int e);

}  // namespace ambicard
