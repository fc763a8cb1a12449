#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace kcharge {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in t with non-negative exponents and exact integer
/// coefficients. Zero coefficients are never stored.
class TPolynomial {
public:
    TPolynomial() = default;

    static TPolynomial monomial(int exponent, BigInt coefficient = 1);

    void add_term(int exponent, const BigInt& coefficient);
    TPolynomial& operator+=(const TPolynomial& other);

    BigInt coefficient(int exponent) const;
    const std::map<int, BigInt>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial

    /// "c0 + c1*t + c2*t^2", unit coefficients dropped ("t + t^2"); "0" if zero.
    std::string to_string() const;

    friend bool operator==(const TPolynomial&, const TPolynomial&) = default;

private:
    std::map<int, BigInt> terms_;
};

}  // namespace kcharge
