#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

namespace jradii {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact scalar of the form sqrt(num/den), num >= 0, den > 0,
/// stored reduced (gcd(num, den) == 1). Integers are arbitrary
/// precision, so products of many dimension factors never overflow.
class SqrtRational {
public:
    SqrtRational() : num_(0), den_(1) {}

    SqrtRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ <= 0) throw std::invalid_argument("SqrtRational: denominator must be positive");
        if (num_ < 0) throw std::invalid_argument("SqrtRational: radicand must be non-negative");
        BigInt g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    /// The scalar sqrt(square) for a non-negative rational square.
    static SqrtRational of_square(const BigRational& square) {
        return SqrtRational(boost::multiprecision::numerator(square),
                            boost::multiprecision::denominator(square));
    }

    static SqrtRational zero() { return SqrtRational(0, 1); }
    static SqrtRational one() { return SqrtRational(1, 1); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    BigRational square() const { return BigRational(num_, den_); }

    /// Double rendering of sqrt(num/den), within one ulp.
    double value() const {
        long double n = num_.convert_to<long double>();
        long double d = den_.convert_to<long double>();
        return static_cast<double>(std::sqrt(n / d));
    }

    /// "sqrt(p/q)", with "/q" dropped when q == 1.
    std::string str() const {
        std::string s = "sqrt(" + num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s + ")";
    }

    friend bool operator==(const SqrtRational& a, const SqrtRational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// Orders by the exact rational squares (sqrt is monotone).
    friend std::strong_ordering operator<=>(const SqrtRational& a, const SqrtRational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend SqrtRational operator*(const SqrtRational& a, const SqrtRational& b) {
        return SqrtRational(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const SqrtRational& s) {
        return os << s.str();
    }

private:
    BigInt num_;
    BigInt den_;
};

}  // namespace jradii
