#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace antiramsey {

/// Exact fraction over 64-bit integers, always kept in lowest terms with a
/// positive denominator. Intermediate products are formed in 128 bits and an
/// std::overflow_error is thrown if a reduced result does not fit.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    std::int64_t floor() const;
    std::int64_t ceil() const;
    /// this - floor(this), in [0, 1).
    Rational frac() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// Always "p/q", including integers ("3/1").
    std::string str() const;

    /// Display only; never used to make a decision.
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Accepts "p/q", "p" or a finite decimal such as "0.005" (parsed exactly).
    static Rational parse(std::string_view text);

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n choose 2 as a polynomial, n(n-1)/2; defined for every integer n.
inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace antiramsey
