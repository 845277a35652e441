#include "antiramsey/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "antiramsey/errors.hpp"

namespace antiramsey {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() &&
           v <= std::numeric_limits<std::int64_t>::max();
}

// floor division for a signed numerator and positive denominator
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(__int128 numerator, __int128 denominator) {
    if (denominator == 0) throw std::domain_error("division by zero");
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    __int128 g = gcd128(numerator, denominator);
    if (g > 1) {
        numerator /= g;
        denominator /= g;
    }
    if (!fits(numerator) || !fits(denominator)) throw std::overflow_error("rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(numerator);
    r.den_ = static_cast<std::int64_t>(denominator);
    return r;
}

std::int64_t Rational::floor() const { return floor_div(num_, den_); }

std::int64_t Rational::ceil() const { return -floor_div(-num_, den_); }

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational& Rational::operator+=(const Rational& rhs) {
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_ + static_cast<__int128>(rhs.num_) * den_,
                      static_cast<__int128>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    *this = from_wide(static_cast<__int128>(num_) * rhs.num_, static_cast<__int128>(den_) * rhs.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("division by zero");
    *this = from_wide(static_cast<__int128>(num_) * rhs.den_, static_cast<__int128>(den_) * rhs.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Rational Rational::parse(std::string_view text) {
    const std::string_view whole = text;
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t p = parse_int(text.substr(0, slash), whole);
        std::int64_t q = parse_int(text.substr(slash + 1), whole);
        if (q == 0) throw InputError("rational with zero denominator: '" + std::string(whole) + "'");
        return Rational(p, q);
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational(parse_int(text, whole));

    bool negative = !text.empty() && text.front() == '-';
    std::string_view int_part = text.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 17 || (int_part.empty() && frac_part.empty())) {
        throw InputError("not a rational number: '" + std::string(whole) + "'");
    }
    for (char ch : frac_part) {
        if (ch < '0' || ch > '9') throw InputError("not a rational number: '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t ip = int_part.empty() ? 0 : parse_int(int_part, whole);
    std::int64_t fp = frac_part.empty() ? 0 : parse_int(frac_part, whole);
    Rational r = Rational(ip) + Rational(fp, scale);
    return negative ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace antiramsey
