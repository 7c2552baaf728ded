#ifndef SMALLMINORS_RATIONAL_HPP
#define SMALLMINORS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace smallminors {

/// Exact rational with 64-bit numerator/denominator, always in lowest terms
/// with a positive denominator. Intermediate products use 128-bit integers;
/// a result that does not fit throws std::overflow_error.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT implicit
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    /// Smallest integer >= value.
    std::int64_t ceil() const;
    /// Largest integer <= value.
    std::int64_t floor() const;

    /// Parses "p/q", an integer, or a finite decimal such as "0.25" exactly.
    static Rational parse(std::string_view text);

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    static Rational from_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::string to_string(const Rational &r);

}  // namespace smallminors

#endif
