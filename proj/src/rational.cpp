#include "smallminors/rational.hpp"

#include <limits>
#include <stdexcept>

namespace smallminors {

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

bool fits64(__int128 v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    __int128 g = gcd128(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    if (!fits64(num) || !fits64(den)) throw std::overflow_error("rational: 64-bit overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational &Rational::operator+=(const Rational &o) {
    if (den_ == o.den_) return *this = from_wide(static_cast<__int128>(num_) + o.num_, den_);
    return *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                             static_cast<__int128>(den_) * o.den_);
}

Rational &Rational::operator-=(const Rational &o) { return *this += -o; }

Rational &Rational::operator*=(const Rational &o) {
    // cross-reduce first so products stay small
    __int128 g1 = gcd128(num_, o.den_);
    __int128 g2 = gcd128(o.num_, den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return *this = from_wide((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

Rational &Rational::operator/=(const Rational &o) {
    if (o.num_ == 0) throw std::domain_error("rational: division by zero");
    return *this *= from_wide(o.den_, o.num_);
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::int64_t Rational::floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
}

std::int64_t Rational::ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string to_string(const Rational &r) { return r.str(); }

Rational Rational::parse(std::string_view text) {
    auto bad = [&]() { return std::invalid_argument("cannot parse rational '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) -> std::int64_t {
        if (s.empty()) throw bad();
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '-' || s[0] == '+') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) throw bad();
        __int128 v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw bad();
            v = v * 10 + (s[i] - '0');
            if (!fits64(v)) throw std::overflow_error("rational: literal too large");
        }
        return static_cast<std::int64_t>(neg ? -v : v);
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 17) throw bad();
        bool neg = !whole.empty() && whole[0] == '-';
        std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        if (frac[0] == '-' || frac[0] == '+') throw bad();
        std::int64_t f = parse_int(frac);
        Rational r = Rational(w) + Rational(neg ? -f : f, scale);
        return r;
    }
    return Rational(parse_int(text));
}

}  // namespace smallminors
