#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pw {

// Exact rational on int64 parts, kept in lowest terms with positive
// denominator. Comparisons cross-multiply in 128 bits so values near a
// branch boundary compare exactly; no floating point anywhere.
class Rational {
public:
    Rational() = default;

    Rational(long long num, long long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        num_ = num;
        den_ = den;
    }

    static Rational integer(long long v) { return Rational(v, 1); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    // Round toward +infinity / -infinity. Exact; relies on den_ >= 1.
    long long ceil() const {
        if (num_ >= 0) return (num_ + den_ - 1) / den_;
        return -((-num_) / den_);
    }
    long long floor() const {
        if (num_ >= 0) return num_ / den_;
        return -((-num_ + den_ - 1) / den_);
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    long long num_ = 0;
    long long den_ = 1;
};

} // namespace pw
