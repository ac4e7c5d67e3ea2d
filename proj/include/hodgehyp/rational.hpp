#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hodgehyp {

using BigInt = mpz_class;

// Exact rational in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const mpq_class& value);

    // Accepts "a", "a/b", "-a/b" and the Unicode minus sign U+2212.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    bool is_zero() const { return sgn(value_) == 0; }
    BigInt floor() const;

    std::string str() const { return value_.get_str(); }
    const mpq_class& raw() const { return value_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

private:
    mpq_class value_;
};

} // namespace hodgehyp
