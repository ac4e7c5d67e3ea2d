#include "hodgehyp/rational.hpp"

#include "hodgehyp/errors.hpp"

#include <cctype>

namespace hodgehyp {

const char* error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Parse: return "parse";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::ReducibleInput: return "reducible";
    case ErrorCode::UnknownData: return "unknown_data";
    case ErrorCode::NoValidPeel: return "no_valid_peel";
    case ErrorCode::InternalUnknownConsulted: return "internal_unknown_consulted";
    }
    return "unknown";
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw Error(ErrorCode::InvalidArgument, "zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);

    bool negative = false;
    constexpr std::string_view unicode_minus = "\xE2\x88\x92";
    if (s.starts_with('-')) {
        negative = true;
        s.remove_prefix(1);
    } else if (s.starts_with(unicode_minus)) {
        negative = true;
        s.remove_prefix(unicode_minus.size());
    }

    std::string_view num = s;
    std::string_view den = "1";
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorCode::Parse, "not a rational: '" + std::string(text) + "'");

    BigInt n(std::string(num), 10);
    BigInt d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return Rational(n, d);
}

BigInt Rational::floor() const
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational& Rational::operator+=(const Rational& other)
{
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other)
{
    value_ -= other.value_;
    return *this;
}

} // namespace hodgehyp
