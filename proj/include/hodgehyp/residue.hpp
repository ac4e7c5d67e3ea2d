#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <stdexcept>
#include <string_view>

#include "hodgehyp/rational.hpp"

namespace hodgehyp {

// Exponent of an eigenvalue on the unit circle, reduced to [0, 1).
//
// The eigenvalue a residue stands for depends on where the table lives:
// at 0 and at finite points it is exp(-2 pi i r), at infinity exp(+2 pi i r).
class Residue {
public:
    Residue() = default;

    static Residue of(const Rational& x);
    static Residue parse(std::string_view text) { return of(Rational::parse(text)); }

    const Rational& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    Residue conjugate() const { return of(-value_); }
    std::string str() const { return value_.str(); }

    friend bool operator==(const Residue&, const Residue&) = default;
    friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) { return a.value_ <=> b.value_; }

private:
    explicit Residue(Rational reduced) : value_(std::move(reduced)) {}
    Rational value_;
};

// Fractional part {x}.
inline Residue frac(const Rational& x) { return Residue::of(x); }

inline Residue residue_add(const Residue& a, const Residue& b) { return frac(a.value() + b.value()); }
inline Residue residue_sub(const Residue& a, const Residue& b) { return frac(a.value() - b.value()); }
inline bool is_zero(const Residue& r) { return r.is_zero(); }

// Representative in (0, 1]; 0 maps to 1.
class GammaRep {
public:
    static GammaRep of(const Residue& r);
    static GammaRep from_value(const Rational& value);

    const Rational& value() const { return value_; }
    Residue residue() const { return frac(value_); }
    bool is_one() const { return value_ == Rational(1); }
    std::string str() const { return value_.str(); }

    friend bool operator==(const GammaRep&, const GammaRep&) = default;
    friend std::strong_ordering operator<=>(const GammaRep& a, const GammaRep& b) { return a.value_ <=> b.value_; }

private:
    explicit GammaRep(Rational value) : value_(std::move(value)) {}
    Rational value_ = Rational(1);
};

inline GammaRep gamma_rep(const Residue& r) { return GammaRep::of(r); }

// Residue with numerator over a fixed denominator. Order-isomorphic to the
// exact residues it represents; used by the bulk sweeps where the exact type
// is too slow.
template <std::int64_t Den>
class FixedResidue {
public:
    static_assert(Den > 0);
    constexpr FixedResidue() = default;
    constexpr explicit FixedResidue(std::int64_t numerator) : num_(((numerator % Den) + Den) % Den) {}

    static FixedResidue from(const Residue& r)
    {
        const Rational scaled = r.value() * Rational(Den);
        if (!scaled.is_integer())
            throw std::invalid_argument("residue " + r.str() + " does not fit denominator " + std::to_string(Den));
        return FixedResidue(scaled.numerator().get_si());
    }

    constexpr std::int64_t numerator() const { return num_; }
    Residue exact() const { return Residue::of(Rational(static_cast<long>(num_), static_cast<long>(Den))); }

    friend constexpr bool operator==(FixedResidue, FixedResidue) = default;
    friend constexpr auto operator<=>(FixedResidue a, FixedResidue b) { return a.num_ <=> b.num_; }

    friend constexpr FixedResidue residue_add(FixedResidue a, FixedResidue b) { return FixedResidue(a.num_ + b.num_); }
    friend constexpr FixedResidue residue_sub(FixedResidue a, FixedResidue b) { return FixedResidue(a.num_ - b.num_); }
    friend constexpr bool is_zero(FixedResidue a) { return a.num_ == 0; }

private:
    std::int64_t num_ = 0;
};

template <class T>
concept ResidueLike = std::totally_ordered<T> && requires(const T& a, const T& b) {
    { residue_add(a, b) } -> std::same_as<T>;
    { residue_sub(a, b) } -> std::same_as<T>;
    { is_zero(a) } -> std::convertible_to<bool>;
};

} // namespace hodgehyp
