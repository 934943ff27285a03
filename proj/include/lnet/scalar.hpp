#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace lnet::exactla {

using Rational = mpq_class;

// Residue class modulo a prime; the modulus travels with the value.
class ModP {
public:
    ModP(std::uint32_t modulus, std::int64_t value);

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    ModP inverse() const;

    friend ModP operator+(ModP a, ModP b);
    friend ModP operator-(ModP a, ModP b);
    friend ModP operator*(ModP a, ModP b);
    friend ModP operator-(ModP a);
    friend bool operator==(ModP a, ModP b) { return a.value_ == b.value_ && a.modulus_ == b.modulus_; }

private:
    std::uint32_t modulus_;
    std::uint32_t value_;
};

// Polynomial in t over the rationals; coefficients in ascending degree, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    static UPoly constant(const Rational& c);
    static UPoly t();

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    const Rational& leading() const { return coeffs_.back(); }
    UPoly monic() const;

    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

    // Euclidean division: a = q*b + r with deg r < deg b.
    static void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
    static UPoly gcd(UPoly a, UPoly b);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Element of Q(t) as a reduced fraction with monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(UPoly::constant(1)) {}
    RatFunc(UPoly num, UPoly den);
    static RatFunc constant(const Rational& c) { return RatFunc(UPoly::constant(c), UPoly::constant(1)); }
    static RatFunc t() { return RatFunc(UPoly::t(), UPoly::constant(1)); }

    const UPoly& num() const noexcept { return num_; }
    const UPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    // Value at t = 0; throws PoleAtZero when the denominator vanishes there.
    Rational at_zero() const;
    // Order of vanishing at t = 0 (negative for poles); undefined for zero.
    int valuation() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    RatFunc inverse() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    UPoly num_;
    UPoly den_;
};

class Scalar;

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

class Field {
public:
    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime(std::uint32_t p);
    static Field rational_functions() { return Field(FieldKind::RationalFunctions, 0); }

    FieldKind kind() const noexcept { return kind_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    Scalar zero() const;
    Scalar one() const;
    Scalar from_int(std::int64_t k) const;
    Scalar parse(std::string_view text) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) = default;

private:
    friend class Scalar;
    Field(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}
    FieldKind kind_;
    std::uint32_t p_;
};

bool is_prime(std::uint64_t p);

class Scalar {
public:
    Scalar(Rational q) : value_(std::move(q)) {}
    Scalar(ModP m) : value_(m) {}
    Scalar(RatFunc f) : value_(std::move(f)) {}

    Field field() const;
    bool is_zero() const;
    Scalar inverse() const;
    std::string to_string() const;

    const Rational& rational() const;
    const ModP& residue() const;
    const RatFunc& ratfunc() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    std::variant<Rational, ModP, RatFunc> value_;
};

std::string to_string(const Rational& q);

}  // namespace lnet::exactla
