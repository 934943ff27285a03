#include "lnet/scalar.hpp"

#include <utility>

#include "lnet/error.hpp"

namespace lnet::exactla {

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    return static_cast<std::uint32_t>(r);
}

void same_modulus(ModP a, ModP b) {
    if (a.modulus() != b.modulus()) fail(ErrorCode::FieldMismatch, "residues with different moduli");
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) fail(ErrorCode::ParseError, "empty scalar");
    Rational q;
    if (q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad rational '" + s + "'");
    if (q.get_den() == 0) fail(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

UPoly parse_upoly(std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        coeffs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return UPoly(std::move(coeffs));
}

std::string upoly_string(const UPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += to_string(p.coeffs()[i]);
    }
    return out;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// ---- ModP

ModP::ModP(std::uint32_t modulus, std::int64_t value) : modulus_(modulus), value_(reduce(value, modulus)) {}

ModP operator+(ModP a, ModP b) {
    same_modulus(a, b);
    std::uint64_t s = std::uint64_t(a.value_) + b.value_;
    return ModP(a.modulus_, static_cast<std::int64_t>(s % a.modulus_));
}

ModP operator-(ModP a, ModP b) {
    same_modulus(a, b);
    return ModP(a.modulus_, std::int64_t(a.value_) - std::int64_t(b.value_));
}

ModP operator*(ModP a, ModP b) {
    same_modulus(a, b);
    std::uint64_t s = std::uint64_t(a.value_) * b.value_;
    return ModP(a.modulus_, static_cast<std::int64_t>(s % a.modulus_));
}

ModP operator-(ModP a) { return ModP(a.modulus_, -std::int64_t(a.value_)); }

ModP ModP::inverse() const {
    if (value_ == 0) fail(ErrorCode::DivisionByZero, "inverse of zero residue");
    std::int64_t t = 0, new_t = 1, r = modulus_, new_r = value_;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return ModP(modulus_, t);
}

// ---- UPoly

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

UPoly UPoly::t() { return UPoly(std::vector<Rational>{0, 1}); }

void UPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = coeffs_;
    Rational lead = leading();
    for (auto& x : c) x /= lead;
    return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0);
    const int db = b.degree();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / b.leading();
        quot[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs_[j];
    }
    q = UPoly(std::move(quot));
    r = UPoly(std::move(rem));
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        UPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// ---- RatFunc

RatFunc::RatFunc(UPoly num, UPoly den) {
    if (den.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UPoly();
        den_ = UPoly::constant(1);
        return;
    }
    UPoly g = UPoly::gcd(num, den);
    UPoly q, r;
    UPoly::divmod(num, g, num_, r);
    UPoly::divmod(den, g, den_, r);
    Rational lead = den_.leading();
    UPoly inv = UPoly::constant(1 / lead);
    num_ = num_ * inv;
    den_ = den_ * inv;
}

Rational RatFunc::at_zero() const {
    if (den_.coeff(0) == 0) fail(ErrorCode::PoleAtZero, "rational function has a pole at t = 0");
    return num_.coeff(0) / den_.coeff(0);
}

int RatFunc::valuation() const {
    auto order = [](const UPoly& p) {
        int k = 0;
        while (p.coeff(k) == 0) ++k;
        return k;
    };
    return order(num_) - order(den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a) { return RatFunc(UPoly() - a.num_, a.den_); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero rational function");
    return RatFunc(den_, num_);
}

// ---- Field

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) fail(ErrorCode::PreconditionViolation, "field characteristic must be prime");
    return Field(FieldKind::PrimeField, p);
}

Scalar Field::zero() const { return from_int(0); }

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t k) const {
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(Rational(static_cast<long>(k)));
    case FieldKind::PrimeField: return Scalar(ModP(p_, k));
    case FieldKind::RationalFunctions: return Scalar(RatFunc::constant(Rational(static_cast<long>(k))));
    }
    return Scalar(Rational(0));
}

Scalar Field::parse(std::string_view text) const {
    switch (kind_) {
    case FieldKind::Rationals: return Scalar(parse_rational(text));
    case FieldKind::PrimeField: {
        Rational q = parse_rational(text);
        ModP num(p_, 0), den(p_, 0);
        mpz_class pz = p_;
        mpz_class a = q.get_num() % pz, b = q.get_den() % pz;
        num = ModP(p_, a.get_si());
        den = ModP(p_, b.get_si());
        if (den.value() == 0) fail(ErrorCode::ParseError, "denominator divisible by the characteristic");
        return Scalar(num * den.inverse());
    }
    case FieldKind::RationalFunctions: {
        auto bar = text.find('|');
        if (bar == std::string_view::npos) return Scalar(RatFunc::constant(parse_rational(text)));
        UPoly num = parse_upoly(text.substr(0, bar));
        UPoly den = parse_upoly(text.substr(bar + 1));
        if (den.is_zero()) fail(ErrorCode::ParseError, "zero denominator");
        return Scalar(RatFunc(num, den));
    }
    }
    fail(ErrorCode::ParseError, "unknown field");
}

std::string Field::name() const {
    switch (kind_) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::PrimeField: return "F" + std::to_string(p_);
    case FieldKind::RationalFunctions: return "Q(t)";
    }
    return "?";
}

// ---- Scalar

Field Scalar::field() const {
    switch (value_.index()) {
    case 0: return Field::rationals();
    case 1: return Field(FieldKind::PrimeField, std::get<1>(value_).modulus());
    default: return Field::rational_functions();
    }
}

bool Scalar::is_zero() const {
    switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return std::get<1>(value_).value() == 0;
    default: return std::get<2>(value_).is_zero();
    }
}

Scalar Scalar::inverse() const {
    switch (value_.index()) {
    case 0:
        if (std::get<0>(value_) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
        return Scalar(Rational(1 / std::get<0>(value_)));
    case 1: return Scalar(std::get<1>(value_).inverse());
    default: return Scalar(std::get<2>(value_).inverse());
    }
}

std::string Scalar::to_string() const {
    switch (value_.index()) {
    case 0: return exactla::to_string(std::get<0>(value_));
    case 1: return std::to_string(std::get<1>(value_).value());
    default: {
        const auto& f = std::get<2>(value_);
        return upoly_string(f.num()) + "|" + upoly_string(f.den());
    }
    }
}

const Rational& Scalar::rational() const {
    if (value_.index() != 0) fail(ErrorCode::FieldMismatch, "scalar is not rational");
    return std::get<0>(value_);
}

const ModP& Scalar::residue() const {
    if (value_.index() != 1) fail(ErrorCode::FieldMismatch, "scalar is not a residue");
    return std::get<1>(value_);
}

const RatFunc& Scalar::ratfunc() const {
    if (value_.index() != 2) fail(ErrorCode::FieldMismatch, "scalar is not a rational function");
    return std::get<2>(value_);
}

#define LNET_SCALAR_BINOP(OP)                                                                   \
    Scalar operator OP(const Scalar& a, const Scalar& b) {                                      \
        if (a.value_.index() != b.value_.index()) fail(ErrorCode::FieldMismatch, "mixed fields"); \
        switch (a.value_.index()) {                                                             \
        case 0: return Scalar(Rational(std::get<0>(a.value_) OP std::get<0>(b.value_)));        \
        case 1: return Scalar(std::get<1>(a.value_) OP std::get<1>(b.value_));                  \
        default: return Scalar(std::get<2>(a.value_) OP std::get<2>(b.value_));                 \
        }                                                                                       \
    }

LNET_SCALAR_BINOP(+)
LNET_SCALAR_BINOP(-)
LNET_SCALAR_BINOP(*)

#undef LNET_SCALAR_BINOP

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar operator-(const Scalar& a) {
    switch (a.value_.index()) {
    case 0: return Scalar(Rational(-std::get<0>(a.value_)));
    case 1: return Scalar(-std::get<1>(a.value_));
    default: return Scalar(-std::get<2>(a.value_));
    }
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.value_.index() != b.value_.index()) fail(ErrorCode::FieldMismatch, "comparing mixed fields");
    return a.value_ == b.value_;
}

}  // namespace lnet::exactla
