#include "lnet/polynomial.hpp"

#include <numeric>

#include "lnet/error.hpp"

namespace lnet::exactla {

Polynomial Polynomial::constant(Field field, std::size_t variables, const Scalar& c) {
    Polynomial p(field, variables);
    p.add_term(Exponents(variables, 0), c);
    return p;
}

Polynomial Polynomial::variable(Field field, std::size_t variables, std::size_t index) {
    Polynomial p(field, variables);
    Exponents e(variables, 0);
    e.at(index) = 1;
    p.add_term(e, p.field_.one());
    return p;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Scalar& c) {
    if (e.size() != variables_) fail(ErrorCode::DimensionMismatch, "exponent length differs from the variable count");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
    if (point.size() != variables_) fail(ErrorCode::DimensionMismatch, "point length differs from the variable count");
    Scalar sum = field_.zero();
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t i = 0; i < variables_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::derivative(std::size_t index) const {
    Polynomial d(field_, variables_);
    for (const auto& [e, c] : terms_) {
        if (e[index] == 0) continue;
        Exponents lowered = e;
        --lowered[index];
        d.add_term(lowered, field_.from_int(e[index]) * c);
    }
    return d;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return terms_.rbegin()->second.inverse() * *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
    return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.variables_ != b.variables_) fail(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
    Polynomial out(a.field_, a.variables_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

Polynomial operator*(const Scalar& c, const Polynomial& a) {
    Polynomial out(a.field_, a.variables_);
    for (const auto& [e, x] : a.terms_) out.add_term(e, c * x);
    return out;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
    if (is_zero()) return "0";
    std::string out;
    // Largest exponents first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string coeff = c.to_string();
        bool negative = field_.kind() != FieldKind::RationalFunctions && coeff.front() == '-';
        if (negative) coeff.erase(0, 1);
        if (field_.kind() == FieldKind::RationalFunctions) coeff = "(" + coeff + ")";
        if (!out.empty()) out += negative ? " - " : " + ";
        else if (negative) out += "-";
        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += names[i];
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) out += coeff;
        else if (coeff == "1") out += monomial;
        else out += coeff + "*" + monomial;
    }
    return out;
}

}  // namespace lnet::exactla
