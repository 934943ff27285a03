#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lnet/scalar.hpp"

namespace lnet::exactla {

using Exponents = std::vector<int>;

// Sparse polynomial in a fixed number of variables; zero coefficients are never stored.
class Polynomial {
public:
    Polynomial(Field field, std::size_t variables) : field_(std::move(field)), variables_(variables) {}
    static Polynomial constant(Field field, std::size_t variables, const Scalar& c);
    static Polynomial variable(Field field, std::size_t variables, std::size_t index);

    const Field& field() const noexcept { return field_; }
    std::size_t variables() const noexcept { return variables_; }
    const std::map<Exponents, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int total_degree() const;

    void add_term(const Exponents& e, const Scalar& c);
    Scalar evaluate(std::span<const Scalar> point) const;
    Polynomial derivative(std::size_t index) const;
    // Scaled so the leading (largest exponent) coefficient is 1.
    Polynomial monic() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Scalar& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_ && a.variables_ == b.variables_; }

    std::string to_string(std::span<const std::string> names) const;

private:
    Field field_;
    std::size_t variables_;
    std::map<Exponents, Scalar> terms_;
};

}  // namespace lnet::exactla
