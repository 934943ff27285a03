#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lnet/scalar.hpp"

namespace lnet::exactla {

using Vector = std::vector<Scalar>;

// Dense matrix over a runtime-selected field, row-major.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    static Matrix identity(Field field, std::size_t n);
    static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols = 0);
    static Matrix from_columns(Field field, std::size_t rows, std::span<const Vector> columns);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;

    bool is_zero() const;
    Matrix transpose() const;
    Matrix hconcat(const Matrix& right) const;
    Matrix vconcat(const Matrix& below) const;
    Vector apply(std::span<const Scalar> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& c, const Matrix& a);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                   // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Columns form a basis of the null space.
Matrix kernel(const Matrix& m);
// Columns form a basis of the column space (pivot columns of m).
Matrix column_space(const Matrix& m);
Matrix inverse(const Matrix& m);
// X with a * X == b; `a` must have full column rank and the system must be consistent.
Matrix solve(const Matrix& a, const Matrix& b);

inline bool is_epi(const Matrix& m) { return rank(m) == m.rows(); }
inline bool is_mono(const Matrix& m) { return rank(m) == m.cols(); }
inline bool is_iso(const Matrix& m) { return m.rows() == m.cols() && is_epi(m); }

// Returns c with a == c * b, if any. A zero `a` yields c = 0.
std::optional<Scalar> scalar_multiple_of(const Matrix& a, const Matrix& b);

// Proportional in the class sense: both zero, or equal up to a nonzero scalar.
bool same_class(const Matrix& a, const Matrix& b);

// Entrywise value at t = 0 of a matrix over Q(t).
Matrix specialize_t0(const Matrix& m);
// Embeds a rational matrix into Q(t).
Matrix lift_to_rational_functions(const Matrix& m);
// Reduces a rational matrix modulo p.
Matrix reduce_mod(const Matrix& m, std::uint32_t p);

bool is_zero_vector(std::span<const Scalar> v);
// Scales so that the first nonzero coordinate is 1.
Vector projective_normal_form(std::span<const Scalar> v);

class Subspace {
public:
    static Subspace zero(Field field, std::size_t ambient);
    static Subspace full(Field field, std::size_t ambient);
    // Column space of `columns`.
    static Subspace span(const Matrix& columns);
    static Subspace span(Field field, std::size_t ambient, std::span<const Vector> vectors);

    const Field& field() const noexcept { return rows_.field(); }
    std::size_t ambient() const noexcept { return rows_.cols(); }
    std::size_t dim() const noexcept { return rows_.rows(); }
    // Columns form the echelon-canonical basis.
    Matrix basis() const { return rows_.transpose(); }
    bool contains(std::span<const Scalar> v) const;
    bool contains(const Subspace& other) const;

    Subspace image(const Matrix& map) const;
    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    explicit Subspace(Matrix reduced_rows) : rows_(std::move(reduced_rows)) {}
    Matrix rows_;  // nonzero rows of a reduced row echelon form
};

// Kernel of a linear map as a subspace of its domain.
Subspace kernel_space(const Matrix& m);
Subspace image_space(const Matrix& m);

// Basis vectors of a complement of `sub`, chosen among standard basis vectors.
std::vector<Vector> standard_complement(const Subspace& sub);

}  // namespace lnet::exactla
