#include "lnet/matrix.hpp"

#include <sstream>

#include "lnet/error.hpp"

namespace lnet::exactla {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c].field() != field) fail(ErrorCode::FieldMismatch, "matrix entry from another field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vector> columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) fail(ErrorCode::DimensionMismatch, "column length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::hconcat(const Matrix& right) const {
    if (rows_ != right.rows_) fail(ErrorCode::DimensionMismatch, "hconcat row count");
    Matrix m(field_, rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < right.cols_; ++c) m(r, cols_ + c) = right(r, c);
    }
    return m;
}

Matrix Matrix::vconcat(const Matrix& below) const {
    if (cols_ != below.cols_) fail(ErrorCode::DimensionMismatch, "vconcat column count");
    Matrix m(field_, rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i];
    for (std::size_t i = 0; i < below.data_.size(); ++i) m.data_[data_.size() + i] = below.data_[i];
    return m;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector size");
    Vector out(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
        }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shapes");
    if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "matrix product fields");
    Matrix m(a.field_, a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) {
                const Scalar& y = b(k, c);
                if (!y.is_zero()) m(r, c) += x * y;
            }
        }
    return m;
}

Matrix operator*(const Scalar& c, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.data_) x = c * x;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shapes");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shapes");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        if (r) out << "; ";
        for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << (*this)(r, c).to_string();
    }
    out << ']';
    return out.str();
}

Echelon rref(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        Scalar inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols(), m.field().zero());
        v[free] = m.field().one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(m.field(), m.cols(), basis);
}

Matrix column_space(const Matrix& m) {
    Echelon e = rref(m);
    std::vector<Vector> cols;
    for (auto p : e.pivots) cols.push_back(m.column(p));
    return Matrix::from_columns(m.field(), m.rows(), cols);
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Echelon e = rref(m.hconcat(Matrix::identity(m.field(), n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
        fail(ErrorCode::DivisionByZero, "singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Matrix solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) fail(ErrorCode::DimensionMismatch, "solve row count");
    Echelon e = rref(a.hconcat(b));
    const std::size_t k = a.cols();
    if (e.pivots.size() != k || (k > 0 && e.pivots[k - 1] != k - 1))
        fail(ErrorCode::PreconditionViolation, "solve: inconsistent system or rank-deficient coefficients");
    Matrix x(a.field(), k, b.cols());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, k + c);
    return x;
}

std::optional<Scalar> scalar_multiple_of(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "scalar multiple shapes");
    if (a.is_zero()) return a.field().zero();
    std::optional<Scalar> c;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& x = a(r, k);
            const Scalar& y = b(r, k);
            if (y.is_zero()) {
                if (!x.is_zero()) return std::nullopt;
                continue;
            }
            if (!c) c = x / y;
            else if (x != *c * y) return std::nullopt;
        }
    return c;
}

bool same_class(const Matrix& a, const Matrix& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return scalar_multiple_of(a, b).has_value();
}

Matrix specialize_t0(const Matrix& m) {
    if (m.field().kind() != FieldKind::RationalFunctions) fail(ErrorCode::FieldMismatch, "specialize_t0 needs Q(t)");
    Matrix out(Field::rationals(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Scalar(m(r, c).ratfunc().at_zero());
    return out;
}

Matrix lift_to_rational_functions(const Matrix& m) {
    if (m.field().kind() != FieldKind::Rationals) fail(ErrorCode::FieldMismatch, "lift needs a rational matrix");
    Matrix out(Field::rational_functions(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Scalar(RatFunc::constant(m(r, c).rational()));
    return out;
}

Matrix reduce_mod(const Matrix& m, std::uint32_t p) {
    if (m.field().kind() != FieldKind::Rationals) fail(ErrorCode::FieldMismatch, "reduction needs a rational matrix");
    Field fp = Field::prime(p);
    Matrix out(fp, m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = fp.parse(m(r, c).to_string());
    return out;
}

bool is_zero_vector(std::span<const Scalar> v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector projective_normal_form(std::span<const Scalar> v) {
    Vector out(v.begin(), v.end());
    for (const auto& x : v)
        if (!x.is_zero()) {
            Scalar inv = x.inverse();
            for (auto& y : out) y = y * inv;
            return out;
        }
    fail(ErrorCode::PreconditionViolation, "zero vector has no projective class");
}

// ---- Subspace

namespace {

Matrix nonzero_rows(const Echelon& e) {
    Matrix rows(e.reduced.field(), e.pivots.size(), e.reduced.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t c = 0; c < e.reduced.cols(); ++c) rows(r, c) = e.reduced(r, c);
    return rows;
}

}  // namespace

Subspace Subspace::zero(Field field, std::size_t ambient) { return Subspace(Matrix(field, 0, ambient)); }

Subspace Subspace::full(Field field, std::size_t ambient) { return Subspace(Matrix::identity(field, ambient)); }

Subspace Subspace::span(const Matrix& columns) { return Subspace(nonzero_rows(rref(columns.transpose()))); }

Subspace Subspace::span(Field field, std::size_t ambient, std::span<const Vector> vectors) {
    return span(Matrix::from_columns(field, ambient, vectors));
}

bool Subspace::contains(std::span<const Scalar> v) const {
    if (v.size() != ambient()) fail(ErrorCode::DimensionMismatch, "vector length vs ambient");
    Matrix row(field(), 1, ambient());
    for (std::size_t c = 0; c < ambient(); ++c) row(0, c) = v[c];
    return rank(rows_.vconcat(row)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return rank(rows_.vconcat(other.rows_)) == dim(); }

Subspace Subspace::image(const Matrix& map) const {
    if (map.cols() != ambient()) fail(ErrorCode::DimensionMismatch, "image of subspace");
    return span(map * basis());
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    return Subspace(nonzero_rows(rref(a.rows_.vconcat(b.rows_))));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) fail(ErrorCode::DimensionMismatch, "intersection ambient");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.field(), a.ambient());
    Matrix ba = a.basis(), bb = b.basis();
    Matrix k = kernel(ba.hconcat(Scalar(a.field().from_int(-1)) * bb));
    Matrix top(a.field(), a.dim(), k.cols());
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < k.cols(); ++c) top(r, c) = k(r, c);
    return Subspace::span(ba * top);
}

bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }

Subspace kernel_space(const Matrix& m) { return Subspace::span(kernel(m)); }

Subspace image_space(const Matrix& m) { return Subspace::span(m); }

std::vector<Vector> standard_complement(const Subspace& sub) {
    std::vector<Vector> out;
    Subspace acc = sub;
    for (std::size_t i = 0; i < sub.ambient() && acc.dim() < sub.ambient(); ++i) {
        Vector e(sub.ambient(), sub.field().zero());
        e[i] = sub.field().one();
        if (acc.contains(e)) continue;
        acc = acc + Subspace::span(sub.field(), sub.ambient(), std::span<const Vector>(&e, 1));
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace lnet::exactla
