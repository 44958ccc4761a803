#include "lips/linalg.hpp"

#include <utility>

#include "lips/error.hpp"

namespace lips {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InputError("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::append_row(const Vector& row) {
    if (rows_ == 0 && cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw InputError("row length does not match matrix width");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

bool Matrix::is_zero() const {
    for (const auto& v : data_) {
        if (v != 0) return false;
    }
    return true;
}

Vector multiply(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw InputError("matrix-vector dimension mismatch");
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) != 0) s += a(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

Rational dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InputError("dot product dimension mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vector add(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InputError("vector sum dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vector subtract(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw InputError("vector difference dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vector scale(const Rational& factor, const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = factor * v[i];
    return r;
}

Vector axpy(const Vector& a, const Rational& factor, const Vector& b) {
    if (a.size() != b.size()) throw InputError("axpy dimension mismatch");
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + factor * b[i];
    return r;
}

Matrix add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum dimension mismatch");
    Matrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

Matrix scale(const Rational& factor, const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = factor * m(i, j);
    return r;
}

Matrix abs(const Matrix& m) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = abs(m(i, j));
    return r;
}

Vector abs(const Vector& v) {
    Vector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = abs(v[i]);
    return r;
}

bool is_zero(const Vector& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

std::string format_vector(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += to_string(v[i]);
    }
    return s + ")";
}

LinSolveResult lin_solve(const Matrix& a, const Vector& b) {
    if (a.rows() != b.size()) throw InputError("lin_solve: right-hand side length differs from row count");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();

    // Augmented matrix [A | b], reduced to RREF.
    Matrix t(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t(i, j) = a(i, j);
        t(i, n) = b[i];
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && t(p, c) == 0) ++p;
        if (p == m) continue;
        if (p != r) {
            for (std::size_t j = 0; j <= n; ++j) std::swap(t(p, j), t(r, j));
        }
        Rational inv = 1 / t(r, c);
        for (std::size_t j = c; j <= n; ++j) t(r, j) *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || t(i, c) == 0) continue;
            Rational f = t(i, c);
            for (std::size_t j = c; j <= n; ++j) t(i, j) -= f * t(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }

    for (std::size_t i = r; i < m; ++i) {
        if (t(i, n) != 0) return NoSolution{};
    }

    Vector particular(n);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) particular[pivot_cols[i]] = t(i, n);
    if (pivot_cols.size() == n) return UniqueSolution{std::move(particular)};

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -t(i, f);
        basis.push_back(std::move(v));
    }
    return AffineSolutionSet{std::move(particular), std::move(basis)};
}

}  // namespace lips
