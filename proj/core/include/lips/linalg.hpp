#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "lips/rational.hpp"

namespace lips {

using Vector = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    void append_row(const Vector& row);

    bool is_zero() const;
    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Vector multiply(const Matrix& a, const Vector& x);
Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Rational& factor, const Vector& v);
/// a + factor * b
Vector axpy(const Vector& a, const Rational& factor, const Vector& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Rational& factor, const Matrix& m);
/// Entrywise absolute value.
Matrix abs(const Matrix& m);
Vector abs(const Vector& v);
bool is_zero(const Vector& v);

/// "(1,-1/2)"
std::string format_vector(const Vector& v);

struct UniqueSolution {
    Vector point;
};

/// particular + span(basis); basis spans the null space of A exactly.
struct AffineSolutionSet {
    Vector particular;
    std::vector<Vector> basis;
};

struct NoSolution {};

using LinSolveResult = std::variant<UniqueSolution, AffineSolutionSet, NoSolution>;

/// Exact Gauss-Jordan elimination of Ax = b. Throws InputError on dimension mismatch.
LinSolveResult lin_solve(const Matrix& a, const Vector& b);

}  // namespace lips
