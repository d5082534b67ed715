#pragma once

#include <optional>
#include <vector>

#include "hopfstab/field.hpp"

namespace hopfstab {

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<Scalar>;

/// Dense row-major matrix over one FieldSpec.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
    static Matrix identity(const FieldSpec& f, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

/// Unique reduced row echelon form (zero rows kept at the bottom).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// One solution of a*x = b, or nothing when inconsistent.
std::optional<Vec> solve_linear_system(const Matrix& a, const Vec& b);

/// Inverse of a square matrix; throws if singular.
Matrix inverse(const Matrix& m);

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
Scalar dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero(const Vec& v);

/// A linear subspace of k^ambient, canonically represented: the basis matrix
/// is in RREF with no zero rows, so equality of subspaces is bitwise equality.
class Subspace {
public:
    Subspace() = default;
    /// Canonicalizes the row span of `vectors`.
    static Subspace span(const FieldSpec& f, std::size_t ambient_dim, const Matrix& vectors);
    static Subspace zero(const FieldSpec& f, std::size_t ambient_dim);
    static Subspace full(const FieldSpec& f, std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const FieldSpec& field() const { return field_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Coordinates of v in the basis rows; nothing if v is outside.
    std::optional<Vec> coordinates(const Vec& v) const;

private:
    FieldSpec field_;
    std::size_t ambient_ = 0;
    Matrix basis_;  // RREF, no zero rows
};

/// Kernel {v : m v = 0} as a canonical subspace of k^cols.
Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

struct QuotientMaps {
    Matrix projection;  // ambient -> quotient, kernel = u
    Matrix section;     // quotient -> ambient, projection*section = id
};

/// Quotient of k^ambient by u, with a section through the non-pivot coordinates.
QuotientMaps quotient(std::size_t ambient_dim, const Subspace& u);

/// Row-span of a family of vectors given as rows.
Matrix rows_matrix(const FieldSpec& f, std::size_t cols, const std::vector<Vec>& rows);

}  // namespace hopfstab
