#pragma once

#include "hopfstab/matrix.hpp"
#include "hopfstab/report.hpp"

namespace hopfstab {

/// Dense rank-3 tensor of scalars, indexed t[i][j][k].
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(const FieldSpec& f, std::size_t n1, std::size_t n2, std::size_t n3)
        : field_(f), n1_(n1), n2_(n2), n3_(n3), data_(n1 * n2 * n3, Scalar::zero(f)) {}

    std::size_t dim1() const { return n1_; }
    std::size_t dim2() const { return n2_; }
    std::size_t dim3() const { return n3_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return data_[(i * n2_ + j) * n3_ + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[(i * n2_ + j) * n3_ + k];
    }
    bool operator==(const Tensor3& o) const = default;

private:
    FieldSpec field_;
    std::size_t n1_ = 0, n2_ = 0, n3_ = 0;
    std::vector<Scalar> data_;
};

/// Associative unital algebra on a fixed basis: e_i e_j = sum_k mult[i][j][k] e_k.
struct AlgebraData {
    FieldSpec field;
    std::size_t dim = 0;
    Tensor3 mult;
    Vec unit;

    Vec multiply(const Vec& a, const Vec& b) const;
    /// Matrix of left multiplication by a.
    Matrix left_mult(const Vec& a) const;
    /// Matrix of right multiplication by a.
    Matrix right_mult(const Vec& a) const;
    AlgebraData opposite() const;

    Report check(const std::string& title = "algebra axioms") const;
};

/// Coassociative counital coalgebra: Delta(e_i) = sum d[i][j][k] e_j (x) e_k.
struct CoalgebraData {
    FieldSpec field;
    std::size_t dim = 0;
    Tensor3 comult;
    Vec counit;

    /// Delta(a) as a vector of length dim^2, index j*dim+k.
    Vec delta(const Vec& a) const;
    CoalgebraData coopposite() const;

    Report check(const std::string& title = "coalgebra axioms") const;
};

enum class Side { Left, Right };

/// Finite-dimensional module given by action matrices: rho(e_i).
/// Left: (e_i . v) = rho(e_i) v.  Right: (v . e_i) = rho(e_i) v.
struct ModuleRep {
    std::size_t dim = 0;
    Side side = Side::Left;
    std::vector<Matrix> action;

    Matrix act(const AlgebraData& over, const Vec& a) const;
    Report check(const AlgebraData& over, const std::string& title = "module axioms") const;
};

/// Trivial 1-dim module through an algebra character chi (e.g. a counit).
ModuleRep character_module(const AlgebraData& over, const Vec& chi, Side side = Side::Left);

/// End(X) basis E_{ab}: x_b -> y_a, flattened index a*dimX+b.
std::size_t hom_index(std::size_t a, std::size_t b, std::size_t dim_x);

/// The matrix of Hom(X,Y) -> Hom(X,Y), T -> P T Q, on the E_{ab} basis.
Matrix hom_conjugation(const Matrix& p, const Matrix& q, std::size_t dim_x, std::size_t dim_y);

/// Flatten a dy x dx matrix into the Hom(X,Y) coordinate vector.
Vec flatten(const Matrix& t);
Matrix unflatten(const FieldSpec& f, const Vec& v, std::size_t dim_y, std::size_t dim_x);

}  // namespace hopfstab
