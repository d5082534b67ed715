#include "hopfstab/matrix.hpp"

namespace hopfstab {

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (field_ != o.field_) throw FieldError("matrix product: field mismatch");
    if (cols_ != o.rows_) throw ShapeError("matrix product: shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix diff: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= c;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw ShapeError("matrix apply: shape mismatch");
    Vec r = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    return data_ == o.data_;
}

bool Matrix::is_zero() const {
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<long>(i * cols_),
               data_.begin() + static_cast<long>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vec& v) {
    if (v.size() != cols_) throw ShapeError("set_row: shape mismatch");
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

RrefResult rref(const Matrix& m) {
    RrefResult res{m, {}, 0};
    Matrix& a = res.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        Scalar inv = a.at(r, c).inverse();
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            Scalar factor = a.at(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve_linear_system(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw ShapeError("solve: shape mismatch");
    Matrix aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t p = 0; p < r.pivots.size(); ++p)
        if (r.pivots[p] == a.cols()) return std::nullopt;  // 0 = 1 row
    Vec x = zero_vec(a.field(), a.cols());
    for (std::size_t p = 0; p < r.pivots.size(); ++p) x[r.pivots[p]] = r.reduced.at(p, a.cols());
    return x;
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(m.field());
    }
    RrefResult r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] >= n) throw ShapeError("singular matrix");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("dot: size mismatch");
    if (a.empty()) throw ShapeError("dot of empty vectors");
    Scalar s = Scalar::zero(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient_dim, const Matrix& vectors) {
    if (vectors.rows() > 0 && vectors.cols() != ambient_dim)
        throw ShapeError("span: ambient mismatch");
    RrefResult r = rref(vectors);
    Subspace s;
    s.field_ = f;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix(f, r.rank, ambient_dim);
    for (std::size_t i = 0; i < r.rank; ++i) s.basis_.set_row(i, r.reduced.row(i));
    return s;
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient_dim) {
    return span(f, ambient_dim, Matrix(f, 0, ambient_dim));
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient_dim) {
    return span(f, ambient_dim, Matrix::identity(f, ambient_dim));
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && field_ == o.field_ && basis_ == o.basis_;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
    if (v.size() != ambient_) throw ShapeError("coordinates: ambient mismatch");
    // Reduce v against the RREF rows; pivot entries give the coordinates.
    Vec work = v;
    Vec coords = zero_vec(field_, dim());
    RrefResult r = rref(basis_);  // basis already reduced; reuse pivot bookkeeping
    for (std::size_t i = 0; i < dim(); ++i) {
        std::size_t p = r.pivots[i];
        if (!work[p].is_zero()) {
            coords[i] = work[p];
            work = sub(work, scale(work[p], basis_.row(i)));
        }
    }
    if (!hopfstab::is_zero(work)) return std::nullopt;
    return coords;
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis_rows;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec v = zero_vec(m.field(), m.cols());
        v[c] = Scalar::one(m.field());
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced.at(i, c);
        basis_rows.push_back(v);
    }
    return Subspace::span(m.field(), m.cols(), rows_matrix(m.field(), m.cols(), basis_rows));
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw ShapeError("sum: ambient mismatch");
    Matrix stacked(a.field(), a.dim() + b.dim(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) stacked.set_row(i, a.basis().row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) stacked.set_row(a.dim() + i, b.basis().row(i));
    return Subspace::span(a.field(), a.ambient_dim(), stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field())
        throw ShapeError("intersect: ambient mismatch");
    // Kernel of [A^T | -B^T] gives coefficient pairs with equal combinations.
    Matrix sys(a.field(), a.ambient_dim(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.ambient_dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) sys.at(i, j) = a.basis().at(j, i);
        for (std::size_t j = 0; j < b.dim(); ++j) sys.at(i, a.dim() + j) = -b.basis().at(j, i);
    }
    Subspace ker = kernel(sys);
    std::vector<Vec> vectors;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        Vec coeffs = ker.basis().row(i);
        Vec v = zero_vec(a.field(), a.ambient_dim());
        for (std::size_t j = 0; j < a.dim(); ++j)
            v = hopfstab::add(v, scale(coeffs[j], a.basis().row(j)));
        vectors.push_back(v);
    }
    return Subspace::span(a.field(), a.ambient_dim(),
                          rows_matrix(a.field(), a.ambient_dim(), vectors));
}

QuotientMaps quotient(std::size_t ambient_dim, const Subspace& u) {
    if (u.ambient_dim() != ambient_dim) throw ShapeError("quotient: u not inside ambient");
    const FieldSpec& f = u.field();
    RrefResult r = rref(u.basis());
    std::vector<bool> is_pivot(ambient_dim, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    std::size_t q = free_cols.size();
    // projection: reduce modulo the basis, then read off the free coordinates.
    Matrix proj(f, q, ambient_dim);
    for (std::size_t c = 0; c < ambient_dim; ++c) {
        Vec e = unit_vec(f, ambient_dim, c);
        // residue of e_c modulo u
        for (std::size_t i = 0; i < u.dim(); ++i) {
            std::size_t p = r.pivots[i];
            if (!e[p].is_zero()) e = sub(e, scale(e[p], u.basis().row(i)));
        }
        for (std::size_t k = 0; k < q; ++k) proj.at(k, c) = e[free_cols[k]];
    }
    Matrix sect(f, ambient_dim, q);
    for (std::size_t k = 0; k < q; ++k) sect.at(free_cols[k], k) = Scalar::one(f);
    return {proj, sect};
}

Matrix rows_matrix(const FieldSpec& f, std::size_t cols, const std::vector<Vec>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

}  // namespace hopfstab
