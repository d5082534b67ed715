#include "hopfstab/algebra.hpp"

namespace hopfstab {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Undecided: return "undecided";
        case Verdict::HypothesisUnmet: return "hypothesis-unmet";
    }
    return "?";
}

std::string Report::text() const {
    std::string out = title + "\n";
    for (const auto& it : items) {
        out += "  [" + to_string(it.verdict) + "] " + it.name;
        if (!it.witness.empty()) out += " @ " + it.witness;
        out += "\n";
    }
    return out;
}

Vec AlgebraData::multiply(const Vec& a, const Vec& b) const {
    Vec r = zero_vec(field, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            Scalar c = a[i] * b[j];
            for (std::size_t k = 0; k < dim; ++k)
                if (!mult.at(i, j, k).is_zero()) r[k] += c * mult.at(i, j, k);
        }
    }
    return r;
}

Matrix AlgebraData::left_mult(const Vec& a) const {
    Matrix m(field, dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (!mult.at(i, j, k).is_zero()) m.at(k, j) += a[i] * mult.at(i, j, k);
    }
    return m;
}

Matrix AlgebraData::right_mult(const Vec& a) const {
    Matrix m(field, dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t k = 0; k < dim; ++k)
                if (!mult.at(i, j, k).is_zero()) m.at(k, i) += a[j] * mult.at(i, j, k);
    }
    return m;
}

AlgebraData AlgebraData::opposite() const {
    AlgebraData o{field, dim, Tensor3(field, dim, dim, dim), unit};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) o.mult.at(i, j, k) = mult.at(j, i, k);
    return o;
}

namespace {
std::string idx2(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string idx3(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}
}  // namespace

Report AlgebraData::check(const std::string& title) const {
    Report rep{title};
    std::size_t fails = 0;
    // associativity on basis triples
    bool assoc = true;
    std::string wit;
    for (std::size_t i = 0; i < dim && fails < rep.failure_cap; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t l = 0; l < dim; ++l) {
                    Scalar lhs = Scalar::zero(field), rhs = Scalar::zero(field);
                    for (std::size_t a = 0; a < dim; ++a) {
                        lhs += mult.at(i, j, a) * mult.at(a, k, l);
                        rhs += mult.at(j, k, a) * mult.at(i, a, l);
                    }
                    if (lhs != rhs && wit.empty()) {
                        assoc = false;
                        wit = idx3(i, j, k) + "->" + std::to_string(l);
                        ++fails;
                    }
                }
    rep.add("associativity", assoc, wit);

    bool unital = true;
    std::string uwit;
    for (std::size_t j = 0; j < dim; ++j) {
        Vec ej = unit_vec(field, dim, j);
        if (multiply(unit, ej) != ej || multiply(ej, unit) != ej) {
            unital = false;
            if (uwit.empty()) uwit = std::to_string(j);
        }
    }
    rep.add("two-sided unit", unital, uwit);
    return rep;
}

Vec CoalgebraData::delta(const Vec& a) const {
    Vec r = zero_vec(field, dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (!comult.at(i, j, k).is_zero()) r[j * dim + k] += a[i] * comult.at(i, j, k);
    }
    return r;
}

CoalgebraData CoalgebraData::coopposite() const {
    CoalgebraData o{field, dim, Tensor3(field, dim, dim, dim), counit};
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) o.comult.at(i, j, k) = comult.at(i, k, j);
    return o;
}

Report CoalgebraData::check(const std::string& title) const {
    Report rep{title};
    bool coassoc = true;
    std::string wit;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                for (std::size_t c = 0; c < dim; ++c) {
                    Scalar lhs = Scalar::zero(field), rhs = Scalar::zero(field);
                    for (std::size_t a = 0; a < dim; ++a) {
                        lhs += comult.at(i, a, c) * comult.at(a, j, k);
                        rhs += comult.at(i, j, a) * comult.at(a, k, c);
                    }
                    if (lhs != rhs && wit.empty()) {
                        coassoc = false;
                        wit = idx3(i, j, k) + "," + std::to_string(c);
                    }
                }
    rep.add("coassociativity", coassoc, wit);

    bool counital = true;
    std::string cwit;
    for (std::size_t i = 0; i < dim && counital; ++i)
        for (std::size_t k = 0; k < dim; ++k) {
            Scalar left = Scalar::zero(field), right = Scalar::zero(field);
            for (std::size_t j = 0; j < dim; ++j) {
                left += comult.at(i, j, k) * counit[j];
                right += comult.at(i, k, j) * counit[j];
            }
            Scalar want = i == k ? Scalar::one(field) : Scalar::zero(field);
            if (left != want || right != want) {
                counital = false;
                cwit = idx2(i, k);
                break;
            }
        }
    rep.add("counit axiom", counital, cwit);
    return rep;
}

Matrix ModuleRep::act(const AlgebraData& over, const Vec& a) const {
    Matrix m(over.field, dim, dim);
    for (std::size_t i = 0; i < over.dim; ++i)
        if (!a[i].is_zero()) m = m + action[i].scaled(a[i]);
    return m;
}

Report ModuleRep::check(const AlgebraData& over, const std::string& title) const {
    Report rep{title};
    bool shapes = action.size() == over.dim;
    for (const auto& m : action) shapes = shapes && m.rows() == dim && m.cols() == dim;
    rep.add("action family shape", shapes);
    if (!shapes) return rep;

    rep.add("unit acts as identity", act(over, over.unit) == Matrix::identity(over.field, dim));

    bool mul = true;
    std::string wit;
    for (std::size_t i = 0; i < over.dim; ++i)
        for (std::size_t j = 0; j < over.dim; ++j) {
            Matrix expect(over.field, dim, dim);
            for (std::size_t k = 0; k < over.dim; ++k)
                if (!over.mult.at(i, j, k).is_zero())
                    expect = expect + action[k].scaled(over.mult.at(i, j, k));
            Matrix got = side == Side::Left ? action[i] * action[j] : action[j] * action[i];
            if (got != expect && wit.empty()) {
                mul = false;
                wit = idx2(i, j);
            }
        }
    rep.add("multiplicativity", mul, wit);
    return rep;
}

ModuleRep character_module(const AlgebraData& over, const Vec& chi, Side side) {
    ModuleRep m{1, side, {}};
    for (std::size_t i = 0; i < over.dim; ++i) {
        Matrix a(over.field, 1, 1);
        a.at(0, 0) = chi[i];
        m.action.push_back(a);
    }
    return m;
}

std::size_t hom_index(std::size_t a, std::size_t b, std::size_t dim_x) { return a * dim_x + b; }

Matrix hom_conjugation(const Matrix& p, const Matrix& q, std::size_t dim_x, std::size_t dim_y) {
    // T -> P T Q on E_{ab} coordinates, a in Y, b in X.
    std::size_t dy2 = p.rows(), dx2 = q.cols();
    if (p.cols() != dim_y || q.rows() != dim_x) throw ShapeError("hom_conjugation shape");
    Matrix m(p.field(), dy2 * dx2, dim_y * dim_x);
    for (std::size_t a2 = 0; a2 < dy2; ++a2)
        for (std::size_t b2 = 0; b2 < dx2; ++b2)
            for (std::size_t a = 0; a < dim_y; ++a)
                for (std::size_t b = 0; b < dim_x; ++b)
                    m.at(a2 * dx2 + b2, a * dim_x + b) = p.at(a2, a) * q.at(b, b2);
    return m;
}

Vec flatten(const Matrix& t) {
    Vec v;
    v.reserve(t.rows() * t.cols());
    for (std::size_t a = 0; a < t.rows(); ++a)
        for (std::size_t b = 0; b < t.cols(); ++b) v.push_back(t.at(a, b));
    return v;
}

Matrix unflatten(const FieldSpec& f, const Vec& v, std::size_t dim_y, std::size_t dim_x) {
    if (v.size() != dim_y * dim_x) throw ShapeError("unflatten: size mismatch");
    Matrix m(f, dim_y, dim_x);
    for (std::size_t a = 0; a < dim_y; ++a)
        for (std::size_t b = 0; b < dim_x; ++b) m.at(a, b) = v[a * dim_x + b];
    return m;
}

}  // namespace hopfstab
