#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopfstab/matrix.hpp"

using namespace hopfstab;

namespace {

Matrix mat(const FieldSpec& f, std::size_t r, std::size_t c, std::initializer_list<long> vals) {
    Matrix m(f, r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(f, *it++);
    return m;
}

Vec vec(const FieldSpec& f, std::initializer_list<long> vals) {
    Vec v;
    for (long x : vals) v.push_back(Scalar(f, x));
    return v;
}

}  // namespace

TEST_CASE("rational scalars are canonical fractions") {
    FieldSpec q = FieldSpec::rationals();
    Scalar a(q, 2), b(q, 3);
    CHECK((a / b).str() == "2/3");
    CHECK((a / a).str() == "1");
    CHECK((-(a / b)).str() == "-2/3");
    CHECK((a - a).is_zero());
    CHECK(Scalar(q, -7).pow(2).str() == "49");
    CHECK(Scalar(q, 2).pow(-2).str() == "1/4");
    CHECK(Scalar::parse(q, "-5/3") == Scalar(q, -5) / Scalar(q, 3));
    CHECK_THROWS_AS(Scalar::parse(q, "3/6"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/1"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "-0"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "007"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(q, "1/-2"), FieldError);
}

TEST_CASE("prime field scalars reduce modulo p") {
    FieldSpec f7 = FieldSpec::prime(7);
    CHECK(Scalar(f7, 10).str() == "3");
    CHECK(Scalar(f7, -1).str() == "6");
    CHECK((Scalar(f7, 3) * Scalar(f7, 5)).str() == "1");
    CHECK(Scalar(f7, 3).inverse().str() == "5");
    CHECK(Scalar(f7, 2).pow(3).str() == "1");
    CHECK_THROWS_AS(FieldSpec::prime(6), FieldError);
    CHECK_THROWS_AS(Scalar::parse(f7, "7"), FieldError);
    CHECK_THROWS_AS(Scalar::parse(f7, "-1"), FieldError);
}

TEST_CASE("rref reaches the unique reduced form") {
    FieldSpec q = FieldSpec::rationals();
    // rows (1,2,3), (2,4,7), (1,2,4): rank 2, pivots at columns 0 and 2.
    Matrix m = mat(q, 3, 3, {1, 2, 3, 2, 4, 7, 1, 2, 4});
    RrefResult r = rref(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<std::size_t>{0, 2});
    CHECK(r.reduced.row(0) == vec(q, {1, 2, 0}));
    CHECK(r.reduced.row(1) == vec(q, {0, 0, 1}));
    CHECK(r.reduced.row(2) == vec(q, {0, 0, 0}));
}

TEST_CASE("kernel and solving agree with hand computations") {
    FieldSpec q = FieldSpec::rationals();
    Matrix m = mat(q, 2, 3, {1, 1, 1, 1, 2, 3});
    Subspace k = kernel(m);
    REQUIRE(k.dim() == 1);
    CHECK(k.basis().row(0) == vec(q, {1, -2, 1}));

    auto x = solve_linear_system(mat(q, 2, 2, {2, 1, 1, 1}), vec(q, {3, 2}));
    REQUIRE(x.has_value());
    CHECK(*x == vec(q, {1, 1}));
    CHECK_FALSE(solve_linear_system(mat(q, 2, 1, {1, 1}), vec(q, {1, 2})).has_value());

    Matrix a = mat(q, 2, 2, {1, 2, 3, 5});
    CHECK(inverse(a) == mat(q, 2, 2, {-5, 2, 3, -1}));
    CHECK_THROWS_AS(inverse(mat(q, 2, 2, {1, 2, 2, 4})), ShapeError);
}

TEST_CASE("subspaces have one canonical representation") {
    FieldSpec q = FieldSpec::rationals();
    Subspace a = Subspace::span(q, 3, mat(q, 2, 3, {1, 1, 0, 0, 1, 1}));
    Subspace b = Subspace::span(q, 3, mat(q, 2, 3, {2, 2, 0, 1, 2, 1}));
    CHECK(a == b);  // same span, different generators
    CHECK(a.dim() == 2);
    CHECK(a.contains(vec(q, {1, 2, 1})));
    CHECK_FALSE(a.contains(vec(q, {0, 0, 1})));

    auto co = a.coordinates(vec(q, {3, 5, 2}));
    REQUIRE(co.has_value());
    Vec back = zero_vec(q, 3);
    for (std::size_t i = 0; i < 2; ++i) back = add(back, scale((*co)[i], a.basis().row(i)));
    CHECK(back == vec(q, {3, 5, 2}));
}

TEST_CASE("intersection and sum dimensions") {
    FieldSpec f5 = FieldSpec::prime(5);
    Subspace a = Subspace::span(f5, 3, mat(f5, 2, 3, {1, 0, 0, 0, 1, 0}));
    Subspace b = Subspace::span(f5, 3, mat(f5, 2, 3, {0, 1, 0, 0, 0, 1}));
    Subspace both = intersect(a, b);
    CHECK(both.dim() == 1);
    CHECK(both == Subspace::span(f5, 3, mat(f5, 1, 3, {0, 1, 0})));
    CHECK(sum(a, b) == Subspace::full(f5, 3));
    CHECK(intersect(a, Subspace::zero(f5, 3)).dim() == 0);
}

TEST_CASE("quotient projection and section are mutually consistent") {
    FieldSpec q = FieldSpec::rationals();
    Subspace u = Subspace::span(q, 4, mat(q, 2, 4, {1, 1, 0, 0, 0, 0, 1, -1}));
    QuotientMaps qm = quotient(4, u);
    REQUIRE(qm.projection.rows() == 2);
    CHECK(qm.projection * qm.section == Matrix::identity(q, 2));
    for (std::size_t r = 0; r < u.dim(); ++r)
        CHECK(is_zero(qm.projection.apply(u.basis().row(r))));
    // the section splits the projection: v - section(projection(v)) lies in u
    Vec v = vec(q, {1, 2, 3, 4});
    CHECK(u.contains(sub(v, qm.section.apply(qm.projection.apply(v)))));
}
