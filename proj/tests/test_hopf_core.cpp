#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hopfstab/zoo.hpp"

using namespace hopfstab;

namespace {

ModuleRep regular_module(const HopfData& h) {
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < h.dim(); ++i)
        mats.push_back(h.alg.left_mult(unit_vec(h.field(), h.dim(), i)));
    return ModuleRep{h.dim(), Side::Left, mats};
}

}  // namespace

TEST_CASE("group algebra of Z2 is a Hopf algebra with identity antipode") {
    FieldSpec q = FieldSpec::rationals();
    HopfData h = group_algebra(q, GroupTable::cyclic(2));
    CHECK(check_hopf(h).all_pass());
    CHECK(h.antipode == Matrix::identity(q, 2));  // every element is its own inverse
    CHECK(h.antipode_inv == h.antipode);
}

TEST_CASE("the dual construction is an involution") {
    FieldSpec q = FieldSpec::rationals();
    for (const HopfData& h : {group_algebra(q, GroupTable::symmetric3()), sweedler()}) {
        HopfData d = dual_hopf(h);
        CHECK(check_hopf(d).all_pass());
        HopfData dd = dual_hopf(d);
        CHECK(dd.alg.mult == h.alg.mult);
        CHECK(dd.coalg.comult == h.coalg.comult);
        CHECK(dd.alg.unit == h.alg.unit);
        CHECK(dd.coalg.counit == h.coalg.counit);
        CHECK(dd.antipode == h.antipode);
    }
}

TEST_CASE("dual of an abelian group algebra is commutative and cocommutative") {
    FieldSpec q = FieldSpec::rationals();
    GroupTable g = GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2));
    HopfData d = dual_group_algebra(q, g);
    CHECK(check_hopf(d).all_pass());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) {
                CHECK(d.alg.mult.at(i, j, k) == d.alg.mult.at(j, i, k));
                CHECK(d.coalg.comult.at(i, j, k) == d.coalg.comult.at(i, k, j));
            }
}

TEST_CASE("op/cop/bop variants remain Hopf algebras") {
    HopfData h = sweedler();
    for (HopfVariant v : {HopfVariant::Op, HopfVariant::Cop, HopfVariant::Bop})
        CHECK(check_hopf(variant(h, v)).all_pass());
    // bop = op then cop: multiplication reversed twice relative to cop
    HopfData bop = variant(h, HopfVariant::Bop);
    HopfData opcop = variant(variant(h, HopfVariant::Op), HopfVariant::Cop);
    CHECK(bop.alg.mult == opcop.alg.mult);
    CHECK(bop.coalg.comult == opcop.coalg.comult);
}

TEST_CASE("the 4-dim rational example has antipode of order four") {
    HopfData h = sweedler();
    CHECK(check_hopf(h).all_pass());
    Matrix s2 = h.antipode * h.antipode;
    CHECK(s2 != Matrix::identity(h.field(), 4));
    CHECK(s2 * s2 == Matrix::identity(h.field(), 4));
    // S(x) = -gx on the basis 1, x, g, gx (index a*2+b for g^a x^b)
    CHECK(h.antipode.at(3, 1) == Scalar(h.field(), -1));
    CHECK(h.antipode.at(2, 2) == Scalar::one(h.field()));  // S(g) = g^{-1} = g
}

TEST_CASE("harpoon actions satisfy the exchange identities") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(verify_core_identities(group_algebra(q, GroupTable::symmetric3())).all_pass());
    CHECK(verify_core_identities(sweedler()).all_pass());
    FieldSpec f7 = FieldSpec::prime(7);
    CHECK(verify_core_identities(taft(3, f7, Scalar(f7, 2))).all_pass());
}

TEST_CASE("harpoon matrices match the pairing definition on a group algebra") {
    // On kG the right-up action of g on the dual basis is index shuffling:
    // (g harpoon delta_h) = delta_{h g^{-1}}.
    FieldSpec q = FieldSpec::rationals();
    GroupTable g = GroupTable::symmetric3();
    HopfData h = group_algebra(q, g);
    ActionOperator ru = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
    for (std::size_t t = 0; t < 6; ++t)
        for (std::size_t i = 0; i < 6; ++i) {
            Vec img = ru[t].apply(unit_vec(q, 6, i));
            CHECK(img == unit_vec(q, 6, g.mul(i, g.inverse[t])));
        }
}

TEST_CASE("hom modules over the regular representation pass the module axioms") {
    HopfData h = sweedler();
    ModuleRep reg = regular_module(h);
    CHECK(reg.check(h.alg).all_pass());
    CHECK(hom_module_structure(h, reg, reg, Side::Left).check(h.alg).all_pass());

    std::vector<Matrix> rmats;
    for (std::size_t i = 0; i < h.dim(); ++i)
        rmats.push_back(h.alg.right_mult(unit_vec(h.field(), h.dim(), i)));
    ModuleRep rreg{h.dim(), Side::Right, rmats};
    CHECK(rreg.check(h.alg).all_pass());
    CHECK(hom_module_structure(h, rreg, rreg, Side::Right).check(h.alg).all_pass());
}

TEST_CASE("dual algebra operations agree with the convolution definition") {
    HopfData h = sweedler();
    const FieldSpec& q = h.field();
    // (alpha beta)(e_c) = sum over comult(c,i,j) alpha_i beta_j, on dual basis pairs
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Vec prod = h.dual_multiply(unit_vec(q, 4, i), unit_vec(q, 4, j));
            for (std::size_t c = 0; c < 4; ++c) CHECK(prod[c] == h.coalg.comult.at(c, i, j));
        }
    CHECK(h.dual_unit() == h.coalg.counit);
}
