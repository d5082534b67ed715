#pragma once

#include "hopfstab/algebra.hpp"

namespace hopfstab {

/// Hopf algebra on a fixed basis: algebra + coalgebra + antipode matrix
/// (column convention: S(e_j) = sum_i S[i][j] e_i). The antipode inverse is
/// computed once at construction; a singular S is rejected.
struct HopfData {
    AlgebraData alg;
    CoalgebraData coalg;
    Matrix antipode;
    Matrix antipode_inv;

    static HopfData make(AlgebraData a, CoalgebraData c, Matrix s);

    std::size_t dim() const { return alg.dim; }
    const FieldSpec& field() const { return alg.field; }

    // Elements of H* are coordinate vectors on the dual basis.
    Scalar pair(const Vec& alpha, const Vec& h) const { return dot(alpha, h); }
    Vec dual_multiply(const Vec& alpha, const Vec& beta) const;
    Vec dual_unit() const { return coalg.counit; }
    /// Delta_{H*}(alpha), length dim^2, index u*dim+v.
    Vec dual_delta(const Vec& alpha) const;
    Vec apply_antipode(const Vec& h) const { return antipode.apply(h); }
    Vec apply_antipode_inv(const Vec& h) const { return antipode_inv.apply(h); }
    /// Antipode of H* (transpose), acting on dual coordinates.
    Vec apply_dual_antipode(const Vec& a) const { return antipode.transpose().apply(a); }
    Vec apply_dual_antipode_inv(const Vec& a) const { return antipode_inv.transpose().apply(a); }
};

Report check_hopf(const HopfData& h);

/// (H*)^cop = (H^op)* on the dual basis: mult = transposed comult, etc.
HopfData dual_hopf(const HopfData& h);

enum class HopfVariant { Op, Cop, Bop };
HopfData variant(const HopfData& h, HopfVariant which);

/// The four transpose-of-multiplication actions. RightUp/LeftUp are the plain
/// transposes; RightDown/LeftDown compose with the inverse antipode.
enum class Harpoon { RightUp, LeftUp, RightDown, LeftDown };
enum class ActionTarget { HOnDual, DualOnH };

/// Realization of one harpoon action as a family of matrices, one per acting
/// basis element, applied to coordinates of the acted-on space.
struct ActionOperator {
    Harpoon which;
    ActionTarget target;
    std::vector<Matrix> mats;

    const Matrix& operator[](std::size_t i) const { return mats[i]; }
    /// Action of a general element with the given coordinates.
    Matrix act(const Vec& actor) const;
};

ActionOperator harpoon(const HopfData& h, Harpoon which, ActionTarget target);

/// Hom(X,Y) as a module over H: left (h.T)(x) = h1.T(S(h2).x), right
/// (T.h)(w) = T(w.Sinv(h2)).h1, realized on the E_{ab} basis.
ModuleRep hom_module_structure(const HopfData& h, const ModuleRep& x, const ModuleRep& y,
                               Side side);

/// The exchange identities between harpoon actions and multiplication,
/// checked on all basis tuples.
Report verify_core_identities(const HopfData& h);

}  // namespace hopfstab
