#pragma once

#include "hopfstab/yanzhu.hpp"

namespace hopfstab {

/// Finite group by multiplication table; element 0 need not be the identity.
struct GroupTable {
    std::size_t order = 0;
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of g_i g_j
    std::vector<std::size_t> inverse;

    static GroupTable cyclic(std::size_t n);
    static GroupTable direct_product(const GroupTable& a, const GroupTable& b);
    /// Symmetric group on three letters; r = (123) at index 1, s = (12) at index 3.
    static GroupTable symmetric3();

    std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
    Report check() const;
};

HopfData group_algebra(const FieldSpec& f, const GroupTable& g);
HopfData dual_group_algebra(const FieldSpec& f, const GroupTable& g);

/// Normalization and the 2-cocycle identity for sigma on the subgroup carved
/// out of g by f_elems (positions into g's element list, closed under mul).
Report cocycle_check(const FieldSpec& field, const GroupTable& g,
                     const std::vector<std::size_t>& f_elems, const Matrix& sigma);

/// The twisted subgroup algebra k_sigma F as a left comodule algebra over kG,
/// graded by its own group elements. Throws on an invalid cocycle.
ComodAlg twisted_group_algebra(const FieldSpec& field, const GroupTable& g,
                               const std::vector<std::size_t>& f_elems, const Matrix& sigma);

/// Explicit mutually inverse maps between the stabilizer of a k_sigma F-module
/// V and kG (x)_{kF} End(V) on coset representatives: bijectivity, algebra
/// structure, unit, and transport of the kG-action.
Report group_stab_iso_check(const FieldSpec& field, const GroupTable& g,
                            const std::vector<std::size_t>& f_elems, const Matrix& sigma,
                            const ModuleRep& v);

/// Taft algebra of dimension n^2 for a primitive n-th root of unity zeta;
/// basis g^a x^b at index a*n+b. sweedler() is the rational n = 2 case.
HopfData taft(std::size_t n, const FieldSpec& f, const Scalar& zeta);
HopfData sweedler();

/// A left coideal subalgebra of H, rewritten in the basis of the given span
/// as a left comodule algebra over H. Throws if the span is not a unital
/// subalgebra and left coideal.
ComodAlg coideal_comodalg(const HopfData& h, const Subspace& k_span);

/// For a left coideal subalgebra K of H spanned by the given subspace:
/// the stabilizer of the trivial module equals the annihilator realization
/// of the quotient coalgebra dual, with matching algebra structure.
Report coideal_subalgebra_check(const HopfData& h, const Subspace& k_span);

/// Hopf-Galois extension checks for a left H'-comodule algebra K over its
/// coinvariants R, with H' included in H by the column map incl, and the
/// convolution-algebra realization of the stabilizer of a K-module W over H.
Report galois_check(const HopfData& h, const Matrix& incl, const ComodAlg& k,
                    const ModuleRep& w);

}  // namespace hopfstab
