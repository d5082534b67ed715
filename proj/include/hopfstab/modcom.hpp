#pragma once

#include <optional>

#include "hopfstab/hopf.hpp"

namespace hopfstab {

/// Coaction by structure constants: coact[i][r][s] is the coefficient of
/// e_r (x) v_s (left) or v_s (x) e_r (right) in lambda(v_i).
struct ComoduleStr {
    std::size_t dim = 0;       // dimension of the comodule
    std::size_t hopf_dim = 0;  // dimension of the coacting Hopf algebra
    Side side = Side::Left;
    Tensor3 coact;             // dim x hopf_dim x dim

    /// The operator (e^r (x) id) lambda  (resp. (id (x) e^r) lambda).
    Matrix component(std::size_t r) const;
    Report check(const HopfData& h, const std::string& title = "comodule axioms") const;
};

/// Algebra with a Hopf coaction that is an algebra map.
struct ComodAlg {
    HopfData hopf;
    AlgebraData alg;
    ComoduleStr coact;
};

/// Algebra with a Hopf action satisfying h.(ab) = (h1.a)(h2.b).
struct ModAlg {
    HopfData hopf;
    AlgebraData alg;
    ModuleRep act;  // module over hopf.alg
};

Report check_comodule_algebra(const ComodAlg& k);
Report check_module_algebra(const ModAlg& r);

/// Finite-dimensional dictionary: left module <-> right comodule over the dual
/// (and mirrored). Pure tensor reindexing; round trips are bit-exact.
ComoduleStr module_to_comodule(const ModuleRep& m);
ModuleRep comodule_to_module(const ComoduleStr& c);

/// {m : lambda(m) = 1 (x) m} (left) resp. m (x) 1 (right).
Subspace coinvariants(const HopfData& h, const ComoduleStr& c);

enum class IdealSide { Left, Right, TwoSided };

/// Smallest subspace containing `seed` closed under the chosen multiplications
/// and under the coaction; alternating fixpoint.
Subspace h_ideal_closure(const ComodAlg& k, const Subspace& seed, IdealSide side);

/// Exact check that `cand` is an H-ideal of the stated sidedness.
bool is_h_ideal(const ComodAlg& k, const Subspace& cand, IdealSide side);

enum class SimplicityStatus { Simple, NotSimple, Undecided };

struct SimplicityVerdict {
    SimplicityStatus status = SimplicityStatus::Undecided;
    std::optional<Subspace> witness;  // a proper nonzero H-ideal iff NotSimple
    std::string method;
};

SimplicityVerdict h_simplicity(const ComodAlg& k, IdealSide side);

struct DecomposabilityVerdict {
    enum class Status { Indecomposable, Decomposable, Undecided } status;
    std::optional<Matrix> idempotent;  // splitting idempotent iff Decomposable
    std::optional<Subspace> ideal_i, ideal_j;
    std::string method;
};

DecomposabilityVerdict h_indecomposable(const ComodAlg& k);

/// K = R^op # H^cop for a left H-module algebra R; basis r_i # h_j at index
/// i*dim(H)+j. The output coacts on the H-leg.
ComodAlg smash_product(const ModAlg& r);

/// K^op as a left module algebra over the dual, via the inverse-antipode
/// twisted evaluation against the coaction.
ModAlg opposite_correspondence(const ComodAlg& k);

/// K as a left comodule algebra over itself-style helpers.
ComodAlg regular_comodule_algebra(const HopfData& h);  // K = H, lambda = Delta

/// Subalgebra of End(K) generated by the given operator family (always
/// containing the identity), as a subspace of flattened matrices.
Subspace generated_operator_algebra(const FieldSpec& f, std::size_t dim,
                                    const std::vector<Matrix>& generators);

/// Commutant of the family inside End(V), as flattened-matrix subspace.
Subspace commutant(const FieldSpec& f, std::size_t dim, const std::vector<Matrix>& family);

}  // namespace hopfstab
