#pragma once

#include "hopfstab/zoo.hpp"

namespace hopfstab {

/// Built-in objects exercised by the acceptance suite and the `catalog`
/// subcommand. All constructors are deterministic.

struct NamedHopf {
    std::string name;
    HopfData hopf;
};
/// Group algebras of Z2, Z2xZ2, S3 over Q with their duals, the 4-dim
/// rational Sweedler algebra, and the 9-dim Taft algebra over F_7.
std::vector<NamedHopf> catalog_hopfs();

/// K = k with the unit coaction.
ComodAlg trivial_comodalg(const HopfData& h);

struct StabCase {
    std::string name;
    ComodAlg k;
    ModuleRep u, w;
    std::size_t expected_dim;  // stabilizer dimension forced by dim K * dim St = dim U * dim W * dim H
};
/// Comodule algebras certified H-simple by h_simplicity, with one-sided
/// modules of known stabilizer dimension.
std::vector<StabCase> catalog_stab_cases();
/// A domain/codomain pair with no nonzero K-linear maps between them.
StabCase unequal_modules_case();
/// k x k with the unit coaction: H-decomposable and non-faithful.
StabCase decomposable_case();

struct GroupCase {
    std::string name;
    FieldSpec field;
    GroupTable g;
    std::vector<std::size_t> f_elems;
    Matrix sigma;
    ModuleRep v;
    std::size_t expected_dim;  // index [G:F] times (dim V)^2
};
std::vector<GroupCase> catalog_group_cases();

struct CoidealCase {
    std::string name;
    HopfData hopf;
    Subspace span;
};
std::vector<CoidealCase> catalog_coideal_cases();

struct GaloisCase {
    std::string name;
    HopfData h;
    Matrix incl;  // columns: basis of k.hopf expressed in h
    ComodAlg k;
    ModuleRep w;
};
std::vector<GaloisCase> catalog_galois_cases();

struct SmashCase {
    std::string name;
    ModAlg r;
};
std::vector<SmashCase> catalog_smash_cases();

/// The ten acceptance reports, in fixed order:
///   1 axiom suite, 2 structural identities, 3 dimension formula,
///   4 Hopf-module factorization, 5 Heisenberg realization, 6 double
///   centralizer duality, 7 explicit isomorphisms, 8 coinvariants,
///   9 faithfulness, 10 determinism and format round trips.
std::vector<Report> run_acceptance();

}  // namespace hopfstab
