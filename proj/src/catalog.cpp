#include "hopfstab/catalog.hpp"

#include "hopfstab/io.hpp"

namespace hopfstab {

namespace {

Matrix ones_matrix(const FieldSpec& f, std::size_t m) {
    Matrix s(f, m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) s.at(i, j) = Scalar::one(f);
    return s;
}

ModuleRep character_rep(const AlgebraData& a, const Vec& chi) {
    return character_module(a, chi, Side::Left);
}

Vec longs(const FieldSpec& f, std::initializer_list<long> vals) {
    Vec v;
    for (long x : vals) v.push_back(Scalar(f, x));
    return v;
}

/// The anticommuting pair over F_5: swap and diag(1,-1).
std::pair<Matrix, Matrix> pauli_pair(const FieldSpec& f5) {
    Matrix x(f5, 2, 2), z(f5, 2, 2);
    x.at(0, 1) = x.at(1, 0) = Scalar::one(f5);
    z.at(0, 0) = Scalar::one(f5);
    z.at(1, 1) = Scalar(f5, -1);
    return {x, z};
}

/// sigma((a1,b1),(a2,b2)) = (-1)^(b1*a2) on Z2xZ2, index (a,b) = a*2+b.
Matrix anticommuting_cocycle(const FieldSpec& f5) {
    Matrix s = ones_matrix(f5, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            if (((i % 2) * (j / 2)) % 2 == 1) s.at(i, j) = Scalar(f5, -1);
    return s;
}

/// The 2-dim simple representation of S3 over Q, filled in from the
/// generators by closing the multiplication table.
ModuleRep s3_two_dim_rep(const GroupTable& s3, const FieldSpec& q) {
    Matrix r(q, 2, 2), s(q, 2, 2);
    r.at(0, 1) = Scalar(q, -1);
    r.at(1, 0) = Scalar::one(q);
    r.at(1, 1) = Scalar(q, -1);
    s.at(0, 1) = s.at(1, 0) = Scalar::one(q);

    std::vector<Matrix> mats(6, Matrix(q, 0, 0));
    std::vector<bool> known(6, false);
    mats[s3.identity] = Matrix::identity(q, 2);
    known[s3.identity] = true;
    mats[1] = r;
    known[1] = true;
    mats[3] = s;
    known[3] = true;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j) {
                if (!known[i] || !known[j] || known[s3.mul(i, j)]) continue;
                mats[s3.mul(i, j)] = mats[i] * mats[j];
                known[s3.mul(i, j)] = true;
                progress = true;
            }
    }
    return ModuleRep{2, Side::Left, mats};
}

/// End(V) on the E_ab basis (index a*dimV+b) as an associative algebra.
AlgebraData endomorphism_algebra(const FieldSpec& f, std::size_t dv) {
    AlgebraData a;
    a.field = f;
    a.dim = dv * dv;
    a.mult = Tensor3(f, a.dim, a.dim, a.dim);
    a.unit = zero_vec(f, a.dim);
    for (std::size_t x = 0; x < dv; ++x) a.unit[hom_index(x, x, dv)] = Scalar::one(f);
    for (std::size_t p = 0; p < dv; ++p)
        for (std::size_t qq = 0; qq < dv; ++qq)
            for (std::size_t s = 0; s < dv; ++s)
                a.mult.at(hom_index(p, qq, dv), hom_index(qq, s, dv), hom_index(p, s, dv)) =
                    Scalar::one(f);
    return a;
}

/// Counit of H restricted to the rows of a coideal subalgebra span.
Vec restricted_counit(const HopfData& h, const Subspace& span) {
    Vec chi(span.dim(), Scalar::zero(h.field()));
    for (std::size_t i = 0; i < span.dim(); ++i)
        chi[i] = dot(h.coalg.counit, span.basis().row(i));
    return chi;
}

Subspace low_coordinates(const FieldSpec& f, std::size_t ambient, std::size_t count) {
    Matrix rows(f, count, ambient);
    for (std::size_t i = 0; i < count; ++i) rows.at(i, i) = Scalar::one(f);
    return Subspace::span(f, ambient, rows);
}

/// One acceptance line per verifier: pass iff every item passes strictly.
void add_report(Report& into, const std::string& name, const Report& sub) {
    std::string wit;
    for (const auto& it : sub.items)
        if (it.verdict != Verdict::Pass) {
            wit = it.name;
            if (!it.witness.empty()) wit += " @ " + it.witness;
            break;
        }
    into.add(name, sub.all_pass(), wit);
}

}  // namespace

std::vector<NamedHopf> catalog_hopfs() {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f7 = FieldSpec::prime(7);
    GroupTable z2 = GroupTable::cyclic(2);
    GroupTable z2z2 = GroupTable::direct_product(z2, z2);
    GroupTable s3 = GroupTable::symmetric3();
    std::vector<NamedHopf> out;
    out.push_back({"kz2", group_algebra(q, z2)});
    out.push_back({"kz2z2", group_algebra(q, z2z2)});
    out.push_back({"ks3", group_algebra(q, s3)});
    out.push_back({"kz2-dual", dual_group_algebra(q, z2)});
    out.push_back({"kz2z2-dual", dual_group_algebra(q, z2z2)});
    out.push_back({"ks3-dual", dual_group_algebra(q, s3)});
    out.push_back({"sweedler", sweedler()});
    out.push_back({"taft9-f7", taft(3, f7, Scalar(f7, 2))});
    return out;
}

ComodAlg trivial_comodalg(const HopfData& h) {
    const FieldSpec& f = h.field();
    ComodAlg k;
    k.hopf = h;
    k.alg.field = f;
    k.alg.dim = 1;
    k.alg.mult = Tensor3(f, 1, 1, 1);
    k.alg.mult.at(0, 0, 0) = Scalar::one(f);
    k.alg.unit = Vec{Scalar::one(f)};
    k.coact.dim = 1;
    k.coact.hopf_dim = h.dim();
    k.coact.side = Side::Left;
    k.coact.coact = Tensor3(f, 1, h.dim(), 1);
    for (std::size_t r = 0; r < h.dim(); ++r) k.coact.coact.at(0, r, 0) = h.alg.unit[r];
    return k;
}

std::vector<StabCase> catalog_stab_cases() {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f5 = FieldSpec::prime(5);
    FieldSpec f7 = FieldSpec::prime(7);
    GroupTable z2 = GroupTable::cyclic(2);
    GroupTable z2z2 = GroupTable::direct_product(z2, z2);
    GroupTable s3 = GroupTable::symmetric3();
    std::vector<StabCase> out;

    {
        ComodAlg k = twisted_group_algebra(q, s3, {0, 3}, ones_matrix(q, 2));
        ModuleRep t = character_rep(k.alg, longs(q, {1, 1}));
        out.push_back({"kz2-in-s3", k, t, t, 3});
    }
    {
        HopfData h = sweedler();
        Subspace span = low_coordinates(q, 4, 2);  // 1 and x
        ComodAlg k = coideal_comodalg(h, span);
        ModuleRep t = character_rep(k.alg, restricted_counit(h, span));
        out.push_back({"sweedler-coideal", k, t, t, 2});
    }
    {
        HopfData h = taft(3, f7, Scalar(f7, 2));
        Subspace span = low_coordinates(f7, 9, 3);  // 1, x, x^2
        ComodAlg k = coideal_comodalg(h, span);
        ModuleRep t = character_rep(k.alg, restricted_counit(h, span));
        out.push_back({"taft-coideal", k, t, t, 3});
    }
    {
        ComodAlg k = twisted_group_algebra(f5, z2z2, {0, 1, 2, 3}, anticommuting_cocycle(f5));
        auto [x, z] = pauli_pair(f5);
        std::vector<Matrix> mats;
        for (std::size_t i = 0; i < 4; ++i) {
            Matrix m = Matrix::identity(f5, 2);
            if (i / 2 == 1) m = m * x;
            if (i % 2 == 1) m = m * z;
            mats.push_back(m);
        }
        ModuleRep v{2, Side::Left, mats};
        out.push_back({"twisted-z2z2-f5", k, v, v, 4});
    }
    {
        ComodAlg k = twisted_group_algebra(f7, s3, {0, 1, 2}, ones_matrix(f7, 3));
        ModuleRep v = character_rep(k.alg, longs(f7, {1, 2, 4}));
        out.push_back({"kz3-in-s3-f7", k, v, v, 2});
    }
    {
        ComodAlg k = trivial_comodalg(group_algebra(q, z2));
        ModuleRep t = character_rep(k.alg, longs(q, {1}));
        out.push_back({"scalars-over-kz2", k, t, t, 2});
    }
    {
        ComodAlg k = regular_comodule_algebra(group_algebra(q, z2));
        ModuleRep t = character_rep(k.alg, k.hopf.coalg.counit);
        out.push_back({"regular-kz2", k, t, t, 1});
    }
    return out;
}

StabCase unequal_modules_case() {
    FieldSpec q = FieldSpec::rationals();
    GroupTable s3 = GroupTable::symmetric3();
    ComodAlg k = twisted_group_algebra(q, s3, {0, 3}, ones_matrix(q, 2));
    ModuleRep triv = character_rep(k.alg, longs(q, {1, 1}));
    ModuleRep sign = character_rep(k.alg, longs(q, {1, -1}));
    return {"kz2-in-s3-unequal", k, triv, sign, 3};
}

StabCase decomposable_case() {
    FieldSpec q = FieldSpec::rationals();
    HopfData h = group_algebra(q, GroupTable::cyclic(2));
    ComodAlg k;
    k.hopf = h;
    k.alg.field = q;
    k.alg.dim = 2;
    k.alg.mult = Tensor3(q, 2, 2, 2);
    k.alg.mult.at(0, 0, 0) = Scalar::one(q);
    k.alg.mult.at(1, 1, 1) = Scalar::one(q);
    k.alg.unit = longs(q, {1, 1});
    k.coact.dim = 2;
    k.coact.hopf_dim = 2;
    k.coact.side = Side::Left;
    k.coact.coact = Tensor3(q, 2, 2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t r = 0; r < 2; ++r) k.coact.coact.at(i, r, i) = h.alg.unit[r];
    ModuleRep w = character_rep(k.alg, longs(q, {1, 0}));
    return {"kxk-trivial", k, w, w, 4};
}

std::vector<GroupCase> catalog_group_cases() {
    FieldSpec f5 = FieldSpec::prime(5);
    FieldSpec f7 = FieldSpec::prime(7);
    GroupTable z2 = GroupTable::cyclic(2);
    GroupTable z2z2 = GroupTable::direct_product(z2, z2);
    GroupTable s3 = GroupTable::symmetric3();
    std::vector<GroupCase> out;
    {
        ComodAlg k = twisted_group_algebra(f7, s3, {0, 1, 2}, ones_matrix(f7, 3));
        ModuleRep v = character_rep(k.alg, longs(f7, {1, 2, 4}));
        out.push_back({"s3-z3-f7", f7, s3, {0, 1, 2}, ones_matrix(f7, 3), v, 2});
    }
    {
        Matrix sigma = anticommuting_cocycle(f5);
        ComodAlg k = twisted_group_algebra(f5, z2z2, {0, 1, 2, 3}, sigma);
        auto [x, z] = pauli_pair(f5);
        std::vector<Matrix> mats;
        for (std::size_t i = 0; i < 4; ++i) {
            Matrix m = Matrix::identity(f5, 2);
            if (i / 2 == 1) m = m * x;
            if (i % 2 == 1) m = m * z;
            mats.push_back(m);
        }
        ModuleRep v{2, Side::Left, mats};
        out.push_back({"twisted-z2z2-f5", f5, z2z2, {0, 1, 2, 3}, sigma, v, 4});
    }
    return out;
}

std::vector<CoidealCase> catalog_coideal_cases() {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f7 = FieldSpec::prime(7);
    std::vector<CoidealCase> out;
    out.push_back({"sweedler-x", sweedler(), low_coordinates(q, 4, 2)});
    out.push_back({"taft-x2", taft(3, f7, Scalar(f7, 2)), low_coordinates(f7, 9, 3)});
    out.push_back(
        {"kz2-full", group_algebra(q, GroupTable::cyclic(2)), Subspace::full(q, 2)});
    return out;
}

std::vector<GaloisCase> catalog_galois_cases() {
    FieldSpec q = FieldSpec::rationals();
    std::vector<GaloisCase> out;
    {
        HopfData h = sweedler();
        ComodAlg k = regular_comodule_algebra(h);
        ModuleRep w = character_rep(k.alg, h.coalg.counit);
        out.push_back({"sweedler-regular", h, Matrix::identity(q, 4), k, w});
    }
    {
        GroupTable z2 = GroupTable::cyclic(2);
        GroupTable z2z2 = GroupTable::direct_product(z2, z2);
        HopfData h = group_algebra(q, z2z2);
        HopfData hp = group_algebra(q, z2);
        Matrix incl(q, 4, 2);
        incl.at(0, 0) = Scalar::one(q);  // (0,0)
        incl.at(2, 1) = Scalar::one(q);  // (1,0)
        ComodAlg k;
        k.hopf = hp;
        k.alg = h.alg;
        k.coact.dim = 4;
        k.coact.hopf_dim = 2;
        k.coact.side = Side::Left;
        k.coact.coact = Tensor3(q, 4, 2, 4);
        for (std::size_t i = 0; i < 4; ++i)
            k.coact.coact.at(i, i / 2, i) = Scalar::one(q);  // grade by the first factor
        ModuleRep w = character_rep(k.alg, h.coalg.counit);
        out.push_back({"kz2z2-over-kz2", h, incl, k, w});
    }
    return out;
}

std::vector<SmashCase> catalog_smash_cases() {
    FieldSpec q = FieldSpec::rationals();
    GroupTable z2 = GroupTable::cyclic(2);
    GroupTable s3 = GroupTable::symmetric3();
    HopfData kz2 = group_algebra(q, z2);
    std::vector<SmashCase> out;
    {
        ModAlg r;
        r.hopf = kz2;
        r.alg.field = q;
        r.alg.dim = 1;
        r.alg.mult = Tensor3(q, 1, 1, 1);
        r.alg.mult.at(0, 0, 0) = Scalar::one(q);
        r.alg.unit = Vec{Scalar::one(q)};
        std::vector<Matrix> mats;
        for (std::size_t t = 0; t < 2; ++t) {
            Matrix m(q, 1, 1);
            m.at(0, 0) = kz2.coalg.counit[t];
            mats.push_back(m);
        }
        r.act = ModuleRep{1, Side::Left, mats};
        out.push_back({"trivial-over-kz2", r});
    }
    {
        ModAlg r;
        r.hopf = kz2;
        r.alg = dual_hopf(kz2).alg;
        r.act = ModuleRep{2, Side::Left, harpoon(kz2, Harpoon::RightUp, ActionTarget::HOnDual).mats};
        out.push_back({"dual-over-kz2", r});
    }
    {
        HopfData ks3 = group_algebra(q, s3);
        ModuleRep v2 = s3_two_dim_rep(s3, q);
        ModAlg r;
        r.hopf = ks3;
        r.alg = endomorphism_algebra(q, 2);
        r.act = hom_module_structure(ks3, v2, v2, Side::Left);
        out.push_back({"endv2-over-ks3", r});
    }
    return out;
}

std::vector<Report> run_acceptance() {
    std::vector<Report> out;
    auto hopfs = catalog_hopfs();
    auto cases = catalog_stab_cases();
    StabCase uneq = unequal_modules_case();
    StabCase decomp = decomposable_case();
    auto groups = catalog_group_cases();
    auto coideals = catalog_coideal_cases();
    auto galois = catalog_galois_cases();
    auto smashes = catalog_smash_cases();

    // 1: every catalog object passes its axiom checker.
    {
        Report r{"axiom suite"};
        for (const auto& nh : hopfs) add_report(r, nh.name + ": hopf axioms", check_hopf(nh.hopf));
        add_report(r, "z2 group table", GroupTable::cyclic(2).check());
        add_report(r, "z2z2 group table",
                   GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)).check());
        add_report(r, "s3 group table", GroupTable::symmetric3().check());
        for (const auto& gc : groups)
            add_report(r, gc.name + ": cocycle", cocycle_check(gc.field, gc.g, gc.f_elems, gc.sigma));
        for (const auto& c : cases) {
            add_report(r, c.name + ": comodule algebra", check_comodule_algebra(c.k));
            add_report(r, c.name + ": module axioms", c.w.check(c.k.alg));
        }
        add_report(r, decomp.name + ": comodule algebra", check_comodule_algebra(decomp.k));
        for (const auto& sc : smashes) {
            add_report(r, sc.name + ": module algebra", check_module_algebra(sc.r));
            ComodAlg s = smash_product(sc.r);
            add_report(r, sc.name + ": smash comodule algebra", check_comodule_algebra(s));
            r.add(sc.name + ": smash coinvariant dimension",
                  coinvariants(s.hopf, s.coact).dim() == sc.r.alg.dim,
                  std::to_string(coinvariants(s.hopf, s.coact).dim()));
        }
        out.push_back(r);
    }

    // 2: structural identities on every catalog Hopf algebra.
    {
        Report r{"structural identities"};
        for (const auto& nh : hopfs) {
            add_report(r, nh.name + ": harpoon exchange identities",
                       verify_core_identities(nh.hopf));
            add_report(r, nh.name + ": endomorphism hopf modules", hopf_module_checks(nh.hopf));
            ComodAlg tc = trivial_comodalg(nh.hopf);
            ModuleRep w = character_rep(tc.alg, longs(nh.hopf.field(), {1}));
            add_report(r, nh.name + ": twisted tensor coaction",
                       tensor_dual_object_check(tc, w));
        }
        out.push_back(r);
    }

    // 3: dimension formula on every certified case plus the unequal pair.
    {
        Report r{"dimension formula"};
        for (const auto& c : cases) {
            StabSpace st = stab_space(c.k, c.u, c.w);
            r.add(c.name + ": stabilizer dimension", st.basis.dim() == c.expected_dim,
                  std::to_string(st.basis.dim()) + " vs " + std::to_string(c.expected_dim));
            add_report(r, c.name + ": dimension product", dim_formula_check(c.k, c.u, c.w));
        }
        {
            StabSpace st = stab_space(uneq.k, uneq.u, uneq.w);
            r.add(uneq.name + ": stabilizer dimension", st.basis.dim() == uneq.expected_dim,
                  std::to_string(st.basis.dim()));
            add_report(r, uneq.name + ": dimension product",
                       dim_formula_check(uneq.k, uneq.u, uneq.w));
        }
        out.push_back(r);
    }

    // 4: independent Hom space, factorization, and coinvariant recovery.
    {
        Report r{"hopf module factorization"};
        for (const auto& c : cases)
            add_report(r, c.name, stabmodhopf_check(c.k, c.u, c.w));
        out.push_back(r);
    }

    // 5: Heisenberg realization per catalog Hopf algebra.
    {
        Report r{"heisenberg realization"};
        for (const auto& nh : hopfs) add_report(r, nh.name, heisenberg_check(nh.hopf));
        out.push_back(r);
    }

    // 6: double centralizer duality on three stabilizer algebras.
    {
        Report r{"double centralizer duality"};
        for (const auto& c : cases) {
            if (c.name != "sweedler-coideal" && c.name != "kz3-in-s3-f7" &&
                c.name != "taft-coideal")
                continue;
            StabSpace st = stab_space(c.k, c.u, c.w);
            ComodAlg s = stab_comodule_structure(st);
            ModuleRep w = stab_action_on_module(st);
            add_report(r, c.name, duality_check(s, w));
        }
        out.push_back(r);
    }

    // 7: the explicit isomorphisms of the worked example families.
    {
        Report r{"explicit isomorphisms"};
        for (const auto& gc : groups)
            add_report(r, "group case " + gc.name,
                       group_stab_iso_check(gc.field, gc.g, gc.f_elems, gc.sigma, gc.v));
        for (const auto& cc : coideals)
            add_report(r, "coideal case " + cc.name,
                       coideal_subalgebra_check(cc.hopf, cc.span));
        for (const auto& g : galois)
            add_report(r, "galois case " + g.name, galois_check(g.h, g.incl, g.k, g.w));
        out.push_back(r);
    }

    // 8: coinvariants of the stabilizer against the K-linear hom space.
    {
        Report r{"stabilizer coinvariants"};
        for (const auto& c : cases)
            add_report(r, c.name, stab_coinvariants_check(c.k, c.u, c.w));
        add_report(r, uneq.name, stab_coinvariants_check(uneq.k, uneq.u, uneq.w));
        out.push_back(r);
    }

    // 9: faithfulness on simple cases; a decomposable witness fails it.
    {
        Report r{"faithfulness"};
        for (const auto& c : cases) add_report(r, c.name, faithfulness_check(c.k, c.w));
        Report neg = faithfulness_check(decomp.k, decomp.w);
        std::string wit = neg.items.empty() ? "" : neg.items.front().witness;
        r.add(decomp.name + ": kernel is nonzero", !neg.passed(), wit);
        SimplicityVerdict sv = h_simplicity(decomp.k, IdealSide::TwoSided);
        r.add(decomp.name + ": not simple, with witness ideal",
              sv.status == SimplicityStatus::NotSimple && sv.witness &&
                  sv.witness->dim() > 0 && sv.witness->dim() < decomp.k.alg.dim,
              sv.method);
        out.push_back(r);
    }

    // 10: determinism of recomputation and byte-exact format round trips.
    {
        Report r{"determinism and format"};
        const StabCase& c = cases[1];  // sweedler-coideal
        std::map<std::string, std::string> prov{
            {"hopf", content_hash(emit_hopf(c.k.hopf))},
            {"comodalg", content_hash(emit_comodalg(c.k))},
            {"module", content_hash(emit_module(c.k.alg.field, c.k.alg.dim, c.w))}};
        std::string st1 = emit_stabilizer(stab_space(c.k, c.u, c.w), prov);
        std::string st2 = emit_stabilizer(stab_space(c.k, c.u, c.w), prov);
        r.add("stabilizer recomputation is byte-identical", st1 == st2);
        std::string h1 = emit_report(heisenberg_check(hopfs[0].hopf));
        std::string h2 = emit_report(heisenberg_check(hopfs[0].hopf));
        r.add("report recomputation is byte-identical", h1 == h2);

        bool hopf_rt = true;
        std::string wit;
        for (const auto& nh : hopfs) {
            std::string doc = emit_hopf(nh.hopf);
            if (emit_hopf(parse_hopf(doc)) != doc) {
                hopf_rt = false;
                wit = nh.name;
                break;
            }
        }
        r.add("hopf documents round trip", hopf_rt, wit);
        {
            std::string doc = emit_comodalg(c.k);
            r.add("comodalg document round trips", emit_comodalg(parse_comodalg(doc)) == doc);
        }
        {
            std::string doc = emit_modalg(catalog_smash_cases()[1].r);
            r.add("modalg document round trips", emit_modalg(parse_modalg(doc)) == doc);
        }
        {
            std::string doc = emit_module(c.k.alg.field, c.k.alg.dim, c.w);
            FieldSpec f;
            std::size_t over = 0;
            ModuleRep m = parse_module(doc, &f, &over);
            r.add("module document round trips", emit_module(f, over, m) == doc);
        }
        {
            StabSpace st = stab_space(c.k, c.u, c.w);
            std::string doc = emit_subspace(st.basis);
            r.add("subspace document round trips", emit_subspace(parse_subspace(doc)) == doc);
            std::map<std::string, std::string> back;
            StabSpace st_rt = parse_stabilizer(st1, &back);
            r.add("stabilizer document round trips",
                  emit_stabilizer(st_rt, back) == st1 && back == prov);
        }
        {
            Report rep = parse_report(h1);
            r.add("report document round trips", emit_report(rep) == h1);
        }
        out.push_back(r);
    }

    return out;
}

}  // namespace hopfstab
