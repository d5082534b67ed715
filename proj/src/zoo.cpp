#include "hopfstab/zoo.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace hopfstab {

namespace {

std::string pair_str(std::size_t a, std::size_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Subspace mat_family_span(const FieldSpec& f, const std::vector<Matrix>& fam) {
    if (fam.empty()) return Subspace();
    std::vector<Vec> rows;
    for (const auto& m : fam) rows.push_back(flatten(m));
    std::size_t amb = fam.front().rows() * fam.front().cols();
    return Subspace::span(f, amb, rows_matrix(f, amb, rows));
}

}  // namespace

GroupTable GroupTable::cyclic(std::size_t n) {
    GroupTable g;
    g.order = n;
    g.identity = 0;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.inverse.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
        g.inverse[i] = (n - i) % n;
    }
    return g;
}

GroupTable GroupTable::direct_product(const GroupTable& a, const GroupTable& b) {
    GroupTable g;
    g.order = a.order * b.order;
    g.identity = a.identity * b.order + b.identity;
    g.table.assign(g.order, std::vector<std::size_t>(g.order));
    g.inverse.resize(g.order);
    for (std::size_t i = 0; i < g.order; ++i) {
        std::size_t ia = i / b.order, ib = i % b.order;
        for (std::size_t j = 0; j < g.order; ++j) {
            std::size_t ja = j / b.order, jb = j % b.order;
            g.table[i][j] = a.table[ia][ja] * b.order + b.table[ib][jb];
        }
        g.inverse[i] = a.inverse[ia] * b.order + b.inverse[ib];
    }
    return g;
}

GroupTable GroupTable::symmetric3() {
    // Permutations of {0,1,2}: e, r, r^2, s, sr, sr^2 with r = (012), s = (01).
    using Perm = std::array<std::size_t, 3>;
    const Perm e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
    auto compose = [](const Perm& p, const Perm& q) {
        return Perm{p[q[0]], p[q[1]], p[q[2]]};
    };
    std::vector<Perm> elems{e, r, compose(r, r), s, compose(s, r), compose(s, compose(r, r))};
    auto find = [&](const Perm& p) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == p) return i;
        throw ShapeError("permutation lookup failed");
    };
    GroupTable g;
    g.order = 6;
    g.identity = 0;
    g.table.assign(6, std::vector<std::size_t>(6));
    g.inverse.resize(6);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) g.table[i][j] = find(compose(elems[i], elems[j]));
        for (std::size_t j = 0; j < 6; ++j)
            if (g.table[i][j] == 0) g.inverse[i] = j;
    }
    return g;
}

Report GroupTable::check() const {
    Report rep{"group table axioms"};
    bool ident = true, inv = true, assoc = true, latin = true;
    std::string wit;
    for (std::size_t i = 0; i < order && ident; ++i)
        if (table[identity][i] != i || table[i][identity] != i) {
            ident = false;
            wit = std::to_string(i);
        }
    rep.add("two-sided identity", ident, wit);
    wit.clear();
    for (std::size_t i = 0; i < order && inv; ++i)
        if (table[i][inverse[i]] != identity || table[inverse[i]][i] != identity) {
            inv = false;
            wit = std::to_string(i);
        }
    rep.add("two-sided inverses", inv, wit);
    wit.clear();
    for (std::size_t i = 0; i < order && assoc; ++i)
        for (std::size_t j = 0; j < order && assoc; ++j)
            for (std::size_t k = 0; k < order && assoc; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]]) {
                    assoc = false;
                    wit = pair_str(i, j) + "," + std::to_string(k);
                }
    rep.add("associativity", assoc, wit);
    wit.clear();
    for (std::size_t i = 0; i < order && latin; ++i) {
        std::vector<bool> seen_row(order, false), seen_col(order, false);
        for (std::size_t j = 0; j < order; ++j) {
            if (seen_row[table[i][j]] || seen_col[table[j][i]]) {
                latin = false;
                wit = std::to_string(i);
                break;
            }
            seen_row[table[i][j]] = seen_col[table[j][i]] = true;
        }
    }
    rep.add("cancellation", latin, wit);
    return rep;
}

HopfData group_algebra(const FieldSpec& f, const GroupTable& g) {
    std::size_t n = g.order;
    AlgebraData a;
    a.field = f;
    a.dim = n;
    a.mult = Tensor3(f, n, n, n);
    a.unit = zero_vec(f, n);
    a.unit[g.identity] = Scalar::one(f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.mult.at(i, j, g.table[i][j]) = Scalar::one(f);
    CoalgebraData c;
    c.field = f;
    c.dim = n;
    c.comult = Tensor3(f, n, n, n);
    c.counit = Vec(n, Scalar::one(f));
    for (std::size_t i = 0; i < n; ++i) c.comult.at(i, i, i) = Scalar::one(f);
    Matrix s(f, n, n);
    for (std::size_t i = 0; i < n; ++i) s.at(g.inverse[i], i) = Scalar::one(f);
    return HopfData::make(a, c, s);
}

HopfData dual_group_algebra(const FieldSpec& f, const GroupTable& g) {
    return dual_hopf(group_algebra(f, g));
}

Report cocycle_check(const FieldSpec& field, const GroupTable& g,
                     const std::vector<std::size_t>& f_elems, const Matrix& sigma) {
    Report rep{"two-cocycle validity"};
    std::size_t m = f_elems.size();
    std::vector<std::size_t> pos(g.order, g.order);
    for (std::size_t i = 0; i < m; ++i) pos[f_elems[i]] = i;

    bool closed = true;
    std::string wit;
    for (std::size_t i = 0; i < m && closed; ++i)
        for (std::size_t j = 0; j < m && closed; ++j)
            if (pos[g.table[f_elems[i]][f_elems[j]]] == g.order) {
                closed = false;
                wit = pair_str(i, j);
            }
    rep.add("subset is closed under multiplication", closed, wit);
    rep.add("subset contains the identity", pos[g.identity] != g.order);
    rep.add("cocycle has matching shape", sigma.rows() == m && sigma.cols() == m);
    if (!rep.all_pass()) return rep;

    std::size_t e = pos[g.identity];
    bool norm = true;
    wit.clear();
    for (std::size_t i = 0; i < m && norm; ++i)
        if (!sigma.at(e, i).is_one() || !sigma.at(i, e).is_one()) {
            norm = false;
            wit = std::to_string(i);
        }
    rep.add("normalization at the identity", norm, wit);

    bool nz = true;
    wit.clear();
    for (std::size_t i = 0; i < m && nz; ++i)
        for (std::size_t j = 0; j < m && nz; ++j)
            if (sigma.at(i, j).is_zero()) {
                nz = false;
                wit = pair_str(i, j);
            }
    rep.add("cocycle values are invertible", nz, wit);

    bool coc = true;
    wit.clear();
    auto mulp = [&](std::size_t i, std::size_t j) { return pos[g.table[f_elems[i]][f_elems[j]]]; };
    for (std::size_t a = 0; a < m && coc; ++a)
        for (std::size_t b = 0; b < m && coc; ++b)
            for (std::size_t c = 0; c < m && coc; ++c)
                if (sigma.at(a, b) * sigma.at(mulp(a, b), c) !=
                    sigma.at(b, c) * sigma.at(a, mulp(b, c))) {
                    coc = false;
                    wit = pair_str(a, b) + "," + std::to_string(c);
                }
    rep.add("cocycle identity", coc, wit);
    (void)field;
    return rep;
}

ComodAlg twisted_group_algebra(const FieldSpec& field, const GroupTable& g,
                               const std::vector<std::size_t>& f_elems, const Matrix& sigma) {
    Report val = cocycle_check(field, g, f_elems, sigma);
    if (!val.all_pass()) throw ShapeError("invalid cocycle data: " + val.text());
    std::size_t m = f_elems.size();
    std::vector<std::size_t> pos(g.order, g.order);
    for (std::size_t i = 0; i < m; ++i) pos[f_elems[i]] = i;

    ComodAlg k;
    k.hopf = group_algebra(field, g);
    k.alg.field = field;
    k.alg.dim = m;
    k.alg.mult = Tensor3(field, m, m, m);
    k.alg.unit = zero_vec(field, m);
    k.alg.unit[pos[g.identity]] = Scalar::one(field);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            k.alg.mult.at(i, j, pos[g.table[f_elems[i]][f_elems[j]]]) = sigma.at(i, j);
    k.coact.dim = m;
    k.coact.hopf_dim = g.order;
    k.coact.side = Side::Left;
    k.coact.coact = Tensor3(field, m, g.order, m);
    for (std::size_t i = 0; i < m; ++i)
        k.coact.coact.at(i, f_elems[i], i) = Scalar::one(field);
    return k;
}

Report group_stab_iso_check(const FieldSpec& field, const GroupTable& g,
                            const std::vector<std::size_t>& f_elems, const Matrix& sigma,
                            const ModuleRep& v) {
    Report rep{"group stabilizer against the balanced tensor realization"};
    ComodAlg k = twisted_group_algebra(field, g, f_elems, sigma);
    const HopfData& h = k.hopf;
    std::size_t n = g.order, nv = v.dim, m = f_elems.size();

    // Left coset representatives, smallest group index first.
    std::vector<std::size_t> reps;
    std::vector<bool> covered(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (covered[i]) continue;
        reps.push_back(i);
        for (std::size_t fp = 0; fp < m; ++fp) covered[g.table[i][f_elems[fp]]] = true;
    }
    std::size_t nc = reps.size();

    StabSpace st = stab_space(k, v, v);
    rep.add("stabilizer dimension is cosets times endomorphisms",
            st.basis.dim() == nc * nv * nv,
            std::to_string(st.basis.dim()) + " vs " + std::to_string(nc * nv * nv));

    std::vector<Matrix> uf, ufinv;
    for (std::size_t fp = 0; fp < m; ++fp) {
        uf.push_back(v.action[fp]);
        ufinv.push_back(inverse(v.action[fp]));
    }

    std::size_t amb = n * nv * nv;
    auto idx = [&](std::size_t i, std::size_t a, std::size_t b) { return (i * nv + a) * nv + b; };
    auto qidx = [&](std::size_t c, std::size_t a, std::size_t b) { return (c * nv + a) * nv + b; };

    // theta on a quotient basis vector: class of rep x_c with endomorphism T.
    auto theta_mat = [&](std::size_t c, const Matrix& t) {
        Vec out = zero_vec(field, amb);
        std::size_t xinv = g.inverse[reps[c]];
        for (std::size_t fp = 0; fp < m; ++fp) {
            std::size_t gi = g.table[f_elems[fp]][xinv];
            Matrix conj = uf[fp] * t * ufinv[fp];
            for (std::size_t a = 0; a < nv; ++a)
                for (std::size_t b = 0; b < nv; ++b) out[idx(gi, a, b)] += conj.at(a, b);
        }
        return out;
    };
    auto theta = [&](const Vec& q) {
        Vec out = zero_vec(field, amb);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t a = 0; a < nv; ++a)
                for (std::size_t b = 0; b < nv; ++b) {
                    const Scalar& co = q[qidx(c, a, b)];
                    if (co.is_zero()) continue;
                    Matrix t(field, nv, nv);
                    t.at(a, b) = co;
                    out = add(out, theta_mat(c, t));
                }
        return out;
    };
    auto psi = [&](const Vec& x) {
        Vec out = zero_vec(field, nc * nv * nv);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t a = 0; a < nv; ++a)
                for (std::size_t b = 0; b < nv; ++b)
                    out[qidx(c, a, b)] = x[idx(g.inverse[reps[c]], a, b)];
        return out;
    };

    bool into = true, left_inv = true;
    std::string wit;
    for (std::size_t c = 0; c < nc && into; ++c)
        for (std::size_t a = 0; a < nv && into; ++a)
            for (std::size_t b = 0; b < nv && into; ++b) {
                Matrix eab(field, nv, nv);
                eab.at(a, b) = Scalar::one(field);
                Vec t = theta_mat(c, eab);
                if (!st.basis.contains(t)) {
                    into = false;
                    wit = pair_str(c, a) + "," + std::to_string(b);
                    continue;
                }
                Vec back = psi(t);
                Vec expect = zero_vec(field, nc * nv * nv);
                expect[qidx(c, a, b)] = Scalar::one(field);
                if (back != expect) {
                    left_inv = false;
                    wit = pair_str(c, a) + "," + std::to_string(b);
                }
            }
    rep.add("balanced tensors map into the stabilizer", into, wit);
    rep.add("evaluation inverts the balanced realization", left_inv, wit);

    bool right_inv = true;
    wit.clear();
    for (std::size_t r = 0; r < st.basis.dim() && right_inv; ++r) {
        Vec x = st.basis.basis().row(r);
        if (theta(psi(x)) != x) {
            right_inv = false;
            wit = std::to_string(r);
        }
    }
    rep.add("balanced realization inverts evaluation", right_inv, wit);

    // Ambient product on the dual-tensor side.
    auto amb_prod = [&](const Vec& x, const Vec& y) {
        Vec z = zero_vec(field, amb);
        for (std::size_t kk = 0; kk < n; ++kk)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const Scalar& co = h.coalg.comult.at(kk, i, j);
                    if (co.is_zero()) continue;
                    for (std::size_t a = 0; a < nv; ++a)
                        for (std::size_t b = 0; b < nv; ++b)
                            for (std::size_t cc = 0; cc < nv; ++cc)
                                z[idx(kk, a, b)] += co * x[idx(i, a, cc)] * y[idx(j, cc, b)];
                }
        return z;
    };

    bool multiplicative = true;
    wit.clear();
    for (std::size_t c1 = 0; c1 < nc && multiplicative; ++c1)
        for (std::size_t a = 0; a < nv && multiplicative; ++a)
            for (std::size_t b = 0; b < nv && multiplicative; ++b)
                for (std::size_t c2 = 0; c2 < nc && multiplicative; ++c2)
                    for (std::size_t cc = 0; cc < nv && multiplicative; ++cc)
                        for (std::size_t d = 0; d < nv && multiplicative; ++d) {
                            Vec q1 = zero_vec(field, nc * nv * nv);
                            q1[qidx(c1, a, b)] = Scalar::one(field);
                            Vec q2 = zero_vec(field, nc * nv * nv);
                            q2[qidx(c2, cc, d)] = Scalar::one(field);
                            Vec qp = zero_vec(field, nc * nv * nv);
                            if (c1 == c2 && b == cc) qp[qidx(c1, a, d)] = Scalar::one(field);
                            if (amb_prod(theta(q1), theta(q2)) != theta(qp)) {
                                multiplicative = false;
                                wit = pair_str(c1, c2);
                            }
                        }
    rep.add("balanced realization is multiplicative", multiplicative, wit);

    {
        Vec qunit = zero_vec(field, nc * nv * nv);
        for (std::size_t c = 0; c < nc; ++c)
            for (std::size_t a = 0; a < nv; ++a) qunit[qidx(c, a, a)] = Scalar::one(field);
        Vec one = zero_vec(field, amb);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < nv; ++a)
                one[idx(i, a, a)] = h.coalg.counit[i];
        rep.add("balanced realization is unital", theta(qunit) == one);
    }

    // Transport of the group action.
    auto ru = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
    std::vector<std::size_t> pos(n, n);
    for (std::size_t i = 0; i < m; ++i) pos[f_elems[i]] = i;
    bool equiv = true;
    wit.clear();
    for (std::size_t gi = 0; gi < n && equiv; ++gi)
        for (std::size_t c = 0; c < nc && equiv; ++c)
            for (std::size_t a = 0; a < nv && equiv; ++a)
                for (std::size_t b = 0; b < nv && equiv; ++b) {
                    Matrix eab(field, nv, nv);
                    eab.at(a, b) = Scalar::one(field);
                    Vec x = theta_mat(c, eab);
                    Vec lhs = zero_vec(field, amb);
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t i2 = 0; i2 < n; ++i2) {
                            if (ru[gi].at(i2, i).is_zero()) continue;
                            for (std::size_t aa = 0; aa < nv; ++aa)
                                for (std::size_t bb = 0; bb < nv; ++bb)
                                    lhs[idx(i2, aa, bb)] +=
                                        ru[gi].at(i2, i) * x[idx(i, aa, bb)];
                        }
                    // g x_c = x_{c'} f, with f in the subgroup.
                    std::size_t gx = g.table[gi][reps[c]];
                    std::size_t cprime = nc, fp = m;
                    for (std::size_t c2 = 0; c2 < nc && cprime == nc; ++c2) {
                        std::size_t f0 = g.table[g.inverse[reps[c2]]][gx];
                        if (pos[f0] != n) {
                            cprime = c2;
                            fp = pos[f0];
                        }
                    }
                    Vec rhs = theta_mat(cprime, uf[fp] * eab * ufinv[fp]);
                    if (lhs != rhs) {
                        equiv = false;
                        wit = pair_str(gi, c);
                    }
                }
    rep.add("balanced realization transports the group action", equiv, wit);
    return rep;
}

HopfData taft(std::size_t n, const FieldSpec& f, const Scalar& zeta) {
    if (n < 2) throw ShapeError("taft dimension parameter must be at least 2");
    // zeta must be a primitive n-th root of unity.
    Scalar p = Scalar::one(f);
    for (std::size_t i = 1; i < n; ++i) {
        p *= zeta;
        if (p.is_one()) throw FieldError("root of unity has order below " + std::to_string(n));
    }
    if (!(p * zeta).is_one()) throw FieldError("not an n-th root of unity");

    std::size_t d = n * n;
    auto idx = [&](std::size_t a, std::size_t b) { return a * n + b; };
    auto zpow = [&](long e) {
        long nn = static_cast<long>(n);
        long r = ((e % nn) + nn) % nn;
        return zeta.pow(r);
    };

    // Gaussian binomials for the parameter zeta.
    std::vector<std::vector<Scalar>> binom(n, std::vector<Scalar>(n, Scalar::zero(f)));
    for (std::size_t mm = 0; mm < n; ++mm) {
        binom[mm][0] = Scalar::one(f);
        for (std::size_t kk = 1; kk <= mm; ++kk)
            binom[mm][kk] = (kk <= mm - 1 ? binom[mm - 1][kk] * zpow(static_cast<long>(kk))
                                          : Scalar::zero(f)) +
                            binom[mm - 1][kk - 1];
    }

    AlgebraData a;
    a.field = f;
    a.dim = d;
    a.mult = Tensor3(f, d, d, d);
    a.unit = zero_vec(f, d);
    a.unit[idx(0, 0)] = Scalar::one(f);
    for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t b1 = 0; b1 < n; ++b1)
            for (std::size_t a2 = 0; a2 < n; ++a2)
                for (std::size_t b2 = 0; b2 < n; ++b2) {
                    if (b1 + b2 >= n) continue;
                    a.mult.at(idx(a1, b1), idx(a2, b2), idx((a1 + a2) % n, b1 + b2)) =
                        zpow(static_cast<long>(b1 * a2));
                }

    CoalgebraData c;
    c.field = f;
    c.dim = d;
    c.comult = Tensor3(f, d, d, d);
    c.counit = zero_vec(f, d);
    for (std::size_t aa = 0; aa < n; ++aa) c.counit[idx(aa, 0)] = Scalar::one(f);
    for (std::size_t aa = 0; aa < n; ++aa)
        for (std::size_t bb = 0; bb < n; ++bb)
            for (std::size_t kk = 0; kk <= bb; ++kk)
                c.comult.at(idx(aa, bb), idx((aa + bb - kk) % n, kk), idx(aa, bb - kk)) =
                    binom[bb][kk];

    Matrix s(f, d, d);
    for (std::size_t aa = 0; aa < n; ++aa)
        for (std::size_t bb = 0; bb < n; ++bb) {
            long e = -static_cast<long>(bb * (bb - 1) / 2) - static_cast<long>(aa * bb);
            Scalar val = zpow(e);
            if (bb % 2 == 1) val = -val;
            s.at(idx((2 * n - aa - bb) % n, bb), idx(aa, bb)) = val;
        }
    return HopfData::make(a, c, s);
}

HopfData sweedler() {
    FieldSpec q = FieldSpec::rationals();
    return taft(2, q, Scalar(q, -1));
}

ComodAlg coideal_comodalg(const HopfData& h, const Subspace& k_span) {
    const auto& f = h.field();
    std::size_t n = h.dim(), dk = k_span.dim();
    ComodAlg k;
    k.hopf = h;
    k.alg.field = f;
    k.alg.dim = dk;
    k.alg.mult = Tensor3(f, dk, dk, dk);
    auto unit_co = k_span.coordinates(h.alg.unit);
    if (!unit_co) throw ShapeError("coideal subalgebra span does not contain the unit");
    k.alg.unit = *unit_co;
    for (std::size_t i = 0; i < dk; ++i)
        for (std::size_t j = 0; j < dk; ++j) {
            Vec prod = h.alg.multiply(k_span.basis().row(i), k_span.basis().row(j));
            auto co = k_span.coordinates(prod);
            if (!co) throw ShapeError("coideal subalgebra span is not closed under products");
            for (std::size_t r = 0; r < dk; ++r) k.alg.mult.at(i, j, r) = (*co)[r];
        }
    k.coact.dim = dk;
    k.coact.hopf_dim = n;
    k.coact.side = Side::Left;
    k.coact.coact = Tensor3(f, dk, n, dk);
    for (std::size_t i = 0; i < dk; ++i) {
        Vec d = h.coalg.delta(k_span.basis().row(i));
        for (std::size_t j = 0; j < n; ++j) {
            Vec comp(n, Scalar::zero(f));
            for (std::size_t kk = 0; kk < n; ++kk) comp[kk] = d[j * n + kk];
            auto co = k_span.coordinates(comp);
            if (!co) throw ShapeError("coideal subalgebra span is not a left coideal");
            for (std::size_t s = 0; s < dk; ++s) k.coact.coact.at(i, j, s) = (*co)[s];
        }
    }
    return k;
}

Report coideal_subalgebra_check(const HopfData& h, const Subspace& k_span) {
    Report rep{"coideal subalgebra stabilizer realization"};
    const auto& f = h.field();
    std::size_t n = h.dim(), dk = k_span.dim();

    rep.add("contains the unit", k_span.contains(h.alg.unit));
    {
        bool closed = true;
        std::string wit;
        for (std::size_t i = 0; i < dk && closed; ++i)
            for (std::size_t j = 0; j < dk && closed; ++j)
                if (!k_span.contains(
                        h.alg.multiply(k_span.basis().row(i), k_span.basis().row(j)))) {
                    closed = false;
                    wit = pair_str(i, j);
                }
        rep.add("closed under multiplication", closed, wit);
    }
    bool coideal = true;
    {
        std::string wit;
        for (std::size_t i = 0; i < dk && coideal; ++i) {
            Vec d = h.coalg.delta(k_span.basis().row(i));
            for (std::size_t j = 0; j < n && coideal; ++j) {
                Vec comp(n, Scalar::zero(f));
                for (std::size_t kk = 0; kk < n; ++kk) comp[kk] = d[j * n + kk];
                if (!k_span.contains(comp)) {
                    coideal = false;
                    wit = pair_str(i, j);
                }
            }
        }
        rep.add("left coideal", coideal, wit);
    }
    if (!rep.all_pass()) return rep;

    ComodAlg k = coideal_comodalg(h, k_span);

    // The augmentation kernel of K and the left ideal it generates.
    Vec eps_on_k(dk, Scalar::zero(f));
    for (std::size_t i = 0; i < dk; ++i)
        eps_on_k[i] = dot(h.coalg.counit, k_span.basis().row(i));
    Matrix eps_row(f, 1, dk);
    eps_row.set_row(0, eps_on_k);
    Subspace kplus = kernel(eps_row);

    std::vector<Vec> jrows;
    for (std::size_t r = 0; r < kplus.dim(); ++r) {
        Vec amb = zero_vec(f, n);
        for (std::size_t i = 0; i < dk; ++i)
            amb = add(amb, scale(kplus.basis().row(r)[i], k_span.basis().row(i)));
        Vec samb = h.apply_antipode_inv(amb);
        for (std::size_t t = 0; t < n; ++t)
            jrows.push_back(h.alg.multiply(samb, unit_vec(f, n, t)));
    }
    Subspace j = jrows.empty() ? Subspace::zero(f, n)
                               : Subspace::span(f, n, rows_matrix(f, n, jrows));

    QuotientMaps qm = quotient(n, j);
    std::size_t nq = qm.projection.rows();

    {
        bool ok = true;
        std::string wit;
        for (std::size_t r = 0; r < j.dim() && ok; ++r) {
            Vec v = j.basis().row(r);
            if (!dot(h.coalg.counit, v).is_zero()) {
                ok = false;
                wit = "counit at " + std::to_string(r);
                break;
            }
            Vec d = h.coalg.delta(v);
            for (std::size_t a = 0; a < nq && ok; ++a)
                for (std::size_t b = 0; b < nq && ok; ++b) {
                    Scalar acc = Scalar::zero(f);
                    for (std::size_t x = 0; x < n; ++x)
                        for (std::size_t y = 0; y < n; ++y)
                            acc += qm.projection.at(a, x) * qm.projection.at(b, y) * d[x * n + y];
                    if (!acc.is_zero()) {
                        ok = false;
                        wit = std::to_string(r);
                    }
                }
        }
        rep.add("generated ideal is a coideal with trivial counit", ok, wit);
    }

    Subspace pi_star = Subspace::span(f, n, qm.projection);

    Vec chi(dk, Scalar::zero(f));
    for (std::size_t i = 0; i < dk; ++i) chi[i] = eps_on_k[i];
    ModuleRep triv = character_module(k.alg, chi);
    StabSpace st = stab_space(k, triv, triv);
    rep.add("stabilizer equals the quotient annihilator", st.basis == pi_star,
            std::to_string(st.basis.dim()) + " vs " + std::to_string(pi_star.dim()));

    // Quotient coalgebra structure constants.
    Tensor3 dbar(f, nq, nq, nq);
    for (std::size_t c = 0; c < nq; ++c) {
        Vec sect(n, Scalar::zero(f));
        for (std::size_t x = 0; x < n; ++x) sect[x] = qm.section.at(x, c);
        Vec d = h.coalg.delta(sect);
        for (std::size_t a = 0; a < nq; ++a)
            for (std::size_t b = 0; b < nq; ++b) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y)
                        acc += qm.projection.at(a, x) * qm.projection.at(b, y) * d[x * n + y];
                dbar.at(c, a, b) = acc;
            }
    }
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < nq && ok; ++i)
            for (std::size_t jj = 0; jj < nq && ok; ++jj) {
                Vec lhs = h.dual_multiply(qm.projection.row(i), qm.projection.row(jj));
                Vec rhs = zero_vec(f, n);
                for (std::size_t c = 0; c < nq; ++c)
                    rhs = add(rhs, scale(dbar.at(c, i, jj), qm.projection.row(c)));
                if (lhs != rhs) {
                    ok = false;
                    wit = pair_str(i, jj);
                }
            }
        rep.add("induced algebra structures agree", ok, wit);
    }
    {
        Vec eps_bar = zero_vec(f, n);
        for (std::size_t c = 0; c < nq; ++c) {
            Vec sect(n, Scalar::zero(f));
            for (std::size_t x = 0; x < n; ++x) sect[x] = qm.section.at(x, c);
            eps_bar = add(eps_bar, scale(dot(h.coalg.counit, sect), qm.projection.row(c)));
        }
        rep.add("induced units agree", eps_bar == h.coalg.counit);
    }
    return rep;
}

Report galois_check(const HopfData& h, const Matrix& incl, const ComodAlg& k,
                    const ModuleRep& w) {
    Report rep{"Hopf-Galois extension and the convolution realization"};
    const HopfData& hp = k.hopf;
    const auto& f = h.field();
    std::size_t nh = h.dim(), np = hp.dim(), nk = k.alg.dim, nw = w.dim;
    if (k.coact.side != Side::Left) throw ShapeError("galois_check expects a left comodule");

    Subspace r = coinvariants(hp, k.coact);
    {
        bool ok = r.contains(k.alg.unit);
        for (std::size_t i = 0; i < r.dim() && ok; ++i)
            for (std::size_t j = 0; j < r.dim() && ok; ++j)
                ok = r.contains(k.alg.multiply(r.basis().row(i), r.basis().row(j)));
        rep.add("coinvariants form a subalgebra", ok);
    }

    // Relation space of the balanced tensor square.
    auto pair_idx = [&](std::size_t x, std::size_t y) { return x * nk + y; };
    std::vector<Vec> rel;
    for (std::size_t rr = 0; rr < r.dim(); ++rr) {
        Vec rho = r.basis().row(rr);
        for (std::size_t x = 0; x < nk; ++x) {
            Vec xr = k.alg.multiply(unit_vec(f, nk, x), rho);
            for (std::size_t y = 0; y < nk; ++y) {
                Vec ry = k.alg.multiply(rho, unit_vec(f, nk, y));
                Vec v = zero_vec(f, nk * nk);
                for (std::size_t m1 = 0; m1 < nk; ++m1) v[pair_idx(m1, y)] += xr[m1];
                for (std::size_t m2 = 0; m2 < nk; ++m2) v[pair_idx(x, m2)] -= ry[m2];
                rel.push_back(v);
            }
        }
    }
    Subspace rel_span = rel.empty() ? Subspace::zero(f, nk * nk)
                                    : Subspace::span(f, nk * nk, rows_matrix(f, nk * nk, rel));
    QuotientMaps qm = quotient(nk * nk, rel_span);
    std::size_t mq = qm.projection.rows();

    // Galois map x (x) y -> x_{-1} (x) x_0 y on the tensor square.
    Matrix b0(f, np * nk, nk * nk);
    for (std::size_t x = 0; x < nk; ++x)
        for (std::size_t y = 0; y < nk; ++y)
            for (std::size_t rr = 0; rr < np; ++rr)
                for (std::size_t s = 0; s < nk; ++s) {
                    const Scalar& c = k.coact.coact.at(x, rr, s);
                    if (c.is_zero()) continue;
                    for (std::size_t m = 0; m < nk; ++m)
                        b0.at(rr * nk + m, pair_idx(x, y)) += c * k.alg.mult.at(s, y, m);
                }
    {
        bool ok = true;
        for (std::size_t i = 0; i < rel_span.dim() && ok; ++i)
            ok = is_zero(b0.apply(rel_span.basis().row(i)));
        rep.add("Galois map kills the balancing relations", ok);
    }
    Matrix bq = b0 * qm.section;
    bool bijective = mq == np * nk;
    Matrix bq_inv;
    if (bijective) {
        try {
            bq_inv = inverse(bq);
        } catch (const ShapeError&) {
            bijective = false;
        } catch (const std::exception&) {
            bijective = false;
        }
    }
    rep.add("Galois map is bijective", bijective,
            std::to_string(mq) + " vs " + std::to_string(np * nk));
    if (!bijective) return rep;

    // Translation elements, in quotient and lifted coordinates.
    std::vector<Vec> tau(np), lift(np);
    for (std::size_t t = 0; t < np; ++t) {
        Vec target = zero_vec(f, np * nk);
        for (std::size_t m = 0; m < nk; ++m) target[t * nk + m] = k.alg.unit[m];
        tau[t] = bq_inv.apply(target);
        lift[t] = qm.section.apply(tau[t]);
    }
    auto project = [&](const Vec& v) { return qm.projection.apply(v); };

    std::vector<std::vector<Vec>> prodk(nk, std::vector<Vec>(nk));
    for (std::size_t x = 0; x < nk; ++x)
        for (std::size_t y = 0; y < nk; ++y)
            prodk[x][y] = k.alg.multiply(unit_vec(f, nk, x), unit_vec(f, nk, y));

    // Centrality of the translations over the coinvariants.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t rr = 0; rr < r.dim() && ok; ++rr) {
            Vec rho = r.basis().row(rr);
            Matrix lrho = k.alg.left_mult(rho), rrho = k.alg.right_mult(rho);
            for (std::size_t t = 0; t < np && ok; ++t) {
                Vec a = zero_vec(f, nk * nk), b = zero_vec(f, nk * nk);
                for (std::size_t x = 0; x < nk; ++x)
                    for (std::size_t y = 0; y < nk; ++y) {
                        const Scalar& c = lift[t][pair_idx(x, y)];
                        if (c.is_zero()) continue;
                        for (std::size_t m = 0; m < nk; ++m) {
                            a[pair_idx(m, y)] += c * lrho.at(m, x);
                            b[pair_idx(x, m)] += c * rrho.at(m, y);
                        }
                    }
                if (project(a) != project(b)) {
                    ok = false;
                    wit = pair_str(rr, t);
                }
            }
        }
        rep.add("translations centralize the coinvariants", ok, wit);
    }
    // Multiplying the two legs gives the counit.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t t = 0; t < np && ok; ++t) {
            Vec m = zero_vec(f, nk);
            for (std::size_t x = 0; x < nk; ++x)
                for (std::size_t y = 0; y < nk; ++y) {
                    const Scalar& c = lift[t][pair_idx(x, y)];
                    if (!c.is_zero()) m = add(m, scale(c, prodk[x][y]));
                }
            if (m != scale(hp.coalg.counit[t], k.alg.unit)) {
                ok = false;
                wit = std::to_string(t);
            }
        }
        rep.add("translations collapse to the counit", ok, wit);
    }
    // Anti-multiplicativity across the two legs.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t t = 0; t < np && ok; ++t)
            for (std::size_t u = 0; u < np && ok; ++u) {
                Vec lhs = zero_vec(f, mq);
                for (std::size_t p = 0; p < np; ++p) {
                    const Scalar& c = hp.alg.mult.at(t, u, p);
                    if (!c.is_zero()) lhs = add(lhs, scale(c, tau[p]));
                }
                Vec z = zero_vec(f, nk * nk);
                for (std::size_t a = 0; a < nk; ++a)
                    for (std::size_t b = 0; b < nk; ++b) {
                        const Scalar& ct = lift[t][pair_idx(a, b)];
                        if (ct.is_zero()) continue;
                        for (std::size_t c = 0; c < nk; ++c)
                            for (std::size_t d = 0; d < nk; ++d) {
                                const Scalar& cu = lift[u][pair_idx(c, d)];
                                if (cu.is_zero()) continue;
                                for (std::size_t m1 = 0; m1 < nk; ++m1)
                                    for (std::size_t m2 = 0; m2 < nk; ++m2)
                                        z[pair_idx(m1, m2)] +=
                                            ct * cu * prodk[a][c][m1] * prodk[d][b][m2];
                            }
                    }
                if (project(z) != lhs) {
                    ok = false;
                    wit = pair_str(t, u);
                }
            }
        rep.add("translations reverse products", ok, wit);
    }
    // Coproduct compatibility inside the balanced triple tensor.
    {
        auto tri = [&](std::size_t a, std::size_t b, std::size_t c) {
            return (a * nk + b) * nk + c;
        };
        std::vector<Vec> rel3;
        for (std::size_t rr = 0; rr < r.dim(); ++rr) {
            Vec rho = r.basis().row(rr);
            Matrix lrho = k.alg.left_mult(rho), rrho = k.alg.right_mult(rho);
            for (std::size_t x = 0; x < nk; ++x)
                for (std::size_t y = 0; y < nk; ++y)
                    for (std::size_t z = 0; z < nk; ++z) {
                        Vec v1 = zero_vec(f, nk * nk * nk);
                        for (std::size_t m = 0; m < nk; ++m) {
                            v1[tri(m, y, z)] += rrho.at(m, x);
                            v1[tri(x, m, z)] -= lrho.at(m, y);
                        }
                        rel3.push_back(v1);
                        Vec v2 = zero_vec(f, nk * nk * nk);
                        for (std::size_t m = 0; m < nk; ++m) {
                            v2[tri(x, m, z)] += rrho.at(m, y);
                            v2[tri(x, y, m)] -= lrho.at(m, z);
                        }
                        rel3.push_back(v2);
                    }
        }
        Subspace rel3_span =
            rel3.empty() ? Subspace::zero(f, nk * nk * nk)
                         : Subspace::span(f, nk * nk * nk, rows_matrix(f, nk * nk * nk, rel3));
        QuotientMaps qm3 = quotient(nk * nk * nk, rel3_span);
        bool ok = true;
        std::string wit;
        for (std::size_t t = 0; t < np && ok; ++t) {
            Vec lhs = zero_vec(f, nk * nk * nk);
            for (std::size_t x = 0; x < nk; ++x)
                for (std::size_t y = 0; y < nk; ++y) {
                    const Scalar& c = lift[t][pair_idx(x, y)];
                    if (c.is_zero()) continue;
                    for (std::size_t m = 0; m < nk; ++m) lhs[tri(x, m, y)] += c * k.alg.unit[m];
                }
            Vec rhs = zero_vec(f, nk * nk * nk);
            for (std::size_t t1 = 0; t1 < np; ++t1)
                for (std::size_t t2 = 0; t2 < np; ++t2) {
                    const Scalar& dc = hp.coalg.comult.at(t, t1, t2);
                    if (dc.is_zero()) continue;
                    for (std::size_t x = 0; x < nk; ++x)
                        for (std::size_t y = 0; y < nk; ++y) {
                            const Scalar& c1 = lift[t1][pair_idx(x, y)];
                            if (c1.is_zero()) continue;
                            for (std::size_t x2 = 0; x2 < nk; ++x2)
                                for (std::size_t y2 = 0; y2 < nk; ++y2) {
                                    const Scalar& c2 = lift[t2][pair_idx(x2, y2)];
                                    if (c2.is_zero()) continue;
                                    for (std::size_t m = 0; m < nk; ++m)
                                        rhs[tri(x, m, y2)] +=
                                            dc * c1 * c2 * prodk[y][x2][m];
                                }
                        }
                }
            if (qm3.projection.apply(lhs) != qm3.projection.apply(rhs)) {
                ok = false;
                wit = std::to_string(t);
            }
        }
        rep.add("translations split the coproduct", ok, wit);
    }
    // Coaction compatibility: k (x) 1 and 1 (x) k through the translations.
    {
        bool ok5 = true, ok6 = true;
        std::string wit5, wit6;
        for (std::size_t q = 0; q < nk; ++q) {
            Vec lhs5 = zero_vec(f, nk * nk);
            for (std::size_t m = 0; m < nk; ++m) lhs5[pair_idx(q, m)] = k.alg.unit[m];
            Vec rhs5 = zero_vec(f, nk * nk);
            Vec lhs6 = zero_vec(f, nk * nk);
            for (std::size_t m = 0; m < nk; ++m) lhs6[pair_idx(m, q)] = k.alg.unit[m];
            Vec rhs6 = zero_vec(f, nk * nk);
            for (std::size_t rr = 0; rr < np; ++rr)
                for (std::size_t s = 0; s < nk; ++s) {
                    const Scalar& c = k.coact.coact.at(q, rr, s);
                    if (c.is_zero()) continue;
                    Matrix rs = k.alg.right_mult(unit_vec(f, nk, s));
                    Matrix ls = k.alg.left_mult(unit_vec(f, nk, s));
                    for (std::size_t x = 0; x < nk; ++x)
                        for (std::size_t y = 0; y < nk; ++y) {
                            const Scalar& ct = lift[rr][pair_idx(x, y)];
                            if (!ct.is_zero())
                                for (std::size_t m = 0; m < nk; ++m)
                                    rhs5[pair_idx(x, m)] += c * ct * rs.at(m, y);
                        }
                    for (std::size_t u = 0; u < np; ++u) {
                        Scalar cc = c * hp.antipode_inv.at(u, rr);
                        if (cc.is_zero()) continue;
                        for (std::size_t x = 0; x < nk; ++x)
                            for (std::size_t y = 0; y < nk; ++y) {
                                const Scalar& ct = lift[u][pair_idx(x, y)];
                                if (!ct.is_zero())
                                    for (std::size_t m = 0; m < nk; ++m)
                                        rhs6[pair_idx(m, y)] += cc * ct * ls.at(m, x);
                            }
                    }
                }
            if (ok5 && project(lhs5) != project(rhs5)) {
                ok5 = false;
                wit5 = std::to_string(q);
            }
            if (ok6 && project(lhs6) != project(rhs6)) {
                ok6 = false;
                wit6 = std::to_string(q);
            }
        }
        rep.add("coacted translations recover the left tensor factor", ok5, wit5);
        rep.add("antipode-twisted translations recover the right tensor factor", ok6, wit6);
    }
    // Equivariance of the translations under the coaction of the second leg.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t t = 0; t < np && ok; ++t) {
            // h_2 (x) tau(h_1) in H' (x) (balanced square)
            Vec lhs = zero_vec(f, np * mq);
            for (std::size_t t1 = 0; t1 < np; ++t1)
                for (std::size_t t2 = 0; t2 < np; ++t2) {
                    const Scalar& dc = hp.coalg.comult.at(t, t1, t2);
                    if (dc.is_zero()) continue;
                    for (std::size_t m = 0; m < mq; ++m)
                        lhs[t2 * mq + m] += dc * tau[t1][m];
                }
            Vec rhs = zero_vec(f, np * mq);
            for (std::size_t x = 0; x < nk; ++x)
                for (std::size_t y = 0; y < nk; ++y) {
                    const Scalar& c = lift[t][pair_idx(x, y)];
                    if (c.is_zero()) continue;
                    for (std::size_t rr = 0; rr < np; ++rr)
                        for (std::size_t s = 0; s < nk; ++s) {
                            const Scalar& cc = k.coact.coact.at(y, rr, s);
                            if (cc.is_zero()) continue;
                            Vec pr = zero_vec(f, nk * nk);
                            pr[pair_idx(x, s)] = Scalar::one(f);
                            Vec prq = project(pr);
                            for (std::size_t u = 0; u < np; ++u) {
                                Scalar coef = c * cc * hp.antipode_inv.at(u, rr);
                                if (coef.is_zero()) continue;
                                for (std::size_t m = 0; m < mq; ++m)
                                    rhs[u * mq + m] += coef * prq[m];
                            }
                        }
                }
            if (lhs != rhs) {
                ok = false;
                wit = std::to_string(t);
            }
        }
        rep.add("translations are coaction equivariant", ok, wit);
    }

    // R-linear endomorphisms of W with the translated action.
    std::vector<Matrix> rho_r;
    for (std::size_t rr = 0; rr < r.dim(); ++rr) rho_r.push_back(w.act(k.alg, r.basis().row(rr)));
    Subspace er = commutant(f, nw, rho_r);
    std::size_t de = er.dim();
    std::vector<Matrix> er_mats;
    for (std::size_t i = 0; i < de; ++i) er_mats.push_back(unflatten(f, er.basis().row(i), nw, nw));

    std::vector<Matrix> act_full;
    for (std::size_t t = 0; t < np; ++t) {
        Matrix m(f, nw * nw, nw * nw);
        for (std::size_t x = 0; x < nk; ++x)
            for (std::size_t y = 0; y < nk; ++y) {
                const Scalar& c = lift[t][pair_idx(x, y)];
                if (!c.is_zero())
                    m = m + hom_conjugation(w.action[x], w.action[y], nw, nw).scaled(c);
            }
        act_full.push_back(m);
    }
    {
        bool closed = true;
        std::string wit;
        for (std::size_t t = 0; t < np && closed; ++t)
            for (std::size_t i = 0; i < de && closed; ++i)
                if (!er.contains(act_full[t].apply(er.basis().row(i)))) {
                    closed = false;
                    wit = pair_str(t, i);
                }
        rep.add("translated action preserves the relative endomorphisms", closed, wit);
        if (!closed) return rep;
    }
    ModuleRep er_rep;
    er_rep.dim = de;
    er_rep.side = Side::Left;
    for (std::size_t t = 0; t < np; ++t) {
        Matrix m(f, de, de);
        for (std::size_t i = 0; i < de; ++i) {
            Vec co = *er.coordinates(act_full[t].apply(er.basis().row(i)));
            for (std::size_t jj = 0; jj < de; ++jj) m.at(jj, i) = co[jj];
        }
        er_rep.action.push_back(m);
    }
    rep.add("translated action satisfies the module axioms",
            er_rep.check(hp.alg).all_pass());
    {
        Matrix stacked(f, np * de, de);
        for (std::size_t t = 0; t < np; ++t) {
            Matrix m = er_rep.action[t] - Matrix::identity(f, de).scaled(hp.coalg.counit[t]);
            for (std::size_t rr2 = 0; rr2 < de; ++rr2) stacked.set_row(t * de + rr2, m.row(rr2));
        }
        Subspace inv = kernel(stacked);
        std::vector<Vec> inv_amb;
        for (std::size_t i = 0; i < inv.dim(); ++i) {
            Vec v = zero_vec(f, nw * nw);
            for (std::size_t jj = 0; jj < de; ++jj)
                v = add(v, scale(inv.basis().row(i)[jj], er.basis().row(jj)));
            inv_amb.push_back(v);
        }
        Subspace inv_span = inv_amb.empty()
                                ? Subspace::zero(f, nw * nw)
                                : Subspace::span(f, nw * nw, rows_matrix(f, nw * nw, inv_amb));
        Subspace endk = commutant(f, nw, w.action);
        rep.add("invariants are the full module endomorphisms", inv_span == endk,
                std::to_string(inv_span.dim()) + " vs " + std::to_string(endk.dim()));
    }

    // Convolution algebra Hom over H' from H into the relative endomorphisms.
    std::vector<Matrix> lt;
    for (std::size_t t = 0; t < np; ++t) {
        Vec img = zero_vec(f, nh);
        for (std::size_t x = 0; x < nh; ++x) img[x] = incl.at(x, t);
        lt.push_back(h.alg.left_mult(img));
    }
    std::size_t hs_amb = de * nh;
    auto hs_idx = [&](std::size_t mu, std::size_t x) { return mu * nh + x; };
    Matrix rows(f, np * nh * de, hs_amb);
    {
        std::size_t rr = 0;
        for (std::size_t t = 0; t < np; ++t)
            for (std::size_t x = 0; x < nh; ++x)
                for (std::size_t mu = 0; mu < de; ++mu, ++rr) {
                    for (std::size_t y = 0; y < nh; ++y)
                        rows.at(rr, hs_idx(mu, y)) += lt[t].at(y, x);
                    for (std::size_t nu = 0; nu < de; ++nu)
                        rows.at(rr, hs_idx(nu, x)) -= er_rep.action[t].at(mu, nu);
                }
    }
    Subspace hom_sp = kernel(rows);

    ComodAlg kh;
    kh.hopf = h;
    kh.alg = k.alg;
    kh.coact.dim = nk;
    kh.coact.hopf_dim = nh;
    kh.coact.side = Side::Left;
    kh.coact.coact = Tensor3(f, nk, nh, nk);
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t x = 0; x < nh; ++x)
            for (std::size_t s = 0; s < nk; ++s) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t t = 0; t < np; ++t)
                    acc += incl.at(x, t) * k.coact.coact.at(i, t, s);
                kh.coact.coact.at(i, x, s) = acc;
            }
    StabSpace st = stab_space(kh, w, w);
    std::size_t d = st.basis.dim();

    auto phi = [&](const Vec& amb) -> std::optional<Vec> {
        Vec t = zero_vec(f, hs_amb);
        for (std::size_t x = 0; x < nh; ++x) {
            Matrix m(f, nw, nw);
            for (std::size_t a = 0; a < nw; ++a)
                for (std::size_t b = 0; b < nw; ++b) m.at(a, b) = amb[(x * nw + a) * nw + b];
            auto co = er.coordinates(flatten(m));
            if (!co) return std::nullopt;
            for (std::size_t mu = 0; mu < de; ++mu) t[hs_idx(mu, x)] = (*co)[mu];
        }
        return t;
    };
    auto expand = [&](const Vec& t, std::size_t x) {
        Matrix m(f, nw, nw);
        for (std::size_t mu = 0; mu < de; ++mu) {
            const Scalar& c = t[hs_idx(mu, x)];
            if (!c.is_zero()) m = m + er_mats[mu].scaled(c);
        }
        return m;
    };

    std::vector<Vec> phi_imgs;
    {
        bool rlin = true, lands = true;
        std::string wit;
        for (std::size_t i = 0; i < d; ++i) {
            auto t = phi(st.basis.basis().row(i));
            if (!t) {
                rlin = false;
                wit = std::to_string(i);
                break;
            }
            phi_imgs.push_back(*t);
            if (!hom_sp.contains(*t)) {
                lands = false;
                wit = std::to_string(i);
            }
        }
        rep.add("stabilizer evaluations are relative endomorphisms", rlin, wit);
        rep.add("realization lands in the convolution algebra", rlin && lands, wit);
        if (!rlin) return rep;
    }
    {
        Subspace img = phi_imgs.empty()
                           ? Subspace::zero(f, hs_amb)
                           : Subspace::span(f, hs_amb, rows_matrix(f, hs_amb, phi_imgs));
        rep.add("realization is bijective", img == hom_sp && d == hom_sp.dim(),
                std::to_string(d) + " vs " + std::to_string(hom_sp.dim()));
    }
    // The dual-basis section inverts the realization.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < d && ok; ++i) {
            Vec amb = zero_vec(f, nh * nw * nw);
            for (std::size_t x = 0; x < nh; ++x) {
                Matrix m = expand(phi_imgs[i], x);
                for (std::size_t a = 0; a < nw; ++a)
                    for (std::size_t b = 0; b < nw; ++b) amb[(x * nw + a) * nw + b] = m.at(a, b);
            }
            if (amb != st.basis.basis().row(i)) {
                ok = false;
                wit = std::to_string(i);
            }
        }
        rep.add("dual-basis section inverts the realization", ok, wit);
    }
    // Algebra map with respect to convolution.
    {
        auto amb_prod = [&](const Vec& x, const Vec& y) {
            Vec z = zero_vec(f, nh * nw * nw);
            for (std::size_t kk = 0; kk < nh; ++kk)
                for (std::size_t i = 0; i < nh; ++i)
                    for (std::size_t j = 0; j < nh; ++j) {
                        const Scalar& co = h.coalg.comult.at(kk, i, j);
                        if (co.is_zero()) continue;
                        for (std::size_t a = 0; a < nw; ++a)
                            for (std::size_t b = 0; b < nw; ++b)
                                for (std::size_t cc = 0; cc < nw; ++cc)
                                    z[(kk * nw + a) * nw + b] += co * x[(i * nw + a) * nw + cc] *
                                                                y[(j * nw + cc) * nw + b];
                    }
            return z;
        };
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < d && ok; ++i)
            for (std::size_t j = 0; j < d && ok; ++j) {
                Vec z = amb_prod(st.basis.basis().row(i), st.basis.basis().row(j));
                auto pz = phi(z);
                if (!pz) {
                    ok = false;
                    wit = pair_str(i, j);
                    break;
                }
                Vec conv = zero_vec(f, hs_amb);
                bool inner_ok = true;
                for (std::size_t x = 0; x < nh && inner_ok; ++x) {
                    Matrix acc(f, nw, nw);
                    for (std::size_t x1 = 0; x1 < nh; ++x1)
                        for (std::size_t x2 = 0; x2 < nh; ++x2) {
                            const Scalar& co = h.coalg.comult.at(x, x1, x2);
                            if (co.is_zero()) continue;
                            acc = acc +
                                  (expand(phi_imgs[i], x1) * expand(phi_imgs[j], x2)).scaled(co);
                        }
                    auto coo = er.coordinates(flatten(acc));
                    if (!coo) {
                        inner_ok = false;
                        break;
                    }
                    for (std::size_t mu = 0; mu < de; ++mu) conv[hs_idx(mu, x)] = (*coo)[mu];
                }
                if (!inner_ok || *pz != conv) {
                    ok = false;
                    wit = pair_str(i, j);
                }
            }
        rep.add("realization is a convolution algebra map", ok, wit);
    }
    {
        Vec one_amb = zero_vec(f, nh * nw * nw);
        for (std::size_t x = 0; x < nh; ++x)
            for (std::size_t a = 0; a < nw; ++a)
                one_amb[(x * nw + a) * nw + a] = h.coalg.counit[x];
        auto pone = phi(one_amb);
        Vec expect = zero_vec(f, hs_amb);
        auto idco = er.coordinates(flatten(Matrix::identity(f, nw)));
        bool ok = pone.has_value() && idco.has_value();
        if (ok)
            for (std::size_t x = 0; x < nh; ++x)
                for (std::size_t mu = 0; mu < de; ++mu)
                    expect[hs_idx(mu, x)] = h.coalg.counit[x] * (*idco)[mu];
        rep.add("realization is unital", ok && *pone == expect);
    }
    // Transport of the comodule structure.
    {
        auto ru = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
        bool ok = true;
        std::string wit;
        for (std::size_t gi = 0; gi < nh && ok; ++gi) {
            Matrix rg = h.alg.right_mult(unit_vec(f, nh, gi));
            for (std::size_t i = 0; i < d && ok; ++i) {
                Vec x = st.basis.basis().row(i);
                Vec moved = zero_vec(f, nh * nw * nw);
                for (std::size_t i1 = 0; i1 < nh; ++i1)
                    for (std::size_t i2 = 0; i2 < nh; ++i2) {
                        const Scalar& c = ru[gi].at(i2, i1);
                        if (c.is_zero()) continue;
                        for (std::size_t a = 0; a < nw; ++a)
                            for (std::size_t b = 0; b < nw; ++b)
                                moved[(i2 * nw + a) * nw + b] += c * x[(i1 * nw + a) * nw + b];
                    }
                auto pm = phi(moved);
                if (!pm) {
                    ok = false;
                    wit = pair_str(gi, i);
                    break;
                }
                Vec shifted = zero_vec(f, hs_amb);
                for (std::size_t xx = 0; xx < nh; ++xx)
                    for (std::size_t y = 0; y < nh; ++y) {
                        const Scalar& c = rg.at(y, xx);
                        if (c.is_zero()) continue;
                        for (std::size_t mu = 0; mu < de; ++mu)
                            shifted[hs_idx(mu, xx)] += c * phi_imgs[i][hs_idx(mu, y)];
                    }
                if (*pm != shifted) {
                    ok = false;
                    wit = pair_str(gi, i);
                }
            }
        }
        rep.add("realization transports the comodule structure", ok, wit);
    }
    (void)mat_family_span;
    return rep;
}

}  // namespace hopfstab
