#include "hopfstab/yanzhu.hpp"

#include <sstream>

namespace hopfstab {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> xs) {
    std::ostringstream os;
    os << '(';
    bool first = true;
    for (auto x : xs) {
        if (!first) os << ',';
        os << x;
        first = false;
    }
    os << ')';
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    m.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
        }
    return m;
}

/// Left multiplication by the dual basis element e^i on dual coordinates.
Matrix dual_left_mult(const HopfData& h, std::size_t i) {
    Matrix m(h.field(), h.dim(), h.dim());
    for (std::size_t c = 0; c < h.dim(); ++c)
        for (std::size_t b = 0; b < h.dim(); ++b) m.at(c, b) = h.coalg.comult.at(c, i, b);
    return m;
}

/// Right multiplication by e^j on dual coordinates.
Matrix dual_right_mult(const HopfData& h, std::size_t j) {
    Matrix m(h.field(), h.dim(), h.dim());
    for (std::size_t c = 0; c < h.dim(); ++c)
        for (std::size_t b = 0; b < h.dim(); ++b) m.at(c, b) = h.coalg.comult.at(c, b, j);
    return m;
}

Vec basis_vec(const FieldSpec& f, std::size_t n, std::size_t i) { return unit_vec(f, n, i); }

/// The subspace spanned by the flattenings of a family of matrices.
Subspace mat_span(const FieldSpec& f, const std::vector<Matrix>& fam) {
    if (fam.empty()) return Subspace();
    std::vector<Vec> rows;
    rows.reserve(fam.size());
    for (const auto& m : fam) rows.push_back(flatten(m));
    std::size_t amb = fam.front().rows() * fam.front().cols();
    return Subspace::span(f, amb, rows_matrix(f, amb, rows));
}

std::vector<Matrix> subspace_mats(const Subspace& s, std::size_t rows, std::size_t cols) {
    std::vector<Matrix> out;
    out.reserve(s.dim());
    for (std::size_t r = 0; r < s.dim(); ++r)
        out.push_back(unflatten(s.field(), s.basis().row(r), rows, cols));
    return out;
}

/// End(H*) as a Hopf module: A[t] is the action of e^t, B[j] of e_j.
/// End(H) mirrored: C[j] action of e_j, D[t] of e^t.
struct EndModuleOps {
    std::vector<Matrix> a, b, c, d;
};

EndModuleOps end_module_ops(const HopfData& h) {
    const auto& f = h.field();
    std::size_t n = h.dim();
    auto ru_hd = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
    auto ru_dh = harpoon(h, Harpoon::RightUp, ActionTarget::DualOnH);
    EndModuleOps ops;
    // (e^t . f)(beta) = f(beta e^{t2}) Sdual^{-1}(e^{t1}), Delta*(e^t) via mult.
    for (std::size_t t = 0; t < n; ++t) {
        Matrix acc(f, n * n, n * n);
        for (std::size_t t1 = 0; t1 < n; ++t1)
            for (std::size_t t2 = 0; t2 < n; ++t2) {
                const Scalar& c = h.alg.mult.at(t1, t2, t);
                if (c.is_zero()) continue;
                Matrix p(f, n, n);
                for (std::size_t u = 0; u < n; ++u) {
                    const Scalar& s = h.antipode_inv.at(t1, u);
                    if (s.is_zero()) continue;
                    p = p + dual_right_mult(h, u).scaled(s);
                }
                acc = acc + hom_conjugation(p, dual_right_mult(h, t2), n, n).scaled(c);
            }
        ops.a.push_back(acc);
    }
    // (f . e_j)(beta) = f(e_j up-harpoon beta).
    Matrix id = Matrix::identity(f, n);
    for (std::size_t j = 0; j < n; ++j)
        ops.b.push_back(hom_conjugation(id, ru_hd[j], n, n));
    // (e_j . f)(t) = S(e_{j1}) f(e_{j2} t).
    for (std::size_t j = 0; j < n; ++j) {
        Matrix acc(f, n * n, n * n);
        for (std::size_t j1 = 0; j1 < n; ++j1)
            for (std::size_t j2 = 0; j2 < n; ++j2) {
                const Scalar& c = h.coalg.comult.at(j, j1, j2);
                if (c.is_zero()) continue;
                Vec sj1 = h.apply_antipode(basis_vec(f, n, j1));
                acc = acc + hom_conjugation(h.alg.left_mult(sj1),
                                            h.alg.left_mult(basis_vec(f, n, j2)), n, n)
                                .scaled(c);
            }
        ops.c.push_back(acc);
    }
    // (f . e^t)(x) = f(e^t up-harpoon x).
    for (std::size_t t = 0; t < n; ++t)
        ops.d.push_back(hom_conjugation(id, ru_dh[t], n, n));
    return ops;
}

/// Apply an End(first-leg) operator to Hom(F (x) U, F (x) W) on the first leg.
Matrix apply_first_leg(const Matrix& op, const Matrix& x, std::size_t n, std::size_t nu,
                       std::size_t nw) {
    Matrix y(x.field(), x.rows(), x.cols());
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c2 = 0; c2 < n; ++c2)
                for (std::size_t b2 = 0; b2 < n; ++b2) {
                    const Scalar& o = op.at(hom_index(c, b, n), hom_index(c2, b2, n));
                    if (o.is_zero()) continue;
                    for (std::size_t p2 = 0; p2 < nw; ++p2)
                        for (std::size_t p = 0; p < nu; ++p)
                            y.at(c * nw + p2, b * nu + p) +=
                                o * x.at(c2 * nw + p2, b2 * nu + p);
                }
    return y;
}

/// The first-leg application as one big matrix on flattened Hom coordinates.
Matrix first_leg_operator(const Matrix& op, std::size_t n, std::size_t nu, std::size_t nw) {
    std::size_t amb = n * nw * n * nu;
    Matrix big(op.field(), amb, amb);
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c2 = 0; c2 < n; ++c2)
                for (std::size_t b2 = 0; b2 < n; ++b2) {
                    const Scalar& o = op.at(hom_index(c, b, n), hom_index(c2, b2, n));
                    if (o.is_zero()) continue;
                    for (std::size_t p2 = 0; p2 < nw; ++p2)
                        for (std::size_t p = 0; p < nu; ++p)
                            big.at((c * nw + p2) * (n * nu) + b * nu + p,
                                   (c2 * nw + p2) * (n * nu) + b2 * nu + p) = o;
                }
    return big;
}

/// Left-multiplication embedding of H* (x) Hom(U,W) into Hom(H* (x) U, H* (x) W).
Matrix lmult_embed(const HopfData& h, const Vec& x, std::size_t nu, std::size_t nw) {
    std::size_t n = h.dim();
    Matrix m(h.field(), n * nw, n * nu);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ld = dual_left_mult(h, i);
        for (std::size_t a = 0; a < nw; ++a)
            for (std::size_t b = 0; b < nu; ++b) {
                const Scalar& c = x[(i * nw + a) * nu + b];
                if (c.is_zero()) continue;
                for (std::size_t cc = 0; cc < n; ++cc)
                    for (std::size_t b2 = 0; b2 < n; ++b2) {
                        if (ld.at(cc, b2).is_zero()) continue;
                        m.at(cc * nw + a, b2 * nu + b) += c * ld.at(cc, b2);
                    }
            }
    }
    return m;
}

/// Right-multiplication embedding of Hom(V,Y) (x) H into Hom(V (x) H, Y (x) H).
Matrix rmult_embed(const HopfData& h, const Vec& x, std::size_t nv, std::size_t ny) {
    std::size_t n = h.dim();
    Matrix m(h.field(), ny * n, nv * n);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix rj = h.alg.right_mult(basis_vec(h.field(), n, j));
        for (std::size_t a = 0; a < ny; ++a)
            for (std::size_t b = 0; b < nv; ++b) {
                const Scalar& c = x[(a * nv + b) * n + j];
                if (c.is_zero()) continue;
                for (std::size_t t2 = 0; t2 < n; ++t2)
                    for (std::size_t t = 0; t < n; ++t) {
                        if (rj.at(t2, t).is_zero()) continue;
                        m.at(a * n + t2, b * n + t) += c * rj.at(t2, t);
                    }
            }
    }
    return m;
}

}  // namespace

std::vector<Matrix> tensor_rep_action(const ComodAlg& k, const ModuleRep& w) {
    if (k.coact.side != Side::Left)
        throw ShapeError("tensor_rep_action expects a left comodule algebra");
    const auto& f = k.hopf.field();
    std::size_t n = k.hopf.dim(), nk = k.alg.dim, nw = w.dim;
    auto rd = harpoon(k.hopf, Harpoon::RightDown, ActionTarget::HOnDual);
    std::vector<Matrix> out;
    out.reserve(nk);
    for (std::size_t q = 0; q < nk; ++q) {
        Matrix m(f, n * nw, n * nw);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t s = 0; s < nk; ++s) {
                const Scalar& c = k.coact.coact.at(q, r, s);
                if (c.is_zero()) continue;
                m = m + kron(rd[r], w.action[s]).scaled(c);
            }
        out.push_back(m);
    }
    return out;
}

std::vector<Matrix> dual_tensor_rep_action(const ComodAlg& s, const ModuleRep& w) {
    if (s.coact.side != Side::Right)
        throw ShapeError("dual_tensor_rep_action expects a right comodule algebra");
    HopfData under = dual_hopf(s.hopf);
    const auto& f = under.field();
    std::size_t n = under.dim(), ns = s.alg.dim, nw = w.dim;
    auto rd = harpoon(under, Harpoon::RightDown, ActionTarget::DualOnH);
    std::vector<Matrix> out;
    out.reserve(ns);
    for (std::size_t q = 0; q < ns; ++q) {
        Matrix m(f, nw * n, nw * n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t sp = 0; sp < ns; ++sp) {
                const Scalar& c = s.coact.coact.at(q, r, sp);
                if (c.is_zero()) continue;
                m = m + kron(w.action[sp], rd[r]).scaled(c);
            }
        out.push_back(m);
    }
    return out;
}

Subspace intertwiner_space(const FieldSpec& f, const std::vector<Matrix>& p,
                           const std::vector<Matrix>& q, std::size_t dim_x, std::size_t dim_y) {
    std::size_t amb = dim_y * dim_x;
    Matrix rows(f, p.size() * amb, amb);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t a = 0; a < dim_y; ++a)
            for (std::size_t b = 0; b < dim_x; ++b) {
                std::size_t r = (i * dim_y + a) * dim_x + b;
                for (std::size_t v = 0; v < dim_x; ++v) rows.at(r, a * dim_x + v) += q[i].at(v, b);
                for (std::size_t u = 0; u < dim_y; ++u) rows.at(r, u * dim_x + b) -= p[i].at(a, u);
            }
    return kernel(rows);
}

StabSpace stab_space(const ComodAlg& k, const ModuleRep& u, const ModuleRep& w) {
    if (k.coact.side != Side::Left) throw ShapeError("stab_space expects a left comodule algebra");
    const auto& h = k.hopf;
    const auto& f = h.field();
    std::size_t n = h.dim(), nk = k.alg.dim, nu = u.dim, nw = w.dim;

    // sinv_m[r][t][i]: coefficient of e_i in S^{-1}(e_r) e_t.
    Tensor3 sinv_m(f, n, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t i = 0; i < n; ++i) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t uu = 0; uu < n; ++uu)
                    acc += h.antipode_inv.at(uu, r) * h.alg.mult.at(uu, t, i);
                sinv_m.at(r, t, i) = acc;
            }

    std::size_t amb = n * nw * nu;
    Matrix rows(f, n * nk * nw * nu, amb);
    std::size_t r = 0;
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t q = 0; q < nk; ++q)
            for (std::size_t m = 0; m < nw; ++m)
                for (std::size_t p = 0; p < nu; ++p, ++r) {
                    // alpha(t) pairing leg: x[t][m][b] * (q.u)_{b,p}
                    for (std::size_t b = 0; b < nu; ++b)
                        rows.at(r, (t * nw + m) * nu + b) += u.action[q].at(b, p);
                    // minus the coacted side: (S^{-1}(q_{-1}) harpoon) paired at t.
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t a = 0; a < nw; ++a) {
                            Scalar acc = Scalar::zero(f);
                            for (std::size_t rr = 0; rr < n; ++rr)
                                for (std::size_t s = 0; s < nk; ++s) {
                                    const Scalar& c = k.coact.coact.at(q, rr, s);
                                    if (c.is_zero()) continue;
                                    acc += c * sinv_m.at(rr, t, i) * w.action[s].at(m, a);
                                }
                            if (!acc.is_zero()) rows.at(r, (i * nw + a) * nu + p) -= acc;
                        }
                }
    StabSpace st;
    st.hopf = h;
    st.chirality = StabSpace::Chirality::InDualTensor;
    st.dim_u = nu;
    st.dim_w = nw;
    st.basis = kernel(rows);
    return st;
}

Report stab_membership_check(const ComodAlg& k, const ModuleRep& u, const ModuleRep& w,
                             const StabSpace& st) {
    Report rep{"stabilizer elements intertwine the tensor representations"};
    auto mu = tensor_rep_action(k, u);
    auto mw = tensor_rep_action(k, w);
    for (std::size_t s = 0; s < st.basis.dim(); ++s) {
        Matrix x = lmult_embed(st.hopf, st.basis.basis().row(s), st.dim_u, st.dim_w);
        bool ok = true;
        std::string wit;
        for (std::size_t q = 0; q < mu.size() && ok; ++q)
            if (x * mu[q] != mw[q] * x) {
                ok = false;
                wit = "basis element " + std::to_string(s) + ", algebra index " + std::to_string(q);
            }
        rep.add("intertwining for basis element " + std::to_string(s), ok, wit);
    }
    std::size_t n = st.hopf.dim();
    Subspace inter = intertwiner_space(st.hopf.field(), mw, mu, n * st.dim_u, n * st.dim_w);
    rep.add("intertwiner dimension factors through the stabilizer",
            inter.dim() == st.basis.dim() * n,
            std::to_string(inter.dim()) + " vs " + std::to_string(st.basis.dim() * n));
    return rep;
}

AlgebraData stab_algebra(const StabSpace& st) {
    if (st.dim_u != st.dim_w) throw ShapeError("stab_algebra needs equal module dimensions");
    const auto& f = st.hopf.field();
    std::size_t n = st.hopf.dim(), nw = st.dim_w, d = st.basis.dim(), amb = st.ambient_dim();
    AlgebraData a;
    a.field = f;
    a.dim = d;
    a.mult = Tensor3(f, d, d, d);

    auto product = [&](const Vec& x, const Vec& y) {
        Vec z = zero_vec(f, amb);
        if (st.chirality == StabSpace::Chirality::InDualTensor) {
            for (std::size_t kk = 0; kk < n; ++kk)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j) {
                        const Scalar& c = st.hopf.coalg.comult.at(kk, i, j);
                        if (c.is_zero()) continue;
                        for (std::size_t aa = 0; aa < nw; ++aa)
                            for (std::size_t b = 0; b < nw; ++b)
                                for (std::size_t cc = 0; cc < nw; ++cc)
                                    z[(kk * nw + aa) * nw + b] +=
                                        c * x[(i * nw + aa) * nw + cc] * y[(j * nw + cc) * nw + b];
                    }
        } else {
            for (std::size_t kk = 0; kk < n; ++kk)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t t = 0; t < n; ++t) {
                        const Scalar& c = st.hopf.alg.mult.at(t, j, kk);
                        if (c.is_zero()) continue;
                        for (std::size_t aa = 0; aa < nw; ++aa)
                            for (std::size_t b = 0; b < nw; ++b)
                                for (std::size_t cc = 0; cc < nw; ++cc)
                                    z[(aa * nw + b) * n + kk] +=
                                        c * x[(aa * nw + cc) * n + j] * y[(cc * nw + b) * n + t];
                    }
        }
        return z;
    };

    for (std::size_t p = 0; p < d; ++p)
        for (std::size_t q = 0; q < d; ++q) {
            Vec z = product(st.basis.basis().row(p), st.basis.basis().row(q));
            auto coords = st.basis.coordinates(z);
            if (!coords) throw ShapeError("stabilizer is not closed under composition");
            for (std::size_t r = 0; r < d; ++r) a.mult.at(p, q, r) = (*coords)[r];
        }

    Vec one = zero_vec(f, amb);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t aa = 0; aa < nw; ++aa) {
            if (st.chirality == StabSpace::Chirality::InDualTensor)
                one[(i * nw + aa) * nw + aa] = st.hopf.coalg.counit[i];
            else
                one[(aa * nw + aa) * n + i] = st.hopf.alg.unit[i];
        }
    auto unit_coords = st.basis.coordinates(one);
    if (!unit_coords) throw ShapeError("stabilizer does not contain the unit");
    a.unit = *unit_coords;
    return a;
}

ModuleRep stab_action_on_module(const StabSpace& st) {
    if (st.dim_u != st.dim_w)
        throw ShapeError("stab_action_on_module needs equal module dimensions");
    const auto& f = st.hopf.field();
    std::size_t n = st.hopf.dim(), nw = st.dim_w, d = st.basis.dim();
    ModuleRep rep;
    rep.dim = nw;
    rep.side = Side::Left;
    for (std::size_t s = 0; s < d; ++s) {
        const Vec x = st.basis.basis().row(s);
        Matrix m(f, nw, nw);
        for (std::size_t i = 0; i < n; ++i) {
            const Scalar& ev = st.chirality == StabSpace::Chirality::InDualTensor
                                   ? st.hopf.alg.unit[i]
                                   : st.hopf.coalg.counit[i];
            if (ev.is_zero()) continue;
            for (std::size_t a = 0; a < nw; ++a)
                for (std::size_t b = 0; b < nw; ++b)
                    m.at(a, b) += ev * x[st.idx(i, a, b)];
        }
        rep.action.push_back(m);
    }
    return rep;
}

ModuleRep stab_hopf_action(const StabSpace& st) {
    const auto& f = st.hopf.field();
    std::size_t n = st.hopf.dim(), d = st.basis.dim(), amb = st.ambient_dim();
    bool primal = st.chirality == StabSpace::Chirality::InDualTensor;
    auto op = primal ? harpoon(st.hopf, Harpoon::RightUp, ActionTarget::HOnDual)
                     : harpoon(st.hopf, Harpoon::LeftDown, ActionTarget::DualOnH);
    ModuleRep rep;
    rep.dim = d;
    rep.side = primal ? Side::Left : Side::Right;
    for (std::size_t t = 0; t < n; ++t) {
        Matrix m(f, d, d);
        for (std::size_t s = 0; s < d; ++s) {
            const Vec x = st.basis.basis().row(s);
            Vec y = zero_vec(f, amb);
            for (std::size_t a = 0; a < st.dim_w; ++a)
                for (std::size_t b = 0; b < st.dim_u; ++b)
                    for (std::size_t i = 0; i < n; ++i) {
                        const Scalar& c = x[st.idx(i, a, b)];
                        if (c.is_zero()) continue;
                        for (std::size_t i2 = 0; i2 < n; ++i2)
                            y[st.idx(i2, a, b)] += op[t].at(i2, i) * c;
                    }
            auto coords = st.basis.coordinates(y);
            if (!coords) throw ShapeError("stabilizer is not closed under the Hopf action");
            for (std::size_t r = 0; r < d; ++r) m.at(r, s) = (*coords)[r];
        }
        rep.action.push_back(m);
    }
    return rep;
}

ComodAlg stab_comodule_structure(const StabSpace& st) {
    ComodAlg s;
    s.hopf = st.chirality == StabSpace::Chirality::InDualTensor ? dual_hopf(st.hopf) : st.hopf;
    s.alg = stab_algebra(st);
    s.coact = module_to_comodule(stab_hopf_action(st));
    return s;
}

Report stab_coinvariants_check(const ComodAlg& k, const ModuleRep& u, const ModuleRep& w) {
    Report rep{"stabilizer coinvariants realize the module homomorphisms"};
    const auto& h = k.hopf;
    const auto& f = h.field();
    std::size_t n = h.dim(), nu = u.dim, nw = w.dim;
    StabSpace st = stab_space(k, u, w);
    std::size_t d = st.basis.dim();

    // The Hopf action restricted to the stabilizer, then its coinvariants.
    ModuleRep act;
    try {
        StabSpace uw = st;
        act = stab_hopf_action(uw);
    } catch (const ShapeError&) {
        rep.add("stabilizer closed under the Hopf action", false, "");
        return rep;
    }
    rep.add("stabilizer closed under the Hopf action", true);
    Subspace coinv = coinvariants(dual_hopf(h), module_to_comodule(act));

    Subspace homk = intertwiner_space(f, w.action, u.action, nu, nw);

    auto phi = [&](const Vec& coords) {
        Matrix m(f, nw, nu);
        for (std::size_t s = 0; s < d; ++s) {
            const Scalar& c = coords[s];
            if (c.is_zero()) continue;
            const Vec x = st.basis.basis().row(s);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t a = 0; a < nw; ++a)
                    for (std::size_t b = 0; b < nu; ++b)
                        m.at(a, b) += c * x[st.idx(i, a, b)] * h.alg.unit[i];
        }
        return m;
    };
    auto psi = [&](const Matrix& fm) {
        Vec y = zero_vec(f, st.ambient_dim());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t a = 0; a < nw; ++a)
                for (std::size_t b = 0; b < nu; ++b)
                    y[st.idx(i, a, b)] = h.coalg.counit[i] * fm.at(a, b);
        return y;
    };

    bool psi_in = true, phipsi = true, psiphi = true;
    std::string wit;
    std::vector<Vec> psi_coords;
    for (std::size_t r = 0; r < homk.dim(); ++r) {
        Matrix fm = unflatten(f, homk.basis().row(r), nw, nu);
        Vec y = psi(fm);
        auto coords = st.basis.coordinates(y);
        if (!coords) {
            psi_in = false;
            wit = "homomorphism " + std::to_string(r);
            break;
        }
        if (!coinv.contains(*coords)) {
            psi_in = false;
            wit = "homomorphism " + std::to_string(r) + " (not coinvariant)";
            break;
        }
        psi_coords.push_back(*coords);
        if (phi(*coords) != fm) {
            phipsi = false;
            wit = "homomorphism " + std::to_string(r);
            break;
        }
    }
    rep.add("unit map lands in the coinvariants", psi_in, wit);
    rep.add("evaluation after unit is the identity", phipsi, wit);

    std::vector<Vec> phi_rows;
    for (std::size_t r = 0; r < coinv.dim() && psiphi; ++r) {
        Vec c = coinv.basis().row(r);
        Matrix fm = phi(c);
        phi_rows.push_back(flatten(fm));
        Vec back = psi(fm);
        auto coords = st.basis.coordinates(back);
        if (!coords || *coords != c) {
            psiphi = false;
            wit = "coinvariant " + std::to_string(r);
        }
    }
    rep.add("unit after evaluation is the identity on coinvariants", psiphi, wit);

    Subspace phi_span = phi_rows.empty()
                            ? Subspace::zero(f, nw * nu)
                            : Subspace::span(f, nw * nu, rows_matrix(f, nw * nu, phi_rows));
    rep.add("evaluated coinvariants span the module homomorphisms", phi_span == homk,
            std::to_string(phi_span.dim()) + " vs " + std::to_string(homk.dim()));
    rep.add("coinvariant dimension matches", coinv.dim() == homk.dim(),
            std::to_string(coinv.dim()) + " vs " + std::to_string(homk.dim()));
    return rep;
}

Report hopf_module_checks(const HopfData& h) {
    Report rep{"endomorphism Hopf module structures"};
    const auto& f = h.field();
    std::size_t n = h.dim();
    EndModuleOps ops = end_module_ops(h);
    auto ru_dh = harpoon(h, Harpoon::RightUp, ActionTarget::DualOnH);
    auto lu_hd = harpoon(h, Harpoon::LeftUp, ActionTarget::HOnDual);

    // Exchange law on End(H*): precompute B_l A_{t1}.
    {
        std::vector<std::vector<Matrix>> ba(n);
        for (std::size_t l = 0; l < n; ++l) {
            ba[l].reserve(n);
            for (std::size_t t1 = 0; t1 < n; ++t1) ba[l].push_back(ops.b[l] * ops.a[t1]);
        }
        bool ok = true;
        std::string wit;
        for (std::size_t t = 0; t < n && ok; ++t)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Matrix lhs = ops.a[t] * ops.b[j];
                Matrix rhs(f, n * n, n * n);
                for (std::size_t t1 = 0; t1 < n; ++t1)
                    for (std::size_t t2 = 0; t2 < n; ++t2) {
                        const Scalar& c = h.alg.mult.at(t1, t2, t);
                        if (c.is_zero()) continue;
                        for (std::size_t l = 0; l < n; ++l) {
                            Scalar coef = c * ru_dh[t2].at(l, j);
                            if (coef.is_zero()) continue;
                            rhs = rhs + ba[l][t1].scaled(coef);
                        }
                    }
                if (lhs != rhs) {
                    ok = false;
                    wit = tuple_str({t, j});
                }
            }
        rep.add("dual endomorphisms: action exchange law", ok, wit);
    }

    // Coinvariants of End(H*) = left translations by the dual.
    {
        Matrix stacked(f, n * n * n, n * n);
        for (std::size_t t = 0; t < n; ++t) {
            Matrix m = ops.a[t] - Matrix::identity(f, n * n).scaled(h.alg.unit[t]);
            for (std::size_t r = 0; r < n * n; ++r) stacked.set_row(t * n * n + r, m.row(r));
        }
        Subspace coinv = kernel(stacked);
        std::vector<Matrix> ld;
        for (std::size_t i = 0; i < n; ++i) ld.push_back(dual_left_mult(h, i));
        Subspace lspan = mat_span(f, ld);
        rep.add("dual endomorphisms: coinvariants are the left translations", coinv == lspan,
                std::to_string(coinv.dim()) + " vs " + std::to_string(lspan.dim()));
        rep.add("dual endomorphisms: dimension factorization", n * n == coinv.dim() * n,
                std::to_string(coinv.dim()));
    }

    // Exchange law on End(H).
    {
        std::vector<std::vector<Matrix>> dc(n);
        for (std::size_t i = 0; i < n; ++i) {
            dc[i].reserve(n);
            for (std::size_t j1 = 0; j1 < n; ++j1) dc[i].push_back(ops.d[i] * ops.c[j1]);
        }
        bool ok = true;
        std::string wit;
        for (std::size_t j = 0; j < n && ok; ++j)
            for (std::size_t t = 0; t < n && ok; ++t) {
                Matrix lhs = ops.c[j] * ops.d[t];
                Matrix rhs(f, n * n, n * n);
                for (std::size_t j1 = 0; j1 < n; ++j1)
                    for (std::size_t j2 = 0; j2 < n; ++j2) {
                        const Scalar& c = h.coalg.comult.at(j, j1, j2);
                        if (c.is_zero()) continue;
                        for (std::size_t i = 0; i < n; ++i) {
                            Scalar coef = c * lu_hd[j2].at(i, t);
                            if (coef.is_zero()) continue;
                            rhs = rhs + dc[i][j1].scaled(coef);
                        }
                    }
                if (lhs != rhs) {
                    ok = false;
                    wit = tuple_str({j, t});
                }
            }
        rep.add("primal endomorphisms: action exchange law", ok, wit);
    }

    // Coinvariants of End(H) = right translations.
    {
        Matrix stacked(f, n * n * n, n * n);
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m = ops.c[j] - Matrix::identity(f, n * n).scaled(h.coalg.counit[j]);
            for (std::size_t r = 0; r < n * n; ++r) stacked.set_row(j * n * n + r, m.row(r));
        }
        Subspace coinv = kernel(stacked);
        std::vector<Matrix> rh;
        for (std::size_t j = 0; j < n; ++j)
            rh.push_back(h.alg.right_mult(basis_vec(f, n, j)));
        Subspace rspan = mat_span(f, rh);
        rep.add("primal endomorphisms: coinvariants are the right translations", coinv == rspan,
                std::to_string(coinv.dim()) + " vs " + std::to_string(rspan.dim()));
        rep.add("primal endomorphisms: dimension factorization", n * n == coinv.dim() * n,
                std::to_string(coinv.dim()));
    }
    return rep;
}

Report stabmodhopf_check(const ComodAlg& k, const ModuleRep& u, const ModuleRep& w) {
    Report rep{"module homomorphisms as a Hopf module over the stabilizer"};
    const auto& h = k.hopf;
    const auto& f = h.field();
    std::size_t n = h.dim(), nu = u.dim, nw = w.dim;
    auto mu = tensor_rep_action(k, u);
    auto mw = tensor_rep_action(k, w);
    Subspace homk = intertwiner_space(f, mw, mu, n * nu, n * nw);
    StabSpace st = stab_space(k, u, w);
    EndModuleOps ops = end_module_ops(h);

    // Stability under both actions on the first tensor leg.
    {
        bool ok = true;
        std::string wit;
        for (std::size_t r = 0; r < homk.dim() && ok; ++r) {
            Matrix x = unflatten(f, homk.basis().row(r), n * nw, n * nu);
            for (std::size_t t = 0; t < n && ok; ++t)
                if (!homk.contains(flatten(apply_first_leg(ops.a[t], x, n, nu, nw)))) {
                    ok = false;
                    wit = "dual action " + tuple_str({r, t});
                }
            for (std::size_t j = 0; j < n && ok; ++j)
                if (!homk.contains(flatten(apply_first_leg(ops.b[j], x, n, nu, nw)))) {
                    ok = false;
                    wit = "primal action " + tuple_str({r, j});
                }
        }
        rep.add("homomorphism space is a Hopf submodule", ok, wit);
    }

    // Coinvariants equal the left-multiplication image of the stabilizer.
    Subspace lst;
    {
        std::vector<Vec> rows;
        for (std::size_t s = 0; s < st.basis.dim(); ++s)
            rows.push_back(flatten(lmult_embed(h, st.basis.basis().row(s), nu, nw)));
        std::size_t amb = n * nw * n * nu;
        lst = rows.empty() ? Subspace::zero(f, amb)
                           : Subspace::span(f, amb, rows_matrix(f, amb, rows));
        Matrix stacked(f, n * amb, amb);
        for (std::size_t t = 0; t < n; ++t) {
            Matrix big = first_leg_operator(ops.a[t], n, nu, nw) -
                         Matrix::identity(f, amb).scaled(h.alg.unit[t]);
            for (std::size_t r = 0; r < amb; ++r) stacked.set_row(t * amb + r, big.row(r));
        }
        Subspace coinv = intersect(kernel(stacked), homk);
        rep.add("coinvariants are the embedded stabilizer", coinv == lst,
                std::to_string(coinv.dim()) + " vs " + std::to_string(lst.dim()));
    }

    rep.add("dimension factorization", homk.dim() == st.basis.dim() * n,
            std::to_string(homk.dim()) + " vs " + std::to_string(st.basis.dim() * n));

    // The whole homomorphism space factors as stabilizer times translations.
    {
        auto ru_hd = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
        std::vector<Vec> rows;
        Matrix idu = Matrix::identity(f, nu);
        for (std::size_t s = 0; s < st.basis.dim(); ++s) {
            Matrix l = lmult_embed(h, st.basis.basis().row(s), nu, nw);
            for (std::size_t j = 0; j < n; ++j) rows.push_back(flatten(l * kron(ru_hd[j], idu)));
        }
        std::size_t amb = n * nw * n * nu;
        Subspace gen = rows.empty() ? Subspace::zero(f, amb)
                                    : Subspace::span(f, amb, rows_matrix(f, amb, rows));
        rep.add("stabilizer times translations spans the homomorphisms", gen == homk,
                std::to_string(gen.dim()) + " vs " + std::to_string(homk.dim()));
    }
    return rep;
}

HeisenbergData heisenberg(const HopfData& h) {
    const auto& f = h.field();
    std::size_t n = h.dim();
    std::vector<Matrix> ld, lh;
    for (std::size_t i = 0; i < n; ++i) {
        ld.push_back(dual_left_mult(h, i));
        lh.push_back(h.alg.left_mult(basis_vec(f, n, i)));
    }
    auto ru_hd = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
    auto rd_dh = harpoon(h, Harpoon::RightDown, ActionTarget::DualOnH);

    HeisenbergData hd;
    hd.alg.field = f;
    hd.alg.dim = n * n;
    hd.alg.mult = Tensor3(f, n * n, n * n, n * n);
    hd.alg.unit = zero_vec(f, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            hd.alg.unit[i * n + j] = h.coalg.counit[i] * h.alg.unit[j];

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t kk = 0; kk < n; ++kk)
                for (std::size_t l = 0; l < n; ++l)
                    for (std::size_t j1 = 0; j1 < n; ++j1)
                        for (std::size_t j2 = 0; j2 < n; ++j2) {
                            const Scalar& c = h.coalg.comult.at(j, j1, j2);
                            if (c.is_zero()) continue;
                            // dual leg: e^i (e_{j1} up-harpoon e^k)
                            for (std::size_t cidx = 0; cidx < n; ++cidx) {
                                Scalar dl = Scalar::zero(f);
                                for (std::size_t b = 0; b < n; ++b)
                                    dl += ld[i].at(cidx, b) * ru_hd[j1].at(b, kk);
                                if (dl.is_zero()) continue;
                                for (std::size_t m = 0; m < n; ++m) {
                                    const Scalar& hm = h.alg.mult.at(j2, l, m);
                                    if (hm.is_zero()) continue;
                                    hd.alg.mult.at(i * n + j, kk * n + l, cidx * n + m) +=
                                        c * dl * hm;
                                }
                            }
                        }

    hd.psi1 = Matrix(f, n * n, n * n);
    hd.psi2 = Matrix(f, n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec c1 = flatten(rd_dh[i] * lh[j]);
            Vec c2 = flatten(ld[i] * ru_hd[j]);
            for (std::size_t r = 0; r < n * n; ++r) {
                hd.psi1.at(r, i * n + j) = c1[r];
                hd.psi2.at(r, i * n + j) = c2[r];
            }
        }
    Matrix inv1 = inverse(hd.psi1);
    Matrix inv2 = inverse(hd.psi2);
    hd.psi = hd.psi2 * inv1;
    hd.psi_inv = hd.psi1 * inv2;
    return hd;
}

Report heisenberg_check(const HopfData& h) {
    Report rep{"Heisenberg double realization"};
    const auto& f = h.field();
    std::size_t n = h.dim();
    HeisenbergData hd = heisenberg(h);

    rep.add("first realization is unital",
            hd.psi1.apply(hd.alg.unit) == flatten(Matrix::identity(f, n)));
    rep.add("second realization is unital",
            hd.psi2.apply(hd.alg.unit) == flatten(Matrix::identity(f, n)));

    auto check_mult = [&](const Matrix& psi, const std::string& name) {
        bool ok = true;
        std::string wit;
        std::vector<Matrix> img;
        img.reserve(n * n);
        for (std::size_t x = 0; x < n * n; ++x) {
            Vec col(n * n, Scalar::zero(f));
            for (std::size_t r = 0; r < n * n; ++r) col[r] = psi.at(r, x);
            img.push_back(unflatten(f, col, n, n));
        }
        for (std::size_t x = 0; x < n * n && ok; ++x)
            for (std::size_t y = 0; y < n * n && ok; ++y) {
                Vec z(n * n, Scalar::zero(f));
                for (std::size_t r = 0; r < n * n; ++r) z[r] = hd.alg.mult.at(x, y, r);
                if (psi.apply(z) != flatten(img[x] * img[y])) {
                    ok = false;
                    wit = tuple_str({x, y});
                }
            }
        rep.add(name, ok, wit);
    };
    check_mult(hd.psi1, "first realization is multiplicative");
    check_mult(hd.psi2, "second realization is multiplicative");

    auto rd_dh = harpoon(h, Harpoon::RightDown, ActionTarget::DualOnH);
    auto ru_dh = harpoon(h, Harpoon::RightUp, ActionTarget::DualOnH);
    auto ru_hd = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
    auto rd_hd = harpoon(h, Harpoon::RightDown, ActionTarget::HOnDual);

    {
        bool ok = true;
        std::string wit;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (hd.psi.apply(flatten(rd_dh[i])) != flatten(dual_left_mult(h, i))) {
                ok = false;
                wit = std::to_string(i);
            }
        rep.add("exchange pins down-harpoons to dual left translations", ok, wit);
    }
    auto span_eq = [&](const std::vector<Matrix>& src, const std::vector<Matrix>& dst,
                       const std::string& name) {
        std::vector<Vec> rows;
        for (const auto& m : src) rows.push_back(hd.psi.apply(flatten(m)));
        Subspace a = Subspace::span(f, n * n, rows_matrix(f, n * n, rows));
        Subspace b = mat_span(f, dst);
        rep.add(name, a == b, std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    };
    std::vector<Matrix> lh, rh, ldm, rdm;
    for (std::size_t i = 0; i < n; ++i) {
        lh.push_back(h.alg.left_mult(basis_vec(f, n, i)));
        rh.push_back(h.alg.right_mult(basis_vec(f, n, i)));
        ldm.push_back(dual_left_mult(h, i));
        rdm.push_back(dual_right_mult(h, i));
    }
    span_eq(lh, ru_hd.mats, "left translations map to up-harpoon operators");
    span_eq(ru_dh.mats, rdm, "up-harpoon operators map to dual right translations");
    span_eq(rh, rd_hd.mats, "right translations map to down-harpoon operators");

    // Scalar center, via incremental commutation kernels.
    {
        std::size_t nn = n * n;
        auto comm_mat = [&](std::size_t x) {
            Matrix m(f, nn, nn);
            for (std::size_t y = 0; y < nn; ++y)
                for (std::size_t c = 0; c < nn; ++c)
                    m.at(c, y) = hd.alg.mult.at(x, y, c) - hd.alg.mult.at(y, x, c);
            return m;
        };
        Subspace center = Subspace::full(f, nn);
        for (std::size_t x = 0; x < nn && center.dim() > 0; ++x) {
            Matrix m = comm_mat(x);
            bool all_in = true;
            for (std::size_t r = 0; r < center.dim() && all_in; ++r)
                all_in = is_zero(m.apply(center.basis().row(r)));
            if (!all_in) center = intersect(center, kernel(m));
        }
        rep.add("scalar center", center.dim() == 1, std::to_string(center.dim()));
    }
    return rep;
}

StabSpace dual_stab_space(const ComodAlg& s, const ModuleRep& v, const ModuleRep& y) {
    if (s.coact.side != Side::Right)
        throw ShapeError("dual_stab_space expects a right comodule algebra");
    HopfData under = dual_hopf(s.hopf);
    const auto& f = under.field();
    std::size_t n = under.dim(), ns = s.alg.dim, nv = v.dim, ny = y.dim;
    auto mv = dual_tensor_rep_action(s, v);
    auto my = dual_tensor_rep_action(s, y);
    std::vector<Matrix> rj;
    for (std::size_t j = 0; j < n; ++j) rj.push_back(under.alg.right_mult(basis_vec(f, n, j)));

    std::size_t amb = ny * nv * n;
    Matrix rows(f, ns * ny * n * nv * n, amb);
    std::size_t r = 0;
    for (std::size_t q = 0; q < ns; ++q)
        for (std::size_t ap = 0; ap < ny; ++ap)
            for (std::size_t tp = 0; tp < n; ++tp)
                for (std::size_t b = 0; b < nv; ++b)
                    for (std::size_t t = 0; t < n; ++t, ++r) {
                        for (std::size_t j = 0; j < n; ++j) {
                            for (std::size_t b2 = 0; b2 < nv; ++b2) {
                                Scalar acc = Scalar::zero(f);
                                for (std::size_t t2 = 0; t2 < n; ++t2)
                                    acc += rj[j].at(tp, t2) * mv[q].at(b2 * n + t2, b * n + t);
                                if (!acc.is_zero()) rows.at(r, (ap * nv + b2) * n + j) += acc;
                            }
                            for (std::size_t a = 0; a < ny; ++a) {
                                Scalar acc = Scalar::zero(f);
                                for (std::size_t t2 = 0; t2 < n; ++t2)
                                    acc += my[q].at(ap * n + tp, a * n + t2) * rj[j].at(t2, t);
                                if (!acc.is_zero()) rows.at(r, (a * nv + b) * n + j) -= acc;
                            }
                        }
                    }
    StabSpace st;
    st.hopf = under;
    st.chirality = StabSpace::Chirality::InTensorH;
    st.dim_u = nv;
    st.dim_w = ny;
    st.basis = kernel(rows);
    return st;
}

Report dual_stab_check(const ComodAlg& s, const ModuleRep& v, const ModuleRep& y) {
    Report rep{"mirrored stabilizer against module homomorphisms"};
    HopfData under = dual_hopf(s.hopf);
    const auto& f = under.field();
    std::size_t n = under.dim(), nv = v.dim, ny = y.dim;
    auto mv = dual_tensor_rep_action(s, v);
    auto my = dual_tensor_rep_action(s, y);
    Subspace homs = intertwiner_space(f, my, mv, nv * n, ny * n);
    StabSpace st = dual_stab_space(s, v, y);

    rep.add("dimension factorization", homs.dim() == st.basis.dim() * n,
            std::to_string(homs.dim()) + " vs " + std::to_string(st.basis.dim() * n));

    std::vector<Vec> rows;
    for (std::size_t r = 0; r < st.basis.dim(); ++r)
        rows.push_back(flatten(rmult_embed(under, st.basis.basis().row(r), nv, ny)));
    std::size_t amb = ny * n * nv * n;
    Subspace rst = rows.empty() ? Subspace::zero(f, amb)
                                : Subspace::span(f, amb, rows_matrix(f, amb, rows));
    rep.add("embedded stabilizer lies in the homomorphisms", homs.contains(rst), "");

    EndModuleOps ops = end_module_ops(under);
    // Second-leg version of the End(H) actions: indices (a,t'),(b,t).
    auto second_leg_operator = [&](const Matrix& op) {
        Matrix big(f, amb, amb);
        for (std::size_t tp = 0; tp < n; ++tp)
            for (std::size_t t = 0; t < n; ++t)
                for (std::size_t t2p = 0; t2p < n; ++t2p)
                    for (std::size_t t2 = 0; t2 < n; ++t2) {
                        const Scalar& o = op.at(hom_index(tp, t, n), hom_index(t2p, t2, n));
                        if (o.is_zero()) continue;
                        for (std::size_t a = 0; a < ny; ++a)
                            for (std::size_t b = 0; b < nv; ++b)
                                big.at((a * n + tp) * (nv * n) + b * n + t,
                                       (a * n + t2p) * (nv * n) + b * n + t2) = o;
                    }
        return big;
    };

    bool stable = true;
    std::string wit;
    std::vector<Matrix> bigc, bigd;
    for (std::size_t j = 0; j < n; ++j) bigc.push_back(second_leg_operator(ops.c[j]));
    for (std::size_t t = 0; t < n; ++t) bigd.push_back(second_leg_operator(ops.d[t]));
    for (std::size_t r = 0; r < homs.dim() && stable; ++r) {
        Vec x = homs.basis().row(r);
        for (std::size_t j = 0; j < n && stable; ++j)
            if (!homs.contains(bigc[j].apply(x))) {
                stable = false;
                wit = "primal action " + tuple_str({r, j});
            }
        for (std::size_t t = 0; t < n && stable; ++t)
            if (!homs.contains(bigd[t].apply(x))) {
                stable = false;
                wit = "dual action " + tuple_str({r, t});
            }
    }
    rep.add("homomorphism space is a Hopf submodule", stable, wit);

    Matrix stacked(f, n * amb, amb);
    for (std::size_t j = 0; j < n; ++j) {
        Matrix m = bigc[j] - Matrix::identity(f, amb).scaled(under.coalg.counit[j]);
        for (std::size_t r = 0; r < amb; ++r) stacked.set_row(j * amb + r, m.row(r));
    }
    Subspace coinv = intersect(kernel(stacked), homs);
    rep.add("coinvariants are the embedded stabilizer", coinv == rst,
            std::to_string(coinv.dim()) + " vs " + std::to_string(rst.dim()));
    return rep;
}

Report duality_check(const ComodAlg& s, const ModuleRep& w) {
    Report rep{"double stabilizer duality"};
    HopfData under = dual_hopf(s.hopf);
    const auto& f = under.field();
    std::size_t n = under.dim(), nw = w.dim;

    auto mw = dual_tensor_rep_action(s, w);
    Subspace rho = mat_span(f, mw);
    Subspace rho_p = commutant(f, nw * n, mw);
    Subspace rho_pp = commutant(f, nw * n, subspace_mats(rho_p, nw * n, nw * n));

    StabSpace dst = dual_stab_space(s, w, w);
    ComodAlg base = stab_comodule_structure(dst);
    ModuleRep wmod = stab_action_on_module(dst);
    StabSpace t = stab_space(base, wmod, wmod);

    HeisenbergData hd = heisenberg(under);
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < t.basis.dim(); ++r) {
        Matrix x = lmult_embed(under, t.basis.basis().row(r), nw, nw);
        Matrix z(f, nw * n, nw * n);
        for (std::size_t pp = 0; pp < nw; ++pp)
            for (std::size_t p = 0; p < nw; ++p)
                for (std::size_t tp = 0; tp < n; ++tp)
                    for (std::size_t tt = 0; tt < n; ++tt) {
                        Scalar acc = Scalar::zero(f);
                        for (std::size_t bp = 0; bp < n; ++bp)
                            for (std::size_t b = 0; b < n; ++b)
                                acc += x.at(bp * nw + pp, b * nw + p) *
                                       hd.psi_inv.at(tp * n + tt, bp * n + b);
                        z.at(pp * n + tp, p * n + tt) = acc;
                    }
        rows.push_back(flatten(z));
    }
    std::size_t amb = nw * n * nw * n;
    Subspace ups = rows.empty() ? Subspace::zero(f, amb)
                                : Subspace::span(f, amb, rows_matrix(f, amb, rows));

    rep.add("double stabilizer transports onto the bicommutant", ups == rho_pp,
            std::to_string(ups.dim()) + " vs " + std::to_string(rho_pp.dim()));
    rep.add("double centralizer closes", rho_pp == rho,
            std::to_string(rho_pp.dim()) + " vs " + std::to_string(rho.dim()));
    rep.add("double stabilizer transports onto the representation image", ups == rho,
            std::to_string(ups.dim()) + " vs " + std::to_string(rho.dim()));
    return rep;
}

Report faithfulness_check(const ComodAlg& k, const ModuleRep& w) {
    Report rep{"faithfulness of the tensor representation"};
    const auto& f = k.hopf.field();
    std::size_t nk = k.alg.dim, m = k.hopf.dim() * w.dim;
    auto mats = tensor_rep_action(k, w);
    Matrix cols(f, m * m, nk);
    for (std::size_t q = 0; q < nk; ++q) {
        Vec v = flatten(mats[q]);
        for (std::size_t r = 0; r < m * m; ++r) cols.at(r, q) = v[r];
    }
    Subspace ker = kernel(cols);
    rep.add("tensor representation is faithful", ker.dim() == 0,
            "kernel dimension " + std::to_string(ker.dim()));
    return rep;
}

Report dim_formula_check(const ComodAlg& k, const ModuleRep& u, const ModuleRep& w) {
    Report rep{"stabilizer dimension formula"};
    SimplicityVerdict sv = h_simplicity(k, IdealSide::TwoSided);
    bool simple = sv.status == SimplicityStatus::Simple;
    rep.add_verdict("comodule algebra simplicity certificate",
                    simple ? Verdict::Pass : Verdict::HypothesisUnmet, sv.method);

    StabSpace st = stab_space(k, u, w);
    std::size_t lhs = k.alg.dim * st.basis.dim();
    std::size_t rhs = u.dim * w.dim * k.hopf.dim();
    std::string wit = std::to_string(lhs) + " vs " + std::to_string(rhs);
    if (simple)
        rep.add("stabilizer dimension product", lhs == rhs, wit);
    else
        rep.add_verdict("stabilizer dimension product", Verdict::HypothesisUnmet,
                        wit + (lhs == rhs ? " (holds anyway)" : " (fails)"));

    bool divides = rhs % k.alg.dim == 0;
    std::string dwit = std::to_string(rhs) + " by " + std::to_string(k.alg.dim);
    if (simple)
        rep.add("divisibility of the dimension product", divides, dwit);
    else
        rep.add_verdict("divisibility of the dimension product", Verdict::HypothesisUnmet,
                        dwit + (divides ? " (holds anyway)" : " (fails)"));
    return rep;
}

Report tensor_dual_object_check(const ComodAlg& k, const ModuleRep& w) {
    Report rep{"twisted coaction on the tensor representation space"};
    const auto& h = k.hopf;
    const auto& f = h.field();
    std::size_t n = h.dim(), nw = w.dim;
    Matrix s2 = h.antipode * h.antipode;

    ComoduleStr cs;
    cs.dim = n * nw;
    cs.hopf_dim = n;
    cs.side = Side::Left;
    cs.coact = Tensor3(f, n * nw, n, n * nw);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t c = 0; c < n; ++c) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t uu = 0; uu < n; ++uu)
                    acc += s2.at(j, uu) * h.coalg.comult.at(c, i, uu);
                if (acc.is_zero()) continue;
                for (std::size_t p = 0; p < nw; ++p)
                    cs.coact.at(i * nw + p, j, c * nw + p) = acc;
            }
    Report axioms = cs.check(h, "comodule axioms");
    for (auto& it : axioms.items) rep.items.push_back(it);

    auto mw = tensor_rep_action(k, w);
    bool ok = true;
    std::string wit;
    for (std::size_t j = 0; j < n && ok; ++j) {
        Matrix comp = cs.component(j);
        for (std::size_t q = 0; q < mw.size() && ok; ++q)
            if (comp * mw[q] != mw[q] * comp) {
                ok = false;
                wit = tuple_str({j, q});
            }
    }
    rep.add("coaction components are module maps", ok, wit);
    return rep;
}

StabSpace correspondence_map(const ComodAlg& k, const ModuleRep& v) {
    ModAlg m = opposite_correspondence(k);
    ComodAlg s;
    s.hopf = k.hopf;
    s.alg = m.alg;
    s.coact = module_to_comodule(m.act);
    return dual_stab_space(s, v, v);
}

}  // namespace hopfstab
