#include "hopfstab/hopf.hpp"

namespace hopfstab {

HopfData HopfData::make(AlgebraData a, CoalgebraData c, Matrix s) {
    if (a.dim != c.dim) throw ShapeError("hopf: algebra/coalgebra dimension mismatch");
    if (s.rows() != a.dim || s.cols() != a.dim) throw ShapeError("hopf: antipode shape mismatch");
    HopfData h{std::move(a), std::move(c), std::move(s), Matrix()};
    h.antipode_inv = inverse(h.antipode);  // throws on singular antipode
    return h;
}

Vec HopfData::dual_multiply(const Vec& alpha, const Vec& beta) const {
    std::size_t n = dim();
    Vec r = zero_vec(field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (beta[j].is_zero()) continue;
            Scalar c = alpha[i] * beta[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!coalg.comult.at(k, i, j).is_zero()) r[k] += c * coalg.comult.at(k, i, j);
        }
    }
    return r;
}

Vec HopfData::dual_delta(const Vec& alpha) const {
    std::size_t n = dim();
    Vec r = zero_vec(field(), n * n);
    for (std::size_t k = 0; k < n; ++k) {
        if (alpha[k].is_zero()) continue;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v)
                if (!alg.mult.at(u, v, k).is_zero()) r[u * n + v] += alpha[k] * alg.mult.at(u, v, k);
    }
    return r;
}

namespace {
std::string idx2(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
}  // namespace

Report check_hopf(const HopfData& h) {
    Report rep{"hopf axioms"};
    std::size_t n = h.dim();
    const FieldSpec& f = h.field();
    for (auto& it : h.alg.check().items) rep.items.push_back(it);
    for (auto& it : h.coalg.check().items) rep.items.push_back(it);

    // Delta is an algebra map
    bool dmult = true;
    std::string wit;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = h.alg.multiply(unit_vec(f, n, i), unit_vec(f, n, j));
            Vec lhs = h.coalg.delta(prod);
            Vec di = h.coalg.delta(unit_vec(f, n, i)), dj = h.coalg.delta(unit_vec(f, n, j));
            Vec rhs = zero_vec(f, n * n);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    if (di[a * n + b].is_zero()) continue;
                    for (std::size_t c = 0; c < n; ++c)
                        for (std::size_t e = 0; e < n; ++e) {
                            if (dj[c * n + e].is_zero()) continue;
                            Scalar coeff = di[a * n + b] * dj[c * n + e];
                            for (std::size_t p = 0; p < n; ++p) {
                                if (h.alg.mult.at(a, c, p).is_zero()) continue;
                                for (std::size_t q = 0; q < n; ++q)
                                    if (!h.alg.mult.at(b, e, q).is_zero())
                                        rhs[p * n + q] +=
                                            coeff * h.alg.mult.at(a, c, p) * h.alg.mult.at(b, e, q);
                            }
                        }
                }
            if (lhs != rhs && wit.empty()) {
                dmult = false;
                wit = idx2(i, j);
            }
        }
    rep.add("comultiplication multiplicative", dmult, wit);

    Vec delta_unit = h.coalg.delta(h.alg.unit);
    Vec unit_unit = zero_vec(f, n * n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) unit_unit[p * n + q] = h.alg.unit[p] * h.alg.unit[q];
    rep.add("comultiplication unital", delta_unit == unit_unit);

    bool emult = true;
    std::string ewit;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Scalar lhs = Scalar::zero(f);
            for (std::size_t k = 0; k < n; ++k) lhs += h.alg.mult.at(i, j, k) * h.coalg.counit[k];
            if (lhs != h.coalg.counit[i] * h.coalg.counit[j] && ewit.empty()) {
                emult = false;
                ewit = idx2(i, j);
            }
        }
    rep.add("counit multiplicative", emult, ewit);
    rep.add("counit unital", dot(h.coalg.counit, h.alg.unit).is_one());

    // antipode axiom m(S(x)id)Delta = u eps = m(id(x)S)Delta
    bool anti = true;
    std::string awit;
    for (std::size_t i = 0; i < n; ++i) {
        Vec d = h.coalg.delta(unit_vec(f, n, i));
        Vec lhs = zero_vec(f, n), rhs = zero_vec(f, n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (d[a * n + b].is_zero()) continue;
                Vec sa = h.apply_antipode(unit_vec(f, n, a));
                Vec sb = h.apply_antipode(unit_vec(f, n, b));
                lhs = add(lhs, scale(d[a * n + b], h.alg.multiply(sa, unit_vec(f, n, b))));
                rhs = add(rhs, scale(d[a * n + b], h.alg.multiply(unit_vec(f, n, a), sb)));
            }
        Vec want = scale(h.coalg.counit[i], h.alg.unit);
        if ((lhs != want || rhs != want) && awit.empty()) {
            anti = false;
            awit = std::to_string(i);
        }
    }
    rep.add("antipode axiom", anti, awit);
    rep.add("antipode invertible", (h.antipode * h.antipode_inv) == Matrix::identity(f, n));
    return rep;
}

HopfData dual_hopf(const HopfData& h) {
    std::size_t n = h.dim();
    const FieldSpec& f = h.field();
    AlgebraData a{f, n, Tensor3(f, n, n, n), h.coalg.counit};
    CoalgebraData c{f, n, Tensor3(f, n, n, n), h.alg.unit};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                a.mult.at(i, j, k) = h.coalg.comult.at(k, i, j);
                c.comult.at(i, j, k) = h.alg.mult.at(j, k, i);
            }
    return HopfData::make(std::move(a), std::move(c), h.antipode.transpose());
}

HopfData variant(const HopfData& h, HopfVariant which) {
    switch (which) {
        case HopfVariant::Op:
            return HopfData::make(h.alg.opposite(), h.coalg, h.antipode_inv);
        case HopfVariant::Cop:
            return HopfData::make(h.alg, h.coalg.coopposite(), h.antipode_inv);
        case HopfVariant::Bop:
            return HopfData::make(h.alg.opposite(), h.coalg.coopposite(), h.antipode);
    }
    throw std::logic_error("unreachable");
}

Matrix ActionOperator::act(const Vec& actor) const {
    if (mats.empty()) throw ShapeError("empty action operator");
    Matrix m(mats[0].field(), mats[0].rows(), mats[0].cols());
    for (std::size_t i = 0; i < actor.size(); ++i)
        if (!actor[i].is_zero()) m = m + mats[i].scaled(actor[i]);
    return m;
}

ActionOperator harpoon(const HopfData& h, Harpoon which, ActionTarget target) {
    std::size_t n = h.dim();
    const FieldSpec& f = h.field();
    const Tensor3& m = h.alg.mult;
    const Tensor3& d = h.coalg.comult;
    const Matrix& sinv = h.antipode_inv;
    ActionOperator op{which, target, {}};
    op.mats.assign(n, Matrix(f, n, n));
    for (std::size_t t = 0; t < n; ++t) {
        Matrix& mat = op.mats[t];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Scalar v = Scalar::zero(f);
                if (target == ActionTarget::HOnDual) {
                    // acting element e_t in H, acted element e^i in H*
                    switch (which) {
                        case Harpoon::RightUp: v = m.at(j, t, i); break;    // (e_t->e^i)(e_j)=e^i(e_j e_t)
                        case Harpoon::LeftUp: v = m.at(t, j, i); break;     // (e^i<-e_t)(e_j)=e^i(e_t e_j)
                        case Harpoon::RightDown:                            // e^i(Sinv(e_t) e_j)
                            for (std::size_t s = 0; s < n; ++s) v += sinv.at(s, t) * m.at(s, j, i);
                            break;
                        case Harpoon::LeftDown:                             // e^i(e_j Sinv(e_t))
                            for (std::size_t s = 0; s < n; ++s) v += sinv.at(s, t) * m.at(j, s, i);
                            break;
                    }
                    mat.at(j, i) = v;
                } else {
                    // acting element e^t in H*, acted element e_i in H
                    switch (which) {
                        case Harpoon::RightUp: v = d.at(i, j, t); break;    // <e^t,h2>h1
                        case Harpoon::LeftUp: v = d.at(i, t, j); break;     // <e^t,h1>h2
                        case Harpoon::RightDown:                            // <e^t,Sinv(h1)>h2
                            for (std::size_t a = 0; a < n; ++a) v += sinv.at(t, a) * d.at(i, a, j);
                            break;
                        case Harpoon::LeftDown:                             // <e^t,Sinv(h2)>h1
                            for (std::size_t b = 0; b < n; ++b) v += sinv.at(t, b) * d.at(i, j, b);
                            break;
                    }
                    mat.at(j, i) = v;
                }
            }
    }
    return op;
}

ModuleRep hom_module_structure(const HopfData& h, const ModuleRep& x, const ModuleRep& y,
                               Side side) {
    if (x.side != side || y.side != side) throw ShapeError("hom_module: handedness mismatch");
    std::size_t n = h.dim();
    const FieldSpec& f = h.field();
    ModuleRep rep{x.dim * y.dim, side, {}};
    for (std::size_t t = 0; t < n; ++t) {
        Matrix m(f, x.dim * y.dim, x.dim * y.dim);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = h.coalg.comult.at(t, a, b);
                if (c.is_zero()) continue;
                Matrix inner;
                if (side == Side::Left) {
                    // (h.T)(x) = h1 . T(S(h2).x)
                    inner = hom_conjugation(y.action[a],
                                            x.act(h.alg, h.apply_antipode(unit_vec(f, n, b))),
                                            x.dim, y.dim);
                } else {
                    // (T.h)(w) = T(w.Sinv(h2)).h1
                    inner = hom_conjugation(y.action[a],
                                            x.act(h.alg, h.apply_antipode_inv(unit_vec(f, n, b))),
                                            x.dim, y.dim);
                }
                m = m + inner.scaled(c);
            }
        rep.action.push_back(m);
    }
    return rep;
}

Report verify_core_identities(const HopfData& h) {
    Report rep{"harpoon exchange identities"};
    std::size_t n = h.dim();
    const FieldSpec& f = h.field();
    ActionOperator rd_hd = harpoon(h, Harpoon::RightDown, ActionTarget::HOnDual);
    ActionOperator ru_hd = harpoon(h, Harpoon::RightUp, ActionTarget::HOnDual);
    ActionOperator rd_dh = harpoon(h, Harpoon::RightDown, ActionTarget::DualOnH);
    ActionOperator ld_dh = harpoon(h, Harpoon::LeftDown, ActionTarget::DualOnH);
    ActionOperator lu_dh = harpoon(h, Harpoon::LeftUp, ActionTarget::DualOnH);
    Matrix s_dual_inv2 = h.antipode_inv.transpose() * h.antipode_inv.transpose();

    // (t(down)beta) alpha = (t <- Sinv^2(alpha1)) (down) (beta alpha2)
    bool id1 = true;
    std::string w1;
    for (std::size_t t = 0; t < n && id1; ++t)
        for (std::size_t b = 0; b < n && id1; ++b)
            for (std::size_t a = 0; a < n; ++a) {
                Vec lhs = h.dual_multiply(rd_hd[t].apply(unit_vec(f, n, b)), unit_vec(f, n, a));
                Vec rhs = zero_vec(f, n);
                Vec da = h.dual_delta(unit_vec(f, n, a));
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        const Scalar& c = da[u * n + v];
                        if (c.is_zero()) continue;
                        Vec gamma = s_dual_inv2.apply(unit_vec(f, n, u));
                        Vec x = lu_dh.act(gamma).apply(unit_vec(f, n, t));  // t <- gamma, in H
                        Vec target = h.dual_multiply(unit_vec(f, n, b), unit_vec(f, n, v));
                        rhs = add(rhs, scale(c, rd_hd.act(x).apply(target)));
                    }
                if (lhs != rhs) {
                    id1 = false;
                    w1 = "(" + std::to_string(t) + "," + std::to_string(b) + "," +
                         std::to_string(a) + ")";
                    break;
                }
            }
    rep.add("down-harpoon product exchange", id1, w1);

    // (h t)(leftdown)alpha = (h(leftdown)alpha2)(t(leftdown)alpha1)
    bool id2 = true;
    std::string w2;
    for (std::size_t p = 0; p < n && id2; ++p)
        for (std::size_t t = 0; t < n && id2; ++t)
            for (std::size_t a = 0; a < n; ++a) {
                Vec prod = h.alg.multiply(unit_vec(f, n, p), unit_vec(f, n, t));
                Vec lhs = ld_dh[a].apply(prod);
                Vec rhs = zero_vec(f, n);
                Vec da = h.dual_delta(unit_vec(f, n, a));
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        const Scalar& c = da[u * n + v];
                        if (c.is_zero()) continue;
                        rhs = add(rhs, scale(c, h.alg.multiply(ld_dh[v].apply(unit_vec(f, n, p)),
                                                               ld_dh[u].apply(unit_vec(f, n, t)))));
                    }
                if (lhs != rhs) {
                    id2 = false;
                    w2 = "(" + std::to_string(p) + "," + std::to_string(t) + "," +
                         std::to_string(a) + ")";
                    break;
                }
            }
    rep.add("left-down anti-multiplicativity", id2, w2);

    // h (alpha(down)u) = (h1 -> alpha) (down) (h2 u)
    bool id3 = true;
    std::string w3;
    for (std::size_t p = 0; p < n && id3; ++p)
        for (std::size_t a = 0; a < n && id3; ++a)
            for (std::size_t u = 0; u < n; ++u) {
                Vec lhs =
                    h.alg.multiply(unit_vec(f, n, p), rd_dh[a].apply(unit_vec(f, n, u)));
                Vec rhs = zero_vec(f, n);
                for (std::size_t x = 0; x < n; ++x)
                    for (std::size_t y = 0; y < n; ++y) {
                        const Scalar& c = h.coalg.comult.at(p, x, y);
                        if (c.is_zero()) continue;
                        Vec beta = ru_hd[x].apply(unit_vec(f, n, a));
                        Vec hu = h.alg.multiply(unit_vec(f, n, y), unit_vec(f, n, u));
                        rhs = add(rhs, scale(c, rd_dh.act(beta).apply(hu)));
                    }
                if (lhs != rhs) {
                    id3 = false;
                    w3 = "(" + std::to_string(p) + "," + std::to_string(a) + "," +
                         std::to_string(u) + ")";
                    break;
                }
            }
    rep.add("regular/down-harpoon compatibility", id3, w3);
    return rep;
}

}  // namespace hopfstab
