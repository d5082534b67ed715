#include "hopfstab/modcom.hpp"

#include <algorithm>

namespace hopfstab {

namespace {

std::string idx2(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Product of u, v living in H (x) K, index r*dimK+s, using both multiplications.
Vec tensor_multiply(const AlgebraData& h, const AlgebraData& k, const Vec& u, const Vec& v) {
    std::size_t nh = h.dim, nk = k.dim;
    Vec out = zero_vec(h.field, nh * nk);
    for (std::size_t r1 = 0; r1 < nh; ++r1)
        for (std::size_t s1 = 0; s1 < nk; ++s1) {
            const Scalar& a = u[r1 * nk + s1];
            if (a.is_zero()) continue;
            for (std::size_t r2 = 0; r2 < nh; ++r2)
                for (std::size_t s2 = 0; s2 < nk; ++s2) {
                    const Scalar& b = v[r2 * nk + s2];
                    if (b.is_zero()) continue;
                    Scalar ab = a * b;
                    for (std::size_t r = 0; r < nh; ++r) {
                        const Scalar& mh = h.mult.at(r1, r2, r);
                        if (mh.is_zero()) continue;
                        Scalar c = ab * mh;
                        for (std::size_t s = 0; s < nk; ++s) {
                            const Scalar& mk = k.mult.at(s1, s2, s);
                            if (!mk.is_zero()) out[r * nk + s] += c * mk;
                        }
                    }
                }
        }
    return out;
}

// Same with the K leg first, index s*dimH+r.
Vec tensor_multiply_kh(const AlgebraData& k, const AlgebraData& h, const Vec& u, const Vec& v) {
    std::size_t nh = h.dim, nk = k.dim;
    Vec out = zero_vec(h.field, nh * nk);
    for (std::size_t s1 = 0; s1 < nk; ++s1)
        for (std::size_t r1 = 0; r1 < nh; ++r1) {
            const Scalar& a = u[s1 * nh + r1];
            if (a.is_zero()) continue;
            for (std::size_t s2 = 0; s2 < nk; ++s2)
                for (std::size_t r2 = 0; r2 < nh; ++r2) {
                    const Scalar& b = v[s2 * nh + r2];
                    if (b.is_zero()) continue;
                    Scalar ab = a * b;
                    for (std::size_t s = 0; s < nk; ++s) {
                        const Scalar& mk = k.mult.at(s1, s2, s);
                        if (mk.is_zero()) continue;
                        Scalar c = ab * mk;
                        for (std::size_t r = 0; r < nh; ++r) {
                            const Scalar& mh = h.mult.at(r1, r2, r);
                            if (!mh.is_zero()) out[s * nh + r] += c * mh;
                        }
                    }
                }
        }
    return out;
}

}  // namespace

Matrix ComoduleStr::component(std::size_t r) const {
    Matrix m(coact.field(), dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t s = 0; s < dim; ++s) m.at(s, i) = coact.at(i, r, s);
    return m;
}

Report ComoduleStr::check(const HopfData& h, const std::string& title) const {
    Report rep{title};
    bool shapes = hopf_dim == h.dim() && coact.dim1() == dim && coact.dim2() == hopf_dim &&
                  coact.dim3() == dim;
    rep.add("coaction shape", shapes);
    if (!shapes) return rep;
    const auto& d = h.coalg.comult;
    const FieldSpec& f = coact.field();

    bool coassoc = true;
    std::string wit;
    if (side == Side::Left) {
        // (Delta (x) id) lambda = (id (x) lambda) lambda
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t a = 0; a < hopf_dim; ++a)
                for (std::size_t b = 0; b < hopf_dim; ++b)
                    for (std::size_t s = 0; s < dim; ++s) {
                        Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
                        for (std::size_t r = 0; r < hopf_dim; ++r)
                            lhs += coact.at(i, r, s) * d.at(r, a, b);
                        for (std::size_t t = 0; t < dim; ++t)
                            rhs += coact.at(i, a, t) * coact.at(t, b, s);
                        if (lhs != rhs && wit.empty()) {
                            coassoc = false;
                            wit = idx2(i, s);
                        }
                    }
    } else {
        // (lambda (x) id) lambda = (id (x) Delta) lambda
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t a = 0; a < hopf_dim; ++a)
                for (std::size_t r = 0; r < hopf_dim; ++r)
                    for (std::size_t t = 0; t < dim; ++t) {
                        Scalar lhs = Scalar::zero(f), rhs = Scalar::zero(f);
                        for (std::size_t s = 0; s < dim; ++s)
                            lhs += coact.at(i, r, s) * coact.at(s, a, t);
                        for (std::size_t q = 0; q < hopf_dim; ++q)
                            rhs += coact.at(i, q, t) * d.at(q, a, r);
                        if (lhs != rhs && wit.empty()) {
                            coassoc = false;
                            wit = idx2(i, t);
                        }
                    }
    }
    rep.add("coassociativity of the coaction", coassoc, wit);

    bool counital = true;
    std::string cwit;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t s = 0; s < dim; ++s) {
            Scalar v = Scalar::zero(f);
            for (std::size_t r = 0; r < hopf_dim; ++r)
                v += coact.at(i, r, s) * h.coalg.counit[r];
            Scalar want = i == s ? Scalar::one(f) : Scalar::zero(f);
            if (v != want && cwit.empty()) {
                counital = false;
                cwit = idx2(i, s);
            }
        }
    rep.add("counit cancels the coaction", counital, cwit);
    return rep;
}

Report check_comodule_algebra(const ComodAlg& k) {
    Report rep{"comodule algebra"};
    Report a = k.alg.check();
    for (auto& it : a.items) rep.items.push_back(it);
    Report c = k.coact.check(k.hopf);
    for (auto& it : c.items) rep.items.push_back(it);
    if (!rep.all_pass()) return rep;

    std::size_t nh = k.hopf.dim(), nk = k.alg.dim;
    const FieldSpec& f = k.alg.field;

    // lambda as vectors in the tensor square, matching the comodule side.
    auto lam = [&](std::size_t i) {
        Vec v = zero_vec(f, nh * nk);
        for (std::size_t r = 0; r < nh; ++r)
            for (std::size_t s = 0; s < nk; ++s) {
                const Scalar& c0 = k.coact.coact.at(i, r, s);
                if (c0.is_zero()) continue;
                if (k.coact.side == Side::Left)
                    v[r * nk + s] = c0;
                else
                    v[s * nh + r] = c0;
            }
        return v;
    };
    auto lam_vec = [&](const Vec& x) {
        Vec v = zero_vec(f, nh * nk);
        for (std::size_t i = 0; i < nk; ++i)
            if (!x[i].is_zero()) v = add(v, scale(x[i], lam(i)));
        return v;
    };

    bool mult_map = true;
    std::string wit;
    for (std::size_t i = 0; i < nk && mult_map; ++i)
        for (std::size_t j = 0; j < nk; ++j) {
            Vec prod_then = lam_vec(k.alg.multiply(unit_vec(f, nk, i), unit_vec(f, nk, j)));
            Vec then_prod =
                k.coact.side == Side::Left
                    ? tensor_multiply(k.hopf.alg, k.alg, lam(i), lam(j))
                    : tensor_multiply_kh(k.alg, k.hopf.alg, lam(i), lam(j));
            if (prod_then != then_prod) {
                mult_map = false;
                wit = idx2(i, j);
                break;
            }
        }
    rep.add("coaction is multiplicative", mult_map, wit);

    Vec one_tensor = zero_vec(f, nh * nk);
    for (std::size_t r = 0; r < nh; ++r)
        for (std::size_t s = 0; s < nk; ++s) {
            Scalar v = k.hopf.alg.unit[r] * k.alg.unit[s];
            if (k.coact.side == Side::Left)
                one_tensor[r * nk + s] = v;
            else
                one_tensor[s * nh + r] = v;
        }
    rep.add("coaction is unital", lam_vec(k.alg.unit) == one_tensor);
    return rep;
}

Report check_module_algebra(const ModAlg& r) {
    Report rep{"module algebra"};
    Report a = r.alg.check();
    for (auto& it : a.items) rep.items.push_back(it);
    Report m = r.act.check(r.hopf.alg, "module axioms");
    for (auto& it : m.items) rep.items.push_back(it);
    if (!rep.all_pass()) return rep;

    std::size_t nh = r.hopf.dim(), nr = r.alg.dim;
    const FieldSpec& f = r.alg.field;
    const auto& d = r.hopf.coalg.comult;

    bool leib = true;
    std::string wit;
    for (std::size_t t = 0; t < nh && leib; ++t)
        for (std::size_t i = 0; i < nr && leib; ++i)
            for (std::size_t j = 0; j < nr; ++j) {
                Vec lhs = r.act.action[t].apply(
                    r.alg.multiply(unit_vec(f, nr, i), unit_vec(f, nr, j)));
                Vec rhs = zero_vec(f, nr);
                for (std::size_t u = 0; u < nh; ++u)
                    for (std::size_t v = 0; v < nh; ++v) {
                        const Scalar& c = d.at(t, u, v);
                        if (c.is_zero()) continue;
                        Vec left = r.act.action[u].apply(unit_vec(f, nr, i));
                        Vec right = r.act.action[v].apply(unit_vec(f, nr, j));
                        rhs = add(rhs, scale(c, r.alg.multiply(left, right)));
                    }
                if (lhs != rhs) {
                    leib = false;
                    wit = "(" + std::to_string(t) + ";" + idx2(i, j) + ")";
                }
            }
    rep.add("action distributes over products", leib, wit);

    bool unit_ok = true;
    for (std::size_t t = 0; t < nh; ++t)
        if (r.act.action[t].apply(r.alg.unit) != scale(r.hopf.coalg.counit[t], r.alg.unit))
            unit_ok = false;
    rep.add("action on the unit is the counit", unit_ok);
    return rep;
}

ComoduleStr module_to_comodule(const ModuleRep& m) {
    std::size_t nh = m.action.size();
    const FieldSpec& f = m.action.empty() ? FieldSpec::rationals() : m.action[0].field();
    ComoduleStr c{m.dim, nh, m.side == Side::Left ? Side::Right : Side::Left,
                  Tensor3(f, m.dim, nh, m.dim)};
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t r = 0; r < nh; ++r)
            for (std::size_t s = 0; s < m.dim; ++s) c.coact.at(i, r, s) = m.action[r].at(s, i);
    return c;
}

ModuleRep comodule_to_module(const ComoduleStr& c) {
    const FieldSpec& f = c.coact.field();
    ModuleRep m{c.dim, c.side == Side::Left ? Side::Right : Side::Left, {}};
    for (std::size_t r = 0; r < c.hopf_dim; ++r) {
        Matrix a(f, c.dim, c.dim);
        for (std::size_t i = 0; i < c.dim; ++i)
            for (std::size_t s = 0; s < c.dim; ++s) a.at(s, i) = c.coact.at(i, r, s);
        m.action.push_back(a);
    }
    return m;
}

Subspace coinvariants(const HopfData& h, const ComoduleStr& c) {
    const FieldSpec& f = c.coact.field();
    Matrix m(f, c.hopf_dim * c.dim, c.dim);
    for (std::size_t r = 0; r < c.hopf_dim; ++r)
        for (std::size_t s = 0; s < c.dim; ++s)
            for (std::size_t i = 0; i < c.dim; ++i) {
                Scalar v = c.coact.at(i, r, s);
                if (s == i) v -= h.alg.unit[r];
                m.at(r * c.dim + s, i) = v;
            }
    return kernel(m);
}

namespace {

std::vector<Matrix> ideal_generators(const ComodAlg& k, IdealSide side) {
    const FieldSpec& f = k.alg.field;
    std::size_t n = k.alg.dim;
    std::vector<Matrix> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = unit_vec(f, n, i);
        if (side != IdealSide::Right) gens.push_back(k.alg.left_mult(ei));
        if (side != IdealSide::Left) gens.push_back(k.alg.right_mult(ei));
    }
    for (std::size_t r = 0; r < k.coact.hopf_dim; ++r) gens.push_back(k.coact.component(r));
    return gens;
}

Subspace closure_under(const FieldSpec& f, std::size_t n, const Subspace& seed,
                       const std::vector<Matrix>& gens) {
    Subspace v = seed;
    for (;;) {
        std::vector<Vec> rows;
        for (std::size_t b = 0; b < v.dim(); ++b) {
            Vec row = v.basis().row(b);
            rows.push_back(row);
            for (const auto& g : gens) rows.push_back(g.apply(row));
        }
        Subspace next = Subspace::span(f, n, rows_matrix(f, n, rows));
        if (next == v) return v;
        v = next;
    }
}

}  // namespace

Subspace h_ideal_closure(const ComodAlg& k, const Subspace& seed, IdealSide side) {
    return closure_under(k.alg.field, k.alg.dim, seed, ideal_generators(k, side));
}

bool is_h_ideal(const ComodAlg& k, const Subspace& cand, IdealSide side) {
    for (const auto& g : ideal_generators(k, side))
        for (std::size_t b = 0; b < cand.dim(); ++b)
            if (!cand.contains(g.apply(cand.basis().row(b)))) return false;
    return true;
}

Subspace generated_operator_algebra(const FieldSpec& f, std::size_t dim,
                                    const std::vector<Matrix>& generators) {
    std::vector<Vec> rows;
    rows.push_back(flatten(Matrix::identity(f, dim)));
    for (const auto& g : generators) rows.push_back(flatten(g));
    Subspace v = Subspace::span(f, dim * dim, rows_matrix(f, dim * dim, rows));
    for (;;) {
        std::vector<Vec> more;
        for (std::size_t b = 0; b < v.dim(); ++b) {
            Matrix e = unflatten(f, v.basis().row(b), dim, dim);
            more.push_back(flatten(e));
            for (const auto& g : generators) more.push_back(flatten(g * e));
        }
        Subspace next = Subspace::span(f, dim * dim, rows_matrix(f, dim * dim, more));
        if (next == v) return v;
        v = next;
    }
}

Subspace commutant(const FieldSpec& f, std::size_t dim, const std::vector<Matrix>& family) {
    std::size_t n2 = dim * dim;
    Matrix m(f, family.size() * n2, n2);
    for (std::size_t gi = 0; gi < family.size(); ++gi) {
        const Matrix& g = family[gi];
        // (X G - G X)[a][b], coefficient of X[u][v]: G[v][b] d_{a,u} - G[a][u] d_{v,b}
        for (std::size_t a = 0; a < dim; ++a)
            for (std::size_t b = 0; b < dim; ++b) {
                std::size_t row = gi * n2 + a * dim + b;
                for (std::size_t v = 0; v < dim; ++v) m.at(row, a * dim + v) += g.at(v, b);
                for (std::size_t u = 0; u < dim; ++u) m.at(row, u * dim + b) -= g.at(a, u);
            }
    }
    return kernel(m);
}

namespace {

// --- small exact polynomial toolkit (coefficients ascending) ---

using Poly = std::vector<Scalar>;

void ptrim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly pmul(const FieldSpec& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ptrim(r);
    return r;
}

Poly psub(const FieldSpec& f, Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Scalar::zero(f));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ptrim(a);
    return a;
}

std::pair<Poly, Poly> pdivmod(const FieldSpec& f, Poly a, const Poly& b) {
    Poly q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, Scalar::zero(f));
    Scalar linv = b.back().inverse();
    while (a.size() >= b.size()) {
        Scalar c = a.back() * linv;
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        ptrim(a);
        if (a.empty()) break;
        if (a.size() < b.size()) break;
    }
    ptrim(q);
    return {q, a};
}

Poly pmonic(const Poly& p) {
    if (p.empty()) return p;
    Scalar inv = p.back().inverse();
    Poly r = p;
    for (auto& c : r) c *= inv;
    return r;
}

Poly pgcd(const FieldSpec& f, Poly a, Poly b) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        Poly r = pdivmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a);
}

// u*a + v*b = gcd(a,b) (monic).
struct Bezout {
    Poly g, u, v;
};
Bezout pext_gcd(const FieldSpec& f, Poly a, Poly b) {
    Poly r0 = a, r1 = b;
    Poly s0 = {Scalar::one(f)}, s1 = {};
    Poly t0 = {}, t1 = {Scalar::one(f)};
    ptrim(r0);
    ptrim(r1);
    while (!r1.empty()) {
        auto [q, r] = pdivmod(f, r0, r1);
        Poly s2 = psub(f, s0, pmul(f, q, s1));
        Poly t2 = psub(f, t0, pmul(f, q, t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    Scalar inv = r0.back().inverse();
    auto scale_p = [&](Poly p) {
        for (auto& c : p) c *= inv;
        return p;
    };
    return {scale_p(r0), scale_p(s0), scale_p(t0)};
}

Matrix peval(const FieldSpec& f, const Poly& p, const Matrix& x) {
    std::size_t n = x.rows();
    Matrix r(f, n, n);
    for (std::size_t i = p.size(); i-- > 0;) {
        r = r * x;
        if (!p[i].is_zero()) r = r + Matrix::identity(f, n).scaled(p[i]);
    }
    return r;
}

Poly minimal_polynomial(const FieldSpec& f, const Matrix& x) {
    std::size_t n = x.rows(), n2 = n * n;
    std::vector<Vec> powers;
    Matrix cur = Matrix::identity(f, n);
    powers.push_back(flatten(cur));
    for (std::size_t k = 1; k <= n; ++k) {
        cur = cur * x;
        Vec b = flatten(cur);
        Matrix a(f, n2, k);  // columns = lower powers
        for (std::size_t m = 0; m < k; ++m)
            for (std::size_t i = 0; i < n2; ++i) a.at(i, m) = powers[m][i];
        if (auto c = solve_linear_system(a, b)) {
            Poly mu(k + 1, Scalar::zero(f));
            mu[k] = Scalar::one(f);
            for (std::size_t m = 0; m < k; ++m) mu[m] = -(*c)[m];
            return mu;
        }
        powers.push_back(b);
    }
    throw ShapeError("minimal polynomial not found");  // unreachable for square x
}

Scalar peval_scalar(const FieldSpec& f, const Poly& p, const Scalar& x) {
    Scalar r = Scalar::zero(f);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

std::vector<mpz_class> small_divisors(const mpz_class& n0, std::size_t cap = 200000) {
    std::vector<mpz_class> divs;
    mpz_class n = abs(n0);
    if (n == 0) return divs;
    for (mpz_class i = 1; i * i <= n && cap > 0; ++i, --cap) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i * i != n) divs.push_back(n / i);
        }
    }
    return divs;
}

std::vector<Scalar> find_roots(const FieldSpec& f, const Poly& p) {
    std::vector<Scalar> roots;
    if (p.size() < 2) return roots;
    if (f.kind == FieldKind::PrimeField) {
        if (f.modulus > 20000) return roots;  // out of exhaustive reach
        for (std::uint64_t r = 0; r < f.modulus; ++r) {
            Scalar x = Scalar::from_residue(f, r);
            if (peval_scalar(f, p, x).is_zero()) roots.push_back(x);
        }
        return roots;
    }
    // Rational roots: clear denominators, then numerator | constant and
    // denominator | leading coefficient.
    mpz_class lcm_den = 1;
    for (const auto& c : p) lcm_den = lcm(lcm_den, c.rational().get_den());
    std::vector<mpz_class> z;
    for (const auto& c : p) {
        mpq_class q = c.rational() * mpq_class(lcm_den);
        z.push_back(q.get_num());
    }
    std::size_t lo = 0;
    while (lo < z.size() && z[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(Scalar::zero(f));
    if (lo + 1 >= z.size()) return roots;
    for (const auto& num : small_divisors(z[lo]))
        for (const auto& den : small_divisors(z.back()))
            for (int sgn : {1, -1}) {
                mpq_class cand(sgn * num, den);
                cand.canonicalize();
                Scalar x = Scalar::from_rational(cand);
                if (peval_scalar(f, p, x).is_zero() &&
                    std::find(roots.begin(), roots.end(), x) == roots.end())
                    roots.push_back(x);
            }
    return roots;
}

// Split mu into coprime monic factors f1*f2 (both nonconstant), if we can.
std::optional<std::pair<Poly, Poly>> coprime_split(const FieldSpec& f, const Poly& mu) {
    for (const Scalar& lam : find_roots(f, mu)) {
        Poly lin = {-lam, Scalar::one(f)};
        Poly rest = mu, f1 = {Scalar::one(f)};
        for (;;) {
            auto [q, r] = pdivmod(f, rest, lin);
            if (!r.empty()) break;
            f1 = pmul(f, f1, lin);
            rest = q;
        }
        if (!rest.empty() && rest.size() >= 2) return std::make_pair(f1, pmonic(rest));
    }
    // No roots: over a small prime field try monic quadratic factors.
    if (f.kind == FieldKind::PrimeField && f.modulus <= 100 && mu.size() >= 5) {
        for (std::uint64_t c0 = 0; c0 < f.modulus; ++c0)
            for (std::uint64_t c1 = 0; c1 < f.modulus; ++c1) {
                Poly q = {Scalar::from_residue(f, c0), Scalar::from_residue(f, c1),
                          Scalar::one(f)};
                auto [quo, rem] = pdivmod(f, mu, q);
                if (!rem.empty()) continue;
                if (pgcd(f, q, quo).size() == 1) return std::make_pair(q, pmonic(quo));
            }
    }
    return std::nullopt;
}

// Idempotent projecting onto ker f1(x) along ker f2(x), for coprime f1, f2
// with f1*f2 = minimal polynomial of x.
Matrix crt_idempotent(const FieldSpec& f, const Matrix& x, const Poly& f1, const Poly& f2) {
    Bezout bz = pext_gcd(f, f1, f2);  // bz.g == 1
    return peval(f, pmul(f, bz.v, f2), x);
}

Subspace column_space(const Matrix& m) {
    return Subspace::span(m.field(), m.rows(), m.transpose());
}

}  // namespace

SimplicityVerdict h_simplicity(const ComodAlg& k, IdealSide side) {
    const FieldSpec& f = k.alg.field;
    std::size_t n = k.alg.dim;
    std::vector<Matrix> gens = ideal_generators(k, side);

    Subspace b = generated_operator_algebra(f, n, gens);
    bool trace_usable = f.kind == FieldKind::Rationals || f.modulus > b.dim();

    if (trace_usable) {
        std::vector<Matrix> basis;
        for (std::size_t i = 0; i < b.dim(); ++i)
            basis.push_back(unflatten(f, b.basis().row(i), n, n));
        Matrix gram(f, b.dim(), b.dim());
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = i; j < b.dim(); ++j) {
                Scalar tr = Scalar::zero(f);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t c = 0; c < n; ++c)
                        tr += basis[i].at(a, c) * basis[j].at(c, a);
                gram.at(i, j) = tr;
                gram.at(j, i) = tr;
            }
        Subspace rad = kernel(gram);
        if (rad.dim() > 0) {
            // rad(B).K is a nonzero proper invariant subspace.
            std::vector<Vec> rows;
            for (std::size_t m = 0; m < rad.dim(); ++m) {
                Matrix r(f, n, n);
                Vec c = rad.basis().row(m);
                for (std::size_t i = 0; i < b.dim(); ++i)
                    if (!c[i].is_zero()) r = r + basis[i].scaled(c[i]);
                for (std::size_t col = 0; col < n; ++col) {
                    Vec v;
                    for (std::size_t row = 0; row < n; ++row) v.push_back(r.at(row, col));
                    rows.push_back(v);
                }
            }
            Subspace w = Subspace::span(f, n, rows_matrix(f, n, rows));
            return {SimplicityStatus::NotSimple, w, "radical of the trace form acts nontrivially"};
        }
        Subspace c = commutant(f, n, gens);
        std::vector<Vec> cands;
        for (std::size_t i = 0; i < c.dim(); ++i) {
            cands.push_back(c.basis().row(i));
            for (std::size_t j = i + 1; j < c.dim(); ++j)
                cands.push_back(add(c.basis().row(i), c.basis().row(j)));
        }
        for (const Vec& cv : cands) {
            Matrix cm = unflatten(f, cv, n, n);
            Subspace ker = kernel(cm);
            if (ker.dim() > 0 && ker.dim() < n)
                return {SimplicityStatus::NotSimple, ker,
                        "kernel of a singular commutant element"};
        }
        if (c.dim() == 1)
            return {SimplicityStatus::Simple, std::nullopt,
                    "semisimple action with scalar commutant"};
    }

    if (f.kind == FieldKind::PrimeField) {
        // Exhaustive orbit closure when the vector count is small.
        double total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= double(f.modulus);
        if (total <= 1e6) {
            // enumerate projective representatives: leading coordinate 1
            for (std::size_t lead = 0; lead < n; ++lead) {
                std::size_t free = n - lead - 1;
                std::vector<std::uint64_t> digits(free, 0);
                for (;;) {
                    Vec w = zero_vec(f, n);
                    w[lead] = Scalar::one(f);
                    for (std::size_t d = 0; d < free; ++d)
                        w[lead + 1 + d] = Scalar::from_residue(f, digits[d]);
                    Subspace cl = h_ideal_closure(
                        k, Subspace::span(f, n, rows_matrix(f, n, {w})), side);
                    if (cl.dim() < n)
                        return {SimplicityStatus::NotSimple, cl, "orbit closure of a vector"};
                    std::size_t d = 0;
                    while (d < free && digits[d] + 1 == f.modulus) digits[d++] = 0;
                    if (d == free) break;
                    ++digits[d];
                }
            }
            return {SimplicityStatus::Simple, std::nullopt, "exhaustive orbit closure"};
        }
    }
    return {SimplicityStatus::Undecided, std::nullopt, "no certificate found"};
}

DecomposabilityVerdict h_indecomposable(const ComodAlg& k) {
    const FieldSpec& f = k.alg.field;
    std::size_t n = k.alg.dim;
    std::vector<Matrix> gens = ideal_generators(k, IdealSide::TwoSided);
    Subspace c = commutant(f, n, gens);
    if (c.dim() == 1)
        return {DecomposabilityVerdict::Status::Indecomposable, std::nullopt, std::nullopt,
                std::nullopt, "scalar commutant"};

    std::vector<Vec> cands;
    for (std::size_t i = 0; i < c.dim(); ++i) {
        cands.push_back(c.basis().row(i));
        for (std::size_t j = i + 1; j < c.dim(); ++j)
            cands.push_back(add(c.basis().row(i), c.basis().row(j)));
    }
    Matrix id = Matrix::identity(f, n);
    for (const Vec& cv : cands) {
        Matrix x = unflatten(f, cv, n, n);
        Poly mu = minimal_polynomial(f, x);
        auto split = coprime_split(f, mu);
        if (!split) continue;
        Matrix e = crt_idempotent(f, x, split->first, split->second);
        if (e.is_zero() || e == id || e * e != e) continue;
        Subspace i_part = kernel(id - e);
        Subspace j_part = kernel(e);
        if (!is_h_ideal(k, i_part, IdealSide::TwoSided) ||
            !is_h_ideal(k, j_part, IdealSide::TwoSided))
            continue;
        if (intersect(i_part, j_part).dim() != 0 || i_part.dim() + j_part.dim() != n) continue;
        return {DecomposabilityVerdict::Status::Decomposable, e, i_part, j_part,
                "splitting idempotent in the commutant"};
    }
    return {DecomposabilityVerdict::Status::Undecided, std::nullopt, std::nullopt, std::nullopt,
            "no splitting idempotent found"};
}

ComodAlg smash_product(const ModAlg& r) {
    const FieldSpec& f = r.alg.field;
    std::size_t nr = r.alg.dim, nh = r.hopf.dim(), n = nr * nh;
    const auto& d = r.hopf.coalg.comult;
    auto idx = [&](std::size_t i, std::size_t j) { return i * nh + j; };

    AlgebraData alg{f, n, Tensor3(f, n, n, n), zero_vec(f, n)};
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            alg.unit[idx(i, j)] = r.alg.unit[i] * r.hopf.alg.unit[j];

    // (r_i # h_j)(r_p # h_q) = sum d[j][j1][j2] (e_{j2}.r_p) r_i # e_{j1} e_q
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t p = 0; p < nr; ++p)
                for (std::size_t q = 0; q < nh; ++q)
                    for (std::size_t j1 = 0; j1 < nh; ++j1)
                        for (std::size_t j2 = 0; j2 < nh; ++j2) {
                            const Scalar& dc = d.at(j, j1, j2);
                            if (dc.is_zero()) continue;
                            Vec acted = r.act.action[j2].apply(unit_vec(f, nr, p));
                            Vec rr = r.alg.multiply(acted, unit_vec(f, nr, i));
                            for (std::size_t s = 0; s < nr; ++s) {
                                if (rr[s].is_zero()) continue;
                                Scalar c = dc * rr[s];
                                for (std::size_t t = 0; t < nh; ++t) {
                                    const Scalar& mh = r.hopf.alg.mult.at(j1, q, t);
                                    if (!mh.is_zero())
                                        alg.mult.at(idx(i, j), idx(p, q), idx(s, t)) += c * mh;
                                }
                            }
                        }

    // lambda(r_i # h_j) = h_{j,1} (x) (r_i # h_{j,2})
    ComoduleStr coact{n, nh, Side::Left, Tensor3(f, n, nh, n)};
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nh; ++j)
            for (std::size_t a = 0; a < nh; ++a)
                for (std::size_t b = 0; b < nh; ++b)
                    coact.coact.at(idx(i, j), a, idx(i, b)) += d.at(j, a, b);

    return {r.hopf, std::move(alg), std::move(coact)};
}

ModAlg opposite_correspondence(const ComodAlg& k) {
    if (k.coact.side != Side::Left) throw ShapeError("opposite correspondence needs a left coaction");
    const FieldSpec& f = k.alg.field;
    std::size_t n = k.alg.dim, nh = k.hopf.dim();
    ModAlg out{dual_hopf(k.hopf), k.alg.opposite(), ModuleRep{n, Side::Left, {}}};
    // e^t . x = <e^t, Sinv(x_{-1})> x_0
    for (std::size_t t = 0; t < nh; ++t) {
        Matrix a(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t s = 0; s < n; ++s) {
                Scalar v = Scalar::zero(f);
                for (std::size_t r = 0; r < nh; ++r)
                    v += k.hopf.antipode_inv.at(t, r) * k.coact.coact.at(i, r, s);
                a.at(s, i) = v;
            }
        out.act.action.push_back(a);
    }
    return out;
}

ComodAlg regular_comodule_algebra(const HopfData& h) {
    std::size_t n = h.dim();
    ComoduleStr c{n, n, Side::Left, h.coalg.comult};
    return {h, h.alg, std::move(c)};
}

}  // namespace hopfstab
