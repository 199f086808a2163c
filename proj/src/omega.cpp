#include "covops/omega.hpp"

namespace covops::omega {

DiffOperator cayley_omega(int m) {
    VarUniverse u = VarUniverse::homogeneous(m);
    MinorTable grid(sym_hom_grid(u));
    return operator_from_symbol(u, grid.det());
}

namespace {

Rational eval_f(const Polynomial& f, const VarUniverse& u, const RatMatrix& x, const RatMatrix& y) {
    std::map<int, Rational> pt;
    for (int i = 1; i <= u.m; ++i)
        for (int j = 1; j <= u.m; ++j) {
            pt[u.x(i, j)] = x.at(i, j);
            pt[u.y(i, j)] = y.at(i, j);
        }
    return f.eval_partial(pt);
}

} // namespace

Rational lift_value(int m, long lam, Parity eps, long mu, Parity eta, const Polynomial& f, const RatMatrix& x1,
                    const RatMatrix& x2, const RatMatrix& y1, const RatMatrix& y2) {
    VarUniverse u = VarUniverse::standard(m);
    if (x2.det() == 0 || y2.det() == 0) throw not_defined_error("lift needs invertible second blocks");
    Rational w = character_value(x2.det(), -lam, eps) * character_value(y2.det(), -mu, eta);
    return w * eval_f(f, u, x1 * x2.inverse(), y1 * y2.inverse());
}

bool check_lift_homogeneity(int m, long lam, Parity eps, long mu, Parity eta, const Polynomial& f,
                            const RatMatrix& x1, const RatMatrix& x2, const RatMatrix& y1, const RatMatrix& y2,
                            const RatMatrix& gamma_x, const RatMatrix& gamma_y) {
    if (gamma_x.det() == 0 || gamma_y.det() == 0) throw not_defined_error("homogeneity scaling must be invertible");
    Rational lhs = lift_value(m, lam, eps, mu, eta, f, x1 * gamma_x, x2 * gamma_x, y1 * gamma_y, y2 * gamma_y);
    Rational rhs = character_value(gamma_x.det(), -lam, eps) * character_value(gamma_y.det(), -mu, eta) *
                   lift_value(m, lam, eps, mu, eta, f, x1, x2, y1, y2);
    return lhs == rhs;
}

Rational lift_and_apply(int m, long lam, long mu, const Polynomial& f, const RatMatrix& x0, const RatMatrix& y0,
                        int k) {
    if (k < 0) throw range_error("process depth must be >= 0");
    VarUniverse uh = VarUniverse::homogeneous(m);
    VarUniverse us = VarUniverse::standard(m);
    if (f.nvars() != us.count()) throw dimension_error("function over wrong variable set");
    if (f.depends_on(us.s()) || f.depends_on(us.t()))
        throw range_error("lift needs a function of the matrix variables only");

    std::vector<int> active(uh.count());
    for (int v = 0; v < uh.count(); ++v) active[v] = v;
    auto sp = JetSpace::make(active, 2 * m * k);
    // base point: x-block = [x0; 1], y-block = [y0; 1]
    std::vector<Rational> base(uh.count(), Rational(0));
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= m; ++c) {
            base[uh.hx(r, c)] = x0.at(r, c);
            base[uh.hy(r, c)] = y0.at(r, c);
            base[uh.hx(m + r, c)] = r == c ? 1 : 0;
            base[uh.hy(m + r, c)] = r == c ? 1 : 0;
        }

    // jets of x1 x2^{-1} and y1 y2^{-1} via polynomial adjugates
    auto block_jets = [&](bool yside) {
        int nv = uh.count();
        auto top = [&](int i, int j) { return Polynomial::variable(nv, yside ? uh.hy(i, j) : uh.hx(i, j)); };
        auto bot = [&](int i, int j) {
            return Polynomial::variable(nv, yside ? uh.hy(m + i, j) : uh.hx(m + i, j));
        };
        MatrixSym B2(m, nv);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) B2.at(i, j) = bot(i, j);
        MinorTable T2(B2);
        Jet det_jet = jet_of_polynomial(T2.det(), sp, base);
        Jet det_inv = det_jet.reciprocal();
        IndexSubset full = principal_set(m, m);
        auto drop = [&](int v) {
            IndexSubset r;
            for (int q = 1; q <= m; ++q)
                if (q != v) r.push_back(q);
            return r;
        };
        std::vector<Jet> entries;
        entries.reserve(m * m);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                Polynomial acc(nv);
                for (int kk = 1; kk <= m; ++kk) {
                    Polynomial adj = T2.minor(drop(j), drop(kk));
                    if ((kk + j) % 2) adj = -adj;
                    acc += top(i, kk) * adj;
                }
                entries.push_back(jet_of_polynomial(acc, sp, base) * det_inv);
            }
        return std::make_pair(entries, det_jet);
    };
    auto [xe, dx2] = block_jets(false);
    auto [ye, dy2] = block_jets(true);

    std::vector<const Jet*> images(us.count(), nullptr);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            images[us.x(i, j)] = &xe[(i - 1) * m + (j - 1)];
            images[us.y(i, j)] = &ye[(i - 1) * m + (j - 1)];
        }
    Jet F = eval_at_jets(f, images, sp, base);
    // second-block determinants are 1 > 0 at the base, so integer-weight
    // characters reduce to plain jet powers here
    F = dx2.pow(-lam) * dy2.pow(-mu) * F;

    DiffOperator Om = cayley_omega(m);
    DiffOperator Omk = DiffOperator::identity(uh);
    for (int i = 0; i < k; ++i) Omk = compose(Om, Omk);
    return Omk.apply_at_jet(F);
}

OmegaComparison compare_omega_vs_D(int m, long lam, long mu, int nsamples, std::uint64_t seed) {
    if (nsamples < 1) throw range_error("need at least one sample");
    VarUniverse u = VarUniverse::standard(m);
    Sampler rng(seed);
    DiffOperator D = build_D_at(m, Rational(lam), Rational(mu));
    std::vector<int> xyvars(u.nderiv());
    for (int v = 0; v < u.nderiv(); ++v) xyvars[v] = v;

    OmegaComparison out;
    for (int i = 0; i < nsamples; ++i) {
        for (int attempt = 0;; ++attempt) {
            Polynomial f = rng.poly(u.count(), xyvars, 2, 5);
            RatMatrix x0(m, m), y0(m, m);
            for (auto& v : x0.a) v = rng.small_rational();
            for (auto& v : y0.a) v = rng.small_rational();
            Rational ov = lift_and_apply(m, lam, mu, f, x0, y0, 1);
            Rational dv = eval_f(D.apply(f), u, x0, y0);
            if (ov == 0 && dv == 0 && attempt < 20) {
                ++out.resampled;
                continue;
            }
            out.samples.push_back({std::move(f), std::move(x0), std::move(y0), std::move(ov), std::move(dv)});
            break;
        }
    }

    bool have_ratio = false, mismatch = false;
    Rational ratio;
    for (const auto& s : out.samples) {
        if (s.omega_value == 0 && s.d_value == 0) continue;
        if (s.d_value == 0 || s.omega_value == 0) {
            mismatch = true;
            break;
        }
        Rational r = s.omega_value / s.d_value;
        if (!have_ratio) {
            ratio = r;
            have_ratio = true;
        } else if (r != ratio) {
            mismatch = true;
            break;
        }
    }
    if (mismatch) out.verdict = OmegaComparison::Verdict::not_proportional;
    else if (have_ratio) {
        out.verdict = OmegaComparison::Verdict::proportional;
        out.ratio = ratio;
    } // else: all pairs vanished -> inconclusive
    return out;
}

} // namespace covops::omega
