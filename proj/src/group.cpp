#include "covops/group.hpp"

namespace covops {

RatMatrix operator*(const RatMatrix& A, const RatMatrix& B) {
    if (A.cols != B.rows) throw dimension_error("matrix product shape mismatch");
    RatMatrix C(A.rows, B.cols);
    for (int i = 1; i <= A.rows; ++i)
        for (int k = 1; k <= A.cols; ++k) {
            const Rational& aik = A.at(i, k);
            if (aik == 0) continue;
            for (int j = 1; j <= B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

RatMatrix operator+(const RatMatrix& A, const RatMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw dimension_error("matrix sum shape mismatch");
    RatMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] += B.a[i];
    return C;
}

RatMatrix operator-(const RatMatrix& A, const RatMatrix& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw dimension_error("matrix difference shape mismatch");
    RatMatrix C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] -= B.a[i];
    return C;
}

Rational RatMatrix::det() const {
    if (rows != cols) throw dimension_error("determinant of a non-square matrix");
    RatMatrix M = *this;
    Rational d(1);
    for (int col = 1; col <= cols; ++col) {
        int piv = 0;
        for (int r = col; r <= rows; ++r)
            if (M.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (!piv) return Rational(0);
        if (piv != col) {
            for (int j = 1; j <= cols; ++j) std::swap(M.at(piv, j), M.at(col, j));
            d = -d;
        }
        d *= M.at(col, col);
        Rational inv = Rational(1) / M.at(col, col);
        for (int r = col + 1; r <= rows; ++r) {
            if (M.at(r, col) == 0) continue;
            Rational f = M.at(r, col) * inv;
            for (int j = col; j <= cols; ++j) M.at(r, j) -= f * M.at(col, j);
        }
    }
    return d;
}

RatMatrix RatMatrix::inverse() const {
    if (rows != cols) throw dimension_error("inverse of a non-square matrix");
    RatMatrix M = *this, I = identity(rows);
    for (int col = 1; col <= cols; ++col) {
        int piv = 0;
        for (int r = col; r <= rows; ++r)
            if (M.at(r, col) != 0) {
                piv = r;
                break;
            }
        if (!piv) throw not_defined_error("matrix is singular");
        if (piv != col)
            for (int j = 1; j <= cols; ++j) {
                std::swap(M.at(piv, j), M.at(col, j));
                std::swap(I.at(piv, j), I.at(col, j));
            }
        Rational inv = Rational(1) / M.at(col, col);
        for (int j = 1; j <= cols; ++j) {
            M.at(col, j) *= inv;
            I.at(col, j) *= inv;
        }
        for (int r = 1; r <= rows; ++r) {
            if (r == col || M.at(r, col) == 0) continue;
            Rational f = M.at(r, col);
            for (int j = 1; j <= cols; ++j) {
                M.at(r, j) -= f * M.at(col, j);
                I.at(r, j) -= f * I.at(col, j);
            }
        }
    }
    return I;
}

GroupElement GroupElement::from_blocks(RatMatrix a, RatMatrix b, RatMatrix c, RatMatrix d) {
    int m = a.rows;
    for (const RatMatrix* blk : {&a, &b, &c, &d})
        if (blk->rows != m || blk->cols != m) throw dimension_error("group element blocks must all be m x m");
    GroupElement g{m, std::move(a), std::move(b), std::move(c), std::move(d)};
    if (g.assembled().det() != 1) throw range_error("group element must have determinant 1");
    return g;
}

RatMatrix GroupElement::assembled() const {
    RatMatrix M(2 * m, 2 * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            M.at(i, j) = a.at(i, j);
            M.at(i, m + j) = b.at(i, j);
            M.at(m + i, j) = c.at(i, j);
            M.at(m + i, m + j) = d.at(i, j);
        }
    return M;
}

namespace {
GroupElement split_blocks(int m, const RatMatrix& M) {
    GroupElement g;
    g.m = m;
    g.a = g.b = g.c = g.d = RatMatrix(m, m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            g.a.at(i, j) = M.at(i, j);
            g.b.at(i, j) = M.at(i, m + j);
            g.c.at(i, j) = M.at(m + i, j);
            g.d.at(i, j) = M.at(m + i, m + j);
        }
    return g;
}
} // namespace

GroupElement GroupElement::inverse() const { return split_blocks(m, assembled().inverse()); }

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    if (g.m != h.m) throw dimension_error("group elements of different sizes");
    return split_blocks(g.m, g.assembled() * h.assembled());
}

GroupElement identity_element(int m) {
    return GroupElement{m, RatMatrix::identity(m), RatMatrix(m, m), RatMatrix(m, m), RatMatrix::identity(m)};
}

GroupElement inversion(int m) {
    GroupElement g = identity_element(m);
    std::swap(g.a, g.b);
    std::swap(g.c, g.d);
    for (auto& v : g.b.a) v = -v; // (0, -1; 1, 0)
    return g;
}

GroupElement translation(const RatMatrix& v) {
    if (v.rows != v.cols) throw dimension_error("translation by a non-square matrix");
    GroupElement g = identity_element(v.rows);
    g.b = v;
    return g;
}

GroupElement block_diagonal(const RatMatrix& a, const RatMatrix& d) {
    if (a.rows != a.cols || d.rows != d.cols || a.rows != d.rows)
        throw dimension_error("block diagonal needs two square blocks of equal size");
    if (a.det() * d.det() != 1) throw range_error("block diagonal element must have det(a)det(d) = 1");
    return GroupElement{a.rows, a, RatMatrix(a.rows, a.rows), RatMatrix(a.rows, a.rows), d};
}

GroupElement random_translation(int m, Sampler& rng) {
    RatMatrix v(m, m);
    for (auto& x : v.a) x = rng.small_rational();
    return translation(v);
}

GroupElement random_block_diagonal(int m, Sampler& rng) {
    auto random_invertible = [&]() {
        while (true) {
            RatMatrix A(m, m);
            for (auto& x : A.a) x = Rational(rng.int_in(-2, 2));
            if (A.det() != 0) return A;
        }
    };
    RatMatrix a = random_invertible(), d = random_invertible();
    Rational scale = Rational(1) / (a.det() * d.det());
    for (int j = 1; j <= m; ++j) d.at(1, j) *= scale; // rescale one row to land on det = 1
    return block_diagonal(a, d);
}

GroupElement random_element(int m, Sampler& rng) {
    GroupElement g = identity_element(m);
    int len = rng.int_in(2, 4);
    for (int i = 0; i < len; ++i) {
        switch (rng.int_in(0, 2)) {
            case 0: g = g * random_translation(m, rng); break;
            case 1: g = g * random_block_diagonal(m, rng); break;
            default: g = g * inversion(m); break;
        }
    }
    return g;
}

RatMatrix act(const GroupElement& g, const RatMatrix& x) {
    if (x.rows != g.m || x.cols != g.m) throw dimension_error("action point has wrong size");
    RatMatrix den = g.c * x + g.d;
    if (den.det() == 0) throw not_defined_error("group element not defined at this point");
    return (g.a * x + g.b) * den.inverse();
}

Rational alpha(const GroupElement& g, const RatMatrix& x) {
    if (x.rows != g.m || x.cols != g.m) throw dimension_error("action point has wrong size");
    return (g.c * x + g.d).det();
}

bool check_cocycle(const GroupElement& g, const GroupElement& gp, const RatMatrix& x) {
    return alpha(g * gp, x) == alpha(g, act(gp, x)) * alpha(gp, x);
}

bool check_kernel_covariance(const GroupElement& g, const RatMatrix& x, const RatMatrix& y) {
    Rational ax = alpha(g, x), ay = alpha(g, y);
    if (ax == 0 || ay == 0) throw not_defined_error("group element not defined at the sample points");
    return (act(g, x) - act(g, y)).det() == (x - y).det() / (ax * ay);
}

// ---- Moebius maps as jets ---------------------------------------------------

namespace {

struct MobiusJets {
    std::vector<Jet> entries; // m*m row-major jets of (a x + b)(c x + d)^{-1}
    Jet alpha;                // jet of det(c x + d)
};

// jets at the space's base of the Moebius image of the x- or y-block under h
MobiusJets mobius_jets(const VarUniverse& u, const GroupElement& h, bool y_block, const JetSpacePtr& sp,
                       const std::vector<Rational>& base) {
    int m = u.m, nv = u.count();
    auto blockvar = [&](int i, int j) { return Polynomial::variable(nv, y_block ? u.y(i, j) : u.x(i, j)); };
    MatrixSym L(m, nv), N(m, nv);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            Polynomial lin(nv), num(nv);
            for (int k = 1; k <= m; ++k) {
                if (h.c.at(i, k) != 0) lin += h.c.at(i, k) * blockvar(k, j);
                if (h.a.at(i, k) != 0) num += h.a.at(i, k) * blockvar(k, j);
            }
            L.at(i, j) = lin + Polynomial::constant(nv, h.d.at(i, j));
            N.at(i, j) = num + Polynomial::constant(nv, h.b.at(i, j));
        }
    MinorTable LT(L);
    Jet det_jet = jet_of_polynomial(LT.det(), sp, base);
    if (det_jet.value() == 0) throw not_defined_error("group element not defined at the base point");
    Jet det_inv = det_jet.reciprocal();

    // adjugate at the polynomial level: adj(L)_{ij} = (-1)^{i+j} minor(L; j^, i^)
    IndexSubset full = principal_set(m, m);
    auto drop = [&](int v) {
        IndexSubset r;
        for (int q = 1; q <= m; ++q)
            if (q != v) r.push_back(q);
        return r;
    };
    MobiusJets out{{}, det_jet};
    out.entries.reserve(m * m);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
            // (N * adj(L))_{ij} = sum_k N_{ik} adj_{kj}
            Polynomial acc(nv);
            for (int k = 1; k <= m; ++k) {
                Polynomial adj_kj = LT.minor(drop(j), drop(k));
                if ((k + j) % 2) adj_kj = -adj_kj;
                acc += N.at(i, k) * adj_kj;
            }
            out.entries.push_back(jet_of_polynomial(acc, sp, base) * det_inv);
        }
    return out;
}

int character_sign(int sigma, long lam, Parity eps) {
    long e = eps == Parity::plus ? lam : lam + 1;
    return (sigma < 0 && (e % 2 != 0)) ? -1 : 1;
}

std::vector<Rational> matrix_entries_row_major(const RatMatrix& x) {
    return x.a;
}

} // namespace

Rational character_value(const Rational& t, long lam, Parity eps) {
    if (t == 0) throw not_defined_error("character at t = 0");
    Rational a = rat_pow(abs(t), lam);
    if (eps == Parity::minus && rat_sign(t) < 0) a = -a;
    return a;
}

Jet character_power_jet(const Jet& t, long lam, Parity eps) {
    if (t.value() == 0) throw not_defined_error("character of a jet with zero constant term");
    Jet r = t.pow(lam);
    if (character_sign(rat_sign(t.value()), lam, eps) < 0) r = -r;
    return r;
}

bool check_jacobian(const GroupElement& g, const RatMatrix& x) {
    int m = g.m;
    VarUniverse u = VarUniverse::standard(m);
    std::vector<int> active(m * m);
    for (int v = 0; v < m * m; ++v) active[v] = v;
    auto sp = JetSpace::make(active, 1);
    std::vector<Rational> base = matrix_entries_row_major(x);
    MobiusJets mob = mobius_jets(u, g, false, sp, base);
    // rows: output entries (i,j) row-major; columns: input entries
    RatMatrix J(m * m, m * m);
    for (int row = 0; row < m * m; ++row)
        for (int col = 0; col < m * m; ++col) {
            Exponents e(m * m, 0);
            e[col] = 1;
            J.at(row + 1, col + 1) = mob.entries[row].coefficient(sp->rank_of(e));
        }
    return J.det() == rat_pow(alpha(g, x), -2L * m);
}

// ---- principal series action on jets ---------------------------------------

Jet pi_action_jet(int m, const Weight& w, const GroupElement& g, const Polynomial& f, const RatMatrix& x0,
                  int order) {
    VarUniverse u = VarUniverse::standard(m);
    if (f.nvars() != u.count()) throw dimension_error("function over wrong variable set");
    for (int v = m * m; v < u.count(); ++v)
        if (f.depends_on(v)) throw range_error("single-slot action needs a function of the x-variables only");
    std::vector<int> active(m * m);
    for (int v = 0; v < m * m; ++v) active[v] = v;
    auto sp = JetSpace::make(active, order);
    std::vector<Rational> base = matrix_entries_row_major(x0);
    MobiusJets mob = mobius_jets(u, g.inverse(), false, sp, base);
    std::vector<const Jet*> images(u.count(), nullptr);
    for (int v = 0; v < m * m; ++v) images[v] = &mob.entries[v];
    Jet fj = eval_at_jets(f, images, sp, base);
    return character_power_jet(mob.alpha, -w.lam, w.eps) * fj;
}

Jet pi_pair_action_jet(int m, const Weight& wx, const Weight& wy, const GroupElement& g, const Polynomial& f,
                       const RatMatrix& x0, const RatMatrix& y0, int order) {
    CovarianceSession s(m, g, f, x0, y0, order);
    return s.transformed_jet(wx, wy);
}

CovarianceSession::CovarianceSession(int m, const GroupElement& g, const Polynomial& f, const RatMatrix& x0,
                                     const RatMatrix& y0, int order)
    : m_(m), h_(g.inverse()) {
    VarUniverse u = VarUniverse::standard(m);
    if (f.nvars() != u.count()) throw dimension_error("function over wrong variable set");
    if (f.depends_on(u.s()) || f.depends_on(u.t()))
        throw range_error("action needs a function of the matrix variables only");
    std::vector<int> active(2 * m * m);
    for (int v = 0; v < 2 * m * m; ++v) active[v] = v;
    auto sp = JetSpace::make(active, order);
    std::vector<Rational> base = matrix_entries_row_major(x0);
    auto yb = matrix_entries_row_major(y0);
    base.insert(base.end(), yb.begin(), yb.end());

    MobiusJets mx = mobius_jets(u, h_, false, sp, base);
    MobiusJets my = mobius_jets(u, h_, true, sp, base);
    ax_ = mx.alpha.value();
    ay_ = my.alpha.value();
    gx_ = act(h_, x0);
    gy_ = act(h_, y0);
    std::vector<const Jet*> images(u.count(), nullptr);
    for (int v = 0; v < m * m; ++v) {
        images[v] = &mx.entries[v];
        images[m * m + v] = &my.entries[v];
    }
    fj_ = eval_at_jets(f, images, sp, base);
    axj_ = mx.alpha;
    ayj_ = my.alpha;
}

const Jet& CovarianceSession::xpow(long e) const {
    auto it = xpow_.find(e);
    if (it == xpow_.end()) it = xpow_.emplace(e, axj_->pow(e)).first;
    return it->second;
}
const Jet& CovarianceSession::ypow(long e) const {
    auto it = ypow_.find(e);
    if (it == ypow_.end()) it = ypow_.emplace(e, ayj_->pow(e)).first;
    return it->second;
}

const Jet& CovarianceSession::raw_jet(long lx, long ly) const {
    auto it = raw_.find({lx, ly});
    if (it == raw_.end()) it = raw_.emplace(std::make_pair(lx, ly), xpow(-lx) * ypow(-ly) * *fj_).first;
    return it->second;
}

int CovarianceSession::character_signs(const Weight& wx, const Weight& wy) const {
    return character_sign(rat_sign(ax_), -wx.lam, wx.eps) * character_sign(rat_sign(ay_), -wy.lam, wy.eps);
}

Jet CovarianceSession::transformed_jet(const Weight& wx, const Weight& wy) const {
    Jet r = raw_jet(wx.lam, wy.lam);
    if (character_signs(wx, wy) < 0) r = -r;
    return r;
}

// ---- covariance checks ------------------------------------------------------

namespace {

Rational eval_xy(const Polynomial& p, const VarUniverse& u, const RatMatrix& x, const RatMatrix& y) {
    std::map<int, Rational> pt;
    for (int i = 1; i <= u.m; ++i)
        for (int j = 1; j <= u.m; ++j) {
            pt[u.x(i, j)] = x.at(i, j);
            pt[u.y(i, j)] = y.at(i, j);
        }
    return p.eval_partial(pt);
}

} // namespace

bool check_D_covariance(int m, long lam, Parity eps, long mu, Parity eta, const GroupElement& g,
                        const Polynomial& f, const RatMatrix& x0, const RatMatrix& y0) {
    VarUniverse u = VarUniverse::standard(m);
    DiffOperator D = build_D_at(m, Rational(lam), Rational(mu));
    CovarianceSession s(m, g, f, x0, y0, D.order());
    Rational lhs = D.apply_at_jet(s.transformed_jet({lam, eps}, {mu, eta}));
    Rational rhs = character_value(s.alpha_x(), -(lam + 1), flip(eps)) *
                   character_value(s.alpha_y(), -(mu + 1), flip(eta)) *
                   eval_xy(D.apply(f), u, s.gx(), s.gy());
    return lhs == rhs;
}

bool check_B_covariance(int m, int k, long lam, Parity eps, long mu, Parity eta, const GroupElement& g,
                        const Polynomial& f, const RatMatrix& x0) {
    VarUniverse u = VarUniverse::standard(m);
    BiDiffOperator B = build_B_at(m, k, Rational(lam), Rational(mu));
    CovarianceSession s(m, g, f, x0, x0, std::max(B.order(), 0));
    Rational lhs = B.apply_at_jet(s.transformed_jet({lam, eps}, {mu, eta}));
    Rational rhs = character_value(s.alpha_x(), -(lam + mu + 2 * k), parity_product(eps, eta)) *
                   eval_xy(B.apply(f), u, s.gx(), s.gx());
    return lhs == rhs;
}

bool check_M_intertwine(int m, long lam, Parity eps, long mu, Parity eta, const GroupElement& g,
                        const Polynomial& f, const RatMatrix& x0, const RatMatrix& y0) {
    VarUniverse u = VarUniverse::standard(m);
    GroupElement h = g.inverse();
    Rational ax = alpha(h, x0), ay = alpha(h, y0);
    if (ax == 0 || ay == 0) throw not_defined_error("group element not defined at the sample points");
    RatMatrix gx = act(h, x0), gy = act(h, y0);
    Rational fv = eval_xy(f, u, gx, gy);
    Rational lhs = (x0 - y0).det() * character_value(ax, -lam, eps) * character_value(ay, -mu, eta) * fv;
    Rational rhs = character_value(ax, -(lam - 1), flip(eps)) * character_value(ay, -(mu - 1), flip(eta)) *
                   (gx - gy).det() * fv;
    return lhs == rhs;
}

} // namespace covops
