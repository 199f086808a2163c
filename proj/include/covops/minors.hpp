#pragma once
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "covops/subsets.hpp"
#include "covops/vars.hpp"

// Symbolic matrices (entries are polynomials) and their minors. A minor is
// indexed by a pair of equal-cardinality index subsets (rows I, columns J) and
// Delta_{{},{}} = 1 by convention. MinorTable memoizes the recursive Laplace
// expansion so families of minors over a common matrix share subminors.

namespace covops {

struct MatrixSym {
    int n = 0;        // square size (not necessarily the universe's m)
    int nvars = 0;    // variable count of the entry polynomials
    std::vector<Polynomial> a; // row-major, n*n entries

    MatrixSym() = default;
    MatrixSym(int n_, int nvars_) : n(n_), nvars(nvars_), a(n_ * n_, Polynomial(nvars_)) {}

    Polynomial& at(int i, int j) { return a[(i - 1) * n + (j - 1)]; } // 1-based
    const Polynomial& at(int i, int j) const { return a[(i - 1) * n + (j - 1)]; }
};

// x, y, x-y, y-x as m x m symbol matrices over the standard universe
inline MatrixSym sym_x(const VarUniverse& u) {
    MatrixSym M(u.m, u.count());
    for (int i = 1; i <= u.m; ++i)
        for (int j = 1; j <= u.m; ++j) M.at(i, j) = Polynomial::variable(u.count(), u.x(i, j));
    return M;
}
inline MatrixSym sym_y(const VarUniverse& u) {
    MatrixSym M(u.m, u.count());
    for (int i = 1; i <= u.m; ++i)
        for (int j = 1; j <= u.m; ++j) M.at(i, j) = Polynomial::variable(u.count(), u.y(i, j));
    return M;
}
inline MatrixSym sym_diff(const MatrixSym& A, const MatrixSym& B) {
    if (A.n != B.n || A.nvars != B.nvars) throw dimension_error("matrix difference shape mismatch");
    MatrixSym M(A.n, A.nvars);
    for (int k = 0; k < A.n * A.n; ++k) M.a[k] = A.a[k] - B.a[k];
    return M;
}

// the 2m x 2m grid [X | Y] of the homogeneous universe
inline MatrixSym sym_hom_grid(const VarUniverse& u) {
    MatrixSym M(2 * u.m, u.count());
    for (int r = 1; r <= 2 * u.m; ++r)
        for (int c = 1; c <= u.m; ++c) {
            M.at(r, c) = Polynomial::variable(u.count(), u.hx(r, c));
            M.at(r, u.m + c) = Polynomial::variable(u.count(), u.hy(r, c));
        }
    return M;
}

class MinorTable {
  public:
    explicit MinorTable(MatrixSym mat) : mat_(std::move(mat)) {}

    const MatrixSym& matrix() const { return mat_; }

    // Delta_{I,J}: determinant of the submatrix with rows I, columns J
    const Polynomial& minor(const IndexSubset& I, const IndexSubset& J) {
        if (I.size() != J.size()) throw range_error("minor row/column cardinality mismatch");
        check_subset(I, mat_.n);
        check_subset(J, mat_.n);
        auto key = std::make_pair(I, J);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Polynomial d(mat_.nvars);
        if (I.empty()) {
            d = Polynomial::constant(mat_.nvars, 1);
        } else {
            // Laplace along the first row of the submatrix
            IndexSubset I1(I.begin() + 1, I.end());
            for (size_t q = 0; q < J.size(); ++q) {
                IndexSubset J1;
                J1.reserve(J.size() - 1);
                for (size_t r = 0; r < J.size(); ++r)
                    if (r != q) J1.push_back(J[r]);
                Polynomial term = mat_.at(I[0], J[q]) * minor(I1, J1);
                if (q % 2) d -= term;
                else d += term;
            }
        }
        return memo_.emplace(std::move(key), std::move(d)).first->second;
    }

    const Polynomial& det() {
        IndexSubset full(mat_.n);
        for (int i = 0; i < mat_.n; ++i) full[i] = i + 1;
        return minor(full, full);
    }

  private:
    MatrixSym mat_;
    std::map<std::pair<IndexSubset, IndexSubset>, Polynomial> memo_;
};

// principal {1..k} and anti-principal {m-k+1..m} index sets
inline IndexSubset principal_set(int m, int k) {
    if (k < 0 || k > m) throw range_error("principal minor size out of range");
    IndexSubset I(k);
    for (int i = 0; i < k; ++i) I[i] = i + 1;
    return I;
}
inline IndexSubset anti_principal_set(int m, int k) {
    if (k < 0 || k > m) throw range_error("anti-principal minor size out of range");
    IndexSubset I(k);
    for (int i = 0; i < k; ++i) I[i] = m - k + i + 1;
    return I;
}

// determinant over any commutative ring with +, *, unary -; entries via at(i,j) 1-based
template <class Ring, class At>
Ring det_generic(int n, At at, const Ring& one) {
    // recursive first-row Laplace over column subsets
    std::function<Ring(int, std::vector<int>&)> go = [&](int row, std::vector<int>& cols) -> Ring {
        if (cols.empty()) return one;
        Ring acc = one - one; // zero
        for (size_t q = 0; q < cols.size(); ++q) {
            int c = cols[q];
            std::vector<int> rest;
            rest.reserve(cols.size() - 1);
            for (size_t r = 0; r < cols.size(); ++r)
                if (r != q) rest.push_back(cols[r]);
            Ring term = at(row, c) * go(row + 1, rest);
            acc = (q % 2) ? acc - term : acc + term;
        }
        return acc;
    };
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i) cols[i] = i + 1;
    return go(1, cols);
}

} // namespace covops
