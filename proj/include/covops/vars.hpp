#pragma once
#include <optional>
#include <string>
#include <string_view>

#include "covops/error.hpp"

// Variable universes fix the canonical variable order for a given matrix size m.
//
// standard(m):    x[1][1] .. x[m][m] row-major, then y[1][1] .. y[m][m]
//                 row-major, then the two scalar parameters s, t.
//                 Differential operators may differentiate the 2m^2 matrix
//                 entries only; s and t are coefficient parameters.
// homogeneous(m): the 2m x 2m grid [X | Y] of the determinant process, stored
//                 as two 2m x m blocks, each column-major: hx[r][c] (r=1..2m,
//                 c=1..m) then hy[r][c]. All 4m^2 entries are differentiable.

namespace covops {

struct VarUniverse {
    enum class Kind { standard_m, homogeneous_m };
    Kind kind;
    int m;

    static VarUniverse standard(int m) {
        if (m < 1) throw range_error("matrix size must be >= 1");
        return {Kind::standard_m, m};
    }
    static VarUniverse homogeneous(int m) {
        if (m < 1) throw range_error("matrix size must be >= 1");
        return {Kind::homogeneous_m, m};
    }

    bool operator==(const VarUniverse&) const = default;

    int count() const { return kind == Kind::standard_m ? 2 * m * m + 2 : 4 * m * m; }
    // number of differentiable variables (a prefix of the order)
    int nderiv() const { return kind == Kind::standard_m ? 2 * m * m : 4 * m * m; }
    // the first deriv index of the "y side" (second block)
    int nderiv_x() const { return kind == Kind::standard_m ? m * m : 2 * m * m; }

    int x(int i, int j) const {
        need(kind == Kind::standard_m, "x[][] only in the standard universe");
        check(i, m), check(j, m);
        return (i - 1) * m + (j - 1);
    }
    int y(int i, int j) const {
        need(kind == Kind::standard_m, "y[][] only in the standard universe");
        check(i, m), check(j, m);
        return m * m + (i - 1) * m + (j - 1);
    }
    int s() const {
        need(kind == Kind::standard_m, "s only in the standard universe");
        return 2 * m * m;
    }
    int t() const {
        need(kind == Kind::standard_m, "t only in the standard universe");
        return 2 * m * m + 1;
    }

    int hx(int r, int c) const {
        need(kind == Kind::homogeneous_m, "hx[][] only in the homogeneous universe");
        check(r, 2 * m), check(c, m);
        return (c - 1) * 2 * m + (r - 1);
    }
    int hy(int r, int c) const {
        need(kind == Kind::homogeneous_m, "hy[][] only in the homogeneous universe");
        check(r, 2 * m), check(c, m);
        return 2 * m * m + (c - 1) * 2 * m + (r - 1);
    }

    std::string name(int v) const {
        if (v < 0 || v >= count()) throw range_error("variable index out of range");
        if (kind == Kind::standard_m) {
            if (v == s()) return "s";
            if (v == t()) return "t";
            bool is_y = v >= m * m;
            int off = is_y ? v - m * m : v;
            return std::string(is_y ? "y" : "x") + "[" + std::to_string(off / m + 1) + "][" +
                   std::to_string(off % m + 1) + "]";
        }
        bool is_y = v >= 2 * m * m;
        int off = is_y ? v - 2 * m * m : v;
        return std::string(is_y ? "hy" : "hx") + "[" + std::to_string(off % (2 * m) + 1) + "][" +
               std::to_string(off / (2 * m) + 1) + "]";
    }

    std::optional<int> var_by_name(std::string_view nm) const {
        if (kind == Kind::standard_m) {
            if (nm == "s") return s();
            if (nm == "t") return t();
        }
        size_t b1 = nm.find('[');
        if (b1 == std::string_view::npos) return std::nullopt;
        std::string_view base = nm.substr(0, b1);
        size_t e1 = nm.find(']', b1);
        if (e1 == std::string_view::npos) return std::nullopt;
        size_t b2 = nm.find('[', e1);
        size_t e2 = nm.find(']', b2 == std::string_view::npos ? b2 : b2 + 1);
        if (b2 == std::string_view::npos || e2 == std::string_view::npos || e2 + 1 != nm.size()) return std::nullopt;
        int i = 0, j = 0;
        try {
            i = std::stoi(std::string(nm.substr(b1 + 1, e1 - b1 - 1)));
            j = std::stoi(std::string(nm.substr(b2 + 1, e2 - b2 - 1)));
        } catch (...) { return std::nullopt; }
        try {
            if (kind == Kind::standard_m) {
                if (base == "x") return x(i, j);
                if (base == "y") return y(i, j);
            } else {
                if (base == "hx") return hx(i, j);
                if (base == "hy") return hy(i, j);
            }
        } catch (const error&) { return std::nullopt; }
        return std::nullopt;
    }

  private:
    static void need(bool ok, const char* msg) {
        if (!ok) throw range_error(msg);
    }
    static void check(int i, int n) {
        if (i < 1 || i > n) throw range_error("matrix index out of range");
    }
};

} // namespace covops
