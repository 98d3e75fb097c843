#include "planemf/lp.hpp"

#include <string>

#include "planemf/errors.hpp"

namespace planemf {

namespace {

void certify(const LinearProgram& lp, const LpSolution& s) {
    int m = lp.num_rows(), n = lp.num_cols();
    Rational primal;
    for (int j = 0; j < n; ++j) {
        if (s.x[j].sign() < 0) throw internal_error("lp: negative primal variable");
        primal += s.x[j];
    }
    for (int i = 0; i < m; ++i) {
        Rational lhs;
        for (int j = 0; j < n; ++j) lhs += lp.rows[i][j] * s.x[j];
        if (lhs > lp.rhs[i]) throw internal_error("lp: primal constraint violated");
    }
    Rational dual_value;
    for (int i = 0; i < m; ++i) {
        if (s.dual[i].sign() < 0) throw internal_error("lp: negative dual variable");
        dual_value += s.dual[i] * lp.rhs[i];
    }
    for (int j = 0; j < n; ++j) {
        Rational col;
        for (int i = 0; i < m; ++i) col += s.dual[i] * lp.rows[i][j];
        if (col < Rational(1)) throw internal_error("lp: dual constraint violated");
    }
    if (primal != s.value || dual_value != s.value)
        throw internal_error("lp: duality gap (primal " + primal.str() + ", dual " +
                             dual_value.str() + ")");
}

}  // namespace

LpSolution solve_max(const LinearProgram& lp) {
    int m = lp.num_rows(), n = lp.num_cols();
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(lp.rows[i].size()) != n)
            throw bad_parameter("lp: ragged constraint matrix");
        if (lp.rhs[i].sign() < 0) throw bad_parameter("lp: negative right-hand side");
    }
    if (static_cast<int>(lp.rhs.size()) != m) throw bad_parameter("lp: rhs size mismatch");
    if (n == 0) return {{}, Rational(0), std::vector<Rational>(m, Rational(0))};
    if (m == 0) throw lp_unbounded("lp: no constraints bound the all-ones objective");

    // tableau: m rows of [A | I | b], objective row reduced costs of
    // structural and slack columns plus current value
    int cols = n + m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(cols + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = lp.rows[i][j];
        t[i][n + i] = Rational(1);
        t[i][cols] = lp.rhs[i];
    }
    // z-row holds c_B B^-1 A - c (nonnegative at optimality); starts at -c
    std::vector<Rational> z(cols + 1);
    for (int j = 0; j < n; ++j) z[j] = Rational(-1);
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) basis[i] = n + i;

    for (;;) {
        // Bland: entering variable = lowest index with negative reduced cost
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (z[j].sign() < 0) { enter = j; break; }
        if (enter == -1) break;
        // ratio test, ties broken by lowest basis variable index (Bland)
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rational ratio = t[i][cols] / t[i][enter];
            if (leave == -1 || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == -1) throw lp_unbounded("lp: unbounded in column " + std::to_string(enter));
        // pivot on (leave, enter)
        Rational piv = t[leave][enter];
        for (int j = 0; j <= cols; ++j) t[leave][j] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rational f = t[i][enter];
            for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        if (!z[enter].is_zero()) {
            Rational f = z[enter];
            for (int j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }

    LpSolution s;
    s.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < n) s.x[basis[i]] = t[i][cols];
    s.dual.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) s.dual[i] = z[n + i];
    s.value = z[cols];
    certify(lp, s);
    return s;
}

}  // namespace planemf
