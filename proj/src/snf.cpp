#include "loc/snf.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace loc {

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; i++) m.at(i, i) = 1;
    return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    assert(x.cols == y.rows);
    Mat out(x.rows, y.cols);
    for (int r = 0; r < x.rows; r++)
        for (int k = 0; k < x.cols; k++) {
            long long xv = x.at(r, k);
            if (xv == 0) continue;
            for (int c = 0; c < y.cols; c++) out.at(r, c) += xv * y.at(k, c);
        }
    return out;
}

long long mat_det(const Mat& m0) {
    assert(m0.rows == m0.cols);
    int n = m0.rows;
    if (n == 0) return 1;
    // fraction-free Bareiss elimination; intermediates are minors of the input
    std::vector<__int128> m(m0.a.begin(), m0.a.end());
    auto at = [&](int r, int c) -> __int128& { return m[(size_t)r * n + c]; };
    const __int128 lim = (__int128)1 << 62;
    long long sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; k++) {
        if (at(k, k) == 0) {
            int r = k + 1;
            while (r < n && at(r, k) == 0) r++;
            if (r == n) return 0;
            for (int c = 0; c < n; c++) std::swap(at(k, c), at(r, c));
            sign = -sign;
        }
        for (int i = k; i < n; i++)
            for (int j = k; j < n; j++)
                if (at(i, j) > lim || at(i, j) < -lim)
                    throw InternalError("determinant intermediate exceeds the exact range");
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    __int128 d = at(n - 1, n - 1);
    if (d > (__int128)4e18 || d < -(__int128)4e18)
        throw InternalError("determinant exceeds the exact range");
    return sign * (long long)d;
}

SmithResult smith_normal_form(Mat a) {
    int rows = a.rows, cols = a.cols;
    Mat u = Mat::identity(rows), v = Mat::identity(cols);
    auto row_swap = [&](int r, int s) {
        if (r == s) return;
        for (int c = 0; c < cols; c++) std::swap(a.at(r, c), a.at(s, c));
        for (int c = 0; c < rows; c++) std::swap(u.at(r, c), u.at(s, c));
    };
    auto col_swap = [&](int c, int d) {
        if (c == d) return;
        for (int r = 0; r < rows; r++) std::swap(a.at(r, c), a.at(r, d));
        for (int r = 0; r < cols; r++) std::swap(v.at(r, c), v.at(r, d));
    };
    auto row_addmul = [&](int r, int s, long long q) { // row r += q * row s
        for (int c = 0; c < cols; c++) a.at(r, c) += q * a.at(s, c);
        for (int c = 0; c < rows; c++) u.at(r, c) += q * u.at(s, c);
    };
    auto col_addmul = [&](int c, int d, long long q) { // col c += q * col d
        for (int r = 0; r < rows; r++) a.at(r, c) += q * a.at(r, d);
        for (int r = 0; r < cols; r++) v.at(r, c) += q * v.at(r, d);
    };
    // quotient rounded to nearest keeps intermediate entries small
    auto nearest = [](long long x, long long d) {
        long long q = x / d, r = x - q * d;
        if (std::llabs(r) * 2 > std::llabs(d)) q += (x < 0) == (d < 0) ? 1 : -1;
        return q;
    };
    int nmin = std::min(rows, cols);
    for (int t = 0; t < nmin; t++) {
        for (;;) {
            int pr = -1, pc = -1;
            long long best = 0;
            for (int r = t; r < rows; r++)
                for (int c = t; c < cols; c++) {
                    long long e = std::llabs(a.at(r, c));
                    if (e != 0 && (pr < 0 || e < best)) { pr = r; pc = c; best = e; }
                }
            if (pr < 0) { t = nmin; break; } // rest is zero
            row_swap(t, pr);
            col_swap(t, pc);
            bool dirty = false;
            for (int r = t + 1; r < rows; r++) {
                if (a.at(r, t) == 0) continue;
                row_addmul(r, t, -nearest(a.at(r, t), a.at(t, t)));
                dirty |= a.at(r, t) != 0;
            }
            for (int c = t + 1; c < cols; c++) {
                if (a.at(t, c) == 0) continue;
                col_addmul(c, t, -nearest(a.at(t, c), a.at(t, t)));
                dirty |= a.at(t, c) != 0;
            }
            if (dirty) continue; // a strictly smaller entry appeared; re-pick the pivot
            // pivot must divide the whole remaining block (gives the chain)
            int br = -1;
            for (int r = t + 1; r < rows && br < 0; r++)
                for (int c = t + 1; c < cols; c++)
                    if (a.at(r, c) % a.at(t, t) != 0) { br = r; break; }
            if (br < 0) break;
            row_addmul(t, br, 1);
        }
    }
    for (int t = 0; t < nmin; t++)
        if (a.at(t, t) < 0) {
            for (int c = 0; c < cols; c++) a.at(t, c) = -a.at(t, c);
            for (int c = 0; c < rows; c++) u.at(t, c) = -u.at(t, c);
        }
    return SmithResult{u, a, v};
}

namespace {

long long normalize_mod(long long x, long long m) {
    x %= m;
    return x < 0 ? x + m : x;
}

int exponent_of(long long m, long long p) {
    int e = 0;
    long long x = m;
    while (x % p == 0) { x /= p; e++; }
    if (x != 1) throw InternalError("modulus is not a power of the working prime");
    return e;
}

long long pow_ll(long long p, int e) {
    long long r = 1;
    while (e-- > 0) r *= p;
    return r;
}

int val_of(long long x, long long p, int cap) {
    if (x == 0) return cap;
    int v = 0;
    while (x % p == 0 && v < cap) { x /= p; v++; }
    return v;
}

long long inv_mod(long long a, long long m) {
    a = normalize_mod(a, m);
    long long t = 0, nt = 1, r = m, nr = a;
    while (nr != 0) {
        long long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw InternalError("inverse of a non-unit modulo a prime power");
    return normalize_mod(t, m);
}

// Diagonalizes w modulo `pe` in place by valuation pivoting. Row operations
// are mirrored on *u / *uinv when given, column operations on *v when given.
// Returns the diagonal entries p^{v_t} (0 where the valuation reaches cap).
std::vector<long long> diagonalize_mod(Mat& w, long long pe, long long p, int cap, Mat* v,
                                       Mat* u, Mat* uinv) {
    int rows = w.rows, cols = w.cols;
    auto wrow_scale = [&](int r, long long s) {
        for (int c = 0; c < cols; c++) w.at(r, c) = normalize_mod(w.at(r, c) * s, pe);
        if (u)
            for (int c = 0; c < u->cols; c++) u->at(r, c) = normalize_mod(u->at(r, c) * s, pe);
        if (uinv) {
            long long si = inv_mod(s, pe);
            for (int r2 = 0; r2 < uinv->rows; r2++)
                uinv->at(r2, r) = normalize_mod(uinv->at(r2, r) * si, pe);
        }
    };
    auto wrow_addmul = [&](int r, int s, long long q) { // row r += q * row s
        q = normalize_mod(q, pe);
        for (int c = 0; c < cols; c++)
            w.at(r, c) = normalize_mod(w.at(r, c) + q * w.at(s, c), pe);
        if (u)
            for (int c = 0; c < u->cols; c++)
                u->at(r, c) = normalize_mod(u->at(r, c) + q * u->at(s, c), pe);
        if (uinv) // inverse op: col s -= q * col r
            for (int r2 = 0; r2 < uinv->rows; r2++)
                uinv->at(r2, s) = normalize_mod(uinv->at(r2, s) - q * uinv->at(r2, r), pe);
    };
    auto wrow_swap = [&](int r, int s) {
        if (r == s) return;
        for (int c = 0; c < cols; c++) std::swap(w.at(r, c), w.at(s, c));
        if (u)
            for (int c = 0; c < u->cols; c++) std::swap(u->at(r, c), u->at(s, c));
        if (uinv)
            for (int r2 = 0; r2 < uinv->rows; r2++)
                std::swap(uinv->at(r2, r), uinv->at(r2, s));
    };
    auto wcol_addmul = [&](int c, int d, long long q) { // col c += q * col d
        q = normalize_mod(q, pe);
        for (int r = 0; r < rows; r++)
            w.at(r, c) = normalize_mod(w.at(r, c) + q * w.at(r, d), pe);
        if (v)
            for (int r = 0; r < v->rows; r++)
                v->at(r, c) = normalize_mod(v->at(r, c) + q * v->at(r, d), pe);
    };
    auto wcol_swap = [&](int c, int d) {
        if (c == d) return;
        for (int r = 0; r < rows; r++) std::swap(w.at(r, c), w.at(r, d));
        if (v)
            for (int r = 0; r < v->rows; r++) std::swap(v->at(r, c), v->at(r, d));
    };
    int nmin = std::min(rows, cols);
    std::vector<long long> diag(nmin, 0);
    for (int t = 0; t < nmin; t++) {
        int pr = -1, pc = -1, bestv = cap;
        for (int r = t; r < rows; r++)
            for (int c = t; c < cols; c++) {
                int vv = val_of(w.at(r, c), p, cap);
                if (vv < bestv) { pr = r; pc = c; bestv = vv; }
            }
        if (pr < 0) break; // all remaining entries vanish mod pe
        wrow_swap(t, pr);
        wcol_swap(t, pc);
        long long pv = pow_ll(p, bestv);
        wrow_scale(t, inv_mod(w.at(t, t) / pv, pe));
        w.at(t, t) = pv; // normalized exactly
        for (int r = t + 1; r < rows; r++)
            if (w.at(r, t) != 0) wrow_addmul(r, t, -(w.at(r, t) / pv));
        for (int c = t + 1; c < cols; c++)
            if (w.at(t, c) != 0) wcol_addmul(c, t, -(w.at(t, c) / pv));
        diag[t] = pv;
    }
    return diag;
}

} // namespace

std::vector<std::vector<long long>> mod_kernel(const Mat& a,
                                               const std::vector<long long>& row_moduli,
                                               const std::vector<long long>& col_moduli,
                                               long long p) {
    int rows = a.rows, cols = a.cols;
    assert((int)row_moduli.size() == rows && (int)col_moduli.size() == cols);
    int emax = 0;
    for (long long m : row_moduli) emax = std::max(emax, exponent_of(m, p));
    for (long long m : col_moduli) emax = std::max(emax, exponent_of(m, p));
    if (cols == 0) return {};
    // the congruence system must be well defined on the column module
    for (int r = 0; r < rows; r++)
        for (int c = 0; c < cols; c++)
            if ((a.at(r, c) * col_moduli[c]) % row_moduli[r] != 0)
                throw InternalError("congruence system not defined on the column module");
    long long pe = pow_ll(p, emax);
    Mat w(rows, cols);
    for (int r = 0; r < rows; r++) {
        long long scale = pe / row_moduli[r];
        for (int c = 0; c < cols; c++) w.at(r, c) = normalize_mod(a.at(r, c) * scale, pe);
    }
    Mat v = Mat::identity(cols);
    std::vector<long long> diag =
        diagonalize_mod(w, pe, p, emax, &v, nullptr, nullptr);
    std::vector<std::vector<long long>> gens;
    for (int j = 0; j < cols; j++) {
        int vj = j < (int)diag.size() && diag[j] != 0 ? val_of(diag[j], p, emax) : emax;
        long long mult = pow_ll(p, emax - vj);
        std::vector<long long> g(cols);
        bool nonzero = false;
        for (int i = 0; i < cols; i++) {
            g[i] = normalize_mod(v.at(i, j) * mult, col_moduli[i]);
            nonzero = nonzero || g[i] != 0;
        }
        if (nonzero) gens.push_back(std::move(g));
    }
    return gens;
}

namespace {

// Column-style Hermite basis of the lattice spanned by the given columns
// plus diag(moduli): lower triangular, positive diagonal, off-diagonal
// entries reduced into [0, diagonal).
Mat hnf_basis(const std::vector<std::vector<long long>>& gens,
              const std::vector<long long>& moduli) {
    int n = (int)moduli.size();
    std::vector<std::vector<long long>> cols;
    for (const auto& g : gens) {
        assert((int)g.size() == n);
        cols.push_back(g);
    }
    for (int i = 0; i < n; i++) {
        std::vector<long long> d(n, 0);
        d[i] = moduli[i];
        cols.push_back(d);
    }
    Mat b(n, n);
    size_t active = 0; // columns before `active` are consumed pivots
    for (int r = 0; r < n; r++) {
        for (;;) {
            int smallest = -1;
            int live = 0;
            for (size_t c = active; c < cols.size(); c++) {
                if (cols[c][r] == 0) continue;
                live++;
                if (smallest < 0 ||
                    std::llabs(cols[c][r]) < std::llabs(cols[(size_t)smallest][r]))
                    smallest = (int)c;
            }
            if (smallest < 0) throw InternalError("lattice basis lost full rank");
            if (live == 1) {
                std::swap(cols[active], cols[(size_t)smallest]);
                break;
            }
            for (size_t c = active; c < cols.size(); c++) {
                if ((int)c == smallest || cols[c][r] == 0) continue;
                long long q = cols[c][r] / cols[(size_t)smallest][r];
                for (int i = r; i < n; i++) cols[c][i] -= q * cols[(size_t)smallest][i];
            }
        }
        if (cols[active][r] < 0)
            for (int i = r; i < n; i++) cols[active][i] = -cols[active][i];
        for (int i = 0; i < n; i++) b.at(i, r) = cols[active][i];
        active++;
    }
    // canonical reduction of entries left of each diagonal
    for (int j = 0; j < n; j++)
        for (int j2 = 0; j2 < j; j2++) {
            long long q = b.at(j, j2) / b.at(j, j);
            if (b.at(j, j2) - q * b.at(j, j) < 0) q -= 1; // floor
            if (q == 0) continue;
            for (int i = j; i < n; i++) b.at(i, j2) -= q * b.at(i, j);
        }
    return b;
}

// Forward substitution for lower-triangular b with p-power diagonal, carried
// modulo bigmod (a multiple of pk1 * prod(diag)); checks exact divisibility.
std::vector<long long> solve_lower(const Mat& b, const std::vector<long long>& x,
                                   long long bigmod) {
    int n = b.rows;
    assert((int)x.size() == n);
    std::vector<long long> z(n, 0);
    for (int r = 0; r < n; r++) {
        __int128 acc = normalize_mod(x[r], bigmod);
        for (int j = 0; j < r; j++) acc -= (__int128)b.at(r, j) * z[j];
        long long num = (long long)((acc % bigmod + bigmod) % bigmod);
        if (num % b.at(r, r) != 0)
            throw InternalError("vector lies outside the subgroup lattice");
        z[r] = (num / b.at(r, r)) % bigmod;
    }
    return z;
}

} // namespace

std::vector<long long> Subquotient::project(const std::vector<long long>& x) const {
    if (moduli.empty()) return {};
    long long det = 1;
    for (int j = 0; j < b.rows; j++) det *= b.at(j, j);
    std::vector<long long> z = solve_lower(b, x, pk1 * det);
    std::vector<long long> out(kept.size(), 0);
    for (size_t j = 0; j < kept.size(); j++) {
        __int128 acc = 0;
        for (int i = 0; i < u.cols; i++) acc += (__int128)u.at(kept[j], i) * z[i];
        out[j] = normalize_mod((long long)(acc % pk1), diag[kept[j]]);
    }
    return out;
}

Subquotient subquotient(const std::vector<long long>& moduli,
                        const std::vector<std::vector<long long>>& kgens,
                        const std::vector<std::vector<long long>>& igens,
                        long long p) {
    int n = (int)moduli.size();
    Subquotient sq;
    sq.moduli = moduli;
    sq.p = p;
    if (n == 0) return sq;
    int kmax = 0;
    for (long long m : moduli) {
        int e = exponent_of(m, p);
        if (e == 0) throw InternalError("subquotient modulus must be a positive power of p");
        kmax = std::max(kmax, e);
    }
    sq.pk1 = pow_ll(p, kmax + 1);
    long long det_bound = sq.pk1;
    sq.b = hnf_basis(kgens, moduli);
    for (int j = 0; j < n; j++) {
        // forward substitution loses one p-adic digit per diagonal p-power, so
        // the carry modulus must cover the full lattice determinant
        if (det_bound > (long long)4e17 / sq.b.at(j, j))
            throw SpecError("subquotient exceeds the exact arithmetic bound");
        det_bound *= sq.b.at(j, j);
    }
    // relation matrix in basis coordinates: preimages of igens and of the
    // ambient relations diag(moduli)
    Mat y(n, (int)igens.size() + n);
    for (size_t c = 0; c < igens.size(); c++) {
        std::vector<long long> z = solve_lower(sq.b, igens[c], det_bound);
        for (int r = 0; r < n; r++) y.at(r, (int)c) = normalize_mod(z[r], sq.pk1);
    }
    for (int c = 0; c < n; c++) {
        std::vector<long long> x(n, 0);
        x[c] = moduli[c];
        std::vector<long long> z = solve_lower(sq.b, x, det_bound);
        for (int r = 0; r < n; r++) y.at(r, (int)igens.size() + c) = normalize_mod(z[r], sq.pk1);
    }
    sq.u = Mat::identity(n);
    Mat uinv = Mat::identity(n);
    std::vector<long long> diag =
        diagonalize_mod(y, sq.pk1, p, kmax + 1, nullptr, &sq.u, &uinv);
    sq.diag.assign(n, 1);
    for (int t = 0; t < (int)diag.size(); t++) {
        if (diag[t] == 0)
            throw InternalError("subquotient relations degenerated below full rank");
        sq.diag[t] = diag[t];
    }
    if ((int)diag.size() < n)
        throw InternalError("subquotient relations degenerated below full rank");
    for (int t = 0; t < n; t++)
        if (sq.diag[t] > 1) sq.kept.push_back(t);
    for (int t : sq.kept) sq.group.orders.push_back(sq.diag[t]);
    for (int t : sq.kept) {
        std::vector<long long> rep(n, 0);
        for (int i = 0; i < n; i++) {
            __int128 acc = 0;
            for (int j = 0; j < n; j++) acc += (__int128)sq.b.at(i, j) * uinv.at(j, t);
            rep[i] = normalize_mod((long long)(acc % moduli[i]), moduli[i]);
        }
        sq.reps.push_back(std::move(rep));
    }
    return sq;
}

} // namespace loc
