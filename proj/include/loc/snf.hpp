#pragma once
#include "loc/errors.hpp"

#include <vector>

namespace loc {

// Dense row-major integer matrix. Desk-scale sizes; entries fit long long
// throughout because the elimination routines either run modulo a small
// prime power or on tiny inputs.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}

    long long& at(int r, int c) { return a[(size_t)r * cols + c]; }
    long long at(int r, int c) const { return a[(size_t)r * cols + c]; }

    static Mat identity(int n);
};

Mat mat_mul(const Mat& x, const Mat& y);

// Exact integer determinant via fraction-free (Bareiss) elimination.
long long mat_det(const Mat& m);

// U * A * V = D with U, V unimodular and D diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithResult {
    Mat u, d, v;
};
SmithResult smith_normal_form(Mat a);

// A finite abelian p-group presented by its cyclic orders, ascending.
// Empty list = trivial group.
struct AbPres {
    std::vector<long long> orders;
    bool operator==(const AbPres& o) const { return orders == o.orders; }
};

// Generators of { x in (+) Z/col_moduli[i] : (A x)_r == 0 mod row_moduli[r] }.
// All moduli are powers of the prime p (or 1 for a vacuous row). Works
// modulo p^E where E is the largest exponent present, with column tracking
// only; row operations are invertible and do not change the solution set.
// Validates that the congruence system is well defined on the column module
// (A * (col_moduli[i] e_i) == 0 rowwise) and throws InternalError otherwise.
std::vector<std::vector<long long>> mod_kernel(const Mat& a,
                                               const std::vector<long long>& row_moduli,
                                               const std::vector<long long>& col_moduli,
                                               long long p);

// A subquotient K/I of the ambient module (+) Z/moduli[i], with chosen
// coordinates: `group` lists the cyclic orders (ascending), reps[i] is an
// ambient representative of the i-th cyclic generator, and project() maps an
// ambient vector lying in K to its coordinates, constant on I-cosets.
struct Subquotient {
    std::vector<long long> moduli;
    long long p = 0;
    long long pk1 = 0; // p^(K+1), one step above the ambient exponent
    AbPres group;
    std::vector<std::vector<long long>> reps;

    // internals for project()
    Mat b;    // column-HNF basis of the K-lattice, lower triangular
    Mat u;    // row transform of the relation matrix, mod pk1
    std::vector<long long> diag; // p^{v_i} per position (1 where trivial)
    std::vector<int> kept;       // positions with diag > 1, ascending order

    // Throws InternalError if x does not lie in K.
    std::vector<long long> project(const std::vector<long long>& x) const;
};

// K = <kgens>, I = <igens> inside (+) Z/moduli[i]; requires I <= K (violations
// surface as InternalError from the exact solve). All moduli are powers of p.
Subquotient subquotient(const std::vector<long long>& moduli,
                        const std::vector<std::vector<long long>>& kgens,
                        const std::vector<std::vector<long long>>& igens,
                        long long p);

} // namespace loc
