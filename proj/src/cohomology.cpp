#include "loc/cohomology.hpp"
#include "loc/locality.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace loc {

namespace {

constexpr long long kCochainBound = 30000;

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; d++)
        if (p % d == 0) return false;
    return true;
}

long long norm_mod(long long x, long long m) {
    x %= m;
    return x < 0 ? x + m : x;
}

// |G|^n * rank, guarded against the configured bound
long long cochain_dim(const GModule& m, int n) {
    long long dim = (long long)m.ab.orders.size();
    for (int i = 0; i < n; i++) {
        dim *= m.group->n;
        if (dim > kCochainBound)
            throw SpecError("cochain space exceeds the configured size bound");
    }
    return dim;
}

std::vector<long long> cochain_moduli(const GModule& m, int n) {
    long long tuples = 1;
    for (int i = 0; i < n; i++) tuples *= m.group->n;
    std::vector<long long> out;
    out.reserve((size_t)tuples * m.ab.orders.size());
    for (long long t = 0; t < tuples; t++)
        out.insert(out.end(), m.ab.orders.begin(), m.ab.orders.end());
    return out;
}

} // namespace

GModule make_gmodule(GroupPtr g, AbPres ab, std::vector<Mat> action, long long p) {
    if (!is_prime(p)) throw SpecError("module prime is not a prime");
    for (long long o : ab.orders) {
        long long x = o;
        while (x % p == 0) x /= p;
        if (x != 1 || o < 2) throw SpecError("module orders must be positive powers of p");
    }
    int k = (int)ab.orders.size();
    if ((int)action.size() != g->n) throw SpecError("module action must cover every element");
    for (Mat& a : action) {
        if (a.rows != k || a.cols != k) throw SpecError("module action matrix has the wrong shape");
        for (int r = 0; r < k; r++)
            for (int c = 0; c < k; c++) {
                if (a.at(r, c) * ab.orders[c] % ab.orders[r] != 0)
                    throw SpecError("module action is not defined on the stated orders");
                a.at(r, c) = norm_mod(a.at(r, c), ab.orders[r]);
            }
    }
    for (int r = 0; r < k; r++)
        for (int c = 0; c < k; c++)
            if (action[0].at(r, c) != (r == c ? 1 : 0))
                throw SpecError("module identity element must act trivially");
    for (int a = 0; a < g->n; a++)
        for (int b = 0; b < g->n; b++) {
            Mat prod = mat_mul(action[a], action[b]);
            const Mat& tgt = action[g->mul(a, b)];
            for (int r = 0; r < k; r++)
                for (int c = 0; c < k; c++)
                    if ((prod.at(r, c) - tgt.at(r, c)) % ab.orders[r] != 0)
                        throw SpecError("module action is not multiplicative");
        }
    GModule m;
    m.group = std::move(g);
    m.ab = std::move(ab);
    m.action = std::move(action);
    m.p = p;
    return m;
}

GModule trivial_module(GroupPtr g, const AbPres& ab, long long p) {
    std::vector<Mat> action(g->n, Mat::identity((int)ab.orders.size()));
    return make_gmodule(std::move(g), ab, std::move(action), p);
}

GModule permutation_module(GroupPtr g, long long modulus) {
    if (g->perm_degree <= 0) throw SpecError("permutation module needs permutation data");
    int d = g->perm_degree;
    AbPres ab;
    ab.orders.assign(d, modulus);
    std::vector<Mat> action;
    for (int x = 0; x < g->n; x++) {
        // right permutation action made into a left module: x . e_j = e_{x^-1(j)}
        Mat a(d, d);
        for (int i = 0; i < d; i++) a.at(i, g->perms[x][i]) = 1;
        action.push_back(a);
    }
    long long p = modulus;
    for (long long q = 2; q * q <= modulus; q++)
        if (modulus % q == 0) { p = q; break; }
    return make_gmodule(std::move(g), std::move(ab), std::move(action), p);
}

GModule restrict_module(const GModule& m, const SubgroupView& view) {
    GModule out;
    out.group = view.group;
    out.ab = m.ab;
    out.p = m.p;
    for (int i = 0; i < view.group->n; i++) out.action.push_back(m.action[view.to_ambient[i]]);
    return out;
}

Mat coboundary(const GModule& m, int n) {
    assert(n >= 0);
    cochain_dim(m, n + 1); // bound check
    const FiniteGroup& g = *m.group;
    int k = (int)m.ab.orders.size();
    long long tin = 1, tout = 1;
    for (int i = 0; i < n; i++) tin *= g.n;
    tout = tin * g.n;
    Mat d((int)(tout * k), (int)(tin * k));
    std::vector<int> tup(n + 1);
    for (long long row_t = 0; row_t < tout; row_t++) {
        long long x = row_t;
        for (int i = 0; i <= n; i++) {
            tup[i] = (int)(x % g.n);
            x /= g.n;
        }
        auto add_block = [&](long long col_t, const Mat* a, long long sign) {
            for (int r = 0; r < k; r++) {
                if (a) {
                    for (int c = 0; c < k; c++)
                        d.at((int)(row_t * k + r), (int)(col_t * k + c)) += sign * a->at(r, c);
                } else {
                    d.at((int)(row_t * k + r), (int)(col_t * k + r)) += sign;
                }
            }
        };
        // g_1 acts on the dropped-first-slot tuple
        long long first = 0;
        for (int i = n; i >= 1; i--) first = first * g.n + tup[i];
        add_block(first, &m.action[tup[0]], 1);
        // middle terms: merge slots i and i+1
        long long sign = -1;
        for (int i = 0; i < n; i++) {
            long long col_t = 0;
            for (int j = n; j >= 0; j--) {
                if (j == i + 1) continue;
                int e = j == i ? g.mul(tup[i], tup[i + 1]) : tup[j];
                col_t = col_t * g.n + e;
            }
            add_block(col_t, nullptr, sign);
            sign = -sign;
        }
        // drop the last slot
        long long last = 0;
        for (int i = n - 1; i >= 0; i--) last = last * g.n + tup[i];
        add_block(last, nullptr, sign);
    }
    return d;
}

CohomologyData cohomology_data(const GModule& m, int n) {
    assert(n >= 0);
    CohomologyData out;
    out.degree = n;
    out.moduli = cochain_moduli(m, n);
    Mat dn = coboundary(m, n);
    auto zgens = mod_kernel(dn, cochain_moduli(m, n + 1), out.moduli, m.p);
    std::vector<std::vector<long long>> igens;
    if (n > 0) {
        Mat dprev = coboundary(m, n - 1);
        for (int c = 0; c < dprev.cols; c++) {
            std::vector<long long> col(dprev.rows);
            for (int r = 0; r < dprev.rows; r++) col[r] = dprev.at(r, c);
            igens.push_back(std::move(col));
        }
    }
    out.sq = subquotient(out.moduli, zgens, igens, m.p);
    return out;
}

AbPres cohomology(const GModule& m, int n) { return cohomology_data(m, n).sq.group; }

namespace {

// cochain-level matrix C^n(Q) -> C^n(P) of (phi* f)(p_1..p_n) = g f(p_1^g..p_n^g)
Mat cochain_induced(const GModule& amb, const SubgroupView& vp, const SubgroupView& vq, int g,
                    int n) {
    const FiniteGroup& big = *amb.group;
    int k = (int)amb.ab.orders.size();
    int np = vp.group->n, nq = vq.group->n;
    long long tp = 1, tq = 1;
    for (int i = 0; i < n; i++) {
        tp *= np;
        tq *= nq;
    }
    const Mat& ag = amb.action[g];
    Mat out((int)(tp * k), (int)(tq * k));
    for (long long t = 0; t < tp; t++) {
        long long x = t, col_t = 0, place = 1;
        for (int i = 0; i < n; i++) {
            int pl = (int)(x % np);
            x /= np;
            int conj = big.conj(vp.to_ambient[pl], g);
            int ql = vq.to_local[conj];
            if (ql < 0) throw InternalError("conjugated tuple entry left the target subgroup");
            col_t += place * ql;
            place *= nq;
        }
        for (int r = 0; r < k; r++)
            for (int c = 0; c < k; c++) out.at((int)(t * k + r), (int)(col_t * k + c)) = ag.at(r, c);
    }
    return out;
}

// push a representative through the cochain map and project into the target
Mat descend(const CohomologyData& dp, const CohomologyData& dq, const Mat& phi) {
    int rows = (int)dp.sq.group.orders.size();
    int cols = (int)dq.sq.group.orders.size();
    Mat out(rows, cols);
    for (int t = 0; t < cols; t++) {
        std::vector<long long> v((size_t)phi.rows, 0);
        for (int r = 0; r < phi.rows; r++) {
            long long acc = 0;
            for (int c = 0; c < phi.cols; c++) acc += phi.at(r, c) * dq.sq.reps[t][c];
            v[r] = norm_mod(acc, dp.moduli[r]);
        }
        std::vector<long long> w = dp.sq.project(v); // throws if not a cocycle
        for (int r = 0; r < rows; r++) out.at(r, t) = w[r];
    }
    return out;
}

} // namespace

Mat induced_map(const GModule& m, const Subgroup& p, const Subgroup& q, int g, int n) {
    if (g < 0 || g >= m.group->n || !conj_bits(*m.group, p.members, g).subset_of(q.members))
        throw DomainError("element is not a morphism between the given objects");
    SubgroupView vp = subgroup_as_group(p), vq = subgroup_as_group(q);
    CohomologyData dp = cohomology_data(restrict_module(m, vp), n);
    CohomologyData dq = cohomology_data(restrict_module(m, vq), n);
    return descend(dp, dq, cochain_induced(m, vp, vq, g, n));
}

namespace {

FunctorPres audit(FunctorPres f, const char* what) {
    try {
        validate_functor(f);
    } catch (const FunctorError& e) {
        throw InternalError(std::string(what) + " failed its functoriality audit: " + e.what());
    }
    return f;
}

} // namespace

FunctorPres fixed_point_functor(const TransporterCat& t, const GModule& m) {
    if (m.group != t.ambient)
        throw DomainError("module group differs from the category's ambient group");
    int k = (int)m.ab.orders.size();
    int n = (int)t.objects.size();
    FunctorPres f;
    f.cat = t;
    std::vector<Subquotient> sqs;
    for (int i = 0; i < n; i++) {
        // fixed points: kernel of the stacked (action - identity) rows
        Mat a(k * t.objects[i].order, k);
        std::vector<long long> row_moduli;
        int row = 0;
        t.objects[i].members.for_each([&](int s) {
            const Mat& as = m.action[s];
            for (int r = 0; r < k; r++)
                for (int c = 0; c < k; c++) a.at(row + r, c) = as.at(r, c) - (r == c ? 1 : 0);
            row += k;
            row_moduli.insert(row_moduli.end(), m.ab.orders.begin(), m.ab.orders.end());
        });
        auto gens = mod_kernel(a, row_moduli, m.ab.orders, m.p);
        sqs.push_back(subquotient(m.ab.orders, gens, {}, m.p));
        f.values.push_back(sqs.back().group);
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            t.hom[i][j].for_each([&](int g) {
                const Mat& ag = m.action[g];
                Mat mm((int)f.values[i].orders.size(), (int)f.values[j].orders.size());
                for (int c = 0; c < mm.cols; c++) {
                    std::vector<long long> v(k);
                    for (int r = 0; r < k; r++) {
                        long long acc = 0;
                        for (int s = 0; s < k; s++) acc += ag.at(r, s) * sqs[j].reps[c][s];
                        v[r] = norm_mod(acc, m.ab.orders[r]);
                    }
                    std::vector<long long> w = sqs[i].project(v);
                    for (int r = 0; r < mm.rows; r++) mm.at(r, c) = w[r];
                }
                f.maps.emplace(std::tuple{i, j, g}, mm);
            });
    return audit(std::move(f), "the fixed-point functor");
}

FunctorPres cohomology_functor(const TransporterCat& t, const GModule& m, int n) {
    if (m.group != t.ambient)
        throw DomainError("module group differs from the category's ambient group");
    int nobj = (int)t.objects.size();
    FunctorPres f;
    f.cat = t;
    std::vector<SubgroupView> views;
    std::vector<CohomologyData> data;
    for (int i = 0; i < nobj; i++) {
        views.push_back(subgroup_as_group(t.objects[i]));
        data.push_back(cohomology_data(restrict_module(m, views[i]), n));
        f.values.push_back(data[i].sq.group);
    }
    for (int i = 0; i < nobj; i++)
        for (int j = 0; j < nobj; j++)
            t.hom[i][j].for_each([&](int g) {
                Mat phi = cochain_induced(m, views[i], views[j], g, n);
                f.maps.emplace(std::tuple{i, j, g}, descend(data[i], data[j], phi));
            });
    return audit(std::move(f), "the cohomology functor");
}

CEReport check_cartan_eilenberg(GroupPtr g, int p, const GModule& m, int n) {
    if (m.group != g) throw DomainError("module group differs from the given group");
    if (m.p != p) throw DomainError("module prime differs from the given prime");
    CEReport r;
    r.h = cohomology(m, n);
    TransporterCat t = build_group_transporter(g, p, DeltaSpec{});
    FunctorPres f = cohomology_functor(t, m, n);
    r.lim_t = inverse_limit(f);
    FunctorPres fe = restrict_functor(f, t_essential_subcategory(t));
    r.lim_te = inverse_limit(fe);
    r.equal = r.h.orders == r.lim_t.orders && r.lim_t.orders == r.lim_te.orders;
    return r;
}

} // namespace loc
