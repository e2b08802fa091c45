#include "loc/transporter.hpp"
#include "loc/pembed.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace loc {

int TransporterCat::object_index(const Bits& members) const {
    for (size_t i = 0; i < objects.size(); i++)
        if (objects[i].members == members) return (int)i;
    return -1;
}

bool TransporterCat::is_morphism(int i, int j, int g) const {
    if (i < 0 || j < 0 || i >= (int)objects.size() || j >= (int)objects.size()) return false;
    return g >= 0 && g < ambient->n && hom[i][j].test(g);
}

namespace {

void check_category_laws(const TransporterCat& t) {
    const FiniteGroup& m = *t.ambient;
    int n = (int)t.objects.size();
    for (int i = 0; i < n; i++)
        if (!t.hom[i][i].test(0)) throw InternalError("transporter identity morphism missing");
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            t.hom[i][j].for_each([&](int g) {
                for (int k = 0; k < n; k++)
                    t.hom[j][k].for_each([&](int h) {
                        if (!t.hom[i][k].test(m.mul(g, h)))
                            throw InternalError("transporter composition escaped the category");
                    });
            });
}

} // namespace

TransporterCat build_transporter(const Locality& loc) {
    TransporterCat t;
    t.ambient = loc.ambient;
    t.source = loc;
    t.p = loc.p;
    t.S = loc.S;
    t.objects = loc.delta;
    int n = (int)t.objects.size();
    t.hom.assign(n, std::vector<Bits>(n));
    loc.elements.for_each([&](int g) {
        Bits sg = loc.s_of(g);
        for (int i = 0; i < n; i++) {
            if (!t.objects[i].members.subset_of(sg)) continue;
            Bits pg = conj_bits(*loc.ambient, t.objects[i].members, g);
            for (int j = 0; j < n; j++)
                if (pg.subset_of(t.objects[j].members)) t.hom[i][j].set(g);
        }
    });
    check_category_laws(t);
    return t;
}

TransporterCat build_group_transporter(GroupPtr g, int p, const DeltaSpec& spec) {
    Locality loc = build_group_locality(g, p, spec);
    TransporterCat t;
    t.ambient = g;
    t.source = loc;
    t.p = p;
    t.S = loc.S;
    t.objects = loc.delta;
    int n = (int)t.objects.size();
    t.hom.assign(n, std::vector<Bits>(n));
    for (int x = 0; x < g->n; x++)
        for (int i = 0; i < n; i++) {
            Bits pg = conj_bits(*g, t.objects[i].members, x);
            for (int j = 0; j < n; j++)
                if (pg.subset_of(t.objects[j].members)) t.hom[i][j].set(x);
        }
    // the raw route must coincide with the locality route
    TransporterCat via_loc = build_transporter(loc);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            if (t.hom[i][j] != via_loc.hom[i][j])
                throw InternalError("group and locality transporter routes disagree");
    check_category_laws(t);
    return t;
}

Subgroup aut_object(const TransporterCat& t, int i) {
    return make_subgroup(t.ambient, t.hom[i][i]); // throws if not closed
}

TransporterCat t_essential_subcategory(const TransporterCat& t) {
    std::vector<int> keep;
    for (int i = 0; i < (int)t.objects.size(); i++) {
        const Subgroup& pobj = t.objects[i];
        if (pobj.members == t.S.members) {
            keep.push_back(i);
            continue;
        }
        Subgroup aut = aut_object(t, i);
        Subgroup ns = normalizer(t.S, pobj);
        assert(ns.members.subset_of(aut.members));
        if (ns.order != p_part(aut.order, t.p)) continue; // N_S(P) not Sylow in Aut(P)
        Quotient q = quotient(aut, pobj);
        SpeResult fast = strongly_p_embedded(q.group, t.p);
        SpeResult brute = strongly_p_embedded_bruteforce(q.group, t.p);
        if (fast.exists != brute.exists)
            throw InternalError("strongly p-embedded detectors disagree on a quotient");
        if (fast.exists) keep.push_back(i);
    }
    TransporterCat sub;
    sub.ambient = t.ambient;
    sub.source = t.source;
    sub.p = t.p;
    sub.S = t.S;
    for (int i : keep) sub.objects.push_back(t.objects[i]);
    int n = (int)keep.size();
    sub.hom.assign(n, std::vector<Bits>(n));
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++) sub.hom[a][b] = t.hom[keep[a]][keep[b]];
    return sub;
}

std::vector<MorFactor> decompose_morphism(const TransporterCat& t, int i, int j, int g,
                                          Decomposer& dec) {
    if (!t.is_morphism(i, j, g))
        throw DomainError("element is not a morphism between the given objects");
    assert(t.source && t.source->ambient == dec.locality().ambient);
    Certificate cert = dec.decompose(g);
    std::vector<MorFactor> out;
    Bits cur = t.objects[i].members;
    int cur_obj = i;
    for (const CertFactor& f : cert.factors) {
        if (f.x == 0) continue; // identity letters restrict to identities
        if (!cur.subset_of(f.q.members))
            throw InternalError("certificate letter does not cover the travelling object");
        Bits nxt = conj_bits(*t.ambient, cur, f.x);
        int nxt_obj = t.object_index(nxt);
        if (nxt_obj < 0) throw InternalError("conjugate left the object set");
        out.push_back(MorFactor{f.q, f.x, cur_obj, nxt_obj});
        cur = nxt;
        cur_obj = nxt_obj;
    }
    if (out.empty() || cur_obj != j) out.push_back(MorFactor{t.S, 0, cur_obj, j});
    return out;
}

std::vector<MorFactor> decompose_morphism(const TransporterCat& t, int i, int j, int g) {
    if (!t.source) throw InternalError("transporter category has no source locality");
    Decomposer dec(*t.source);
    return decompose_morphism(t, i, j, g, dec);
}

const Mat& FunctorPres::map_of(int i, int j, int g) const {
    auto it = maps.find({i, j, g});
    if (it == maps.end()) throw FunctorError("functor has no matrix for a category morphism");
    return it->second;
}

void validate_functor(const FunctorPres& f) {
    const FiniteGroup& m = *f.cat.ambient;
    int n = (int)f.cat.objects.size();
    if ((int)f.values.size() != n) throw FunctorError("functor values do not cover the objects");
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            f.cat.hom[i][j].for_each([&](int g) {
                const Mat& mat = f.map_of(i, j, g);
                const auto& oi = f.values[i].orders;
                const auto& oj = f.values[j].orders;
                if (mat.rows != (int)oi.size() || mat.cols != (int)oj.size())
                    throw FunctorError("functor matrix has the wrong shape");
                for (int r = 0; r < mat.rows; r++)
                    for (int c = 0; c < mat.cols; c++)
                        if (mat.at(r, c) * oj[c] % oi[r] != 0)
                            throw FunctorError("functor matrix is not defined on the stated orders");
            });
    for (int i = 0; i < n; i++) {
        const Mat& id = f.map_of(i, i, 0);
        const auto& oi = f.values[i].orders;
        for (int r = 0; r < id.rows; r++)
            for (int c = 0; c < id.cols; c++)
                if ((id.at(r, c) - (r == c ? 1 : 0)) % oi[r] != 0)
                    throw FunctorError("functor identity matrix is not the identity");
    }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            f.cat.hom[i][j].for_each([&](int g) {
                const Mat& mg = f.map_of(i, j, g);
                for (int k = 0; k < n; k++)
                    f.cat.hom[j][k].for_each([&](int h) {
                        const Mat& mh = f.map_of(j, k, h);
                        const Mat& mgh = f.map_of(i, k, m.mul(g, h));
                        Mat prod = mat_mul(mg, mh);
                        const auto& oi = f.values[i].orders;
                        for (int r = 0; r < prod.rows; r++)
                            for (int c = 0; c < prod.cols; c++)
                                if ((prod.at(r, c) - mgh.at(r, c)) % oi[r] != 0)
                                    throw FunctorError("functor matrices fail composition");
                    });
            });
}

FunctorPres constant_functor(const TransporterCat& t, const AbPres& value) {
    FunctorPres f;
    f.cat = t;
    int n = (int)t.objects.size();
    f.values.assign(n, value);
    Mat id = Mat::identity((int)value.orders.size());
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            t.hom[i][j].for_each([&](int g) { f.maps.emplace(std::tuple{i, j, g}, id); });
    return f;
}

AbPres inverse_limit(const FunctorPres& f) {
    validate_functor(f);
    int n = (int)f.cat.objects.size();
    std::vector<int> off(n + 1, 0);
    for (int i = 0; i < n; i++) off[i + 1] = off[i] + (int)f.values[i].orders.size();
    std::vector<long long> col_moduli;
    for (int i = 0; i < n; i++)
        col_moduli.insert(col_moduli.end(), f.values[i].orders.begin(), f.values[i].orders.end());
    // one row block per morphism: x_from - M x_to = 0 in F(from)
    std::vector<long long> row_moduli;
    std::vector<std::array<int, 3>> mors;
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++)
            f.cat.hom[i][j].for_each([&](int g) {
                mors.push_back({i, j, g});
                row_moduli.insert(row_moduli.end(), f.values[i].orders.begin(),
                                  f.values[i].orders.end());
            });
    Mat a((int)row_moduli.size(), off[n]);
    int row = 0;
    for (const auto& [i, j, g] : mors) {
        const Mat& mm = f.map_of(i, j, g);
        for (int r = 0; r < mm.rows; r++) {
            a.at(row + r, off[i] + r) += 1;
            for (int c = 0; c < mm.cols; c++) a.at(row + r, off[j] + c) -= mm.at(r, c);
        }
        row += mm.rows;
    }
    auto gens = mod_kernel(a, row_moduli, col_moduli, f.cat.p);
    return subquotient(col_moduli, gens, {}, f.cat.p).group;
}

FunctorPres restrict_functor(const FunctorPres& f, const TransporterCat& sub) {
    FunctorPres out;
    out.cat = sub;
    int n = (int)sub.objects.size();
    std::vector<int> back(n);
    for (int a = 0; a < n; a++) {
        back[a] = f.cat.object_index(sub.objects[a].members);
        if (back[a] < 0) throw InternalError("subcategory object missing from the functor");
        out.values.push_back(f.values[back[a]]);
    }
    for (int a = 0; a < n; a++)
        for (int b = 0; b < n; b++)
            sub.hom[a][b].for_each([&](int g) {
                out.maps.emplace(std::tuple{a, b, g}, f.map_of(back[a], back[b], g));
            });
    validate_functor(out);
    return out;
}

} // namespace loc
