#include "loc/group.hpp"
#include <algorithm>
#include <set>

namespace loc {

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        k++;
        if (k > n) throw InternalError("element_order did not terminate");
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n; a++)
        for (int b = a + 1; b < n; b++)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::string FiniteGroup::label_of(int a) const {
    if (a >= 0 && a < (int)labels.size() && !labels[a].empty()) return labels[a];
    return "g" + std::to_string(a);
}

std::optional<std::string> FiniteGroup::check_axioms() const {
    if (n <= 0) return "group has no elements";
    if ((int)table.size() != n * n) return "table size is not n*n";
    for (int i = 0; i < n * n; i++)
        if (table[i] < 0 || table[i] >= n) return "table entry out of range";
    for (int a = 0; a < n; a++)
        if (mul(0, a) != a || mul(a, 0) != a)
            return "element 0 is not a two-sided identity at " + std::to_string(a);
    for (int a = 0; a < n; a++) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int b = 0; b < n; b++) {
            if (seen_row[mul(a, b)]++) return "row " + std::to_string(a) + " is not a permutation";
            if (seen_col[mul(b, a)]++) return "column " + std::to_string(a) + " is not a permutation";
        }
    }
    if ((int)inverse.size() != n) return "inverse table size mismatch";
    for (int a = 0; a < n; a++) {
        int b = inverse[a];
        if (b < 0 || b >= n) return "inverse of " + std::to_string(a) + " out of range";
        if (mul(a, b) != 0 || mul(b, a) != 0)
            return "inverse axiom fails at " + std::to_string(a);
    }
    for (int a = 0; a < n; a++) {
        for (int b = 0; b < n; b++) {
            int ab = mul(a, b);
            for (int c = 0; c < n; c++)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    return "associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")";
        }
    }
    if (!labels.empty() && (int)labels.size() != n) return "labels size mismatch";
    if (!perms.empty()) {
        if ((int)perms.size() != n) return "perm table size mismatch";
        for (int a = 0; a < n; a++) {
            if ((int)perms[a].size() != perm_degree) return "perm degree mismatch";
            std::vector<char> seen(perm_degree, 0);
            for (int x : perms[a]) {
                if (x < 0 || x >= perm_degree || seen[x]++) return "perm entry not a permutation";
            }
        }
        for (int x = 0; x < perm_degree; x++)
            if (perms[0][x] != x) return "perm of identity is not the identity map";
        for (int a = 0; a < n; a++)
            for (int b = 0; b < n; b++)
                for (int x = 0; x < perm_degree; x++)
                    if (perms[mul(a, b)][x] != perms[b][perms[a][x]])
                        return "perms are not a right action";
    }
    return std::nullopt;
}

GroupPtr make_group(FiniteGroup g, bool validate) {
    if (g.n > kMaxGroupOrder)
        throw SpecError("group too large: order " + std::to_string(g.n) + " exceeds " +
                        std::to_string(kMaxGroupOrder));
    if (g.inverse.empty() && (int)g.table.size() == g.n * g.n) {
        g.inverse.assign(g.n, -1);
        for (int a = 0; a < g.n; a++)
            for (int b = 0; b < g.n; b++)
                if (g.table[a * g.n + b] == 0 && g.table[b * g.n + a] == 0) {
                    g.inverse[a] = b;
                    break;
                }
    }
    if (validate) {
        auto err = g.check_axioms();
        if (err) throw SpecError("invalid group: " + *err);
    }
    return std::make_shared<FiniteGroup>(std::move(g));
}

bool is_closed_subset(const FiniteGroup& g, const Bits& members) {
    if (!members.test(0)) return false;
    bool ok = true;
    members.for_each([&](int a) {
        if (!ok) return;
        members.for_each([&](int b) {
            if (!members.test(g.mul(a, b))) ok = false;
        });
    });
    return ok;
}

Subgroup make_subgroup(GroupPtr parent, const Bits& members) {
    if (!is_closed_subset(*parent, members))
        throw InternalError("subset is not a subgroup");
    return Subgroup{parent, members, members.count()};
}

Subgroup trivial_subgroup(GroupPtr g) {
    Bits b;
    b.set(0);
    return Subgroup{g, b, 1};
}

Subgroup full_subgroup(GroupPtr g) {
    Bits b;
    for (int i = 0; i < g->n; i++) b.set(i);
    return Subgroup{g, b, g->n};
}

bool subgroup_eq(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }

int subgroup_cmp(const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order ? -1 : 1;
    return Bits::cmp(a.members, b.members);
}

Subgroup generated_subgroup(GroupPtr parent, const std::vector<int>& gens) {
    const FiniteGroup& g = *parent;
    Bits members;
    members.set(0);
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int a = queue.back();
        queue.pop_back();
        for (int x : gens) {
            int b = g.mul(a, x);
            if (!members.test(b)) {
                members.set(b);
                queue.push_back(b);
            }
        }
    }
    return Subgroup{parent, members, members.count()};
}

Bits conj_bits(const FiniteGroup& g, const Bits& s, int x) {
    Bits r;
    s.for_each([&](int e) { r.set(g.conj(e, x)); });
    return r;
}

Subgroup conj_subgroup(const Subgroup& p, int x) {
    Bits r = conj_bits(*p.parent, p.members, x);
    return Subgroup{p.parent, r, p.order};
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    Bits r = a.members & b.members;
    return Subgroup{a.parent, r, r.count()};
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
    std::vector<int> gens;
    (a.members | b.members).for_each([&](int e) { gens.push_back(e); });
    return generated_subgroup(a.parent, gens);
}

bool contains(const Subgroup& a, const Subgroup& b) { return b.members.subset_of(a.members); }

Subgroup normalizer(const Subgroup& ambient, const Subgroup& p) {
    const FiniteGroup& g = *ambient.parent;
    Bits r;
    ambient.members.for_each([&](int a) {
        if (conj_bits(g, p.members, a) == p.members) r.set(a);
    });
    return Subgroup{ambient.parent, r, r.count()};
}

Subgroup centralizer(const Subgroup& ambient, const Subgroup& p) {
    const FiniteGroup& g = *ambient.parent;
    Bits r;
    ambient.members.for_each([&](int a) {
        bool ok = true;
        p.members.for_each([&](int s) {
            if (g.conj(s, a) != s) ok = false;
        });
        if (ok) r.set(a);
    });
    return Subgroup{ambient.parent, r, r.count()};
}

bool is_normal_in(const Subgroup& p, const Subgroup& ambient) {
    const FiniteGroup& g = *ambient.parent;
    bool ok = true;
    ambient.members.for_each([&](int a) {
        if (ok && conj_bits(g, p.members, a) != p.members) ok = false;
    });
    return ok;
}

bool is_p_power(long long m, int p) {
    if (m < 1) return false;
    while (m % p == 0) m /= p;
    return m == 1;
}

int p_part(int m, int p) {
    int r = 1;
    while (m % p == 0) {
        m /= p;
        r *= p;
    }
    return r;
}

bool is_p_subgroup(const Subgroup& h, int p) { return is_p_power(h.order, p); }

Subgroup sylow(const Subgroup& h, int p) {
    GroupPtr parent = h.parent;
    const FiniteGroup& g = *parent;
    int target = p_part(h.order, p);
    Subgroup t = trivial_subgroup(parent);
    while (t.order < target) {
        Subgroup nrm = normalizer(h, t);
        int found = -1;
        for (int x = 0; x < g.n && found < 0; x++) {
            if (!nrm.members.test(x) || t.members.test(x)) continue;
            if (is_p_power(g.element_order(x), p)) found = x;
        }
        if (found < 0) throw InternalError("sylow construction stalled");
        std::vector<int> gens = subgroup_generators(t);
        gens.push_back(found);
        t = generated_subgroup(parent, gens);
        if (!is_p_power(t.order, p)) throw InternalError("sylow construction left p-groups");
    }
    return t;
}

int sylow_conjugator(const Subgroup& h, const Subgroup& p, const Subgroup& t) {
    const FiniteGroup& g = *h.parent;
    for (int x = 0; x < g.n; x++) {
        if (!h.members.test(x)) continue;
        if (conj_bits(g, p.members, x).subset_of(t.members)) return x;
    }
    throw InternalError("no element of the given group conjugates the subgroup into the target");
}

std::vector<Subgroup> all_subgroups(GroupPtr g) { return all_subgroups_in(full_subgroup(g)); }

std::vector<Subgroup> all_subgroups_in(const Subgroup& h) {
    GroupPtr g = h.parent;
    auto less = [](const Bits& a, const Bits& b) { return Bits::cmp(a, b) < 0; };
    std::set<Bits, decltype(less)> pool(less);
    h.members.for_each([&](int x) { pool.insert(generated_subgroup(g, {x}).members); });
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Bits> cur(pool.begin(), pool.end());
        for (size_t i = 0; i < cur.size(); i++) {
            for (size_t j = i + 1; j < cur.size(); j++) {
                if (cur[i].subset_of(cur[j]) || cur[j].subset_of(cur[i])) continue;
                std::vector<int> gens;
                (cur[i] | cur[j]).for_each([&](int e) { gens.push_back(e); });
                Bits jn = generated_subgroup(g, gens).members;
                if (pool.insert(jn).second) grew = true;
                if (pool.size() > 20000) throw SpecError("subgroup lattice too large");
            }
        }
    }
    std::vector<Subgroup> out;
    out.reserve(pool.size());
    for (const Bits& b : pool) out.push_back(Subgroup{g, b, b.count()});
    std::sort(out.begin(), out.end(),
              [](const Subgroup& a, const Subgroup& b) { return subgroup_cmp(a, b) < 0; });
    return out;
}

std::vector<int> subgroup_generators(const Subgroup& h) {
    std::vector<int> gens;
    Subgroup t = trivial_subgroup(h.parent);
    h.members.for_each([&](int x) {
        if (t.members.test(x)) return;
        gens.push_back(x);
        std::vector<int> g2 = gens;
        t = generated_subgroup(h.parent, g2);
    });
    if (!(t.members == h.members)) throw InternalError("generator scan missed elements");
    return gens;
}

Quotient quotient(const Subgroup& h, const Subgroup& nrm) {
    const FiniteGroup& g = *h.parent;
    if (!contains(h, nrm)) throw DomainError("quotient: kernel is not contained in the group");
    if (!is_normal_in(nrm, h)) throw DomainError("quotient: subgroup is not normal");
    std::vector<int> proj(g.n, -1);
    std::vector<int> reps;
    for (int a = 0; a < g.n; a++) {
        if (!h.members.test(a) || proj[a] >= 0) continue;
        int idx = (int)reps.size();
        reps.push_back(a);
        nrm.members.for_each([&](int m) { proj[g.mul(m, a)] = idx; });
    }
    int q = (int)reps.size();
    FiniteGroup qg;
    qg.n = q;
    qg.name = "quotient";
    qg.table.resize(q * q);
    for (int i = 0; i < q; i++)
        for (int j = 0; j < q; j++) qg.table[i * q + j] = proj[g.mul(reps[i], reps[j])];
    qg.labels.resize(q);
    for (int i = 0; i < q; i++) qg.labels[i] = "[" + g.label_of(reps[i]) + "]";
    return Quotient{make_group(std::move(qg)), proj};
}

SubgroupView subgroup_as_group(const Subgroup& h) {
    const FiniteGroup& g = *h.parent;
    SubgroupView v;
    v.to_local.assign(g.n, -1);
    h.members.for_each([&](int a) {
        v.to_local[a] = (int)v.to_ambient.size();
        v.to_ambient.push_back(a);
    });
    int m = (int)v.to_ambient.size();
    FiniteGroup sg;
    sg.n = m;
    sg.name = g.name + ":sub" + std::to_string(m);
    sg.table.resize(m * m);
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) {
            int prod = g.mul(v.to_ambient[i], v.to_ambient[j]);
            if (v.to_local[prod] < 0) throw InternalError("subgroup view: set not closed");
            sg.table[i * m + j] = v.to_local[prod];
        }
    sg.labels.resize(m);
    for (int i = 0; i < m; i++) sg.labels[i] = g.label_of(v.to_ambient[i]);
    if (!g.perms.empty()) {
        sg.perm_degree = g.perm_degree;
        sg.perms.resize(m);
        for (int i = 0; i < m; i++) sg.perms[i] = g.perms[v.to_ambient[i]];
    }
    v.group = make_group(std::move(sg));
    return v;
}

bool is_homomorphism(const GroupHom& f) {
    const FiniteGroup& g = *f.source.parent;
    const FiniteGroup& t = *f.target;
    if ((int)f.images.size() != g.n) return false;
    bool ok = true;
    f.source.members.for_each([&](int x) {
        int fx = f.images[x];
        if (fx < 0 || fx >= t.n) {
            ok = false;
            return;
        }
        f.source.members.for_each([&](int y) {
            int fy = f.images[y];
            int xy = g.mul(x, y);
            if (fy < 0 || fy >= t.n || f.images[xy] < 0 ||
                f.images[xy] != t.mul(fx, fy))
                ok = false;
        });
    });
    return ok;
}

} // namespace loc
