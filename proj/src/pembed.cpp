#include "loc/pembed.hpp"
#include <algorithm>
#include <deque>
#include <map>

namespace loc {

bool is_strongly_p_embedded(const Subgroup& h, int p) {
    const FiniteGroup& g = *h.parent;
    if (h.order >= g.n) return false;
    if (h.order % p != 0) return false;
    for (int x = 0; x < g.n; x++) {
        if (h.members.test(x)) continue;
        Bits inter = h.members & conj_bits(g, h.members, x);
        if (inter.count() % p == 0) return false;
    }
    return true;
}

SpeResult strongly_p_embedded_bruteforce(GroupPtr g, int p) {
    for (const Subgroup& h : all_subgroups(g))
        if (is_strongly_p_embedded(h, p)) return SpeResult{true, h};
    return SpeResult{false, std::nullopt};
}

std::vector<int> sylow_intersection_generators(GroupPtr g, const Subgroup& s) {
    std::vector<int> out;
    for (int x = 0; x < g->n; x++)
        if ((s.members & conj_bits(*g, s.members, x)).count() > 1) out.push_back(x);
    return out;
}

SpeResult strongly_p_embedded(GroupPtr g, int p) {
    if (g->n % p != 0) return SpeResult{false, std::nullopt};
    // vertices: subgroups of order p
    auto less = [](const Bits& a, const Bits& b) { return Bits::cmp(a, b) < 0; };
    std::map<Bits, int, decltype(less)> vindex(less);
    std::vector<Subgroup> verts;
    for (int x = 0; x < g->n; x++) {
        if (g->element_order(x) != p) continue;
        Subgroup c = generated_subgroup(g, {x});
        if (!vindex.count(c.members)) {
            vindex.emplace(c.members, (int)verts.size());
            verts.push_back(c);
        }
    }
    if (verts.empty()) throw InternalError("no order-p subgroup despite p dividing the order");
    int nv = (int)verts.size();
    // connected components, edge when the join is a p-group
    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    for (int start = 0; start < nv; start++) {
        if (comp[start] >= 0) continue;
        comp[start] = ncomp;
        std::deque<int> bfs{start};
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop_front();
            for (int u = 0; u < nv; u++) {
                if (comp[u] >= 0) continue;
                if (is_p_power(join(verts[v], verts[u]).order, p)) {
                    comp[u] = ncomp;
                    bfs.push_back(u);
                }
            }
        }
        ncomp++;
    }
    if (ncomp == 1) return SpeResult{false, std::nullopt};
    // component of the deterministic Sylow subgroup
    Subgroup syl = sylow(full_subgroup(g), p);
    int syl_comp = -1;
    for (int v = 0; v < nv; v++)
        if (verts[v].members.subset_of(syl.members)) {
            syl_comp = comp[v];
            break;
        }
    if (syl_comp < 0) throw InternalError("Sylow subgroup contains no vertex");
    // setwise stabilizer; conjugation permutes whole components, which the
    // assertion below confirms vertex by vertex
    Bits h;
    for (int x = 0; x < g->n; x++) {
        int seen = -1;
        bool mixed = false;
        for (int v = 0; v < nv; v++) {
            if (comp[v] != syl_comp) continue;
            Bits img = conj_bits(*g, verts[v].members, x);
            auto it = vindex.find(img);
            if (it == vindex.end()) throw InternalError("conjugation left the vertex set");
            int c = comp[it->second];
            if (seen < 0)
                seen = c;
            else if (seen != c)
                mixed = true;
        }
        if (mixed) throw InternalError("conjugation tore a component apart");
        if (seen == syl_comp) h.set(x);
    }
    if (!is_closed_subset(*g, h)) throw InternalError("component stabilizer is not a subgroup");
    Subgroup hs{g, h, h.count()};
    if (!is_strongly_p_embedded(hs, p))
        throw InternalError("component stabilizer fails the strongly p-embedded definition");
    return SpeResult{true, hs};
}

Word express_word(GroupPtr g, const std::vector<int>& gens, int target) {
    if (target < 0 || target >= g->n) throw InternalError("express_word target out of range");
    std::vector<int> parent(g->n, -2), via(g->n, -1);
    parent[0] = -1;
    std::deque<int> bfs{0};
    while (!bfs.empty()) {
        int a = bfs.front();
        bfs.pop_front();
        if (a == target) break;
        for (size_t i = 0; i < gens.size(); i++) {
            int b = g->mul(a, gens[i]);
            if (parent[b] != -2) continue;
            parent[b] = a;
            via[b] = (int)i;
            bfs.push_back(b);
        }
    }
    if (parent[target] == -2)
        throw InternalError("element is not in the span of the generators");
    Word w;
    for (int a = target; parent[a] != -1; a = parent[a]) w.push_back(gens[via[a]]);
    std::reverse(w.begin(), w.end());
    return w;
}

} // namespace loc
