#include "loc/fusion.hpp"
#include <algorithm>
#include <map>

namespace loc {

std::vector<DeltaConjugate> delta_conjugates(const Locality& loc, const Subgroup& p) {
    if (!loc.delta_contains(p.members)) throw DomainError("subgroup is not in delta");
    const FiniteGroup& m = *loc.ambient;
    std::vector<int> lelems;
    loc.elements.for_each([&](int g) { lelems.push_back(g); });
    std::map<std::array<uint64_t, 4>, int> first;
    for (int g : lelems) {
        if (!p.members.subset_of(loc.s_of(g))) continue;
        Bits q = conj_bits(m, p.members, g);
        first.emplace(q.w, g);
    }
    // audit: one more conjugation step must stay inside the collected set
    for (const auto& [qw, wit] : first) {
        (void)wit;
        Bits q;
        q.w = qw;
        for (int g : lelems) {
            if (!q.subset_of(loc.s_of(g))) continue;
            if (!first.count(conj_bits(m, q, g).w))
                throw InternalError("single conjugation steps missed part of the orbit");
        }
    }
    std::vector<DeltaConjugate> out;
    out.reserve(first.size());
    for (const auto& [qw, wit] : first) {
        Bits q;
        q.w = qw;
        out.push_back(DeltaConjugate{Subgroup{loc.ambient, q, p.order}, wit});
    }
    std::sort(out.begin(), out.end(), [](const DeltaConjugate& a, const DeltaConjugate& b) {
        return subgroup_cmp(a.q, b.q) < 0;
    });
    return out;
}

bool is_fully_normalized(const Locality& loc, const Subgroup& p) {
    int mine = normalizer(loc.S, p).order;
    for (const auto& dc : delta_conjugates(loc, p))
        if (normalizer(loc.S, dc.q).order > mine) return false;
    return true;
}

FnRep fully_normalized_rep(const Locality& loc, const Subgroup& p) {
    const FiniteGroup& m = *loc.ambient;
    auto orbit = delta_conjugates(loc, p);
    int best = -1, best_ns = -1;
    for (size_t i = 0; i < orbit.size(); i++) {
        int ns = normalizer(loc.S, orbit[i].q).order;
        if (ns > best_ns) { // first maximum = smallest member set among maxima
            best_ns = ns;
            best = (int)i;
        }
    }
    const Subgroup& rep = orbit[best].q;
    int f = orbit[best].witness;
    Subgroup nsp = normalizer(loc.S, p);
    Subgroup nspf{loc.ambient, conj_bits(m, nsp.members, f), nsp.order};
    Subgroup nlq = normalizer_in_locality(loc, rep);
    Subgroup nsq = normalizer(loc.S, rep);
    if (!nspf.members.subset_of(nlq.members))
        throw InternalError("conjugated normalizer left the locality normalizer");
    // rep is fully normalized, so N_S(rep) is a Sylow p-subgroup of N_L(rep)
    int nconj = sylow_conjugator(nlq, nspf, nsq);
    int h = m.mul(f, nconj);
    if (!loc.in_locality(h)) throw InternalError("representative conjugator left the locality");
    if (!p.members.subset_of(loc.s_of(h)))
        throw InternalError("representative conjugator is not defined on p");
    if (!(conj_bits(m, p.members, h) == rep.members))
        throw InternalError("representative conjugator misses the representative");
    if (!conj_bits(m, nsp.members, h).subset_of(nsq.members))
        throw InternalError("representative conjugator loses normalizer control");
    return FnRep{rep, h};
}

std::vector<FusionMorphism> hom_F(const Locality& loc, const Subgroup& p, const Subgroup& q) {
    const FiniteGroup& m = *loc.ambient;
    if (!p.members.subset_of(loc.S.members) || !q.members.subset_of(loc.S.members))
        throw DomainError("fusion morphisms live between subgroups of S");
    if (!is_closed_subset(m, p.members) || !is_closed_subset(m, q.members))
        throw DomainError("fusion morphisms need subgroups as endpoints");
    std::vector<int> lelems;
    loc.elements.for_each([&](int g) { lelems.push_back(g); });

    struct Node {
        std::vector<int> images;
        Bits image_set;
        Word witness;
    };
    std::map<std::vector<int>, int> seen;
    std::vector<Node> nodes;
    Node id;
    id.images.assign(m.n, -1);
    p.members.for_each([&](int x) { id.images[x] = x; });
    id.image_set = p.members;
    seen[id.images] = 0;
    nodes.push_back(std::move(id));
    for (size_t qi = 0; qi < nodes.size(); qi++) {
        Node cur = nodes[qi];
        for (int g : lelems) {
            if (!cur.image_set.subset_of(loc.s_of(g))) continue;
            Node nxt;
            nxt.images.assign(m.n, -1);
            p.members.for_each([&](int x) { nxt.images[x] = m.conj(cur.images[x], g); });
            if (seen.count(nxt.images)) continue;
            nxt.image_set = conj_bits(m, cur.image_set, g);
            nxt.witness = cur.witness;
            nxt.witness.push_back(g);
            seen[nxt.images] = (int)nodes.size();
            nodes.push_back(std::move(nxt));
            if (nodes.size() > 100000) throw SpecError("morphism set too large");
        }
    }
    std::vector<FusionMorphism> out;
    for (const Node& nd : nodes)
        if (nd.image_set.subset_of(q.members))
            out.push_back(FusionMorphism{p, nd.images, nd.witness});
    return out;
}

bool is_centric(const Locality& loc, const Subgroup& p) {
    for (const auto& dc : delta_conjugates(loc, p)) {
        Subgroup cs = centralizer(loc.S, dc.q);
        if (!cs.members.subset_of(dc.q.members)) return false;
    }
    return true;
}

int apply_morphism(const FusionMorphism& f, int x) {
    if (x < 0 || x >= (int)f.images.size() || f.images[x] < 0)
        throw DomainError("element is outside the domain of the morphism");
    return f.images[x];
}

} // namespace loc
