#include "loc/alperin.hpp"
#include <algorithm>

namespace loc {

std::vector<Subgroup> essentials(const Locality& loc) {
    std::vector<Subgroup> out;
    for (const Subgroup& p : loc.delta) {
        if (p.members == loc.S.members) continue;
        if (!is_fully_normalized(loc, p)) continue;
        Subgroup nl = normalizer_in_locality(loc, p);
        Quotient q = quotient(nl, p);
        SpeResult fast = strongly_p_embedded(q.group, loc.p);
        SpeResult brute = strongly_p_embedded_bruteforce(q.group, loc.p);
        if (fast.exists != brute.exists)
            throw InternalError("strongly p-embedded detectors disagree on a quotient");
        if (fast.exists) out.push_back(p);
    }
    return out; // delta is sorted, so this is too
}

static bool in_list(const std::vector<Subgroup>& ess, const Bits& b) {
    for (const Subgroup& e : ess)
        if (e.members == b) return true;
    return false;
}

CertReport verify_certificate(const Locality& loc, const Certificate& cert,
                              const std::vector<Subgroup>& ess) {
    CertReport rep;
    const FiniteGroup& m = *loc.ambient;
    auto fail = [&](const std::string& s) { rep.failures.push_back(s); };
    if (cert.target < 0 || cert.target >= m.n) {
        fail("target element index out of range");
        return rep;
    }
    if (!loc.in_locality(cert.target)) fail("target is not in the locality");
    Word w;
    bool letters_ok = true;
    for (size_t i = 0; i < cert.factors.size(); i++) {
        const CertFactor& f = cert.factors[i];
        std::string tag = "factor " + std::to_string(i);
        if (!loc.delta_contains(f.q.members)) fail(tag + ": subgroup is not in delta");
        if (!(f.q.members == loc.S.members) && !in_list(ess, f.q.members))
            fail(tag + ": subgroup is neither essential nor S");
        if (f.x < 0 || f.x >= m.n || !loc.in_locality(f.x)) {
            fail(tag + ": element is not in the locality");
            letters_ok = false;
            continue;
        }
        if (!(loc.s_of(f.x) == f.q.members))
            fail(tag + ": S_x differs from the declared subgroup");
        if (!(conj_bits(m, f.q.members, f.x) == f.q.members))
            fail(tag + ": element does not normalize the subgroup");
        w.push_back(f.x);
    }
    if (letters_ok && loc.in_locality(cert.target)) {
        Bits sw = s_of_word(loc, w);
        if (!loc.delta_contains(sw)) fail("factor word is not in the domain");
        if (!(sw == loc.s_of(cert.target)))
            fail("factor word domain differs from the target domain");
        int prod = 0;
        for (int x : w) prod = m.mul(prod, x);
        if (prod != cert.target) fail("factor word product differs from the target");
    }
    rep.pass = rep.failures.empty();
    return rep;
}

Certificate invert_certificate(const Locality& loc, const Certificate& cert) {
    const FiniteGroup& m = *loc.ambient;
    Certificate inv;
    inv.target = m.inv(cert.target);
    for (auto it = cert.factors.rbegin(); it != cert.factors.rend(); ++it)
        inv.factors.push_back(CertFactor{it->q, m.inv(it->x)});
    return inv;
}

Decomposer::Decomposer(Locality loc) : loc_(std::move(loc)), ess_(essentials(loc_)) {}

Certificate Decomposer::decompose(int g) {
    if (g < 0 || g >= loc_.ambient->n || !loc_.in_locality(g))
        throw DomainError("element is not in the locality");
    return memoized(g, 0);
}

const Certificate& Decomposer::memoized(int g, int depth) {
    auto it = memo_.find(g);
    if (it != memo_.end()) return it->second;
    Certificate c = decompose_impl(g, depth);
    CertReport rep = verify_certificate(loc_, c, ess_);
    if (!rep.pass)
        throw InternalError("constructed certificate failed verification: " + rep.failures[0]);
    return memo_.emplace(g, std::move(c)).first->second;
}

Certificate Decomposer::decompose_impl(int g, int depth) {
    const FiniteGroup& m = *loc_.ambient;
    if (depth > 64) throw InternalError("decomposition recursion exceeded its depth bound");
    Bits sg = loc_.s_of(g);
    int sg_order = sg.count();
    Certificate cert;
    cert.target = g;
    if (sg == loc_.S.members) { // atomic: g normalizes S
        cert.factors.push_back(CertFactor{loc_.S, g});
        return cert;
    }
    Subgroup p{loc_.ambient, sg, sg_order};
    FnRep r1 = fully_normalized_rep(loc_, p);
    Subgroup pg{loc_.ambient, conj_bits(m, sg, g), sg_order};
    FnRep r2 = fully_normalized_rep(loc_, pg);
    // both sides land on the same deterministic representative
    if (!(r1.rep.members == r2.rep.members))
        throw InternalError("the two conjugate representatives disagree");
    const Subgroup& q = r1.rep;
    int h = r1.h, h2 = r2.h;
    int gp = m.mul(m.mul(m.inv(h), g), h2);
    if (!loc_.in_locality(gp)) throw InternalError("conjugated element left the locality");
    Bits sgp = loc_.s_of(gp);
    if (!q.members.subset_of(sgp))
        throw InternalError("conjugated element is not defined on the representative");
    // strict growth guarantees termination of every recursive branch
    auto require_growth = [&](int y) {
        if (loc_.s_of(y).count() <= sg_order)
            throw InternalError("decomposition step failed to grow the domain");
    };
    auto splice = [&](Certificate& into, const Certificate& part) {
        into.factors.insert(into.factors.end(), part.factors.begin(), part.factors.end());
    };
    if (h != 0) require_growth(h);
    if (h2 != 0) require_growth(h2);
    if (h != 0) splice(cert, memoized(h, depth + 1));
    if ((int)sgp.count() > q.order) {
        require_growth(gp);
        splice(cert, memoized(gp, depth + 1));
    } else if (q.members == loc_.S.members || in_list(ess_, q.members)) {
        cert.factors.push_back(CertFactor{q, gp});
    } else {
        // q is fully normalized but not essential: its locality normalizer is
        // generated by elements whose domains strictly exceed q
        Subgroup n = normalizer_in_locality(loc_, q);
        Subgroup nsq = normalizer(loc_.S, q);
        std::vector<int> xs;
        n.members.for_each([&](int x) {
            Bits both = nsq.members & conj_bits(m, nsq.members, m.inv(x));
            if (both.count() > q.order) xs.push_back(x);
        });
        Word letters = express_word(loc_.ambient, xs, gp);
        for (int x : letters) {
            require_growth(x);
            splice(cert, memoized(x, depth + 1));
        }
    }
    if (h2 != 0) splice(cert, invert_certificate(loc_, memoized(h2, depth + 1)));
    return cert;
}

Certificate decompose(const Locality& loc, int g) {
    Decomposer d(loc);
    return d.decompose(g);
}

} // namespace loc
