#include "loc/locality.hpp"
#include <algorithm>
#include <functional>
#include <set>

namespace loc {

static bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; d++)
        if (p % d == 0) return false;
    return true;
}

static Bits s_of_impl(const FiniteGroup& m, const Bits& s, int g) {
    Bits r;
    s.for_each([&](int x) {
        if (s.test(m.conj(x, g))) r.set(x);
    });
    return r;
}

Bits Locality::s_of(int g) const { return s_of_impl(*ambient, S.members, g); }

bool Locality::delta_contains(const Bits& members) const {
    int order = members.count();
    int lo = 0, hi = (int)delta.size();
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        const Subgroup& d = delta[mid];
        int c = d.order != order ? (d.order < order ? -1 : 1) : Bits::cmp(d.members, members);
        if (c == 0) return true;
        if (c < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return false;
}

Locality build_group_locality(GroupPtr m, int p, const DeltaSpec& spec,
                              const std::optional<std::vector<int>>& s_gens) {
    if (!is_prime(p)) throw SpecError("p must be prime, got " + std::to_string(p));
    if (m->n % p != 0)
        throw SpecError("p = " + std::to_string(p) + " does not divide the group order " +
                        std::to_string(m->n));
    Subgroup whole = full_subgroup(m);
    Subgroup s;
    if (s_gens) {
        s = generated_subgroup(m, *s_gens);
        if (!is_p_subgroup(s, p) || s.order != p_part(m->n, p))
            throw SpecError("provided subgroup is not a Sylow p-subgroup");
    } else {
        s = sylow(whole, p);
    }
    std::vector<Subgroup> subs_of_s = all_subgroups_in(s);
    auto less = [](const Bits& a, const Bits& b) { return Bits::cmp(a, b) < 0; };
    std::set<Bits, decltype(less)> delta_set(less);
    switch (spec.kind) {
    case DeltaSpec::Kind::All:
        for (const Subgroup& q : subs_of_s) delta_set.insert(q.members);
        break;
    case DeltaSpec::Kind::Nontrivial:
        for (const Subgroup& q : subs_of_s)
            if (q.order > 1) delta_set.insert(q.members);
        break;
    case DeltaSpec::Kind::OvergroupsOf:
        for (const auto& seed : spec.seeds) {
            Subgroup q = generated_subgroup(m, seed);
            if (!contains(s, q)) throw SpecError("delta seed is not contained in S");
            for (const Subgroup& r : subs_of_s)
                if (q.members.subset_of(r.members)) delta_set.insert(r.members);
        }
        break;
    case DeltaSpec::Kind::Explicit:
        for (const auto& seed : spec.seeds) {
            Subgroup q = generated_subgroup(m, seed);
            if (!contains(s, q)) throw SpecError("delta seed is not contained in S");
            delta_set.insert(q.members);
        }
        break;
    }
    if (delta_set.empty()) throw SpecError("delta is empty");

    Bits lset;
    bool changed = true;
    while (changed) {
        changed = false;
        // close under overgroups inside S
        for (const Subgroup& q : subs_of_s) {
            if (delta_set.count(q.members)) continue;
            for (const Bits& d : delta_set) {
                if (d.subset_of(q.members)) {
                    delta_set.insert(q.members);
                    changed = true;
                    break;
                }
            }
        }
        // recompute the element set
        lset = Bits{};
        for (int g = 0; g < m->n; g++)
            if (delta_set.count(s_of_impl(*m, s.members, g))) lset.set(g);
        // close under conjugation by locality elements
        std::vector<Bits> cur(delta_set.begin(), delta_set.end());
        Bits snapshot = lset;
        snapshot.for_each([&](int g) {
            Bits sg = s_of_impl(*m, s.members, g);
            for (const Bits& d : cur) {
                if (!d.subset_of(sg)) continue;
                Bits dg = conj_bits(*m, d, g);
                if (delta_set.insert(dg).second) changed = true;
            }
        });
    }

    Locality loc;
    loc.ambient = m;
    loc.p = p;
    loc.S = s;
    loc.elements = lset;
    for (const Bits& b : delta_set) loc.delta.push_back(Subgroup{m, b, b.count()});
    std::sort(loc.delta.begin(), loc.delta.end(),
              [](const Subgroup& a, const Subgroup& b) { return subgroup_cmp(a, b) < 0; });
    return loc;
}

Bits s_of_word(const Locality& loc, const Word& w) {
    const FiniteGroup& m = *loc.ambient;
    for (int g : w) {
        if (g < 0 || g >= m.n) throw DomainError("word letter out of range");
        if (!loc.elements.test(g))
            throw DomainError("word letter not in the locality: " + m.label_of(g));
    }
    Bits t = loc.S.members;
    for (int i = (int)w.size() - 1; i >= 0; i--) {
        Bits t2;
        loc.S.members.for_each([&](int x) {
            if (t.test(m.conj(x, w[i]))) t2.set(x);
        });
        t = t2;
    }
    return t;
}

bool in_domain(const Locality& loc, const Word& w) {
    return loc.delta_contains(s_of_word(loc, w));
}

int product(const Locality& loc, const Word& w) {
    if (!in_domain(loc, w)) throw DomainError("word is not in the domain: " + word_label(loc, w));
    int x = 0;
    for (int g : w) x = loc.ambient->mul(x, g);
    return x;
}

Subgroup normalizer_in_locality(const Locality& loc, const Subgroup& p) {
    if (!loc.delta_contains(p.members)) throw DomainError("subgroup is not in delta");
    Subgroup nm = normalizer(full_subgroup(loc.ambient), p);
    Bits b = nm.members & loc.elements;
    if (!is_closed_subset(*loc.ambient, b))
        throw InternalError("normalizer inside the locality is not closed");
    return Subgroup{loc.ambient, b, b.count()};
}

GroupHom conjugation_map(const Locality& loc, const Subgroup& p, int g) {
    const FiniteGroup& m = *loc.ambient;
    if (g < 0 || g >= m.n || !loc.in_locality(g))
        throw DomainError("element not in the locality");
    if (!loc.delta_contains(p.members)) throw DomainError("subgroup is not in delta");
    if (!p.members.subset_of(loc.s_of(g)))
        throw DomainError("subgroup does not conjugate into S under this element");
    Subgroup np = normalizer_in_locality(loc, p);
    Bits pg_bits = conj_bits(m, p.members, g);
    if (!loc.delta_contains(pg_bits))
        throw InternalError("conjugate of a delta member escaped delta");
    Subgroup pg{loc.ambient, pg_bits, pg_bits.count()};
    Subgroup npg = normalizer_in_locality(loc, pg);
    GroupHom f{np, loc.ambient, std::vector<int>(m.n, -1)};
    bool ok = true;
    np.members.for_each([&](int x) {
        int y = m.conj(x, g);
        f.images[x] = y;
        if (!npg.members.test(y)) ok = false;
    });
    if (!ok) throw InternalError("conjugation did not land in the target normalizer");
    if (!is_homomorphism(f)) throw InternalError("conjugation map is not a homomorphism");
    return f;
}

Locality rebind_ambient(const Locality& loc, GroupPtr g) {
    if (g->n != loc.ambient->n) throw SpecError("rebinding requires equal element counts");
    Locality r = loc;
    r.ambient = g;
    r.S.parent = g;
    for (auto& d : r.delta) d.parent = g;
    return r;
}

std::string word_label(const Locality& loc, const Word& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); i++) {
        if (i) s += ", ";
        s += loc.ambient->label_of(w[i]);
    }
    return s + ")";
}

AxiomReport verify_axioms(const Locality& loc, int max_len) {
    AxiomReport rep;
    const FiniteGroup& m = *loc.ambient;
    const size_t max_violations = 50;
    auto violate = [&](const std::string& check, const std::string& witness,
                       const std::string& detail) {
        if (rep.violations.size() < max_violations)
            rep.violations.push_back(AxiomViolation{check, witness, detail});
    };
    auto full = [&] {
        rep.pass = rep.violations.empty();
        return rep;
    };

    // structural sanity first: a damaged table must be reported, not crash
    if (m.n <= 0 || (int)m.table.size() != m.n * m.n) {
        violate("table-shape", "-", "multiplication table size mismatch");
        return full();
    }
    for (int i = 0; i < m.n * m.n; i++)
        if (m.table[i] < 0 || m.table[i] >= m.n) {
            violate("table-shape", "-", "multiplication table entry out of range");
            return full();
        }
    if ((int)m.inverse.size() != m.n) {
        violate("inverse-table", "-", "inverse table size mismatch");
        return full();
    }
    for (int a = 0; a < m.n; a++)
        if (m.inverse[a] < 0 || m.inverse[a] >= m.n) {
            violate("inverse-table", m.label_of(a), "inverse entry out of range");
            return full();
        }

    // unit: the identity belongs to L and its domain group is S itself
    if (!loc.elements.test(0))
        violate("unit", "e", "identity is not in the locality");
    if (!(loc.s_of(0) == loc.S.members))
        violate("unit", "e", "domain of the identity differs from S");
    if (!loc.delta_contains(loc.S.members))
        violate("delta-contains-S", "S", "S itself is missing from delta");

    // membership: L must be exactly the elements whose domain group lies in delta,
    // and every domain group must actually be a subgroup
    for (int g = 0; g < m.n; g++) {
        Bits sg = loc.s_of(g);
        bool should = loc.delta_contains(sg);
        if (should != loc.elements.test(g))
            violate("membership", m.label_of(g),
                    should ? "element missing from the locality" : "element wrongly included");
        if (loc.elements.test(g) && !is_closed_subset(m, sg))
            violate("domain-subgroup", m.label_of(g), "S_g is not a subgroup");
    }

    // inverses: two-sided, stay in L, and S_{g^-1} = (S_g)^g
    loc.elements.for_each([&](int g) {
        int gi = m.inverse[g];
        if (m.mul(g, gi) != 0 || m.mul(gi, g) != 0) {
            violate("inverse", m.label_of(g), "inverse entry is not a two-sided inverse");
            return;
        }
        if (!loc.elements.test(gi)) {
            violate("inverse", m.label_of(g), "inverse is not in the locality");
            return;
        }
        Bits lhs = loc.s_of(gi);
        Bits rhs = conj_bits(m, loc.s_of(g), g);
        if (!(lhs == rhs))
            violate("inverse-domain", m.label_of(g),
                    "domain of the inverse differs from the conjugated domain");
    });

    // delta members are subgroups of S; delta is closed under overgroups and
    // conjugation
    std::vector<Subgroup> subs_of_s = all_subgroups_in(loc.S);
    for (const Subgroup& d : loc.delta) {
        if (!d.members.subset_of(loc.S.members))
            violate("delta-member", "-", "delta member is not contained in S");
        if (!is_closed_subset(m, d.members))
            violate("delta-member", "-", "delta member is not a subgroup");
    }
    for (const Subgroup& q : subs_of_s) {
        if (loc.delta_contains(q.members)) continue;
        for (const Subgroup& d : loc.delta)
            if (d.members.subset_of(q.members)) {
                violate("delta-overgroup-closure", "-",
                        "an overgroup of a delta member is missing from delta");
                break;
            }
    }
    loc.elements.for_each([&](int g) {
        Bits sg = loc.s_of(g);
        for (const Subgroup& d : loc.delta) {
            if (!d.members.subset_of(sg)) continue;
            if (!loc.delta_contains(conj_bits(m, d.members, g)))
                violate("delta-conjugation-closure", m.label_of(g),
                        "conjugate of a delta member is missing from delta");
        }
    });

    // S is maximal among p-subgroups contained in L
    for (const Subgroup& t : all_subgroups(loc.ambient)) {
        if (!is_p_power(t.order, loc.p)) continue;
        if (!t.members.subset_of(loc.elements)) continue;
        if (loc.S.members.subset_of(t.members) && t.order > loc.S.order)
            violate("sylow-maximality", "-",
                    "a p-subgroup inside the locality properly contains S");
    }

    // word axioms over all domain words up to max_len, built by prepending
    // letters (so the running S_w can be updated in one sweep)
    std::vector<int> lelems;
    loc.elements.for_each([&](int g) { lelems.push_back(g); });

    auto fold_product = [&](const Word& w) {
        int x = 0;
        for (int g : w) x = m.mul(x, g);
        return x;
    };
    auto word_in_delta = [&](const Word& w) { return loc.delta_contains(s_of_word(loc, w)); };

    auto check_word = [&](const Word& w, const Bits& sw) {
        int prod = fold_product(w);
        if (!loc.elements.test(prod))
            violate("product-membership", word_label(loc, w), "product is not in the locality");
        else if (!sw.subset_of(loc.s_of(prod)))
            violate("product-domain", word_label(loc, w),
                    "S_w is not contained in the domain of the product");
        // inversion
        Word winv(w.rbegin(), w.rend());
        for (int& g : winv) g = m.inverse[g];
        if (!word_in_delta(winv))
            violate("inversion-domain", word_label(loc, w), "inverted word left the domain");
        else if (fold_product(winv) != m.inverse[prod])
            violate("inversion-product", word_label(loc, w),
                    "product of the inverted word is not the inverse of the product");
        // every contiguous subword stays in the domain; contracting it
        // preserves domain membership and the product
        int k = (int)w.size();
        for (int i = 0; i < k; i++) {
            for (int j = i + 1; j <= k; j++) {
                Word sub(w.begin() + i, w.begin() + j);
                if (!word_in_delta(sub)) {
                    violate("subword-domain", word_label(loc, w),
                            "subword " + word_label(loc, sub) + " left the domain");
                    continue;
                }
                if (j - i < 2 || k == 1) continue;
                Word spliced(w.begin(), w.begin() + i);
                spliced.push_back(fold_product(sub));
                spliced.insert(spliced.end(), w.begin() + j, w.end());
                if (!word_in_delta(spliced))
                    violate("splice-domain", word_label(loc, w),
                            "contracted word " + word_label(loc, spliced) + " left the domain");
                else if (fold_product(spliced) != prod)
                    violate("splice-product", word_label(loc, w),
                            "contracting " + word_label(loc, sub) + " changed the product");
            }
        }
    };

    // rev holds the word back to front; prepending a letter is one sweep over S
    Word rev;
    std::function<void(const Bits&)> grow = [&](const Bits& sw) {
        if (rep.violations.size() >= max_violations) return;
        if ((int)rev.size() >= max_len) return;
        for (int g : lelems) {
            Bits s2;
            loc.S.members.for_each([&](int x) {
                if (sw.test(m.conj(x, g))) s2.set(x);
            });
            if (!loc.delta_contains(s2)) continue; // no extension can re-enter the domain
            rev.push_back(g);
            Word w(rev.rbegin(), rev.rend());
            rep.words_checked++;
            check_word(w, s2);
            grow(s2);
            rev.pop_back();
            if (rep.violations.size() >= max_violations) return;
        }
    };
    grow(loc.S.members);

    return full();
}

} // namespace loc
