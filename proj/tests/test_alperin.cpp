#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "loc/alperin.hpp"
#include "loc/builders.hpp"

#include <algorithm>
#include <set>

using namespace loc;

namespace {

const DeltaSpec kAll{};
const DeltaSpec kNontrivial{DeltaSpec::Kind::Nontrivial, {}};

GroupPtr s3xs3() {
    return perm_group("S3xS3", 6, {"(1 2)", "(1 2 3)", "(4 5)", "(4 5 6)"});
}

std::set<std::string> essential_labels(const Locality& loc) {
    std::set<std::string> out;
    for (const Subgroup& e : essentials(loc)) {
        std::vector<std::string> gens;
        for (int x : subgroup_generators(e)) gens.push_back(loc.ambient->label_of(x));
        std::string s = "{";
        for (size_t i = 0; i < gens.size(); i++) s += (i ? " " : "") + gens[i];
        out.insert(s + "}");
    }
    return out;
}

bool in_sub_list(const std::vector<Subgroup>& list, const Subgroup& q) {
    for (const Subgroup& e : list)
        if (e.members == q.members) return true;
    return false;
}

// Every element of the locality decomposes, the certificate passes the full
// re-check, and the inverse certificate certifies the inverse element.
void exercise_all(const Locality& loc) {
    Decomposer dec(loc);
    const auto& ess = dec.essential_list();
    for (int g = 0; g < loc.ambient->n; g++) {
        if (!loc.in_locality(g)) continue;
        CAPTURE(loc.ambient->label_of(g));
        Certificate c = dec.decompose(g);
        CertReport rep = verify_certificate(loc, c, ess);
        {
            INFO("first failure: "
                 << (rep.failures.empty() ? std::string("none") : rep.failures[0]));
            REQUIRE(rep.pass);
        }
        // factors carry exact domains and only essential subgroups or S
        for (const CertFactor& f : c.factors) {
            CHECK(loc.s_of(f.x) == f.q.members);
            bool essential_or_s =
                f.q.members == loc.S.members || in_sub_list(ess, f.q);
            CHECK(essential_or_s);
        }
        Certificate ic = invert_certificate(loc, c);
        CHECK(ic.target == loc.ambient->inv(g));
        CHECK(verify_certificate(loc, ic, ess).pass);
    }
}

} // namespace

TEST_CASE("essential subgroups of the standard examples") {
    // S4 at p=2: the Klein four group of double transpositions is the only
    // essential subgroup; its normalizer is all of S4 with quotient S3.
    {
        Locality loc = build_group_locality(builtin_group("S4"), 2, kAll);
        auto ess = essentials(loc);
        REQUIRE(ess.size() == 1);
        CHECK(ess[0].order == 4);
        const FiniteGroup& m = *loc.ambient;
        CHECK(ess[0].members.test(element_by_label(m, "(1 2)(3 4)")));
        CHECK(ess[0].members.test(element_by_label(m, "(1 3)(2 4)")));
        CHECK(ess[0].members.test(element_by_label(m, "(1 4)(2 3)")));
        CHECK(is_normal_in(ess[0], full_subgroup(loc.ambient)));
    }
    // same essential under the nontrivial-subgroups delta
    {
        Locality loc = build_group_locality(builtin_group("S4"), 2, kNontrivial);
        auto ess = essentials(loc);
        REQUIRE(ess.size() == 1);
        CHECK(ess[0].order == 4);
    }
    // S3 at p=2 with full delta: N_L(1)/1 = S3 has a strongly 2-embedded
    // subgroup (a self-normalizing C2 meeting its conjugates trivially), so
    // the trivial subgroup is essential.
    {
        Locality loc = build_group_locality(builtin_group("S3"), 2, kAll);
        auto ess = essentials(loc);
        REQUIRE(ess.size() == 1);
        CHECK(ess[0].order == 1);
    }
    // ... but with delta = nontrivial subgroups there is no candidate left:
    // the Sylow C2 is all of S.
    {
        Locality loc = build_group_locality(builtin_group("S3"), 2, kNontrivial);
        CHECK(essentials(loc).empty());
    }
    // D12 at p=2: only the center of the Sylow 2-subgroup survives.
    {
        Locality loc = build_group_locality(builtin_group("D12"), 2, kAll);
        auto ess = essentials(loc);
        REQUIRE(ess.size() == 1);
        CHECK(ess[0].order == 2);
        CHECK(is_normal_in(ess[0], full_subgroup(loc.ambient)));
    }
    // SL23 at p=2: the Sylow 2-subgroup Q8 is normal, so no proper candidate
    // has a strongly 2-embedded normalizer quotient.
    {
        Locality loc = build_group_locality(builtin_group("SL23"), 2, kAll);
        CHECK(essentials(loc).empty());
    }
    // A4 at p=2: Sylow = V4 is normal; same outcome.
    {
        Locality loc = build_group_locality(builtin_group("A4"), 2, kAll);
        CHECK(essentials(loc).empty());
    }
}

TEST_CASE("essential subgroups of S3xS3, full and restricted delta") {
    GroupPtr m = s3xs3();
    Locality all = build_group_locality(m, 2, kAll);
    // the two one-sided transposition subgroups; the diagonal C2 of S is not
    // essential (its locality normalizer is just S)
    CHECK(essential_labels(all) == std::set<std::string>{"{(1 2)}", "{(4 5)}"});
    Locality nt = build_group_locality(m, 2, kNontrivial);
    CHECK(essential_labels(nt) == essential_labels(all));
    // S itself is never reported
    for (const Subgroup& e : essentials(all)) CHECK(e.order < all.S.order);
}

TEST_CASE("decompose and verify every element of several localities") {
    exercise_all(build_group_locality(builtin_group("S4"), 2, kAll));
    exercise_all(build_group_locality(builtin_group("S4"), 2, kNontrivial));
    exercise_all(build_group_locality(builtin_group("S3"), 2, kAll));
    exercise_all(build_group_locality(builtin_group("D12"), 2, kAll));
    exercise_all(build_group_locality(builtin_group("SL23"), 2, kAll));
    exercise_all(build_group_locality(s3xs3(), 2, kAll));
    exercise_all(build_group_locality(s3xs3(), 2, kNontrivial));
    exercise_all(build_group_locality(builtin_group("S4"), 3, kAll));
}

TEST_CASE("certificate shapes match hand-computed expectations") {
    // In S4 every element has S_g equal to V4 or S, so every certificate has
    // exactly one factor; both V4 and S are normal, so no conjugation step is
    // needed and the factor element is g itself.
    {
        Locality loc = build_group_locality(builtin_group("S4"), 2, kAll);
        Decomposer dec(loc);
        const FiniteGroup& m = *loc.ambient;
        for (int g = 0; g < m.n; g++) {
            Certificate c = dec.decompose(g);
            REQUIRE(c.factors.size() == 1);
            CHECK(c.factors[0].x == g);
        }
        Certificate c = dec.decompose(element_by_label(m, "(1 2 3)"));
        CHECK(c.factors[0].q.order == 4); // the essential V4
        Certificate a = dec.decompose(element_by_label(m, "(1 2)"));
        CHECK(a.factors[0].q.members == loc.S.members); // atomic: (1 2) is in S
    }
    // In S3 with full delta, a 3-cycle decomposes through the essential
    // trivial subgroup.
    {
        Locality loc = build_group_locality(builtin_group("S3"), 2, kAll);
        Certificate c = decompose(loc, element_by_label(*loc.ambient, "(1 2 3)"));
        REQUIRE(c.factors.size() == 1);
        CHECK(c.factors[0].q.order == 1);
    }
    // In S3xS3 the element (1 2 3)(4 5 6) has trivial S_g, which is fully
    // normalized but not essential: the decomposition must pass through
    // normalizer generators, giving at least two factors.
    {
        Locality loc = build_group_locality(s3xs3(), 2, kAll);
        Decomposer dec(loc);
        const FiniteGroup& m = *loc.ambient;
        int g = element_by_label(m, "(1 2 3)(4 5 6)");
        CHECK(loc.s_of(g).count() == 1);
        Certificate c = dec.decompose(g);
        CHECK(c.factors.size() >= 2);
        bool saw_essential = false;
        for (const CertFactor& f : c.factors) {
            CHECK((f.q.order == 2 || f.q.members == loc.S.members));
            saw_essential = saw_essential || f.q.order == 2;
        }
        CHECK(saw_essential);
    }
    // Restricted delta on S3xS3: a one-sided 3-cycle has a one-sided C2
    // domain and certifies with a single essential factor.
    {
        Locality loc = build_group_locality(s3xs3(), 2, kNontrivial);
        Decomposer dec(loc);
        const FiniteGroup& m = *loc.ambient;
        Certificate c = dec.decompose(element_by_label(m, "(1 2 3)"));
        REQUIRE(c.factors.size() == 1);
        CHECK(c.factors[0].q.order == 2);
        CHECK(c.factors[0].q.members.test(element_by_label(m, "(4 5)")));
    }
}

TEST_CASE("decomposition is deterministic") {
    Locality loc = build_group_locality(s3xs3(), 2, kAll);
    Decomposer d1(loc), d2(loc);
    for (int g = 0; g < loc.ambient->n; g++) {
        Certificate a = d1.decompose(g);
        Certificate b = d2.decompose(g);
        Certificate a2 = d1.decompose(g); // memo path
        REQUIRE(a.factors.size() == b.factors.size());
        REQUIRE(a.factors.size() == a2.factors.size());
        for (size_t i = 0; i < a.factors.size(); i++) {
            CHECK(a.factors[i].x == b.factors[i].x);
            CHECK(a.factors[i].q.members == b.factors[i].q.members);
            CHECK(a.factors[i].x == a2.factors[i].x);
        }
    }
}

TEST_CASE("decompose rejects elements outside the locality") {
    Locality loc = build_group_locality(s3xs3(), 2, kNontrivial);
    int g = element_by_label(*loc.ambient, "(1 2 3)(4 5 6)");
    CHECK(!loc.in_locality(g));
    Decomposer dec(loc);
    CHECK_THROWS_AS(dec.decompose(g), DomainError);
    CHECK_THROWS_AS(dec.decompose(-1), DomainError);
    CHECK_THROWS_AS(dec.decompose(loc.ambient->n), DomainError);
}

TEST_CASE("verify_certificate flags tampered certificates") {
    Locality loc = build_group_locality(builtin_group("S4"), 2, kAll);
    Decomposer dec(loc);
    auto ess = dec.essential_list();
    const FiniteGroup& m = *loc.ambient;
    int g = element_by_label(m, "(1 2 3)");
    Certificate good = dec.decompose(g);
    REQUIRE(verify_certificate(loc, good, ess).pass);

    // wrong target: product no longer matches
    {
        Certificate bad = good;
        bad.target = element_by_label(m, "(1 3 2)");
        CertReport rep = verify_certificate(loc, bad, ess);
        CHECK(!rep.pass);
        CHECK(!rep.failures.empty());
    }
    // wrong element in a factor
    {
        Certificate bad = good;
        bad.factors[0].x = element_by_label(m, "(1 2)");
        CHECK(!verify_certificate(loc, bad, ess).pass);
    }
    // wrong subgroup in a factor: not essential and not S
    {
        Certificate bad = good;
        bad.factors[0].q = generated_subgroup(loc.ambient, {element_by_label(m, "(1 2)")});
        CertReport rep = verify_certificate(loc, bad, ess);
        CHECK(!rep.pass);
        bool saw = false;
        for (const std::string& f : rep.failures)
            saw = saw || f.find("neither essential nor S") != std::string::npos;
        CHECK(saw);
    }
    // dropped factor: domains and product both break
    {
        Locality big = build_group_locality(s3xs3(), 2, kAll);
        Decomposer dbig(big);
        int gg = element_by_label(*big.ambient, "(1 2 3)(4 5 6)");
        Certificate full = dbig.decompose(gg);
        REQUIRE(full.factors.size() >= 2);
        Certificate bad = full;
        bad.factors.pop_back();
        CHECK(!verify_certificate(big, bad, dbig.essential_list()).pass);
    }
    // element outside the locality in a factor
    {
        Locality nt = build_group_locality(s3xs3(), 2, kNontrivial);
        Decomposer dnt(nt);
        Certificate bad = dnt.decompose(element_by_label(*nt.ambient, "(1 2 3)"));
        bad.factors[0].x = element_by_label(*nt.ambient, "(1 2 3)(4 5 6)");
        CHECK(!verify_certificate(nt, bad, dnt.essential_list()).pass);
    }
}
