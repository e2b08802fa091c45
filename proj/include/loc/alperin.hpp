#pragma once
#include "loc/fusion.hpp"
#include "loc/pembed.hpp"
#include <map>
#include <vector>

namespace loc {

// One factor of a decomposition certificate: an element x normalizing q with
// S_x equal to q on the nose.
struct CertFactor {
    Subgroup q;
    int x;
};

struct Certificate {
    int target = 0;
    std::vector<CertFactor> factors;
};

// Members of delta other than S that are fully normalized and whose
// normalizer quotient N_L(P)/P contains a strongly p-embedded subgroup.
// Sorted by (order, member set). The fast detector is cross-checked against
// the brute-force scan on every quotient.
std::vector<Subgroup> essentials(const Locality& loc);

struct CertReport {
    bool pass = false;
    std::vector<std::string> failures;
};

// Full re-check of a certificate: each factor (q, x) needs x in N_L(q),
// S_x = q exactly, and q essential or q = S; the factor word must lie in the
// domain, multiply to the target, and satisfy S_word = S_target exactly.
CertReport verify_certificate(const Locality& loc, const Certificate& cert,
                              const std::vector<Subgroup>& ess);

// (q, x) factors become (q, x^-1) in reverse order; certifies the inverse.
Certificate invert_certificate(const Locality& loc, const Certificate& cert);

// Constructive decomposition of locality elements into certified words
// through essential normalizers. Results are memoized and every certificate
// is re-verified before it is returned.
class Decomposer {
  public:
    explicit Decomposer(Locality loc);
    const Locality& locality() const { return loc_; }
    const std::vector<Subgroup>& essential_list() const { return ess_; }
    Certificate decompose(int g);

  private:
    Certificate decompose_impl(int g, int depth);
    const Certificate& memoized(int g, int depth);

    Locality loc_;
    std::vector<Subgroup> ess_;
    std::map<int, Certificate> memo_;
};

Certificate decompose(const Locality& loc, int g);

} // namespace loc
