#pragma once

#include "dps/engine.hpp"
#include "dps/langlands.hpp"

#include <string>
#include <vector>

namespace dps {

// zeta([nu^-b rho0, nu^-a rho0]) |x| zeta(rho, x; sigma)
struct DPSParams {
    GroupFamily family = GroupFamily::SoOdd;
    CuspidalGL rho{"rho", Duality::SelfDual, false};
    CuspidalGL rho0{"rho0", Duality::SelfDual, false};
    bool same = false;
    HalfInt alpha, beta, a, b, x;
    std::string sigma = "sigma";

    DualCtx ctx() const { return DualCtx::for_family(family); }
    std::string str() const;
};

// Throws ParameterError unless the tuple lies in the constraint region.
void validate_params(const DPSParams& p);

struct NormalizedParams {
    DPSParams p;
    bool swapped = false;
    bool early_irreducible = false;
    std::string reason;
};

// (a,b) -> (-b,-a) with rho0 -> contragredient when -a > b; flags the
// irreducible shortcuts (rho0 not (essentially) self-dual, a - beta off-lattice).
NormalizedParams normalize_params(const DPSParams& p);

struct Verdict {
    bool irreducible = false;
    std::vector<LanglandsData> factors;  // empty when irreducible
    std::string case_id;
    std::string citation;
    std::string guard;

    std::size_t length() const { return irreducible ? 1 : factors.size(); }
};

// Decision table. Every legal tuple matches exactly one entry; a tuple matching
// none or several throws InvariantError.
Verdict classify(const DPSParams& p);

// Number of table entries whose guard holds (1 on the legal region).
int matching_cases(const NormalizedParams& np);

struct CaseInfo {
    std::string id;
    std::string citation;
};
const std::vector<CaseInfo>& case_table();

GWord dps_word(const DPSParams& p);   // normalized params expected
GWord dual_side(const DPSParams& p);  // delta([nu^a rho0~, nu^b rho0~]) |x| nu^x rho x ... x nu^alpha rho |x| sigma

}  // namespace dps
