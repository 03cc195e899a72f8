#pragma once

#include "dps/classifier.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dps {

enum class ClaimKind { MultiplicityEq, MultiplicityAbsence, LeadingTermPresent, DualPairing, HypothesisCheck };
enum class ClaimStatus { Pass, Fail, Assumed };

std::string to_string(ClaimKind k);
std::string to_string(ClaimStatus s);

struct ClaimOutcome {
    ClaimStatus status = ClaimStatus::Fail;
    std::string expected;
    std::string actual;
    std::string diff;  // empty unless failed
};

struct Claim {
    std::string id;
    std::string citation;  // case conditions and the statement checked
    ClaimKind kind = ClaimKind::MultiplicityEq;
    GroupFamily family = GroupFamily::SoOdd;
    std::string statement;  // what is computed, at standard-module level
    std::string downgrade;  // how the irreducible-level claim was reduced, if it was
    std::optional<std::string> imported;  // set => reported as assumed, never checked
    std::function<ClaimOutcome()> check;
};

const std::vector<Claim>& claim_registry();
ClaimOutcome verify_claim(const Claim& c);

struct ImportedFact {
    std::string id;
    std::string source;
    std::string statement;
};
const std::vector<ImportedFact>& imported_facts();

// Multiset of (cuspidal symbol, exponent) with each pair identified with its
// contragredient (rho, e) ~ (dual rho, -e).
using Support = std::map<std::pair<CuspidalGL, HalfInt>, int>;
Support folded_support(const GWord& w, const DualCtx& ctx);
Support folded_support(const LanglandsData& d, const DualCtx& ctx);

struct FactorCheck {
    std::string factor;
    bool balanced = false;
    bool flag_registered = false;
    Coef leading_mult = 0;  // meaningful only when flag_registered
};

struct FactorListReport {
    DPSParams params;
    Verdict verdict;
    bool size_ok = false;
    bool distinct = false;
    bool balanced = false;
    bool leading_ok = false;
    std::vector<FactorCheck> factors;
    std::vector<std::string> problems;

    bool ok() const { return size_ok && distinct && balanced && leading_ok; }
};

FactorListReport verify_factor_list(const DPSParams& p);
// Same checks on a caller-supplied verdict (used by mutation tests).
FactorListReport verify_factor_list(const DPSParams& p, const Verdict& v);

enum class RhoMode { Same, DistinctSelfDual, DistinctGeneric };

struct GridSpec {
    std::vector<GroupFamily> families{GroupFamily::SpEven, GroupFamily::SoOdd, GroupFamily::GSpinOdd};
    std::vector<RhoMode> modes{RhoMode::Same, RhoMode::DistinctSelfDual, RhoMode::DistinctGeneric};
    std::vector<HalfInt> alphas;  // each > 0
    std::vector<HalfInt> betas;   // each >= 0, distinct modes only
    HalfInt a_min = -3, a_max = 3, b_max = 4;
    int x_steps = 3;  // x in alpha, alpha+1, ..., alpha+x_steps

    static GridSpec acceptance();
    static GridSpec small();
};

GridSpec parse_grid(const std::string& name);  // "default" (= "acceptance") | "acceptance" | "small"
std::vector<DPSParams> grid(const GridSpec& g);

// Symbols used by the grid and the claim registry for a given family.
CuspidalGL cast_rho(GroupFamily f);
CuspidalGL cast_rho0(GroupFamily f, RhoMode m);

}  // namespace dps
