#pragma once

#include "dps/halfint.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace dps {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Duality { SelfDual, EssSelfDual, Generic };

enum class GroupFamily { SpEven, SoOdd, GSpinOdd };

std::string to_string(Duality d);
std::string to_string(GroupFamily f);
Duality parse_duality(const std::string& s);
GroupFamily parse_family(const std::string& s);

// A cuspidal symbol of R(GL). `dual` marks the contragredient (twisted by omega
// in the GSpin family) of the declared symbol `label`.
struct CuspidalGL {
    std::string label;
    Duality duality = Duality::SelfDual;
    bool dual = false;

    std::string name() const { return dual ? label + "~" : label; }

    // identity is (label, dual); the duality kind is a declared property
    bool operator==(const CuspidalGL& o) const { return label == o.label && dual == o.dual; }
    std::strong_ordering operator<=>(const CuspidalGL& o) const {
        if (auto c = label <=> o.label; c != 0) return c;
        return dual <=> o.dual;
    }
};

// Contragredient of a symbol; `twisted` means the omega twist is applied
// (GSpin family). Fixed points: self-dual untwisted, essentially self-dual twisted.
CuspidalGL dual_symbol(const CuspidalGL& r, bool twisted);

// Checked form: omega may only be supplied in the GSpin family.
CuspidalGL contragredient_symbol(const CuspidalGL& r, GroupFamily family,
                                 const std::optional<std::string>& omega);

struct CuspidalG {
    std::string label = "sigma";
    GroupFamily family = GroupFamily::SoOdd;
    std::map<std::string, HalfInt> reducibility;  // keyed by CuspidalGL label
    std::optional<std::string> omega;

    void validate() const;
    HalfInt reducibility_of(const std::string& gl_label) const;
};

// Duality context shared by everything that contragredients GL data.
struct DualCtx {
    GroupFamily family = GroupFamily::SoOdd;
    std::optional<std::string> omega;

    DualCtx() = default;
    DualCtx(GroupFamily f, std::optional<std::string> w);
    static DualCtx for_family(GroupFamily f);

    bool twisted() const { return omega.has_value(); }
    CuspidalGL dual(const CuspidalGL& r) const { return dual_symbol(r, twisted()); }
};

}  // namespace dps
