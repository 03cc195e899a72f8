#include "dps/symbols.hpp"

#include <charconv>

namespace dps {

std::string HalfInt::str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("malformed half-integer '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    auto slash = s.find('/');
    auto num_part = s.substr(0, slash);
    if (num_part.starts_with('+')) num_part.remove_prefix(1);
    std::int64_t num = 0;
    auto [p, ec] = std::from_chars(num_part.data(), num_part.data() + num_part.size(), num);
    if (ec != std::errc() || p != num_part.data() + num_part.size() || num_part.empty()) fail();
    if (slash == std::string_view::npos) return HalfInt::from_twice(2 * num);
    auto den_part = s.substr(slash + 1);
    std::int64_t den = 0;
    auto [q, ec2] = std::from_chars(den_part.data(), den_part.data() + den_part.size(), den);
    if (ec2 != std::errc() || q != den_part.data() + den_part.size() || den_part.empty()) fail();
    if (den == 1) return HalfInt::from_twice(2 * num);
    if (den == 2) return HalfInt::from_twice(num);
    fail();
    return {};
}

HalfInt midpoint(HalfInt a, HalfInt b) {
    auto s = a.twice() + b.twice();
    if (s % 2 != 0) throw std::invalid_argument("midpoint is not a half-integer");
    return HalfInt::from_twice(s / 2);
}

std::string to_string(Duality d) {
    switch (d) {
        case Duality::SelfDual: return "selfdual";
        case Duality::EssSelfDual: return "ess-selfdual";
        case Duality::Generic: return "generic";
    }
    return "?";
}

std::string to_string(GroupFamily f) {
    switch (f) {
        case GroupFamily::SpEven: return "sp-even";
        case GroupFamily::SoOdd: return "so-odd";
        case GroupFamily::GSpinOdd: return "gspin-odd";
    }
    return "?";
}

Duality parse_duality(const std::string& s) {
    if (s == "selfdual") return Duality::SelfDual;
    if (s == "ess-selfdual") return Duality::EssSelfDual;
    if (s == "generic") return Duality::Generic;
    throw ConfigError("unknown duality '" + s + "'");
}

GroupFamily parse_family(const std::string& s) {
    if (s == "sp-even" || s == "sp") return GroupFamily::SpEven;
    if (s == "so-odd" || s == "so") return GroupFamily::SoOdd;
    if (s == "gspin-odd" || s == "gspin") return GroupFamily::GSpinOdd;
    throw ConfigError("unknown group family '" + s + "'");
}

CuspidalGL dual_symbol(const CuspidalGL& r, bool twisted) {
    bool fixed = (r.duality == Duality::SelfDual && !twisted) ||
                 (r.duality == Duality::EssSelfDual && twisted);
    if (fixed) return r;
    CuspidalGL out = r;
    out.dual = !r.dual;
    return out;
}

CuspidalGL contragredient_symbol(const CuspidalGL& r, GroupFamily family,
                                 const std::optional<std::string>& omega) {
    return DualCtx(family, omega).dual(r);
}

void CuspidalG::validate() const {
    if (omega.has_value() != (family == GroupFamily::GSpinOdd))
        throw ConfigError("omega must be present exactly for the gspin-odd family");
    for (const auto& [k, v] : reducibility)
        if (v < HalfInt(0)) throw ConfigError("negative reducibility exponent for " + k);
}

HalfInt CuspidalG::reducibility_of(const std::string& gl_label) const {
    auto it = reducibility.find(gl_label);
    if (it == reducibility.end()) throw ConfigError("no reducibility exponent declared for " + gl_label);
    return it->second;
}

DualCtx::DualCtx(GroupFamily f, std::optional<std::string> w) : family(f), omega(std::move(w)) {
    if (omega && family != GroupFamily::GSpinOdd)
        throw ConfigError("omega twist supplied for non-GSpin family " + to_string(family));
    if (!omega && family == GroupFamily::GSpinOdd)
        throw ConfigError("gspin-odd family requires an omega twist");
}

DualCtx DualCtx::for_family(GroupFamily f) {
    if (f == GroupFamily::GSpinOdd) return DualCtx(f, std::string("omega"));
    return DualCtx(f, std::nullopt);
}

}  // namespace dps
