#pragma once

#include "dps/expr.hpp"
#include "dps/symbols.hpp"

#include <string>
#include <vector>

namespace dps {

// Key-value document, one "key = value" per line, '#' starts a comment:
//   family = so-odd | sp-even | gspin-odd
//   sigma = sigma
//   omega = omega                  (gspin-odd only)
//   gl.<name>.duality = selfdual | ess-selfdual | generic
//   gl.<name>.reducibility = <half-integer>
struct Config {
    GroupFamily family = GroupFamily::SoOdd;
    CuspidalG sigma;
    std::vector<CuspidalGL> gl;

    DualCtx ctx() const { return DualCtx(family, sigma.omega); }
    SymbolTable symbols() const;
    const CuspidalGL& symbol(const std::string& name) const;  // throws ConfigError
    void validate() const;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);
Config profile(const std::string& name);  // "classical" | "gspin"
std::string render(const Config& c);

}  // namespace dps
