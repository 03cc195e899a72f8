#include "dps/config.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace dps {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

SymbolTable Config::symbols() const { return SymbolTable{gl, {sigma.label}}; }

const CuspidalGL& Config::symbol(const std::string& name) const {
    auto it = std::find_if(gl.begin(), gl.end(), [&](const CuspidalGL& r) { return r.label == name; });
    if (it == gl.end()) throw ConfigError("GL symbol '" + name + "' is not declared");
    return *it;
}

void Config::validate() const {
    if (sigma.family != family) throw ConfigError("sigma family does not match the document family");
    sigma.validate();
    for (const auto& [name, _] : sigma.reducibility) symbol(name);
    const DualCtx c = ctx();
    for (const auto& r : gl) {
        if (r.duality == Duality::EssSelfDual && !c.twisted())
            throw ConfigError("'" + r.label + "' is ess-selfdual, which needs the gspin-odd family");
        if (r.duality == Duality::SelfDual && c.twisted())
            throw ConfigError("'" + r.label + "' is selfdual; in gspin-odd use ess-selfdual or generic");
    }
}

Config parse_config(const std::string& text) {
    Config c;
    std::map<std::string, std::string> kv;
    std::map<std::string, int> line_of;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.resize(h);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
        if (kv.count(key)) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        kv[key] = val;
        line_of[key] = lineno;
    }

    auto at = [&](const std::string& k) { return "line " + std::to_string(line_of[k]) + ": "; };
    std::map<std::string, CuspidalGL> gl;
    std::map<std::string, HalfInt> red;
    for (const auto& [key, val] : kv) {
        try {
            if (key == "family") {
                c.family = parse_family(val);
            } else if (key == "sigma") {
                c.sigma.label = val;
            } else if (key == "omega") {
                c.sigma.omega = val;
            } else if (key.starts_with("gl.")) {
                auto dot = key.rfind('.');
                std::string name = key.substr(3, dot - 3), field = key.substr(dot + 1);
                if (name.empty() || dot <= 3) throw ConfigError("malformed key '" + key + "'");
                auto& r = gl.try_emplace(name, CuspidalGL{name, Duality::SelfDual, false}).first->second;
                if (field == "duality")
                    r.duality = parse_duality(val);
                else if (field == "reducibility")
                    red[name] = HalfInt::parse(val);
                else
                    throw ConfigError("unknown field '" + field + "'");
            } else {
                throw ConfigError("unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ConfigError(at(key) + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError(at(key) + e.what());
        }
    }
    c.sigma.family = c.family;
    for (auto& [name, r] : gl) c.gl.push_back(r);
    for (auto& [name, h] : red) c.sigma.reducibility[name] = h;
    c.validate();
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

Config profile(const std::string& name) {
    if (name == "classical")
        return parse_config(
            "family = so-odd\nsigma = sigma\n"
            "gl.rho.duality = selfdual\ngl.rho.reducibility = 2\n"
            "gl.rho0.duality = selfdual\ngl.rho0.reducibility = 1\n"
            "gl.rho1.duality = generic\n");
    if (name == "gspin")
        return parse_config(
            "family = gspin-odd\nsigma = sigma\nomega = omega\n"
            "gl.rho.duality = ess-selfdual\ngl.rho.reducibility = 2\n"
            "gl.rho0.duality = ess-selfdual\ngl.rho0.reducibility = 1\n"
            "gl.rho1.duality = generic\n");
    throw ConfigError("unknown profile '" + name + "' (expected classical or gspin)");
}

std::string render(const Config& c) {
    std::string out = "family = " + to_string(c.family) + "\nsigma = " + c.sigma.label + "\n";
    if (c.sigma.omega) out += "omega = " + *c.sigma.omega + "\n";
    for (const auto& r : c.gl) {
        out += "gl." + r.label + ".duality = " + to_string(r.duality) + "\n";
        if (auto it = c.sigma.reducibility.find(r.label); it != c.sigma.reducibility.end())
            out += "gl." + r.label + ".reducibility = " + it->second.str() + "\n";
    }
    return out;
}

}  // namespace dps
