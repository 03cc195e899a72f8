#pragma once

#include "dps/engine.hpp"

namespace dps {

struct NotLanglandsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// L(delta_1, ..., delta_k; tau)
struct LanglandsData {
    std::vector<Segment> deltas;
    GAtom tempered;
    auto operator<=>(const LanglandsData&) const = default;
    bool operator==(const LanglandsData&) const = default;
};

HalfInt e_of_delta(const Segment& s);

// sort by e ascending, ties by (rho, lo); throws NotLanglandsError on e >= 0
LanglandsData normalize_langlands(LanglandsData d);

GWord standard_word_of(const LanglandsData& d);

struct SPBuilder {
    enum class Kind { DeltaSp, ZetaSp };
    CuspidalGL rho;
    HalfInt alpha;
    HalfInt x;
    std::string sigma = "sigma";
    Kind kind = Kind::DeltaSp;
};

// delta(rho,x;sigma) in nu^x x ... x nu^alpha |x| sigma,
// zeta(rho,x;sigma) in nu^-x x ... x nu^-alpha |x| sigma
GWord standard_word_of(const SPBuilder& b);

// Frobenius flag of the Langlands embedding: each delta's exponents descending,
// then the atom's registered flag. Throws OpaqueAtomError when the atom has none.
Flag leading_jacquet_term(const LanglandsData& d);

std::string render(const LanglandsData& d);

// Named atoms emitted by the classifier.
namespace atoms {

GAtom cuspidal(const std::string& sigma);

// The two tempered summands of rho0 |x| sigma when beta = 0. Index is +1 or -1.
TemperedAtom tau_pm(int index, const CuspidalGL& rho0, const std::string& sigma);

// rho0 |x| sigma for integral a, sigma otherwise
GAtom tau1(const CuspidalGL& rho0, HalfInt a, const std::string& sigma);

TemperedAtom tau2(const CuspidalGL& rho0, HalfInt beta, HalfInt a, const std::string& sigma);

TemperedAtom tau_rho_sigma(const CuspidalGL& rho, const std::string& sigma);

// unique strongly positive subrepresentation of nu^lo rho x ... x nu^top rho |x| sigma
TemperedAtom sigma_sp(const CuspidalGL& rho, HalfInt lo, HalfInt top, const std::string& sigma);

// delta(rho,x;sigma); x = alpha - 1 gives sigma itself
GAtom delta_sp(const CuspidalGL& rho, HalfInt alpha, HalfInt x, const std::string& sigma);

// discrete series singled out only by a Jacquet-module side condition
TemperedAtom sigma_ds(int index, const std::string& side_condition, const std::vector<Cusp>& support,
                      const std::string& sigma);

}  // namespace atoms

}  // namespace dps
