#pragma once

#include "dps/symbols.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dps {

using Coef = boost::multiprecision::cpp_int;

struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

struct OpaqueAtomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// nu^e rho
struct Cusp {
    CuspidalGL rho;
    HalfInt e;
    auto operator<=>(const Cusp&) const = default;
    bool operator==(const Cusp&) const = default;
};

enum class SegKind : std::uint8_t { Delta, Zeta };

// delta or zeta of the segment [nu^lo rho, nu^hi rho]. Length-one segments are
// always stored with kind Delta.
struct Segment {
    SegKind kind = SegKind::Delta;
    CuspidalGL rho;
    HalfInt lo, hi;

    static Segment make(SegKind k, CuspidalGL r, HalfInt lo, HalfInt hi);
    // nullopt when lo > hi (the omitted empty segment)
    static std::optional<Segment> make_or_empty(SegKind k, CuspidalGL r, HalfInt lo, HalfInt hi);
    static Segment cusp(CuspidalGL r, HalfInt e) { return make(SegKind::Delta, std::move(r), e, e); }
    static Segment delta(CuspidalGL r, HalfInt lo, HalfInt hi) { return make(SegKind::Delta, std::move(r), lo, hi); }
    static Segment zeta(CuspidalGL r, HalfInt lo, HalfInt hi) { return make(SegKind::Zeta, std::move(r), lo, hi); }

    std::int64_t length() const { return (hi - lo).twice() / 2 + 1; }
    bool is_cuspidal() const { return lo == hi; }

    auto operator<=>(const Segment&) const = default;
    bool operator==(const Segment&) const = default;
};

// Canonical (sorted) multiset of segments; the empty word is 1 in R(GL).
class GLWord {
public:
    GLWord() = default;
    explicit GLWord(std::vector<Segment> f);
    static GLWord of(const Segment& s) { return GLWord(std::vector<Segment>{s}); }
    static GLWord of(const std::optional<Segment>& s) { return s ? of(*s) : GLWord(); }

    const std::vector<Segment>& factors() const { return factors_; }
    bool empty() const { return factors_.empty(); }
    std::int64_t degree() const;

    GLWord operator*(const GLWord& o) const;
    GLWord& operator*=(const GLWord& o);

    auto operator<=>(const GLWord&) const = default;
    bool operator==(const GLWord&) const = default;

private:
    std::vector<Segment> factors_;
};

struct CuspidalAtom {
    std::string label;
    auto operator<=>(const CuspidalAtom&) const = default;
    bool operator==(const CuspidalAtom&) const = default;
};

// Opaque tempered / discrete series symbol. Two atoms are equal iff their full
// descriptions agree.
struct TemperedAtom {
    std::string id;
    std::vector<std::pair<std::string, std::string>> params;
    std::string sigma;
    std::string origin;
    std::string side_condition;
    std::vector<Cusp> support;
    std::optional<std::vector<Cusp>> flag;  // cuspidal flag before sigma, when registered

    auto operator<=>(const TemperedAtom&) const = default;
    bool operator==(const TemperedAtom&) const = default;
};

using GAtom = std::variant<CuspidalAtom, TemperedAtom>;

bool is_cuspidal(const GAtom& a);
const std::string& base_sigma(const GAtom& a);

struct GWord {
    GLWord gl;
    GAtom atom;

    std::int64_t gl_degree() const { return gl.degree(); }
    auto operator<=>(const GWord&) const = default;
    bool operator==(const GWord&) const = default;
};

struct GLTensor {
    GLWord left, right;
    auto operator<=>(const GLTensor&) const = default;
    bool operator==(const GLTensor&) const = default;
};

struct MuTerm {
    GLWord left;
    GWord right;
    auto operator<=>(const MuTerm&) const = default;
    bool operator==(const MuTerm&) const = default;
};

// A full cuspidal flag nu^{e1} rho1 (x) ... (x) nu^{ek} rhok (x) atom
struct Flag {
    std::vector<Cusp> seq;
    GAtom atom;
    auto operator<=>(const Flag&) const = default;
    bool operator==(const Flag&) const = default;
};

template <class B>
class FormalSum {
public:
    using Map = std::map<B, Coef>;

    FormalSum() = default;
    explicit FormalSum(const B& b, const Coef& c = 1) { add(b, c); }

    void add(const B& b, const Coef& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Coef coefficient(const B& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? Coef(0) : it->second;
    }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [b, c] : o.terms_) add(b, c);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [b, c] : o.terms_) add(b, -c);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }

    FormalSum scaled(const Coef& k) const {
        FormalSum out;
        if (k == 0) return out;
        for (const auto& [b, c] : terms_) out.terms_.emplace(b, c * k);
        return out;
    }

    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }

private:
    Map terms_;
};

// Ring and module structure.
FormalSum<GLWord> operator*(const FormalSum<GLWord>& x, const FormalSum<GLWord>& y);
FormalSum<GWord> operator*(const FormalSum<GLWord>& x, const FormalSum<GWord>& y);
GWord rtimes(const GLWord& x, const GWord& w);

// nu^lo rho x nu^{lo+1} rho = delta + zeta on a length-two segment.
FormalSum<GLWord> expand_cuspidal_product(const Segment& s);

// Rendering in the text syntax read by the expression parser.
std::string render(HalfInt h);
std::string render(const Cusp& c);
std::string render(const Segment& s);
std::string render(const GLWord& w);
std::string render(const GAtom& a);
std::string render(const GWord& w);
std::string render(const GLTensor& t);
std::string render(const MuTerm& t);
std::string render(const Flag& f);
std::string render_coef(const Coef& c);

template <class B>
std::string render(const FormalSum<B>& s) {
    if (s.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : s) {
        bool neg = c < 0;
        Coef mag = neg ? Coef(-c) : c;
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (mag != 1) out += render_coef(mag) + "*";
        out += render(b);
        first = false;
    }
    return out;
}

}  // namespace dps
