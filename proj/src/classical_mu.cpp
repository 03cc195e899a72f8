#include "dps/classical_mu.hpp"
#include "dps/langlands.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace dps {

FormalSum<GLTensor> big_m_star_segment(const Segment& s, const DualCtx& ctx) {
    FormalSum<GLTensor> out;
    for (const auto& [t, c] : m_star_segment(s)) {
        GLWord ydual = gl_dual_word(t.right, ctx);
        for (const auto& [u, d] : m_star_word(t.left)) out.add(GLTensor{ydual * u.left, u.right}, c * d);
    }
    return out;
}

FormalSum<MuTerm> rtimes(const FormalSum<GLTensor>& x, const FormalSum<MuTerm>& y) {
    FormalSum<MuTerm> out;
    for (const auto& [u, c] : x)
        for (const auto& [v, d] : y) out.add(MuTerm{u.left * v.left, rtimes(u.right, v.right)}, c * d);
    return out;
}

namespace {

struct DeltaAtomInfo {
    CuspidalGL rho;
    HalfInt alpha, x;
};

std::optional<DeltaAtomInfo> delta_atom_info(const GAtom& a) {
    auto t = std::get_if<TemperedAtom>(&a);
    if (!t || t->id != "delta") return std::nullopt;
    return DeltaAtomInfo{t->support.front().rho, t->support.front().e, t->support.back().e};
}

[[noreturn]] void opaque(const GAtom& a) {
    throw OpaqueAtomError("opaque atom: no registered mu* expansion for " + render(a));
}

}  // namespace

FormalSum<MuTerm> mu_star_atom(const GAtom& a, const DualCtx&) {
    if (is_cuspidal(a)) return FormalSum<MuTerm>(MuTerm{GLWord(), GWord{GLWord(), a}});
    auto info = delta_atom_info(a);
    if (!info) opaque(a);
    // imported: mu*(delta(rho,x;sigma)) = sum_{t=alpha-1}^{x} d([t+1,x]) (x) delta(rho,t;sigma)
    const auto& sigma = std::get<TemperedAtom>(a).sigma;
    FormalSum<MuTerm> out;
    for (HalfInt t = info->alpha - 1; t <= info->x; t += 1) {
        auto seg = Segment::make_or_empty(SegKind::Delta, info->rho, t + 1, info->x);
        out.add(MuTerm{GLWord::of(seg), GWord{GLWord(), atoms::delta_sp(info->rho, info->alpha, t, sigma)}}, 1);
    }
    return out;
}

FormalSum<MuTerm> mu_star_word(const GWord& w, const DualCtx& ctx, const std::vector<std::size_t>* order) {
    const auto& f = w.gl.factors();
    std::vector<std::size_t> idx(f.size());
    std::iota(idx.begin(), idx.end(), 0);
    if (order) {
        if (order->size() != f.size()) throw std::invalid_argument("factor order has wrong length");
        idx = *order;
    }
    FormalSum<MuTerm> acc = mu_star_atom(w.atom, ctx);
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) acc = rtimes(big_m_star_segment(f.at(*it), ctx), acc);
    return acc;
}

FormalSum<MuTerm> mu_star(const FormalSum<GWord>& x, const DualCtx& ctx) {
    FormalSum<MuTerm> out;
    for (const auto& [w, c] : x) out += mu_star_word(w, ctx).scaled(c);
    return out;
}

FormalSum<MuTerm> mu_star_delta_rtimes(const Segment& s, const FormalSum<MuTerm>& target, const DualCtx& ctx) {
    if (s.kind != SegKind::Delta) throw InvariantError("closed form applies to delta segments only");
    if (!s.lo.same_class(s.hi) || s.hi < s.lo) throw InvariantError("malformed segment");
    const HalfInt k = -s.lo, l = s.hi;
    const CuspidalGL rt = ctx.dual(s.rho);
    FormalSum<MuTerm> out;
    for (HalfInt i = -k - 1; i <= l; i += 1) {
        for (HalfInt j = i; j <= l; j += 1) {
            GLWord left = GLWord::of(Segment::make_or_empty(SegKind::Delta, rt, -i, k)) *
                          GLWord::of(Segment::make_or_empty(SegKind::Delta, s.rho, j + 1, l));
            GLWord mid = GLWord::of(Segment::make_or_empty(SegKind::Delta, s.rho, i + 1, j));
            for (const auto& [t, c] : target) out.add(MuTerm{left * t.left, rtimes(mid, t.right)}, c);
        }
    }
    return out;
}

std::vector<R1Term> r1(const GWord& w, const DualCtx& ctx) {
    std::vector<R1Term> out;
    const auto& f = w.gl.factors();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Segment& s = f[i];
        auto with = [&](std::optional<Segment> repl) {
            std::vector<Segment> g;
            g.reserve(f.size());
            for (std::size_t j = 0; j < f.size(); ++j)
                if (j != i) g.push_back(f[j]);
            if (repl) g.push_back(*repl);
            return GWord{GLWord(std::move(g)), w.atom};
        };
        if (s.kind == SegKind::Delta) {
            out.push_back({{s.rho, s.hi}, with(Segment::make_or_empty(SegKind::Delta, s.rho, s.lo, s.hi - 1))});
            out.push_back({{ctx.dual(s.rho), -s.lo}, with(Segment::make_or_empty(SegKind::Delta, s.rho, s.lo + 1, s.hi))});
        } else {
            out.push_back({{s.rho, s.lo}, with(Segment::make_or_empty(SegKind::Zeta, s.rho, s.lo + 1, s.hi))});
            out.push_back({{ctx.dual(s.rho), -s.hi}, with(Segment::make_or_empty(SegKind::Zeta, s.rho, s.lo, s.hi - 1))});
        }
    }
    if (!is_cuspidal(w.atom)) {
        auto info = delta_atom_info(w.atom);
        if (!info) opaque(w.atom);
        const auto& sigma = std::get<TemperedAtom>(w.atom).sigma;
        out.push_back({{info->rho, info->x}, GWord{w.gl, atoms::delta_sp(info->rho, info->alpha, info->x - 1, sigma)}});
    }
    return out;
}

namespace {

using Suffixes = FormalSum<Flag>;

const Suffixes& jm_rec(const GWord& w, const DualCtx& ctx, std::map<GWord, Suffixes>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    Suffixes out;
    if (w.gl.empty() && is_cuspidal(w.atom)) {
        out.add(Flag{{}, w.atom}, 1);
    } else {
        for (const auto& t : r1(w, ctx)) {
            const Suffixes& tail = jm_rec(t.rest, ctx, memo);
            for (const auto& [fl, c] : tail) {
                Flag g{{t.first}, fl.atom};
                g.seq.insert(g.seq.end(), fl.seq.begin(), fl.seq.end());
                out.add(g, c);
            }
        }
    }
    return memo.emplace(w, std::move(out)).first->second;
}

Coef flag_rec(const GWord& w, const Flag& f, std::size_t pos, const DualCtx& ctx,
              std::map<std::pair<GWord, std::size_t>, Coef>& memo) {
    if (w.gl.empty() && is_cuspidal(w.atom)) return (pos == f.seq.size() && w.atom == f.atom) ? 1 : 0;
    if (pos == f.seq.size()) return 0;
    auto key = std::make_pair(w, pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Coef total = 0;
    for (const auto& t : r1(w, ctx))
        if (t.first == f.seq[pos]) total += flag_rec(t.rest, f, pos + 1, ctx, memo);
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

FormalSum<Flag> jacquet_minimal(const GWord& w, const DualCtx& ctx) {
    std::map<GWord, Suffixes> memo;
    return jm_rec(w, ctx, memo);
}

FormalSum<Flag> jacquet_minimal_via_mu(const GWord& w, const DualCtx& ctx) {
    FormalSum<Flag> out;
    for (const auto& [t, c] : mu_star_word(w, ctx)) {
        if (!t.right.gl.empty()) continue;
        if (!is_cuspidal(t.right.atom)) {
            // a strongly positive atom still carries its own flag below it
            for (const auto& [tail, d] : jacquet_minimal(t.right, ctx)) {
                for (const auto& [seq, e] : gl_jacquet_minimal(t.left)) {
                    Flag g{seq, tail.atom};
                    g.seq.insert(g.seq.end(), tail.seq.begin(), tail.seq.end());
                    out.add(g, c * d * e);
                }
            }
            continue;
        }
        for (const auto& [seq, e] : gl_jacquet_minimal(t.left)) out.add(Flag{seq, t.right.atom}, c * e);
    }
    return out;
}

Coef flag_multiplicity(const GWord& w, const Flag& f, const DualCtx& ctx) {
    std::map<std::pair<GWord, std::size_t>, Coef> memo;
    return flag_rec(w, f, 0, ctx, memo);
}

Coef delta_constituent_mult(const GLWord& w, const Segment& s) {
    if (s.kind != SegKind::Delta) throw std::invalid_argument("constituent pattern must be a delta segment");
    if (w.empty()) return 0;
    std::vector<Segment> f = w.factors();
    for (const auto& g : f)
        if (g.kind != SegKind::Delta || g.rho != s.rho) return 0;
    std::sort(f.begin(), f.end(), [](const Segment& x, const Segment& y) { return x.lo < y.lo; });
    HalfInt next = s.lo;
    for (const auto& g : f) {
        if (g.lo != next) return 0;
        next = g.hi + 1;
    }
    return next == s.hi + 1 ? 1 : 0;
}

std::int64_t rank(const GWord& w) {
    std::int64_t r = w.gl_degree();
    if (auto t = std::get_if<TemperedAtom>(&w.atom)) r += static_cast<std::int64_t>(t->support.size());
    return r;
}

MultResult mult_of_constituent(const GWord& w, const MuTerm& pattern, const DualCtx& ctx, MatchMode mode) {
    MultResult r;
    if (pattern.left.degree() + rank(pattern.right) != rank(w)) {
        r.degree_mismatch = true;
        return r;
    }
    auto mu = mu_star_word(w, ctx);
    if (mode == MatchMode::Basis) {
        r.value = mu.coefficient(pattern);
        return r;
    }
    if (pattern.left.factors().size() != 1)
        throw std::invalid_argument("constituent mode needs a single delta segment on the left");
    const Segment& s = pattern.left.factors().front();
    for (const auto& [t, c] : mu)
        if (t.right == pattern.right) r.value += c * delta_constituent_mult(t.left, s);
    return r;
}

MultResult mult_of_flag(const GWord& w, const Flag& f, const DualCtx& ctx) {
    MultResult r;
    if (static_cast<std::int64_t>(f.seq.size()) != rank(w) || !is_cuspidal(f.atom)) {
        r.degree_mismatch = true;
        return r;
    }
    r.value = flag_multiplicity(w, f, ctx);
    return r;
}

Coef total_with_left(const FormalSum<MuTerm>& mu, const GLWord& left) {
    Coef total = 0;
    for (const auto& [t, c] : mu)
        if (t.left == left) total += c;
    return total;
}

}  // namespace dps
