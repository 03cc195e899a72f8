#include "dps/aubert.hpp"
#include "dps/classical_mu.hpp"
#include "dps/gl_hopf.hpp"

#include <map>

namespace dps {

SignedWord aubert_standard(const GWord& w, const DualCtx& ctx) {
    if (!is_cuspidal(w.atom))
        throw OpaqueAtomError("aubert_standard needs a cuspidal atom, got " + render(w.atom));
    std::vector<Segment> f;
    for (const auto& s : w.gl.factors()) f.push_back(gl_dual_segment(zelevinsky_dual_segment(s), ctx));
    return SignedWord{1, GWord{GLWord(std::move(f)), w.atom}};
}

namespace {

// Sum over ordered compositions (n1,...,nk) of deg(L) of (-1)^{sum(ni-1)} times
// the product of the m*-pieces of L. The GL half of i_M o r_M.
const FormalSum<GLWord>& gl_alternating(const GLWord& L, std::map<GLWord, FormalSum<GLWord>>& memo) {
    if (auto it = memo.find(L); it != memo.end()) return it->second;
    FormalSum<GLWord> out;
    if (L.empty()) {
        out.add(GLWord(), 1);
    } else {
        const auto n = L.degree();
        for (std::int64_t n1 = 1; n1 <= n; ++n1) {
            Coef sign = (n1 - 1) % 2 == 0 ? 1 : -1;
            for (const auto& [t, c] : m_star_slice(L, n1)) {
                const auto& rest = gl_alternating(t.right, memo);
                for (const auto& [r, d] : rest) out.add(t.left * r, sign * c * d);
            }
        }
    }
    return memo.emplace(L, std::move(out)).first->second;
}

}  // namespace

FormalSum<GWord> aubert_bruteforce(const GWord& w, const DualCtx& ctx, std::size_t max_degree) {
    for (const auto& s : w.gl.factors())
        if (!s.is_cuspidal()) throw Unsupported("aubert_bruteforce handles cuspidal GL factors only, got " + render(s));
    return aubert_bruteforce_segments(w, ctx, max_degree);
}

FormalSum<GWord> aubert_bruteforce_segments(const GWord& w, const DualCtx& ctx, std::size_t max_degree) {
    if (!is_cuspidal(w.atom)) throw OpaqueAtomError("aubert_bruteforce needs a cuspidal atom");
    if (static_cast<std::size_t>(w.gl.degree()) > max_degree)
        throw Unsupported("GL degree " + std::to_string(w.gl.degree()) + " exceeds the brute-force bound " +
                          std::to_string(max_degree));

    std::map<GLWord, FormalSum<GLWord>> memo;
    FormalSum<GWord> out;
    for (const auto& [t, c] : mu_star_word(w, ctx)) {
        // m = GL degree kept on the G side
        const std::int64_t m = t.right.gl_degree();
        Coef sign = m % 2 == 0 ? 1 : -1;
        for (const auto& [L, d] : gl_alternating(t.left, memo)) out.add(rtimes(L, t.right), sign * c * d);
    }
    return out;
}

FormalSum<GWord> aubert_bruteforce(const FormalSum<GWord>& x, const DualCtx& ctx, std::size_t max_degree) {
    FormalSum<GWord> out;
    for (const auto& [w, c] : x) out += aubert_bruteforce(w, ctx, max_degree).scaled(c);
    return out;
}

FormalSum<GLWord> zeta_as_deltas(const Segment& z) {
    const auto n = z.length();
    FormalSum<GLWord> out;
    // bit i of cuts set => a block ends after position i
    for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (n - 1)); ++cuts) {
        std::vector<Segment> blocks;
        HalfInt start = z.lo;
        for (std::int64_t i = 0; i < n; ++i) {
            if (i == n - 1 || (cuts >> i) & 1) {
                HalfInt end = z.lo + HalfInt(static_cast<int>(i));
                blocks.push_back(Segment::delta(z.rho, start, end));
                start = end + 1;
            }
        }
        const auto k = static_cast<std::int64_t>(blocks.size());
        out.add(GLWord(std::move(blocks)), (n - k) % 2 == 0 ? 1 : -1);
    }
    return out;
}

FormalSum<GWord> grothendieck_normal_form(const FormalSum<GWord>& x, const DualCtx& ctx) {
    auto fold = [&](const Segment& s) {
        const HalfInt e = midpoint(s.lo, s.hi);
        if (e > HalfInt(0)) return s;
        Segment d = gl_dual_segment(s, ctx);
        if (e < HalfInt(0)) return d;
        return std::min(s, d);
    };
    FormalSum<GWord> out;
    for (const auto& [w, c] : x) {
        FormalSum<GLWord> acc(GLWord(), 1);
        for (const auto& s : w.gl.factors()) {
            FormalSum<GLWord> piece;
            if (s.kind == SegKind::Zeta)
                for (const auto& [d, k] : zeta_as_deltas(s)) piece.add(d, k);
            else
                piece.add(GLWord::of(s), 1);
            FormalSum<GLWord> next;
            for (const auto& [a, ka] : acc)
                for (const auto& [b, kb] : piece) next.add(a * b, ka * kb);
            acc = std::move(next);
        }
        for (const auto& [g, k] : acc) {
            std::vector<Segment> f;
            for (const auto& s : g.factors()) f.push_back(fold(s));
            out.add(GWord{GLWord(std::move(f)), w.atom}, c * k);
        }
    }
    return out;
}

FormalSum<GWord> hat_normalize(const FormalSum<GWord>& s) {
    bool pos = false, neg = false;
    for (const auto& [w, c] : s) (c > 0 ? pos : neg) = true;
    if (pos && neg) throw InvariantError("hat_normalize: mixed-sign sum " + render(s));
    return neg ? s.scaled(-1) : s;
}

}  // namespace dps
