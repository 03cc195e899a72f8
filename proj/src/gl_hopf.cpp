#include "dps/gl_hopf.hpp"

#include <map>

namespace dps {

FormalSum<GLTensor> m_star_segment(const Segment& s) {
    FormalSum<GLTensor> out;
    for (HalfInt i = s.lo - 1; i <= s.hi; i += 1) {
        auto upper = Segment::make_or_empty(s.kind, s.rho, i + 1, s.hi);
        auto lower = Segment::make_or_empty(s.kind, s.rho, s.lo, i);
        if (s.kind == SegKind::Delta)
            out.add(GLTensor{GLWord::of(upper), GLWord::of(lower)}, 1);
        else
            out.add(GLTensor{GLWord::of(lower), GLWord::of(upper)}, 1);
    }
    return out;
}

FormalSum<GLTensor> operator*(const FormalSum<GLTensor>& x, const FormalSum<GLTensor>& y) {
    FormalSum<GLTensor> out;
    for (const auto& [u, c] : x)
        for (const auto& [v, d] : y) out.add(GLTensor{u.left * v.left, u.right * v.right}, c * d);
    return out;
}

FormalSum<GLTensor> m_star_word(const GLWord& w) {
    FormalSum<GLTensor> acc(GLTensor{});
    for (const auto& s : w.factors()) acc = acc * m_star_segment(s);
    return acc;
}

FormalSum<GLTensor> m_star(const FormalSum<GLWord>& x) {
    FormalSum<GLTensor> out;
    for (const auto& [w, c] : x) out += m_star_word(w).scaled(c);
    return out;
}

FormalSum<GLTriple> coassoc_left(const GLWord& w) {
    FormalSum<GLTriple> out;
    for (const auto& [t, c] : m_star_word(w))
        for (const auto& [u, d] : m_star_word(t.left)) out.add(GLTriple{u.left, u.right, t.right}, c * d);
    return out;
}

FormalSum<GLTriple> coassoc_right(const GLWord& w) {
    FormalSum<GLTriple> out;
    for (const auto& [t, c] : m_star_word(w))
        for (const auto& [u, d] : m_star_word(t.right)) out.add(GLTriple{t.left, u.left, u.right}, c * d);
    return out;
}

FormalSum<GLTensor> m_star_slice(const GLWord& w, std::int64_t left_degree) {
    FormalSum<GLTensor> out;
    for (const auto& [t, c] : m_star_word(w))
        if (t.left.degree() == left_degree) out.add(t, c);
    return out;
}

Segment gl_dual_segment(const Segment& s, const DualCtx& ctx) {
    return Segment::make(s.kind, ctx.dual(s.rho), -s.hi, -s.lo);
}

GLWord gl_dual_word(const GLWord& w, const DualCtx& ctx) {
    std::vector<Segment> f;
    f.reserve(w.factors().size());
    for (const auto& s : w.factors()) f.push_back(gl_dual_segment(s, ctx));
    return GLWord(std::move(f));
}

Segment zelevinsky_dual_segment(const Segment& s) {
    return Segment::make(s.kind == SegKind::Delta ? SegKind::Zeta : SegKind::Delta, s.rho, s.lo, s.hi);
}

GLWord zelevinsky_dual_word(const GLWord& w) {
    std::vector<Segment> f;
    for (const auto& s : w.factors()) f.push_back(zelevinsky_dual_segment(s));
    return GLWord(std::move(f));
}

namespace {

std::vector<Cusp> cusp_string(const Segment& s) {
    std::vector<Cusp> out;
    if (s.kind == SegKind::Delta)
        for (HalfInt e = s.hi; e >= s.lo; e -= 1) out.push_back({s.rho, e});
    else
        for (HalfInt e = s.lo; e <= s.hi; e += 1) out.push_back({s.rho, e});
    return out;
}

// Shuffles of several strings; state is the vector of consumed prefix lengths.
void shuffle(const std::vector<std::vector<Cusp>>& strings, std::vector<std::size_t>& pos,
             std::vector<Cusp>& prefix, FormalSum<std::vector<Cusp>>& out) {
    bool done = true;
    for (std::size_t i = 0; i < strings.size(); ++i) {
        if (pos[i] == strings[i].size()) continue;
        done = false;
        prefix.push_back(strings[i][pos[i]]);
        ++pos[i];
        shuffle(strings, pos, prefix, out);
        --pos[i];
        prefix.pop_back();
    }
    if (done) out.add(prefix, 1);
}

}  // namespace

FormalSum<std::vector<Cusp>> gl_jacquet_minimal(const GLWord& w) {
    std::vector<std::vector<Cusp>> strings;
    for (const auto& s : w.factors()) strings.push_back(cusp_string(s));
    std::vector<std::size_t> pos(strings.size(), 0);
    std::vector<Cusp> prefix;
    FormalSum<std::vector<Cusp>> out;
    shuffle(strings, pos, prefix, out);
    return out;
}

}  // namespace dps
