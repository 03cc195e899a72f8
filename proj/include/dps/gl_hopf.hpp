#pragma once

#include "dps/engine.hpp"

namespace dps {

struct GLTriple {
    GLWord a, b, c;
    auto operator<=>(const GLTriple&) const = default;
    bool operator==(const GLTriple&) const = default;
};

FormalSum<GLTensor> m_star_segment(const Segment& s);
FormalSum<GLTensor> m_star_word(const GLWord& w);
FormalSum<GLTensor> m_star(const FormalSum<GLWord>& x);

// componentwise product (u1 (x) v1)(u2 (x) v2) = u1u2 (x) v1v2
FormalSum<GLTensor> operator*(const FormalSum<GLTensor>& x, const FormalSum<GLTensor>& y);

// (m* (x) id) o m*  and  (id (x) m*) o m*
FormalSum<GLTriple> coassoc_left(const GLWord& w);
FormalSum<GLTriple> coassoc_right(const GLWord& w);

// degree-k left slice of m*(w)
FormalSum<GLTensor> m_star_slice(const GLWord& w, std::int64_t left_degree);

Segment gl_dual_segment(const Segment& s, const DualCtx& ctx);
GLWord gl_dual_word(const GLWord& w, const DualCtx& ctx);
Segment zelevinsky_dual_segment(const Segment& s);
GLWord zelevinsky_dual_word(const GLWord& w);

// Minimal GL Jacquet module: cuspidal sequences with multiplicity. A delta
// segment contributes its exponents descending, a zeta segment ascending, and
// a product contributes all shuffles.
FormalSum<std::vector<Cusp>> gl_jacquet_minimal(const GLWord& w);

}  // namespace dps
