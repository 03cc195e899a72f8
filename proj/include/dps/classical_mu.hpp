#pragma once

#include "dps/engine.hpp"
#include "dps/gl_hopf.hpp"

#include <cstddef>
#include <vector>

namespace dps {

// M*(s) = (m (x) 1) o (~ (x) m*) o swap o m*(s)
FormalSum<GLTensor> big_m_star_segment(const Segment& s, const DualCtx& ctx);

// (A (x) B) |x| (C (x) D) = A x C (x) B |x| D
FormalSum<MuTerm> rtimes(const FormalSum<GLTensor>& x, const FormalSum<MuTerm>& y);

// 1 (x) sigma for cuspidal sigma; delta(rho,x;sigma) has a registered expansion.
// Any other named atom throws OpaqueAtomError.
FormalSum<MuTerm> mu_star_atom(const GAtom& a, const DualCtx& ctx);

// Factor-by-factor fold. `order` optionally permutes the GL factors before folding.
FormalSum<MuTerm> mu_star_word(const GWord& w, const DualCtx& ctx, const std::vector<std::size_t>* order = nullptr);
FormalSum<MuTerm> mu_star(const FormalSum<GWord>& x, const DualCtx& ctx);

// Closed double sum for d([lo,hi;rho]) |x| target.
FormalSum<MuTerm> mu_star_delta_rtimes(const Segment& s, const FormalSum<MuTerm>& target, const DualCtx& ctx);

struct R1Term {
    Cusp first;
    GWord rest;
};
// All degree-one restrictions, with repetition.
std::vector<R1Term> r1(const GWord& w, const DualCtx& ctx);

FormalSum<Flag> jacquet_minimal(const GWord& w, const DualCtx& ctx);
// Independent route: GL minimal Jacquet of the left sides of mu* terms whose right side is the bare atom.
FormalSum<Flag> jacquet_minimal_via_mu(const GWord& w, const DualCtx& ctx);

// multiplicity of one flag in jacquet_minimal(w), without expanding the whole sum
Coef flag_multiplicity(const GWord& w, const Flag& f, const DualCtx& ctx);

enum class MatchMode {
    Basis,        // exact basis word on both sides
    Constituent,  // left side: delta(S) as a constituent of a product of deltas; right exact
};

struct MultResult {
    Coef value = 0;
    bool degree_mismatch = false;
};

MultResult mult_of_constituent(const GWord& w, const MuTerm& pattern, const DualCtx& ctx,
                               MatchMode mode = MatchMode::Basis);
MultResult mult_of_flag(const GWord& w, const Flag& f, const DualCtx& ctx);

// GL degree plus the cuspidal support size of a tempered atom
std::int64_t rank(const GWord& w);

// multiplicity of delta(S) in a GL word, 0 or 1 for products of deltas
Coef delta_constituent_mult(const GLWord& w, const Segment& s);

// sum of coefficients over terms with the given left side
Coef total_with_left(const FormalSum<MuTerm>& mu, const GLWord& left);

}  // namespace dps
