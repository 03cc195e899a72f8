#pragma once

#include "dps/engine.hpp"

namespace dps {

struct SignedWord {
    int sign = 1;
    GWord word;
};

// Factorwise dual: each GL factor goes to the contragredient of its Zelevinsky
// dual, the cuspidal atom is kept. The sign is +1 under the convention that
// the simple roots of the atom's own group are not counted.
SignedWord aubert_standard(const GWord& w, const DualCtx& ctx);

// The alternating sum over standard Levis GL(n1) x ... x GL(nk) x G, evaluated
// with iterated mu* slices. GL factors must be cuspidal (Unsupported otherwise);
// max_degree bounds the total GL degree.
FormalSum<GWord> aubert_bruteforce(const GWord& w, const DualCtx& ctx, std::size_t max_degree = 4);
FormalSum<GWord> aubert_bruteforce(const FormalSum<GWord>& x, const DualCtx& ctx, std::size_t max_degree = 4);
// Same alternating sum with segment factors allowed. The result is a sum of
// standard words; compare through grothendieck_normal_form.
FormalSum<GWord> aubert_bruteforce_segments(const GWord& w, const DualCtx& ctx, std::size_t max_degree = 6);

// Zelevinsky-type expansion of z([a,b]) into delta products:
// sum over cuts of [a,b] into consecutive blocks, sign (-1)^(length - blocks).
FormalSum<GLWord> zeta_as_deltas(const Segment& z);

// Normal form in R(G): zeta segments expanded into deltas, then every delta
// replaced by whichever of itself / its contragredient has centre e >= 0
// (ties by symbol order). Two sums are equal in R(G) iff their normal forms agree.
FormalSum<GWord> grothendieck_normal_form(const FormalSum<GWord>& x, const DualCtx& ctx);

// positive representative of +-(positive sum); throws InvariantError on mixed signs
FormalSum<GWord> hat_normalize(const FormalSum<GWord>& s);

}  // namespace dps
