#pragma once

#include "dps/engine.hpp"
#include "dps/langlands.hpp"

#include <string>
#include <vector>

namespace dps::test {

inline CuspidalGL selfdual(const std::string& n = "rho") { return {n, Duality::SelfDual, false}; }
inline CuspidalGL essdual(const std::string& n = "rho") { return {n, Duality::EssSelfDual, false}; }
inline CuspidalGL generic(const std::string& n = "rho1") { return {n, Duality::Generic, false}; }

inline HalfInt h(std::int64_t twice) { return HalfInt::from_twice(twice); }

inline GAtom sigma() { return CuspidalAtom{"sigma"}; }

inline GWord gw(std::vector<Segment> f, GAtom atom = CuspidalAtom{"sigma"}) {
    return GWord{GLWord(std::move(f)), std::move(atom)};
}

inline Segment nu(const CuspidalGL& r, HalfInt e) { return Segment::cusp(r, e); }

inline const DualCtx classical{GroupFamily::SoOdd, std::nullopt};
inline const DualCtx gspin{GroupFamily::GSpinOdd, std::string("omega")};

}  // namespace dps::test
