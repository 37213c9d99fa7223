// Embedded input files for the golden verification scenarios. The same
// text ships under samples/ for CLI experimentation.

#pragma once

#include "arthom/parse.hpp"

namespace arthom::fixtures {

inline const char* fix_a2_text()
{
    return R"(# Path algebra of the linear quiver 1 -> 2 over Q.
field Q
vertices 1 2
arrow a : 1 -> 2
module S1 = S(1)
module S2 = S(2)
module T = A + DA
)";
}

inline const char* fix_g_text()
{
    return R"(# 1 -> 2 -> 3 -> 4 <- 5 <- 6 bound by g*b*a = 0.
field Q
vertices 1 2 3 4 5 6
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow g : 3 -> 4
arrow d : 5 -> 4
arrow e : 6 -> 5
relation g*b*a
module I = I(2) + I(3) + I(4) + I(5) + I(6)
)";
}

inline const char* fix_c3_text()
{
    return R"(# Cyclic triangle bound by g*b*a = a*g*b = 0.
field Q
vertices 1 2 3
arrow a : 1 -> 2
arrow b : 2 -> 3
arrow g : 3 -> 1
relation g*b*a
relation a*g*b
module N31 { dim 1 0 1 ; map g = [[1]] }
module N12 { dim 1 1 0 ; map a = [[1]] }
module M = S(1) + N31 + DA
)";
}

inline AlgebraBundle<Rationals> fix_a2()
{
    return std::get<AlgebraBundle<Rationals>>(parse_algebra_text(fix_a2_text()));
}
inline AlgebraBundle<Rationals> fix_g()
{
    return std::get<AlgebraBundle<Rationals>>(parse_algebra_text(fix_g_text()));
}
inline AlgebraBundle<Rationals> fix_c3()
{
    return std::get<AlgebraBundle<Rationals>>(parse_algebra_text(fix_c3_text()));
}

}  // namespace arthom::fixtures
