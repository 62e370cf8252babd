#pragma once

// Closed forms for the germ of the N coordinate axes in A^N.

#include <cstddef>

#include "hilbzeta/motive.hpp"

namespace hilbzeta {

/// Class of the k-planes in an n-dimensional space lying in no coordinate
/// hyperplane.
LPoly gr0(unsigned k, unsigned n);

/// 1 + (1/(1-t)^N) sum_{d=1}^N gr0(N-d+1, N) t^d
ZetaRat axes_zeta(unsigned n);

/// [Hilb^d] of the axes germ, read off the series of axes_zeta.
LPoly axes_hilb_class(unsigned n, std::size_t d);

}  // namespace hilbzeta
