#pragma once

#include <array>
#include <ostream>

#include "cubiclat/io.hpp"

namespace cubiclat::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Lattice points of gamma_any(v, d) and all of Z^3 inside the box
/// [x0,x1] x [y0,y1] x [z0,z1], each sorted lexicographically. Boxes with
/// more than 10^6 points are rejected.
Json export_points(const IntVec3& v, Int d, const std::array<Int, 6>& box);

/// Runs the command line; results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cubiclat::cli
