#pragma once

// Text and JSON forms of the library's values.
//
//   IntVec3      "x,y,z"            [x, y, z]
//   Basis3       "a1,a2,a3;b1,..."  [[a1,a2,a3], [b1,...], [c1,...]]  (columns)
//   CubicLattice                    {"basis", "hnf", "k", "d", "edge", "v"}

#include <stdexcept>
#include <string_view>

#include <json.hpp>

#include "cubiclat/cubic.hpp"
#include "cubiclat/numtheory.hpp"
#include "cubiclat/poset.hpp"

namespace cubiclat {

using Json = nlohmann::ordered_json;

/// Malformed textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Coordinates must satisfy |x| <= 2^30.
inline constexpr Int kMaxCoordinate = Int(1) << 30;
inline constexpr Int kMaxEdge = 10000;

Int parse_int(std::string_view text);
IntVec3 parse_vec(std::string_view text);
Basis3 parse_basis(std::string_view text);
/// Box "x0,x1,y0,y1,z0,z1".
std::array<Int, 6> parse_box(std::string_view text);

Json to_json(Int v);
Json to_json(const IntVec3& v);
Json to_json(const Basis3& b);
Json to_json(const HnfBasis3& h);
Json to_json(const CubicLattice& l);
Json to_json(const ClassifyResult& r);
Json to_json(const ReverseTrace& t);
Json to_json(const CubicFamily& f);
/// {"minimal_upper_bounds": [...], "join_exists": bool} or the meet analogue.
Json to_json(const BoundSearch& s, bool upper);

} // namespace cubiclat
