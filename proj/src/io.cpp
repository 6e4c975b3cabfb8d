#include "cubiclat/io.hpp"

#include <charconv>
#include <string>
#include <vector>

namespace cubiclat {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

Int parse_int(std::string_view text) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("not an integer: '" + std::string(text) + "'");
    return value;
}

IntVec3 parse_vec(std::string_view text) {
    auto parts = split(text, ',');
    if (parts.size() != 3) throw ParseError("expected three comma-separated integers: '" + std::string(text) + "'");
    IntVec3 v{parse_int(parts[0]), parse_int(parts[1]), parse_int(parts[2])};
    for (std::size_t i = 0; i < 3; ++i)
        if (abs(v[i]) > kMaxCoordinate) throw ParseError("coordinate exceeds 2^30: '" + std::string(text) + "'");
    return v;
}

Basis3 parse_basis(std::string_view text) {
    auto parts = split(text, ';');
    if (parts.size() != 3) throw ParseError("expected three semicolon-separated columns: '" + std::string(text) + "'");
    return {parse_vec(parts[0]), parse_vec(parts[1]), parse_vec(parts[2])};
}

std::array<Int, 6> parse_box(std::string_view text) {
    auto parts = split(text, ',');
    if (parts.size() != 6) throw ParseError("expected box x0,x1,y0,y1,z0,z1: '" + std::string(text) + "'");
    std::array<Int, 6> box{};
    for (std::size_t i = 0; i < 6; ++i) box[i] = parse_int(parts[i]);
    return box;
}

Json to_json(Int v) { return to_i64(v); }

Json to_json(const IntVec3& v) { return Json::array({to_i64(v[0]), to_i64(v[1]), to_i64(v[2])}); }

Json to_json(const Basis3& b) { return Json::array({to_json(b.col(0)), to_json(b.col(1)), to_json(b.col(2))}); }

Json to_json(const HnfBasis3& h) { return to_json(h.basis()); }

Json to_json(const CubicLattice& l) {
    Json j;
    j["basis"] = to_json(l.basis);
    j["hnf"] = to_json(l.hnf);
    j["k"] = to_json(l.k);
    j["d"] = to_json(l.d);
    j["edge"] = to_json(l.edge());
    j["v"] = to_json(l.v);
    return j;
}

Json to_json(const ClassifyResult& r) {
    Json j;
    j["k"] = to_json(r.k);
    j["d"] = to_json(r.d);
    j["v"] = to_json(r.v);
    return j;
}

Json to_json(const ReverseTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) {
        Json j;
        j["p"] = to_json(s.p);
        j["w"] = to_json(s.w);
        j["permutation"] = Json::array({s.perm[0], s.perm[1], s.perm[2]});
        j["sign_flip"] = s.sign_flip;
        j["flip_axis"] = s.flip_axis;
        j["cubic_basis"] = to_json(s.cubic_basis);
        j["before"] = to_json(s.before);
        j["after"] = to_json(s.after);
        steps.push_back(std::move(j));
    }
    Json j;
    j["v"] = to_json(t.v);
    j["d"] = to_json(t.d);
    j["steps"] = std::move(steps);
    j["u"] = to_json(t.u);
    j["certificate"] = to_json(t.certificate);
    return j;
}

Json to_json(const CubicFamily& f) {
    Json members = Json::array();
    for (const auto& [d, l] : f.members) members.push_back(to_json(l));
    Json j;
    j["v"] = to_json(f.v);
    j["d_max"] = to_json(f.d_max);
    j["members"] = std::move(members);
    return j;
}

Json to_json(const BoundSearch& s, bool upper) {
    Json bounds = Json::array();
    for (const auto& l : s.bounds) bounds.push_back(to_json(l));
    Json j;
    j[upper ? "minimal_upper_bounds" : "maximal_lower_bounds"] = std::move(bounds);
    j[upper ? "join_exists" : "meet_exists"] = s.unique();
    return j;
}

} // namespace cubiclat
