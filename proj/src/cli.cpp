#include "cubiclat/cli.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "cubiclat/verify.hpp"

namespace cubiclat::cli {

namespace {

void print_lattice(std::ostream& out, const CubicLattice& l) {
    out << "edge " << to_string(l.edge()) << " = k " << to_string(l.k) << " * d " << to_string(l.d) << '\n'
        << "cubic basis: " << l.basis << '\n'
        << "hnf: " << l.hnf << '\n'
        << "primitive witness v: " << l.v << '\n';
}

Int parse_edge(const std::string& text) {
    Int d = parse_int(text);
    if (d < 1 || d > kMaxEdge) throw ParseError("edge must lie in [1, 10000]: '" + text + "'");
    return d;
}

CubicLattice require_cubic(const std::string& text) {
    Basis3 b = parse_basis(text);
    auto r = classify(b);
    if (!r) throw DomainError("lattice " + text + " is not cubic");
    CubicLattice l = lattice_of(*r);
    if (auto basis = cubic_basis_extract(b)) l.basis = *basis;
    return l;
}

} // namespace

Json export_points(const IntVec3& v, Int d, const std::array<Int, 6>& box) {
    Int volume = 1;
    for (std::size_t i = 0; i < 3; ++i) {
        Int len = box[2 * i + 1] - box[2 * i] + 1;
        volume = len <= 0 ? 0 : checked::mul(volume, len);
        if (volume > 1000000) throw DomainError("box holds more than 10^6 points");
    }
    CubicLattice l = gamma_any(v, d);
    Json gamma_points = Json::array();
    Json ambient_points = Json::array();
    if (volume > 0) {
        for (Int x = box[0]; x <= box[1]; ++x)
            for (Int y = box[2]; y <= box[3]; ++y)
                for (Int z = box[4]; z <= box[5]; ++z) {
                    IntVec3 a{x, y, z};
                    ambient_points.push_back(to_json(a));
                    if (contains(l.hnf.basis(), a)) gamma_points.push_back(to_json(a));
                }
    }
    Json j;
    j["gamma_points"] = std::move(gamma_points);
    j["ambient_points"] = std::move(ambient_points);
    j["v"] = to_json(v);
    j["cubic_basis"] = to_json(l.basis);
    return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, classify and verify cubic sublattices of Z^3", "cubiclat"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of text");

    std::function<void()> action;
    auto emit = [&](const Json& j, const std::function<void()>& text) {
        if (json)
            out << j.dump() << '\n';
        else
            text();
    };

    std::string v_text, d_text, a_text, t_text, basis_text, l1_text, l2_text, box_text, p_text;
    bool any = false, all_decompositions = false;
    std::int64_t bound = 9, max_norm = 200, max_d = 5;

    auto* gamma_cmd = app.add_subcommand("gamma", "Cubic sublattice of edge d containing v");
    gamma_cmd->add_option("--v", v_text, "Vector x,y,z")->required();
    gamma_cmd->add_option("--d", d_text, "Edge length")->required();
    gamma_cmd->add_flag("--any", any, "Allow imprimitive v (d1 * Gamma(u, d2) with the largest d2)");
    gamma_cmd->add_flag("--all-decompositions", all_decompositions,
                        "List d1 * Gamma(u, d2) for every admissible d = d1 * d2");
    gamma_cmd->callback([&] {
        action = [&] {
            IntVec3 v = parse_vec(v_text);
            Int d = parse_edge(d_text);
            if (all_decompositions) {
                Json arr = Json::array();
                std::vector<CubicLattice> ls;
                for (const auto& dec : decompositions(v, d)) {
                    ls.push_back(gamma_for(v, dec));
                    arr.push_back(to_json(ls.back()));
                }
                emit(arr, [&] {
                    for (const auto& l : ls) {
                        print_lattice(out, l);
                        out << '\n';
                    }
                });
                return;
            }
            CubicLattice l = any ? gamma_any(v, d) : gamma(v, d);
            emit(to_json(l), [&] { print_lattice(out, l); });
        };
    });

    auto* basis_cmd = app.add_subcommand("cubic-basis", "Extract a cubic basis of a lattice");
    basis_cmd->add_option("--basis", basis_text, "Columns a1,a2,a3;b1,b2,b3;c1,c2,c3")->required();
    basis_cmd->callback([&] {
        action = [&] {
            auto b = cubic_basis_extract(parse_basis(basis_text));
            Json j;
            j["cubic"] = b.has_value();
            if (b) j["basis"] = to_json(*b);
            emit(j, [&] {
                if (b)
                    out << "cubic basis: " << *b << '\n';
                else
                    out << "not cubic\n";
            });
        };
    });

    auto* classify_cmd = app.add_subcommand("classify", "Write a lattice as k * Gamma(v, d) or report NotCubic");
    classify_cmd->add_option("--basis", basis_text, "Columns a1,a2,a3;b1,b2,b3;c1,c2,c3")->required();
    classify_cmd->callback([&] {
        action = [&] {
            Basis3 b = parse_basis(basis_text);
            auto r = classify(b);
            Json j;
            j["cubic"] = r.has_value();
            if (r) {
                j["k"] = to_json(r->k);
                j["d"] = to_json(r->d);
                j["edge"] = to_json(r->k * r->d);
                j["v"] = to_json(r->v);
                j["hnf"] = to_json(hnf(b));
            }
            emit(j, [&] {
                if (!r) {
                    out << "not cubic\n";
                    return;
                }
                out << "cubic: lattice = " << to_string(r->k) << " * Gamma(" << r->v << ", " << to_string(r->d)
                    << ")\nedge " << to_string(r->k * r->d) << "\nhnf: " << hnf(b) << '\n';
            });
        };
    });

    auto* member_cmd = app.add_subcommand("member", "Definitional membership of a in Gamma(v, d)");
    member_cmd->add_option("--v", v_text, "Primitive vector x,y,z")->required();
    member_cmd->add_option("--d", d_text, "Edge length")->required();
    member_cmd->add_option("--a", a_text, "Candidate vector x,y,z")->required();
    member_cmd->callback([&] {
        action = [&] {
            IntVec3 v = parse_vec(v_text);
            Int d = parse_edge(d_text);
            IntVec3 a = parse_vec(a_text);
            if (norm2(v) % (d * d) != 0) throw DomainError("d² does not divide ‖v‖²");
            bool m = gamma_membership_def(v, d, a);
            Json j;
            j["v"] = to_json(v);
            j["d"] = to_json(d);
            j["a"] = to_json(a);
            j["member"] = m;
            emit(j, [&] { out << (m ? "member" : "not a member") << '\n'; });
        };
    });

    auto* prime_cmd = app.add_subcommand("prime-vector", "Primitive w with p^2 | |w|^2");
    prime_cmd->add_option("--p", p_text, "Odd prime")->required();
    prime_cmd->callback([&] {
        action = [&] {
            Int p = parse_int(p_text);
            if (p < 2 || p > kMaxEdge) throw ParseError("p must lie in [2, 10000]");
            IntVec3 w = prime_vector(p);
            Json j;
            j["p"] = to_json(p);
            j["w"] = to_json(w);
            j["norm2"] = to_json(norm2(w));
            emit(j, [&] { out << w << "  |w|^2 = " << to_string(norm2(w)) << '\n'; });
        };
    });

    auto* reverse_cmd = app.add_subcommand("reverse", "Primitive u whose coordinates in a cubic basis of Gamma(u, d) are v");
    reverse_cmd->add_option("--v", v_text, "Primitive vector x,y,z")->required();
    reverse_cmd->add_option("--d", d_text, "Odd edge length")->required();
    reverse_cmd->callback([&] {
        action = [&] {
            ReverseTrace t = reverse_construct(parse_vec(v_text), parse_edge(d_text));
            emit(to_json(t), [&] {
                for (const auto& s : t.steps)
                    out << "p=" << to_string(s.p) << " w=" << s.w << (s.sign_flip ? " (flipped)" : "")
                        << " basis " << s.cubic_basis << ": " << s.before << " -> " << s.after << '\n';
                out << "u = " << t.u << '\n' << "certificate: " << t.certificate << '\n';
            });
        };
    });

    for (const char* name : {"scale-down", "scale-up"}) {
        bool up = std::string(name) == "scale-up";
        auto* cmd = app.add_subcommand(name, up ? "Coprime triple for d^2 * sum" : "Coprime triple for sum / d^2");
        cmd->add_option("--t", t_text, "Coprime triple x,y,z")->required();
        cmd->add_option("--d", d_text, "Scale")->required();
        cmd->callback([&, up] {
            action = [&, up] {
                IntVec3 t = parse_vec(t_text);
                Int d = parse_edge(d_text);
                IntVec3 r = up ? scale_up(t, d) : scale_down(t, d);
                Json j;
                j["t"] = to_json(t);
                j["d"] = to_json(d);
                j["result"] = to_json(r);
                j["sum_of_squares"] = to_json(norm2(r));
                emit(j, [&] { out << r << "  sum of squares " << to_string(norm2(r)) << '\n'; });
            };
        });
    }

    for (const char* name : {"poset-join", "poset-meet"}) {
        bool join = std::string(name) == "poset-join";
        auto* cmd = app.add_subcommand(name, join ? "Minimal cubic upper bounds of two cubic lattices"
                                                  : "Maximal cubic lower bounds of two cubic lattices");
        cmd->add_option("--l1", l1_text, "First lattice basis")->required();
        cmd->add_option("--l2", l2_text, "Second lattice basis")->required();
        cmd->add_option("--bound", bound, "Largest edge searched")->check(CLI::Range(1, 12));
        cmd->callback([&, join] {
            action = [&, join] {
                CubicLattice l1 = require_cubic(l1_text);
                CubicLattice l2 = require_cubic(l2_text);
                BoundSearch s = join ? minimal_cubic_over(l1, l2, bound) : maximal_cubic_under(l1, l2, bound);
                emit(to_json(s, join), [&] {
                    for (const auto& l : s.bounds)
                        out << (join ? "upper bound" : "lower bound") << ": edge " << to_string(l.edge()) << " hnf "
                            << l.hnf << '\n';
                    out << (join ? "join" : "meet") << (s.unique() ? " exists" : " does not exist") << " within edge "
                        << bound << '\n';
                });
            };
        });
    }

    auto* family_cmd = app.add_subcommand("divisor-family", "Cubic lattices containing a primitive v");
    family_cmd->add_option("--v", v_text, "Primitive vector x,y,z")->required();
    family_cmd->callback([&] {
        action = [&] {
            CubicFamily f = divisor_family(parse_vec(v_text));
            emit(to_json(f), [&] {
                out << "d_max = " << to_string(f.d_max) << '\n';
                for (const auto& [d, l] : f.members) out << "d=" << to_string(d) << ": hnf " << l.hnf << '\n';
            });
        };
    });

    auto* verify_cmd = app.add_subcommand("verify", "Run every brute-force oracle");
    verify_cmd->add_option("--max-norm", max_norm, "Largest |v|^2")->check(CLI::Range(1, 2000));
    verify_cmd->add_option("--max-d", max_d, "Largest edge")->check(CLI::Range(1, 12));
    verify_cmd->callback([&] {
        action = [&] {
            auto report = run_verification({max_norm, max_d});
            bool ok = std::all_of(report.begin(), report.end(), [](const CheckResult& c) { return c.passed(); });
            Json checks = Json::array();
            for (const auto& c : report) {
                Json j;
                j["name"] = c.name;
                j["cases"] = c.cases;
                j["failures"] = c.failures;
                if (!c.passed()) j["first_failure"] = c.first_failure;
                checks.push_back(std::move(j));
            }
            Json j;
            j["checks"] = std::move(checks);
            j["passed"] = ok;
            emit(j, [&] {
                for (const auto& c : report) {
                    out << (c.passed() ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases";
                    if (!c.passed()) out << ", " << c.failures << " failed, first: " << c.first_failure;
                    out << ")\n";
                }
                out << (ok ? "all checks passed" : "some checks failed") << '\n';
            });
            if (!ok) throw DomainError("verification failed");
        };
    });

    auto* export_cmd = app.add_subcommand("export", "Lattice points of Gamma and Z^3 inside a box, as JSON");
    export_cmd->add_option("--v", v_text, "Vector x,y,z")->required();
    export_cmd->add_option("--d", d_text, "Edge length")->required();
    export_cmd->add_option("--box", box_text, "x0,x1,y0,y1,z0,z1")->required();
    export_cmd->callback([&] {
        action = [&] {
            // Always JSON: the document is plot data.
            out << export_points(parse_vec(v_text), parse_edge(d_text), parse_box(box_text)).dump() << '\n';
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsageError;
    }

    try {
        action();
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const LatticeError& e) {
        err << e.what() << '\n';
        return kDomainError;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << '\n';
        return kDomainError;
    }
    return kOk;
}

} // namespace cubiclat::cli
