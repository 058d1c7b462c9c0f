// arclab: command-line front end for the arc and curve tools.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "arclab/arc.hpp"
#include "arclab/claims.hpp"
#include "arclab/conic.hpp"
#include "arclab/curve.hpp"
#include "arclab/serialize.hpp"

using namespace arclab;

namespace {

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return Json::parse(in);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<Elem> parse_elems(const Field& F, const std::string& s, std::size_t n) {
    std::vector<Elem> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(F.element(static_cast<std::uint32_t>(std::stoul(item))));
    if (out.size() != n) throw std::invalid_argument("expected " + std::to_string(n) + " comma-separated values");
    return out;
}

Arc h_arc(const Conic& C) { return Arc(C.plane(), C.hsets().H); }

Arc k_arc(const Conic& C) {
    auto pts = C.hsets().H;
    pts.push_back(C.choose_R0());
    return Arc(C.plane(), pts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arcs extending half a conic in PG(2,q), q odd"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    // verify
    auto* verify = app.add_subcommand("verify", "Run registered claims");
    std::string claim = "all", qlist, format = "json", out_path;
    RunOptions run;
    bool no_timing = false, list = false;
    verify->add_option("--claim", claim, "Claim id or 'all'");
    verify->add_option("--q", qlist, "Comma list of orders and ranges a..b (default 5..13 and 17..199)");
    verify->add_option("--format", format, "json, csv or text");
    verify->add_option("--out", out_path, "Output file (default stdout)");
    verify->add_option("--jobs", run.jobs, "Worker threads (0 = all cores)");
    verify->add_option("--seed", run.seed, "Seed for sampled curve parameters");
    verify->add_option("--samples", run.curve_samples, "Sampled curves per q above the exhaustive range");
    verify->add_flag("--no-timing", no_timing, "Write elapsed_ms as 0");
    verify->add_flag("--list", list, "List claims and exit");

    // construct
    auto* construct = app.add_subcommand("construct", "Build K = H ∪ {R0}");
    std::uint32_t q = 0;
    std::string emit_path;
    construct->add_option("--q", q, "Field order")->required();
    construct->add_option("--emit", emit_path, "Arc file to write (default stdout)");

    // free-points
    auto* freep = app.add_subcommand("free-points", "Coverage of H (or of an arc file)");
    std::string arc_path;
    freep->add_option("--q", q, "Field order");
    freep->add_option("--arc", arc_path, "Arc file instead of H");

    // complete
    auto* complete = app.add_subcommand("complete", "Complete H (or an arc file)");
    std::size_t cap = 4;
    bool exhaustive = false, reverse = false, internal_only = false;
    complete->add_option("--q", q, "Field order");
    complete->add_option("--arc", arc_path, "Arc file instead of H");
    complete->add_option("--cap", cap, "Maximum added points for --exhaustive");
    complete->add_flag("--exhaustive", exhaustive, "All completions up to the cap (default: greedy)");
    complete->add_flag("--reverse", reverse, "Search in reverse enumeration order");
    complete->add_flag("--internal", internal_only, "Only add points internal to the conic XY = Z^2");

    // curve
    auto* curve = app.add_subcommand("curve", "Analyze a plane curve");
    std::string segre, quartic, curve_path;
    curve->add_option("--q", q, "Field order");
    auto* o_segre = curve->add_option("--segre", segre, "a,b,c,mu");
    auto* o_quartic = curve->add_option("--quartic", quartic, "mu'");
    auto* o_file = curve->add_option("--file", curve_path, "Curve file");
    o_segre->excludes(o_quartic)->excludes(o_file);
    o_quartic->excludes(o_file);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            if (list) {
                for (const auto& c : list_claims()) std::cout << c.id << "  " << c.anchor << '\n';
                return 0;
            }
            std::vector<std::string> ids;
            if (claim == "all") {
                for (const auto& c : list_claims()) ids.push_back(c.id);
            } else {
                ids.push_back(claim_info(claim).id);
            }
            const auto fmt = parse_format(format);
            const auto qs = qlist.empty() ? default_qs() : parse_q_list(qlist);
            const auto reports = run_claims(ids, qs, run);
            write_output(emit(reports, fmt, EmitOptions{!no_timing}), out_path);
            for (const auto& r : reports)
                if (r.status() == Status::Refuted) return 1;
            return 0;
        }
        if (*construct) {
            const Conic C{Field(q)};
            const Arc K = k_arc(C);
            Json j = arc_to_json(K);
            j["complete"] = is_complete(K);
            write_output(j.dump() + "\n", emit_path);
            return 0;
        }
        if (*freep) {
            const Arc arc = arc_path.empty() ? h_arc(Conic{Field(q)}) : arc_from_json(read_json_file(arc_path));
            Json j = coverage_to_json(coverage(arc));
            j["q"] = arc.plane().field().q();
            j["arc_size"] = arc.size();
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*complete) {
            const Arc arc = arc_path.empty() ? h_arc(Conic{Field(q)}) : arc_from_json(read_json_file(arc_path));
            Json j{{"q", arc.plane().field().q()}, {"arc_size", arc.size()}};
            if (exhaustive) {
                const Conic C(arc.plane().field());
                CandidateFilter filter;
                if (internal_only) filter = [&](const Point& p) { return C.classify(p) == PointClass::Internal; };
                const auto res =
                    all_completions(arc, cap, reverse ? SearchOrder::Reverse : SearchOrder::Forward, filter);
                Json by = Json::object();
                for (const auto& [n, sets] : res.by_additions) {
                    Json list_json = Json::array();
                    for (const auto& s : sets) list_json.push_back(points_to_json(s));
                    by[std::to_string(n)] = list_json;
                }
                j["cap"] = cap;
                j["min_additions"] = res.min_additions();
                j["completions"] = by;
                j["cap_exceeded"] = res.cap_exceeded;
                if (internal_only) j["dead_ends"] = res.dead_ends;
            } else {
                const Arc done = greedy_complete(arc);
                j["greedy"] = arc_to_json(done);
                j["size"] = done.size();
            }
            std::cout << j.dump() << '\n';
            return 0;
        }
        if (*curve) {
            std::optional<HomPoly> P;
            if (!curve_path.empty()) {
                P = curve_from_json(read_json_file(curve_path));
            } else {
                const Field F(q);
                if (!segre.empty()) {
                    const auto v = parse_elems(F, segre, 4);
                    P = segre_curve(F, v[0], v[1], v[2], v[3]);
                } else if (!quartic.empty()) {
                    P = quartic_curve(F, parse_elems(F, quartic, 1)[0]);
                } else {
                    throw std::invalid_argument("one of --segre, --quartic or --file is required");
                }
            }
            const Plane plane(P->field());
            Json j{{"curve", curve_to_json(*P)}, {"report", curve_report_to_json(analyze_curve(*P, plane))}};
            std::cout << j.dump() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
