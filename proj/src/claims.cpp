#include "arclab/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "arclab/arc.hpp"
#include "arclab/conic.hpp"
#include "arclab/curve.hpp"

namespace arclab {

std::string to_string(Status s) {
    switch (s) {
        case Status::Verified: return "VERIFIED";
        case Status::Refuted: return "REFUTED";
        case Status::Partial: return "PARTIAL";
        case Status::Skipped: return "SKIPPED";
    }
    return "?";
}

Status ClaimReport::status() const {
    bool any_partial = false, any_verified = false;
    for (const auto& r : q_results) {
        if (r.status == Status::Refuted) return Status::Refuted;
        any_partial |= r.status == Status::Partial;
        any_verified |= r.status == Status::Verified;
    }
    if (any_partial) return Status::Partial;
    return any_verified ? Status::Verified : Status::Skipped;
}

namespace {

struct Ctx {
    Field F;
    Conic C;
    Arc H;
    CoverageMap covH;

    explicit Ctx(std::uint32_t q) : F(q), C(F), H(C.plane(), C.hsets().H), covH(coverage(H)) {}

    const Plane& plane() const { return C.plane(); }
    bool h_free(const Point& p) const { return covH.state(p) == PointState::Free; }
    bool off_conic_h_free(const Point& p) const { return !C.contains(p) && h_free(p); }
};

struct Outcome {
    Status status = Status::Verified;
    Json w = Json::object();
};

using Check = std::function<Outcome(const Ctx&, const RunOptions&)>;

Json pt(const Point& p) { return point_to_json(p); }

Json first_points(const std::vector<Point>& pts, std::size_t n = 10) {
    Json out = Json::array();
    for (std::size_t i = 0; i < pts.size() && i < n; ++i) out.push_back(pt(pts[i]));
    return out;
}

Status verdict(bool ok) { return ok ? Status::Verified : Status::Refuted; }

Arc k_arc(const Ctx& c) {
    auto pts = c.C.hsets().H;
    pts.push_back(c.C.choose_R0());
    return Arc(c.plane(), std::move(pts));
}

std::vector<Point> off_conic_free(const Ctx& c) {
    std::vector<Point> out;
    for (const auto& p : c.covH.free_points())
        if (!c.C.contains(p)) out.push_back(p);
    return out;
}

std::vector<Point> expected_h_free(const Ctx& c) {
    const auto q = c.F.q();
    std::vector<Point> out;
    if (q % 4 == 3) out.push_back(c.plane().point(0, 0, 1));
    for (std::uint32_t m = 1; m < q; ++m) {
        const bool sq = c.F.is_nonzero_square(Elem{m});
        if ((q % 4 == 3) == sq) out.push_back(c.plane().normalize({c.F.one(), Elem{m}, c.F.zero()}));
    }
    return out;
}

Outcome check_covered_abc(const Ctx& c, const RunOptions&) {
    std::size_t checked = 0;
    std::vector<Point> free;
    for (const auto& p : c.plane().all_points()) {
        if (p.x().code == 0 || p.y().code == 0 || p.z().code == 0 || c.C.contains(p)) continue;
        ++checked;
        if (c.h_free(p)) free.push_back(p);
    }
    Outcome o;
    o.w = {{"domain", "R=(a,b,c), abc!=0, R off C"}, {"checked", checked}, {"h_free", free.size()}};
    if (!free.empty()) {
        o.w["witness"] = pt(free.front());
        o.w["h_free_points"] = first_points(free);
    }
    o.status = verdict(free.empty());
    return o;
}

Outcome check_case_c0(const Ctx& c, const RunOptions&) {
    const auto q = c.F.q();
    std::size_t free = 0;
    std::vector<Point> bad;
    for (std::uint32_t m = 1; m < q; ++m) {
        const Point R = c.plane().normalize({c.F.one(), Elem{m}, c.F.zero()});
        const bool sq = c.F.is_nonzero_square(Elem{m});
        const bool expected = (q % 4 == 3) ? sq : !sq;
        const bool actual = c.h_free(R);
        free += actual;
        if (actual != expected) bad.push_back(R);
    }
    Outcome o;
    o.w = {{"domain", "R=(1,m,0), m!=0"}, {"checked", q - 1}, {"h_free", free}, {"mismatches", bad.size()}};
    if (!bad.empty()) o.w["witness"] = pt(bad.front());
    o.status = verdict(bad.empty());
    return o;
}

Outcome check_case_ab0(const Ctx& c, const RunOptions&) {
    const Point R = c.plane().point(0, 0, 1);
    const bool expected = c.F.q() % 4 == 3;
    const bool actual = c.h_free(R);
    Outcome o;
    o.w = {{"point", pt(R)}, {"q_mod_4", c.F.q() % 4}, {"h_free", actual}, {"expected_h_free", expected}};
    o.status = verdict(actual == expected);
    return o;
}

Outcome check_uv(const Ctx& c, const RunOptions&) {
    const auto q = c.F.q();
    std::vector<Point> free;
    for (std::uint32_t v = 1; v < q; ++v) {
        for (const Point& R : {c.plane().normalize({c.F.zero(), c.F.one(), Elem{v}}),
                               c.plane().normalize({c.F.one(), c.F.zero(), Elem{v}})})
            if (c.h_free(R)) free.push_back(R);
    }
    std::sort(free.begin(), free.end());
    Outcome o;
    o.w = {{"domain", "U=(0,1,c), V=(1,0,c), c!=0"}, {"checked", 2 * (q - 1)}, {"h_free", free.size()}};
    if (!free.empty()) {
        o.w["witness"] = pt(free.front());
        o.w["h_free_points"] = first_points(free);
    }
    o.status = verdict(free.empty());
    return o;
}

Outcome check_hprime(const Ctx& c, const RunOptions&) {
    const Point R0 = c.C.choose_R0();
    const Arc K = k_arc(c);
    const auto covK = coverage(K);
    std::vector<Point> bad;
    for (const auto& P : c.C.hsets().Hprime) {
        const Point Q = c.C.tau(R0, P);
        const bool ok = Q != P && c.C.in_H(Q) && covK.state(P) == PointState::Covered;
        if (!ok) bad.push_back(P);
    }
    Outcome o;
    o.w = {{"R0", pt(R0)}, {"checked", c.C.hsets().Hprime.size()}, {"uncovered", bad.size()}};
    if (!bad.empty()) o.w["witness"] = pt(bad.front());
    o.status = verdict(bad.empty());
    return o;
}

Outcome check_001(const Ctx& c, const RunOptions&) {
    const auto q = c.F.q();
    const Point O = c.plane().point(0, 0, 1);
    Outcome o;
    if (q % 4 == 1) {
        const bool covered = c.covH.state(O) == PointState::Covered;
        o.w = {{"case", "q = 1 mod 4: H-covered"}, {"point", pt(O)}, {"h_covered", covered}};
        o.status = verdict(covered);
        return o;
    }
    // q = 3 mod 4: each admissible R = (1,m,0) (m a square) and K_m = H ∪ {R}.
    std::size_t checked = 0, covered_count = 0;
    std::vector<std::uint32_t> bad;
    for (std::uint32_t m = 1; m < q; ++m) {
        if (!c.F.is_nonzero_square(Elem{m})) continue;
        ++checked;
        const Point R = c.plane().normalize({c.F.one(), Elem{m}, c.F.zero()});
        bool covered = c.covH.state(O) == PointState::Covered;
        for (const auto& P : c.C.hsets().H)
            if (!covered && c.plane().collinear(R, P, O)) covered = true;
        covered_count += covered;
        if (covered != c.F.is_fourth_power(Elem{m})) bad.push_back(m);
    }
    const auto covK = coverage(k_arc(c));
    const bool k_covered = covK.state(O) == PointState::Covered;
    o.w = {{"case", "q = 3 mod 4: K_m-covered iff m is a fourth power"},
           {"checked", checked},
           {"covered", covered_count},
           {"mismatches", bad.size()},
           {"R0", pt(c.C.choose_R0())},
           {"k_covered", k_covered}};
    if (!bad.empty()) o.w["witness_m"] = bad.front();
    o.status = verdict(bad.empty() && k_covered);
    return o;
}

Outcome check_theorem(const Ctx& c, const RunOptions&) {
    const auto q = c.F.q();
    Outcome o;
    const Point R0 = c.C.choose_R0();
    o.w["R0"] = pt(R0);
    try {
        const Arc K = k_arc(c);
        const auto free = free_points(K);
        o.w["size"] = K.size();
        o.w["expected_size"] = (q + 3) / 2;
        o.w["free_count"] = free.size();
        if (!free.empty()) o.w["witness"] = pt(free.front());
        o.status = verdict(K.size() == (q + 3) / 2 && free.empty());
    } catch (const CollinearTripleError& e) {
        o.w["collinear"] = Json::array({pt(e.witness()[0]), pt(e.witness()[1]), pt(e.witness()[2])});
        o.status = Status::Refuted;
    }
    return o;
}

Outcome check_corollary(const Ctx& c, const RunOptions&) {
    const auto q = c.F.q();
    const auto actual = off_conic_free(c);
    auto expected = expected_h_free(c);
    std::sort(expected.begin(), expected.end());
    const std::size_t expected_count = q % 4 == 1 ? (q - 1) / 2 : (q + 1) / 2;

    std::vector<Point> diff;
    std::set_symmetric_difference(actual.begin(), actual.end(), expected.begin(), expected.end(),
                                  std::back_inserter(diff));
    std::size_t not_internal = 0;
    for (const auto& p : actual)
        if (p.z().code == 0 && c.C.classify(p) != PointClass::Internal) ++not_internal;
    std::size_t z0_conic = 0;
    for (const auto& p : c.plane().points_on(Line{{c.F.zero(), c.F.zero(), c.F.one()}})) z0_conic += c.C.contains(p);

    Outcome o;
    o.w = {{"h_free_off_conic", actual.size()},
           {"expected_count", expected_count},
           {"set_equal", diff.empty()},
           {"on_Z0_not_internal", not_internal},
           {"Z0_conic_points", z0_conic}};
    if (q % 4 == 3) o.w["point_001_class"] = to_string(c.C.classify(c.plane().point(0, 0, 1)));
    if (!diff.empty()) o.w["witness"] = pt(diff.front());
    o.status = verdict(diff.empty() && actual.size() == expected_count && not_internal == 0 && z0_conic == 2);
    return o;
}

Outcome check_pellegrino(const Ctx& c, const RunOptions&) {
    std::vector<Point> internal;
    for (const auto& p : off_conic_free(c))
        if (c.C.classify(p) == PointClass::Internal) internal.push_back(p);
    std::size_t off_z0 = 0;
    for (const auto& p : internal) off_z0 += p.z().code != 0;

    std::size_t pairs = 0;
    std::optional<std::pair<Point, Point>> bad;
    for (std::size_t i = 0; i < internal.size() && !bad; ++i)
        for (std::size_t j = i + 1; j < internal.size(); ++j) {
            ++pairs;
            const Line l = c.plane().line_through(internal[i], internal[j]);
            std::size_t meets = 0;
            for (const auto& p : c.plane().points_on(l)) meets += c.C.contains(p);
            if (meets == 0) {
                bad = std::pair{internal[i], internal[j]};
                break;
            }
        }
    std::size_t z0_conic = 0;
    for (const auto& p : c.plane().points_on(Line{{c.F.zero(), c.F.zero(), c.F.one()}})) z0_conic += c.C.contains(p);

    Outcome o;
    o.w = {{"internal_h_free", internal.size()},
           {"pairs_checked", pairs},
           {"internal_off_Z0", off_z0},
           {"Z0_conic_points", z0_conic}};
    if (bad) o.w["witness"] = Json::array({pt(bad->first), pt(bad->second)});
    o.status = verdict(!bad && off_z0 == 0 && z0_conic == 2);
    return o;
}

Json class_counts(const Conic& C, const std::vector<Point>& pts) {
    std::map<std::string, std::size_t> n;
    for (const auto& p : pts) ++n[to_string(C.classify(p))];
    Json out = Json::object();
    for (const auto& [k, v] : n) out[k] = v;
    return out;
}

// The construction first adds R0 to H, then completes K = H ∪ {R0}.
Outcome check_small_q(const Ctx& c, const RunOptions& opts) {
    const auto q = c.F.q();
    Outcome o;
    if (q != 9 && q != 11 && q != 13) {
        o.status = Status::Skipped;
        o.w = {{"reason", "reproduced only for q in {9, 11, 13}"}};
        return o;
    }
    const Arc K = k_arc(c);
    const auto res = all_completions(K, opts.completion_cap);
    Json spectrum = Json::object();
    for (const auto& [n, sets] : res.by_additions) spectrum[std::to_string(n + 1)] = sets.size();
    const std::size_t min_add = res.by_additions.empty() ? 0 : 1 + res.min_additions();
    o.w = {{"start", "K = H + R0"},
           {"R0", pt(c.C.choose_R0())},
           {"cap", opts.completion_cap},
           {"H_size", c.H.size()},
           {"completions_by_additions_to_H", spectrum},
           {"cap_exceeded", res.cap_exceeded},
           {"min_additions", min_add},
           {"min_size", c.H.size() + min_add}};
    if (!res.by_additions.empty()) {
        auto first = res.by_additions.begin()->second.front();
        first.insert(first.begin(), c.C.choose_R0());
        o.w["first_minimal_additions"] = points_to_json(first);
        o.w["first_minimal_classes"] = class_counts(c.C, first);
    }

    // Informational: the same search started from H alone.
    const auto from_h = all_completions(c.H, opts.completion_cap);
    Json h_spectrum = Json::object();
    for (const auto& [n, sets] : from_h.by_additions) h_spectrum[std::to_string(n)] = sets.size();
    o.w["from_H"] = {{"completions_by_additions", h_spectrum},
                     {"cap_exceeded", from_h.cap_exceeded},
                     {"min_additions", from_h.min_additions()},
                     {"min_size", c.H.size() + from_h.min_additions()}};
    if (!from_h.by_additions.empty())
        o.w["from_H"]["first_minimal_classes"] = class_counts(c.C, from_h.by_additions.begin()->second.front());

    bool ok = false;
    if (q == 9) ok = min_add == 3 && c.H.size() + min_add == 8;
    if (q == 11) ok = res.by_additions.count(1) && c.H.size() + 2 == 8;
    if (q == 13) ok = res.by_additions.count(1) && c.H.size() + 2 == 9;
    o.status = verdict(ok);
    return o;
}

struct SegreParams {
    Elem a, b, c, mu;
};

std::vector<SegreParams> segre_samples(const Field& F, const RunOptions& opts, bool& exhaustive) {
    const auto q = F.q();
    std::vector<SegreParams> out;
    exhaustive = q <= opts.curve_exhaustive_max;
    if (exhaustive) {
        for (std::uint32_t b = 1; b < q; ++b)
            for (std::uint32_t cc = 1; cc < q; ++cc) {
                if (Elem{b} == F.mul(Elem{cc}, Elem{cc})) continue;
                for (std::uint32_t m = 1; m < q; ++m)
                    if (!F.is_nonzero_square(Elem{m})) out.push_back({F.one(), Elem{b}, Elem{cc}, Elem{m}});
            }
        return out;
    }
    std::mt19937_64 rng(opts.seed ^ (0x9e3779b97f4a7c15ULL * q));
    std::uniform_int_distribution<std::uint32_t> pick(1, q - 1);
    while (out.size() < opts.curve_samples) {
        const Elem a{pick(rng)}, b{pick(rng)}, cc{pick(rng)}, m{pick(rng)};
        if (F.mul(a, b) == F.mul(cc, cc) || F.is_nonzero_square(m)) continue;
        out.push_back({a, b, cc, m});
    }
    return out;
}

Json segre_json(const SegreParams& s) { return Json::array({s.a.code, s.b.code, s.c.code, s.mu.code}); }

Outcome check_segre(const Ctx& c, const RunOptions& opts) {
    const auto& F = c.F;
    const auto& plane = c.plane();
    const auto q = F.q();
    bool exhaustive = false;
    const auto samples = segre_samples(F, opts, exhaustive);
    const Point X = plane.point(1, 0, 0), Y = plane.point(0, 1, 0);
    const std::vector<Point> expected_sing{Y, X};

    std::size_t bad_sing = 0, bad_genus = 0, degenerate = 0, bad_hw = 0, e_checked = 0, bad_e = 0;
    std::size_t h_free = 0, bookkeeping_ok = 0;
    std::uint64_t min_n = ~0ULL, max_n = 0;
    Json first_bad;
    Json h_free_examples = Json::array();
    auto note = [&](const SegreParams& s, const char* what) {
        if (first_bad.is_null()) first_bad = Json{{"params", segre_json(s)}, {"failed", what}};
    };
    for (const auto& s : samples) {
        const HomPoly S = segre_curve(F, s.a, s.b, s.c, s.mu);
        const auto rep = analyze_curve(S, plane);
        min_n = std::min<std::uint64_t>(min_n, rep.points);
        max_n = std::max<std::uint64_t>(max_n, rep.points);

        std::vector<Point> sing;
        bool sing_ok = true;
        for (const auto& si : rep.singular) {
            sing.push_back(si.point);
            sing_ok &= si.multiplicity == 2 && si.ordinary;
        }
        if (sing != expected_sing || !sing_ok) {
            ++bad_sing;
            note(s, "singular locus");
        }
        if (!rep.genus.genus) {
            if (rep.genus.reason.rfind("elimination degenerate", 0) == 0) {
                ++degenerate;
            } else {
                ++bad_genus;
                note(s, "genus");
            }
        } else if (*rep.genus.genus != 1) {
            ++bad_genus;
            note(s, "genus");
        }
        const auto hw = hasse_weil_check(q, rep.points, 1, 2);
        if (!hw.holds) {
            ++bad_hw;
            note(s, "hasse-weil");
        }

        // Tangent direction at X: e^2 = c / (mu a).
        if (const auto e = F.sqrt(F.div(s.c, F.mul(s.mu, s.a)))) {
            ++e_checked;
            const Point V = plane.normalize({F.zero(), *e, F.one()});
            const bool ok = intersection_multiplicity(S, X, V) == 4 && tangent_line_multiplicity(S, X, V) == 1 &&
                            linear_components_through(S, plane, X).empty();
            if (!ok) {
                ++bad_e;
                note(s, "tangent at X");
            }
        }

        const Point R = plane.normalize({s.a, s.b, s.c});
        if (c.h_free(R)) {
            ++h_free;
            const bool ok = rep.points + 6 >= 2ULL * q;
            bookkeeping_ok += ok;
            if (h_free_examples.size() < 5)
                h_free_examples.push_back(Json{{"params", segre_json(s)}, {"points", rep.points}, {"at_least_2q_minus_6", ok}});
        }
    }

    Outcome o;
    o.w = {{"domain", exhaustive ? "exhaustive: a=1, all b, c, nonsquare mu" : "seeded random sample"},
           {"samples", samples.size()},
           {"seed", opts.seed},
           {"singular_locus_failures", bad_sing},
           {"genus_failures", bad_genus},
           {"genus_inconclusive", degenerate},
           {"hasse_weil_failures", bad_hw},
           {"points_min", min_n},
           {"points_max", max_n},
           {"tangent_checks", e_checked},
           {"tangent_failures", bad_e},
           {"h_free_params", h_free},
           {"h_free_with_2q_minus_6_points", bookkeeping_ok},
           {"genus_one_excludes_2q_minus_6", genus_one_bound_excludes(q, 2ULL * q - 6)}};
    if (!h_free_examples.empty()) o.w["h_free_examples"] = h_free_examples;
    if (!first_bad.is_null()) o.w["witness"] = first_bad;
    const bool refuted = bad_sing || bad_genus || bad_hw || bad_e || bookkeeping_ok != h_free;
    o.status = refuted ? Status::Refuted : (degenerate ? Status::Partial : Status::Verified);
    return o;
}

Outcome check_quartic(const Ctx& c, const RunOptions&) {
    const auto& F = c.F;
    const auto& plane = c.plane();
    const auto q = F.q();
    const std::vector<Point> expected_sing{plane.point(0, 0, 1), plane.point(0, 1, 0), plane.point(1, 0, 0)};
    std::size_t bad_sing = 0, bad_genus = 0, degenerate = 0, bad_count = 0, bad_sym = 0, bad_v = 0;
    std::size_t with_chord = 0;
    std::uint64_t min_n = ~0ULL, max_n = 0;
    Json first_bad;
    auto note = [&](std::uint32_t m, const char* what) {
        if (first_bad.is_null()) first_bad = Json{{"mu_prime", m}, {"failed", what}};
    };
    for (std::uint32_t m = 1; m < q; ++m) {
        const HomPoly Q = quartic_curve(F, Elem{m});
        const auto rep = analyze_curve(Q, plane);
        const auto pts = rational_points(Q, plane);
        min_n = std::min<std::uint64_t>(min_n, rep.points);
        max_n = std::max<std::uint64_t>(max_n, rep.points);

        std::vector<Point> sing;
        bool sing_ok = true;
        for (const auto& si : rep.singular) {
            sing.push_back(si.point);
            sing_ok &= si.multiplicity == 2 && si.ordinary;
        }
        if (sing != expected_sing || !sing_ok) {
            ++bad_sing;
            note(m, "singular locus");
        }
        if (!rep.genus.genus) {
            if (rep.genus.reason.rfind("elimination degenerate", 0) == 0) {
                ++degenerate;
            } else {
                ++bad_genus;
                note(m, "genus");
            }
        } else if (*rep.genus.genus != 0) {
            ++bad_genus;
            note(m, "genus");
        }
        if (std::llabs(static_cast<long long>(rep.points) - static_cast<long long>(q + 1)) > 3) {
            ++bad_count;
            note(m, "point count");
        }
        const std::set<Point> set(pts.begin(), pts.end());
        bool chord = false;
        for (const auto& p : pts) {
            if (!set.count(plane.normalize({p.y(), p.x(), p.z()}))) {
                ++bad_sym;
                note(m, "symmetry");
                break;
            }
        }
        for (const auto& p : pts) {
            if (p.z().code == 0) continue;
            // Affine (x, y) = (X/Z, Y/Z).
            const Elem x = F.div(p.x(), p.z()), y = F.div(p.y(), p.z());
            if (x.code != 0 && y.code != 0 && F.mul(x, x) != F.mul(y, y)) chord = true;
        }
        if (chord) {
            ++with_chord;
            if (c.covH.state(plane.normalize({F.one(), F.zero(), Elem{m}})) != PointState::Covered) {
                ++bad_v;
                note(m, "V not covered despite a chord point");
            }
        }
    }
    Outcome o;
    o.w = {{"domain", "exhaustive: all mu' != 0"},
           {"curves", q - 1},
           {"singular_locus_failures", bad_sing},
           {"genus_failures", bad_genus},
           {"genus_inconclusive", degenerate},
           {"count_failures", bad_count},
           {"symmetry_failures", bad_sym},
           {"points_min", min_n},
           {"points_max", max_n},
           {"mu_with_chord_point", with_chord},
           {"chord_implication_failures", bad_v}};
    if (!first_bad.is_null()) o.w["witness"] = first_bad;
    const bool refuted = bad_sing || bad_genus || bad_count || bad_sym || bad_v;
    o.status = refuted ? Status::Refuted : (degenerate ? Status::Partial : Status::Verified);
    return o;
}

// The unrefined criterion: some nonzero square x with phi(x) a nonzero square.
bool literal_criterion(const Ctx& c, const Point& R) {
    for (std::uint32_t s = 1; s < c.F.q(); ++s) {
        if (!c.F.is_nonzero_square(Elem{s})) continue;
        const auto t = c.C.phi(R, ExtParam{Elem{s}});
        if (!t.is_infinity() && c.F.is_nonzero_square(t.value())) return true;
    }
    return false;
}

Outcome check_oracle(const Ctx& c, const RunOptions&) {
    std::size_t checked = 0, literal_mismatch = 0;
    std::vector<Point> bad;
    Json literal_example;
    for (const auto& R : c.plane().all_points()) {
        if (c.C.contains(R)) continue;
        ++checked;
        const bool truth = c.covH.state(R) == PointState::Covered;
        if (c.C.is_H_covered_projective(R) != truth) bad.push_back(R);
        if (literal_criterion(c, R) != truth) {
            if (literal_example.is_null()) literal_example = pt(R);
            ++literal_mismatch;
        }
    }
    Outcome o;
    o.w = {{"domain", "all R off C"}, {"checked", checked}, {"mismatches", bad.size()},
           {"unrefined_criterion_mismatches", literal_mismatch}};
    if (!literal_example.is_null()) o.w["unrefined_example"] = literal_example;
    if (!bad.empty()) o.w["witness"] = pt(bad.front());
    o.status = verdict(bad.empty());
    return o;
}

struct Entry {
    ClaimInfo info;
    Check check;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> r{
        {{"lemma-covered-abc", "points with abc != 0", "every R(a,b,c) off C with abc != 0 is H-covered", 17},
         check_covered_abc},
        {{"case-c0", "points on Z = 0", "R(1,m,0) is H-free iff m is a square and q = 3 mod 4, or a nonsquare and q = 1 mod 4", 7},
         check_case_c0},
        {{"case-ab0", "the point (0,0,1)", "(0,0,1) is H-free iff q = 3 mod 4", 3}, check_case_ab0},
        {{"lemma-UV", "points U(0,b,c) and V(a,0,c)", "U(0,b,c) and V(a,0,c) with c != 0 are H-covered", 17},
         check_uv},
        {{"lemma-Hprime", "H' is K-covered", "each P' in H' lies on the secant R0 P' of K, whose second conic point is in H", 3},
         check_hprime},
        {{"lemma-001", "the point (0,0,1) and K", "(0,0,1) is H-covered when q = 1 mod 4; when q = 3 mod 4 it is K-covered iff R0 = (1,m,0) with m a fourth power", 3},
         check_001},
        {{"theorem-complete", "K is a complete arc", "K = H ∪ {R0} is a complete arc of size (q+3)/2", 17}, check_theorem},
        {{"corollary-Hfree", "the H-free points", "the H-free points off C are the internal points of Z = 0 with the quadratic-character condition, plus (0,0,1) when q = 3 mod 4; Z = 0 is a secant", 17},
         check_corollary},
        {{"pellegrino-counterexample", "no external line with two internal H-free points",
          "no line external to C contains two internal H-free points", 17},
         check_pellegrino},
        {{"small-q", "completions of H for q = 9, 11, 13",
          "q = 9 needs 3 added points (size 8); q = 11 and q = 13 admit completions by 2 points (sizes 8 and 9)", 3},
         check_small_q},
        {{"curve-segre", "the genus-one quartic through X and Y",
          "(cX^2 - bZ^2)Z^2 - mu Y^2(aX^2 - cZ^2) has ordinary double points exactly at (1,0,0), (0,1,0) and genus 1", 3},
         check_segre},
        {{"curve-quartic", "the rational quartic X^2Y^2 - mu' Z^2(X^2 + Y^2)",
          "ordinary double points exactly at the coordinate points, genus 0, q+1 points up to the 3 nodes", 3},
         check_quartic},
        {{"oracle-equivalence", "projective coverage criterion",
          "R is H-covered iff some x in {0} ∪ squares has phi_R(x) in {0} ∪ squares and phi_R(x) != x", 3},
         check_oracle},
    };
    return r;
}

const Entry& entry(std::string_view id) {
    for (const auto& e : registry())
        if (e.info.id == id) return e;
    throw std::invalid_argument("unknown claim id '" + std::string(id) + "'");
}

void validate_q(std::uint32_t q) {
    const auto pk = prime_power_decomposition(q);
    if (!pk || pk->first == 2 || q > kMaxFieldOrder)
        throw std::invalid_argument("q = " + std::to_string(q) + " is not an odd prime power in [3, " +
                                    std::to_string(kMaxFieldOrder) + "]");
}

QResult run_one(const Entry& e, std::uint32_t q, const RunOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    QResult r;
    r.q = q;
    const Ctx ctx(q);
    Outcome o = e.check(ctx, opts);
    if (q < e.info.min_q) {
        r.status = Status::Skipped;
        r.witnesses = {{"reason", "outside hypothesis q >= " + std::to_string(e.info.min_q)},
                       {"informational", true},
                       {"holds", o.status == Status::Verified},
                       {"observed", std::move(o.w)}};
    } else {
        r.status = o.status;
        r.witnesses = std::move(o.w);
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace

const std::vector<ClaimInfo>& list_claims() {
    static const std::vector<ClaimInfo> out = [] {
        std::vector<ClaimInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return out;
}

const ClaimInfo& claim_info(std::string_view id) { return entry(id).info; }

ClaimReport run_claim(std::string_view id, const std::vector<std::uint32_t>& qs, const RunOptions& opts) {
    return run_claims({std::string(id)}, qs, opts).front();
}

std::vector<ClaimReport> run_claims(const std::vector<std::string>& ids, const std::vector<std::uint32_t>& qs,
                                    const RunOptions& opts) {
    std::vector<const Entry*> entries;
    for (const auto& id : ids) entries.push_back(&entry(id));
    for (auto q : qs) validate_q(q);

    std::vector<ClaimReport> out;
    for (const auto* e : entries) {
        ClaimReport r;
        r.id = e->info.id;
        r.anchor = e->info.anchor;
        r.q_results.resize(qs.size());
        out.push_back(std::move(r));
    }

    // Largest q first so the slow tasks start early.
    std::vector<std::pair<std::size_t, std::size_t>> tasks;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = 0; j < qs.size(); ++j) tasks.emplace_back(i, j);
    std::stable_sort(tasks.begin(), tasks.end(), [&](const auto& a, const auto& b) { return qs[a.second] > qs[b.second]; });

    unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, tasks.size()));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            const auto [i, j] = tasks[t];
            try {
                out[i].q_results[j] = run_one(*entries[i], qs[j], opts);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return out;
}

Format parse_format(std::string_view s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected json, csv or text)");
}

Json report_to_json(const ClaimReport& r, const EmitOptions& opts) {
    Json qr = Json::array();
    for (const auto& x : r.q_results)
        qr.push_back(Json{{"q", x.q},
                          {"status", to_string(x.status)},
                          {"witnesses", x.witnesses},
                          {"elapsed_ms", opts.timing ? std::round(x.elapsed_ms * 1000) / 1000 : 0.0}});
    return Json{{"claim", r.id}, {"anchor", r.anchor}, {"status", to_string(r.status())}, {"q_results", qr},
                {"version", kToolVersion}};
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + '"';
}

}  // namespace

std::string emit(const std::vector<ClaimReport>& reports, Format format, const EmitOptions& opts) {
    std::ostringstream os;
    switch (format) {
        case Format::Json: {
            if (reports.size() == 1) {
                os << report_to_json(reports.front(), opts).dump(2) << '\n';
            } else {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(report_to_json(r, opts));
                os << arr.dump(2) << '\n';
            }
            break;
        }
        case Format::Csv: {
            os << "claim,q,status,elapsed_ms,witnesses\n";
            for (const auto& r : reports)
                for (const auto& x : r.q_results) {
                    Json ms = opts.timing ? std::round(x.elapsed_ms * 1000) / 1000 : 0.0;
                    os << r.id << ',' << x.q << ',' << to_string(x.status) << ',' << ms.dump() << ','
                       << csv_field(x.witnesses.dump()) << '\n';
                }
            break;
        }
        case Format::Text: {
            for (const auto& r : reports) {
                os << r.id << ": " << to_string(r.status()) << "  (" << r.anchor << ")\n";
                for (const auto& x : r.q_results) {
                    os << "  q=" << x.q << ' ' << to_string(x.status);
                    if (opts.timing) os << ' ' << static_cast<long long>(std::llround(x.elapsed_ms)) << "ms";
                    os << '\n';
                }
            }
            break;
        }
    }
    return os.str();
}

std::vector<std::uint32_t> default_qs() {
    std::vector<std::uint32_t> out{5, 7, 9, 11, 13};
    for (auto q : odd_prime_powers(17, 199)) out.push_back(q);
    return out;
}

namespace {

std::uint32_t parse_uint(std::string_view s) {
    std::uint32_t v = 0;
    const auto* end = s.data() + s.size();
    const auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || p != end || s.empty()) throw std::invalid_argument("bad number '" + std::string(s) + "'");
    return v;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

std::vector<std::uint32_t> parse_q_list(std::string_view s) {
    std::vector<std::uint32_t> out;
    while (true) {
        const auto comma = s.find(',');
        const auto item = strip(s.substr(0, comma));
        if (const auto dots = item.find(".."); dots != std::string_view::npos) {
            const auto lo = parse_uint(item.substr(0, dots)), hi = parse_uint(item.substr(dots + 2));
            if (lo > hi || hi > kMaxFieldOrder) throw std::invalid_argument("bad range '" + std::string(item) + "'");
            for (auto q : odd_prime_powers(lo, hi)) out.push_back(q);
        } else {
            const auto q = parse_uint(item);
            validate_q(q);
            out.push_back(q);
        }
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (out.empty()) throw std::invalid_argument("empty q list");
    return out;
}

}  // namespace arclab
