#include "arclab/arc.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace arclab {

namespace {

std::string fmt_point(const Point& p) {
    return "[" + std::to_string(p.c[0].code) + "," + std::to_string(p.c[1].code) + "," +
           std::to_string(p.c[2].code) + "]";
}

}  // namespace

Arc::Arc(const Plane& plane, std::vector<Point> points) : plane_(plane), points_(std::move(points)) {
    const std::size_t q = plane_.field().q();
    if (points_.size() > q + 1) throw std::invalid_argument("arc larger than q+1");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j]) throw std::invalid_argument("arc has repeated point " + fmt_point(points_[i]));
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            for (std::size_t k = j + 1; k < points_.size(); ++k)
                if (plane_.collinear(points_[i], points_[j], points_[k]))
                    throw CollinearTripleError("collinear triple " + fmt_point(points_[i]) + " " +
                                                   fmt_point(points_[j]) + " " + fmt_point(points_[k]),
                                               {points_[i], points_[j], points_[k]});
}

bool Arc::contains(const Point& p) const { return std::find(points_.begin(), points_.end(), p) != points_.end(); }

Arc Arc::extended(const Point& p) const {
    auto pts = points_;
    pts.push_back(p);
    return Arc(plane_, std::move(pts));
}

CoverageMap::CoverageMap(const Plane& plane, std::vector<PointState> states)
    : plane_(plane), states_(std::move(states)) {}

std::vector<Point> CoverageMap::free_points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == PointState::Free) out.push_back(plane_.point_at(i));
    return out;
}

std::size_t CoverageMap::covered_count() const {
    return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), PointState::Covered));
}

std::size_t CoverageMap::free_count() const {
    return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), PointState::Free));
}

CoverageMap coverage(const Arc& arc) {
    const Plane& plane = arc.plane();
    std::vector<PointState> states(plane.num_points(), PointState::Free);
    for (const auto& p : arc.points()) states[plane.index_of(p)] = PointState::InArc;
    std::vector<std::size_t> idx;
    const auto& pts = arc.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            plane.point_indices_on(plane.line_through(pts[i], pts[j]), idx);
            for (auto k : idx)
                if (states[k] == PointState::Free) states[k] = PointState::Covered;
        }
    }
    return CoverageMap(plane, std::move(states));
}

std::vector<Point> free_points(const Arc& arc) { return coverage(arc).free_points(); }

bool is_complete(const Arc& arc) { return coverage(arc).free_count() == 0; }

Arc greedy_complete(const Arc& arc) {
    Arc cur = arc;
    for (;;) {
        const auto cov = coverage(cur);
        const auto& st = cov.states();
        const auto it = std::find(st.begin(), st.end(), PointState::Free);
        if (it == st.end()) return cur;
        cur = cur.extended(cur.plane().point_at(static_cast<std::size_t>(it - st.begin())));
    }
}

std::size_t CompletionSet::min_additions() const {
    return by_additions.empty() ? 0 : by_additions.begin()->first;
}

std::size_t CompletionSet::total() const {
    std::size_t n = 0;
    for (const auto& [k, v] : by_additions) n += v.size();
    return n;
}

CompletionSet all_completions(const Arc& arc, std::size_t cap, SearchOrder order, const CandidateFilter& candidate) {
    const Plane& plane = arc.plane();
    CompletionSet result;

    std::vector<Point> current = arc.points();
    std::vector<Point> added;

    // `free` holds the free points of `current`, in search order.
    std::function<void(const std::vector<Point>&, std::size_t)> search =
        [&](const std::vector<Point>& free, std::size_t start) {
            if (free.empty()) {
                auto s = added;
                std::sort(s.begin(), s.end());
                result.by_additions[s.size()].push_back(std::move(s));
                return;
            }
            if (added.size() == cap) {
                ++result.cap_exceeded;
                return;
            }
            if (candidate && std::none_of(free.begin(), free.end(), candidate)) {
                ++result.dead_ends;
                return;
            }
            for (std::size_t n = start; n < free.size(); ++n) {
                const Point& f = free[n];
                if (candidate && !candidate(f)) continue;
                std::vector<Point> next;
                next.reserve(free.size());
                // Free points of current ∪ {f}.
                for (std::size_t m = 0; m < free.size(); ++m) {
                    if (m == n) continue;
                    const Point& g = free[m];
                    bool covered = false;
                    for (const auto& a : current) {
                        if (plane.collinear(f, g, a)) {
                            covered = true;
                            break;
                        }
                    }
                    if (!covered) next.push_back(g);
                }
                // Canonical pruning: only points after f in search order may be added below.
                const auto after = std::find_if(next.begin(), next.end(), [&](const Point& g) {
                    return order == SearchOrder::Forward ? f < g : g < f;
                });
                current.push_back(f);
                added.push_back(f);
                search(next, static_cast<std::size_t>(after - next.begin()));
                current.pop_back();
                added.pop_back();
            }
        };

    auto initial = free_points(arc);
    if (order == SearchOrder::Reverse) std::reverse(initial.begin(), initial.end());
    search(initial, 0);

    for (auto& [k, sets] : result.by_additions) std::sort(sets.begin(), sets.end());
    return result;
}

}  // namespace arclab
