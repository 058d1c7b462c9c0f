#pragma once

// Arcs (point sets with no three collinear), coverage by secants, and
// completion search.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "arclab/plane.hpp"

namespace arclab {

class CollinearTripleError : public std::invalid_argument {
public:
    CollinearTripleError(const std::string& what, std::array<Point, 3> witness)
        : std::invalid_argument(what), witness_(witness) {}
    const std::array<Point, 3>& witness() const { return witness_; }

private:
    std::array<Point, 3> witness_;
};

class Arc {
public:
    /// Throws CollinearTripleError (with the first offending triple) if three
    /// points are collinear, std::invalid_argument on duplicates or when the
    /// size exceeds q+1.
    Arc(const Plane& plane, std::vector<Point> points);

    const Plane& plane() const { return plane_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool contains(const Point& p) const;

    /// New arc with p appended; same validation as the constructor.
    Arc extended(const Point& p) const;

private:
    Plane plane_;
    std::vector<Point> points_;
};

enum class PointState : std::uint8_t { Free, Covered, InArc };

class CoverageMap {
public:
    CoverageMap(const Plane& plane, std::vector<PointState> states);

    PointState state(const Point& p) const { return states_[plane_.index_of(p)]; }
    const std::vector<PointState>& states() const { return states_; }
    /// Free points in enumeration order.
    std::vector<Point> free_points() const;
    std::size_t covered_count() const;
    std::size_t free_count() const;

private:
    Plane plane_;
    std::vector<PointState> states_;
};

CoverageMap coverage(const Arc& arc);
std::vector<Point> free_points(const Arc& arc);
bool is_complete(const Arc& arc);

/// Adds the first free point in enumeration order until none remain.
Arc greedy_complete(const Arc& arc);

enum class SearchOrder { Forward, Reverse };

struct CompletionSet {
    /// Number of added points -> the added point sets (each sorted ascending,
    /// the list sorted lexicographically).
    std::map<std::size_t, std::vector<std::vector<Point>>> by_additions;
    /// Branches that used all `cap` additions without becoming complete.
    std::size_t cap_exceeded = 0;
    /// Incomplete branches with no admissible candidate left.
    std::size_t dead_ends = 0;

    std::size_t min_additions() const;
    std::size_t total() const;
};

/// Restricts which free points a completion may add; completeness is still
/// judged over every point of the plane.
using CandidateFilter = std::function<bool(const Point&)>;

/// Every complete extension of `arc` by at most `cap` points.
CompletionSet all_completions(const Arc& arc, std::size_t cap = 4, SearchOrder order = SearchOrder::Forward,
                              const CandidateFilter& candidate = {});

}  // namespace arclab
