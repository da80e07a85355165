#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hexspan/geometry.hpp"
#include "hexspan/hexagon.hpp"
#include "hexspan/shape.hpp"

namespace hexspan {

// A homothet of a fixed-orientation shape passing through three points on its
// boundary, together with the side each point was assigned to.
struct Circumscription {
    Point center;
    double apothem = 0.0;
    std::array<int, 3> side = {-1, -1, -1};     // side label per input point
    std::array<bool, 3> at_vertex = {false, false, false};

    ScaledHexagon hexagon() const { return {center, apothem}; }
};

namespace detail {

// Solves the 3x3 system: normal(side_i) . (p_i - c) = a for (cx, cy, a).
inline bool solve_assignment(const ConvexShape& shape, const Point* pts, const int* sides,
                             Point& center, double& apothem) {
    // Rows: n.x * cx + n.y * cy + a = n . p
    double m[3][3], rhs[3];
    for (int i = 0; i < 3; ++i) {
        Point n = shape.normals[sides[i]];
        m[i][0] = n.x;
        m[i][1] = n.y;
        m[i][2] = 1.0;
        rhs[i] = dot(n, pts[i]);
    }
    double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                 m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                 m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (std::abs(det) < 1e-12) return false;
    auto cram = [&](int col) {
        double c[3][3];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) c[i][j] = (j == col) ? rhs[i] : m[i][j];
        return c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) -
               c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
               c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
    };
    center = {cram(0) / det, cram(1) / det};
    apothem = cram(2) / det;
    return std::isfinite(center.x) && std::isfinite(center.y) && std::isfinite(apothem);
}

// Position of p along its assigned side, as signed tangential offset from the
// side midpoint. Returns false when p lies beyond the side segment.
inline bool within_side_extent(const ConvexShape& shape, Point center, double apothem,
                               Point p, int side, double tol, bool& at_vertex) {
    int k = shape.side_count();
    Point v_end = shape.vertex(center, apothem, side);                 // side joins v_prev .. v_end
    Point v_prev = shape.vertex(center, apothem, (side + k - 1) % k);
    Point mid = 0.5 * (v_prev + v_end);
    Point tang = v_end - v_prev;
    double half = 0.5 * dist2(v_prev, v_end);
    if (half <= tol) return false;
    double t = dot(p - mid, tang) / (2.0 * half);  // signed offset, |t| <= half on the segment
    double off = std::abs(t);
    if (off > half + tol) return false;
    at_vertex = off >= half - tol;
    return true;
}

}  // namespace detail

// All homothets of `shape` passing through p1, p2, p3 on their boundary.
// Enumerates every side assignment, solves each in closed form, and keeps
// solutions with positive apothem where each point lies on its assigned side
// segment and no input point falls strictly outside. Near-identical solutions
// (same hexagon reached through a vertex assignment) are deduplicated.
// Results are sorted by (apothem, center.x, center.y).
inline std::vector<Circumscription> circumscriptions_through(const ConvexShape& shape,
                                                             Point p1, Point p2, Point p3,
                                                             double tol = kDefaultTol) {
    const int k = shape.side_count();
    const Point pts[3] = {p1, p2, p3};
    std::vector<Circumscription> out;
    std::vector<std::array<int64_t, 3>> keys;
    int sides[3];
    for (sides[0] = 0; sides[0] < k; ++sides[0]) {
        for (sides[1] = 0; sides[1] < k; ++sides[1]) {
            if (sides[1] == sides[0]) continue;  // two points on one side line: rank-deficient
            for (sides[2] = 0; sides[2] < k; ++sides[2]) {
                if (sides[2] == sides[0] || sides[2] == sides[1]) continue;
                Point c;
                double a;
                if (!detail::solve_assignment(shape, pts, sides, c, a)) continue;
                if (!(a > tol)) continue;
                Circumscription cand;
                cand.center = c;
                cand.apothem = a;
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                    cand.side[i] = sides[i];
                    bool at_vertex = false;
                    ok = detail::within_side_extent(shape, c, a, pts[i], sides[i], tol, at_vertex);
                    cand.at_vertex[i] = at_vertex;
                    if (ok) ok = shape.norm(pts[i] - c) <= a + tol;
                }
                if (!ok) continue;
                std::array<int64_t, 3> key = {static_cast<int64_t>(std::llround(c.x / tol)),
                                              static_cast<int64_t>(std::llround(c.y / tol)),
                                              static_cast<int64_t>(std::llround(a / tol))};
                if (std::find(keys.begin(), keys.end(), key) != keys.end()) continue;
                keys.push_back(key);
                out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Circumscription& x, const Circumscription& y) {
        if (x.apothem != y.apothem) return x.apothem < y.apothem;
        if (x.center.x != y.center.x) return x.center.x < y.center.x;
        return x.center.y < y.center.y;
    });
    return out;
}

inline std::vector<Circumscription> circumhexagons_through(Point p1, Point p2, Point p3,
                                                           double tol = kDefaultTol) {
    return circumscriptions_through(hexagon_shape(), p1, p2, p3, tol);
}

// True when some circumscription of {pts[i], pts[j], pts[k]} contains no other
// point of pts strictly inside (norm < apothem - tol). Returns the first such
// witness in the canonical order.
inline std::pair<bool, std::optional<Circumscription>> empty_circumscription_indexed(
    const ConvexShape& shape, std::span<const Point> pts, int i, int j, int k,
    double tol = kDefaultTol) {
    auto cands = circumscriptions_through(shape, pts[i], pts[j], pts[k], tol);
    for (const auto& c : cands) {
        bool empty = true;
        for (size_t m = 0; m < pts.size() && empty; ++m) {
            if (static_cast<int>(m) == i || static_cast<int>(m) == j || static_cast<int>(m) == k)
                continue;
            if (shape.norm(pts[m] - c.center) < c.apothem - tol) empty = false;
        }
        if (empty) return {true, c};
    }
    return {false, std::nullopt};
}

inline std::pair<bool, std::optional<Circumscription>> empty_circumhexagon(
    Point p1, Point p2, Point p3, std::span<const Point> all_points, double tol = kDefaultTol) {
    // Map the triple onto indices; points within tol of the triple are treated as members.
    std::vector<Point> pts(all_points.begin(), all_points.end());
    auto cands = circumhexagons_through(p1, p2, p3, tol);
    for (const auto& c : cands) {
        bool empty = true;
        for (const Point& p : pts) {
            if (dist2(p, p1) <= tol || dist2(p, p2) <= tol || dist2(p, p3) <= tol) continue;
            if (hexagon_norm(p - c.center) < c.apothem - tol) {
                empty = false;
                break;
            }
        }
        if (empty) return {true, c};
    }
    return {false, std::nullopt};
}

// Minimum enclosing homothet, solved as the 3-variable linear program
//   minimize a  s.t.  n_s . (p - c) <= a  for every point p and side s
// by exhaustive enumeration of constraint triples (every basic solution).
inline ScaledHexagon min_enclosing(const ConvexShape& shape, std::span<const Point> pts,
                                   double tol = kDefaultTol) {
    if (pts.empty()) throw Error("min_enclosing: no points");
    const int k = shape.side_count();
    const int m = static_cast<int>(pts.size()) * k;  // constraint id = point * k + side
    auto feasible = [&](Point c, double a) {
        for (const Point& p : pts)
            if (shape.norm(p - c) > a + tol) return false;
        return true;
    };
    bool found = false;
    Point best_c{0, 0};
    double best_a = 0.0;
    // Degenerate optimum: all points coincide.
    {
        Point c = pts[0];
        if (feasible(c, 0.0)) return {c, 0.0};
    }
    Point tri_pts[3];
    int tri_sides[3];
    for (int c1 = 0; c1 < m; ++c1) {
        for (int c2 = c1 + 1; c2 < m; ++c2) {
            for (int c3 = c2 + 1; c3 < m; ++c3) {
                int ids[3] = {c1, c2, c3};
                for (int t = 0; t < 3; ++t) {
                    tri_pts[t] = pts[ids[t] / k];
                    tri_sides[t] = ids[t] % k;
                }
                Point c;
                double a;
                if (!detail::solve_assignment(shape, tri_pts, tri_sides, c, a)) continue;
                if (a < -tol || !feasible(c, a)) continue;
                if (!found || a < best_a - tol ||
                    (std::abs(a - best_a) <= tol &&
                     (c.x < best_c.x || (c.x == best_c.x && c.y < best_c.y)))) {
                    found = true;
                    best_c = c;
                    best_a = std::max(a, 0.0);
                }
            }
        }
    }
    if (!found) throw Error("min_enclosing: no basic solution found");
    return {best_c, best_a};
}

inline ScaledHexagon min_enclosing_hexagon(std::span<const Point> pts, double tol = kDefaultTol) {
    return min_enclosing(hexagon_shape(), pts, tol);
}

}  // namespace hexspan
