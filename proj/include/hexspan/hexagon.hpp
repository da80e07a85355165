#pragma once

#include <array>
#include <cstdlib>

#include "hexspan/geometry.hpp"

namespace hexspan {

// Fixed-orientation regular hexagon with two vertical sides (E and W).
// Vertices clockwise from the top: N, NE, SE, S, SW, NW.
// Sides carry integer labels 0..5 counterclockwise starting at NW:
//   0 = NW, 1 = W, 2 = SW, 3 = SE, 4 = E, 5 = NE.
enum HexVertexId { kVertexN = 0, kVertexNE, kVertexSE, kVertexS, kVertexSW, kVertexNW };
enum HexSideId { kSideNW = 0, kSideW = 1, kSideSW = 2, kSideSE = 3, kSideE = 4, kSideNE = 5 };

inline const char* vertex_name(int v) {
    static const char* names[6] = {"N", "NE", "SE", "S", "SW", "NW"};
    return names[v];
}

inline const char* side_name(int s) {
    static const char* names[6] = {"NW", "W", "SW", "SE", "E", "NE"};
    return names[s];
}

// Outward unit normal of side s for the unit hexagon.
inline Point hex_side_normal(int s) {
    static const std::array<Point, 6> normals = {{
        {-0.5, kSqrt3 / 2.0},   // NW
        {-1.0, 0.0},            // W
        {-0.5, -kSqrt3 / 2.0},  // SW
        {0.5, -kSqrt3 / 2.0},   // SE
        {1.0, 0.0},             // E
        {0.5, kSqrt3 / 2.0},    // NE
    }};
    return normals[s];
}

struct ScaledHexagon {
    Point center;
    double apothem = 0.0;  // distance from center to each side; the minimum radius

    double circumradius() const { return kTwoInvSqrt3 * apothem; }
};

// Hexagon gauge: p lies on the boundary of hexagon (c, a) iff
// hexagon_norm(p - c) == a.
inline double hexagon_norm(Point v) {
    double ax = std::abs(v.x);
    return std::max(ax, 0.5 * (ax + kSqrt3 * std::abs(v.y)));
}

// Support value of v against side s: hexagon_norm(v) == max_s support.
inline double hexagon_support(Point v, int s) {
    return dot(hex_side_normal(s), v);
}

// Vertices indexed by HexVertexId (clockwise starting at N).
inline std::array<Point, 6> hexagon_vertices(const ScaledHexagon& h) {
    double a = h.apothem;
    double r = h.circumradius();
    double cx = h.center.x, cy = h.center.y;
    return {{{cx, cy + r},
             {cx + a, cy + 0.5 * r},
             {cx + a, cy - 0.5 * r},
             {cx, cy - r},
             {cx - a, cy - 0.5 * r},
             {cx - a, cy + 0.5 * r}}};
}

inline Point hexagon_vertex(const ScaledHexagon& h, int v) {
    return hexagon_vertices(h)[v];
}

// Endpoints of side s. Side s joins the two vertices its support line meets.
inline std::pair<Point, Point> hexagon_side(const ScaledHexagon& h, int s) {
    auto v = hexagon_vertices(h);
    switch (s) {
        case kSideNW: return {v[kVertexNW], v[kVertexN]};
        case kSideW: return {v[kVertexSW], v[kVertexNW]};
        case kSideSW: return {v[kVertexS], v[kVertexSW]};
        case kSideSE: return {v[kVertexSE], v[kVertexS]};
        case kSideE: return {v[kVertexNE], v[kVertexSE]};
        default: return {v[kVertexN], v[kVertexNE]};
    }
}

// Vertex shared by sides s and (s+1) mod 6.
inline int vertex_between_sides(int s) {
    static const int v[6] = {kVertexNW, kVertexSW, kVertexS, kVertexSE, kVertexNE, kVertexN};
    return v[s];
}

struct SideLocation {
    enum Kind { Inside, Outside, OnSide, OnVertex } kind = Inside;
    int side = -1;    // valid for OnSide
    int vertex = -1;  // valid for OnVertex

    bool on_side(int s) const { return kind == OnSide && side == s; }
    bool on_vertex(int v) const { return kind == OnVertex && vertex == v; }
    bool on_boundary() const { return kind == OnSide || kind == OnVertex; }
};

// Classifies p against hexagon h. A point within tol of two side lines is
// OnVertex so that sweep transition labels stay exclusive.
inline SideLocation locate(const ScaledHexagon& h, Point p, double tol = kDefaultTol) {
    Point v = p - h.center;
    double vals[6];
    double m = -1.0;
    for (int s = 0; s < 6; ++s) {
        vals[s] = hexagon_support(v, s);
        m = std::max(m, vals[s]);
    }
    SideLocation loc;
    if (m < h.apothem - tol) {
        loc.kind = SideLocation::Inside;
        return loc;
    }
    if (m > h.apothem + tol) {
        loc.kind = SideLocation::Outside;
        return loc;
    }
    int tight[6];
    int ntight = 0;
    for (int s = 0; s < 6; ++s)
        if (vals[s] >= h.apothem - tol) tight[ntight++] = s;
    if (ntight >= 2) {
        // Adjacent tight pair names a vertex; take the first adjacent pair.
        for (int i = 0; i < ntight; ++i) {
            for (int j = i + 1; j < ntight; ++j) {
                if ((tight[i] + 1) % 6 == tight[j]) {
                    loc.kind = SideLocation::OnVertex;
                    loc.vertex = vertex_between_sides(tight[i]);
                    return loc;
                }
                if ((tight[j] + 1) % 6 == tight[i]) {
                    loc.kind = SideLocation::OnVertex;
                    loc.vertex = vertex_between_sides(tight[j]);
                    return loc;
                }
            }
        }
    }
    loc.kind = SideLocation::OnSide;
    loc.side = tight[0];
    return loc;
}

namespace detail {

// Arc lengths from a boundary point to the N and S vertices, by side label.
// Positive sign on the W sides {NW, W, SW}, negative otherwise; shortest way
// around. R denotes the side length (= circumradius).
inline double arc_to_n(const ScaledHexagon& h, Point p, int side) {
    double r = h.circumradius();
    double cx = h.center.x, cy = h.center.y;
    double a = h.apothem;
    switch (side) {
        case kSideNE: return -(p.x - cx) * kTwoInvSqrt3;
        case kSideNW: return (cx - p.x) * kTwoInvSqrt3;
        case kSideE: return -(((cy + 0.5 * r) - p.y) + r);
        case kSideW: return ((cy + 0.5 * r) - p.y) + r;
        case kSideSE: return -(((cx + a) - p.x) * kTwoInvSqrt3 + 2.0 * r);
        default: /* SW */ return (p.x - (cx - a)) * kTwoInvSqrt3 + 2.0 * r;
    }
}

inline double arc_to_s(const ScaledHexagon& h, Point p, int side) {
    double r = h.circumradius();
    double cx = h.center.x, cy = h.center.y;
    double a = h.apothem;
    switch (side) {
        case kSideSW: return (cx - p.x) * kTwoInvSqrt3;
        case kSideSE: return -(p.x - cx) * kTwoInvSqrt3;
        case kSideW: return (p.y - (cy - 0.5 * r)) + r;
        case kSideE: return -((p.y - (cy - 0.5 * r)) + r);
        case kSideNW: return (p.x - (cx - a)) * kTwoInvSqrt3 + 2.0 * r;
        default: /* NE */ return -(((cx + a) - p.x) * kTwoInvSqrt3 + 2.0 * r);
    }
}

// Side label used for perimeter distances when p sits on a vertex: prefer the
// W-side member of the junction so signs follow the W-positive convention.
inline int perimeter_side_for_vertex(int vertex) {
    switch (vertex) {
        case kVertexN: return kSideNW;
        case kVertexNW: return kSideW;
        case kVertexSW: return kSideSW;
        case kVertexS: return kSideSW;
        case kVertexSE: return kSideSE;
        default: /* NE */ return kSideNE;
    }
}

}  // namespace detail

// Signed shortest perimeter distance from boundary point p to the N vertex.
// Positive when p lies on one of the W sides (NW, W, SW), negative otherwise.
inline double perimeter_distance_n(const ScaledHexagon& h, Point p, double tol = kDefaultTol) {
    SideLocation loc = locate(h, p, tol);
    if (!loc.on_boundary()) throw Error("perimeter_distance_n: point not on boundary");
    int side = loc.kind == SideLocation::OnSide ? loc.side
                                                : detail::perimeter_side_for_vertex(loc.vertex);
    return detail::arc_to_n(h, p, side);
}

// Signed shortest perimeter distance from boundary point p to the S vertex.
inline double perimeter_distance_s(const ScaledHexagon& h, Point p, double tol = kDefaultTol) {
    SideLocation loc = locate(h, p, tol);
    if (!loc.on_boundary()) throw Error("perimeter_distance_s: point not on boundary");
    int side = loc.kind == SideLocation::OnSide ? loc.side
                                                : detail::perimeter_side_for_vertex(loc.vertex);
    return detail::arc_to_s(h, p, side);
}

}  // namespace hexspan
