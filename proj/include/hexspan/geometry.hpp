#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hexspan {

// Global coordinate tolerance. Inputs are rescaled to the unit box on
// ingestion, so an absolute tolerance is meaningful everywhere.
inline constexpr double kDefaultTol = 1e-9;

inline const double kSqrt3 = std::sqrt(3.0);
inline const double kInvSqrt3 = 1.0 / std::sqrt(3.0);         // slope of gentle-edge boundary
inline const double kTwoInvSqrt3 = 2.0 / std::sqrt(3.0);      // hexagon side length per unit apothem

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::sqrt(norm2(a)); }

inline double dist_x(Point a, Point b) { return std::abs(a.x - b.x); }
inline double dist_y(Point a, Point b) { return std::abs(a.y - b.y); }
inline double dist2(Point a, Point b) { return norm(a - b); }

// Twice the signed area of triangle (a, b, c); positive when counterclockwise.
inline double orient(Point a, Point b, Point c) {
    return cross(b - a, c - a);
}

// Distance from p to the closed segment [a, b].
inline double segment_distance(Point a, Point b, Point p) {
    Point d = b - a;
    double len2 = norm2(d);
    if (len2 == 0.0) return dist2(a, p);
    double t = dot(p - a, d) / len2;
    t = std::max(0.0, std::min(1.0, t));
    return dist2(a + t * d, p);
}

// True when the segment between a and b has slope in [-1/sqrt(3), 1/sqrt(3)],
// the closed interval, within an absolute coordinate tolerance.
inline bool gentle_slope(Point a, Point b, double tol = kDefaultTol) {
    return kSqrt3 * dist_y(a, b) <= dist_x(a, b) + 4.0 * tol;
}

// One of the 12 symmetries of the fixed-orientation hexagon: rotation by a
// multiple of 60 degrees about a center, then optional reflection about the
// horizontal line through that center.
struct HexSymmetry {
    int rotation_sixths = 0;  // 0..5, counterclockwise
    bool reflect_x = false;

    Point apply(Point p, Point center = {0.0, 0.0}) const {
        static const double kCos[6] = {1.0, 0.5, -0.5, -1.0, -0.5, 0.5};
        static const double kSin[6] = {0.0,  kSqrt3 / 2.0,  kSqrt3 / 2.0,
                                       0.0, -kSqrt3 / 2.0, -kSqrt3 / 2.0};
        int k = ((rotation_sixths % 6) + 6) % 6;
        Point v = p - center;
        Point r{kCos[k] * v.x - kSin[k] * v.y, kSin[k] * v.x + kCos[k] * v.y};
        if (reflect_x) r.y = -r.y;
        return r + center;
    }

    // Reflected symmetries are involutions; pure rotations invert by negation.
    HexSymmetry inverse() const {
        if (reflect_x) return *this;
        return {(6 - ((rotation_sixths % 6) + 6) % 6) % 6, false};
    }

    bool is_identity() const { return rotation_sixths % 6 == 0 && !reflect_x; }
};

// Finds a hexagon symmetry about s mapping t into the closed positive quadrant
// with slope(s,t) in [0, 1/sqrt(3)]. Candidates are tried in a fixed order
// (rotations 0..5 without reflection, then 0..5 with reflection) and the first
// match wins, so the result is deterministic.
inline HexSymmetry normalize_pair(Point s, Point t, double tol = kDefaultTol) {
    if (dist2(s, t) <= tol) throw Error("normalize_pair: coincident points");
    for (int refl = 0; refl < 2; ++refl) {
        for (int k = 0; k < 6; ++k) {
            HexSymmetry sym{k, refl != 0};
            Point u = sym.apply(t, s) - s;
            if (u.x > -tol && u.y > -tol && kSqrt3 * u.y <= u.x + 4.0 * tol)
                return sym;
        }
    }
    throw Error("normalize_pair: no admissible symmetry found");  // unreachable
}

}  // namespace hexspan
