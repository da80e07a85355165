#pragma once

#include <string>
#include <vector>

#include "hexspan/geometry.hpp"
#include "hexspan/hexagon.hpp"

namespace hexspan {

// A fixed-orientation convex polygon given by outward unit side normals at
// unit apothem scale. A homothet is (center, apothem); every side lies at
// distance apothem from the center. Sides are listed counterclockwise.
struct ConvexShape {
    std::string name;
    std::vector<Point> normals;        // unit outward normal per side
    std::vector<Point> unit_vertices;  // vertex i joins side i and side i+1, at apothem 1

    int side_count() const { return static_cast<int>(normals.size()); }

    // Gauge value: p on boundary of homothet (c, a) iff shape_norm(p - c) == a.
    double norm(Point v) const {
        double m = dot(normals[0], v);
        for (size_t i = 1; i < normals.size(); ++i) m = std::max(m, dot(normals[i], v));
        return m;
    }

    Point vertex(Point center, double apothem, int i) const {
        return center + apothem * unit_vertices[i];
    }

    // Directions of the sides, used by the general-position pair test.
    std::vector<Point> side_directions() const {
        std::vector<Point> dirs;
        int k = side_count();
        for (int i = 0; i < k; ++i) {
            Point a = unit_vertices[(i + k - 1) % k];
            Point b = unit_vertices[i];
            Point d = b - a;
            double len = dist2(a, b);
            dirs.push_back((1.0 / (len > 0.0 ? len : 1.0)) * d);
        }
        return dirs;
    }
};

namespace detail {

inline ConvexShape make_shape(std::string name, std::vector<Point> normals) {
    ConvexShape s;
    s.name = std::move(name);
    s.normals = std::move(normals);
    int k = s.side_count();
    s.unit_vertices.resize(k);
    for (int i = 0; i < k; ++i) {
        Point n1 = s.normals[i];
        Point n2 = s.normals[(i + 1) % k];
        double det = cross(n1, n2);
        // v solves n1.v = 1, n2.v = 1
        s.unit_vertices[i] = {(n2.y - n1.y) / det, (n1.x - n2.x) / det};
    }
    return s;
}

}  // namespace detail

// Hexagon side order matches hexagon.hpp: 0=NW, 1=W, 2=SW, 3=SE, 4=E, 5=NE.
inline const ConvexShape& hexagon_shape() {
    static const ConvexShape s = detail::make_shape(
        "hexagon", {hex_side_normal(0), hex_side_normal(1), hex_side_normal(2),
                    hex_side_normal(3), hex_side_normal(4), hex_side_normal(5)});
    return s;
}

// Axis-parallel square; apothem is half the side length.
inline const ConvexShape& square_shape() {
    static const ConvexShape s =
        detail::make_shape("square", {{-1.0, 0.0}, {0.0, -1.0}, {1.0, 0.0}, {0.0, 1.0}});
    return s;
}

// Equilateral triangle with a horizontal bottom side and apex up; apothem is
// the inradius.
inline const ConvexShape& triangle_shape() {
    static const ConvexShape s = detail::make_shape(
        "triangle",
        {{-kSqrt3 / 2.0, 0.5}, {0.0, -1.0}, {kSqrt3 / 2.0, 0.5}});
    return s;
}

inline const ConvexShape& shape_by_name(const std::string& name) {
    if (name == "hexagon") return hexagon_shape();
    if (name == "square") return square_shape();
    if (name == "triangle") return triangle_shape();
    throw Error("unknown shape: " + name);
}

}  // namespace hexspan
