#pragma once

#include <compare>
#include <cstdint>

namespace latwalk {

/// A site of the square lattice Z^2.
struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr bool operator==(LatticePoint, LatticePoint) = default;

    // Row-major order: by y, then x. Fixes iteration and serialization order
    // everywhere a deterministic ordering is required.
    friend constexpr auto operator<=>(LatticePoint a, LatticePoint b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }

    constexpr LatticePoint operator-() const { return {-x, -y}; }
    friend constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) {
        return {a.x + b.x, a.y + b.y};
    }
    friend constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) {
        return {a.x - b.x, a.y - b.y};
    }
};

/// Squared euclidean norm ||p||^2 = x^2 + y^2.
constexpr std::int64_t norm2(LatticePoint p) { return p.x * p.x + p.y * p.y; }

/// Inclusive axis-aligned bounding box; empty when xmin > xmax.
struct Box {
    std::int64_t xmin = 0, xmax = -1, ymin = 0, ymax = -1;

    friend constexpr bool operator==(Box, Box) = default;

    constexpr bool empty() const { return xmin > xmax || ymin > ymax; }
    constexpr std::int64_t width() const { return empty() ? 0 : xmax - xmin + 1; }
    constexpr std::int64_t height() const { return empty() ? 0 : ymax - ymin + 1; }
    constexpr std::int64_t cells() const { return width() * height(); }
    constexpr bool contains(LatticePoint p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    constexpr bool contains(Box b) const {
        return b.empty() ||
               (b.xmin >= xmin && b.xmax <= xmax && b.ymin >= ymin && b.ymax <= ymax);
    }
    /// Row-major flat index of p; p must lie inside the box.
    constexpr std::size_t index(LatticePoint p) const {
        return static_cast<std::size_t>(p.y - ymin) * static_cast<std::size_t>(width()) +
               static_cast<std::size_t>(p.x - xmin);
    }
    /// Minkowski-style expansion by per-side amounts (all non-negative).
    constexpr Box expanded(std::int64_t left, std::int64_t right,
                           std::int64_t down, std::int64_t up) const {
        return {xmin - left, xmax + right, ymin - down, ymax + up};
    }
};

} // namespace latwalk
