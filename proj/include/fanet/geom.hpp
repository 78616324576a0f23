#pragma once

#include <cmath>

namespace fanet {

/// 3-D point/vector in meters.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }

    bool operator==(const Vec3& o) const = default;
};

inline double distance(const Vec3& a, const Vec3& b) { return (a - b).norm(); }

} // namespace fanet
