// Copyright 2026 The qfim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cmath>

namespace qfim {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 cross(const Vec3 &o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
};

/// Symmetric 3x3 matrix stored densely; only ever filled symmetrically.
struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};

    double &operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    Vec3 apply(const Vec3 &v) const {
        return {
            m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z,
        };
    }

    /// v^T M w quadratic form.
    double form(const Vec3 &v, const Vec3 &w) const { return v.dot(apply(w)); }
};

/// Largest eigenvalue of [[a, c], [c, b]].
inline double max_eigenvalue_sym2(double a, double b, double c) {
    return 0.5 * (a + b) + std::sqrt(0.25 * (a - b) * (a - b) + c * c);
}

/// All eigenvalues of a symmetric 3x3 matrix, descending, via the closed-form
/// trigonometric (Cardano) solution. No iteration, degeneracy-safe.
std::array<double, 3> eigenvalues_sym3(const Mat3 &a);

/// Largest eigenvalue of a symmetric 3x3 matrix.
inline double max_eigenvalue_sym3(const Mat3 &a) { return eigenvalues_sym3(a)[0]; }

}  // namespace qfim
