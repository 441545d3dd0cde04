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

#include "qfim/linalg.hpp"

#include <algorithm>

namespace qfim {

std::array<double, 3> eigenvalues_sym3(const Mat3 &a) {
    const double p1 = a(0, 1) * a(0, 1) + a(0, 2) * a(0, 2) + a(1, 2) * a(1, 2);
    if (p1 == 0.0) {
        std::array<double, 3> d{a(0, 0), a(1, 1), a(2, 2)};
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }
    const double q = (a(0, 0) + a(1, 1) + a(2, 2)) / 3.0;
    const double p2 = (a(0, 0) - q) * (a(0, 0) - q) + (a(1, 1) - q) * (a(1, 1) - q) +
                      (a(2, 2) - q) * (a(2, 2) - q) + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);

    // B = (A - q I) / p;  r = det(B) / 2 lies in [-1, 1] for symmetric input.
    Mat3 b;
    for (int i = 0; i < 3; i++) {
        for (int j = 0; j < 3; j++) {
            b(i, j) = (a(i, j) - (i == j ? q : 0.0)) / p;
        }
    }
    const double detb = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                        b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                        b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
    const double r = std::clamp(detb / 2.0, -1.0, 1.0);

    const double phi = std::acos(r) / 3.0;
    const double two_pi_3 = 2.0943951023931953;
    const double e1 = q + 2.0 * p * std::cos(phi);
    const double e3 = q + 2.0 * p * std::cos(phi + two_pi_3);
    const double e2 = 3.0 * q - e1 - e3;
    return {e1, e2, e3};
}

}  // namespace qfim
