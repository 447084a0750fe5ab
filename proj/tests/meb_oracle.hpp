#pragma once

#include "jradii/linalg.hpp"

#include <limits>
#include <vector>

// Test-only oracle: minimal enclosing ball by exhaustive support-subset
// enumeration. Independent of the production move-to-front method: every
// affinely independent subset of size 1..dim+1 proposes its circumscribed
// ball (center in the subset's affine hull), and the smallest proposal that
// contains all points wins.
inline double brute_force_meb_radius(const std::vector<jradii::Vec>& pts) {
    using jradii::Mat;
    using jradii::Vec;
    const int n = static_cast<int>(pts.size());
    const int dim = static_cast<int>(pts[0].size());
    double best = std::numeric_limits<double>::infinity();

    std::vector<int> subset;
    auto consider = [&]() {
        const int k = static_cast<int>(subset.size());
        Vec center;
        if (k == 1) {
            center = pts[subset[0]];
        } else {
            const Vec& q0 = pts[subset[0]];
            Mat diffs(k - 1, dim);
            Vec rhs(k - 1);
            for (int i = 1; i < k; ++i) {
                diffs.row(i - 1) = pts[subset[i]] - q0;
                rhs[i - 1] = 0.5 * diffs.row(i - 1).squaredNorm();
            }
            Mat gram = diffs * diffs.transpose();
            Eigen::FullPivLU<Mat> lu(gram);
            if (!lu.isInvertible()) return;  // affinely dependent subset
            center = q0 + diffs.transpose() * lu.solve(rhs);
        }
        double r2 = 0.0;
        for (int i : subset) r2 = std::max(r2, (pts[i] - center).squaredNorm());
        const double limit = r2 * (1.0 + 1e-12) + 1e-26;
        for (int i = 0; i < n; ++i)
            if ((pts[i] - center).squaredNorm() > limit) return;
        best = std::min(best, std::sqrt(r2));
    };

    auto recurse = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            consider();
            return;
        }
        for (int i = start; i <= n - remaining; ++i) {
            subset.push_back(i);
            self(self, i + 1, remaining - 1);
            subset.pop_back();
        }
    };
    for (int size = 1; size <= std::min(n, dim + 1); ++size) recurse(recurse, 0, size);
    return best;
}
