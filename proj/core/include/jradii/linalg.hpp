#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace jradii {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Pass/fail threshold for orthonormality, zero-sum and isotropy residuals.
struct Tolerance {
    double eps = 1e-9;

    Tolerance() = default;
    explicit Tolerance(double e) : eps(e) {
        if (!(e > 0.0 && e < 1e-3))
            throw std::invalid_argument("Tolerance: eps must lie in (0, 1e-3)");
    }
};

/// Orthogonal projection of v onto the zero-coordinate-sum hyperplane.
inline Vec zero_sum_project(const Vec& v) {
    return v.array() - v.mean();
}

/// max_{l<=m} |<v_l, v_m> - delta_lm| over the rows of a frame.
double orthonormality_defect(const Mat& rows);

/// Completes `partial` to an orthonormal basis of the ambient space, or of
/// the zero-sum hyperplane when `zero_sum` is set. The input vectors are
/// returned unchanged as a prefix. Throws std::invalid_argument when the
/// input is not orthonormal (or not zero-sum) within tol.
std::vector<Vec> gram_schmidt_extend(const std::vector<Vec>& partial, int ambient_dim,
                                     bool zero_sum, Tolerance tol = {});

/// Coordinates of each point in the given orthonormal basis: output k has
/// entries <points[k], basis[l]>.
std::vector<Vec> project_points(const std::vector<Vec>& points,
                                const std::vector<Vec>& basis, Tolerance tol = {});

/// Two-pass Gram-Schmidt on the rows. Throws when the rows are numerically
/// rank deficient.
Mat orthonormalize_rows(Mat frame);

/// Random orthonormal j-frame in `dim`-space, rows constrained to the
/// zero-sum hyperplane when requested.
Mat random_frame(int j, int dim, bool zero_sum, std::mt19937_64& rng);

}  // namespace jradii
