#include "jradii/linalg.hpp"

#include <cmath>

namespace jradii {

double orthonormality_defect(const Mat& rows) {
    if (rows.rows() == 0) return 0.0;
    Mat gram = rows * rows.transpose();
    gram.diagonal().array() -= 1.0;
    return gram.cwiseAbs().maxCoeff();
}

namespace {

// Two orthogonalization passes keep residuals near machine noise even at
// d ~ 100, where one classical pass loses digits.
void orthogonalize_against(Vec& v, const std::vector<Vec>& basis) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const Vec& b : basis) v -= b.dot(v) * b;
    }
}

}  // namespace

std::vector<Vec> gram_schmidt_extend(const std::vector<Vec>& partial, int ambient_dim,
                                     bool zero_sum, Tolerance tol) {
    if (ambient_dim < 1) throw std::invalid_argument("gram_schmidt_extend: ambient_dim < 1");
    for (const Vec& v : partial) {
        if (v.size() != ambient_dim)
            throw std::invalid_argument("gram_schmidt_extend: vector dimension mismatch");
        if (zero_sum && std::abs(v.sum()) > tol.eps)
            throw std::invalid_argument("gram_schmidt_extend: input row is not zero-sum");
    }
    if (!partial.empty()) {
        Mat rows(partial.size(), ambient_dim);
        for (size_t i = 0; i < partial.size(); ++i) rows.row(i) = partial[i];
        if (orthonormality_defect(rows) > tol.eps)
            throw std::invalid_argument("gram_schmidt_extend: input is not orthonormal");
    }

    const int target = zero_sum ? ambient_dim - 1 : ambient_dim;
    std::vector<Vec> out = partial;
    for (int k = 0; k < ambient_dim && static_cast<int>(out.size()) < target; ++k) {
        Vec cand = Vec::Unit(ambient_dim, k);
        if (zero_sum) cand = zero_sum_project(cand);
        orthogonalize_against(cand, out);
        double n = cand.norm();
        if (n < 1e-6) continue;  // candidate already spanned
        cand /= n;
        if (zero_sum) cand = zero_sum_project(cand);  // scrub rounding drift
        cand.normalize();
        out.push_back(cand);
    }
    if (static_cast<int>(out.size()) != target)
        throw std::invalid_argument("gram_schmidt_extend: could not complete basis");
    return out;
}

std::vector<Vec> project_points(const std::vector<Vec>& points,
                                const std::vector<Vec>& basis, Tolerance tol) {
    const int j = static_cast<int>(basis.size());
    if (j > 0) {
        const auto dim = basis[0].size();
        Mat rows(j, dim);
        for (int l = 0; l < j; ++l) {
            if (basis[l].size() != dim)
                throw std::invalid_argument("project_points: basis dimension mismatch");
            rows.row(l) = basis[l];
        }
        if (orthonormality_defect(rows) > tol.eps)
            throw std::invalid_argument("project_points: basis is not orthonormal");
        for (const Vec& p : points)
            if (p.size() != dim)
                throw std::invalid_argument("project_points: point dimension mismatch");
    }
    std::vector<Vec> coords;
    coords.reserve(points.size());
    for (const Vec& p : points) {
        Vec c(j);
        for (int l = 0; l < j; ++l) c[l] = basis[l].dot(p);
        coords.push_back(std::move(c));
    }
    return coords;
}

Mat orthonormalize_rows(Mat frame) {
    const int j = static_cast<int>(frame.rows());
    std::vector<Vec> done;
    done.reserve(j);
    for (int l = 0; l < j; ++l) {
        Vec v = frame.row(l);
        orthogonalize_against(v, done);
        double n = v.norm();
        if (n < 1e-12) throw std::invalid_argument("orthonormalize_rows: rank-deficient frame");
        done.push_back(v / n);
    }
    for (int l = 0; l < j; ++l) frame.row(l) = done[l];
    return frame;
}

Mat random_frame(int j, int dim, bool zero_sum, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat frame(j, dim);
        for (int l = 0; l < j; ++l)
            for (int k = 0; k < dim; ++k) frame(l, k) = gauss(rng);
        if (zero_sum)
            for (int l = 0; l < j; ++l) frame.row(l) = zero_sum_project(frame.row(l).transpose());
        try {
            return orthonormalize_rows(std::move(frame));
        } catch (const std::invalid_argument&) {
            // resample on (vanishingly rare) rank deficiency
        }
    }
    throw std::runtime_error("random_frame: repeated rank deficiency");
}

}  // namespace jradii
