#include "jradii/verify.hpp"

#include "jradii/radii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace jradii {

BasisReport check_vsb(const Mat& rows) {
    BasisReport rep;
    rep.orthonormality_defect = orthonormality_defect(rows);
    rep.max_row_sum = rows.rows() == 0 ? 0.0 : rows.rowwise().sum().cwiseAbs().maxCoeff();
    return rep;
}

BasisReport check_gsb(const Mat& rows) {
    BasisReport rep = check_vsb(rows);
    if (rows.rows() == 0) return rep;
    const double target = static_cast<double>(rows.rows()) / rows.cols();
    Vec colsq = rows.colwise().squaredNorm();
    rep.max_column_square_deviation = (colsq.array() - target).abs().maxCoeff();
    return rep;
}

IsotropyReport check_quasi_isotropic(const PolytopeV& c) {
    IsotropyReport rep;
    const int m = c.count();
    const int j = c.dim();
    if (m == 0 || j == 0) return rep;
    rep.max_norm_deviation = (c.vertices.rowwise().norm().array() - 1.0).abs().maxCoeff();
    rep.vertex_sum_norm = c.vertices.colwise().sum().norm();
    Mat moment = c.vertices.transpose() * c.vertices;
    moment.diagonal().array() -= static_cast<double>(m) / j;
    rep.max_moment_deviation = moment.cwiseAbs().maxCoeff();

    rep.min_pairwise_distance = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i)
        for (int k = i + 1; k < m; ++k)
            rep.min_pairwise_distance =
                std::min(rep.min_pairwise_distance, (c.vertices.row(i) - c.vertices.row(k)).norm());
    if (m < 2) rep.min_pairwise_distance = std::numeric_limits<double>::infinity();
    return rep;
}

namespace {

constexpr int kMaxMebDim = 32;
constexpr double kInsideSlack = 1e-12;

// Ball with every support point on the boundary and center in the support's
// affine hull. Solves 2 G lambda = rhs over the difference Gram matrix.
Ball ball_of_support(const std::vector<const Vec*>& support, int dim) {
    Ball b;
    if (support.empty()) {
        b.center = Vec::Zero(dim);
        b.radius = -1.0;  // contains nothing
        return b;
    }
    const Vec& q0 = *support[0];
    const int k = static_cast<int>(support.size()) - 1;
    if (k == 0) {
        b.center = q0;
        b.radius = 0.0;
        return b;
    }
    Mat diffs(k, dim);
    Vec rhs(k);
    for (int i = 0; i < k; ++i) {
        diffs.row(i) = *support[i + 1] - q0;
        rhs[i] = 0.5 * diffs.row(i).squaredNorm();
    }
    Mat gram = diffs * diffs.transpose();
    Vec lambda = gram.colPivHouseholderQr().solve(rhs);
    b.center = q0 + diffs.transpose() * lambda;
    b.radius = (b.center - q0).norm();
    return b;
}

// Support-point walking solver: the center starts on a point and walks
// toward the circumcenter of the current support, stopping whenever an
// outside point becomes tight (then joins the support) or a support point
// turns redundant (negative affine coefficient, then leaves). The radius is
// monotone non-increasing, so the method stays fast and exact even for
// co-spherical inputs in dimension ~30, where plain move-to-front recursion
// degenerates.
class WalkingSolver {
public:
    WalkingSolver(std::vector<const Vec*> pts, int dim) : pts_(std::move(pts)), dim_(dim) {}

    Ball solve() {
        Vec center = *pts_[0];
        double r2 = 0.0;
        int farthest = 0;
        for (size_t i = 0; i < pts_.size(); ++i) {
            const double e = (*pts_[i] - center).squaredNorm();
            if (e > r2) {
                r2 = e;
                farthest = static_cast<int>(i);
            }
        }
        std::vector<int> support{farthest};

        const std::size_t cap = 64 * (pts_.size() + dim_ * dim_ + 4);
        for (std::size_t round = 0; round < cap; ++round) {
            std::vector<const Vec*> sup_pts;
            sup_pts.reserve(support.size());
            for (int i : support) sup_pts.push_back(pts_[i]);
            const Vec cc = ball_of_support(sup_pts, dim_).center;
            const Vec dir = cc - center;
            const double step2 = dir.squaredNorm();

            // steps below 1e-11 * r are noise: the center has reached the
            // circumcenter of the support
            if (step2 <= 1e-22 * std::max(r2, 1e-30)) {
                if (drop_redundant(support, center)) continue;
                return finish(center);
            }

            // walk as far toward the circumcenter as containment allows
            const Vec& s0 = *pts_[support[0]];
            double t = 1.0;
            int stopper = -1;
            for (size_t i = 0; i < pts_.size(); ++i) {
                if (in_support(support, static_cast<int>(i))) continue;
                const Vec& p = *pts_[i];
                const double den = dir.dot(p - s0);
                if (den >= -1e-30) continue;  // moves inward or parallel
                const double num = (center - p).squaredNorm() - (center - s0).squaredNorm();
                const double ti = num / (2.0 * den);
                if (ti < t) {
                    t = std::max(ti, 0.0);
                    stopper = static_cast<int>(i);
                }
            }
            center += t * dir;
            r2 = (center - s0).squaredNorm();
            if (stopper >= 0) support.push_back(stopper);
        }
        throw std::logic_error("min_enclosing_ball: walking failed to converge");
    }

private:
    static bool in_support(const std::vector<int>& support, int i) {
        return std::find(support.begin(), support.end(), i) != support.end();
    }

    // affine coefficients of `center` with respect to the support; drops the
    // most negative one when the center has left the convex hull. Degenerate
    // (affinely dependent) supports have many coefficient vectors; the
    // minimum-norm one avoids spurious negative entries there.
    bool drop_redundant(std::vector<int>& support, const Vec& center) {
        const int k = static_cast<int>(support.size());
        if (k <= 1) return false;
        Mat system(dim_ + 1, k);
        for (int i = 0; i < k; ++i) {
            system.col(i).head(dim_) = *pts_[support[i]];
            system(dim_, i) = 1.0;
        }
        Vec rhs(dim_ + 1);
        rhs.head(dim_) = center;
        rhs[dim_] = 1.0;
        Vec lambda = system.completeOrthogonalDecomposition().solve(rhs);
        int worst = -1;
        double worst_val = -1e-11;
        for (int i = 0; i < k; ++i)
            if (lambda[i] < worst_val) {
                worst = i;
                worst_val = lambda[i];
            }
        if (worst < 0) return false;
        support.erase(support.begin() + worst);
        return true;
    }

    Ball finish(const Vec& center) const {
        double r2 = 0.0;
        for (const Vec* p : pts_) r2 = std::max(r2, (*p - center).squaredNorm());
        return Ball{center, std::sqrt(r2)};
    }

    std::vector<const Vec*> pts_;
    int dim_;
};

}  // namespace

Ball min_enclosing_ball(const std::vector<Vec>& points, std::uint64_t shuffle_seed) {
    if (points.empty()) throw std::invalid_argument("min_enclosing_ball: empty point set");
    const int dim = static_cast<int>(points[0].size());
    if (dim < 1 || dim > kMaxMebDim)
        throw std::invalid_argument("min_enclosing_ball: dimension out of range");
    for (const Vec& p : points)
        if (p.size() != dim)
            throw std::invalid_argument("min_enclosing_ball: mixed point dimensions");

    std::vector<const Vec*> pts(points.size());
    for (size_t i = 0; i < points.size(); ++i) pts[i] = &points[i];
    std::mt19937_64 rng(shuffle_seed);
    std::shuffle(pts.begin(), pts.end(), rng);

    return WalkingSolver(std::move(pts), dim).solve();
}

ProjectionResult project_simplex(const SubsetBasis& basis, Tolerance tol, std::uint64_t meb_seed) {
    BasisReport rep = check_vsb(basis.rows());
    if (!rep.vsb_pass(tol))
        throw std::invalid_argument("project_simplex: basis fails the vsb conditions");
    const int n = basis.d() + 1;
    std::vector<Vec> coords;
    coords.reserve(n);
    for (int k = 0; k < n; ++k) coords.push_back(basis.rows().col(k));
    Ball ball = min_enclosing_ball(coords, meb_seed);

    Mat verts(n, basis.j());
    for (int k = 0; k < n; ++k) verts.row(k) = coords[k];
    return ProjectionResult{SubsetBasis(basis), PolytopeV{std::move(verts)}, ball.center,
                            ball.radius};
}

SignVector sign_choice_oracle(const Mat& frame, const std::vector<double>& a, Tolerance tol) {
    const int j = static_cast<int>(frame.rows());
    const int d = static_cast<int>(frame.cols());
    if (d < 1 || d > 24) throw std::invalid_argument("sign_choice_oracle: need 1 <= d <= 24");
    if (static_cast<int>(a.size()) != d)
        throw std::invalid_argument("sign_choice_oracle: weight count mismatch");
    for (double v : a)
        if (!(v > 0.0)) throw std::invalid_argument("sign_choice_oracle: weights must be positive");
    if (orthonormality_defect(frame) > tol.eps)
        throw std::invalid_argument("sign_choice_oracle: rows are not orthonormal");

    double target = 0.0;
    for (int k = 0; k < d; ++k) target += a[k] * a[k] * frame.col(k).squaredNorm();

    // the objective is invariant under a global sign flip, so pin sign 0 to +
    Vec alpha(d);
    const std::uint64_t patterns = d == 1 ? 1ull : (1ull << (d - 1));
    for (std::uint64_t mask = 0; mask < patterns; ++mask) {
        alpha[0] = a[0];
        for (int k = 1; k < d; ++k)
            alpha[k] = (mask >> (k - 1)) & 1ull ? -a[k] : a[k];
        const double achieved = (frame * alpha).squaredNorm();
        if (achieved >= target - tol.eps) {
            SignVector sv;
            sv.signs.resize(d);
            for (int k = 0; k < d; ++k) sv.signs[k] = alpha[k] > 0.0 ? 1 : -1;
            return sv;
        }
    }
    (void)j;
    throw std::logic_error(
        "sign_choice_oracle: exhausted all sign patterns; this contradicts the "
        "guaranteed existence and indicates a bug or precondition violation");
}

DualityReport duality_check(int j, int d) {
    BoxSpec cube = BoxSpec::unit(d);
    DualityReport rep;
    rep.inner_cube_times_outer_cross =
        box_inner_radius(cube, j).value * cross_outer_radius(cube, j).value;
    rep.outer_cube_times_inner_cross =
        box_outer_radius(cube, j).value * cross_inner_radius(cube, j).value;
    rep.pass = rep.inner_cube_times_outer_cross == SqrtRational::one() &&
               rep.outer_cube_times_inner_cross == SqrtRational::one();
    return rep;
}

namespace {

Mat distance_matrix(const PolytopeV& p) {
    const int m = p.count();
    Mat dist(m, m);
    for (int i = 0; i < m; ++i) {
        dist(i, i) = 0.0;
        for (int k = i + 1; k < m; ++k) {
            double v = (p.vertices.row(i) - p.vertices.row(k)).norm();
            dist(i, k) = v;
            dist(k, i) = v;
        }
    }
    return dist;
}

bool match_search(const Mat& da, const Mat& db, std::vector<int>& assign,
                  std::vector<bool>& used, int next, double eps) {
    const int m = static_cast<int>(da.rows());
    if (next == m) return true;
    for (int w = 0; w < m; ++w) {
        if (used[w]) continue;
        bool ok = true;
        for (int s = 0; s < next && ok; ++s)
            ok = std::abs(da(next, s) - db(w, assign[s])) <= eps;
        if (!ok) continue;
        assign[next] = w;
        used[w] = true;
        if (match_search(da, db, assign, used, next + 1, eps)) return true;
        used[w] = false;
    }
    return false;
}

bool distance_matrices_match(const Mat& da, const Mat& db, double eps) {
    const int m = static_cast<int>(da.rows());
    std::vector<int> assign(m, -1);
    std::vector<bool> used(m, false);
    return match_search(da, db, assign, used, 0, eps);
}

}  // namespace

CongruenceResult congruence_check(const PolytopeV& a, const PolytopeV& b, Tolerance tol) {
    CongruenceResult res;
    if (a.count() != b.count() || a.count() == 0) return res;
    Mat da = distance_matrix(a);
    Mat db = distance_matrix(b);
    const double na = da.norm();
    const double nb = db.norm();
    res.scale = na > 0.0 ? nb / na : 1.0;
    res.congruent = distance_matrices_match(da, db, tol.eps);
    if (res.congruent) {
        res.similar = true;
    } else if (na > 0.0 && nb > 0.0) {
        res.similar = distance_matrices_match(res.scale * da, db, tol.eps);
    }
    return res;
}

}  // namespace jradii
