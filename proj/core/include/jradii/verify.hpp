#pragma once

#include "jradii/radii.hpp"
#include "jradii/sqrt_rational.hpp"
#include "jradii/subset_basis.hpp"

#include <cstdint>
#include <vector>

namespace jradii {

/// Residuals of the subset-basis conditions. vsb = orthonormal zero-sum
/// rows; gsb additionally needs uniform column square sums j/(d+1).
struct BasisReport {
    double orthonormality_defect = 0.0;
    double max_row_sum = 0.0;
    double max_column_square_deviation = 0.0;

    bool vsb_pass(Tolerance tol = {}) const {
        return orthonormality_defect <= tol.eps && max_row_sum <= tol.eps;
    }
    bool gsb_pass(Tolerance tol = {}) const {
        return vsb_pass(tol) && max_column_square_deviation <= tol.eps;
    }
};

BasisReport check_vsb(const Mat& rows);
BasisReport check_gsb(const Mat& rows);
inline BasisReport check_vsb(const SubsetBasis& b) { return check_vsb(b.rows()); }
inline BasisReport check_gsb(const SubsetBasis& b) { return check_gsb(b.rows()); }

/// Residuals of the equal-weight John conditions for a unit-vertex
/// polytope: unit norms, zero vertex sum, second moment (m/j)*I.
struct IsotropyReport {
    double max_norm_deviation = 0.0;
    double vertex_sum_norm = 0.0;
    double max_moment_deviation = 0.0;
    double min_pairwise_distance = 0.0;

    bool quasi_isotropic(Tolerance tol = {}) const {
        return max_norm_deviation <= tol.eps && vertex_sum_norm <= tol.eps &&
               max_moment_deviation <= tol.eps;
    }
    bool isotropic(Tolerance tol = {}) const {
        return quasi_isotropic(tol) && min_pairwise_distance > tol.eps;
    }
};

IsotropyReport check_quasi_isotropic(const PolytopeV& c);

struct Ball {
    Vec center;
    double radius = 0.0;
};

/// Smallest ball containing the points. Randomized move-to-front support
/// method; deterministic for a fixed shuffle seed. Dimension capped at 32.
Ball min_enclosing_ball(const std::vector<Vec>& points, std::uint64_t shuffle_seed = 0);

struct ProjectionResult {
    SubsetBasis basis;
    PolytopeV projected;  // coordinates of the projected simplex vertices
    Vec center;
    double circumradius = 0.0;
};

/// Projects the d+1 simplex vertices onto span(basis) and computes the
/// minimal enclosing ball of the image. For a certified gsb the center is
/// the origin and the radius is sqrt(j/(d+1)).
ProjectionResult project_simplex(const SubsetBasis& basis, Tolerance tol = {},
                                 std::uint64_t meb_seed = 0);

struct SignVector {
    std::vector<int> signs;  // entries in {+1, -1}
};

/// For orthonormal rows `frame` (j x d) and positive weights a, finds signs
/// with sum_l (sum_k a_k sign_k s_lk)^2 >= sum_k a_k^2 sum_l s_lk^2 - eps by
/// exhaustive enumeration (d <= 24). Such signs always exist; not finding
/// any indicates a bug or a precondition violation and throws.
SignVector sign_choice_oracle(const Mat& frame, const std::vector<double>& a,
                              Tolerance tol = {});

struct DualityReport {
    SqrtRational inner_cube_times_outer_cross;
    SqrtRational outer_cube_times_inner_cross;
    bool pass = false;
};

/// Exact product identities r_j(B^d) * R_j(X^d) = 1 and
/// R_j(B^d) * r_j(X^d) = 1 for the unit cube / regular cross-polytope pair.
DualityReport duality_check(int j, int d);

struct CongruenceResult {
    bool congruent = false;
    bool similar = false;
    double scale = 0.0;  // factor carrying A onto B when similar
};

/// True when some vertex matching makes the pairwise distance matrices
/// equal within tol; similarity additionally allows one global scale.
CongruenceResult congruence_check(const PolytopeV& a, const PolytopeV& b,
                                  Tolerance tol = {});

enum class SearchBody { Simplex, Box, Cross };

struct SearchSpec {
    SearchBody body = SearchBody::Simplex;
    int j = 1;
    int d = 2;
    std::vector<double> half_widths;  // box / cross only
};

struct SearchResult {
    Mat basis;  // best j-frame found (zero-sum rows for the simplex)
    double radius = 0.0;
};

/// Random-restart descent over projection frames: perturb, re-orthonormalize
/// (zero-sum re-projection for the simplex), accept on improvement. Radius is
/// monotone non-increasing within a restart and deterministic given the seed.
/// Probes the outer-radius minimum; makes no optimality claim.
SearchResult grassmann_search(const SearchSpec& spec, int restarts, int iterations,
                              std::uint64_t seed);

}  // namespace jradii
