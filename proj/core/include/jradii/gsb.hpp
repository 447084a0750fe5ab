#pragma once

#include "jradii/subset_basis.hpp"

namespace jradii {

/// j=1 gsb for odd d: the alternating row (1,-1,...,1,-1)/sqrt(d+1).
/// Throws NotConstructibleError for even d, where no j=1 gsb exists.
SubsetBasis gsb_dim1(int d, Tolerance tol = {});

/// j=2 gsb for any d >= 2 from the regular (d+1)-gon: rows
/// sqrt(2/(d+1)) * (cos(2 pi k/(d+1)))_k and sqrt(2/(d+1)) * (sin ...)_k.
SubsetBasis gsb_polygon(int d, Tolerance tol = {});

/// j=3 gsb for odd d >= 5 from the prism over a regular (d+1)/2-gon with
/// ring radius sqrt(2/3) and half-height sqrt(1/3) (the height is forced by
/// the isotropy condition). For j=3, d=3 use the full-basis route instead.
SubsetBasis gsb_prism(int d, Tolerance tol = {});

/// The d+1 unit vertices u_k with u_kl = sqrt((d+1)/j) * s_lk. Requires a
/// certified gsb; the result satisfies the equal-weight John conditions.
PolytopeV poly_from_gsb(const SubsetBasis& b);

/// Inverse of poly_from_gsb: rows s_l = sqrt(j/(d+1)) * (u_1l, ..., u_(d+1)l).
/// Requires check_quasi_isotropic to pass; the error message names the
/// violated condition.
SubsetBasis gsb_from_poly(const PolytopeV& c, Tolerance tol = {});

/// Concatenates the vertex lists of two quasi-isotropic polytopes in the
/// same space; the union is again quasi-isotropic (d = d1 + d2 + 1).
PolytopeV combine_additive(const PolytopeV& c1, const PolytopeV& c2, Tolerance tol = {});

/// The three gsb's in (d1+1)(d2+1)-space built from gsb's in (d1+1)- and
/// (d2+1)-space. Coordinates are indexed by pairs (i, jj) laid out in
/// blocks of size d1+1.
struct MultiplicativeCombination {
    SubsetBasis tiled_first;      // rows of b1 tiled d2+1 times, / sqrt(d2+1)
    SubsetBasis repeated_second;  // rows of b2 with coords repeated d1+1 times, / sqrt(d1+1)
    SubsetBasis products;         // flattened outer products s_l1 (x) t_l2
};

/// All three sets are certified gsb's and their union of k1+k2+k1*k2 rows is
/// pairwise orthonormal (a vsb).
MultiplicativeCombination combine_multiplicative(const SubsetBasis& b1,
                                                 const SubsetBasis& b2,
                                                 Tolerance tol = {});

/// The d-j new rows of the orthonormal completion of a gsb within the
/// zero-sum hyperplane; itself a gsb (column sums (d-j)/(d+1)). The optimal
/// projections for j and d-j live in orthogonal subspaces.
SubsetBasis complement_gsb(const SubsetBasis& b, Tolerance tol = {});

/// Stacks two bases over the same ambient space into one; validates that the
/// union is orthonormal and certifies the sum-level it reaches.
SubsetBasis stack_bases(const SubsetBasis& a, const SubsetBasis& b, Tolerance tol = {});

/// gsb of size d in 2d-space from a full gsb (size d-1) in d-space: rows
/// (s_l ; -s_l)/sqrt(2) plus (1,...,1,-1,...,-1)/sqrt(2d). The projection of
/// the (2d-1)-simplex through it is congruent to sqrt(1/2) times the regular
/// cross-polytope. The trailing ones-blocks have length d, which is what
/// makes the column-sum arithmetic close.
SubsetBasis gsb_cross_polytope(int d, const SubsetBasis& inner, Tolerance tol = {});

/// Existence verdict for a j-element gsb in (d+1)-space, with a replayable
/// construction recipe when the verdict is Exists.
GsbStatus exists_gsb(int j, int d);

/// Executes a recipe (postfix program over a basis stack).
SubsetBasis replay_recipe(const Recipe& recipe, Tolerance tol = {});

/// Builds a certified gsb whenever exists_gsb says Exists; throws
/// NotConstructibleError echoing the verdict otherwise.
SubsetBasis synthesize_gsb(int j, int d, Tolerance tol = {});

}  // namespace jradii
