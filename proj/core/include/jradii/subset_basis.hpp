#pragma once

#include "jradii/linalg.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace jradii {

/// A construction exists only under a parity/size condition that the
/// arguments violate (as opposed to a plain usage error).
struct NotConstructibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BasisCert { VsbOnly, Gsb };

/// j orthonormal vectors in (d+1)-space, each with zero coordinate sum.
/// When certified Gsb, every coordinate column has squared sum j/(d+1);
/// those are exactly the bases whose simplex projections attain the
/// sqrt(j/(d+1)) circumradius bound.
class SubsetBasis {
public:
    /// Validates the row conditions at the given tolerance and throws
    /// std::invalid_argument when they fail.
    static SubsetBasis make(Mat rows, BasisCert cert, Tolerance tol = {});

    int j() const { return static_cast<int>(rows_.rows()); }
    int d() const { return static_cast<int>(rows_.cols()) - 1; }
    const Mat& rows() const { return rows_; }
    Vec row(int l) const { return rows_.row(l); }
    BasisCert certified() const { return cert_; }

    /// Projection matrix sum_l s_l (x) s_l onto the spanned subspace.
    Mat projection_matrix() const { return rows_.transpose() * rows_; }

private:
    SubsetBasis(Mat rows, BasisCert cert) : rows_(std::move(rows)), cert_(cert) {}

    Mat rows_;
    BasisCert cert_;
};

/// Vertex-list polytope in j-space, one row per vertex.
struct PolytopeV {
    Mat vertices;

    int dim() const { return static_cast<int>(vertices.cols()); }
    int count() const { return static_cast<int>(vertices.rows()); }
    Vec vertex(int k) const { return vertices.row(k); }
};

enum class Verdict { Exists, NotExists, ConjecturedNo, Unknown };

std::string to_string(Verdict v);

/// One rule application in a construction trace. Recipes are postfix
/// programs over a stack of bases, so a stored trace replays to a basis
/// without further search.
struct RecipeStep {
    std::string rule;
    std::vector<long long> args;

    friend bool operator==(const RecipeStep&, const RecipeStep&) = default;
};

using Recipe = std::vector<RecipeStep>;

struct GsbStatus {
    Verdict verdict = Verdict::Unknown;
    Recipe recipe;       // nonempty iff verdict == Exists
    std::string reason;  // nonempty iff verdict == NotExists
};

}  // namespace jradii
