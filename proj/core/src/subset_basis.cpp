#include "jradii/subset_basis.hpp"

#include "jradii/verify.hpp"

#include <sstream>

namespace jradii {

SubsetBasis SubsetBasis::make(Mat rows, BasisCert cert, Tolerance tol) {
    if (rows.rows() < 1 || rows.cols() < 2 || rows.rows() >= rows.cols())
        throw std::invalid_argument("SubsetBasis: need 1 <= j <= d rows in (d+1)-space");
    BasisReport rep = check_gsb(rows);
    std::ostringstream why;
    if (rep.orthonormality_defect > tol.eps)
        why << "orthonormality defect " << rep.orthonormality_defect << "; ";
    if (rep.max_row_sum > tol.eps) why << "row sum " << rep.max_row_sum << "; ";
    if (cert == BasisCert::Gsb && rep.max_column_square_deviation > tol.eps)
        why << "column square-sum deviation " << rep.max_column_square_deviation << "; ";
    std::string msg = why.str();
    if (!msg.empty()) throw std::invalid_argument("SubsetBasis: " + msg);
    return SubsetBasis(std::move(rows), cert);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Exists: return "Exists";
        case Verdict::NotExists: return "NotExists";
        case Verdict::ConjecturedNo: return "ConjecturedNo";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

}  // namespace jradii
