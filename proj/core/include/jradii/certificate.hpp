#pragma once

#include "jradii/subset_basis.hpp"
#include "jradii/verify.hpp"

#include <stdexcept>
#include <string>

namespace jradii {

struct CertificateFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Serializable witness for a subset basis: the numeric rows, the recipe
/// that regenerates them, and the residuals measured at creation time.
/// Doubles are stored in shortest round-trip decimal form, so reloading
/// reproduces the rows bit for bit; exactness lives in the recipe.
struct Certificate {
    int schema_version = 1;
    int j = 0;
    int d = 0;
    Mat basis;  // j x (d+1)
    Recipe recipe;
    BasisReport residuals;
};

Certificate make_certificate(const SubsetBasis& basis, const Recipe& recipe);

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);  // throws CertificateFormatError

void save_certificate(const Certificate& cert, const std::string& path);  // throws IoError
Certificate load_certificate(const std::string& path);  // throws IoError / CertificateFormatError

}  // namespace jradii
