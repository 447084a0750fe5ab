#pragma once

#include "jradii/sqrt_rational.hpp"

#include <string>
#include <vector>

namespace jradii {

enum class RadiusKind {
    Exact,              // a closed form pins the value
    LowerBoundOnly,     // only the sqrt(j/(d+1)) bound is certified
    ExternallyResolved  // bound not attained; exact value settled in later
                        // literature and not computed here
};

std::string to_string(RadiusKind k);

struct RadiusResult {
    SqrtRational value;  // the exact value, or the lower bound for the
                         // non-Exact kinds
    RadiusKind kind = RadiusKind::Exact;
    std::string source;
};

/// Positive half-widths a_1 <= ... <= a_d. Squared half-widths are kept as
/// exact rationals, so every radius below is an exact SqrtRational whenever
/// the squared inputs are rational (doubles are promoted exactly).
class BoxSpec {
public:
    static BoxSpec from_half_widths(const std::vector<double>& a);
    static BoxSpec from_rational_half_widths(const std::vector<BigRational>& a);

    /// All half-widths 1, d times.
    static BoxSpec unit(int d);

    int dim() const { return static_cast<int>(squares_.size()); }
    const std::vector<double>& half_widths() const { return approx_; }
    const std::vector<BigRational>& squares() const { return squares_; }

    /// Spec of the polar body's box: half-widths 1/a_i.
    BoxSpec reciprocal() const;

private:
    std::vector<BigRational> squares_;  // ascending
    std::vector<double> approx_;        // ascending, same order
};

// Regular simplex T^d (edge length sqrt(2)).
RadiusResult simplex_inner_radius(int j, int d);   // sqrt(1/(j(j+1)))
SqrtRational simplex_lower_bound(int j, int d);    // sqrt(j/(d+1))
RadiusResult simplex_outer_radius(int j, int d);

// Boxes and cross-polytopes with half-widths / semi-axes from spec.
RadiusResult box_inner_radius(const BoxSpec& spec, int j);
RadiusResult box_outer_radius(const BoxSpec& spec, int j);
RadiusResult cross_outer_radius(const BoxSpec& spec, int j);
RadiusResult cross_inner_radius(const BoxSpec& spec, int j);

}  // namespace jradii
