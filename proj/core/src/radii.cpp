#include "jradii/radii.hpp"

#include "jradii/gsb.hpp"

#include <algorithm>
#include <stdexcept>

namespace jradii {

namespace {

void require_range(int j, int d) {
    if (d < 1 || j < 1 || j > d) throw std::invalid_argument("require 1 <= j <= d");
}

constexpr const char* kSrcIdentityProjection = "full-space circumradius (j = d)";
constexpr const char* kSrcOddWidth = "alternating-vector width (odd d)";
constexpr const char* kSrcEvenWidth = "even-dimensional width formula";
constexpr const char* kSrcGsbAttained = "attained lower bound (good subset basis)";
constexpr const char* kSrcLowerBound = "general lower bound; attainment undecided";
constexpr const char* kSrcExternal =
    "bound not attained; exact value resolved in later literature";
constexpr const char* kSrcSimplexInner = "inscribed j-ball of the regular simplex";
constexpr const char* kSrcBoxInner = "largest inscribed j-ball of a box";
constexpr const char* kSrcBoxOuter = "projection through a smallest j-face";
constexpr const char* kSrcCrossOuter = "polar duality with the box inscribed ball";
constexpr const char* kSrcCrossInner = "polar duality with the box outer radius";

// Largest inscribed j-ball of a box, as an exact squared radius over the
// ascending squared half-widths q. k is the smallest of 0..j-1 whose
// threshold holds; the j-k-1 = 0 threshold is read as vacuously true.
BigRational box_inner_sq(const std::vector<BigRational>& q, int j) {
    const int d = static_cast<int>(q.size());
    std::vector<BigRational> prefix(d + 1);
    prefix[0] = 0;
    for (int i = 0; i < d; ++i) prefix[i + 1] = prefix[i] + q[i];

    int chosen = j - 1;
    for (int k = 0; k < j - 1; ++k) {
        // a_{d-k} <= sqrt(prefix(d-k-1)/(j-k-1))
        if (q[d - k - 1] * (j - k - 1) <= prefix[d - k - 1]) {
            chosen = k;
            break;
        }
    }
    return prefix[d - chosen] / (j - chosen);
}

BigRational box_outer_sq(const std::vector<BigRational>& q, int j) {
    BigRational sum = 0;
    for (int i = 0; i < j; ++i) sum += q[i];
    return sum;
}

std::vector<BigRational> reciprocal_ascending(const std::vector<BigRational>& q) {
    std::vector<BigRational> rec(q.rbegin(), q.rend());
    for (auto& v : rec) v = 1 / v;
    return rec;
}

}  // namespace

BoxSpec BoxSpec::from_half_widths(const std::vector<double>& a) {
    std::vector<BigRational> exact;
    exact.reserve(a.size());
    for (double v : a) exact.emplace_back(v);  // dyadic, hence exact
    return from_rational_half_widths(exact);
}

BoxSpec BoxSpec::from_rational_half_widths(const std::vector<BigRational>& a) {
    if (a.empty()) throw std::invalid_argument("BoxSpec: need at least one half-width");
    BoxSpec spec;
    spec.squares_.reserve(a.size());
    for (const BigRational& v : a) {
        if (v <= 0) throw std::invalid_argument("BoxSpec: half-widths must be positive");
        spec.squares_.push_back(v * v);
    }
    std::sort(spec.squares_.begin(), spec.squares_.end());
    spec.approx_.reserve(a.size());
    for (const BigRational& s : spec.squares_)
        spec.approx_.push_back(SqrtRational::of_square(s).value());
    return spec;
}

BoxSpec BoxSpec::unit(int d) {
    if (d < 1) throw std::invalid_argument("BoxSpec: d >= 1 required");
    return from_rational_half_widths(std::vector<BigRational>(d, BigRational(1)));
}

BoxSpec BoxSpec::reciprocal() const {
    BoxSpec spec;
    spec.squares_ = reciprocal_ascending(squares_);
    spec.approx_.reserve(squares_.size());
    for (const BigRational& s : spec.squares_)
        spec.approx_.push_back(SqrtRational::of_square(s).value());
    return spec;
}

std::string to_string(RadiusKind k) {
    switch (k) {
        case RadiusKind::Exact: return "Exact";
        case RadiusKind::LowerBoundOnly: return "LowerBoundOnly";
        case RadiusKind::ExternallyResolved: return "ExternallyResolved";
    }
    return "?";
}

RadiusResult simplex_inner_radius(int j, int d) {
    require_range(j, d);
    return {SqrtRational(1, BigInt(j) * (j + 1)), RadiusKind::Exact, kSrcSimplexInner};
}

SqrtRational simplex_lower_bound(int j, int d) {
    require_range(j, d);
    return SqrtRational(j, d + 1);
}

RadiusResult simplex_outer_radius(int j, int d) {
    require_range(j, d);
    if (j == 1 && d % 2 == 0)
        return {SqrtRational(d + 1, BigInt(d) * (d + 2)), RadiusKind::Exact, kSrcEvenWidth};
    if (j == d - 1 && d % 2 == 0)
        return {simplex_lower_bound(j, d), RadiusKind::ExternallyResolved, kSrcExternal};
    if (exists_gsb(j, d).verdict == Verdict::Exists) {
        const char* src = (j == d)            ? kSrcIdentityProjection
                          : (j == 1)          ? kSrcOddWidth
                                              : kSrcGsbAttained;
        return {simplex_lower_bound(j, d), RadiusKind::Exact, src};
    }
    return {simplex_lower_bound(j, d), RadiusKind::LowerBoundOnly, kSrcLowerBound};
}

RadiusResult box_inner_radius(const BoxSpec& spec, int j) {
    require_range(j, spec.dim());
    return {SqrtRational::of_square(box_inner_sq(spec.squares(), j)), RadiusKind::Exact,
            kSrcBoxInner};
}

RadiusResult box_outer_radius(const BoxSpec& spec, int j) {
    require_range(j, spec.dim());
    return {SqrtRational::of_square(box_outer_sq(spec.squares(), j)), RadiusKind::Exact,
            kSrcBoxOuter};
}

RadiusResult cross_outer_radius(const BoxSpec& spec, int j) {
    require_range(j, spec.dim());
    BigRational sq = 1 / box_inner_sq(reciprocal_ascending(spec.squares()), j);
    return {SqrtRational::of_square(sq), RadiusKind::Exact, kSrcCrossOuter};
}

RadiusResult cross_inner_radius(const BoxSpec& spec, int j) {
    require_range(j, spec.dim());
    BigRational sq = 1 / box_outer_sq(reciprocal_ascending(spec.squares()), j);
    return {SqrtRational::of_square(sq), RadiusKind::Exact, kSrcCrossInner};
}

}  // namespace jradii
