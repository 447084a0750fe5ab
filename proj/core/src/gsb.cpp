#include "jradii/gsb.hpp"

#include "jradii/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace jradii {

namespace {

void require_range(int j, int d) {
    if (j < 1 || j > d) throw std::invalid_argument("require 1 <= j <= d");
}

}  // namespace

SubsetBasis gsb_dim1(int d, Tolerance tol) {
    if (d < 1) throw std::invalid_argument("gsb_dim1: d >= 1 required");
    if (d % 2 == 0)
        throw NotConstructibleError("gsb_dim1: no alternating unit row exists for even d");
    Mat rows(1, d + 1);
    const double s = 1.0 / std::sqrt(static_cast<double>(d + 1));
    for (int k = 0; k <= d; ++k) rows(0, k) = (k % 2 == 0) ? s : -s;
    return SubsetBasis::make(std::move(rows), BasisCert::Gsb, tol);
}

SubsetBasis gsb_polygon(int d, Tolerance tol) {
    if (d < 2) throw std::invalid_argument("gsb_polygon: d >= 2 required");
    const int m = d + 1;
    Mat rows(2, m);
    const double scale = std::sqrt(2.0 / m);
    for (int k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / m;
        rows(0, k) = scale * std::cos(theta);
        rows(1, k) = scale * std::sin(theta);
    }
    return SubsetBasis::make(std::move(rows), BasisCert::Gsb, tol);
}

SubsetBasis gsb_prism(int d, Tolerance tol) {
    if (d == 3)
        throw std::invalid_argument(
            "gsb_prism: the digon prism is degenerate; use the full-basis route for j = d = 3");
    if (d < 5 || d % 2 == 0)
        throw NotConstructibleError("gsb_prism: needs odd d >= 5 (ring size (d+1)/2 >= 3)");
    const int m = (d + 1) / 2;
    const double r = std::sqrt(2.0 / 3.0);
    const double h = std::sqrt(1.0 / 3.0);
    Mat verts(2 * m, 3);
    for (int k = 0; k < m; ++k) {
        const double theta = 2.0 * std::numbers::pi * k / m;
        verts.row(k) << r * std::cos(theta), r * std::sin(theta), h;
        verts.row(m + k) << r * std::cos(theta), r * std::sin(theta), -h;
    }
    return gsb_from_poly(PolytopeV{std::move(verts)}, tol);
}

PolytopeV poly_from_gsb(const SubsetBasis& b) {
    if (b.certified() != BasisCert::Gsb)
        throw std::invalid_argument("poly_from_gsb: basis must be a certified gsb");
    const double scale = std::sqrt(static_cast<double>(b.d() + 1) / b.j());
    return PolytopeV{scale * b.rows().transpose()};
}

SubsetBasis gsb_from_poly(const PolytopeV& c, Tolerance tol) {
    IsotropyReport rep = check_quasi_isotropic(c);
    if (!rep.quasi_isotropic(tol)) {
        std::ostringstream why;
        why << "gsb_from_poly: polytope is not quasi-isotropic:";
        if (rep.max_norm_deviation > tol.eps)
            why << " unit-norm residual " << rep.max_norm_deviation << ";";
        if (rep.vertex_sum_norm > tol.eps)
            why << " vertex-sum residual " << rep.vertex_sum_norm << ";";
        if (rep.max_moment_deviation > tol.eps)
            why << " second-moment residual " << rep.max_moment_deviation << ";";
        throw std::invalid_argument(why.str());
    }
    const int j = c.dim();
    const int m = c.count();
    const double scale = std::sqrt(static_cast<double>(j) / m);
    return SubsetBasis::make(scale * c.vertices.transpose(), BasisCert::Gsb, tol);
}

PolytopeV combine_additive(const PolytopeV& c1, const PolytopeV& c2, Tolerance tol) {
    if (c1.dim() != c2.dim())
        throw std::invalid_argument("combine_additive: polytopes live in different spaces");
    if (!check_quasi_isotropic(c1).quasi_isotropic(tol) ||
        !check_quasi_isotropic(c2).quasi_isotropic(tol))
        throw std::invalid_argument("combine_additive: inputs must be quasi-isotropic");
    Mat verts(c1.count() + c2.count(), c1.dim());
    verts.topRows(c1.count()) = c1.vertices;
    verts.bottomRows(c2.count()) = c2.vertices;
    return PolytopeV{std::move(verts)};
}

MultiplicativeCombination combine_multiplicative(const SubsetBasis& b1,
                                                 const SubsetBasis& b2, Tolerance tol) {
    if (b1.certified() != BasisCert::Gsb || b2.certified() != BasisCert::Gsb)
        throw std::invalid_argument("combine_multiplicative: both inputs must be certified gsb's");
    const int n1 = b1.d() + 1;
    const int n2 = b2.d() + 1;
    const int n = n1 * n2;
    const int k1 = b1.j();
    const int k2 = b2.j();

    // coordinate (i, jj) of the product space sits at jj*n1 + i
    Mat tiled(k1, n);
    for (int l = 0; l < k1; ++l)
        for (int jj = 0; jj < n2; ++jj)
            for (int i = 0; i < n1; ++i)
                tiled(l, jj * n1 + i) = b1.rows()(l, i) / std::sqrt(static_cast<double>(n2));

    Mat repeated(k2, n);
    for (int l = 0; l < k2; ++l)
        for (int jj = 0; jj < n2; ++jj)
            for (int i = 0; i < n1; ++i)
                repeated(l, jj * n1 + i) = b2.rows()(l, jj) / std::sqrt(static_cast<double>(n1));

    Mat products(k1 * k2, n);
    for (int l1 = 0; l1 < k1; ++l1)
        for (int l2 = 0; l2 < k2; ++l2)
            for (int jj = 0; jj < n2; ++jj)
                for (int i = 0; i < n1; ++i)
                    products(l1 * k2 + l2, jj * n1 + i) = b1.rows()(l1, i) * b2.rows()(l2, jj);

    return MultiplicativeCombination{
        SubsetBasis::make(std::move(tiled), BasisCert::Gsb, tol),
        SubsetBasis::make(std::move(repeated), BasisCert::Gsb, tol),
        SubsetBasis::make(std::move(products), BasisCert::Gsb, tol),
    };
}

SubsetBasis complement_gsb(const SubsetBasis& b, Tolerance tol) {
    if (b.certified() != BasisCert::Gsb)
        throw std::invalid_argument("complement_gsb: basis must be a certified gsb");
    if (b.j() >= b.d()) throw std::invalid_argument("complement_gsb: empty complement at j = d");
    std::vector<Vec> partial;
    partial.reserve(b.j());
    for (int l = 0; l < b.j(); ++l) partial.push_back(b.row(l));
    std::vector<Vec> full = gram_schmidt_extend(partial, b.d() + 1, /*zero_sum=*/true, tol);
    Mat rows(b.d() - b.j(), b.d() + 1);
    for (int l = b.j(); l < b.d(); ++l) rows.row(l - b.j()) = full[l];
    return SubsetBasis::make(std::move(rows), BasisCert::Gsb, tol);
}

SubsetBasis stack_bases(const SubsetBasis& a, const SubsetBasis& b, Tolerance tol) {
    if (a.d() != b.d()) throw std::invalid_argument("stack_bases: ambient dimension mismatch");
    Mat rows(a.j() + b.j(), a.d() + 1);
    rows.topRows(a.j()) = a.rows();
    rows.bottomRows(b.j()) = b.rows();
    BasisCert cert = (a.certified() == BasisCert::Gsb && b.certified() == BasisCert::Gsb)
                         ? BasisCert::Gsb
                         : BasisCert::VsbOnly;
    return SubsetBasis::make(std::move(rows), cert, tol);
}

SubsetBasis gsb_cross_polytope(int d, const SubsetBasis& inner, Tolerance tol) {
    if (d < 2) throw std::invalid_argument("gsb_cross_polytope: d >= 2 required");
    if (inner.d() != d - 1 || inner.j() != d - 1 || inner.certified() != BasisCert::Gsb)
        throw std::invalid_argument(
            "gsb_cross_polytope: inner must be a full (j = d-1) gsb in d-space");
    Mat rows(d, 2 * d);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int l = 0; l < d - 1; ++l) {
        rows.row(l).head(d) = inv_sqrt2 * inner.rows().row(l);
        rows.row(l).tail(d) = -inv_sqrt2 * inner.rows().row(l);
    }
    const double u = 1.0 / std::sqrt(2.0 * d);
    rows.row(d - 1).head(d).setConstant(u);
    rows.row(d - 1).tail(d).setConstant(-u);
    return SubsetBasis::make(std::move(rows), BasisCert::Gsb, tol);
}

namespace {

// First factorization d+1 = (d1+1)(d2+1), d1 increasing, with d1 | j and,
// when j/d1 is odd, j/d1 - 1 != d1/2. Such a pair always leads to an even
// part j2 with d2 != 2*j2, so the recursion below closes.
bool d2j_factorization(long long j, long long d, long long* d1_out, long long* d2_out) {
    const long long n = d + 1;
    for (long long f1 = 2; f1 <= n / 2; ++f1) {
        if (n % f1 != 0) continue;
        const long long d1 = f1 - 1;
        const long long d2 = n / f1 - 1;
        if (d2 < 1) continue;
        if (j % d1 != 0) continue;
        const long long q = j / d1;
        if (q % 2 == 1 && 2 * (q - 1) == d1) continue;
        *d1_out = d1;
        *d2_out = d2;
        return true;
    }
    return false;
}

Verdict verdict_for(int j, int d) {
    if (j == d || j == 2) return Verdict::Exists;
    if (d % 2 == 1) return Verdict::Exists;
    if (j % 2 == 0 && d != 2 * j) return Verdict::Exists;
    if ((d - j) % 2 == 0 && d != 2 * (d - j)) return Verdict::Exists;
    if (j % 2 == 0 && d == 2 * j) {
        long long d1, d2;
        return d2j_factorization(j, d, &d1, &d2) ? Verdict::Exists : Verdict::Unknown;
    }
    if (d % 2 == 0 && std::min(j, d - j) == 1) return Verdict::NotExists;
    return Verdict::ConjecturedNo;
}

void plan(int j, int d, Recipe& out) {
    if (j == 1) {
        out.push_back({"dim1", {d}});
    } else if (j == 2) {
        out.push_back({"polygon", {d}});
    } else if (j == 3 && d > 3) {
        out.push_back({"prism", {d}});
    } else if (j == d) {
        out.push_back({"full", {d}});
    } else if (d < 2 * j) {
        plan(d - j, d, out);
        out.push_back({"complement", {}});
    } else if (d > 2 * j) {
        // two quasi-isotropic parts with d = d_a + d_b + 1; fall back to the
        // shifted split when the straight one hits an open d = 2j case
        int da = j, db = d - j - 1;
        if (verdict_for(j, db) != Verdict::Exists) {
            da = j + 2;
            db = d - j - 3;
        }
        plan(j, da, out);
        plan(j, db, out);
        out.push_back({"additive", {}});
    } else {  // d == 2j, j even, admissible factorization exists
        long long d1 = 0, d2 = 0;
        d2j_factorization(j, d, &d1, &d2);
        const long long q = j / d1;
        const long long j2 = (q % 2 == 0) ? q : q - 1;
        plan(static_cast<int>(d1), static_cast<int>(d1), out);
        plan(static_cast<int>(j2), static_cast<int>(d2), out);
        out.push_back({q % 2 == 0 ? "mult_products" : "mult_products_tiled", {}});
    }
}

}  // namespace

GsbStatus exists_gsb(int j, int d) {
    require_range(j, d);
    GsbStatus status;
    status.verdict = verdict_for(j, d);
    switch (status.verdict) {
        case Verdict::Exists:
            plan(j, d, status.recipe);
            break;
        case Verdict::NotExists:
            status.reason = "one-dimensional projections of even-dimensional regular simplices "
                            "exceed the sqrt(j/(d+1)) bound, and complements inherit this";
            break;
        case Verdict::ConjecturedNo:
            status.reason = "";  // conjectured only; reason reserved for proven cases
            break;
        case Verdict::Unknown:
            break;
    }
    return status;
}

SubsetBasis replay_recipe(const Recipe& recipe, Tolerance tol) {
    std::vector<SubsetBasis> stack;
    auto pop = [&stack]() {
        if (stack.empty()) throw std::invalid_argument("replay_recipe: stack underflow");
        SubsetBasis b = std::move(stack.back());
        stack.pop_back();
        return b;
    };
    auto arg = [](const RecipeStep& s, size_t i) {
        if (s.args.size() <= i)
            throw std::invalid_argument("replay_recipe: missing argument for rule " + s.rule);
        return static_cast<int>(s.args[i]);
    };

    for (const RecipeStep& step : recipe) {
        if (step.rule == "dim1") {
            stack.push_back(gsb_dim1(arg(step, 0), tol));
        } else if (step.rule == "polygon") {
            stack.push_back(gsb_polygon(arg(step, 0), tol));
        } else if (step.rule == "prism") {
            stack.push_back(gsb_prism(arg(step, 0), tol));
        } else if (step.rule == "full") {
            const int d = arg(step, 0);
            std::vector<Vec> rows = gram_schmidt_extend({}, d + 1, /*zero_sum=*/true, tol);
            Mat m(d, d + 1);
            for (int l = 0; l < d; ++l) m.row(l) = rows[l];
            stack.push_back(SubsetBasis::make(std::move(m), BasisCert::Gsb, tol));
        } else if (step.rule == "complement") {
            SubsetBasis b = pop();
            stack.push_back(complement_gsb(b, tol));
        } else if (step.rule == "additive") {
            SubsetBasis b2 = pop();
            SubsetBasis b1 = pop();
            PolytopeV merged = combine_additive(poly_from_gsb(b1), poly_from_gsb(b2), tol);
            stack.push_back(gsb_from_poly(merged, tol));
        } else if (step.rule == "mult_products") {
            SubsetBasis b2 = pop();
            SubsetBasis b1 = pop();
            stack.push_back(combine_multiplicative(b1, b2, tol).products);
        } else if (step.rule == "mult_products_tiled") {
            SubsetBasis b2 = pop();
            SubsetBasis b1 = pop();
            MultiplicativeCombination mc = combine_multiplicative(b1, b2, tol);
            stack.push_back(stack_bases(mc.products, mc.tiled_first, tol));
        } else if (step.rule == "search") {
            // best frame of a recorded simplex search; deterministic replay
            SearchSpec s;
            s.body = SearchBody::Simplex;
            s.j = arg(step, 0);
            s.d = arg(step, 1);
            SearchResult r = grassmann_search(s, arg(step, 2), arg(step, 3),
                                              static_cast<std::uint64_t>(step.args.at(4)));
            stack.push_back(SubsetBasis::make(r.basis, BasisCert::VsbOnly, tol));
        } else {
            throw std::invalid_argument("replay_recipe: unknown rule " + step.rule);
        }
    }
    if (stack.size() != 1)
        throw std::invalid_argument("replay_recipe: recipe does not reduce to one basis");
    return std::move(stack.front());
}

SubsetBasis synthesize_gsb(int j, int d, Tolerance tol) {
    GsbStatus status = exists_gsb(j, d);
    if (status.verdict != Verdict::Exists)
        throw NotConstructibleError("synthesize_gsb(" + std::to_string(j) + ", " +
                                    std::to_string(d) + "): verdict " +
                                    to_string(status.verdict) +
                                    (status.reason.empty() ? "" : " (" + status.reason + ")"));
    return replay_recipe(status.recipe, tol);
}

}  // namespace jradii
