#include "jradii/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jradii {

namespace {

struct Problem {
    Mat vertices;   // one row per vertex of the body
    bool zero_sum;  // rows of the frame constrained to the zero-sum hyperplane
    int ambient;
};

Problem build_problem(const SearchSpec& spec) {
    if (spec.j < 1 || spec.j > spec.d)
        throw std::invalid_argument("grassmann_search: require 1 <= j <= d");
    if (spec.d > 15) throw std::invalid_argument("grassmann_search: d <= 15 for practical runtimes");

    Problem prob;
    switch (spec.body) {
        case SearchBody::Simplex: {
            prob.ambient = spec.d + 1;
            prob.zero_sum = true;
            prob.vertices = Mat::Identity(prob.ambient, prob.ambient);
            return prob;
        }
        case SearchBody::Box: {
            if (static_cast<int>(spec.half_widths.size()) != spec.d)
                throw std::invalid_argument("grassmann_search: box needs d half-widths");
            prob.ambient = spec.d;
            prob.zero_sum = false;
            const std::uint64_t n = 1ull << spec.d;
            prob.vertices.resize(static_cast<Eigen::Index>(n), spec.d);
            for (std::uint64_t v = 0; v < n; ++v)
                for (int k = 0; k < spec.d; ++k)
                    prob.vertices(static_cast<Eigen::Index>(v), k) =
                        ((v >> k) & 1ull) ? spec.half_widths[k] : -spec.half_widths[k];
            return prob;
        }
        case SearchBody::Cross: {
            if (static_cast<int>(spec.half_widths.size()) != spec.d)
                throw std::invalid_argument("grassmann_search: cross needs d semi-axes");
            prob.ambient = spec.d;
            prob.zero_sum = false;
            prob.vertices = Mat::Zero(2 * spec.d, spec.d);
            for (int k = 0; k < spec.d; ++k) {
                prob.vertices(2 * k, k) = spec.half_widths[k];
                prob.vertices(2 * k + 1, k) = -spec.half_widths[k];
            }
            return prob;
        }
    }
    throw std::invalid_argument("grassmann_search: unknown body");
}

double projected_radius(const Problem& prob, const Mat& frame, std::uint64_t meb_seed) {
    if (prob.zero_sum) {
        // simplex: genuine minimal enclosing ball of the projected vertices
        std::vector<Vec> coords;
        coords.reserve(prob.vertices.rows());
        for (Eigen::Index k = 0; k < prob.vertices.rows(); ++k)
            coords.push_back(frame * prob.vertices.row(k).transpose());
        return min_enclosing_ball(coords, meb_seed).radius;
    }
    // 0-symmetric bodies: the enclosing ball is centered at the origin
    return (frame * prob.vertices.transpose()).colwise().norm().maxCoeff();
}

Mat constrain(const Problem& prob, Mat frame) {
    if (prob.zero_sum)
        for (Eigen::Index l = 0; l < frame.rows(); ++l)
            frame.row(l) = zero_sum_project(frame.row(l).transpose());
    return orthonormalize_rows(std::move(frame));
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

SearchResult grassmann_search(const SearchSpec& spec, int restarts, int iterations,
                              std::uint64_t seed) {
    if (restarts < 1 || iterations < 0)
        throw std::invalid_argument("grassmann_search: restarts >= 1, iterations >= 0");
    Problem prob = build_problem(spec);

    SearchResult best;
    best.radius = std::numeric_limits<double>::infinity();

    for (int r = 0; r < restarts; ++r) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
        std::normal_distribution<double> gauss(0.0, 1.0);

        Mat frame = random_frame(spec.j, prob.ambient, prob.zero_sum, rng);
        double radius = projected_radius(prob, frame, seed);
        double step = 0.5;

        for (int it = 0; it < iterations; ++it) {
            Mat cand = frame;
            for (Eigen::Index l = 0; l < cand.rows(); ++l)
                for (Eigen::Index k = 0; k < cand.cols(); ++k) cand(l, k) += step * gauss(rng);
            try {
                cand = constrain(prob, std::move(cand));
            } catch (const std::invalid_argument&) {
                step = std::max(step * 0.5, 1e-9);
                continue;
            }
            const double cand_radius = projected_radius(prob, cand, seed);
            if (cand_radius < radius) {
                frame = std::move(cand);
                radius = cand_radius;
                step = std::min(step * 1.25, 0.8);
            } else {
                step = std::max(step * 0.96, 1e-9);
            }
        }
        if (radius < best.radius) {
            best.radius = radius;
            best.basis = frame;
        }
    }
    return best;
}

}  // namespace jradii
