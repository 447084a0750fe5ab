#include "jradii/cli.hpp"

#include "jradii/certificate.hpp"
#include "jradii/gsb.hpp"
#include "jradii/radii.hpp"
#include "jradii/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifdef __unix__
#include <unistd.h>
#endif

namespace jradii {

namespace {

std::string fixed12(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(12) << v;
    return os.str();
}

std::string cell_for(Verdict v) {
    switch (v) {
        case Verdict::Exists: return "+";
        case Verdict::NotExists: return "-";
        case Verdict::ConjecturedNo: return "(-)";
        case Verdict::Unknown: return "?";
    }
    return "?";
}

const char* color_for(Verdict v) {
    switch (v) {
        case Verdict::Exists: return "\033[32m";
        case Verdict::NotExists: return "\033[31m";
        case Verdict::ConjecturedNo: return "\033[33m";
        case Verdict::Unknown: return "\033[36m";
    }
    return "";
}

std::vector<BigRational> parse_half_widths(const std::string& csv) {
    std::vector<BigRational> out;
    std::stringstream ss(csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw std::invalid_argument("--a: empty entry");
        auto slash = token.find('/');
        try {
            if (slash != std::string::npos) {
                BigInt p(token.substr(0, slash));
                BigInt q(token.substr(slash + 1));
                out.emplace_back(p, q);
            } else if (token.find_first_of(".eE") != std::string::npos) {
                size_t used = 0;
                double v = std::stod(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                out.emplace_back(v);
            } else {
                out.emplace_back(BigInt(token));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("--a: cannot parse half-width '" + token + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument("--a: no half-widths given");
    return out;
}

std::string body_label(const std::string& shape, int j, int d, const std::string& a_csv) {
    std::ostringstream os;
    if (shape == "simplex") {
        os << "T^" << d;
    } else if (shape == "cube") {
        os << "B^" << d;
    } else if (shape == "box") {
        if (a_csv.empty()) os << "B^" << d;
        else os << "B(" << a_csv << ")";
    } else {
        if (a_csv.empty()) os << "X^" << d;
        else os << "X(" << a_csv << ")";
    }
    (void)j;
    return os.str();
}

void print_radius(std::ostream& out, const std::string& which, const std::string& symbol, int j,
                  const std::string& body, const RadiusResult& r) {
    const bool is_exact = r.kind == RadiusKind::Exact;
    out << which << " " << symbol << "_" << j << "(" << body << ")" << (is_exact ? " = " : " >= ")
        << r.value.str() << " = " << fixed12(r.value.value()) << "  [" << to_string(r.kind)
        << "]  " << r.source << "\n";
}

std::string recipe_summary(const Recipe& recipe) {
    std::ostringstream os;
    for (size_t i = 0; i < recipe.size(); ++i) {
        if (i) os << " ";
        os << recipe[i].rule;
        if (!recipe[i].args.empty()) {
            os << "(";
            for (size_t k = 0; k < recipe[i].args.size(); ++k)
                os << (k ? "," : "") << recipe[i].args[k];
            os << ")";
        }
    }
    return os.str();
}

struct RadiiArgs {
    std::string shape;
    int j = 0;
    int d = 0;
    std::string a_csv;
};

int run_radii(const RadiiArgs& args, std::ostream& out) {
    const std::string& shape = args.shape;
    if (shape == "simplex" || shape == "cube") {
        if (!args.a_csv.empty())
            throw std::invalid_argument("--a applies only to box and cross shapes");
        if (args.d < 1) throw std::invalid_argument("--d is required for " + shape);
    }
    if (shape == "simplex") {
        print_radius(out, "outer", "R", args.j, body_label(shape, args.j, args.d, ""),
                     simplex_outer_radius(args.j, args.d));
        print_radius(out, "inner", "r", args.j, body_label(shape, args.j, args.d, ""),
                     simplex_inner_radius(args.j, args.d));
        return 0;
    }
    BoxSpec spec = args.a_csv.empty() ? BoxSpec::unit(args.d)
                                      : BoxSpec::from_rational_half_widths(
                                            parse_half_widths(args.a_csv));
    if (args.d > 0 && args.d != spec.dim())
        throw std::invalid_argument("--d disagrees with the number of half-widths");
    const std::string body = body_label(shape, args.j, spec.dim(), args.a_csv);
    if (shape == "cube" || shape == "box") {
        print_radius(out, "outer", "R", args.j, body, box_outer_radius(spec, args.j));
        print_radius(out, "inner", "r", args.j, body, box_inner_radius(spec, args.j));
    } else {  // cross
        print_radius(out, "outer", "R", args.j, body, cross_outer_radius(spec, args.j));
        print_radius(out, "inner", "r", args.j, body, cross_inner_radius(spec, args.j));
    }
    return 0;
}

int run_gsb(int j, int d, const std::string& out_path, double eps, std::ostream& out) {
    Tolerance tol(eps);
    GsbStatus status = exists_gsb(j, d);
    if (status.verdict != Verdict::Exists) {
        out << "no good subset basis for (j=" << j << ", d=" << d
            << "): verdict " << to_string(status.verdict);
        if (status.verdict == Verdict::ConjecturedNo)
            out << " (nonexistence unproven but expected)";
        else if (status.verdict == Verdict::Unknown)
            out << " (existence open)";
        if (!status.reason.empty()) out << " -- " << status.reason;
        out << "\n";
        return 1;
    }
    SubsetBasis basis = replay_recipe(status.recipe, tol);
    ProjectionResult proj = project_simplex(basis, tol);
    Certificate cert = make_certificate(basis, status.recipe);
    save_certificate(cert, out_path);
    const SqrtRational target = simplex_lower_bound(j, d);
    out << "good subset basis (j=" << j << ", d=" << d << ")\n"
        << "recipe: " << recipe_summary(status.recipe) << "\n"
        << "projected circumradius = " << fixed12(proj.circumradius) << "  (target "
        << target.str() << " = " << fixed12(target.value()) << ")\n"
        << "certificate: " << out_path << "\n";
    return 0;
}

int run_verify(const std::string& cert_path, double eps, std::ostream& out) {
    Tolerance tol(eps);
    Certificate cert = load_certificate(cert_path);
    BasisReport rep = check_gsb(cert.basis);
    auto line = [&](const char* name, double v) {
        out << name << " = " << std::scientific << std::setprecision(3) << v
            << (v <= tol.eps ? "  (pass)" : "  (FAIL)") << std::defaultfloat << "\n";
    };
    out << "certificate (j=" << cert.j << ", d=" << cert.d << "), schema_version "
        << cert.schema_version << "\n";
    line("orthonormality defect   ", rep.orthonormality_defect);
    line("row-sum residual        ", rep.max_row_sum);
    line("column square-sum dev   ", rep.max_column_square_deviation);

    bool ok = rep.gsb_pass(tol);
    if (rep.vsb_pass(tol)) {
        SubsetBasis basis = SubsetBasis::make(cert.basis, BasisCert::VsbOnly, tol);
        ProjectionResult proj = project_simplex(basis, tol);
        const double target = simplex_lower_bound(cert.j, cert.d).value();
        const double gap = std::abs(proj.circumradius - target);
        out << "projected circumradius   = " << fixed12(proj.circumradius) << ", |gap to "
            << simplex_lower_bound(cert.j, cert.d).str() << "| = " << std::scientific
            << std::setprecision(3) << gap << std::defaultfloat << "\n";
        ok = ok && gap <= 1e-9;
    } else {
        ok = false;
    }
    out << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
}

struct SearchArgs {
    std::string shape;
    int j = 0;
    int d = 0;
    std::string a_csv;
    int restarts = 50;
    int iterations = 5000;
    std::uint64_t seed = 0;
    std::string out_path;
    double eps = 1e-9;
};

int run_search(const SearchArgs& args, std::ostream& out) {
    SearchSpec spec;
    spec.j = args.j;
    RadiusResult reference;
    if (args.shape == "simplex") {
        spec.body = SearchBody::Simplex;
        spec.d = args.d;
        reference = simplex_outer_radius(args.j, args.d);
    } else {
        spec.body = args.shape == "cross" ? SearchBody::Cross : SearchBody::Box;
        BoxSpec box = args.a_csv.empty() ? BoxSpec::unit(args.d)
                                         : BoxSpec::from_rational_half_widths(
                                               parse_half_widths(args.a_csv));
        if (args.d > 0 && args.d != box.dim())
            throw std::invalid_argument("--d disagrees with the number of half-widths");
        spec.d = box.dim();
        spec.half_widths = box.half_widths();
        reference = spec.body == SearchBody::Cross ? cross_outer_radius(box, args.j)
                                                   : box_outer_radius(box, args.j);
        if (!args.out_path.empty())
            throw std::invalid_argument("--out: certificates only apply to simplex searches");
    }

    SearchResult res = grassmann_search(spec, args.restarts, args.iterations, args.seed);
    out << "best radius = " << fixed12(res.radius) << "\n";
    const bool exact = reference.kind == RadiusKind::Exact;
    out << (exact ? "reference   = " : "reference  >= ") << fixed12(reference.value.value())
        << "  " << reference.value.str() << "  [" << to_string(reference.kind) << "]\n"
        << "gap to reference = " << std::showpos << std::fixed << std::setprecision(6)
        << res.radius - reference.value.value() << std::noshowpos << "\n";
    if (spec.body == SearchBody::Simplex) {
        const SqrtRational bound = simplex_lower_bound(args.j, args.d);
        out << "lower bound = " << fixed12(bound.value()) << "  " << bound.str()
            << ", excess = " << std::showpos << std::fixed << std::setprecision(6)
            << res.radius - bound.value() << std::noshowpos << "\n";
        if (!args.out_path.empty()) {
            SubsetBasis basis = SubsetBasis::make(res.basis, BasisCert::VsbOnly, Tolerance(args.eps));
            Recipe recipe{{"search",
                           {args.j, args.d, args.restarts, args.iterations,
                            static_cast<long long>(args.seed)}}};
            save_certificate(make_certificate(basis, recipe), args.out_path);
            out << "certificate: " << args.out_path << "\n";
        }
    }
    return 0;
}

}  // namespace

std::string render_table(int max_d, bool color) {
    if (max_d < 2 || max_d > 200)
        throw std::invalid_argument("table: require 2 <= max-d <= 200");
    std::ostringstream os;
    os << " j\\d |";
    for (int d = 1; d <= max_d; ++d) os << std::setw(4) << d;
    os << "\n-----+" << std::string(4 * max_d, '-') << "\n";
    for (int j = 1; j <= max_d; ++j) {
        os << std::setw(4) << j << " |";
        for (int d = 1; d <= max_d; ++d) {
            if (j > d) {
                os << "    ";
                continue;
            }
            Verdict v = exists_gsb(j, d).verdict;
            std::string cell = cell_for(v);
            os << std::string(4 - cell.size(), ' ');
            if (color) os << color_for(v) << cell << "\033[0m";
            else os << cell;
        }
        os << "\n";
    }
    os << "\n   + exists   - does not exist   (-) conjectured no   ? open\n";
    return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"inner and outer j-radii of regular simplices, boxes and cross-polytopes"};
    app.require_subcommand(1);

    RadiiArgs radii_args;
    auto* radii_cmd = app.add_subcommand("radii", "closed-form inner and outer j-radii");
    radii_cmd->add_option("--shape", radii_args.shape, "simplex|cube|box|cross")
        ->required()
        ->check(CLI::IsMember({"simplex", "cube", "box", "cross"}));
    radii_cmd->add_option("--j", radii_args.j, "projection dimension")->required();
    radii_cmd->add_option("--d", radii_args.d, "body dimension");
    radii_cmd->add_option("--a", radii_args.a_csv, "comma-separated half-widths (box/cross)");

    int max_d = 16;
    auto* table_cmd = app.add_subcommand("table", "existence grid of good subset bases");
    table_cmd->add_option("--max-d", max_d, "largest d column")->check(CLI::Range(2, 200));

    int gsb_j = 0, gsb_d = 0;
    std::string gsb_out;
    double gsb_eps = 1e-9;
    auto* gsb_cmd = app.add_subcommand("gsb", "synthesize a good subset basis certificate");
    gsb_cmd->add_option("--j", gsb_j, "basis size")->required();
    gsb_cmd->add_option("--d", gsb_d, "simplex dimension")->required();
    gsb_cmd->add_option("--out", gsb_out, "certificate output path")->required();
    gsb_cmd->add_option("--eps", gsb_eps, "residual tolerance");

    std::string verify_path;
    double verify_eps = 1e-9;
    auto* verify_cmd = app.add_subcommand("verify", "re-check a stored certificate");
    verify_cmd->add_option("cert", verify_path, "certificate path")->required();
    verify_cmd->add_option("--eps", verify_eps, "residual tolerance");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "stochastic projection search");
    search_cmd->add_option("--shape", search_args.shape, "simplex|cube|box|cross")
        ->required()
        ->check(CLI::IsMember({"simplex", "cube", "box", "cross"}));
    search_cmd->add_option("--j", search_args.j, "projection dimension")->required();
    search_cmd->add_option("--d", search_args.d, "body dimension");
    search_cmd->add_option("--a", search_args.a_csv, "comma-separated half-widths");
    search_cmd->add_option("--restarts", search_args.restarts, "random restarts");
    search_cmd->add_option("--iterations", search_args.iterations, "descent steps per restart");
    search_cmd->add_option("--seed", search_args.seed, "RNG seed");
    search_cmd->add_option("--out", search_args.out_path, "write best frame as certificate");
    search_cmd->add_option("--eps", search_args.eps, "residual tolerance");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*radii_cmd) return run_radii(radii_args, out);
        if (*table_cmd) {
            bool color = false;
#ifdef __unix__
            color = (&out == &std::cout) && isatty(STDOUT_FILENO) != 0 &&
                    std::getenv("NO_COLOR") == nullptr;
#endif
            out << render_table(max_d, color);
            return 0;
        }
        if (*gsb_cmd) return run_gsb(gsb_j, gsb_d, gsb_out, gsb_eps, out);
        if (*verify_cmd) return run_verify(verify_path, verify_eps, out);
        if (*search_cmd) return run_search(search_args, out);
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return 3;
    } catch (const CertificateFormatError& e) {
        err << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace jradii
