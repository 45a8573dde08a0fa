// hypl: coefficient tables, closed-form bounds and randomized bound
// verification for the starlike/convex classes attached to the hyperbola
// domain (zf'/f resp. 1 + zf''/f' subordinate to (1-z)^(-s)).

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <unistd.h>

#include "CLI11.hpp"

#include "hypl/output.hpp"

namespace {

using namespace hypl;

void print_error(const std::string& msg) {
    const bool color = isatty(fileno(stderr)) && std::getenv("NO_COLOR") == nullptr;
    if (color)
        std::cerr << "\033[31merror:\033[0m " << msg << "\n";
    else
        std::cerr << "error: " << msg << "\n";
}

struct CommonFlags {
    std::string format = "json";
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", flags.out, "Write output to a file instead of stdout");
}

int emit(const OutputRecord& rec, const CommonFlags& flags) {
    const std::string text = flags.format == "csv" ? to_csv(rec) : to_json(rec);
    if (flags.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(flags.out, std::ios::binary);
    if (!f) {
        print_error("cannot open output file '" + flags.out + "'");
        return 1;
    }
    f << text;
    return 0;
}

Kind parse_kind(const std::string& s) {
    return s == "starlike" ? Kind::starlike : Kind::convex;
}

FsTarget parse_target(const std::string& s) {
    if (s == "f") return FsTarget::f;
    if (s == "zf") return FsTarget::z_over_f;
    return FsTarget::inverse;
}

// ---- series ---------------------------------------------------------------

struct SeriesArgs {
    std::string fn;
    double s = 0.5;
    int n_index = 1;
    int order = 32;
    CommonFlags common;
};

int run_series(const SeriesArgs& a) {
    OutputRecord rec;
    rec.command = "series";
    rec.params = {{"fn", a.fn},
                  {"s", format_double(a.s)},
                  {"n_index", std::to_string(a.n_index)},
                  {"order", std::to_string(a.order)}};
    rec.columns = {"index", "re", "im"};

    auto push = [&](std::size_t idx, Complex c) {
        rec.rows.push_back({OutputRecord::Cell(std::int64_t(idx)),
                            OutputRecord::Cell(c.real()), OutputRecord::Cell(c.imag())});
    };
    if (a.fn == "q") {
        const TruncatedSeries q = q_series(a.s, std::size_t(a.order));
        for (std::size_t k = 0; k <= q.order(); ++k) push(k, q[k]);
    } else {
        const ClassParams params{a.s, a.n_index, std::size_t(a.order)};
        const ClassMember m = a.fn == "phi" ? phi_extremal(params) : k_extremal(params);
        for (std::size_t k = 1; k <= m.f.order(); ++k) push(k, m.f[k]);
    }
    return emit(rec, a.common);
}

// ---- bound ----------------------------------------------------------------

struct BoundArgs {
    std::string functional;
    std::string kind = "starlike";
    std::string target = "f";
    double s = 0.5;
    double lambda = 0.0;
    int n = 2;
    CommonFlags common;
};

int run_bound(const BoundArgs& a) {
    OutputRecord rec;
    rec.command = "bound";
    rec.params = {{"functional", a.functional}, {"kind", a.kind}, {"s", format_double(a.s)}};

    BoundResult b;
    std::vector<OutputRecord::Cell> cells{OutputRecord::Cell(a.s)};
    rec.columns = {"s"};
    if (a.functional == "coeff") {
        rec.params.emplace_back("n", std::to_string(a.n));
        b = coeff_bound(parse_kind(a.kind), a.s, a.n);
        rec.columns.push_back("n");
        cells.emplace_back(std::int64_t(a.n));
    } else if (a.functional == "fs") {
        rec.params.emplace_back("target", a.target);
        rec.params.emplace_back("lambda", format_double(a.lambda));
        b = fs_bound(parse_kind(a.kind), parse_target(a.target), a.s, a.lambda);
        rec.columns.push_back("lambda");
        cells.emplace_back(a.lambda);
    } else {
        b = hankel22_bound(parse_kind(a.kind), a.s);
    }
    for (const char* c : {"value", "regime", "sharp"}) rec.columns.emplace_back(c);
    cells.emplace_back(b.value);
    cells.emplace_back(std::string(regime_name(b.regime)));
    cells.emplace_back(b.sharp);
    rec.rows.push_back(std::move(cells));
    return emit(rec, a.common);
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string functional;
    std::string kind = "starlike";
    std::string target = "f";
    std::string s_grid;
    std::string lambda_grid;
    int n_max = 10;
    int samples = 1000;
    std::uint64_t seed = 0;
    double tol_attain = 1e-3;
    double tol_violate = 1e-9;
    CommonFlags common;
};

int run_verify(const VerifyArgs& a) {
    CampaignConfig cfg;
    cfg.functional = a.functional == "fs" ? Functional::fs
                   : a.functional == "hankel22" ? Functional::hankel22
                                                : Functional::coeff;
    cfg.kind = parse_kind(a.kind);
    cfg.target = parse_target(a.target);
    cfg.s_grid = parse_grid(a.s_grid);
    if (!a.lambda_grid.empty()) cfg.lambda_grid = parse_grid(a.lambda_grid);
    cfg.n_max = a.n_max;
    cfg.samples = a.samples;
    cfg.seed = a.seed;
    cfg.tol_attain = a.tol_attain;
    cfg.tol_violate = a.tol_violate;

    const CampaignReport report = run_campaign(cfg);
    const int rc = emit(make_verify_record(report), a.common);
    if (rc != 0) return rc;

    bool any_violated = false;
    for (const CampaignRow& row : report.rows) any_violated |= row.violated;
    if (any_violated) {
        print_error("bound violation detected; see the emitted rows");
        return 3;
    }
    return 0;
}

// ---- domain ---------------------------------------------------------------

struct DomainArgs {
    double s = 0.5;
    bool boundary = false;
    int count = 0;
    std::string probe;
    CommonFlags common;
};

bool parse_complex_pair(const std::string& text, Complex& out) {
    const char* p = text.c_str();
    const char* end = p + text.size();
    double re, im;
    auto r1 = std::from_chars(p, end, re);
    if (r1.ec != std::errc{} || r1.ptr == end || *r1.ptr != ',') return false;
    auto r2 = std::from_chars(r1.ptr + 1, end, im);
    if (r2.ec != std::errc{} || r2.ptr != end) return false;
    out = Complex(re, im);
    return true;
}

int run_domain(const DomainArgs& a) {
    OutputRecord rec;
    rec.command = "domain";
    rec.params = {{"s", format_double(a.s)}};

    if (a.boundary) {
        rec.params.emplace_back("mode", "boundary");
        rec.params.emplace_back("count", std::to_string(a.count));
        rec.columns = {"phi", "rho", "re", "im"};
        const double span = 0.995 * std::numbers::pi * a.s / 2.0;
        for (int k = 0; k < a.count; ++k) {
            const double phi =
                a.count == 1 ? 0.0 : span * (2.0 * double(k) / double(a.count - 1) - 1.0);
            const HyperbolaPoint pt = boundary_point(a.s, phi);
            rec.rows.push_back({OutputRecord::Cell(pt.phi), OutputRecord::Cell(pt.rho),
                                OutputRecord::Cell(pt.w.real()), OutputRecord::Cell(pt.w.imag())});
        }
    } else {
        Complex w;
        if (!parse_complex_pair(a.probe, w)) {
            print_error("--probe expects re,im");
            return 2;
        }
        rec.params.emplace_back("mode", "probe");
        rec.params.emplace_back("probe", a.probe);
        rec.columns = {"re", "im", "inside", "warning"};
        bool inside = false;
        std::string warning;
        try {
            inside = point_in_domain(w, a.s);
        } catch (const BranchCut&) {
            warning = "branch-cut";
        }
        rec.rows.push_back({OutputRecord::Cell(w.real()), OutputRecord::Cell(w.imag()),
                            OutputRecord::Cell(inside),
                            warning.empty() ? OutputRecord::Cell(std::monostate{})
                                            : OutputRecord::Cell(warning)});
    }
    return emit(rec, a.common);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coefficient tables and bound verification for hyperbola-domain classes"};
    app.require_subcommand(1);

    SeriesArgs series_args;
    CLI::App* series = app.add_subcommand("series", "Emit jet coefficients of q, phi or k");
    series->add_option("--fn", series_args.fn, "Which series")
        ->required()
        ->check(CLI::IsMember({"q", "phi", "k"}));
    series->add_option("--s", series_args.s, "Hyperbola parameter in (0,1]")->required();
    series->add_option("--n-index", series_args.n_index, "Rotation index n");
    series->add_option("--order", series_args.order, "Jet order")->check(CLI::PositiveNumber);
    add_common(series, series_args.common);

    BoundArgs bound_args;
    CLI::App* bound = app.add_subcommand("bound", "Evaluate a closed-form bound");
    bound->add_option("--functional", bound_args.functional, "Which bound")
        ->required()
        ->check(CLI::IsMember({"coeff", "fs", "hankel22"}));
    bound->add_option("--kind", bound_args.kind, "Class kind")
        ->check(CLI::IsMember({"starlike", "convex"}));
    bound->add_option("--target", bound_args.target, "Fekete-Szego target sequence")
        ->check(CLI::IsMember({"f", "zf", "inv"}));
    bound->add_option("--s", bound_args.s, "Hyperbola parameter")->required();
    bound->add_option("--lambda", bound_args.lambda, "Fekete-Szego lambda");
    bound->add_option("--n", bound_args.n, "Coefficient index");
    add_common(bound, bound_args.common);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Run a randomized verification campaign");
    verify->add_option("--functional", verify_args.functional, "Which functional")
        ->required()
        ->check(CLI::IsMember({"fs", "hankel22", "coeff"}));
    verify->add_option("--kind", verify_args.kind, "Class kind")
        ->check(CLI::IsMember({"starlike", "convex"}));
    verify->add_option("--target", verify_args.target, "Fekete-Szego target sequence")
        ->check(CLI::IsMember({"f", "zf", "inv"}));
    verify->add_option("--s-grid", verify_args.s_grid, "s grid as a:b:step")->required();
    verify->add_option("--lambda-grid", verify_args.lambda_grid, "lambda grid as a:b:step");
    verify->add_option("--n-max", verify_args.n_max, "Top coefficient index (coeff)");
    verify->add_option("--samples", verify_args.samples, "Random samples per grid point")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_args.seed, "RNG seed");
    verify->add_option("--tol-attain", verify_args.tol_attain, "Attainment tolerance");
    verify->add_option("--tol-violate", verify_args.tol_violate, "Violation tolerance");
    add_common(verify, verify_args.common);

    DomainArgs domain_args;
    CLI::App* domain = app.add_subcommand("domain", "Boundary table or membership probe");
    domain->add_option("--s", domain_args.s, "Hyperbola parameter")->required();
    CLI::Option* boundary =
        domain->add_flag("--boundary", domain_args.boundary, "Emit boundary samples");
    domain->add_option("--count", domain_args.count, "Boundary sample count")
        ->check(CLI::PositiveNumber);
    domain->add_option("--probe", domain_args.probe, "Probe point as re,im")->excludes(boundary);

    add_common(domain, domain_args.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (series->parsed()) return run_series(series_args);
        if (bound->parsed()) return run_bound(bound_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (domain->parsed()) {
            if (domain_args.boundary && domain_args.count < 1) {
                print_error("--boundary requires --count");
                return 2;
            }
            if (!domain_args.boundary && domain_args.probe.empty()) {
                print_error("domain needs either --boundary or --probe");
                return 2;
            }
            return run_domain(domain_args);
        }
    } catch (const hypl::Error& e) {
        print_error(e.what());
        return 1;
    }
    return 0;
}
