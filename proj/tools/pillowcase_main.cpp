// pillowcase: traceless SU(2) character-variety data for 2-bridge and torus
// knots -- restriction curves in the pillowcase, perturbed circles, and the
// generator counts of the singular instanton chain complex.

#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>

#include "pillowcase/report.hpp"

namespace {

using namespace pillowcase;

void write_svg_file(const std::string& path, const RenderSpec& spec) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open SVG output file: " + path);
    render_svg(spec, out);
}

int run_twobridge(long long p, long long q, double epsilon, const std::string& mode,
                  const std::string& format, const std::string& svg, std::size_t samples) {
    const TwoBridgeKnot knot(p, q);
    PerturbationData pert;
    pert.epsilon = epsilon;
    const auto m = mode == "unreduced" ? GeneratorReport::Mode::unreduced
                                       : GeneratorReport::Mode::reduced;
    const PillowPath curve = restriction_curve(knot, samples);
    GeneratorReport rep = count_generators(curve, pert, m);
    rep.knot = KnotSpec::two_bridge(p, q);

    if (format == "json")
        write_report_json(std::cout, rep);
    else
        write_report_tsv(std::cout, rep);

    if (!svg.empty()) {
        const std::vector<LabeledPath> restriction = {{curve, false}};
        write_svg_file(svg, diagram(rep, restriction, pert));
    }
    return 0;
}

int run_torus(long long p, long long q, long long r, long long s, bool have_rs, double epsilon,
              int grid, bool trace, const std::string& format, const std::string& svg) {
    const TorusKnot knot = have_rs ? TorusKnot(p, q, r, s) : TorusKnot(p, q);
    PerturbationData pert;
    pert.epsilon = epsilon;

    std::vector<LabeledPath> paths;
    std::vector<ZeroSetComponent> comps;
    GeneratorReport rep = summarize_torus(knot, pert, &paths, &comps, grid);

    if (format == "json") {
        write_report_json(std::cout, rep, trace ? &comps : nullptr);
    } else {
        write_report_tsv(std::cout, rep);
        if (trace) write_trace_tsv(std::cout, comps, paths);
    }

    if (!svg.empty()) write_svg_file(svg, diagram(rep, paths, pert));
    return 0;
}

int run_table(const std::string& family, long long max_pq, const std::string& format) {
    if (family == "torus") {
        std::vector<TableRow> rows;
        for (long long p = 2; p <= max_pq; ++p)
            for (long long q = p + 1; q <= max_pq; ++q) {
                if (std::gcd(p, q) != 1) continue;
                rows.push_back(table_row(TorusKnot(p, q)));
            }
        if (format == "json")
            write_table_json(std::cout, rows);
        else
            write_table_tsv(std::cout, rows);
        return 0;
    }
    // 2-bridge family: exact slope data and the generator count |p|
    struct BridgeRow {
        long long p, q, m, n;
    };
    std::vector<BridgeRow> rows;
    for (long long p = 3; p <= max_pq; p += 2)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const LineSlope slope = pillowcase_line(TwoBridgeKnot(p, q));
            rows.push_back({p, q, slope.m, slope.n});
        }
    if (format == "json") {
        std::cout << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            std::cout << "  {\"p\": " << r.p << ", \"q\": " << r.q << ", \"gamma_slope\": " << r.m
                      << ", \"theta_slope\": " << r.n << ", \"det\": " << std::abs(r.p)
                      << ", \"generators\": " << std::abs(r.p) << "}"
                      << (i + 1 < rows.size() ? ",\n" : "\n");
        }
        std::cout << "]\n";
        return 0;
    }
    std::cout << "p\tq\tgamma_slope\ttheta_slope\tdet\tgenerators\n";
    for (const auto& r : rows)
        std::cout << r.p << "\t" << r.q << "\t" << r.m << "\t" << r.n << "\t" << std::abs(r.p)
                  << "\t" << std::abs(r.p) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pillowcase: traceless character variety data for 2-bridge and torus knots"};
    app.require_subcommand(1);

    // twobridge
    auto* tb = app.add_subcommand("twobridge", "2-bridge knot K(p/q) pipeline");
    long long tb_p = 0, tb_q = 0;
    double tb_eps = 0.1;
    std::string tb_mode = "reduced", tb_format = "tsv", tb_svg;
    std::size_t tb_samples = 2048;
    tb->add_option("-p", tb_p, "numerator p (odd)")->required();
    tb->add_option("-q", tb_q, "denominator q")->required();
    tb->add_option("--epsilon", tb_eps, "perturbation size")->capture_default_str();
    tb->add_option("--mode", tb_mode, "reduced|unreduced")
        ->check(CLI::IsMember({"reduced", "unreduced"}))
        ->capture_default_str();
    tb->add_option("--format", tb_format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    tb->add_option("--svg", tb_svg, "write a pillowcase diagram to this path");
    tb->add_option("--samples", tb_samples, "minimum curve samples")->capture_default_str();

    // torus
    auto* to = app.add_subcommand("torus", "torus knot T(p,q) pipeline");
    long long to_p = 0, to_q = 0, to_r = 0, to_s = 0;
    double to_eps = 0.1;
    int to_grid = 512;
    bool to_trace = false;
    std::string to_format = "tsv", to_svg;
    to->add_option("-p", to_p, "p >= 2")->required();
    to->add_option("-q", to_q, "q >= 2, coprime to p")->required();
    auto* opt_r = to->add_option("--r", to_r, "override r (pr+qs=1)");
    auto* opt_s = to->add_option("--s", to_s, "override s (pr+qs=1)");
    opt_r->needs(opt_s);
    opt_s->needs(opt_r);
    to->add_option("--epsilon", to_eps, "perturbation size")->capture_default_str();
    to->add_option("--grid", to_grid, "marching-squares resolution")->capture_default_str();
    to->add_flag("--trace", to_trace, "include the traced zero set in the output");
    to->add_option("--format", to_format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();
    to->add_option("--svg", to_svg, "write a pillowcase diagram to this path");

    // table
    auto* ta = app.add_subcommand("table", "batch invariant table");
    std::string ta_family = "torus", ta_format = "tsv";
    long long ta_max = 10;
    ta->add_option("--family", ta_family, "torus|twobridge")
        ->check(CLI::IsMember({"torus", "twobridge"}))
        ->capture_default_str();
    ta->add_option("--max-pq", ta_max, "upper bound for p and q")->capture_default_str();
    ta->add_option("--format", ta_format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tb->parsed())
            return run_twobridge(tb_p, tb_q, tb_eps, tb_mode, tb_format, tb_svg, tb_samples);
        if (to->parsed())
            return run_torus(to_p, to_q, to_r, to_s, opt_r->count() > 0, to_eps, to_grid, to_trace,
                             to_format, to_svg);
        if (ta->parsed()) return run_table(ta_family, ta_max, ta_format);
    } catch (const pillowcase::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
