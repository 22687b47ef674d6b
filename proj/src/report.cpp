#include "pillowcase/report.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

namespace pillowcase {

namespace {

std::string fixed9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

const char* mode_name(GeneratorReport::Mode m) {
    return m == GeneratorReport::Mode::reduced ? "reduced" : "unreduced";
}

void tsv_point_row(std::ostream& os, const GeneratorPoint& g) {
    os << g.label << "\t" << fixed9(g.location.gamma) << "\t" << fixed9(g.location.theta) << "\t"
       << fixed9(g.t) << "\t" << fixed9(g.s) << "\t" << g.circle_branch << "\t"
       << (g.on_z1_stratum ? 1 : 0) << "\t" << fixed9(g.margin) << "\n";
}

nlohmann::json point_json(const GeneratorPoint& g) {
    return {{"label", g.label},          {"gamma", g.location.gamma},
            {"theta", g.location.theta}, {"t", g.t},
            {"s", g.s},                  {"branch", g.circle_branch},
            {"z1_stratum", g.on_z1_stratum}, {"margin", g.margin}};
}

}  // namespace

void write_report_tsv(std::ostream& os, const GeneratorReport& rep) {
    os << "# knot " << rep.knot.name() << " mode " << mode_name(rep.mode) << " epsilon "
       << fixed9(rep.epsilon) << " total " << rep.total() << "\n";
    if (rep.graded) os << "# graded " << rep.graded->to_string() << "\n";
    if (!rep.regular) os << "# warning: irregular intersection pattern\n";
    os << "label\tgamma\ttheta\tpath_t\tcircle_s\tbranch\tz1\tmargin\n";
    for (const auto& g : rep.alpha) tsv_point_row(os, g);
    for (const auto& grp : rep.pairs)
        for (const auto& g : grp) tsv_point_row(os, g);
}

void write_report_json(std::ostream& os, const GeneratorReport& rep,
                       const std::vector<ZeroSetComponent>* trace) {
    nlohmann::json j;
    j["knot"] = rep.knot.name();
    j["family"] = rep.knot.family == KnotSpec::Family::two_bridge ? "twobridge" : "torus";
    j["p"] = rep.knot.p;
    j["q"] = rep.knot.q;
    if (rep.knot.r) j["r"] = *rep.knot.r;
    if (rep.knot.s) j["s"] = *rep.knot.s;
    j["mode"] = mode_name(rep.mode);
    j["epsilon"] = rep.epsilon;
    j["total"] = rep.total();
    j["regular"] = rep.regular;
    j["z1_crossings"] = rep.z1_crossings;
    if (rep.graded) j["graded"] = rep.graded->to_string();
    j["alpha"] = nlohmann::json::array();
    for (const auto& g : rep.alpha) j["alpha"].push_back(point_json(g));
    j["pairs"] = nlohmann::json::array();
    for (const auto& grp : rep.pairs) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& g : grp) arr.push_back(point_json(g));
        j["pairs"].push_back(arr);
    }
    j["unperturbed"] = nlohmann::json::array();
    for (const auto& u : rep.unperturbed) j["unperturbed"].push_back({u.gamma, u.theta});
    if (trace) {
        nlohmann::json comps = nlohmann::json::array();
        for (const auto& comp : *trace) {
            nlohmann::json c;
            c["kind"] = comp.kind == ZeroSetComponent::Kind::arc ? "arc" : "loop";
            c["points"] = nlohmann::json::array();
            for (const auto& pt : comp.points) {
                const char* cls = pt.cls == PointClass::z0
                                      ? "z0"
                                      : (pt.cls == PointClass::z1 ? "z1" : "outside");
                c["points"].push_back({{"x", pt.x}, {"y", pt.y}, {"class", cls}, {"tau", pt.tau_value}});
            }
            c["junctions"] = nlohmann::json::array();
            for (const auto& jn : comp.junctions) c["junctions"].push_back({jn[0], jn[1]});
            comps.push_back(c);
        }
        j["trace"] = comps;
    }
    os << j.dump(2) << "\n";
}

void write_trace_tsv(std::ostream& os, const std::vector<ZeroSetComponent>& comps,
                     const std::vector<LabeledPath>& images) {
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& comp = comps[i];
        os << "# zero-set component " << (i + 1) << " "
           << (comp.kind == ZeroSetComponent::Kind::arc ? "arc" : "loop") << " junctions "
           << comp.junctions.size() << "\n";
        os << "x\ty\tclass\ttau\n";
        for (const auto& pt : comp.points) {
            const char* cls =
                pt.cls == PointClass::z0 ? "z0" : (pt.cls == PointClass::z1 ? "z1" : "outside");
            os << fixed9(pt.x) << "\t" << fixed9(pt.y) << "\t" << cls << "\t"
               << fixed9(pt.tau_value) << "\n";
        }
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        os << "# image path " << (i + 1) << (images[i].z1_stratum ? " z1-fiber" : "") << "\n";
        os << "t\tgamma\ttheta\n";
        write_path(os, images[i].path);
    }
}

void write_table_tsv(std::ostream& os, const std::vector<TableRow>& rows) {
    os << "p\tq\tsigma\tabs_delta\tci_total\tci_graded\tkh\tinat_lo\tinat_hi\n";
    for (const auto& r : rows) {
        os << r.p << "\t" << r.q << "\t" << r.sigma << "\t" << r.abs_delta << "\t" << r.ci_total
           << "\t" << (r.ci_graded ? r.ci_graded->to_string() : "-") << "\t";
        if (r.kh) {
            const auto& t = *r.kh;
            os << "(" << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ")";
        } else {
            os << "-";
        }
        os << "\t" << r.inat_lo << "\t" << r.inat_hi << "\n";
    }
}

void write_table_json(std::ostream& os, const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["p"] = r.p;
        j["q"] = r.q;
        j["sigma"] = r.sigma;
        j["abs_delta"] = r.abs_delta;
        j["ci_total"] = r.ci_total;
        if (r.ci_graded) j["ci_graded"] = r.ci_graded->to_string();
        if (r.kh) j["kh"] = *r.kh;
        j["inat_lo"] = r.inat_lo;
        j["inat_hi"] = r.inat_hi;
        j["zero_differential"] = r.zero_differential;
        j["hypothesis_alpha_shift_mod4"] = hypothesis_alpha_shift_mod4(TorusKnot(r.p, r.q));
        arr.push_back(j);
    }
    os << arr.dump(2) << "\n";
}

RenderSpec diagram(const GeneratorReport& rep, const std::vector<LabeledPath>& restriction,
                   const PerturbationData& pert) {
    RenderSpec spec;
    spec.layers.push_back(PathLayer{diagonal_arc(), {"#bbbbbb", 1.0, "5,4"}});
    for (const auto& lp : restriction)
        spec.layers.push_back(PathLayer{lp.path, {lp.z1_stratum ? "#777700" : "#000000", 1.6, ""}});
    if (rep.mode == GeneratorReport::Mode::reduced) {
        spec.layers.push_back(PathLayer{rho_image(pert), {"#2060c0", 1.3, ""}});
    } else {
        spec.layers.push_back(PathLayer{rho_unreduced_image(1, pert), {"#c03030", 1.3, ""}});
        spec.layers.push_back(PathLayer{rho_unreduced_image(2, pert), {"#208040", 1.3, ""}});
    }
    PointLayer pts;
    for (const auto& g : rep.alpha) pts.points.push_back({g.location, g.label});
    for (const auto& grp : rep.pairs)
        for (const auto& g : grp) pts.points.push_back({g.location, g.label});
    pts.fill = "#000000";
    spec.layers.push_back(pts);
    return spec;
}

}  // namespace pillowcase
