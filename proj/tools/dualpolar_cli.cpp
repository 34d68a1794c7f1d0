#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualpolar/frames.hpp"
#include "dualpolar/lattice.hpp"
#include "dualpolar/norton.hpp"
#include "dualpolar/qseries.hpp"
#include "dualpolar/scheme.hpp"
#include "dualpolar/spectral.hpp"
#include "dualpolar/verify.hpp"

using namespace dualpolar;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, CheckFailed = 1, InvalidSpec = 2, OverBudget = 3 };

// Thrown to leave a command with a particular exit code.
struct Abort {
    int code;
    std::string message;
};

struct SpecArgs {
    std::string family;
    int d = 0;
    int r = 0;
};

void add_spec_options(CLI::App* cmd, SpecArgs& a, bool required = true)
{
    auto* f = cmd->add_option("--family", a.family, "C | B | D | 2D | 2A-odd | 2A-even");
    auto* d = cmd->add_option("--d", a.d, "diameter (rank of the polar space)");
    auto* r = cmd->add_option("--r", a.r, "field parameter; q = r^2 for the unitary families");
    if (required) {
        f->required();
        d->required();
        r->required();
    }
}

long budget()
{
    const char* env = std::getenv("DUALPOLAR_BUDGET");
    if (!env || !*env)
        return 1000;
    try {
        std::size_t pos = 0;
        const long v = std::stol(env, &pos);
        if (pos != std::string(env).size() || v < 0)
            throw std::invalid_argument(env);
        return v;
    } catch (const std::exception&) {
        throw Abort{InvalidSpec, std::string("DUALPOLAR_BUDGET is not a non-negative integer: ") + env};
    }
}

verify::InstanceSpec resolve(const SpecArgs& a)
{
    const auto family = forms::parse_family(a.family);
    if (!family)
        throw Abort{InvalidSpec, "unknown family '" + a.family + "'"};
    verify::InstanceSpec spec{*family, a.d, a.r};
    BigInt predicted;
    try {
        forms::make_space(spec.family, spec.d, spec.r);
        predicted = verify::predicted_vertex_count(spec);
    } catch (const Error& e) {
        throw Abort{InvalidSpec, e.what()};
    }
    const long cap = budget();
    if (predicted > cap)
        throw Abort{OverBudget, spec.name() + " has " + predicted.get_str() + " vertices, budget is " +
                                    std::to_string(cap) + " (set DUALPOLAR_BUDGET to raise it)"};
    return spec;
}

std::shared_ptr<const lattice::PolarLattice> build_lattice(const verify::InstanceSpec& spec)
{
    return std::make_shared<const lattice::PolarLattice>(
        lattice::enumerate(forms::make_space(spec.family, spec.d, spec.r)));
}

json parameters(const lattice::PolarLattice& lat)
{
    const auto& sp = lat.space();
    const int te = sp.two_e();
    return {{"instance", sp.name()},
            {"family", std::string(forms::family_tag(sp.family()))},
            {"d", sp.d()},
            {"r", sp.r()},
            {"q", sp.q()},
            {"n", sp.n()},
            {"e", te % 2 == 0 ? std::to_string(te / 2) : std::to_string(te) + "/2"},
            {"vertices", lat.vertex_count()}};
}

json rationals(const std::vector<Rational>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_string(x));
    return a;
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw Abort{InvalidSpec, "cannot write " + out};
    f << text;
}

void emit(const json& doc, const std::string& out) { emit(doc.dump(2) + "\n", out); }

struct Instance {
    std::shared_ptr<const lattice::PolarLattice> lat;
    std::optional<scheme::DualPolarGraph> graph;
    std::optional<spectral::SpectralDecomposition> dec;
    std::optional<qseries::EigenvalueTable> table;

    explicit Instance(const verify::InstanceSpec& spec) : lat(build_lattice(spec)) {}

    const scheme::DualPolarGraph& g()
    {
        if (!graph)
            graph.emplace(scheme::build_graph(lat));
        return *graph;
    }
    const spectral::SpectralDecomposition& spectrum()
    {
        if (!dec)
            dec.emplace(spectral::idempotents(spectral::laplacian(g()), spectral::mu_values(lat->space())));
        return *dec;
    }
    const qseries::EigenvalueTable& eigen()
    {
        if (!table)
            table.emplace(qseries::eigen_table(lat->d(), qseries::QBase::of(lat->space())));
        return *table;
    }
};

int cmd_build(const SpecArgs& a, const std::string& out)
{
    Instance in(resolve(a));
    const auto& g = in.g();
    json edges = json::array();
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = x + 1; y < g.vertex_count(); ++y)
            if (g.distance(x, y) == 1)
                edges.push_back({x, y});
    json doc;
    doc["parameters"] = parameters(*in.lat);
    doc["lattice"] = lattice::to_json(*in.lat);
    doc["graph"] = {{"vertices", g.vertex_count()}, {"edge_count", edges.size()}, {"edges", std::move(edges)}};
    emit(doc, out);
    return Ok;
}

int cmd_spectrum(const SpecArgs& a, const std::string& out)
{
    Instance in(resolve(a));
    const auto& dec = in.spectrum();
    const auto fc = frames::frame_constant(1, in.g(), dec, in.eigen());
    json p = json::array();
    for (const auto& row : in.eigen().p)
        p.push_back(rationals(row));
    json doc;
    doc["parameters"] = parameters(*in.lat);
    doc["mu"] = rationals(dec.mu);
    doc["mult"] = dec.mult;
    doc["lambda1"] = to_string(fc.observed);
    doc["eigenvalue_table"] = std::move(p);
    emit(doc, out);
    return Ok;
}

int cmd_frame(const SpecArgs& a, int j, const std::string& out)
{
    const auto spec = resolve(a);
    if (j < 0 || j > spec.d)
        throw Abort{InvalidSpec, "--j must lie in 0.." + std::to_string(spec.d)};
    Instance in(spec);
    const auto& dec = in.spectrum();
    const auto fc = frames::frame_constant(j, in.g(), dec, in.eigen());
    json doc;
    doc["parameters"] = parameters(*in.lat);
    doc["j"] = j;
    doc["lambda"] = to_string(fc.observed);
    doc["lambda_from_table"] = to_string(fc.from_table);
    if (fc.closed)
        doc["lambda_closed"] = to_string(*fc.closed);
    doc["dim"] = dec.mult.at(j);
    doc["frame_size"] = in.lat->size(j);
    doc["tight_frame"] = frames::verify_tight_frame(j, *in.lat, dec, fc.observed);
    emit(doc, out);
    return Ok;
}

int cmd_norton(const SpecArgs& a, const std::string& out)
{
    Instance in(resolve(a));
    json doc;
    doc["parameters"] = parameters(*in.lat);
    doc["norton"] = norton::verify_norton(*in.lat, in.spectrum());
    emit(doc, out);
    return Ok;
}

int cmd_verify(const SpecArgs& a, bool all, const std::string& lattice_file, bool timings, const std::string& out)
{
    json doc;
    bool ok = true;
    if (all) {
        json reports = json::array();
        for (const auto& spec : verify::default_matrix()) {
            auto rep = verify::verify_instance(spec);
            ok = ok && rep.ok();
            reports.push_back(rep.to_json(timings));
        }
        doc["instances"] = std::move(reports);
        doc["ok"] = ok;
    } else if (!lattice_file.empty()) {
        std::ifstream f(lattice_file);
        if (!f)
            throw Abort{InvalidSpec, "cannot read " + lattice_file};
        std::shared_ptr<const lattice::PolarLattice> lat;
        try {
            const json src = json::parse(f);
            const json& body = src.contains("lattice") ? src.at("lattice") : src;
            SpecArgs sa{body.at("family").get<std::string>(), body.at("d").get<int>(), body.at("r").get<int>()};
            resolve(sa);
            lat = std::make_shared<const lattice::PolarLattice>(lattice::from_json(body));
        } catch (const Abort&) {
            throw;
        } catch (const std::exception& e) {
            throw Abort{InvalidSpec, std::string("invalid lattice document: ") + e.what()};
        }
        auto rep = verify::verify_lattice(std::move(lat));
        ok = rep.ok();
        doc = rep.to_json(timings);
    } else {
        if (a.family.empty())
            throw Abort{InvalidSpec, "verify needs --family/--d/--r, --all or --lattice"};
        auto rep = verify::verify_instance(resolve(a));
        ok = rep.ok();
        doc = rep.to_json(timings);
    }
    emit(doc, out);
    return ok ? Ok : CheckFailed;
}

std::string eigen_csv(const qseries::EigenvalueTable& t)
{
    std::ostringstream os;
    for (int i = 0; i <= t.d; ++i) {
        for (int j = 0; j <= t.d; ++j) {
            const auto& v = t.eigenvalue(i, j);
            os << (j ? "," : "") << (v.get_den() == 1 ? v.get_num().get_str() : to_string(v));
        }
        os << '\n';
    }
    return os.str();
}

int cmd_export(const SpecArgs& a, const std::string& format, const std::string& table, const std::string& out)
{
    if (format != "dot" && format != "csv")
        throw Abort{InvalidSpec, "unknown format '" + format + "' (dot or csv)"};
    if (format == "csv" && table != "intersection" && table != "eigen")
        throw Abort{InvalidSpec, "unknown table '" + table + "' (intersection or eigen)"};
    Instance in(resolve(a));
    if (format == "dot")
        emit(scheme::to_dot(in.g()), out);
    else if (table == "eigen")
        emit(eigen_csv(in.eigen()), out);
    else
        emit(scheme::intersection_csv(scheme::intersection_numbers(in.g())), out);
    return Ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Dual polar graphs: enumeration, spectra, tight frames and the Norton product, in exact arithmetic"};
    app.require_subcommand(1);

    SpecArgs spec;
    std::string out;
    int j = 1;
    bool all = false;
    bool no_timings = false;
    std::string lattice_file;
    std::string format;
    std::string table = "intersection";

    auto* build = app.add_subcommand("build", "enumerate an instance; write lattice, edges and parameters");
    add_spec_options(build, spec);
    build->add_option("--out", out, "output file (default stdout)");

    auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues, multiplicities and lambda_1");
    add_spec_options(spectrum, spec);
    spectrum->add_option("--out", out);

    auto* frame = app.add_subcommand("frame", "tight frame constant and checks for one eigenspace");
    add_spec_options(frame, spec);
    frame->add_option("--j", j, "eigenspace index")->required();
    frame->add_option("--out", out);

    auto* norton_cmd = app.add_subcommand("norton", "Norton product checks on the first eigenspace");
    add_spec_options(norton_cmd, spec);
    norton_cmd->add_option("--out", out);

    auto* verify_cmd = app.add_subcommand("verify", "run every check; exit 1 if any fails");
    add_spec_options(verify_cmd, spec, false);
    verify_cmd->add_flag("--all", all, "the whole default instance matrix");
    verify_cmd->add_option("--lattice", lattice_file, "verify a lattice JSON written by build");
    verify_cmd->add_flag("--no-timings", no_timings, "omit timings for byte-reproducible output");
    verify_cmd->add_option("--out", out);

    auto* export_cmd = app.add_subcommand("export", "DOT graph or CSV tables");
    add_spec_options(export_cmd, spec);
    export_cmd->add_option("--format", format, "dot | csv")->required();
    export_cmd->add_option("--table", table, "csv only: intersection (p_ij^h rows) | eigen");
    export_cmd->add_option("--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return InvalidSpec;
    }

    try {
        if (*build)
            return cmd_build(spec, out);
        if (*spectrum)
            return cmd_spectrum(spec, out);
        if (*frame)
            return cmd_frame(spec, j, out);
        if (*norton_cmd)
            return cmd_norton(spec, out);
        if (*verify_cmd)
            return cmd_verify(spec, all, lattice_file, !no_timings, out);
        if (*export_cmd)
            return cmd_export(spec, format, table, out);
    } catch (const Abort& a) {
        std::cerr << "error: " << a.message << "\n";
        return a.code;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return CheckFailed;
    }
    return InvalidSpec;
}
