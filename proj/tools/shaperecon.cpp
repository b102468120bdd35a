// Command-line front end: sampling, complexes, persistence, and planar
// graph reconstruction wired into file-based pipelines.

#include "CLI11.hpp"

#include "recon/complex.hpp"
#include "recon/homology.hpp"
#include "recon/intrinsic.hpp"
#include "recon/io.hpp"
#include "recon/reconstruct.hpp"
#include "recon/shapes.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using namespace recon;

constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

// Validation failures get their own exit code so callers can tell a
// violated theorem hypothesis from a wrong answer.
struct ValidationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeFlags {
    std::string name;
    std::string file;
    double radius = 1.0;
    double scale = 1.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--shape", name,
                        "built-in shape: circle, lemniscate, lissajous, square, "
                        "figure8, theta");
        cmd->add_option("--spec", file, "shape spec JSON file");
        cmd->add_option("--r,--radius", radius, "circle radius")->capture_default_str();
        cmd->add_option("--scale", scale, "curve scale")->capture_default_str();
    }

    std::optional<ShapeSpec> resolve() const {
        if (!file.empty()) return read_shape_spec_json_file(file);
        if (name.empty()) return std::nullopt;
        if (name == "circle") return circle_spec(radius);
        if (name == "lemniscate") return lemniscate_spec(scale);
        if (name == "lissajous") return lissajous_spec(scale);
        if (name == "square") return square_spec();
        if (name == "figure8") return figure_eight_spec();
        if (name == "theta") return theta_spec();
        throw ValidationFailure("unknown shape: " + name);
    }

    ShapeSpec require() const {
        auto spec = resolve();
        if (!spec) throw ValidationFailure("a shape is required (--shape or --spec)");
        return *spec;
    }
};

TheoremKind theorem_from(const std::string& s) {
    if (s == "rips") return TheoremKind::rips;
    if (s == "cech") return TheoremKind::cech;
    if (s == "graph") return TheoremKind::graph;
    throw ValidationFailure("unknown theorem: " + s);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"reconstruction of geodesic shapes from point samples"};
    app.require_subcommand(1);

    // ---- sample ----
    auto* sample = app.add_subcommand("sample", "sample a shape into a CSV cloud");
    ShapeFlags sample_shape_flags;
    sample_shape_flags.attach(sample);
    int sample_n = 100;
    double sample_noise = 0.0;
    std::uint64_t sample_seed = 0;
    std::string sample_out;
    sample->add_option("--n", sample_n, "number of sample points")->required();
    sample->add_option("--noise", sample_noise, "noise magnitude (max displacement)");
    sample->add_option("--seed", sample_seed, "noise seed")->capture_default_str();
    sample->add_option("-o,--out", sample_out, "output CSV path (default: stdout)");
    sample->callback([&] {
        const ShapeSpec spec = sample_shape_flags.require();
        const SampleResult result = sample_shape(spec, sample_n, {sample_noise, sample_seed});
        if (sample_out.empty()) {
            write_cloud_csv(result.cloud, std::cout);
            std::cerr << "dH_bound " << format_double(result.dh_bound) << "\n";
        } else {
            write_cloud_csv_file(result.cloud, sample_out);
            std::cout << "dH_bound " << format_double(result.dh_bound) << "\n";
        }
    });

    // ---- rips / cech ----
    auto* rips = app.add_subcommand("rips", "Euclidean Vietoris-Rips complex of a cloud");
    std::string rips_cloud, rips_out;
    double rips_alpha = 0.0;
    int rips_cap = 2;
    bool rips_filt = false;
    rips->add_option("--cloud", rips_cloud, "input CSV cloud")->required();
    rips->add_option("--alpha", rips_alpha, "diameter scale")->required();
    rips->add_option("--cap", rips_cap, "dimension cap")->capture_default_str();
    rips->add_flag("--filtration", rips_filt, "emit the filtration up to alpha");
    rips->add_option("-o,--out", rips_out, "output JSON path (default: stdout)");
    rips->callback([&] {
        const PointCloud cloud = read_cloud_csv_file(rips_cloud);
        if (rips_filt) {
            const Filtration f =
                rips_filtration(MetricMatrix::from_cloud(cloud), rips_alpha, rips_cap);
            if (rips_out.empty()) write_filtration_json(f, std::cout);
            else {
                std::ofstream os(rips_out, std::ios::binary);
                if (!os) throw IoError("cannot open " + rips_out + " for writing");
                write_filtration_json(f, os);
            }
        } else {
            const SimplicialComplex k =
                rips_complex(MetricMatrix::from_cloud(cloud), rips_alpha, rips_cap);
            if (rips_out.empty()) write_complex_json(k, std::cout);
            else write_complex_json_file(k, rips_out);
        }
    });

    auto* cech = app.add_subcommand("cech", "Cech complex of a cloud (open balls)");
    std::string cech_cloud, cech_out;
    double cech_alpha = 0.0;
    int cech_cap = 2;
    bool cech_filt = false;
    cech->add_option("--cloud", cech_cloud, "input CSV cloud")->required();
    cech->add_option("--alpha", cech_alpha, "ball radius scale")->required();
    cech->add_option("--cap", cech_cap, "dimension cap")->capture_default_str();
    cech->add_flag("--filtration", cech_filt, "emit the filtration up to alpha");
    cech->add_option("-o,--out", cech_out, "output JSON path (default: stdout)");
    cech->callback([&] {
        const PointCloud cloud = read_cloud_csv_file(cech_cloud);
        if (cech_filt) {
            const Filtration f = cech_filtration(cloud, cech_alpha, cech_cap);
            if (cech_out.empty()) write_filtration_json(f, std::cout);
            else {
                std::ofstream os(cech_out, std::ios::binary);
                if (!os) throw IoError("cannot open " + cech_out + " for writing");
                write_filtration_json(f, os);
            }
        } else {
            const SimplicialComplex k = cech_complex(cloud, cech_alpha, cech_cap);
            if (cech_out.empty()) write_complex_json(k, std::cout);
            else write_complex_json_file(k, cech_out);
        }
    });

    // ---- deps ----
    auto* deps = app.add_subcommand("deps", "shortest-path metric d_eps of a cloud");
    std::string deps_cloud, deps_out;
    double deps_eps = 0.0;
    deps->add_option("--cloud", deps_cloud, "input CSV cloud")->required();
    deps->add_option("--eps", deps_eps, "neighborhood graph scale")->required();
    deps->add_option("-o,--out", deps_out, "output CSV path (default: stdout)");
    deps->callback([&] {
        const PointCloud cloud = read_cloud_csv_file(deps_cloud);
        const EpsGraph g = build_eps_graph(cloud, deps_eps);
        const MetricMatrix m = compute_d_eps(g);
        if (deps_out.empty()) write_metric_csv(m, std::cout);
        else {
            write_metric_csv_file(m, deps_out);
            std::cout << "components " << component_count(g) << "\n";
        }
    });

    // ---- persist ----
    auto* persist = app.add_subcommand("persist", "persistence diagram and Betti queries");
    std::string persist_cloud, persist_type = "rips", persist_out, persist_theorem;
    double persist_alpha_max = -1.0, persist_eps = 0.0;
    double persist_delta = 0.0, persist_rho = 0.0, persist_dh = -1.0;
    int persist_cap = 2;
    bool persist_json = false;
    std::vector<double> persist_query;
    persist->add_option("--cloud", persist_cloud, "input CSV cloud")->required();
    persist->add_option("--filtration", persist_type, "rips, cech or intrinsic-rips")
        ->capture_default_str();
    persist->add_option("--alpha-max", persist_alpha_max, "filtration range");
    persist->add_option("--cap", persist_cap, "dimension cap")->capture_default_str();
    persist->add_option("--eps", persist_eps,
                        "graph scale (intrinsic-rips) or theorem scale (--theorem)");
    persist->add_option("--query", persist_query, "persistent Betti query: k s t")
        ->expected(3);
    persist->add_option("--theorem", persist_theorem,
                        "validate and query a reconstruction theorem: rips or cech");
    persist->add_option("--delta", persist_delta, "distortion upper bound");
    persist->add_option("--rho", persist_rho, "convexity radius lower bound");
    persist->add_option("--dh", persist_dh, "certified Hausdorff bound d_H(X,S)");
    persist->add_flag("--json", persist_json, "print the diagram as JSON");
    persist->callback([&] {
        const PointCloud cloud = read_cloud_csv_file(persist_cloud);

        double s_query = 0.0, t_query = 0.0;
        bool theorem_mode = !persist_theorem.empty();
        if (theorem_mode) {
            if (persist_delta <= 0 || persist_rho <= 0 || persist_dh < 0 || persist_eps <= 0)
                throw ValidationFailure(
                    "--theorem needs --delta, --rho, --dh and --eps");
            const TheoremKind kind = theorem_from(persist_theorem);
            if (kind == TheoremKind::graph)
                throw ValidationFailure("persist handles the rips and cech theorems");
            const ConditionReport cond = verify_sampling_condition(
                persist_delta, persist_rho, std::nullopt, persist_dh, persist_eps, kind);
            if (!cond.pass) throw ValidationFailure(cond.failure);
            persist_type = persist_theorem;
            s_query = persist_eps;
            t_query = kind == TheoremKind::rips
                          ? 0.5 * (3.0 * persist_delta + 1.0) * persist_eps
                          : (4.0 * persist_delta + 1.0) * persist_eps;
            persist_alpha_max = t_query;
        } else if (persist_alpha_max < 0) {
            throw ValidationFailure("--alpha-max is required without --theorem");
        }

        Filtration f;
        if (persist_type == "rips") {
            f = rips_filtration(MetricMatrix::from_cloud(cloud), persist_alpha_max,
                                persist_cap);
        } else if (persist_type == "cech") {
            f = cech_filtration(cloud, persist_alpha_max, persist_cap);
        } else if (persist_type == "intrinsic-rips") {
            if (persist_eps <= 0)
                throw ValidationFailure("intrinsic-rips needs --eps for the graph scale");
            const MetricMatrix m = compute_d_eps(build_eps_graph(cloud, persist_eps));
            f = rips_filtration(m, persist_alpha_max, persist_cap);
        } else {
            throw ValidationFailure("unknown filtration type: " + persist_type);
        }

        const PersistenceDiagram diagram = compute_persistence(f);
        if (theorem_mode) {
            for (int k = 0; k < persist_cap; ++k)
                std::cout << k << ' '
                          << persistent_betti(diagram, {k, s_query, t_query}) << "\n";
        } else if (!persist_query.empty()) {
            const BettiQuery q{static_cast<int>(persist_query[0]), persist_query[1],
                               persist_query[2]};
            std::cout << persistent_betti(diagram, q) << "\n";
        } else if (persist_json) {
            std::cout << diagram_json(diagram) << "\n";
        } else {
            write_diagram_text(diagram, std::cout);
        }
    });

    // ---- betti ----
    auto* betti_cmd = app.add_subcommand("betti", "Betti number of a stored complex");
    std::string betti_complex;
    int betti_k = 0;
    betti_cmd->add_option("--complex", betti_complex, "complex JSON file")->required();
    betti_cmd->add_option("--k", betti_k, "homology dimension")->required();
    betti_cmd->callback([&] {
        std::cout << betti(read_complex_json_file(betti_complex), betti_k) << "\n";
    });

    // ---- reconstruct ----
    auto* rec = app.add_subcommand("reconstruct",
                                   "shadow-based planar graph reconstruction");
    ShapeFlags rec_shape_flags;
    rec_shape_flags.attach(rec);
    std::string rec_cloud, rec_out, rec_svg;
    double rec_eps = 0.0, rec_delta = 0.0, rec_resolution = 0.0;
    rec->add_option("--cloud", rec_cloud, "input CSV cloud (planar)")->required();
    rec->add_option("--eps", rec_eps, "neighborhood graph scale")->required();
    rec->add_option("--delta", rec_delta, "distortion upper bound")->required();
    rec->add_option("--resolution", rec_resolution,
                    "Hausdorff sampling resolution (default eps/4)");
    rec->add_option("-o,--out", rec_out, "shadow JSON output path");
    rec->add_option("--svg", rec_svg, "SVG rendering output path");
    rec->callback([&] {
        const PointCloud cloud = read_cloud_csv_file(rec_cloud);
        const auto spec = rec_shape_flags.resolve();
        const double res = rec_resolution > 0 ? rec_resolution : rec_eps / 4.0;
        const ReconstructionReport rep =
            reconstruct_report(cloud, rec_eps, rec_delta, spec ? &*spec : nullptr, res);
        std::cout << "components " << rep.components << "\n";
        std::cout << "beta0 " << rep.beta0 << "\n";
        std::cout << "beta1 " << rep.beta1 << "\n";
        std::cout << "threshold " << format_double(rep.threshold) << "\n";
        std::cout << "hausdorff_bound " << format_double(rep.hausdorff_bound) << "\n";
        if (rep.hausdorff_estimate) {
            std::cout << "hausdorff_estimate " << format_double(*rep.hausdorff_estimate)
                      << "\n";
            std::cout << "hausdorff_ok " << (*rep.hausdorff_ok ? 1 : 0) << "\n";
        }
        if (!rec_out.empty() || !rec_svg.empty()) {
            const ShadowComplex shadow = reconstruct_graph(cloud, rec_eps, rec_delta);
            if (!rec_out.empty()) write_shadow_json_file(shadow, rec_out);
            if (!rec_svg.empty())
                export_svg_file(shadow, spec ? &*spec : nullptr, rec_svg);
        }
    });

    // ---- validate ----
    auto* validate = app.add_subcommand("validate", "check a theorem's sampling condition");
    ShapeFlags val_shape_flags;
    val_shape_flags.attach(validate);
    std::string val_theorem;
    double val_dh = -1.0, val_eps = 0.0;
    double val_delta = 0.0, val_rho = 0.0, val_b = 0.0;
    validate->add_option("--theorem", val_theorem, "rips, cech or graph")->required();
    validate->add_option("--dh", val_dh, "certified Hausdorff bound")->required();
    validate->add_option("--eps", val_eps, "scale eps")->required();
    validate->add_option("--delta", val_delta, "distortion upper bound");
    validate->add_option("--rho", val_rho, "convexity radius lower bound");
    validate->add_option("--b", val_b, "shortest simple cycle length");
    validate->callback([&] {
        const TheoremKind kind = theorem_from(val_theorem);
        ConditionReport cond;
        if (const auto spec = val_shape_flags.resolve()) {
            cond = verify_sampling_condition(*spec, val_dh, val_eps, kind);
        } else {
            if (val_delta <= 0 || (val_rho <= 0 && val_b <= 0))
                throw ValidationFailure("give --delta plus --rho or --b, or a shape");
            const double rho = val_rho > 0 ? val_rho : val_b / 4.0;
            cond = verify_sampling_condition(
                val_delta, rho, val_b > 0 ? std::optional<double>(val_b) : std::nullopt,
                val_dh, val_eps, kind);
        }
        std::cout << cond.chain() << "\n";
        std::cout << (cond.pass ? "PASS" : "FAIL") << "\n";
        if (!cond.pass) throw ValidationFailure(cond.failure);
    });

    // ---- render ----
    auto* render = app.add_subcommand("render", "render a stored shadow to SVG");
    ShapeFlags render_shape_flags;
    render_shape_flags.attach(render);
    std::string render_shadow, render_out;
    render->add_option("--shadow", render_shadow, "shadow JSON file")->required();
    render->add_option("-o,--out", render_out, "SVG output path")->required();
    render->callback([&] {
        const ShadowComplex shadow = read_shadow_json_file(render_shadow);
        const auto spec = render_shape_flags.resolve();
        export_svg_file(shadow, spec ? &*spec : nullptr, render_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ValidationFailure& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) { return run_cli(argc, argv); }
