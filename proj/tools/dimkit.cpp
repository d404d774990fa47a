// Command-line surface: generate clouds, estimate dimensions, evaluate the
// closed-form catalogue, compare the two, and reproduce the survey figures.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dimkit/analytic.hpp"
#include "dimkit/errors.hpp"
#include "dimkit/estimators.hpp"
#include "dimkit/generate.hpp"
#include "dimkit/io.hpp"
#include "dimkit/svg.hpp"

namespace fs = std::filesystem;
using namespace dimkit;

namespace {

std::vector<double> parse_theta_grid(const std::string& s) {
    double start = 0, stop = 0, step = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(step > 0))
        throw_config("--theta-grid must be START:STOP:STEP");
    std::vector<double> grid;
    for (double t = start; t <= stop + 1e-12; t += step) {
        if (t <= 0.0 || t >= 1.0) throw_config("theta values must be in (0,1)");
        grid.push_back(t);
    }
    if (grid.empty()) throw_config("empty theta grid");
    return grid;
}

FractalSpec load_spec(const std::string& path, uint64_t seed_override, bool has_seed) {
    auto spec = parse_spec(read_text_file(path));
    if (has_seed) {
        if (auto* perc = std::get_if<PercolationSpec>(&spec)) perc->seed = seed_override;
    }
    return spec;
}

double align_resolution(const FractalSpec& spec, double resolution) {
    if (const auto* carpet = std::get_if<CarpetSpec>(&spec)) {
        const int k = carpet_level(*carpet, resolution);
        const double aligned = std::pow(static_cast<double>(carpet->m), -k);
        if (std::abs(aligned - resolution) > resolution * 1e-9) {
            std::cerr << "warning: carpet resolution rounded down to m^-" << k << " = "
                      << aligned << "\n";
            return aligned;
        }
    }
    return resolution;
}

SpectrumCurve analytic_spectrum_curve(const FractalSpec& spec,
                                      const std::vector<double>& thetas) {
    SpectrumCurve curve;
    curve.provenance = Provenance::Analytic;
    curve.family = family_name(spec);
    for (double t : thetas)
        curve.samples.push_back({t, assouad_spectrum_formula(spec, t).value});
    return curve;
}

std::vector<std::pair<double, double>> as_points(const SpectrumCurve& c) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : c.samples) pts.emplace_back(s.theta, s.value);
    return pts;
}

int cmd_generate(const std::string& spec_path, double resolution,
                 const std::string& out_dir, uint64_t seed, bool has_seed) {
    const auto spec = load_spec(spec_path, seed, has_seed);
    const double res = align_resolution(spec, resolution);
    const auto cloud = generate(spec, res);
    fs::create_directories(out_dir);
    write_point_cloud(cloud, (fs::path(out_dir) / "cloud.csv").string());
    std::cout << "family=" << family_name(spec) << "\n"
              << "points=" << cloud.size() << "\n"
              << "resolution=" << cloud.resolution() << "\n";
    return 0;
}

int cmd_estimate(const std::string& spec_path, double resolution,
                 const std::vector<double>& thetas, double r_min, std::size_t centers,
                 const std::string& out_dir, bool svg, uint64_t seed, bool has_seed) {
    const auto spec = load_spec(spec_path, seed, has_seed);
    const double res = align_resolution(spec, resolution);
    const auto cloud = generate(spec, res);

    SpectrumOptions opt;
    opt.max_centers = centers;
    const double start = r_min > 0 ? r_min : cloud.resolution();
    const auto curve = [&] {
        auto c = estimate_assouad_spectrum(cloud, thetas, start, opt);
        c.family = family_name(spec);
        return c;
    }();
    const auto box = estimate_box(cloud, start);

    fs::create_directories(out_dir);
    write_spectrum_curve(curve, (fs::path(out_dir) / "spectrum_numeric.csv").string());
    if (svg) {
        SvgChart chart("Assouad spectrum estimate: " + family_name(spec), "theta",
                       "dimension");
        chart.add_series("numeric", as_points(curve), false, "#1f4e9c");
        chart.write((fs::path(out_dir) / "spectrum_numeric.svg").string());
    }
    std::cout << "family=" << family_name(spec) << "\n"
              << "points=" << cloud.size() << "\n"
              << "box_estimate=" << box.slope << "\n";
    return 0;
}

int cmd_formula(const std::string& spec_path, const std::vector<double>& thetas,
                const std::string& out_dir, bool svg, uint64_t seed, bool has_seed) {
    const auto spec = load_spec(spec_path, seed, has_seed);
    auto curve = analytic_spectrum_curve(spec, thetas);
    fs::create_directories(out_dir);
    write_spectrum_curve(curve, (fs::path(out_dir) / "spectrum_analytic.csv").string());

    const auto rep = dims(spec);
    if (svg) {
        SvgChart chart("Assouad spectrum formula: " + family_name(spec), "theta",
                       "dimension");
        chart.add_series("analytic", as_points(curve), false, "#1f4e9c");
        chart.write((fs::path(out_dir) / "spectrum_analytic.svg").string());
    }
    std::cout << "family=" << family_name(spec) << "\n"
              << "hausdorff=" << rep.hausdorff << "\n"
              << "lower_box=" << rep.lower_box << "\n"
              << "upper_box=" << rep.upper_box << "\n"
              << "assouad=" << rep.assouad << "\n";
    return 0;
}

int cmd_compare(const std::string& spec_path, double resolution,
                const std::vector<double>& thetas, double r_min, std::size_t centers,
                const std::string& out_dir, bool svg, uint64_t seed, bool has_seed) {
    const auto spec = load_spec(spec_path, seed, has_seed);
    const double res = align_resolution(spec, resolution);
    const auto cloud = generate(spec, res);
    const auto rep = dims(spec);

    SpectrumOptions opt;
    opt.max_centers = centers;
    const double start = r_min > 0 ? r_min : cloud.resolution();

    // Per-theta numeric estimates; a theta that cannot be reached at this
    // resolution is flagged instead of aborting the table.
    std::vector<double> numeric(thetas.size(), std::nan(""));
    std::vector<std::string> flag(thetas.size(), "ok");
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        try {
            const std::vector<double> one{thetas[i]};
            numeric[i] =
                estimate_assouad_spectrum(cloud, one, start, opt).samples[0].value;
        } catch (const Error&) {
            flag[i] = "skipped";
        }
    }

    fs::create_directories(out_dir);
    const auto csv_path = fs::path(out_dir) / "compare.csv";
    {
        std::ostringstream out;
        out.precision(17);
        out << "theta,numeric_estimate,analytic_value_or_bounds,lemma1_lower,"
               "lemma1_upper,lemma3_lower,status\n";
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            const double t = thetas[i];
            const auto [l1_lo, l1_hi] = lemma1_bounds(rep.upper_box, rep.assouad, t);
            out << t << "," << numeric[i] << ","
                << assouad_spectrum_formula(spec, t).value << "," << l1_lo << ","
                << l1_hi << "," << lemma3_bound(rep.lower_box, rep.assouad, t) << ","
                << flag[i] << "\n";
        }
        write_text_file(csv_path.string(), out.str());
    }

    if (svg) {
        SvgChart chart("Spectrum, numeric vs analytic: " + family_name(spec), "theta",
                       "dimension");
        std::vector<std::pair<double, double>> num_pts, ana_pts, lo_pts, hi_pts;
        for (std::size_t i = 0; i < thetas.size(); ++i) {
            if (flag[i] == "ok") num_pts.emplace_back(thetas[i], numeric[i]);
            ana_pts.emplace_back(thetas[i],
                                 assouad_spectrum_formula(spec, thetas[i]).value);
            const auto [l1_lo, l1_hi] = lemma1_bounds(rep.upper_box, rep.assouad, thetas[i]);
            lo_pts.emplace_back(thetas[i], l1_lo);
            hi_pts.emplace_back(thetas[i], l1_hi);
        }
        if (!num_pts.empty()) chart.add_series("numeric", num_pts, false, "#1f4e9c");
        chart.add_series("analytic", ana_pts, true, "#c23b22");
        chart.add_series("general lower", lo_pts, true, "#777777");
        chart.add_series("general upper", hi_pts, true, "#aaaaaa");
        chart.write((fs::path(out_dir) / "compare.svg").string());
    }
    std::cout << "rows=" << thetas.size() << "\n";
    return 0;
}

void write_figure_panel(const fs::path& dir, const std::string& stem,
                        const std::string& title,
                        const std::vector<std::pair<std::string, SpectrumCurve>>& curves) {
    SvgChart chart(title, "theta", "dimension");
    const std::vector<std::string> colors{"#c23b22", "#1f4e9c", "#3a7d44", "#7a5195"};
    std::size_t ci = 0;
    for (const auto& [name, curve] : curves) {
        write_spectrum_curve(curve, (dir / (stem + "_" + name + ".csv")).string());
        const bool dashed = curve.provenance == Provenance::LowerBound ||
                            curve.provenance == Provenance::UpperBound;
        chart.add_series(name, as_points(curve), dashed, colors[ci % colors.size()]);
        ++ci;
    }
    chart.write((dir / (stem + ".svg")).string());
}

SpectrumCurve bound_curve(const FractalSpec& spec, const std::vector<double>& thetas,
                          bool upper_of_lemma1, Provenance prov) {
    const auto rep = dims(spec);
    SpectrumCurve c;
    c.provenance = prov;
    c.family = family_name(spec);
    for (double t : thetas) {
        const auto [lo, hi] = lemma1_bounds(rep.upper_box, rep.assouad, t);
        c.samples.push_back({t, upper_of_lemma1 ? hi : lo});
    }
    return c;
}

int cmd_reproduce_figure(int figure, const std::string& out_dir) {
    std::vector<double> thetas;
    for (int i = 1; i <= 99; ++i) thetas.push_back(i / 100.0);
    fs::create_directories(out_dir);
    const fs::path dir(out_dir);

    if (figure == 4) {
        for (double p : {4.0, 1.0, 0.1}) {
            const FractalSpec spec = CountableSpec{p};
            SpectrumCurve inter, l3;
            inter.provenance = Provenance::Analytic;
            inter.family = family_name(spec);
            l3 = inter;
            l3.provenance = Provenance::LowerBound;
            const auto rep = dims(spec);
            for (double t : thetas) {
                inter.samples.push_back(
                    {t, intermediate_formula_or_bounds(spec, t).lower});
                l3.samples.push_back({t, lemma3_bound(rep.lower_box, rep.assouad, t)});
            }
            std::ostringstream stem;
            stem << "fig4_p" << p;
            write_figure_panel(dir, stem.str(),
                               "Spectrum and intermediate dimensions, " + family_name(spec),
                               {{"assouad_spectrum", analytic_spectrum_curve(spec, thetas)},
                                {"intermediate", inter},
                                {"intermediate_lower_bound", l3}});
        }
        return 0;
    }
    if (figure == 6) {
        const FractalSpec spec = CarpetSpec{2, 3, {{0, 0}, {0, 2}, {1, 1}}};
        write_figure_panel(dir, "fig6_centre",
                           "Carpet Assouad spectrum with general bounds",
                           {{"assouad_spectrum", analytic_spectrum_curve(spec, thetas)},
                            {"general_lower", bound_curve(spec, thetas, false,
                                                          Provenance::LowerBound)},
                            {"general_upper", bound_curve(spec, thetas, true,
                                                          Provenance::UpperBound)}});
        SpectrumCurve lower, upper;
        lower.provenance = Provenance::LowerBound;
        upper.provenance = Provenance::UpperBound;
        lower.family = upper.family = family_name(spec);
        for (double t : thetas) {
            const auto b = intermediate_formula_or_bounds(spec, t);
            lower.samples.push_back({t, b.lower});
            upper.samples.push_back({t, b.upper});
        }
        write_figure_panel(dir, "fig6_right", "Carpet intermediate-dimension bounds",
                           {{"intermediate_lower", lower}, {"intermediate_upper", upper}});
        return 0;
    }
    if (figure == 7) {
        for (double p : {2.0, 10.0}) {
            const FractalSpec spec = SpiralSpec{p};
            std::ostringstream stem;
            stem << "fig7_p" << p;
            write_figure_panel(dir, stem.str(),
                               "Spiral Assouad spectrum with general bounds",
                               {{"assouad_spectrum", analytic_spectrum_curve(spec, thetas)},
                                {"general_lower", bound_curve(spec, thetas, false,
                                                              Provenance::LowerBound)},
                                {"general_upper", bound_curve(spec, thetas, true,
                                                              Provenance::UpperBound)}});
        }
        return 0;
    }
    throw_config("unknown figure id (expected 4, 6, or 7)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dimension interpolation toolkit"};
    app.require_subcommand(1);

    std::string spec_path, out_dir = ".", theta_grid = "0.1:0.9:0.1";
    double resolution = 1e-4, r_min = 0.0;
    std::size_t centers = 4096;
    uint64_t seed = 0;
    bool svg = false;
    int figure = 0;

    auto add_common = [&](CLI::App* cmd, bool needs_spec) {
        if (needs_spec)
            cmd->add_option("--spec", spec_path, "spec file (key=value)")->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--seed", seed, "override percolation seed");
    };

    auto* gen = app.add_subcommand("generate", "materialize a family as a point cloud");
    add_common(gen, true);
    gen->add_option("--resolution", resolution, "net resolution")->required();

    auto* est = app.add_subcommand("estimate", "numeric spectrum estimate from a cloud");
    add_common(est, true);
    est->add_option("--resolution", resolution, "net resolution")->required();
    est->add_option("--theta-grid", theta_grid, "START:STOP:STEP");
    est->add_option("--r-min", r_min, "smallest scale (default: resolution)");
    est->add_option("--centers", centers, "max centers per scale pair");
    est->add_flag("--svg", svg, "also emit an SVG plot");

    auto* form = app.add_subcommand("formula", "closed-form spectrum for a family");
    add_common(form, true);
    form->add_option("--theta-grid", theta_grid, "START:STOP:STEP");
    form->add_flag("--svg", svg, "also emit an SVG plot");

    auto* comp = app.add_subcommand("compare", "numeric vs analytic table");
    add_common(comp, true);
    comp->add_option("--resolution", resolution, "net resolution")->required();
    comp->add_option("--theta-grid", theta_grid, "START:STOP:STEP");
    comp->add_option("--r-min", r_min, "smallest scale (default: resolution)");
    comp->add_option("--centers", centers, "max centers per scale pair");
    comp->add_flag("--svg", svg, "also emit an SVG plot");

    auto* fig = app.add_subcommand("reproduce-figure", "emit the survey figure panels");
    fig->add_option("figure", figure, "figure id: 4, 6 or 7")->required();
    fig->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        const bool has_seed = app.count_all() && (gen->count("--seed") || est->count("--seed") ||
                                                  form->count("--seed") || comp->count("--seed"));
        if (gen->parsed())
            return cmd_generate(spec_path, resolution, out_dir, seed, has_seed);
        if (est->parsed())
            return cmd_estimate(spec_path, resolution, parse_theta_grid(theta_grid), r_min,
                                centers, out_dir, svg, seed, has_seed);
        if (form->parsed())
            return cmd_formula(spec_path, parse_theta_grid(theta_grid), out_dir, svg, seed,
                               has_seed);
        if (comp->parsed())
            return cmd_compare(spec_path, resolution, parse_theta_grid(theta_grid), r_min,
                               centers, out_dir, svg, seed, has_seed);
        if (fig->parsed()) return cmd_reproduce_figure(figure, out_dir);
    } catch (const Error& e) {
        switch (e.code) {
            case Error::Code::Extinction:
                std::cerr << "reason=extinction\n" << e.what() << "\n";
                return 3;
            case Error::Code::InsufficientData:
            case Error::Code::Resolution:
                std::cerr << "reason=insufficient_scales\n" << e.what() << "\n";
                return 4;
            default:
                std::cerr << "reason=config\n" << e.what() << "\n";
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "reason=config\n" << e.what() << "\n";
        return 2;
    }
    return 2;
}
