#include "aqrm/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <algorithm>
#include <locale>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "aqrm/bo_solver.hpp"
#include "aqrm/error.hpp"
#include "aqrm/exact_ed.hpp"
#include "aqrm/io.hpp"
#include "aqrm/potential.hpp"
#include "aqrm/spectral.hpp"
#include "aqrm/svg.hpp"

namespace aqrm {
namespace {

using nlohmann::json;

// Options shared by every subcommand. Unset optionals fall back to the
// --config file, then to the built-in defaults.
struct CommonOptions {
    std::string config_path;
    std::string output = "-";
    std::string format;
    std::string svg_path;
    std::optional<int> basis;
    std::optional<int> fock;
    std::optional<int> quadrature;
    std::optional<int> threads;
    std::optional<int> levels;
    std::optional<double> threshold;
    std::string branch = "neg";
};

struct ModelOptions {
    double delta = 10.0;
    std::optional<double> g;
    std::optional<double> g_over_gc;
    double eta = 0.0;
};

struct Resolved {
    SolverSettings settings;
    int levels = 8;
    double threshold = kDefaultDegeneracyThreshold;
};

void add_common(CLI::App* cmd, CommonOptions& o, std::initializer_list<const char*> formats) {
    cmd->add_option("--config", o.config_path, "key = value defaults file (flags take precedence)");
    cmd->add_option("--output,-o", o.output, "output path, '-' for stdout");
    cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember(std::vector<std::string>(formats.begin(), formats.end())));
    cmd->add_option("--basis", o.basis, "BO oscillator basis size N");
    cmd->add_option("--fock", o.fock, "ED Fock truncation");
    cmd->add_option("--quadrature", o.quadrature, "Gauss-Hermite order (0 = automatic)");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    cmd->add_option("--branch", o.branch, "BO branch")->check(CLI::IsMember({"neg", "pos", "negative", "positive"}));
}

void add_model(CLI::App* cmd, ModelOptions& m) {
    cmd->add_option("--delta", m.delta, "two-level splitting (units of hbar*omega)");
    auto* g = cmd->add_option("--g", m.g, "coupling strength");
    auto* r = cmd->add_option("--g-over-gc", m.g_over_gc, "coupling in units of g_c");
    g->excludes(r);
    r->excludes(g);
    cmd->add_option("--eta", m.eta, "bias");
}

ModelParams make_params(const ModelOptions& m) {
    if (!m.g && !m.g_over_gc) throw InvalidInputError("one of --g or --g-over-gc is required");
    if (!(m.delta > 0.0)) throw InvalidInputError("delta must be > 0");
    const double g = m.g ? *m.g : *m.g_over_gc * coupling_scale(m.delta);
    return ModelParams(m.delta, g, m.eta);
}

template <typename T>
T parse_value(const std::string& key, const std::string& text) {
    T value{};
    std::istringstream is(text);
    is.imbue(std::locale::classic());
    is >> value;
    if (!is || !is.eof()) throw InvalidInputError("config key '" + key + "': cannot parse '" + text + "'");
    return value;
}

Resolved resolve(const CommonOptions& o) {
    std::map<std::string, std::string> config;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw InvalidInputError("cannot open config file '" + o.config_path + "'");
        config = parse_config(in);
    }
    static const char* const known[] = {"basis", "fock", "quadrature", "threads", "levels", "threshold"};
    for (const auto& [key, value] : config) {
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw InvalidInputError("unknown config key '" + key + "'");
        }
    }
    auto pick_int = [&](const std::optional<int>& flag, const char* key, int fallback) {
        if (flag) return *flag;
        if (auto it = config.find(key); it != config.end()) return parse_value<int>(key, it->second);
        return fallback;
    };

    Resolved r;
    r.settings.bo_basis = pick_int(o.basis, "basis", kDefaultBoBasis);
    r.settings.n_fock = pick_int(o.fock, "fock", kDefaultFock);
    r.settings.quadrature_order = pick_int(o.quadrature, "quadrature", 0);
    const int threads = pick_int(o.threads, "threads", 0);
    r.levels = pick_int(o.levels, "levels", 8);
    if (o.threshold) {
        r.threshold = *o.threshold;
    } else if (auto it = config.find("threshold"); it != config.end()) {
        r.threshold = parse_value<double>("threshold", it->second);
    }
    r.settings.branch = parse_branch(o.branch);

    if (r.settings.bo_basis < 2 || r.settings.bo_basis > kMaxHermiteOrder + 1 - kConvergenceStep) {
        throw InvalidInputError("basis must be in [2, " + std::to_string(kMaxHermiteOrder + 1 - kConvergenceStep) + "]");
    }
    if (r.settings.n_fock < 2 || r.settings.n_fock > kMaxHermiteOrder + 1 - kConvergenceStep) {
        throw InvalidInputError("fock must be in [2, " + std::to_string(kMaxHermiteOrder + 1 - kConvergenceStep) + "]");
    }
    if (r.settings.quadrature_order < 0 || r.settings.quadrature_order > kMaxQuadratureOrder) {
        throw InvalidInputError("quadrature must be 0 or in [1, " + std::to_string(kMaxQuadratureOrder) + "]");
    }
    if (threads < 0) throw InvalidInputError("threads must be >= 0");
    r.settings.threads = static_cast<unsigned>(threads);
    if (r.levels < 1) throw InvalidInputError("levels must be >= 1");
    if (!(r.threshold > 0.0) || !std::isfinite(r.threshold)) throw InvalidInputError("threshold must be > 0");
    return r;
}

void check_levels(const Resolved& r, bool bo, bool ed) {
    if (bo && r.levels > r.settings.bo_basis) throw InvalidInputError("levels exceeds the BO basis size");
    if (ed && r.levels > 2 * r.settings.n_fock) throw InvalidInputError("levels exceeds the ED dimension");
}

std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> v(count);
    for (int i = 0; i < count; ++i) v[i] = (i == count - 1) ? hi : lo + (hi - lo) * i / (count - 1);
    return v;
}

struct PendingWrite {
    std::string path;
    std::string content;
};

// All output is collected first and flushed by a single writer at the end.
void flush(const std::vector<PendingWrite>& writes, std::ostream& out) {
    for (const auto& w : writes) {
        if (w.path == "-") {
            out << w.content;
            continue;
        }
        std::ofstream f(w.path, std::ios::binary | std::ios::trunc);
        if (!f) throw InvalidInputError("cannot open output file '" + w.path + "'");
        f << w.content;
        if (!f) throw InvalidInputError("failed writing '" + w.path + "'");
    }
}

std::string dump(const json& doc) { return doc.dump(2) + '\n'; }

std::string strip_csv(const std::string& path) {
    if (path.size() > 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return path.substr(0, path.size() - 4);
    return path;
}

// --- subcommands ----------------------------------------------------------

std::vector<PendingWrite> run_spectrum(const ModelOptions& m, const CommonOptions& o, const std::string& method) {
    const ModelParams params = make_params(m);
    const Resolved r = resolve(o);
    const MethodSelection sel = parse_method_selection(method);
    check_levels(r, sel != MethodSelection::ED, sel != MethodSelection::BO);

    std::vector<SpectrumResult> results;
    if (sel != MethodSelection::ED) {
        results.push_back(solve_bo(params, r.settings.branch, r.settings.bo_basis, r.levels, r.settings.quadrature_order));
    }
    if (sel != MethodSelection::BO) results.push_back(solve_ed(params, r.settings.n_fock, r.levels));

    if (o.format == "csv") return {{o.output, spectrum_csv(results)}};
    return {{o.output, dump(make_document("spectrum", results))}};
}

struct ScanOptions {
    std::string axis = "g-over-gc";
    double min = 0.0;
    double max = 2.0;
    int steps = 50;
    std::string method = "ed";
};

std::vector<PendingWrite> run_scan(const ModelOptions& m, const CommonOptions& o, const ScanOptions& s) {
    const ModelParams base(m.delta, 0.0, m.eta);
    const Resolved r = resolve(o);
    const ScanAxis axis = parse_axis(s.axis);
    if (axis == ScanAxis::Eta) throw InvalidInputError("scan axis must be g or g-over-gc");
    const MethodSelection sel = parse_method_selection(s.method);
    if (s.steps < 2) throw InvalidInputError("steps must be >= 2");
    if (!(s.max > s.min)) throw InvalidInputError("scan needs max > min");
    if (s.min < 0.0) throw InvalidInputError("coupling must be >= 0");
    check_levels(r, sel != MethodSelection::ED, sel != MethodSelection::BO);

    const std::vector<double> values = linspace(s.min, s.max, s.steps);
    const std::vector<ScanTable> tables =
        scan_coupling(base.delta(), base.eta(), axis, values, sel, r.levels, r.settings);

    std::vector<PendingWrite> writes;
    if (o.format == "json") {
        writes.push_back({o.output, dump(make_document("scan", tables))});
    } else {
        writes.push_back({o.output, scan_csv(tables)});
    }
    if (!o.svg_path.empty()) {
        SvgPlot plot("Spectrum, delta = " + format_number(base.delta()) + ", eta = " + format_number(base.eta()),
                     axis == ScanAxis::GOverGc ? "g / g_c" : "g", "E (hbar omega)");
        for (const auto& t : tables) {
            for (int k = 0; k < t.levels; ++k) {
                SvgPlot::Series series;
                series.label = k == 0 ? std::string(to_string(t.method)) : "";
                series.color = t.method == Method::BO ? "#1f77b4" : "#d62728";
                series.dash = t.method == Method::BO ? "" : "4 3";
                for (const auto& p : t.points) {
                    series.x.push_back(p.axis_value);
                    series.y.push_back(p.result.energies[k]);
                }
                plot.add_series(std::move(series));
            }
        }
        writes.push_back({o.svg_path, plot.render()});
    }
    return writes;
}

struct PotentialOptions {
    std::optional<double> range;
    int points = 401;
    std::string sidecar;
};

std::vector<PendingWrite> run_potential(const ModelOptions& m, const CommonOptions& o, const PotentialOptions& p,
                                        std::ostream& err) {
    const ModelParams params = make_params(m);
    (void)resolve(o);
    const double range = p.range ? *p.range : bo_grid_half_width(params);
    if (!(range > 0.0)) throw InvalidInputError("range must be > 0");
    if (p.points < 2) throw InvalidInputError("points must be >= 2");

    const PotentialProfile profile = sample_potential(params, range, p.points);
    if (!profile.taylor) {
        err << "warning: Taylor coefficients omitted at g = 0 (V_eff = xi^2/2 - sqrt(eta^2 + delta^2/4))\n";
    }

    std::vector<PendingWrite> writes;
    if (o.format == "json") {
        writes.push_back({o.output, dump(make_document("potential", profile))});
    } else {
        writes.push_back({o.output, potential_csv(profile)});
        std::string sidecar = p.sidecar;
        if (sidecar.empty() && o.output != "-") sidecar = o.output + ".json";
        if (!sidecar.empty()) {
            PotentialProfile summary = profile;
            summary.xi.clear();
            summary.value.clear();
            writes.push_back({sidecar, dump(make_document("potential", summary))});
        }
    }
    if (!o.svg_path.empty()) {
        SvgPlot plot("Effective potential", "xi", "V_eff (hbar omega)");
        plot.add_series({"V_eff", profile.xi, profile.value, palette_color(0), ""});
        writes.push_back({o.svg_path, plot.render()});
    }
    return writes;
}

struct WavefunctionOptions {
    int level = 0;
    std::string method = "both";
    std::optional<double> grid_min;
    std::optional<double> grid_max;
    int grid_points = 801;
};

std::vector<PendingWrite> run_wavefunction(const ModelOptions& m, const CommonOptions& o,
                                           const WavefunctionOptions& w) {
    const ModelParams params = make_params(m);
    const Resolved r = resolve(o);
    const MethodSelection sel = parse_method_selection(w.method);
    const double half = bo_grid_half_width(params);
    const double lo = w.grid_min ? *w.grid_min : -half;
    const double hi = w.grid_max ? *w.grid_max : half;
    if (w.grid_points < 1) throw InvalidInputError("grid-points must be >= 1");
    if (w.grid_points > 1 && !(hi > lo)) throw InvalidInputError("grid-max must exceed grid-min");
    if (w.level < 0) throw InvalidInputError("level must be >= 0");
    if (sel != MethodSelection::ED && w.level >= r.settings.bo_basis) throw InvalidInputError("level exceeds the BO basis");
    if (sel != MethodSelection::BO && w.level >= 2 * r.settings.n_fock) throw InvalidInputError("level exceeds the ED dimension");
    if (sel == MethodSelection::Both && o.format != "json" && o.output == "-") {
        throw InvalidInputError("--method both with CSV output needs --output <stem> (writes <stem>.bo.csv and <stem>.ed.csv)");
    }
    const std::vector<double> grid = w.grid_points == 1 ? std::vector<double>{lo} : linspace(lo, hi, w.grid_points);

    std::vector<WavefunctionGrid> grids;
    if (sel != MethodSelection::ED) {
        grids.push_back(bo_wavefunction(params, r.settings.branch, r.settings.bo_basis, w.level, grid,
                                        r.settings.quadrature_order));
    }
    if (sel != MethodSelection::BO) grids.push_back(ed_wavefunction(params, r.settings.n_fock, w.level, grid));

    std::vector<PendingWrite> writes;
    if (o.format == "json") {
        writes.push_back({o.output, dump(make_document("wavefunction", grids))});
    } else if (grids.size() == 1) {
        writes.push_back({o.output, wavefunction_csv(grids.front())});
    } else {
        const std::string stem = strip_csv(o.output);
        for (const auto& g : grids) writes.push_back({stem + "." + std::string(to_string(g.method)) + ".csv", wavefunction_csv(g)});
    }
    if (!o.svg_path.empty()) {
        SvgPlot plot("Wavefunction, level " + std::to_string(w.level), "xi", "amplitude");
        for (const auto& g : grids) {
            const std::string tag(to_string(g.method));
            const std::string dash = g.method == Method::BO ? "" : "4 3";
            plot.add_series({tag + " up", g.xi, g.up, palette_color(0), dash});
            plot.add_series({tag + " down", g.xi, g.down, palette_color(1), dash});
        }
        writes.push_back({o.svg_path, plot.render()});
    }
    return writes;
}

struct DegeneracyOptions {
    std::optional<double> eta_min;
    std::optional<double> eta_max;
    int eta_steps = 2;
    std::vector<double> eta_list;
};

std::vector<PendingWrite> run_degeneracy_map(const ModelOptions& m, const CommonOptions& o,
                                             const DegeneracyOptions& d) {
    const Resolved r = resolve(o);
    const ModelParams probe = make_params(m);
    std::vector<double> etas = d.eta_list;
    if (etas.empty()) {
        if (!d.eta_min || !d.eta_max) throw InvalidInputError("give --eta-list or both --eta-min and --eta-max");
        if (d.eta_steps < 1) throw InvalidInputError("eta-steps must be >= 1");
        if (d.eta_steps == 1) {
            if (*d.eta_min != *d.eta_max) throw InvalidInputError("eta-steps 1 needs eta-min == eta-max");
            etas = {*d.eta_min};
        } else {
            if (!(*d.eta_max > *d.eta_min)) throw InvalidInputError("eta-max must exceed eta-min");
            etas = linspace(*d.eta_min, *d.eta_max, d.eta_steps);
        }
    }
    for (const double eta : etas) (void)probe.with_eta(eta);
    if (r.levels < 2) throw InvalidInputError("degeneracy map needs levels >= 2");
    check_levels(r, false, true);
    if (probe.g() < kStrongCouplingRatio * probe.g_c()) {
        throw PreconditionError("degeneracy classification requires g >= 1.2 g_c");
    }

    const auto reports = degeneracy_map(probe.delta(), probe.g(), etas, r.levels, r.threshold, r.settings);
    if (o.format == "json") return {{o.output, dump(make_document("degeneracy_map", reports))}};
    return {{o.output, degeneracy_csv(reports)}};
}

void report_error(std::ostream& err, ErrorKind kind, const std::string& message) {
    const json record{{"schema_version", kSchemaVersion},
                      {"error", {{"kind", to_string(kind)}, {"exit_code", static_cast<int>(kind)}, {"message", message}}}};
    err << record.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Asymmetric quantum Rabi model: Born-Oppenheimer and exact-diagonalization spectra"};
    app.name("aqrm");
    app.require_subcommand(1);

    ModelOptions model;
    CommonOptions common;

    auto* spectrum = app.add_subcommand("spectrum", "lowest eigenenergies at one parameter point");
    std::string spectrum_method = "both";
    add_model(spectrum, model);
    add_common(spectrum, common, {"json", "csv"});
    spectrum->add_option("--method", spectrum_method)->check(CLI::IsMember({"bo", "ed", "both"}));
    spectrum->add_option("--levels", common.levels, "number of levels");

    auto* scan = app.add_subcommand("scan", "spectra along the coupling axis");
    ScanOptions scan_opts;
    add_model(scan, model);
    add_common(scan, common, {"csv", "json"});
    scan->add_option("--axis", scan_opts.axis)->check(CLI::IsMember({"g", "g-over-gc"}));
    scan->add_option("--min", scan_opts.min);
    scan->add_option("--max", scan_opts.max);
    scan->add_option("--steps", scan_opts.steps, "number of points (>= 2)");
    scan->add_option("--method", scan_opts.method)->check(CLI::IsMember({"bo", "ed", "both"}));
    scan->add_option("--levels", common.levels);
    scan->add_option("--svg", common.svg_path, "also write an SVG plot");

    auto* potential = app.add_subcommand("potential", "effective potential, Taylor coefficients and wells");
    PotentialOptions pot_opts;
    add_model(potential, model);
    add_common(potential, common, {"csv", "json"});
    potential->add_option("--range", pot_opts.range, "half-width L of the sampled interval");
    potential->add_option("--points", pot_opts.points, "number of samples M");
    potential->add_option("--sidecar", pot_opts.sidecar, "JSON report path (default <output>.json)");
    potential->add_option("--svg", common.svg_path, "also write an SVG plot");

    auto* wavefunction = app.add_subcommand("wavefunction", "spin-resolved eigenfunctions on a grid");
    WavefunctionOptions wf_opts;
    add_model(wavefunction, model);
    add_common(wavefunction, common, {"csv", "json"});
    wavefunction->add_option("--level", wf_opts.level);
    wavefunction->add_option("--method", wf_opts.method)->check(CLI::IsMember({"bo", "ed", "both"}));
    wavefunction->add_option("--grid-min", wf_opts.grid_min);
    wavefunction->add_option("--grid-max", wf_opts.grid_max);
    wavefunction->add_option("--grid-points", wf_opts.grid_points);
    wavefunction->add_option("--svg", common.svg_path, "also write an SVG plot");

    auto* degeneracy = app.add_subcommand("degeneracy-map", "degeneracy onset level versus eta");
    DegeneracyOptions deg_opts;
    add_model(degeneracy, model);
    add_common(degeneracy, common, {"csv", "json"});
    degeneracy->add_option("--eta-min", deg_opts.eta_min);
    degeneracy->add_option("--eta-max", deg_opts.eta_max);
    degeneracy->add_option("--eta-steps", deg_opts.eta_steps);
    degeneracy->add_option("--eta-list", deg_opts.eta_list, "comma-separated eta values")->delimiter(',');
    degeneracy->add_option("--levels", common.levels);
    degeneracy->add_option("--threshold", common.threshold, "gap below which levels are degenerate");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        report_error(err, ErrorKind::InvalidInput, e.what());
        return static_cast<int>(ErrorKind::InvalidInput);
    }

    try {
        std::vector<PendingWrite> writes;
        if (*spectrum) {
            writes = run_spectrum(model, common, spectrum_method);
        } else if (*scan) {
            writes = run_scan(model, common, scan_opts);
        } else if (*potential) {
            writes = run_potential(model, common, pot_opts, err);
        } else if (*wavefunction) {
            writes = run_wavefunction(model, common, wf_opts);
        } else if (*degeneracy) {
            writes = run_degeneracy_map(model, common, deg_opts);
        }
        flush(writes, out);
        return 0;
    } catch (const Error& e) {
        report_error(err, e.kind(), e.what());
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        report_error(err, ErrorKind::SolverFailure, e.what());
        return static_cast<int>(ErrorKind::SolverFailure);
    }
}

}  // namespace aqrm
