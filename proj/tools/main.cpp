// chancomp CLI: build the stock channels, emit complements, minimal
// representations, purity searches and the product-channel violation scan as
// JSON or CSV reports.

#include "chancomp/channel.hpp"
#include "chancomp/linalg.hpp"
#include "chancomp/product.hpp"
#include "chancomp/purity.hpp"
#include "chancomp/random.hpp"
#include "chancomp/zoo.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace chancomp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitOptimizer = 3;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

json vector_to_json(const Vector& v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_to_json(v(k)));
    return out;
}

json spectrum_to_json(const SpectrumReport& report) {
    json clusters = json::array();
    for (const auto& c : report.clusters)
        clusters.push_back(json::array({c.value, c.multiplicity}));
    return clusters;
}

Matrix matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty())
        throw std::invalid_argument("state file: expected a nested array matrix");
    const Eigen::Index nr = Eigen::Index(rows.size());
    const Eigen::Index nc = Eigen::Index(rows.at(0).size());
    Matrix m(nr, nc);
    for (Eigen::Index r = 0; r < nr; ++r) {
        const json& row = rows.at(r);
        if (Eigen::Index(row.size()) != nc)
            throw std::invalid_argument("state file: ragged matrix rows");
        for (Eigen::Index c = 0; c < nc; ++c) {
            const json& z = row.at(c);
            m(r, c) = Complex(z.at(0).get<double>(), z.at(1).get<double>());
        }
    }
    return m;
}

struct ChannelSpec {
    std::string family = "wh";
    int d = 3;
    double p = 0.5;   // depolarizing probability
    double t = 0.0;   // transpose-depolarizing parameter
};

void add_family_options(CLI::App* cmd, ChannelSpec& spec) {
    cmd->add_option("--family", spec.family, "channel family")
        ->check(CLI::IsMember({"dep", "td", "wh"}));
    cmd->add_option("--d", spec.d, "input dimension");
    cmd->add_option("--p", spec.p, "depolarizing probability (family dep)");
    cmd->add_option("--t", spec.t, "transposition weight (family td)");
}

// Kraus set of the requested channel; throws std::invalid_argument on
// out-of-range parameters (exit code 2).
KrausSet build_channel(const ChannelSpec& spec) {
    if (spec.family == "dep") return depolarizing_kraus({spec.d, spec.p});
    if (spec.family == "td") return td_kraus({spec.d, spec.t});
    return wh_kraus(spec.d);
}

json spec_to_json(const ChannelSpec& spec) {
    json j;
    j["family"] = spec.family;
    j["d"] = spec.d;
    if (spec.family == "dep") j["p"] = spec.p;
    if (spec.family == "td") j["t"] = spec.t;
    return j;
}

json report_shell(const std::string& command, const ChannelSpec* spec,
                  std::uint64_t seed) {
    json j;
    j["version"] = CHANCOMP_VERSION;
    j["command"] = command;
    if (spec) j["channel"] = spec_to_json(*spec);
    j["seed"] = seed;
    return j;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

void emit_json(const json& j, const std::string& out_path) {
    emit(j.dump(2) + "\n", out_path);
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("CHANCOMP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("CHANCOMP_SEED is not an unsigned integer");
        }
    }
    return 0;
}

// Covariance residual against one random unitary, reported for the channel
// and (minimal-form) complement rules of the family; empty for wh.
json covariance_block(const ChannelSpec& spec, std::uint64_t seed) {
    json j = json::object();
    if (spec.family == "wh") return j;
    Rng rng(seed);
    const Matrix u = random_unitary(spec.d, rng);
    const Matrix rho = random_density(spec.d, rng);
    if (spec.family == "dep") {
        const DepolarizingParams params{spec.d, spec.p};
        j["channel"] =
            covariance_residual(params, CovarianceCase::DepolarizingChannel, u, rho);
        j["complement"] =
            covariance_residual(params, CovarianceCase::DepolarizingComplement, u, rho);
    } else {
        const TransposeDepolarizingParams params{spec.d, spec.t};
        j["channel"] = covariance_residual(params, CovarianceCase::TdChannel, u, rho);
        j["complement"] = covariance_residual(params, CovarianceCase::TdComplement, u, rho);
    }
    return j;
}

struct CommonOut {
    std::string format = "json";
    std::string out_path;
};

void add_output_options(CLI::App* cmd, CommonOut& out) {
    cmd->add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", out.out_path, "write the report to PATH");
}

std::string csv_line(std::initializer_list<std::string> cells) {
    std::string line;
    bool first = true;
    for (const auto& c : cells) {
        if (!first) line += ',';
        line += c;
        first = false;
    }
    return line + "\n";
}

std::string num(double x) {
    std::ostringstream ss;
    ss.precision(17);
    ss << x;
    return ss.str();
}

int run_complement(const ChannelSpec& spec, const std::string& form,
                   const std::string& state_path, bool spectrum_only,
                   std::uint64_t seed, const CommonOut& out) {
    const KrausSet kraus = build_channel(spec);
    Matrix rho;
    if (!state_path.empty()) {
        std::ifstream in(state_path);
        if (!in) throw std::invalid_argument("cannot open state file: " + state_path);
        rho = matrix_from_json(json::parse(in));
        if (rho.rows() != spec.d || rho.cols() != spec.d)
            throw std::invalid_argument("state file: matrix does not match --d");
    }

    json j = report_shell("complement", &spec, seed);
    j["form"] = form;
    j["residuals"]["trace_preserving"] = validate(kraus, KrausCondition::TracePreserving);
    j["residuals"]["covariance"] = covariance_block(spec, seed);
    j["choi_rank"] = choi_rank(kraus);

    if (rho.size() != 0) {
        Matrix output;
        if (form == "kraus") {
            output = complement_apply(kraus, rho);
        } else if (spec.family == "dep") {
            output = depolarizing_complement({spec.d, spec.p}, rho,
                                             form == "matrix"
                                                 ? DepolarizingComplementForm::Matrix
                                                 : DepolarizingComplementForm::Minimal);
        } else if (spec.family == "td") {
            output = td_complement({spec.d, spec.t}, rho,
                                   form == "matrix" ? TdComplementForm::Block
                                                    : TdComplementForm::Minimal);
        } else {
            output = form == "matrix" ? wh_complement_apply(spec.d, rho)
                                      : complement_apply(kraus, rho);
        }
        if (spectrum_only) {
            j["spectrum"] = spectrum_to_json(
                cluster_spectrum(hermitian_eig(output).eigenvalues, 1e-8));
        } else {
            j["complement_output"] = matrix_to_json(output);
        }
    }
    emit_json(j, out.out_path);
    return kExitOk;
}

int run_minimalize(const ChannelSpec& spec, std::uint64_t seed, const CommonOut& out) {
    Matrix block;
    Matrix minimal;
    if (spec.family == "dep") {
        block = depolarizing_block_t({spec.d, spec.p});
        minimal = depolarizing_minimal_s({spec.d, spec.p});
    } else if (spec.family == "td") {
        block = td_block_t({spec.d, spec.t});
        minimal = td_minimal_s({spec.d, spec.t});
    } else {
        block = td_block_t({spec.d, -1.0 / (spec.d - 1)});
        minimal = td_minimal_s({spec.d, -1.0 / (spec.d - 1)});
    }
    const Matrix recomputed = minimalize(block, spec.d, spec.d);
    json j = report_shell("minimalize", &spec, seed);
    j["residuals"]["sqrt_tdag_t"] = (recomputed - minimal).cwiseAbs().maxCoeff();
    j["minimal_s"] = matrix_to_json(minimal);
    j["spectrum"] = spectrum_to_json(
        cluster_spectrum(hermitian_eig(minimal).eigenvalues, 1e-8));
    emit_json(j, out.out_path);
    return kExitOk;
}

json purity_to_json(const PurityResult& res) {
    json j;
    j["nu_p"] = res.value;
    j["renyi"] = res.renyi;
    j["argmax_state"] = vector_to_json(res.argmax_state);
    json restarts = json::array();
    for (const auto& r : res.restarts)
        restarts.push_back({{"iterations", r.iterations},
                            {"value", r.value},
                            {"converged", r.converged}});
    j["restarts"] = restarts;
    return j;
}

int run_purity(const ChannelSpec& spec, const PuritySearchConfig& cfg,
               const CommonOut& out) {
    const KrausSet kraus = build_channel(spec);
    const PurityResult res = nu_p(kraus, cfg);
    if (!res.any_converged) {
        std::cerr << "purity: no restart converged\n";
        return kExitOptimizer;
    }
    json j = report_shell("purity", &spec, cfg.seed);
    j["pnorm"] = cfg.p;
    j["restart_count"] = cfg.restarts;
    j["residuals"]["trace_preserving"] = validate(kraus, KrausCondition::TracePreserving);
    j["result"] = purity_to_json(res);
    emit_json(j, out.out_path);
    return kExitOk;
}

int run_product_purity(const ChannelSpec& spec, const PuritySearchConfig& cfg,
                       const CommonOut& out) {
    const KrausSet kraus = build_channel(spec);
    const KrausSet comp = complement_kraus(kraus);
    const PurityResult res = nu_p_product(kraus, comp, cfg);
    const PurityResult marginal = nu_p(kraus, cfg);
    if (!res.any_converged || !marginal.any_converged) {
        std::cerr << "product-purity: no restart converged\n";
        return kExitOptimizer;
    }
    json j = report_shell("product-purity", &spec, cfg.seed);
    j["pnorm"] = cfg.p;
    j["restart_count"] = cfg.restarts;
    j["residuals"]["trace_preserving"] = validate(kraus, KrausCondition::TracePreserving);
    j["result"] = purity_to_json(res);
    j["marginal_nu_p"] = marginal.value;
    // nu_p of channel and complement coincide, so the denominator is squared.
    j["ratio"] = res.value / (marginal.value * marginal.value);
    emit_json(j, out.out_path);
    return kExitOk;
}

int run_me_spectrum(int d, std::uint64_t seed, const CommonOut& out) {
    const SpectrumReport report = omega_me_spectrum(d);
    if (out.format == "csv") {
        std::string text = csv_line({"value", "multiplicity"});
        for (const auto& c : report.clusters)
            text += csv_line({num(c.value), std::to_string(c.multiplicity)});
        emit(text, out.out_path);
        return kExitOk;
    }
    ChannelSpec spec;
    spec.d = d;
    json j = report_shell("me-spectrum", &spec, seed);
    j["residuals"]["cluster_tol"] = report.cluster_tol;
    j["spectrum"] = spectrum_to_json(report);
    emit_json(j, out.out_path);
    return kExitOk;
}

int run_violation_scan(int d, const std::string& grid, std::uint64_t seed,
                       const CommonOut& out) {
    double lo = 0.0, hi = 0.0;
    int steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream ss(grid);
    if (!(ss >> lo >> c1 >> hi >> c2 >> steps) || c1 != ':' || c2 != ':' || !ss.eof())
        throw std::invalid_argument("--grid must be a:b:n");
    if (!(lo >= 1.0) || !(hi > lo) || steps < 2)
        throw std::invalid_argument("--grid requires 1 <= a < b and n >= 2");
    std::vector<double> p_grid(steps);
    for (int k = 0; k < steps; ++k)
        p_grid[k] = lo + (hi - lo) * k / (steps - 1);
    const ViolationScanResult res = violation_scan(d, p_grid);

    if (out.format == "csv") {
        std::string text = csv_line({"p", "ratio_lower_bound", "log_ratio"});
        for (std::size_t k = 0; k < res.p_grid.size(); ++k)
            text += csv_line({num(res.p_grid[k]), num(res.ratio_lower_bounds[k]),
                              num(std::log(res.ratio_lower_bounds[k]))});
        if (res.crossing) text += csv_line({"crossing", num(*res.crossing), ""});
        emit(text, out.out_path);
        return kExitOk;
    }
    ChannelSpec spec;
    spec.d = d;
    json j = report_shell("violation-scan", &spec, seed);
    j["residuals"] = json::object();
    j["p"] = res.p_grid;
    j["ratio_lower_bound"] = res.ratio_lower_bounds;
    if (res.crossing)
        j["crossing"] = *res.crossing;
    else
        j["crossing"] = nullptr;
    emit_json(j, out.out_path);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complementary-channel toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow the global --seed after a subcommand name

    std::optional<std::uint64_t> seed_flag;
    app.add_option("--seed", seed_flag, "rng seed (falls back to CHANCOMP_SEED, then 0)");

    ChannelSpec spec;
    CommonOut out;
    std::string form = "kraus";
    std::string state_path;
    bool spectrum_only = false;
    auto* complement = app.add_subcommand("complement", "complementary-channel report");
    add_family_options(complement, spec);
    add_output_options(complement, out);
    complement->add_option("--form", form, "complement realization")
        ->check(CLI::IsMember({"kraus", "matrix", "minimal"}));
    complement->add_option("--state", state_path, "JSON density matrix to push through");
    complement->add_flag("--spectrum", spectrum_only, "emit output spectrum only");

    auto* minimalize_cmd = app.add_subcommand("minimalize", "minimal dual representation");
    add_family_options(minimalize_cmd, spec);
    add_output_options(minimalize_cmd, out);

    PuritySearchConfig cfg;
    auto* purity = app.add_subcommand("purity", "maximal output p-norm search");
    add_family_options(purity, spec);
    add_output_options(purity, out);
    purity->add_option("--pnorm", cfg.p, "Schatten exponent p >= 1");
    purity->add_option("--restarts", cfg.restarts, "optimizer restarts");

    auto* product = app.add_subcommand("product-purity",
                                       "p-norm search over channel x complement");
    add_family_options(product, spec);
    add_output_options(product, out);
    product->add_option("--pnorm", cfg.p, "Schatten exponent p >= 1");
    product->add_option("--restarts", cfg.restarts, "optimizer restarts");

    int me_d = 3;
    auto* me = app.add_subcommand("me-spectrum",
                                  "exact spectrum of the maximally entangled output");
    me->add_option("--d", me_d, "dimension");
    add_output_options(me, out);

    std::string grid = "2:8:25";
    auto* scan = app.add_subcommand("violation-scan",
                                    "multiplicativity lower bound over a p grid");
    scan->add_option("--d", me_d, "dimension");
    scan->add_option("--grid", grid, "p grid as a:b:n");
    add_output_options(scan, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::uint64_t seed = resolve_seed(seed_flag);
        cfg.seed = seed;
        if (complement->parsed())
            return run_complement(spec, form, state_path, spectrum_only, seed, out);
        if (minimalize_cmd->parsed()) return run_minimalize(spec, seed, out);
        if (purity->parsed()) return run_purity(spec, cfg, out);
        if (product->parsed()) return run_product_purity(spec, cfg, out);
        if (me->parsed()) return run_me_spectrum(me_d, seed, out);
        if (scan->parsed()) return run_violation_scan(me_d, grid, seed, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
