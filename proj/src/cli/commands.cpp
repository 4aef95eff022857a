#include "qcent/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qcent/binary_unitary.hpp"
#include "qcent/catalog.hpp"
#include "qcent/cli/svg.hpp"
#include "qcent/code.hpp"
#include "qcent/io.hpp"

namespace qcent::cli {

namespace {

using io::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct GlobalOptions {
    std::string tolerance_file;
    std::optional<double> eps_rank;
    std::optional<double> eps_kl;
    std::optional<double> eps_geom;
    std::optional<double> eps_eig;
    std::uint64_t seed = 0;
    std::string output;

    ToleranceConfig tolerances() const {
        ToleranceConfig tol;
        std::string file = tolerance_file;
        if (file.empty()) {
            if (const char* env = std::getenv(kToleranceEnv)) file = env;
        }
        if (!file.empty()) tol = io::tolerances_from_json(io::read_json_file(file), tol);
        if (eps_rank) tol.eps_rank = *eps_rank;
        if (eps_kl) tol.eps_kl = *eps_kl;
        if (eps_geom) tol.eps_geom = *eps_geom;
        if (eps_eig) tol.eps_eig = *eps_eig;
        tol.validate();
        return tol;
    }
};

// Picks a max-|lambda| vertex: the first in (im, re) order.
Complex min_entropy_choice(const NumRangeRegion& region, const ToleranceConfig& tol) {
    return extremal_lambda(region, tol).min_entropy_lambdas.front();
}

Complex parse_complex(const std::string& text) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    double re = 0.0;
    double im = 0.0;
    if (!(is >> re)) throw InputError("expected a complex number 're,im', got '" + text + "'");
    if (!(is >> im)) im = 0.0;
    return {re, im};
}

int cmd_channel_info(const std::string& channel_path, const ToleranceConfig& tol, std::ostream& out) {
    const auto channel = io::channel_from_json(io::read_json_file(channel_path));
    validate_channel(channel, tol);
    const auto gram = choi_gram(channel, tol);
    const auto canonical = canonical_kraus(channel, tol);
    json report = {
        {"dim", channel.dim()},
        {"kraus_count", channel.kraus_count()},
        {"trace_preservation_residual", trace_preservation_residual(channel)},
        {"choi_gram", io::to_json(gram.matrix)},
        {"choi_spectrum", gram.weights},
        {"choi_rank", gram.choi_rank},
        {"canonical_kraus_count", canonical.kraus_count()},
    };
    out << io::dump(report) << '\n';
    return kOk;
}

int cmd_code_analyze(const std::string& channel_path, const std::string& code_path, int sigma_samples,
                     std::uint64_t seed, const ToleranceConfig& tol, std::ostream& out) {
    const auto channel = io::channel_from_json(io::read_json_file(channel_path));
    validate_channel(channel, tol);
    const auto code = io::code_from_json(io::read_json_file(code_path), tol);
    const auto report = classify_code(channel, code, tol);
    json j = io::to_json(report);
    j["rank_bound_holds"] = report.lambda_rank <= report.choi_rank;
    if (sigma_samples > 0) {
        j["sigma_equals_lambda"] = sigma_equals_lambda_check(channel, code, sigma_samples, seed, tol);
        j["sigma_samples"] = sigma_samples;
        j["seed"] = seed;
    }
    out << io::dump(j) << '\n';
    return kOk;
}

int cmd_code_recovery(const std::string& channel_path, const std::string& code_path, const ToleranceConfig& tol,
                      std::ostream& out) {
    const auto channel = io::channel_from_json(io::read_json_file(channel_path));
    validate_channel(channel, tol);
    const auto code = io::code_from_json(io::read_json_file(code_path), tol);
    const auto recovery = build_recovery(channel, code, tol);
    json j = {
        {"recovery", io::to_json(recovery.channel)},
        {"correction_count", recovery.correction_count},
        {"verification_residual", recovery.verification_residual},
        {"trace_preservation_residual", trace_preservation_residual(recovery.channel)},
    };
    out << io::dump(j) << '\n';
    return kOk;
}

int cmd_numrange(const std::string& unitary_path, std::size_t k, const std::string& svg_path, bool hulls, int size,
                 const ToleranceConfig& tol, std::ostream& out) {
    const Matrix u = io::matrix_from_json(io::read_json_file(unitary_path));
    const auto spectrum = merged_spectrum(u, tol);
    const auto region = numerical_range(spectrum, k, tol);
    if (!svg_path.empty()) {
        SvgOptions options;
        options.size_px = size;
        options.show_hulls = hulls;
        const auto constituent = hulls ? constituent_hulls(spectrum, k, tol) : std::vector<std::vector<Complex>>{};
        std::ofstream svg(svg_path);
        if (!svg) throw InputError("cannot write " + svg_path);
        svg << render_region_svg(region, spectrum.eigen.eigenvalues, constituent, options);
    }
    out << io::dump(io::to_json(region)) << '\n';
    return kOk;
}

int cmd_min_entropy_code(const std::string& unitary_path, std::size_t k, double p, const ToleranceConfig& tol,
                         std::ostream& out) {
    const Matrix u = io::matrix_from_json(io::read_json_file(unitary_path));
    const BinaryUnitaryChannel bu(p, u, tol);
    if (k < 1 || k > bu.dim()) throw InputError("k must lie in [1, N]");
    if (bu.dim() % k != 0) {
        throw Unsupported("eigenstate grouping needs k | N (k=" + std::to_string(k) + ", N=" +
                          std::to_string(bu.dim()) + ")");
    }
    const auto region = numerical_range(u, k, tol);
    const Complex lambda = min_entropy_choice(region, tol);
    const auto grouping = grouping_code(u, k, lambda, tol);

    // Verify the constructed code before reporting it.
    const auto kl = kl_check(bu.channel(), grouping.code, tol);
    const auto [plus, minus] = lambda_spectrum(p, lambda, tol);
    const auto dfs = dfs_exists(u, k, tol);

    json partition = json::array();
    for (const auto& g : grouping.partition) partition.push_back(g);
    json j = {
        {"k", k},
        {"p", p},
        {"lambda", io::to_json(lambda)},
        {"lambda_modulus", std::abs(lambda)},
        {"lambda_spectrum", json::array({plus, minus})},
        {"entropy_bits", biunitary_code_entropy(p, lambda, tol)},
        {"kl_residual", kl.max_residual},
        {"code_lambda", io::to_json(kl.lambda)},
        {"partition", std::move(partition)},
        {"weights", grouping.weights},
        {"code", io::to_json(grouping.code)},
        {"dfs", {{"exists", dfs.exists}, {"lambda", dfs.lambda ? io::to_json(*dfs.lambda) : json(nullptr)}}},
    };
    out << io::dump(j) << '\n';
    return kOk;
}

int cmd_entropy_vs_p(const std::string& unitary_path, std::size_t k, const std::string& lambda_text,
                     const std::string& choice, int points, const ToleranceConfig& tol, std::ostream& out) {
    const Matrix u = io::matrix_from_json(io::read_json_file(unitary_path));
    Complex lambda;
    if (!lambda_text.empty()) {
        lambda = parse_complex(lambda_text);
    } else {
        const auto region = numerical_range(u, k, tol);
        const auto ex = extremal_lambda(region, tol);
        lambda = choice == "max" ? *ex.max_entropy_lambda : ex.min_entropy_lambdas.front();
    }
    if (points < 2) throw InputError("--points must be at least 2");
    std::vector<double> grid;
    for (int i = 0; i < points; ++i) grid.push_back(static_cast<double>(i) / (points - 1));
    const auto rows = entropy_vs_p(u, k, lambda, grid, tol);
    out << "p,entropy_bits\n";
    for (const auto& [p, s] : rows) out << num(p) << ',' << num(s) << '\n';
    return kOk;
}

int cmd_catalog_list(std::ostream& out) {
    json list = json::array();
    for (const auto& inst : catalog::all_instances()) {
        list.push_back({{"name", inst.name}, {"description", inst.description}});
    }
    out << io::dump(list) << '\n';
    return kOk;
}

int cmd_catalog_get(const std::string& name, std::ostream& out) {
    out << io::dump(io::to_json(catalog::get(name))) << '\n';
    return kOk;
}

int cmd_reproduce(const std::string& table, const ToleranceConfig& tol, std::ostream& out) {
    static const std::vector<std::string> tables = {"table1", "stabilizer", "example33", "qutrit"};
    if (std::find(tables.begin(), tables.end(), table) == tables.end()) {
        throw InputError("unknown table '" + table + "' (expected table1, stabilizer, example33 or qutrit)");
    }
    const auto rows = catalog::evaluate(catalog::get(table), tol);
    out << "label,quantity,expected,computed,abs_delta,tolerance,pass\n";
    bool all = true;
    for (const auto& r : rows) {
        out << r.label << ',' << r.quantity << ',' << num(r.expected) << ',' << num(r.computed) << ','
            << num(r.abs_delta) << ',' << num(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
        all = all && r.pass;
    }
    return all ? kOk : kRegressionFailure;
}

constexpr const char* kDescription =
    "Entropy of quantum error-correcting codes, code classification and higher-rank numerical ranges "
    "of binary unitary channels.\n\n"
    "Exit codes: 0 ok, 1 input or validation error, 2 not correctable / no code, 3 unsupported, "
    "4 regression failure.\n"
    "SVG viewport: the unit disk fills a square canvas (default 600 px) with a 5% margin; y is flipped so "
    "the imaginary axis points up. A pixel (x, y) maps to re = (x - m)/s - 1, im = 1 - (y - m)/s with "
    "m = 0.05 * size and s = (size - 2m)/2.";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{kDescription, "qcent"};
    app.require_subcommand(1);
    GlobalOptions g;
    app.add_option("--tolerances", g.tolerance_file,
                   std::string("JSON file with eps_rank/eps_kl/eps_geom/eps_eig (default: $") + kToleranceEnv + ")");
    app.add_option("--eps-rank", g.eps_rank, "rank cutoff (default 1e-9)");
    app.add_option("--eps-kl", g.eps_kl, "Knill-Laflamme residual tolerance (default 1e-8)");
    app.add_option("--eps-geom", g.eps_geom, "geometry tolerance (default 1e-10)");
    app.add_option("--eps-eig", g.eps_eig, "eigensolver tolerance (default 1e-10)");
    app.add_option("--seed", g.seed, "seed for randomized checks (default 0)");
    app.add_option("-o,--output", g.output, "write the primary output to this file");

    std::string channel_path;
    std::string code_path;
    std::string unitary_path;
    std::size_t k = 0;
    double p = 0.0;
    int sigma_samples = 0;
    std::string svg_path;
    bool hulls = false;
    int svg_size = 600;
    std::string lambda_text;
    std::string choice = "min";
    int points = 11;
    std::string name;
    std::string table;

    auto* channel_cmd = app.add_subcommand("channel", "channel utilities");
    channel_cmd->require_subcommand(1);
    auto* channel_info = channel_cmd->add_subcommand("info", "Choi-Gram spectrum and Choi rank of a channel");
    channel_info->add_option("channel", channel_path, "channel JSON")->required();

    auto* code_cmd = app.add_subcommand("code", "code utilities");
    code_cmd->require_subcommand(1);
    auto* code_analyze = code_cmd->add_subcommand("analyze", "Knill-Laflamme check, entropy and classification");
    code_analyze->add_option("channel", channel_path, "channel JSON")->required();
    code_analyze->add_option("code", code_path, "code JSON")->required();
    code_analyze->add_option("--sigma-samples", sigma_samples, "random code states for the sigma = Lambda check");
    auto* code_recovery = code_cmd->add_subcommand("recovery", "build and verify a recovery operation");
    code_recovery->add_option("channel", channel_path, "channel JSON")->required();
    code_recovery->add_option("code", code_path, "code JSON")->required();

    auto* numrange = app.add_subcommand("numrange", "rank-k numerical range of a unitary");
    numrange->add_option("unitary", unitary_path, "unitary matrix JSON")->required();
    numrange->add_option("-k,--k", k, "code dimension")->required();
    numrange->add_option("--svg", svg_path, "write an SVG figure");
    numrange->add_flag("--hulls", hulls, "draw the constituent hull outlines");
    numrange->add_option("--size", svg_size, "SVG canvas size in px (default 600)");

    auto* min_code = app.add_subcommand("min-entropy-code", "construct a minimum-entropy code");
    min_code->add_option("unitary", unitary_path, "unitary matrix JSON")->required();
    min_code->add_option("-k,--k", k, "code dimension")->required();
    min_code->add_option("-p,--p", p, "error probability")->required();

    auto* evp = app.add_subcommand("entropy-vs-p", "code entropy over a grid of p");
    evp->add_option("unitary", unitary_path, "unitary matrix JSON")->required();
    evp->add_option("-k,--k", k, "code dimension")->required();
    evp->add_option("--lambda", lambda_text, "compression value 're,im'");
    evp->add_option("--choice", choice, "min or max entropy lambda when --lambda is absent")
        ->check(CLI::IsMember({"min", "max"}));
    evp->add_option("--points", points, "grid points on [0, 1] (default 11)");

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in instances");
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "list instance names");
    auto* catalog_get = catalog_cmd->add_subcommand("get", "print an instance as JSON");
    catalog_get->add_option("name", name, "instance name")->required();

    auto* reproduce = app.add_subcommand("reproduce", "regression check against the reported values");
    reproduce->add_option("table", table, "table1, stabilizer, example33 or qutrit")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    std::ofstream file;
    if (!g.output.empty()) {
        file.open(g.output);
        if (!file) {
            err << "error: cannot write " << g.output << '\n';
            return kInputError;
        }
    }
    std::ostream& sink = g.output.empty() ? out : file;

    try {
        const ToleranceConfig tol = g.tolerances();
        if (channel_info->parsed()) return cmd_channel_info(channel_path, tol, sink);
        if (code_analyze->parsed()) return cmd_code_analyze(channel_path, code_path, sigma_samples, g.seed, tol, sink);
        if (code_recovery->parsed()) return cmd_code_recovery(channel_path, code_path, tol, sink);
        if (numrange->parsed()) return cmd_numrange(unitary_path, k, svg_path, hulls, svg_size, tol, sink);
        if (min_code->parsed()) return cmd_min_entropy_code(unitary_path, k, p, tol, sink);
        if (evp->parsed()) return cmd_entropy_vs_p(unitary_path, k, lambda_text, choice, points, tol, sink);
        if (catalog_list->parsed()) return cmd_catalog_list(sink);
        if (catalog_get->parsed()) return cmd_catalog_get(name, sink);
        if (reproduce->parsed()) return cmd_reproduce(table, tol, sink);
    } catch (const NotCorrectable& e) {
        err << "error: " << e.what() << '\n';
        sink << io::dump({{"error", "NotCorrectable"},
                          {"max_residual", e.residual()},
                          {"threshold", e.threshold()}})
             << '\n';
        return kNotCorrectable;
    } catch (const NoCode& e) {
        err << "error: " << e.what() << '\n';
        return kNotCorrectable;
    } catch (const Unsupported& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const NoFeasiblePartition& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const std::exception& e) {
        // Validation, shape, parse and I/O failures.
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace qcent::cli
