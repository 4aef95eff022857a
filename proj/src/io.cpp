#include "qcent/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qcent::io {

namespace {

void emit(const json& j, std::ostringstream& os, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (!pretty) return;
        os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',';
                first = false;
                newline(depth + 1);
                os << json(it.key()).dump() << (pretty ? ": " : ":");
                emit(it.value(), os, indent, depth + 1);
            }
            newline(depth);
            os << '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Numeric leaves such as [re, im] stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
            os << '[';
            bool first = true;
            for (const auto& e : j) {
                if (!first) os << (flat && pretty ? ", " : ",");
                first = false;
                if (!flat) newline(depth + 1);
                emit(e, os, indent, depth + 1);
            }
            if (!flat) newline(depth);
            os << ']';
            return;
        }
        case json::value_t::number_float: {
            const double v = j.get<double>();
            if (!std::isfinite(v)) {
                os << "null";
                return;
            }
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            os << buf;
            return;
        }
        default:
            os << j.dump();
            return;
    }
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

std::string dump(const json& j, int indent) {
    std::ostringstream os;
    emit(j, os, indent, 0);
    return os.str();
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const Vector& v) {
    json out = json::array();
    for (auto z : v.entries()) out.push_back(to_json(z));
    return out;
}

json to_json(const Matrix& m) {
    json data = json::array();
    for (auto z : m.entries()) data.push_back(to_json(z));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json to_json(const QuantumChannel& c) {
    json kraus = json::array();
    for (const auto& k : c.kraus()) kraus.push_back(to_json(k));
    return {{"dim", c.dim()}, {"kraus", std::move(kraus)}};
}

json to_json(const CodeSubspace& code) {
    json basis = json::array();
    for (const auto& b : code.basis()) basis.push_back(to_json(b));
    return {{"dim", code.ambient_dim()}, {"basis", std::move(basis)}};
}

json to_json(const NumRangeRegion& region) {
    json vertices = json::array();
    for (auto v : region.vertices) vertices.push_back(to_json(v));
    return {{"k", region.k}, {"kind", std::string(to_string(region.kind))}, {"vertices", std::move(vertices)}};
}

json to_json(const ErrorCorrectionMatrix& lambda) {
    return {{"matrix", to_json(lambda.matrix)}, {"spectrum", lambda.spectrum}};
}

json to_json(const CodeReport& r) {
    return {
        {"lambda", to_json(r.lambda)},
        {"entropy_bits", r.entropy_bits},
        {"lambda_rank", r.lambda_rank},
        {"choi_rank", r.choi_rank},
        {"classification", std::string(to_string(r.classification))},
        {"unitarily_correctable", r.unitarily_correctable},
        {"decoherence_free", r.decoherence_free},
        {"non_degenerate", r.non_degenerate},
        {"max_kl_residual", r.max_kl_residual},
    };
}

json to_json(const ChoiGram& gram) {
    return {{"matrix", to_json(gram.matrix)}, {"weights", gram.weights}, {"choi_rank", gram.choi_rank}};
}

json to_json(const LindbladReport& r) {
    return {{"S_rho", r.s_rho}, {"S_rho_prime", r.s_rho_prime}, {"S_sigma", r.s_sigma}, {"bounds_hold", r.holds}};
}

json to_json(const catalog::NamedInstance& inst) {
    json codes = json::array();
    for (const auto& [label, code] : inst.codes) codes.push_back({{"label", label}, {"code", to_json(code)}});
    json expected = json::array();
    for (const auto& e : inst.expected) {
        expected.push_back({{"label", e.label},
                            {"quantity", e.quantity},
                            {"value", e.value},
                            {"tolerance", e.tolerance},
                            {"provenance", e.provenance}});
    }
    json out = {
        {"name", inst.name},
        {"description", inst.description},
        {"channel", to_json(inst.channel)},
        {"codes", std::move(codes)},
        {"expected", std::move(expected)},
    };
    if (inst.unitary) {
        out["unitary"] = to_json(*inst.unitary);
        out["p"] = inst.p;
        out["k"] = inst.code_rank;
    }
    return out;
}

Complex complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw InputError("complex numbers must be [re, im]");
    }
    const Complex z{j[0].get<double>(), j[1].get<double>()};
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("non-finite complex number");
    return z;
}

Vector vector_from_json(const json& j) {
    if (!j.is_array()) throw InputError("vectors must be arrays of [re, im]");
    std::vector<Complex> entries;
    for (const auto& e : j) entries.push_back(complex_from_json(e));
    return Vector(std::move(entries));
}

Matrix matrix_from_json(const json& j) {
    const auto rows = field(j, "rows").get<std::size_t>();
    const auto cols = field(j, "cols").get<std::size_t>();
    const auto& data = field(j, "data");
    if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
    if (!data.is_array() || data.size() != rows * cols) throw InputError("matrix data must hold rows*cols entries");
    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (const auto& e : data) entries.push_back(complex_from_json(e));
    return Matrix(rows, cols, std::move(entries));
}

QuantumChannel channel_from_json(const json& j) {
    const auto dim = field(j, "dim").get<std::size_t>();
    const auto& kraus = field(j, "kraus");
    if (!kraus.is_array() || kraus.empty()) throw InputError("channel needs a non-empty kraus list");
    std::vector<Matrix> ops;
    for (const auto& k : kraus) ops.push_back(matrix_from_json(k));
    QuantumChannel c(std::move(ops));
    if (c.dim() != dim) throw InputError("channel dim does not match its Kraus operators");
    return c;
}

CodeSubspace code_from_json(const json& j, const ToleranceConfig& tol) {
    const auto dim = field(j, "dim").get<std::size_t>();
    const auto& basis = field(j, "basis");
    if (!basis.is_array() || basis.empty()) throw InputError("code needs a non-empty basis");
    std::vector<Vector> kets;
    for (const auto& b : basis) kets.push_back(vector_from_json(b));
    return CodeSubspace(dim, std::move(kets), tol);
}

ToleranceConfig tolerances_from_json(const json& j, ToleranceConfig base) {
    if (!j.is_object()) throw InputError("tolerance file must hold an object");
    auto read = [&](const char* key, double& slot) {
        if (j.contains(key)) slot = j.at(key).get<double>();
    };
    read("eps_rank", base.eps_rank);
    read("eps_kl", base.eps_kl);
    read("eps_geom", base.eps_geom);
    read("eps_eig", base.eps_eig);
    base.validate();
    return base;
}

}  // namespace qcent::io
