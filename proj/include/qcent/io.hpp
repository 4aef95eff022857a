#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qcent/binary_unitary.hpp"
#include "qcent/catalog.hpp"
#include "qcent/code.hpp"
#include "qcent/entropy.hpp"

namespace qcent::io {

using json = nlohmann::json;

// Serializes with 17 significant digits for every floating-point number.
std::string dump(const json& j, int indent = 2);

// Throws InputError on a missing file or a parse error.
json read_json_file(const std::filesystem::path& path);

// Complex numbers are [re, im]; matrices {"rows", "cols", "data": [[re, im], ...]} row-major.
json to_json(Complex z);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const QuantumChannel& c);
json to_json(const CodeSubspace& code);
json to_json(const NumRangeRegion& region);
json to_json(const ErrorCorrectionMatrix& lambda);
json to_json(const CodeReport& report);
json to_json(const ChoiGram& gram);
json to_json(const LindbladReport& report);
json to_json(const catalog::NamedInstance& instance);

Complex complex_from_json(const json& j);
Vector vector_from_json(const json& j);
Matrix matrix_from_json(const json& j);
QuantumChannel channel_from_json(const json& j);
CodeSubspace code_from_json(const json& j, const ToleranceConfig& tol = {});
// Fields missing from j keep the value in `base`.
ToleranceConfig tolerances_from_json(const json& j, ToleranceConfig base = {});

}  // namespace qcent::io
