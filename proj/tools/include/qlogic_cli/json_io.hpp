#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include <qlogic/qlogic.hpp>

namespace qlogic::cli {

using Json = nlohmann::json;

/// Structurally invalid input document (wrong shape, missing field, bad reference).
class InputError : public Error {
   public:
    using Error::Error;
};

Json load_json_file(const std::filesystem::path &path);
std::string load_text_file(const std::filesystem::path &path);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json &j);

/// {"dim": d, "entries": [[[re, im], ...], ...]}, row-major.
Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

Projection projection_from_json(const Json &j, const Tolerance &tol);

/// {"dim": d, "entries": [{"child": <QSet or name>, "weight": <matrix>}]} or
/// {"dim": d, "check": "{{}, {{}}}"}.
QSet qset_from_json(const Json &j, const Registry &names, const Tolerance &tol);

/// {"dim": d (optional default), "names": {"x": <QSet>, ...}}. Names may refer to each
/// other in any order; cycles are rejected.
Registry registry_from_json(const Json &j, const Tolerance &tol);

/// A matrix document with an optional "spectrum" that must match the computed one.
Observable observable_from_json(const Json &j, const Tolerance &tol);

/// {"jumps": [...], "levels": [<matrix>, ...]}.
Json real_to_json(const QuantumReal &u);
QuantumReal real_from_json(const Json &j, const Tolerance &tol);

/// {"dim": d, "amplitudes": [[re, im], ...]}.
StateVector state_from_json(const Json &j);

}  // namespace qlogic::cli
