#ifndef WITKIT_JSON_IO_HPP
#define WITKIT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "witkit/lab.hpp"
#include "witkit/matrix.hpp"
#include "witkit/povm.hpp"
#include "witkit/witness.hpp"

namespace witkit {

using Json = nlohmann::json;

/// {"rows": n, "cols": m, "entries": [[re, im], ...]} row-major.
Json matrix_to_json(const CMatrix& x);

/// Throws IoError on malformed shape, entry count, or non-finite values.
CMatrix matrix_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json state_to_json(const DensityState& s);

Json povm_to_json(const SymmetricPovm& povm, const PovmValidation& validation);
SymmetricPovm povm_from_json(const Json& j);

Json certificate_to_json(const CertificateReport& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace witkit

#endif
