#pragma once

#include "lazyhom/abelian.hpp"
#include "lazyhom/checks.hpp"
#include "lazyhom/hopf.hpp"
#include "lazyhom/oracles.hpp"
#include "lazyhom/presented.hpp"

#include <json.hpp>

#include <string>

namespace lazyhom {

using Json = nlohmann::ordered_json;

/// Hopf algebra file format:
///   {"name", "dim", "basis": [labels], "unit": [q], "counit": [q],
///    "mult": [i][j][k]   coefficient of e_k in e_i e_j,
///    "comult": [i][j][k] coefficient of e_j ⊗ e_k in Δ(e_i),
///    "antipode": [i][j]  coefficient of e_j in S(e_i)}
/// Rationals are strings "p" or "p/q"; plain JSON integers are accepted.
FinDimHopf hopf_from_json(const Json& j);
Json hopf_to_json(const FinDimHopf& h);

/// {"labels": [...], "unit": "1", "mult": [["λ", "μ", "ν", m], ...]}
FusionRing fusion_from_json(const Json& j);
Json fusion_to_json(const FusionRing& f);

/// Reads and parses a JSON file. Throws UsageError on I/O failure or with
/// line and column of a syntax error.
Json read_json_file(const std::string& path, std::string* raw_bytes = nullptr);

/// "fnv1a64:<16 hex digits>" of the given bytes.
std::string fingerprint(const std::string& bytes);

Json to_json(const FPAbelianGroup& g);
Json to_json(const HomologyDescriptor& d);
Json to_json(const CharacterReport& c);
Json to_json(const Checks& checks);
Json to_json(const HopfReport& r);

}  // namespace lazyhom
