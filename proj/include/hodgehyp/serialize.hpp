#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "hodgehyp/params.hpp"
#include "hodgehyp/recursion.hpp"

// JSON and TSV forms of profiles and output documents. Rationals are always
// "a/b" strings; counts and indices are JSON integers.

namespace hodgehyp {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

enum class EngineChoice { Closed, Recursive, Both };
const char* engine_choice_name(EngineChoice e);
EngineChoice parse_engine_choice(const std::string& text);

enum class OutputFormat { Json, Tsv };

struct OutputDocument {
    std::string schema_version = kSchemaVersion;
    HypergeometricParams params{{Residue{}}, {Residue{}}};
    EngineChoice engine = EngineChoice::Closed;
    int normalization = 0;
    std::map<std::string, HodgeProfile> profiles;
    std::optional<EngineReport> report;
};

Json table_to_json(const LocalHodgeTable& table);
LocalHodgeTable table_from_json(const Json& j);
Json profile_to_json(const HodgeProfile& profile);
HodgeProfile profile_from_json(const Json& j);
Json report_to_json(const EngineReport& report);
EngineReport report_from_json(const Json& j);
Json params_to_json(const HypergeometricParams& params);
// {"alpha": [...], "beta": [...]}; entries are "a/b" strings or integers.
HypergeometricParams params_from_json(const Json& j);

Json document_to_json(const OutputDocument& doc);
OutputDocument document_from_json(const Json& j);

bool profiles_identical(const HodgeProfile& a, const HodgeProfile& b);
bool documents_identical(const OutputDocument& a, const OutputDocument& b);

// Runs the selected engine(s). normalize moves every profile by the shift
// that puts min p of the first profile at 0 and records it.
OutputDocument compute_document(const HypergeometricParams& params, EngineChoice engine, bool normalize);

// engine, table, point, residue, ell, p, value
std::string document_to_tsv(const OutputDocument& doc);

// One JSON-lines record in, one out; failures come back as an inline error
// object rather than an exception.
std::string batch_line(const std::string& line, EngineChoice engine, bool normalize);

} // namespace hodgehyp
