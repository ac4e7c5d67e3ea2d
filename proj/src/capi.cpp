#include "hodgehyp/hodgehyp.h"

#include <cstring>
#include <string>

#include "hodgehyp/serialize.hpp"
#include "hodgehyp/verify.hpp"

struct hh_params {
    hodgehyp::HypergeometricParams value;
};

struct hh_profile {
    hodgehyp::HodgeProfile value;
};

namespace {

thread_local std::string last_error;

hh_status status_of(hodgehyp::ErrorCode code)
{
    using hodgehyp::ErrorCode;
    switch (code) {
    case ErrorCode::Parse: return HH_PARSE_ERROR;
    case ErrorCode::ReducibleInput: return HH_REDUCIBLE;
    case ErrorCode::UnknownData: return HH_UNKNOWN_DATA;
    case ErrorCode::InvalidArgument:
    case ErrorCode::IndexOutOfRange: return HH_INVALID_ARGUMENT;
    case ErrorCode::NoValidPeel:
    case ErrorCode::InternalUnknownConsulted: return HH_INTERNAL;
    }
    return HH_INTERNAL;
}

template <class F>
hh_status guarded(F&& f)
{
    try {
        last_error.clear();
        return f();
    } catch (const hodgehyp::Error& e) {
        last_error = std::string(hodgehyp::error_code_name(e.code())) + ": " + e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        last_error = std::string("internal: ") + e.what();
        return HH_INTERNAL;
    }
}

hh_status missing(const char* what)
{
    last_error = std::string("invalid_argument: null ") + what;
    return HH_INVALID_ARGUMENT;
}

char* dup(const std::string& s)
{
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hodgehyp::EngineChoice engine_of(hh_engine e)
{
    switch (e) {
    case HH_ENGINE_CLOSED: return hodgehyp::EngineChoice::Closed;
    case HH_ENGINE_RECURSIVE: return hodgehyp::EngineChoice::Recursive;
    case HH_ENGINE_BOTH: return hodgehyp::EngineChoice::Both;
    }
    throw hodgehyp::Error(hodgehyp::ErrorCode::InvalidArgument, "unknown engine");
}

} // namespace

extern "C" {

const char* hh_version(void) { return "1.0.0"; }

const char* hh_last_error(void) { return last_error.c_str(); }

void hh_string_free(char* s) { delete[] s; }

hh_status hh_params_parse(const char* alpha_csv, const char* beta_csv, hh_params** out)
{
    if (!alpha_csv || !beta_csv || !out)
        return missing("argument");
    return guarded([&] {
        *out = new hh_params{hodgehyp::HypergeometricParams::parse(alpha_csv, beta_csv)};
        return HH_OK;
    });
}

hh_status hh_params_from_json(const char* json, hh_params** out)
{
    if (!json || !out)
        return missing("argument");
    return guarded([&] {
        const auto j = [&] {
            try {
                return hodgehyp::Json::parse(json);
            } catch (const hodgehyp::Json::exception& e) {
                throw hodgehyp::Error(hodgehyp::ErrorCode::Parse, e.what());
            }
        }();
        *out = new hh_params{hodgehyp::params_from_json(j)};
        return HH_OK;
    });
}

void hh_params_free(hh_params* params) { delete params; }

size_t hh_params_size(const hh_params* params) { return params ? params->value.size() : 0; }

int hh_params_is_irreducible(const hh_params* params) { return params && params->value.is_irreducible() ? 1 : 0; }

hh_status hh_profile_compute(const hh_params* params, hh_engine engine, hh_profile** out)
{
    if (!params || !out)
        return missing("argument");
    return guarded([&] {
        switch (engine) {
        case HH_ENGINE_CLOSED: *out = new hh_profile{hodgehyp::profile_closed(params->value)}; return HH_OK;
        case HH_ENGINE_RECURSIVE: *out = new hh_profile{hodgehyp::profile_recursive(params->value)}; return HH_OK;
        case HH_ENGINE_BOTH: break;
        }
        throw hodgehyp::Error(hodgehyp::ErrorCode::InvalidArgument, "a single profile needs the closed or recursive engine");
    });
}

hh_status hh_profile_from_json(const char* json, hh_profile** out)
{
    if (!json || !out)
        return missing("argument");
    return guarded([&] {
        hodgehyp::Json j;
        try {
            j = hodgehyp::Json::parse(json);
        } catch (const hodgehyp::Json::exception& e) {
            throw hodgehyp::Error(hodgehyp::ErrorCode::Parse, e.what());
        }
        *out = new hh_profile{hodgehyp::profile_from_json(j)};
        return HH_OK;
    });
}

void hh_profile_free(hh_profile* profile) { delete profile; }

int hh_profile_rank(const hh_profile* profile) { return profile ? profile->value.rank : 0; }

hh_status hh_profile_hodge_number(const hh_profile* profile, int p, int64_t* out)
{
    if (!profile || !out)
        return missing("argument");
    const auto it = profile->value.h.find(p);
    *out = it == profile->value.h.end() ? 0 : it->second;
    return HH_OK;
}

hh_status hh_profile_equal_up_to_shift(const hh_profile* a, const hh_profile* b, int* has_shift, int* shift)
{
    if (!a || !b || !has_shift || !shift)
        return missing("argument");
    return guarded([&] {
        const auto s = hodgehyp::equal_up_to_shift(a->value, b->value);
        *has_shift = s ? 1 : 0;
        *shift = s.value_or(0);
        return HH_OK;
    });
}

hh_status hh_profile_to_json(const hh_profile* profile, char** out)
{
    if (!profile || !out)
        return missing("argument");
    return guarded([&] {
        *out = dup(hodgehyp::profile_to_json(profile->value).dump());
        return HH_OK;
    });
}

hh_status hh_compute_document(const hh_params* params, const hh_compute_options* options, char** out)
{
    if (!params || !options || !out)
        return missing("argument");
    return guarded([&] {
        const auto doc = hodgehyp::compute_document(params->value, engine_of(options->engine), options->normalize != 0);
        *out = dup(options->format == HH_FORMAT_TSV ? hodgehyp::document_to_tsv(doc)
                                                     : hodgehyp::document_to_json(doc).dump(2) + "\n");
        return HH_OK;
    });
}

hh_status hh_batch_line(const char* line, const hh_compute_options* options, char** out)
{
    if (!line || !options || !out)
        return missing("argument");
    return guarded([&] {
        *out = dup(hodgehyp::batch_line(line, engine_of(options->engine), options->normalize != 0));
        return HH_OK;
    });
}

hh_status hh_verify(const hh_verify_options* options, char** out)
{
    if (!options || !out)
        return missing("argument");
    return guarded([&] {
        hodgehyp::SweepSpec spec;
        spec.n_max = options->n_max;
        spec.den_max = options->den_max;
        if (options->sample)
            spec.sample = options->sample;
        spec.seed = options->seed;
        spec.inject_fault = options->inject_fault != 0;
        const auto result = hodgehyp::run_sweep(spec);

        hodgehyp::Json j;
        j["schema_version"] = hodgehyp::kSchemaVersion;
        j["sweep"] = {{"n_max", spec.n_max},
                      {"den_max", spec.den_max},
                      {"mode", spec.sample ? "sample" : "exhaustive"},
                      {"sample", options->sample},
                      {"seed", spec.seed}};
        j["instances"] = result.instances;
        j["checks"] = result.checks;
        j["ok"] = result.ok();
        j["failures"] = hodgehyp::Json::array();
        for (const auto& f : result.failures)
            j["failures"].push_back(
                {{"check", f.check}, {"detail", f.detail}, {"params", f.params}, {"reproducer", f.reproducer}});
        *out = dup(j.dump(2) + "\n");
        return result.ok() ? HH_OK : HH_VERIFY_FAILED;
    });
}

} // extern "C"
