#include "hodgehyp/serialize.hpp"

#include <sstream>

namespace hodgehyp {

namespace {

const char* kind_name(TableKind k) { return k == TableKind::NearbyPrimitive ? "nearby" : "vanishing"; }

TableKind parse_kind(const std::string& s)
{
    if (s == "nearby")
        return TableKind::NearbyPrimitive;
    if (s == "vanishing")
        return TableKind::VanishingPrimitive;
    throw Error(ErrorCode::Parse, "unknown table kind '" + s + "'");
}

Json graded_to_json(const GradedCounts& g)
{
    Json j = Json::object();
    for (const auto& [p, v] : g)
        j[std::to_string(p)] = v;
    return j;
}

GradedCounts graded_from_json(const Json& j)
{
    GradedCounts g;
    for (const auto& [key, v] : j.items()) {
        std::size_t used = 0;
        const int p = std::stoi(key, &used);
        if (used != key.size())
            throw Error(ErrorCode::Parse, "bad p-index '" + key + "'");
        add_graded(g, p, v.get<std::int64_t>());
    }
    return g;
}

Residue residue_from_json(const Json& j)
{
    if (j.is_string())
        return Residue::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Residue::of(Rational(j.get<long>()));
    throw Error(ErrorCode::Parse, "rational must be an \"a/b\" string, got " + j.dump());
}

Json residues_to_json(const std::vector<Residue>& v)
{
    Json j = Json::array();
    for (const auto& r : v)
        j.push_back(r.str());
    return j;
}

std::vector<Residue> residues_from_json(const Json& j)
{
    if (!j.is_array())
        throw Error(ErrorCode::Parse, "expected an array of rationals");
    std::vector<Residue> out;
    for (const auto& x : j)
        out.push_back(residue_from_json(x));
    return out;
}

Json strings_to_json(const std::vector<std::string>& v) { return Json(v); }

template <class F>
auto translate_json_errors(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw Error(ErrorCode::Parse, e.what());
    } catch (const std::out_of_range& e) {
        throw Error(ErrorCode::Parse, e.what());
    }
}

Json error_object(const std::string& code, const std::string& message, const std::string& input)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = {{"code", code}, {"message", message}};
    j["input"] = input;
    return j;
}

} // namespace

const char* engine_choice_name(EngineChoice e)
{
    switch (e) {
    case EngineChoice::Closed: return "closed";
    case EngineChoice::Recursive: return "recursive";
    case EngineChoice::Both: return "both";
    }
    return "?";
}

EngineChoice parse_engine_choice(const std::string& text)
{
    if (text == "closed")
        return EngineChoice::Closed;
    if (text == "recursive")
        return EngineChoice::Recursive;
    if (text == "both")
        return EngineChoice::Both;
    throw Error(ErrorCode::Parse, "engine must be closed, recursive or both, got '" + text + "'");
}

Json table_to_json(const LocalHodgeTable& table)
{
    Json entries = Json::array();
    for (const auto& [key, m] : table.entries())
        entries.push_back({{"residue", key.residue.str()}, {"ell", key.ell}, {"p", key.p}, {"mult", m}});
    Json unknown = Json::array();
    for (const auto& slot : table.unknown_slots())
        unknown.push_back({{"residue", slot.residue.str()}, {"ell", slot.ell}});
    return {{"point", table.point().str()}, {"kind", kind_name(table.kind())}, {"entries", entries},
            {"unknown", unknown}};
}

LocalHodgeTable table_from_json(const Json& j)
{
    return translate_json_errors([&] {
        LocalHodgeTable t(SingularPoint::parse(j.at("point").get<std::string>()),
                          parse_kind(j.at("kind").get<std::string>()));
        for (const auto& u : j.at("unknown"))
            t.mark_unknown(residue_from_json(u.at("residue")), u.at("ell").get<int>());
        for (const auto& e : j.at("entries"))
            t.add(residue_from_json(e.at("residue")), e.at("ell").get<int>(), e.at("p").get<int>(),
                  e.at("mult").get<Multiplicity>());
        return t;
    });
}

Json profile_to_json(const HodgeProfile& profile)
{
    Json j;
    j["rank"] = profile.rank;
    j["nu_zero"] = table_to_json(profile.nu_zero);
    j["nu_infinity"] = table_to_json(profile.nu_infinity);
    j["nu_finite"] = Json::array();
    for (const auto& t : profile.nu_finite)
        j["nu_finite"].push_back(table_to_json(t));
    j["mu_finite"] = Json::array();
    for (const auto& t : profile.mu_finite)
        j["mu_finite"].push_back(table_to_json(t));
    j["h"] = graded_to_json(profile.h);
    j["delta"] = profile.delta ? graded_to_json(*profile.delta) : Json(nullptr);
    j["normalization_note"] = profile.normalization_note;
    j["monodromy"] = Json::array();
    for (const auto& js : profile.monodromy) {
        Json blocks = Json::array();
        for (const auto& b : js.blocks)
            blocks.push_back({{"residue", b.residue.str()}, {"size", b.size}});
        j["monodromy"].push_back({{"point", js.point.str()}, {"blocks", blocks}});
    }
    j["notes"] = profile.notes;
    return j;
}

HodgeProfile profile_from_json(const Json& j)
{
    return translate_json_errors([&] {
        HodgeProfile p;
        p.rank = j.at("rank").get<int>();
        p.nu_zero = table_from_json(j.at("nu_zero"));
        p.nu_infinity = table_from_json(j.at("nu_infinity"));
        for (const auto& t : j.at("nu_finite"))
            p.nu_finite.push_back(table_from_json(t));
        for (const auto& t : j.at("mu_finite"))
            p.mu_finite.push_back(table_from_json(t));
        p.h = graded_from_json(j.at("h"));
        if (!j.at("delta").is_null())
            p.delta = graded_from_json(j.at("delta"));
        p.normalization_note = j.at("normalization_note").get<std::string>();
        for (const auto& m : j.at("monodromy")) {
            JordanStructure js{SingularPoint::parse(m.at("point").get<std::string>()), {}};
            for (const auto& b : m.at("blocks"))
                js.blocks.push_back({residue_from_json(b.at("residue")), b.at("size").get<int>()});
            p.monodromy.push_back(std::move(js));
        }
        p.notes = j.at("notes").get<std::map<std::string, std::string>>();
        return p;
    });
}

Json report_to_json(const EngineReport& report)
{
    Json j;
    j["agree"] = report.agree;
    j["shift"] = report.shift ? Json(*report.shift) : Json(nullptr);
    j["mismatches"] = strings_to_json(report.mismatches);
    j["lemma37_ok"] = report.lemma37_ok;
    j["lemma37_failures"] = strings_to_json(report.lemma37_failures);
    j["error"] = report.error ? Json(*report.error) : Json(nullptr);
    if (report.error)
        j["summary"] = "error";
    else if (report.agree)
        j["summary"] = "agree, shift 0";
    else
        j["summary"] = report.shift ? "disagree, shift " + std::to_string(*report.shift) : "disagree, no shift";
    return j;
}

EngineReport report_from_json(const Json& j)
{
    return translate_json_errors([&] {
        EngineReport r;
        r.agree = j.at("agree").get<bool>();
        if (!j.at("shift").is_null())
            r.shift = j.at("shift").get<int>();
        r.mismatches = j.at("mismatches").get<std::vector<std::string>>();
        r.lemma37_ok = j.at("lemma37_ok").get<bool>();
        r.lemma37_failures = j.at("lemma37_failures").get<std::vector<std::string>>();
        if (!j.at("error").is_null())
            r.error = j.at("error").get<std::string>();
        return r;
    });
}

Json params_to_json(const HypergeometricParams& params)
{
    return {{"alpha", residues_to_json(params.alpha())}, {"beta", residues_to_json(params.beta())}};
}

HypergeometricParams params_from_json(const Json& j)
{
    return translate_json_errors([&] {
        if (!j.is_object())
            throw Error(ErrorCode::Parse, "expected an object with alpha and beta");
        auto alpha = residues_from_json(j.at("alpha"));
        auto beta = residues_from_json(j.at("beta"));
        if (alpha.size() != beta.size())
            throw Error(ErrorCode::Parse, "alpha and beta must have the same length");
        if (alpha.empty())
            throw Error(ErrorCode::Parse, "alpha and beta must be non-empty");
        return HypergeometricParams(std::move(alpha), std::move(beta));
    });
}

Json document_to_json(const OutputDocument& doc)
{
    Json j;
    j["schema_version"] = doc.schema_version;
    j["params"] = params_to_json(doc.params);
    j["engine"] = engine_choice_name(doc.engine);
    j["normalization"] = doc.normalization;
    j["profiles"] = Json::object();
    for (const auto& [name, p] : doc.profiles)
        j["profiles"][name] = profile_to_json(p);
    if (doc.report)
        j["report"] = report_to_json(*doc.report);
    return j;
}

OutputDocument document_from_json(const Json& j)
{
    return translate_json_errors([&] {
        OutputDocument doc;
        doc.schema_version = j.at("schema_version").get<std::string>();
        if (doc.schema_version != kSchemaVersion)
            throw Error(ErrorCode::Parse, "unsupported schema_version " + doc.schema_version);
        doc.params = params_from_json(j.at("params"));
        doc.engine = parse_engine_choice(j.at("engine").get<std::string>());
        doc.normalization = j.at("normalization").get<int>();
        for (const auto& [name, p] : j.at("profiles").items())
            doc.profiles.emplace(name, profile_from_json(p));
        if (j.contains("report"))
            doc.report = report_from_json(j.at("report"));
        return doc;
    });
}

bool profiles_identical(const HodgeProfile& a, const HodgeProfile& b)
{
    return same_invariants(a, b) && a.normalization_note == b.normalization_note && a.monodromy == b.monodromy &&
           a.notes == b.notes;
}

bool documents_identical(const OutputDocument& a, const OutputDocument& b)
{
    if (a.schema_version != b.schema_version || !(a.params == b.params) || a.engine != b.engine ||
        a.normalization != b.normalization || a.profiles.size() != b.profiles.size())
        return false;
    for (const auto& [name, p] : a.profiles) {
        const auto it = b.profiles.find(name);
        if (it == b.profiles.end() || !profiles_identical(p, it->second))
            return false;
    }
    if (a.report.has_value() != b.report.has_value())
        return false;
    return !a.report || report_to_json(*a.report) == report_to_json(*b.report);
}

OutputDocument compute_document(const HypergeometricParams& params, EngineChoice engine, bool normalize)
{
    params.require_irreducible();
    OutputDocument doc;
    doc.params = params;
    doc.engine = engine;
    if (engine != EngineChoice::Recursive)
        doc.profiles.emplace("closed", profile_closed(params));
    if (engine != EngineChoice::Closed)
        doc.profiles.emplace("recursive", profile_recursive(params));
    if (engine == EngineChoice::Both)
        doc.report = compare_profiles(params, doc.profiles.at("closed"), doc.profiles.at("recursive"));
    if (normalize) {
        const auto& first = engine == EngineChoice::Recursive ? doc.profiles.at("recursive") : doc.profiles.at("closed");
        doc.normalization = -profile_min_p(first).value_or(0);
        for (auto& [name, p] : doc.profiles)
            p = profile_shift(p, doc.normalization);
    }
    return doc;
}

std::string document_to_tsv(const OutputDocument& doc)
{
    std::ostringstream out;
    out << "engine\ttable\tpoint\tresidue\tell\tp\tvalue\n";
    for (const auto& [name, p] : doc.profiles) {
        auto emit_table = [&](const char* label, const LocalHodgeTable& t) {
            for (const auto& slot : t.unknown_slots())
                out << name << '\t' << label << '\t' << t.point().str() << '\t' << slot.residue.str() << '\t'
                    << slot.ell << "\t-\t?\n";
            for (const auto& [key, m] : t.entries())
                out << name << '\t' << label << '\t' << t.point().str() << '\t' << key.residue.str() << '\t' << key.ell
                    << '\t' << key.p << '\t' << m << '\n';
        };
        emit_table("nu", p.nu_zero);
        for (const auto& t : p.nu_finite)
            emit_table("nu", t);
        emit_table("nu", p.nu_infinity);
        for (const auto& t : p.mu_finite)
            emit_table("mu", t);
        for (const auto& [q, v] : p.h)
            out << name << "\th\t-\t-\t-\t" << q << '\t' << v << '\n';
        if (p.delta)
            for (const auto& [q, v] : *p.delta)
                out << name << "\tdelta\t-\t-\t-\t" << q << '\t' << v << '\n';
    }
    return out.str();
}

std::string batch_line(const std::string& line, EngineChoice engine, bool normalize)
{
    try {
        const Json in = translate_json_errors([&] { return Json::parse(line); });
        if (in.is_object() && in.contains("engine"))
            engine = translate_json_errors([&] { return parse_engine_choice(in.at("engine").get<std::string>()); });
        return document_to_json(compute_document(params_from_json(in), engine, normalize)).dump();
    } catch (const Error& e) {
        return error_object(error_code_name(e.code()), e.what(), line).dump();
    } catch (const std::exception& e) {
        return error_object("internal", e.what(), line).dump();
    }
}

} // namespace hodgehyp
