#include "sturmian/json_io.hpp"

namespace sturmian {

namespace {

Json int_or_null(const std::optional<Int>& v) {
    if (!v) return nullptr;
    return v->str();
}

}  // namespace

Json to_json(const CensusDoc& doc) {
    Json j;
    j["n"] = doc.n;
    j["formula_count"] = doc.formula_count.str();
    j["brute_count"] = int_or_null(doc.brute_count);
    j["geometric_count"] = int_or_null(doc.geometric_count);
    j["palindrome_formula"] = doc.palindrome_formula.str();
    j["palindrome_brute"] = int_or_null(doc.palindrome_brute);
    return j;
}

Json to_json(const ImageSet& image) {
    Json j;
    j["line"] = image.line.str();
    j["n"] = image.n;
    j["cardinality"] = static_cast<long long>(image.entries.size());
    Json entries = Json::array();
    for (const ImageEntry& e : image.entries) {
        Json entry;
        entry["word"] = e.word.str();
        entry["mode"] = split_mode_name(e.split.mode);
        entry["count"] = e.split.count;
        entries.push_back(std::move(entry));
    }
    j["words"] = std::move(entries);
    return j;
}

Json to_json(const PartitionReport& report) {
    Json j;
    j["n"] = report.n;
    j["brute_count"] = report.brute_count;
    j["geometric_sum"] = report.geometric_sum;
    Json dup = Json::array(), mis = Json::array();
    for (const Word& w : report.duplicates) dup.push_back(w.str());
    for (const Word& w : report.missing) mis.push_back(w.str());
    j["duplicates"] = std::move(dup);
    j["missing"] = std::move(mis);
    j["pass"] = report.pass;
    return j;
}

Json to_json(const ReturnReport& report) {
    Json j;
    j["factor"] = report.factor.str();
    j["line"] = report.line.str();
    j["horizon"] = report.horizon;
    j["occurrences"] = report.occurrence_positions;
    j["start_residues"] = report.start_residues;
    Json interval;
    interval["c1"] = report.interval.c1;
    interval["c2"] = report.interval.c2;
    interval["wraps"] = report.interval.wraps;
    interval["contact"] = report.interval.contact;
    j["interval"] = std::move(interval);
    Json rets = Json::array(), distinct = Json::array();
    for (const Word& w : report.returns_in_order) rets.push_back(w.str());
    for (const Word& w : report.distinct_returns) distinct.push_back(w.str());
    j["returns"] = std::move(rets);
    j["distinct_returns"] = std::move(distinct);
    j["pass"] = report.pass;
    return j;
}

Json to_json(const FullContactExtension& ext, const Word& input) {
    Json j;
    j["word"] = input.str();
    j["extension"] = ext.word.str();
    j["line"] = ext.line.str();
    j["n0"] = static_cast<long long>(ext.word.size());
    return j;
}

Json locate_json(const Word& w, const GridLine& line, const SplitSpec& split) {
    Json j;
    j["word"] = w.str();
    j["line"] = line.str();
    j["mode"] = split_mode_name(split.mode);
    j["count"] = split.count;
    return j;
}

namespace {

bool type_matches(const Json& value, const std::string& name) {
    if (name == "integer") return value.is_number_integer();
    if (name == "string") return value.is_string();
    if (name == "boolean") return value.is_boolean();
    if (name == "null") return value.is_null();
    if (name == "object") return value.is_object();
    if (name == "array") return value.is_array();
    return false;
}

}  // namespace

std::string schema_mismatch(const Json& doc, const Json& schema) {
    const Json& type = schema.at("type");
    bool ok = false;
    if (type.is_string()) {
        ok = type_matches(doc, type.get<std::string>());
    } else {
        for (const Json& t : type) ok = ok || type_matches(doc, t.get<std::string>());
    }
    if (!ok) return "value " + doc.dump() + " does not match type " + type.dump();

    if (doc.is_object() && schema.contains("fields")) {
        for (const auto& [key, sub] : schema.at("fields").items()) {
            if (!doc.contains(key)) return "missing field '" + key + "'";
            std::string why = schema_mismatch(doc.at(key), sub);
            if (!why.empty()) return "field '" + key + "': " + why;
        }
    }
    if (doc.is_array() && schema.contains("items")) {
        for (const Json& item : doc) {
            std::string why = schema_mismatch(item, schema.at("items"));
            if (!why.empty()) return "array item: " + why;
        }
    }
    return "";
}

}  // namespace sturmian
