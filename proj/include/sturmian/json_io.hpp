#pragma once

#include <json.hpp>

#include "sturmian/census.hpp"
#include "sturmian/mapping.hpp"
#include "sturmian/returns.hpp"

namespace sturmian {

using Json = nlohmann::ordered_json;

// Census document. Counts travel as decimal strings so values beyond machine
// word size survive every consumer; methods not computed are null.
struct CensusDoc {
    long long n = 0;
    Int formula_count;
    std::optional<Int> brute_count;
    std::optional<Int> geometric_count;
    Int palindrome_formula;
    std::optional<Int> palindrome_brute;
};

Json to_json(const CensusDoc& doc);
Json to_json(const ImageSet& image);
Json to_json(const PartitionReport& report);
Json to_json(const ReturnReport& report);
Json to_json(const FullContactExtension& ext, const Word& input);
Json locate_json(const Word& w, const GridLine& line, const SplitSpec& split);

// Minimal structural schema checker for the documents above. A schema node
// is {"type": <name or list of names>} plus "fields" for objects and "items"
// for arrays; every listed field is required. Returns a human-readable
// complaint for the first mismatch, or an empty string when the document
// conforms.
std::string schema_mismatch(const Json& doc, const Json& schema);

}  // namespace sturmian
