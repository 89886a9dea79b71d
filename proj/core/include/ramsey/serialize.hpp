#pragma once

#include <nlohmann/json.hpp>

#include "ramsey/extract.hpp"
#include "ramsey/omega2.hpp"
#include "ramsey/ph.hpp"
#include "ramsey/search.hpp"

namespace ramsey {

// JSON documents emitted by the command-line tool. Colorings are embedded as
// coloring-spec text so that they can be written back to a file and re-read.

/// {"r","n","h" (or "q"),"value","lower_bound","exhausted","nodes","witness"}
nlohmann::json to_json(const RamseyResult& result);

/// {"r","n","h","k","verdict","counterexample","nodes"}
nlohmann::json to_json(const PHVerdict& verdict);

/// {"found":bool,"W":[...],"color":c}
nlohmann::json to_json(const std::optional<MonoWitness>& witness);

/// {"kind":"extraction","n","r","size","W","color","trace",...}
nlohmann::json to_json(const ExtractResult& result);
nlohmann::json trace_json(const ExtractTrace& trace);

namespace omega2 {

/// {"kind":"red","vertices":[[a,b],...]} or
/// {"kind":"blue","chains":{"2":[2,3,4],...},"truncation":{"P","E","chain_len"}}
nlohmann::json to_json(const Certificate& cert);
/// Inverse of to_json; throws ParseError on malformed input.
Certificate certificate_from_json(const nlohmann::json& doc);

}  // namespace omega2

}  // namespace ramsey
