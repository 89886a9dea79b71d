#include "ramsey/serialize.hpp"

#include <algorithm>

#include "ramsey/error.hpp"
#include "ramsey/ncolor.hpp"

namespace ramsey {

using nlohmann::json;

json to_json(const RamseyResult& result) {
  json doc;
  doc["r"] = result.r;
  doc["n"] = result.n;
  const bool symmetric = std::adjacent_find(result.q.begin(), result.q.end(), std::not_equal_to<>{}) == result.q.end();
  if (symmetric && !result.q.empty()) {
    doc["h"] = result.q.front();
  } else {
    doc["q"] = result.q;
  }
  doc["value"] = result.value ? json(*result.value) : json(nullptr);
  doc["lower_bound"] = result.lower_bound;
  doc["exhausted"] = result.exhausted;
  doc["nodes"] = result.nodes;
  doc["witness"] = to_ncolor(result.witness);
  return doc;
}

json to_json(const PHVerdict& verdict) {
  json doc;
  doc["r"] = verdict.r;
  doc["n"] = verdict.n;
  doc["h"] = verdict.h;
  doc["k"] = verdict.k;
  doc["verdict"] = to_string(verdict.status);
  doc["counterexample"] = verdict.counterexample ? json(to_ncolor(*verdict.counterexample)) : json(nullptr);
  doc["nodes"] = verdict.nodes;
  return doc;
}

json to_json(const std::optional<MonoWitness>& witness) {
  json doc;
  doc["found"] = witness.has_value();
  if (witness) {
    doc["W"] = witness->W;
    doc["color"] = witness->color;
  }
  return doc;
}

json trace_json(const ExtractTrace& trace) {
  return json{{"pivots", trace.pivots},
              {"set_sizes", trace.set_sizes},
              {"colors", trace.colors},
              {"class_counts", trace.class_counts},
              {"final_color", trace.final_color},
              {"evaluations", trace.evaluations}};
}

json to_json(const ExtractResult& result) {
  json doc;
  doc["kind"] = "extraction";
  doc["found"] = result.W.has_value();
  doc["W"] = result.W ? json(*result.W) : json(nullptr);
  doc["color"] = result.W ? json(result.color) : json(nullptr);
  if (!result.W) doc["failure"] = result.failure;
  doc["trace"] = trace_json(result.trace);
  return doc;
}

namespace omega2 {

json to_json(const Certificate& cert) {
  if (const auto* red = std::get_if<RedCliqueCert>(&cert)) {
    json vs = json::array();
    for (const auto& v : red->vertices) vs.push_back({v.a, v.b});
    return json{{"kind", "red"}, {"vertices", vs}};
  }
  const auto& blue = std::get<BlueOmega2Cert>(cert);
  json chains = json::object();
  for (const auto& [p, exps] : blue.chains) chains[std::to_string(p)] = exps;
  return json{{"kind", "blue"},
              {"chains", chains},
              {"truncation",
               {{"P", blue.truncation.P}, {"E", blue.truncation.E}, {"chain_len", blue.truncation.chain_len}}}};
}

Certificate certificate_from_json(const json& doc) {
  try {
    const auto kind = doc.at("kind").get<std::string>();
    if (kind == "red") {
      RedCliqueCert cert;
      for (const auto& v : doc.at("vertices")) {
        if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::ParseError, "red vertex must be [a,b]");
        cert.vertices.push_back({v[0].get<std::uint64_t>(), v[1].get<std::uint64_t>()});
      }
      return cert;
    }
    if (kind == "blue") {
      BlueOmega2Cert cert;
      for (const auto& [key, exps] : doc.at("chains").items()) {
        std::size_t used = 0;
        const auto p = std::stoull(key, &used);
        if (used != key.size()) throw Error(ErrorCode::ParseError, "chain key must be a prime");
        cert.chains[p] = exps.get<std::vector<std::uint64_t>>();
      }
      const auto& tr = doc.at("truncation");
      cert.truncation = {tr.at("P").get<std::uint64_t>(), tr.at("E").get<std::uint64_t>(),
                         tr.at("chain_len").get<std::size_t>()};
      return cert;
    }
    throw Error(ErrorCode::ParseError, "unknown certificate kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::out_of_range& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace omega2

}  // namespace ramsey
