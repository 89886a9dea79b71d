#include "ramsey_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ramsey/error.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/ncolor.hpp"
#include "ramsey/omega2.hpp"
#include "ramsey/ph.hpp"
#include "ramsey/search.hpp"
#include "ramsey/serialize.hpp"

namespace ramsey::cli {
namespace {

using nlohmann::json;

constexpr const char* kPhWarning =
    "warning: (r,n,h) exceeds (2,2,3). The least k with the strengthened property grows faster than any "
    "function Peano arithmetic proves total, so no fixed budget can be expected to settle it; "
    "exhaustion (exit 2) is the likely outcome.";

struct BudgetFlags {
  std::string preset = "default";
  std::optional<std::uint64_t> max_colorings;
  std::optional<std::uint64_t> max_subsets;
  std::optional<std::uint64_t> max_depth;

  void attach(CLI::App* cmd) {
    cmd->add_option("--budget", preset, "Budget preset: tiny, default or large")
        ->check(CLI::IsMember({"tiny", "default", "large"}));
    cmd->add_option("--max-colorings", max_colorings, "Override: adversary color assignments");
    cmd->add_option("--max-subsets", max_subsets, "Override: subsets examined by exhaustive searches");
    cmd->add_option("--max-depth", max_depth, "Override: largest vertex count a sweep reaches");
  }

  Budget resolve() const {
    Budget b = *Budget::preset(preset);
    if (max_colorings) b.max_colorings = *max_colorings;
    if (max_subsets) b.max_subsets = *max_subsets;
    if (max_depth) b.max_depth = *max_depth;
    return b;
  }
};

json budget_json(const Budget& b) {
  return json{{"max_colorings", b.max_colorings}, {"max_subsets", b.max_subsets}, {"max_depth", b.max_depth}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

json ph_witness_json(const std::optional<PHWitness>& w) {
  if (!w) return nullptr;
  return json{{"H", w->H}, {"color", w->color}};
}

// Command state. Each run_* returns an exit code and fills `doc`.
struct Commands {
  int jobs = 1;

  // ramsey-number
  struct {
    std::optional<int> r, n, h;
    std::vector<int> q;
    BudgetFlags budget;
  } rn;

  // find-mono
  struct {
    std::string file;
    int h = 0;
    BudgetFlags budget;
  } fm;

  // verify-witness
  struct {
    std::string file;
    std::optional<int> h, ph;
    std::vector<int> q;
    BudgetFlags budget;
  } vw;

  // ph-check, ph-number
  struct {
    std::optional<int> r, n, k;
    int h = 0;
    std::string file;
    BudgetFlags budget;
  } ph;

  // omega2-run
  struct {
    std::uint64_t seed = 0;
    int m = 0;
    std::string family = "oracle";
    omega2::PipelineParams params;
    BudgetFlags budget;
  } om;

  // extract
  struct {
    std::uint64_t seed = 0;
    int n = 0, r = 0;
    std::size_t size = 0;
    std::size_t budget = 500;
    Vertex first = 0;
    std::string family = "oracle";
    std::uint64_t max_evaluations = Budget::defaults().max_subsets;
  } ex;

  // verify-cert
  struct {
    std::string file;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> family;
  } vc;

  int ramsey_number(json& doc, std::ostream&) {
    const Budget budget = rn.budget.resolve();
    RamseyResult res;
    if (!rn.q.empty()) {
      if (rn.h) throw Error(ErrorCode::InvalidArgument, "give either --h or --q, not both");
      if (rn.r && *rn.r != static_cast<int>(rn.q.size())) {
        throw Error(ErrorCode::InvalidArgument, "--r must equal the number of --q entries");
      }
      res = asymmetric_number(rn.n.value_or(2), rn.q, budget, jobs);
    } else {
      if (!rn.r || !rn.h) throw Error(ErrorCode::InvalidArgument, "ramsey-number needs --r and --h (or --q)");
      res = ramsey::ramsey_number(*rn.r, rn.n.value_or(2), *rn.h, budget, jobs);
    }
    doc = to_json(res);
    doc["witness_verified"] = verify_avoidance(res.witness, res.q);
    doc["budget"] = budget_json(budget);
    return res.value ? kExitOk : kExitExhausted;
  }

  int find_mono(json& doc, std::ostream&) {
    const auto graph = load_ncolor(fm.file);
    doc = to_json(ramsey::find_mono(graph, fm.h, fm.budget.resolve()));
    doc["h"] = fm.h;
    return kExitOk;
  }

  int verify_witness(json& doc, std::ostream&) {
    const int given = (vw.h ? 1 : 0) + (vw.q.empty() ? 0 : 1) + (vw.ph ? 1 : 0);
    if (given != 1) throw Error(ErrorCode::InvalidArgument, "verify-witness needs exactly one of --h, --q, --ph");
    const auto graph = load_ncolor(vw.file);
    if (vw.ph) {
      const auto w = check_coloring_ph(graph, *vw.ph, vw.budget.resolve());
      doc = json{{"avoids", !w.has_value()}, {"ph", *vw.ph}, {"witness", ph_witness_json(w)}};
    } else if (vw.h) {
      doc = json{{"avoids", verify_avoidance(graph, *vw.h)}, {"h", *vw.h}};
    } else {
      doc = json{{"avoids", verify_avoidance(graph, vw.q)}, {"q", vw.q}};
    }
    doc["vertices"] = graph.vertices().size();
    return kExitOk;
  }

  int ph_check(json& doc, std::ostream& err) {
    if (!ph.file.empty()) {
      const auto graph = load_ncolor(ph.file);
      const auto w = check_coloring_ph(graph, ph.h, ph.budget.resolve());
      doc = json{{"h", ph.h}, {"k", graph.vertices().size()}, {"witness", ph_witness_json(w)}};
      return kExitOk;
    }
    if (!ph.r || !ph.n || !ph.k) throw Error(ErrorCode::InvalidArgument, "ph-check needs --file or --r --n --h --k");
    if (ph_parameters_large(*ph.r, *ph.n, ph.h)) err << kPhWarning << '\n';
    const auto verdict = holds_p(*ph.r, *ph.n, ph.h, *ph.k, ph.budget.resolve(), jobs);
    doc = to_json(verdict);
    return verdict.status == PHStatus::Unknown ? kExitExhausted : kExitOk;
  }

  int ph_number(json& doc, std::ostream& err) {
    if (!ph.r || !ph.n) throw Error(ErrorCode::InvalidArgument, "ph-number needs --r --n --h");
    if (ph_parameters_large(*ph.r, *ph.n, ph.h)) err << kPhWarning << '\n';
    const Budget budget = ph.budget.resolve();
    const auto res = ramsey::ph_number(*ph.r, *ph.n, ph.h, budget, jobs);
    json verdicts = json::array();
    for (const auto& v : res.verdicts) {
      verdicts.push_back(json{{"k", v.k}, {"verdict", to_string(v.status)}, {"nodes", v.nodes}});
    }
    doc = json{{"r", *ph.r},
               {"n", *ph.n},
               {"h", ph.h},
               {"value", res.value ? json(*res.value) : json(nullptr)},
               {"lower_bound", res.lower_bound},
               {"verdict", res.value ? "holds" : "unknown"},
               {"verdicts", verdicts},
               {"nodes", res.nodes},
               {"budget", budget_json(budget)}};
    if (!res.verdicts.empty()) {
      const auto& last = res.verdicts.back();
      doc["counterexample"] = last.counterexample ? json(to_ncolor(*last.counterexample)) : json(nullptr);
    }
    return res.value ? kExitOk : kExitExhausted;
  }

  int omega2_run(json& doc, std::ostream&) {
    const auto coloring = omega2::coloring_family(om.family, om.seed);
    if (!coloring) throw Error(ErrorCode::InvalidArgument, "unknown family '" + om.family + "'");
    const auto outcome = omega2::f_m_omega2_pipeline(*coloring, om.m, om.params, om.budget.resolve());
    const auto& p = om.params;
    doc = json{{"kind", "omega2"},
               {"family", om.family},
               {"seed", om.seed},
               {"m", om.m},
               {"params", {{"N", p.N}, {"s", p.s}, {"P", p.P}, {"E", p.E}, {"chain_len", p.chain_len}}}};
    if (outcome.homogeneous) {
      doc["homogeneous"] = json{{"A", outcome.homogeneous->A}, {"signature", outcome.homogeneous->signature.str()}};
    } else {
      doc["homogeneous"] = nullptr;
    }
    if (outcome.certificate) {
      doc["certificate"] = omega2::to_json(*outcome.certificate);
      doc["coordinate"] = outcome.coordinate;
      doc["verified"] = omega2::verify_certificate(*outcome.certificate, *coloring);
      return kExitOk;
    }
    doc["certificate"] = nullptr;
    doc["stage"] = outcome.stage;
    doc["reason"] = outcome.reason;
    return kExitExhausted;
  }

  int extract(json& doc, std::ostream&) {
    const auto coloring = extraction_family(ex.family, ex.seed, ex.r);
    const VertexStream stream{ex.first, ex.budget};
    const auto res = extract_mono(coloring, ex.n, ex.r, ex.size, stream, ex.max_evaluations);
    doc = to_json(res);
    doc["family"] = ex.family;
    doc["seed"] = ex.seed;
    doc["n"] = ex.n;
    doc["r"] = ex.r;
    doc["size"] = ex.size;
    doc["stream"] = json{{"first", ex.first}, {"count", ex.budget}};
    if (res.W) doc["verified"] = verify_extraction(*res.W, res.color, coloring, ex.n);
    return res.W ? kExitOk : kExitExhausted;
  }

  int verify_cert(json& doc, std::ostream&) {
    const json input = read_json_file(vc.file);
    // Accept a bare certificate or a whole command document that embeds one.
    if (input.value("kind", "") == "extraction") return verify_extraction_doc(input, doc);
    const json& cert_doc = input.contains("certificate") ? input.at("certificate") : input;
    if (cert_doc.is_null()) throw Error(ErrorCode::InvalidArgument, "document carries no certificate");
    const auto family = vc.family.value_or(input.value("family", std::string("oracle")));
    const auto seed = vc.seed.value_or(input.value("seed", std::uint64_t{0}));
    const auto coloring = omega2::coloring_family(family, seed);
    if (!coloring) throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
    const auto cert = omega2::certificate_from_json(cert_doc);
    doc = json{{"kind", cert_doc.at("kind")},
               {"family", family},
               {"seed", seed},
               {"valid", omega2::verify_certificate(cert, *coloring)}};
    return kExitOk;
  }

  int verify_extraction_doc(const json& input, json& doc) {
    try {
      const auto family = vc.family.value_or(input.at("family").get<std::string>());
      const auto seed = vc.seed.value_or(input.at("seed").get<std::uint64_t>());
      const int n = input.at("n").get<int>();
      const int r = input.at("r").get<int>();
      bool valid = false;
      if (!input.at("W").is_null()) {
        const auto W = input.at("W").get<std::vector<Vertex>>();
        const auto color = input.at("color").get<Color>();
        valid = verify_extraction(W, color, extraction_family(family, seed, r), n);
      }
      doc = json{{"kind", "extraction"}, {"family", family}, {"seed", seed}, {"valid", valid}};
      return kExitOk;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
};

}  // namespace

ColoringSource extraction_family(const std::string& family, std::uint64_t seed, int r) {
  if (family == "oracle") return ColoringSource::oracle(seed, r);
  if (family == "planted-even") {
    if (r != 2) throw Error(ErrorCode::InvalidArgument, "planted-even is a 2-coloring");
    return ColoringSource::function(
        2,
        [](std::span<const Vertex> edge) {
          const bool even = std::all_of(edge.begin(), edge.end(), [](Vertex v) { return v % 2 == 0; });
          return ColorSet::single(even ? 1 : 2);
        },
        "planted-even");
  }
  if (family == "single") {
    if (r < 1) throw Error(ErrorCode::InvalidArgument, "r must be positive");
    return ColoringSource::function(r, [](std::span<const Vertex>) { return ColorSet::single(1); }, "single");
  }
  throw Error(ErrorCode::InvalidArgument, "unknown family '" + family + "'");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Commands cmds;
  CLI::App app{"Ramsey numbers, strengthened Ramsey checks, omega^2 certificates and extraction"};
  app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  app.require_subcommand(1);
  app.add_option("--jobs", cmds.jobs, "Worker threads for search commands (results do not depend on it)")
      ->check(CLI::Range(1, 256));
  app.fallthrough();

  std::function<int(json&, std::ostream&)> run;
  auto bind = [&](CLI::App* cmd, int (Commands::*fn)(json&, std::ostream&)) {
    cmd->callback([&run, &cmds, fn] { run = [&cmds, fn](json& d, std::ostream& e) { return (cmds.*fn)(d, e); }; });
  };

  auto* rn = app.add_subcommand("ramsey-number", "Exact N(r,n,h) or f(n;q1..qr) by adversary search");
  rn->add_option("--r", cmds.rn.r, "Number of colors");
  rn->add_option("--n", cmds.rn.n, "Edge arity (default 2)");
  rn->add_option("--h", cmds.rn.h, "Monochromatic set size");
  rn->add_option("--q", cmds.rn.q, "Per-color sizes, comma separated")->delimiter(',');
  cmds.rn.budget.attach(rn);
  bind(rn, &Commands::ramsey_number);

  auto* fm = app.add_subcommand("find-mono", "Least monochromatic h-set of a coloring file");
  fm->add_option("--file", cmds.fm.file, "Coloring-spec file")->required();
  fm->add_option("--h", cmds.fm.h, "Set size")->required();
  cmds.fm.budget.attach(fm);
  bind(fm, &Commands::find_mono);

  auto* vw = app.add_subcommand("verify-witness", "Check that a coloring file avoids monochromatic sets");
  vw->add_option("--file", cmds.vw.file, "Coloring-spec file")->required();
  vw->add_option("--h", cmds.vw.h, "Forbidden size for every color");
  vw->add_option("--q", cmds.vw.q, "Forbidden size per color, comma separated")->delimiter(',');
  vw->add_option("--ph", cmds.vw.ph, "Check for no large homogeneous set (|H| >= h, |H| >= min H)");
  cmds.vw.budget.attach(vw);
  bind(vw, &Commands::verify_witness);

  auto* pc = app.add_subcommand("ph-check", "Decide P(r,n,h;k), or search one coloring file for a witness");
  pc->add_option("--r", cmds.ph.r, "Number of colors");
  pc->add_option("--n", cmds.ph.n, "Edge arity");
  pc->add_option("--h", cmds.ph.h, "Minimum witness size")->required();
  pc->add_option("--k", cmds.ph.k, "Vertices 1..k");
  pc->add_option("--file", cmds.ph.file, "Coloring-spec file on labels 1..k");
  cmds.ph.budget.attach(pc);
  bind(pc, &Commands::ph_check);

  auto* pn = app.add_subcommand("ph-number", "Least k with P(r,n,h;k), by ascent under a budget");
  pn->add_option("--r", cmds.ph.r, "Number of colors")->required();
  pn->add_option("--n", cmds.ph.n, "Edge arity")->required();
  pn->add_option("--h", cmds.ph.h, "Minimum witness size")->required();
  cmds.ph.budget.attach(pn);
  bind(pn, &Commands::ph_number);

  auto add_omega2_flags = [&](CLI::App* cmd) {
    auto& p = cmds.om.params;
    cmd->add_option("--seed", cmds.om.seed, "Oracle seed");
    cmd->add_option("--m", cmds.om.m, "Red clique size")->required();
    cmd->add_option("--family", cmds.om.family, "oracle, all-red, all-blue or separated");
    cmd->add_option("--N", p.N, "Signature search range 0..N-1")->capture_default_str();
    cmd->add_option("--s", p.s, "Homogeneous set size")->capture_default_str();
    cmd->add_option("--P", p.P, "Largest prime of the blue construction")->capture_default_str();
    cmd->add_option("--E", p.E, "Largest exponent")->capture_default_str();
    cmd->add_option("--chain-len", p.chain_len, "Blue chain length per prime")->capture_default_str();
    cmds.om.budget.attach(cmd);
    bind(cmd, &Commands::omega2_run);
  };
  add_omega2_flags(app.add_subcommand("omega2-run", "Red m-clique or blue omega^2 certificate for a pair coloring"));
  auto* om = app.add_subcommand("omega2", "Pair-coloring pipeline");
  om->require_subcommand(1);
  add_omega2_flags(om->add_subcommand("run", "Same as omega2-run"));

  auto* ex = app.add_subcommand("extract", "Greedy monochromatic t-set from a stream, by induction on n");
  ex->add_option("--seed", cmds.ex.seed, "Oracle seed");
  ex->add_option("--n", cmds.ex.n, "Edge arity")->required();
  ex->add_option("--r", cmds.ex.r, "Number of colors")->required();
  ex->add_option("--size", cmds.ex.size, "Target size t")->required();
  ex->add_option("--budget", cmds.ex.budget, "Stream prefix length (vertices)")->capture_default_str();
  ex->add_option("--first", cmds.ex.first, "First stream label")->capture_default_str();
  ex->add_option("--family", cmds.ex.family, "oracle, planted-even or single")->capture_default_str();
  ex->add_option("--max-evaluations", cmds.ex.max_evaluations, "Coloring queries allowed")->capture_default_str();
  bind(ex, &Commands::extract);

  auto* vc = app.add_subcommand("verify-cert", "Re-verify an omega2 or extraction certificate");
  vc->add_option("--file", cmds.vc.file, "JSON certificate or command output")->required();
  vc->add_option("--seed", cmds.vc.seed, "Override the seed recorded in the file");
  vc->add_option("--family", cmds.vc.family, "Override the family recorded in the file");
  bind(vc, &Commands::verify_cert);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitInput;
  }

  json doc;
  int code = kExitOk;
  try {
    code = run(doc, err);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExhausted) {
      err << "budget exhausted: " << e.what() << '\n';
      out << json{{"exhausted", true}, {"reason", e.what()}}.dump(2) << '\n';
      return kExitExhausted;
    }
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  out << doc.dump(2) << '\n';
  return code;
}

}  // namespace ramsey::cli
