#include "ramsey/omega2.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ramsey/error.hpp"
#include "ramsey/extract.hpp"
#include "ramsey/mix.hpp"
#include "ramsey/search.hpp"

namespace ramsey::omega2 {
namespace {

constexpr std::uint64_t kCoordLimit = std::uint64_t{1} << 32;

std::uint64_t encode(const GridVertex& v) {
  if (v.a >= kCoordLimit || v.b >= kCoordLimit) {
    throw Error(ErrorCode::InvalidArgument, "grid coordinates must fit in 32 bits for the oracle");
  }
  return (v.a << 32) | v.b;
}

// p^e, or nullopt past 2^32.
std::optional<std::uint64_t> checked_power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    out *= p;
    if (out >= kCoordLimit) return std::nullopt;
  }
  return out;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string vertex_text(const GridVertex& v) {
  return "(" + std::to_string(v.a) + "," + std::to_string(v.b) + ")";
}

bool all_pairs(const std::vector<GridVertex>& vs, const PairColoring& coloring, PairColor want) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (coloring.color(vs[i], vs[j]) != want) return false;
    }
  }
  return true;
}

bool verify_red(const RedCliqueCert& cert, const PairColoring& coloring) {
  auto sorted = cert.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return all_pairs(cert.vertices, coloring, PairColor::Red);
}

bool verify_blue(const BlueOmega2Cert& cert, const PairColoring& coloring) {
  const auto& tr = cert.truncation;
  if (tr.chain_len == 0 || cert.chains.empty()) return false;
  std::vector<std::uint64_t> keys;
  for (const auto& [p, exps] : cert.chains) {
    keys.push_back(p);
    if (!is_prime(p) || p > tr.P || exps.size() != tr.chain_len) return false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 2 || exps[i] > tr.E || (i > 0 && exps[i] <= exps[i - 1])) return false;
      if (!checked_power(p, exps[i])) return false;
    }
  }
  if (keys != primes_up_to(tr.P)) return false;

  const auto vs = cert.vertices();
  if (!all_pairs(vs, coloring, PairColor::Blue)) return false;

  for (auto pi = cert.chains.begin(); pi != cert.chains.end(); ++pi) {
    for (auto qi = std::next(pi); qi != cert.chains.end(); ++qi) {
      for (auto s : pi->second) {
        for (auto t : qi->second) {
          if (cross_pattern_matches(pi->first, *checked_power(pi->first, s), qi->first,
                                    *checked_power(qi->first, t)) != 1) {
            return false;
          }
        }
      }
    }
  }

  // Lexicographic order must show one block per prime.
  auto sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  std::size_t blocks = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i].a != sorted[i - 1].a) ++blocks;
  }
  return blocks == cert.chains.size();
}

}  // namespace

PairColoring PairColoring::oracle(std::uint64_t seed) {
  PairColoring pc = custom("oracle", [seed](const GridVertex& lo, const GridVertex& hi) {
    const std::uint64_t labels[2] = {encode(lo), encode(hi)};
    return oracle_color(seed, fold_labels(labels), 2) == 1 ? PairColor::Red : PairColor::Blue;
  });
  pc.seed_ = seed;
  return pc;
}

PairColoring PairColoring::all_red() {
  return custom("all-red", [](const GridVertex&, const GridVertex&) { return PairColor::Red; });
}

PairColoring PairColoring::all_blue() {
  return custom("all-blue", [](const GridVertex&, const GridVertex&) { return PairColor::Blue; });
}

PairColoring PairColoring::separated() {
  return custom("separated", [](const GridVertex& lo, const GridVertex& hi) {
    return lo.b < hi.a ? PairColor::Red : PairColor::Blue;
  });
}

PairColoring PairColoring::custom(std::string family, Fn fn) {
  PairColoring pc;
  pc.family_ = std::move(family);
  pc.fn_ = std::make_shared<const Fn>(std::move(fn));
  return pc;
}

PairColor PairColoring::color(const GridVertex& u, const GridVertex& v) const {
  if (u == v) throw Error(ErrorCode::InvalidArgument, "pair needs two distinct vertices " + vertex_text(u));
  return u < v ? (*fn_)(u, v) : (*fn_)(v, u);
}

std::optional<PairColoring> coloring_family(const std::string& family, std::uint64_t seed) {
  if (family == "oracle") return PairColoring::oracle(seed);
  if (family == "all-red") return PairColoring::all_red();
  if (family == "all-blue") return PairColoring::all_blue();
  if (family == "separated") return PairColoring::separated();
  return std::nullopt;
}

std::string Signature::str() const {
  std::string out;
  for (Sign s : c) out += s == Sign::Plus ? '+' : '-';
  return out;
}

Color signature_color(const Signature& s) {
  return 1 + 4 * (s.c[0] == Sign::Minus) + 2 * (s.c[1] == Sign::Minus) + (s.c[2] == Sign::Minus);
}

Signature signature_from_color(Color color) {
  if (color < 1 || color > 8) throw Error(ErrorCode::ColorOutOfRange, "signature colors are 1..8");
  const Color bits = color - 1;
  Signature s;
  s.c[0] = (bits & 4) ? Sign::Minus : Sign::Plus;
  s.c[1] = (bits & 2) ? Sign::Minus : Sign::Plus;
  s.c[2] = (bits & 1) ? Sign::Minus : Sign::Plus;
  return s;
}

std::optional<Signature> parse_signature(const std::string& text) {
  if (text.size() != 3) return std::nullopt;
  Signature s;
  for (std::size_t i = 0; i < 3; ++i) {
    if (text[i] == '+') {
      s.c[i] = Sign::Plus;
    } else if (text[i] == '-') {
      s.c[i] = Sign::Minus;
    } else {
      return std::nullopt;
    }
  }
  return s;
}

Signature signature_of(std::array<std::uint64_t, 4> X, const PairColoring& coloring) {
  std::sort(X.begin(), X.end());
  if (std::adjacent_find(X.begin(), X.end()) != X.end()) {
    throw Error(ErrorCode::DuplicateElements, "a signature needs four distinct naturals");
  }
  const auto [n1, n2, n3, n4] = X;
  auto sign = [&](std::uint64_t a, std::uint64_t b, std::uint64_t a2, std::uint64_t b2) {
    return coloring.red(GridVertex{a, b}, GridVertex{a2, b2}) ? Sign::Plus : Sign::Minus;
  };
  Signature s;
  s.c[0] = sign(n1, n2, n3, n4);
  s.c[1] = sign(n1, n3, n2, n4);
  s.c[2] = sign(n1, n4, n2, n3);
  return s;
}

ColoredGraph induced_signature_graph(std::uint32_t N, const PairColoring& coloring) {
  if (N < 4) throw Error(ErrorCode::InvalidArgument, "the signature graph needs N >= 4");
  auto fn = [coloring](std::span<const Vertex> e) {
    return ColorSet::single(signature_color(signature_of({e[0], e[1], e[2], e[3]}, coloring)));
  };
  return make_graph(N, 4, 8, ColoringSource::function(8, fn, "signature"));
}

std::optional<Homogeneous> find_homogeneous(std::uint32_t N, const PairColoring& coloring, int s,
                                            const Budget& budget) {
  if (s < 4) throw Error(ErrorCode::InvalidArgument, "homogeneous sets need s >= 4");
  const auto graph = induced_signature_graph(N, coloring);
  auto w = find_mono(graph, s, budget);
  if (!w) return std::nullopt;
  return Homogeneous{std::move(w->W), signature_from_color(w->color)};
}

std::vector<GridVertex> BlueOmega2Cert::vertices() const {
  std::vector<GridVertex> out;
  for (const auto& [p, exps] : chains) {
    for (auto e : exps) {
      const auto power = checked_power(p, e);
      if (!power) throw Error(ErrorCode::InvalidArgument, "prime power exceeds 32 bits");
      out.push_back({p, *power});
    }
  }
  return out;
}

std::size_t red_pattern_size(int i, int m) {
  return static_cast<std::size_t>(i == 3 ? 2 * m + 1 : 2 * m);
}

RedCliqueCert red_clique_from_positive(int i, int m, std::span<const Vertex> A, const PairColoring& coloring) {
  if (i < 1 || i > 3) throw Error(ErrorCode::InvalidArgument, "coordinate must be 1, 2 or 3");
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  if (A.size() < red_pattern_size(i, m)) {
    throw Error(ErrorCode::TooSmall, "pattern " + std::to_string(i) + " of size " + std::to_string(m) + " needs " +
                                         std::to_string(red_pattern_size(i, m)) + " elements of A");
  }
  if (std::adjacent_find(A.begin(), A.end(), std::greater_equal<>{}) != A.end()) {
    throw Error(ErrorCode::InvalidArgument, "A must be strictly increasing");
  }
  RedCliqueCert cert;
  for (int k = 0; k < m; ++k) {
    std::size_t x = 0, y = 0;
    switch (i) {
      case 1: x = 2 * k, y = 2 * k + 1; break;
      case 2: x = k, y = m + k; break;
      default: x = k, y = 2 * m - k; break;
    }
    cert.vertices.push_back({A[x], A[y]});
  }
  for (std::size_t a = 0; a < cert.vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < cert.vertices.size(); ++b) {
      if (!coloring.red(cert.vertices[a], cert.vertices[b])) {
        throw Error(ErrorCode::PatternViolated, "pair " + vertex_text(cert.vertices[a]) + " " +
                                                    vertex_text(cert.vertices[b]) + " is blue");
      }
    }
  }
  return cert;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t P) {
  std::vector<std::uint64_t> out;
  if (P < 2) return out;
  std::vector<bool> composite(P + 1, false);
  for (std::uint64_t p = 2; p <= P; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = p * p; q <= P; q += p) composite[q] = true;
  }
  return out;
}

std::variant<BlueOmega2Cert, RedCliqueCert> blue_omega2_construct(const PairColoring& coloring, std::uint64_t P,
                                                                  std::uint64_t E, std::size_t chain_len,
                                                                  const Budget& budget, int red_fallback) {
  if (P < 2 || E < 2) throw Error(ErrorCode::InvalidArgument, "need P >= 2 and E >= 2");
  if (chain_len < 2) throw Error(ErrorCode::InvalidArgument, "chain length must be at least 2");

  BlueOmega2Cert cert;
  cert.truncation = {P, E, chain_len};
  std::uint64_t evaluations = 0;
  for (const auto p : primes_up_to(P)) {
    if (!checked_power(p, E)) {
      throw Error(ErrorCode::InvalidArgument, std::to_string(p) + "^" + std::to_string(E) + " exceeds 32 bits");
    }
    // L(p) as a 2-colored 2-graph on the exponents 2..E.
    auto link = ColoringSource::function(
        2,
        [&coloring, p](std::span<const Vertex> e) {
          const GridVertex u{p, *checked_power(p, e[0])};
          const GridVertex v{p, *checked_power(p, e[1])};
          return ColorSet::single(coloring.red(u, v) ? 1 : 2);
        },
        "L(" + std::to_string(p) + ")");
    const VertexStream exponents{2, static_cast<std::size_t>(E - 1)};

    auto run = [&](std::size_t t) {
      if (budget.max_subsets <= evaluations) {
        throw Error(ErrorCode::BudgetExhausted, "extraction evaluations exhausted at prime " + std::to_string(p));
      }
      auto res = extract_mono(link, 2, 2, t, exponents, budget.max_subsets - evaluations);
      evaluations += res.trace.evaluations;
      if (res.out_of_evaluations) {
        throw Error(ErrorCode::BudgetExhausted, "extraction evaluations exhausted at prime " + std::to_string(p));
      }
      return res;
    };

    auto res = run(chain_len);
    if (res.W && res.color == 2) {
      cert.chains[p].assign(res.W->begin(), res.W->end());
      continue;
    }
    if (red_fallback >= 2) {
      auto red = run(static_cast<std::size_t>(red_fallback));
      if (red.W && red.color == 1) {
        RedCliqueCert clique;
        for (auto e : *red.W) clique.vertices.push_back({p, *checked_power(p, e)});
        return clique;
      }
    }
    throw Error(ErrorCode::TruncationTooSmall,
                "no blue chain of length " + std::to_string(chain_len) + " in L(" + std::to_string(p) +
                    ") with exponents up to " + std::to_string(E) +
                    (res.W ? std::string(": extraction found a red set") : ": " + res.failure));
  }
  return cert;
}

int cross_pattern_matches(std::uint64_t p, std::uint64_t ps, std::uint64_t q, std::uint64_t qt) {
  const bool separated = p < ps && ps < q && q < qt;
  const bool interleaved = p < q && q < ps && ps < qt;
  const bool nested = p < q && q < qt && qt < ps;
  return static_cast<int>(separated) + static_cast<int>(interleaved) + static_cast<int>(nested);
}

std::optional<CrossPattern> classify_cross(std::uint64_t p, std::uint64_t ps, std::uint64_t q, std::uint64_t qt) {
  if (cross_pattern_matches(p, ps, q, qt) != 1) return std::nullopt;
  if (ps < q) return CrossPattern::Separated;
  if (ps < qt) return CrossPattern::Interleaved;
  return CrossPattern::Nested;
}

bool verify_certificate(const Certificate& cert, const PairColoring& coloring) {
  try {
    if (const auto* red = std::get_if<RedCliqueCert>(&cert)) return verify_red(*red, coloring);
    return verify_blue(std::get<BlueOmega2Cert>(cert), coloring);
  } catch (const Error&) {
    return false;
  }
}

PipelineOutcome f_m_omega2_pipeline(const PairColoring& coloring, int m, const PipelineParams& params,
                                    const Budget& budget) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "m must be positive");
  PipelineOutcome out;

  try {
    out.homogeneous = find_homogeneous(params.N, coloring, params.s, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExhausted) throw;
    out.stage = "homogeneous";
    out.reason = e.what();
    return out;
  }
  if (!out.homogeneous) {
    out.stage = "homogeneous";
    out.reason = "no " + std::to_string(params.s) + "-subset of 0.." + std::to_string(params.N - 1) +
                 " has all quadruples of one signature";
    return out;
  }

  const auto& hom = *out.homogeneous;
  if (!hom.signature.all_negative()) {
    for (int i = 1; i <= 3; ++i) {
      if (hom.signature.c[i - 1] != Sign::Plus || hom.A.size() < red_pattern_size(i, m)) continue;
      Certificate cert = red_clique_from_positive(i, m, hom.A, coloring);
      if (!verify_certificate(cert, coloring)) {
        throw Error(ErrorCode::PatternViolated, "red pattern failed independent verification");
      }
      out.certificate = std::move(cert);
      out.coordinate = i;
      return out;
    }
    out.stage = "red-clique";
    out.reason = "signature " + hom.signature.str() + " on a set of " + std::to_string(hom.A.size()) +
                 " is too small for a red pattern of size " + std::to_string(m);
    return out;
  }

  try {
    auto built = blue_omega2_construct(coloring, params.P, params.E, params.chain_len, budget, m);
    Certificate cert = std::visit([](auto&& c) -> Certificate { return c; }, std::move(built));
    if (!verify_certificate(cert, coloring)) {
      out.stage = "blue";
      out.reason = "blue chains found but some cross-prime pair is red: the negative signature does not hold on "
                   "the prime-power grid";
      return out;
    }
    out.certificate = std::move(cert);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TruncationTooSmall && e.code() != ErrorCode::BudgetExhausted) throw;
    out.stage = "blue";
    out.reason = e.what();
  }
  return out;
}

}  // namespace ramsey::omega2
