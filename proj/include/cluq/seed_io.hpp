/*
 * Copyright 2026 The cluq authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cluq/acyclic.hpp"
#include "cluq/azumaya.hpp"
#include "cluq/errors.hpp"
#include "cluq/kronecker.hpp"
#include "cluq/seed.hpp"

namespace cluq {

using Json = nlohmann::ordered_json;

namespace io {

inline Json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer");
}

inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline IntMatrix json_to_matrix(const Json& j, std::size_t rows, std::size_t cols,
                                const std::string& what) {
  if (!j.is_array() || j.size() != rows) throw ParseError(what + ": expected " +
                                                          std::to_string(rows) + " rows");
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw ParseError(what + ": row " + std::to_string(i + 1) + " must have " +
                       std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = json_to_int(row[c]);
  }
  return m;
}

inline Json indices_to_json(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (std::size_t i : v) a.push_back(i + 1);  // 1-based externally
  return a;
}

inline std::vector<std::size_t> json_to_indices(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + ": expected an array");
  std::vector<std::size_t> v;
  for (const Json& x : j) {
    if (!x.is_number_integer() || x.get<std::int64_t>() < 1)
      throw ParseError(what + ": indices are 1-based positive integers");
    v.push_back(static_cast<std::size_t>(x.get<std::int64_t>()) - 1);
  }
  return v;
}

inline Json scalar_to_json(const Rat& c) { return Json(to_string(c)); }

inline Json scalar_to_json(const Cyclo& c) {
  Json a = Json::array();
  for (const Rat& x : c.coefficients()) a.push_back(to_string(x));
  return a;
}

template <class S>
Json poly_to_json(const TPoly<S>& p) {
  Json terms = Json::array();
  for (const auto& [f, c] : p.terms()) {
    Json e = Json::array();
    for (const Int& x : f) e.push_back(int_to_json(x));
    Json t;
    t["e"] = std::move(e);
    t["c"] = scalar_to_json(c);
    terms.push_back(std::move(t));
  }
  return terms;
}

}  // namespace io

/// Parsed seed file: the documented schema keys plus the optional lossless
/// "vars"/"history" extension written by the CLI.
struct SeedFile {
  ExchangeData exchange;
  std::optional<IntMatrix> lambda;
  std::optional<long> ell;
  Json vars;     // null when absent
  Json history;  // null when absent

  SeedFile(ExchangeData ex) : exchange(std::move(ex)) {}
};

inline SeedFile parse_seed_json(const Json& j) {
  if (!j.is_object()) throw ParseError("seed file must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer key 'n'");
  std::size_t n = static_cast<std::size_t>(j["n"].get<std::int64_t>());
  auto idx = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    return io::json_to_indices(j[key], key);
  };
  std::vector<std::size_t> ex = idx("ex"), inv = idx("inv"), ninv = idx("ninv");
  if (!j.contains("B")) throw ParseError("missing key 'B'");
  IntMatrix B = io::json_to_matrix(j["B"], n, ex.size(), "B");
  SeedFile out(ExchangeData(n, ex, inv, ninv, std::move(B)));
  if (j.contains("Lambda") && !j["Lambda"].is_null())
    out.lambda = io::json_to_matrix(j["Lambda"], n, n, "Lambda");
  if (j.contains("ell") && !j["ell"].is_null()) {
    if (!j["ell"].is_number_integer() || j["ell"].get<std::int64_t>() < 1)
      throw ParseError("'ell' must be a positive integer");
    out.ell = j["ell"].get<long>();
  }
  if (j.contains("vars")) out.vars = j["vars"];
  if (j.contains("history")) out.history = j["history"];
  return out;
}

inline SeedFile parse_seed_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("seed file is not valid JSON");
  return parse_seed_json(j);
}

namespace io {

inline std::vector<std::size_t> parse_history(const Json& h) {
  std::vector<std::size_t> out;
  if (h.is_null()) return out;
  return json_to_indices(h, "history");
}

inline Rat scalar_from_json_rat(const Json& c) {
  if (!c.is_string()) throw ParseError("classical coefficients are strings");
  return parse_rat(c.get<std::string>());
}

inline Cyclo scalar_from_json_cyclo(const Json& c, const CycloCtx& ctx) {
  if (!c.is_array()) throw ParseError("cyclotomic coefficients are arrays of strings");
  if (c.size() > ctx->degree()) throw ParseError("cyclotomic coefficient tuple too long");
  Cyclo acc = Cyclo::zero(ctx);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_string()) throw ParseError("cyclotomic coefficients are arrays of strings");
    Rat r = parse_rat(c[i].get<std::string>());
    if (r == 0) continue;
    acc = acc + Cyclo::zeta_power(ctx, Int(i)) * r;
  }
  return acc;
}

template <class S, class ScalarParser>
std::vector<TPoly<S>> parse_vars(const Json& vars, const Twist& twist, std::size_t n,
                                 ScalarParser parse_scalar) {
  if (!vars.is_array() || vars.size() != n) throw ParseError("'vars' must list all N variables");
  std::vector<TPoly<S>> out;
  for (const Json& vj : vars) {
    if (!vj.is_array()) throw ParseError("each variable is an array of terms");
    TPoly<S> p(twist);
    for (const Json& tj : vj) {
      if (!tj.is_object() || !tj.contains("e") || !tj.contains("c"))
        throw ParseError("each term is {\"e\": [...], \"c\": ...}");
      const Json& ej = tj["e"];
      if (!ej.is_array() || ej.size() != twist.n()) throw ParseError("bad exponent vector");
      ExpVec e;
      for (const Json& x : ej) e.push_back(json_to_int(x));
      p.add_term(e, parse_scalar(tj["c"]));
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace io

/// Materializes the classical seed described by a seed file (vars default to
/// the initial cluster; a mutated file must carry them explicitly).
inline Seed<Rat> to_classical_seed(const SeedFile& f) {
  Seed<Rat> s = classical_seed(f.exchange);
  s.history = io::parse_history(f.history);
  if (!f.vars.is_null()) {
    s.vars = io::parse_vars<Rat>(f.vars, s.form, f.exchange.n(), io::scalar_from_json_rat);
  } else if (!s.history.empty()) {
    throw ParseError("a seed file with nonempty history must carry explicit vars");
  }
  return s;
}

/// Materializes the quantum seed; requires the Lambda and ell keys. Cluster
/// variables live in the INITIAL twisted ring, whose form is recovered by
/// un-mutating the ell-compatible pair along the reversed history.
inline Seed<Cyclo> to_quantum_seed(const SeedFile& f, CycloCtx ctx = nullptr) {
  if (!f.lambda) throw ParseError("quantum seed needs the 'Lambda' key");
  if (!f.ell) throw ParseError("quantum seed needs the 'ell' key");
  if (!ctx) ctx = CycloContext::make(*f.ell);
  if (ctx->ell() != *f.ell) throw ContextMismatchError("cyclotomic context order differs from ell");
  std::vector<std::size_t> history = io::parse_history(f.history);

  EllCompatiblePair current = check_ell_compatible(*f.lambda, f.exchange, *f.ell);
  EllCompatiblePair initial = current;
  for (auto it = history.rbegin(); it != history.rend(); ++it)
    initial = mutate_ell_pair(initial, *it);
  Twist initial_form = Twist::quantum(initial.omega, *f.ell);
  Twist current_form = Twist::quantum(current.omega, *f.ell);

  Seed<Cyclo> s{f.exchange, current_form, {}, history};
  if (!f.vars.is_null()) {
    s.vars = io::parse_vars<Cyclo>(f.vars, initial_form, f.exchange.n(), [&](const Json& c) {
      return io::scalar_from_json_cyclo(c, ctx);
    });
  } else if (!history.empty()) {
    throw ParseError("a seed file with nonempty history must carry explicit vars");
  } else {
    for (std::size_t k = 0; k < f.exchange.n(); ++k)
      s.vars.push_back(
          TPoly<Cyclo>::monomial(initial_form, unit_exp(f.exchange.n(), k), Cyclo::one(ctx)));
  }
  return s;
}

namespace io {

inline Json seed_header_json(const ExchangeData& ex, const std::optional<IntMatrix>& lambda,
                             std::optional<long> ell) {
  Json j;
  j["n"] = ex.n();
  j["ex"] = indices_to_json(ex.ex());
  j["inv"] = indices_to_json(ex.inv());
  j["ninv"] = indices_to_json(ex.ninv());
  j["B"] = matrix_to_json(ex.B());
  if (lambda) j["Lambda"] = matrix_to_json(*lambda);
  if (ell) j["ell"] = *ell;
  return j;
}

}  // namespace io

template <class S>
Json seed_to_json(const Seed<S>& s, const std::optional<IntMatrix>& lambda = std::nullopt,
                  std::optional<long> ell = std::nullopt) {
  if (s.is_quantum() && !ell) ell = s.form.ell();
  Json j = io::seed_header_json(s.exchange, lambda, ell);
  Json vars = Json::array();
  for (const auto& v : s.vars) vars.push_back(io::poly_to_json(v));
  j["vars"] = std::move(vars);
  j["history"] = io::indices_to_json(s.history);
  return j;
}

/// Canonical serialization used everywhere: 2-space indent, trailing newline.
inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline Json graph_to_json(const ExchangeGraph& g) {
  Json j;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    Json n;
    n["id"] = i;
    n["history"] = io::indices_to_json(g.nodes[i].history);
    n["depth"] = g.nodes[i].depth;
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  Json edges = Json::array();
  for (const auto& [a, b, k] : g.edges) edges.push_back(Json::array({a, b, k + 1}));
  j["edges"] = std::move(edges);
  j["truncated"] = g.truncated;
  return j;
}

/// DOT output: nodes labeled by history string, edges labeled by mutation
/// index (1-based).
inline std::string graph_to_dot(const ExchangeGraph& g) {
  std::string out = "graph exchange {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    std::string label = "(";
    for (std::size_t j = 0; j < g.nodes[i].history.size(); ++j) {
      if (j) label += " ";
      label += std::to_string(g.nodes[i].history[j] + 1);
    }
    label += ")";
    out += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
  }
  for (const auto& [a, b, k] : g.edges)
    out += "  n" + std::to_string(a) + " -- n" + std::to_string(b) + " [label=\"" +
           std::to_string(k + 1) + "\"];\n";
  out += "}\n";
  return out;
}

inline Json azumaya_report_to_json(const AzumayaReport& r) {
  Json j;
  j["pi_degree"] = io::int_to_json(r.pi_deg);
  j["nc"] = io::indices_to_json(r.nc);
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    Json e;
    e["j"] = s.j + 1;
    e["degree"] = io::int_to_json(s.degree);
    e["relation"] = s.relation;
    strata.push_back(std::move(e));
  }
  j["strata"] = std::move(strata);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  return j;
}

inline Json classical_presentation_to_json(const std::vector<ClassicalRelation>& rels) {
  Json a = Json::array();
  for (const auto& r : rels) a.push_back(Json::array({r.lhs, r.rhs.render()}));
  return a;
}

inline Json quantum_presentation_to_json(const QuantumPresentation& p) {
  Json j;
  j["ell"] = p.ell;
  j["phi_convention"] = p.phi_convention;
  Json rels = Json::array();
  for (const auto& r : p.relations) {
    if (r.commutation) {
      std::string rhs = "zeta^" + std::to_string(r.zeta_exponent) + "*y" +
                        std::to_string(r.k + 1) + "*y" + std::to_string(r.j + 1);
      rels.push_back(Json::array({r.lhs, rhs}));
    } else {
      rels.push_back(Json::array({r.lhs, r.rhs.render()}));
    }
  }
  j["relations"] = std::move(rels);
  return j;
}

inline Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json j;
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    arr.push_back(std::move(e));
    all = all && c.passed;
  }
  j["checks"] = std::move(arr);
  j["all_passed"] = all;
  return j;
}

inline Json error_to_json(const Error& e) {
  Json j;
  j["code"] = e.code();
  j["message"] = e.what();
  return j;
}

}  // namespace cluq
