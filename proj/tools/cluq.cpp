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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cluq/conics.hpp"
#include "cluq/poisson.hpp"
#include "cluq/seed_io.hpp"

namespace {

using namespace cluq;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> to_zero_based(const std::vector<long>& seq) {
  std::vector<std::size_t> out;
  for (long k : seq) {
    if (k < 1) throw ParseError("mutation indices are 1-based positive integers");
    out.push_back(static_cast<std::size_t>(k) - 1);
  }
  return out;
}

int cmd_mutate(const std::string& seedfile, const std::vector<long>& sequence) {
  SeedFile f = parse_seed_text(read_file(seedfile));
  std::vector<std::size_t> seq = to_zero_based(sequence);
  if (f.ell) {
    Seed<Cyclo> s = to_quantum_seed(f);
    s = mutate_seed(s, seq);
    std::optional<IntMatrix> lam_out = f.lambda;
    if (f.lambda && !seq.empty()) {
      // keep the strict lift aligned with the mutated seed; its reduction
      // mod ell must agree with the mutated twist
      CompatiblePair pair = check_compatible(*f.lambda, f.exchange);
      lam_out = track_strict_lift(pair, seq, s.form);
    }
    std::cout << dump_json(seed_to_json(s, lam_out, f.ell));
  } else {
    Seed<Rat> s = to_classical_seed(f);
    s = mutate_seed(s, seq);
    std::optional<IntMatrix> lam_out = f.lambda;
    if (f.lambda && !seq.empty())
      lam_out = track_strict_lift(check_compatible(*f.lambda, f.exchange), seq);
    std::cout << dump_json(seed_to_json(s, lam_out, f.ell));
  }
  return 0;
}

int cmd_explore(const std::string& seedfile, long depth, const std::string& format) {
  if (depth < 0) throw ParseError("depth must be nonnegative");
  SeedFile f = parse_seed_text(read_file(seedfile));
  ExchangeGraph g;
  if (f.ell) {
    g = explore(to_quantum_seed(f), static_cast<std::size_t>(depth));
  } else {
    g = explore(to_classical_seed(f), static_cast<std::size_t>(depth));
  }
  if (format == "dot") {
    std::cout << graph_to_dot(g);
  } else if (format == "json") {
    std::cout << dump_json(graph_to_json(g));
  } else {
    throw ParseError("explore supports --format json|dot");
  }
  return 0;
}

IntMatrix require_lambda(const SeedFile& f) {
  if (!f.lambda) throw ParseError("this analysis needs the 'Lambda' key in the seed file");
  return *f.lambda;
}

long require_ell(const SeedFile& f, long flag_ell) {
  if (flag_ell > 0) return flag_ell;
  if (f.ell) return *f.ell;
  throw ParseError("this analysis needs --ell (or an 'ell' key in the seed file)");
}

int cmd_analyze(const std::string& seedfile, const std::string& which, long flag_ell) {
  SeedFile f = parse_seed_text(read_file(seedfile));
  const ExchangeData& ex = f.exchange;

  if (which == "compat") {
    Json j;
    try {
      CompatiblePair p = check_compatible(require_lambda(f), ex);
      j["compatible"] = true;
      Json d = Json::array();
      for (const Int& x : p.d) d.push_back(io::int_to_json(x));
      j["D"] = std::move(d);
    } catch (const NotCompatibleError& e) {
      j["compatible"] = false;
      j["reason"] = e.reason;
      j["message"] = e.what();
    }
    std::cout << dump_json(j);
  } else if (which == "bracket") {
    GSVContext ctx(check_compatible(require_lambda(f), ex));
    Json j;
    j["lambda"] = io::matrix_to_json(ctx.pair().Lambda);
    j["bracket_matrix"] = io::matrix_to_json(ctx.bracket_matrix());
    j["rank"] = ctx.rank2r();
    Json d = Json::array();
    for (const Int& x : ctx.pair().d) d.push_back(io::int_to_json(x));
    j["D"] = std::move(d);
    std::cout << dump_json(j);
  } else if (which == "weights") {
    Json j = Json::array();
    for (const auto& w : torus_weights(ex)) {
      Json v = Json::array();
      for (const Int& x : w) v.push_back(io::int_to_json(x));
      j.push_back(std::move(v));
    }
    std::cout << dump_json(j);
  } else if (which == "anticanonical") {
    IntMatrix lambda = require_lambda(f);
    std::size_t r2 = skew_rank(lambda);
    std::vector<WeightVector> basis = torus_weights(ex);
    std::size_t m = ex.n() - r2;
    Json j;
    j["rank"] = r2;
    Json cands = Json::array();
    if (m <= basis.size()) {
      // iterate all m-element subsets of the kernel basis
      std::vector<std::size_t> idx(m);
      for (std::size_t i = 0; i < m; ++i) idx[i] = i;
      bool done = basis.empty() && m > 0;
      while (!done) {
        std::vector<WeightVector> theta;
        Json which_idx = Json::array();
        for (std::size_t i : idx) {
          theta.push_back(basis[i]);
          which_idx.push_back(i + 1);
        }
        Json entry;
        entry["theta"] = std::move(which_idx);
        entry["c"] = to_string(anticanonical_coefficient(lambda, theta));
        cands.push_back(std::move(entry));
        // next subset
        if (m == 0) break;
        std::size_t i = m;
        while (i > 0 && idx[i - 1] == basis.size() - m + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t p = i; p < m; ++p) idx[p] = idx[p - 1] + 1;
      }
    }
    j["candidates"] = std::move(cands);
    std::cout << dump_json(j);
  } else if (which == "pi-degree") {
    long ell = require_ell(f, flag_ell);
    std::cout << dump_json(Json(io::int_to_json(pi_degree(require_lambda(f), ell))));
  } else if (which == "nc") {
    long ell = require_ell(f, flag_ell);
    std::cout << dump_json(io::indices_to_json(noncentral_frozen(require_lambda(f), ex.ninv(), ell)));
  } else if (which == "presentation") {
    Json j;
    j["classical"] = classical_presentation_to_json(classical_presentation(ex));
    if (f.lambda && (f.ell || flag_ell > 0))
      j["quantum"] =
          quantum_presentation_to_json(quantum_presentation(ex, *f.lambda, require_ell(f, flag_ell)));
    std::cout << dump_json(j);
  } else if (which == "azumaya-report") {
    long ell = require_ell(f, flag_ell);
    std::cout << dump_json(azumaya_report_to_json(azumaya_bound_report(ex, require_lambda(f), ell)));
  } else {
    throw ParseError("unknown analysis: " + which);
  }
  return 0;
}

int cmd_conics(const std::string& zvalues, int samples) {
  if (samples < 2) throw ParseError("--samples must be at least 2");
  std::vector<double> zs;
  std::stringstream ss(zvalues);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    zs.push_back(std::stod(tok));
  }
  if (zs.empty()) throw ParseError("--zvalues needs a comma-separated list of numbers");
  std::cout << conics_csv(conic_samples(zs, samples));
  return 0;
}

int cmd_verify_paper(const std::string& seedfile, const std::vector<std::string>& only,
                     std::vector<long> ells) {
  ExchangeData ex = kronecker_exchange();
  IntMatrix lambda = kronecker_lambda();
  if (!seedfile.empty()) {
    SeedFile f = parse_seed_text(read_file(seedfile));
    ex = f.exchange;
    lambda = require_lambda(f);
  }
  if (ells.empty()) ells = {3, 5, 7};
  std::vector<CheckResult> checks = run_kronecker_suite(ex, lambda, ells);
  if (!only.empty()) {
    std::vector<CheckResult> filtered;
    for (const auto& c : checks)
      if (std::find(only.begin(), only.end(), c.name) != only.end()) filtered.push_back(c);
    if (filtered.empty()) throw ParseError("--only matched no check names");
    checks = std::move(filtered);
  }
  Json j = checks_to_json(checks);
  std::cout << dump_json(j);
  return j["all_passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with cluster algebras, GSV Poisson structures, and "
               "root-of-unity quantum tori"};
  app.require_subcommand(1);

  std::string seedfile, format = "json", which, zvalues = "-3,-1.5,0,1.5,3";
  long depth = 6, ell = 0;
  int samples = 64;
  std::vector<long> sequence, ells;
  std::vector<std::string> only;

  CLI::App* mutate = app.add_subcommand("mutate", "apply a mutation sequence to a seed");
  mutate->add_option("--seed", seedfile, "seed JSON file")->required();
  mutate->add_option("sequence", sequence, "mutation indices (1-based)");

  CLI::App* explore_cmd = app.add_subcommand("explore", "breadth-first exchange graph");
  explore_cmd->add_option("--seed", seedfile, "seed JSON file")->required();
  explore_cmd->add_option("--depth", depth, "exploration depth (default 6)");
  explore_cmd->add_option("--format", format, "json|dot");

  CLI::App* analyze = app.add_subcommand("analyze", "run one analysis on a seed");
  analyze->add_option("--seed", seedfile, "seed JSON file")->required();
  analyze
      ->add_option("--which", which,
                   "compat|bracket|weights|anticanonical|pi-degree|nc|presentation|azumaya-report")
      ->required();
  analyze->add_option("--ell", ell, "root-of-unity order (when required)");

  CLI::App* conics = app.add_subcommand("conics", "sample the pencil of conics as CSV");
  conics->add_option("--zvalues", zvalues, "comma-separated z values");
  conics->add_option("--samples", samples, "samples per branch (>= 2)");
  std::string conic_format = "csv";
  conics->add_option("--format", conic_format, "csv");

  CLI::App* verify = app.add_subcommand("verify-paper", "run the worked-example verification suite");
  verify->add_option("--seed", seedfile, "override the bundled fixture");
  verify->add_option("--only", only, "run only the named checks");
  verify->add_option("--ell", ells, "quantum suite orders (default 3 5 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    cluq::Json err;
    err["code"] = "usage";
    err["message"] = e.what();
    std::cerr << cluq::dump_json(err);
    return 2;
  }

  try {
    if (mutate->parsed()) return cmd_mutate(seedfile, sequence);
    if (explore_cmd->parsed()) return cmd_explore(seedfile, depth, format);
    if (analyze->parsed()) return cmd_analyze(seedfile, which, ell);
    if (conics->parsed()) {
      if (conic_format != "csv") throw cluq::ParseError("conics supports --format csv");
      return cmd_conics(zvalues, samples);
    }
    if (verify->parsed()) return cmd_verify_paper(seedfile, only, ells);
  } catch (const cluq::ParseError& e) {
    std::cerr << cluq::dump_json(cluq::error_to_json(e));
    return 2;
  } catch (const cluq::Error& e) {
    std::cerr << cluq::dump_json(cluq::error_to_json(e));
    return 3;
  }
  return 2;
}
