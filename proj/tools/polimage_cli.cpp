// Copyright 2026 The polimage Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polimage/polimage.h"

namespace {

constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

struct PolyDeleter {
  void operator()(polimage_poly* p) const { polimage_poly_free(p); }
};
using Poly = std::unique_ptr<polimage_poly, PolyDeleter>;

int exit_code(polimage_status s) {
  switch (s) {
    case POLIMAGE_OK: return 0;
    case POLIMAGE_ERR_PARSE:
    case POLIMAGE_ERR_INVALID_ARGUMENT:
    case POLIMAGE_ERR_DIVISION_BY_ZERO: return kExitInput;
    case POLIMAGE_ERR_BUDGET: return kExitBudget;
    case POLIMAGE_ERR_CORPUS_MISMATCH: return kExitMismatch;
    case POLIMAGE_ERR_INTERNAL: break;
  }
  return kExitInternal;
}

int report_error(polimage_status s) {
  std::fprintf(stderr, "error: %s\n", polimage_last_error());
  return exit_code(s);
}

// Prints the JSON the library handed out (if any) and maps the status to an exit code.
int emit(polimage_status s, char* json) {
  if (json) {
    std::printf("%s\n", json);
    polimage_string_free(json);
  }
  if (s == POLIMAGE_OK) return 0;
  return report_error(s);
}

polimage_status parse(const std::string& text, unsigned vars, Poly& out) {
  polimage_poly* p = nullptr;
  const polimage_status s = polimage_poly_parse(text.c_str(), vars, &p);
  out.reset(p);
  return s;
}

std::string take(char* s) {
  std::string out(s);
  polimage_string_free(s);
  return out;
}

struct Args {
  bool pretty = false;
  unsigned threads = 1;

  std::string poly;
  unsigned vars = 0;
  std::uint64_t characteristic = 0;
  std::vector<long long> weights;
  std::string mode = "auto";
  std::uint64_t seed = 1;
  std::uint64_t budget = 0;
  std::uint64_t term_budget = 0;
  unsigned trials = 0;

  std::uint64_t field = 0;
  std::string path = "auto";
  std::string dump;

  std::string only;
  std::string matrix;
  std::string units;
  std::string identity;
};

int run_classify(const Args& a) {
  Poly p;
  if (polimage_status s = parse(a.poly, a.vars, p); s != POLIMAGE_OK) return report_error(s);
  polimage_classify_options o;
  polimage_classify_options_init(&o);
  o.characteristic = a.characteristic;
  o.mode = a.mode == "symbolic"        ? POLIMAGE_MODE_SYMBOLIC
           : a.mode == "probabilistic" ? POLIMAGE_MODE_PROBABILISTIC
                                       : POLIMAGE_MODE_AUTO;
  o.seed = a.seed;
  if (a.budget) o.search_budget = a.budget;
  if (a.term_budget) o.term_budget = a.term_budget;
  if (a.trials) o.probe_trials = a.trials;
  o.threads = a.threads;
  o.weights = a.weights.empty() ? nullptr : a.weights.data();
  o.weights_len = a.weights.size();
  char* json = nullptr;
  const polimage_status s = polimage_classify(p.get(), &o, a.pretty, &json);
  return emit(s, json);
}

int run_enumerate(const Args& a) {
  Poly p;
  if (polimage_status s = parse(a.poly, a.vars, p); s != POLIMAGE_OK) return report_error(s);
  const polimage_path path = a.path == "naive"         ? POLIMAGE_PATH_NAIVE
                             : a.path == "multilinear" ? POLIMAGE_PATH_MULTILINEAR
                             : a.path == "orbit"       ? POLIMAGE_PATH_ORBIT
                                                       : POLIMAGE_PATH_AUTO;
  char* json = nullptr;
  const std::uint64_t budget = a.budget ? a.budget : 100'000'000;
  const char* dump = a.dump.empty() ? nullptr : a.dump.c_str();
  const polimage_status s = polimage_enumerate(p.get(), a.field, budget, path, a.threads, dump, a.pretty, &json);
  return emit(s, json);
}

int run_linearize(const Args& a) {
  Poly p, lin;
  if (polimage_status s = parse(a.poly, a.vars, p); s != POLIMAGE_OK) return report_error(s);
  polimage_poly* out = nullptr;
  if (polimage_status s = polimage_poly_linearize(p.get(), &out); s != POLIMAGE_OK) return report_error(s);
  lin.reset(out);
  char *in_text = nullptr, *out_text = nullptr;
  if (polimage_status s = polimage_poly_to_string(p.get(), &in_text); s != POLIMAGE_OK) return report_error(s);
  const std::string input = take(in_text);
  if (polimage_status s = polimage_poly_to_string(lin.get(), &out_text); s != POLIMAGE_OK) return report_error(s);
  const nlohmann::json doc = {{"schema", 1},
                              {"command", "linearize"},
                              {"input", input},
                              {"output", take(out_text)},
                              {"vars", polimage_poly_vars(lin.get())}};
  std::printf("%s\n", (a.pretty ? doc.dump(2) : doc.dump()).c_str());
  return 0;
}

int run_euler(const Args& a) {
  Poly p;
  if (!a.poly.empty()) {
    if (polimage_status s = parse(a.poly, a.vars, p); s != POLIMAGE_OK) return report_error(s);
  }
  char* json = nullptr;
  const polimage_status s = polimage_euler(a.units.c_str(), p.get(), a.pretty, &json);
  return emit(s, json);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Images of noncommutative polynomials on 2x2 matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--pretty", a.pretty, "Indented JSON");
  app.add_option("--threads", a.threads, "Worker threads")->envname("POLIMAGE_THREADS")->check(CLI::Range(1u, 1024u));
  app.set_version_flag("--version", std::string(polimage_version()));

  const auto modes = CLI::IsMember({"symbolic", "probabilistic", "auto"});

  auto* classify = app.add_subcommand("classify", "Classify the image of a polynomial");
  classify->add_option("--poly", a.poly, "Polynomial text")->required();
  classify->add_option("--vars", a.vars, "Number of variables (default: largest index)");
  classify->add_option("--char", a.characteristic, "Characteristic: 0 or a prime")->required();
  classify->add_option("--weights", a.weights, "Semi-homogeneity weights")->delimiter(',');
  classify->add_option("--mode", a.mode, "symbolic, probabilistic or auto")->check(modes);
  classify->add_option("--seed", a.seed, "Seed");
  classify->add_option("--budget", a.budget, "Witness-search evaluations");
  classify->add_option("--term-budget", a.term_budget, "Symbolic term budget");
  classify->add_option("--trials", a.trials, "Probe trials");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive image over a small prime field");
  enumerate->add_option("--poly", a.poly, "Polynomial text")->required();
  enumerate->add_option("--vars", a.vars, "Number of variables (default: largest index)");
  enumerate->add_option("--field", a.field, "Prime q <= 7")->required();
  enumerate->add_option("--budget", a.budget, "Evaluation budget");
  enumerate->add_option("--path", a.path, "auto, naive, multilinear or orbit")
      ->check(CLI::IsMember({"auto", "naive", "multilinear", "orbit"}));
  enumerate->add_option("--dump", a.dump, "Write the sorted image, one matrix per line");

  auto* corpus = app.add_subcommand("corpus", "Run the built-in corpus");
  corpus->add_option("--only", a.only, "Entry name");
  corpus->add_option("--seed", a.seed, "Seed");

  auto* cone = app.add_subcommand("cone", "Invariants and cone class of a matrix");
  cone->add_option("--matrix", a.matrix, "Matrix a,b;c,d")->required();
  cone->add_option("--char", a.characteristic, "Characteristic: 0 or a prime");

  auto* euler = app.add_subcommand("euler", "Eulerian prediction for a matrix-unit tuple");
  euler->add_option("--units", a.units, "Units e12,e21,...")->required();
  euler->add_option("--poly", a.poly, "Multilinear polynomial to check against the prediction");
  euler->add_option("--vars", a.vars, "Number of variables");

  auto* verify = app.add_subcommand("verify", "Seeded check of an identity");
  verify->add_option("--identity", a.identity, "Identity name")->required()->check(CLI::IsMember({"alternating-trace"}));
  verify->add_option("--field", a.field, "Prime")->required();
  verify->add_option("--trials", a.trials, "Trials");
  verify->add_option("--seed", a.seed, "Seed");

  auto* linearize = app.add_subcommand("linearize", "Full multilinearization");
  linearize->add_option("--poly", a.poly, "Polynomial text")->required();
  linearize->add_option("--vars", a.vars, "Number of variables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*classify) return run_classify(a);
  if (*enumerate) return run_enumerate(a);
  if (*euler) return run_euler(a);
  if (*linearize) return run_linearize(a);

  char* json = nullptr;
  polimage_status s = POLIMAGE_ERR_INVALID_ARGUMENT;
  if (*corpus) {
    s = polimage_corpus(a.only.empty() ? nullptr : a.only.c_str(), a.seed, a.threads, a.pretty, &json);
  } else if (*cone) {
    s = polimage_cone(a.matrix.c_str(), a.characteristic, a.pretty, &json);
  } else if (*verify) {
    s = polimage_verify_alternating_trace(a.field, a.trials ? a.trials : 100, a.seed, a.pretty, &json);
  }
  return emit(s, json);
}
