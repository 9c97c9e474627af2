// Copyright 2026 The sring Authors.
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

// Command-line front end: S-ring construction and checks, CI tests, the
// catalog of named rings and the property suites.
//
// Exit codes: 0 success, 1 property failure, 2 usage or input error,
// 3 timeout.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sring/analysis.h"
#include "sring/build.h"
#include "sring/catalog.h"
#include "sring/serialize.h"
#include "sring/suites.h"

namespace {

using namespace sring;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kTimeout = 3;

struct Options {
  bool json = false;
  double timeout = 0;  // seconds, 0 = none

  Deadline deadline() const {
    return timeout > 0 ? Deadline::after_seconds(timeout) : Deadline{};
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(std::span<const Index> xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i)
    out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

ElementSet subspace_basis(const GroupContext& ctx, const Subspace& s) {
  ElementSet out;
  for (const Vector& v : s.basis()) out.push_back(ctx.to_index(v));
  return out;
}

void print_sring(const SRing& a, const Options& opt) {
  if (opt.json) {
    nlohmann::ordered_json j;
    j["p"] = a.context().p();
    j["n"] = a.context().n();
    j["rank"] = a.rank();
    j["classes"] = a.classes();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << format_sring(a);
  }
}

// ------------------------------------------------------------ commands

int cmd_verify(const std::string& file, const Options& opt) {
  const ParsedPartition parsed = parse_partition(read_file(file));
  const Verdict verdict = verify_sring(parsed.ctx, parsed.classes);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["valid"] = verdict.ok();
    j["failure"] = to_string(verdict.failure);
    j["message"] = verdict.message;
    j["witness"] = verdict.witness;
    if (verdict.ok()) j["rank"] = parsed.classes.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "valid: " << yes_no(verdict.ok()) << "\n";
    if (verdict.ok()) {
      std::cout << "rank: " << parsed.classes.size() << "\n";
    } else {
      std::cout << "failure: " << to_string(verdict.failure) << "\n"
                << "message: " << verdict.message << "\n";
    }
  }
  return verdict.ok() ? kOk : kPropertyFailure;
}

int cmd_gen(int p, int n, const std::string& sets, const Options& opt) {
  GroupContext ctx(p, n);
  print_sring(generated_sring(ctx, parse_set_list(sets)), opt);
  return kOk;
}

int cmd_from_matrices(int p, int n, const std::string& file, const Options& opt) {
  GroupContext ctx(p, n);
  const auto mats = parse_matrices(p, n, read_file(file));
  print_sring(transitivity_module(ctx, mats), opt);
  return kOk;
}

int cmd_aut(const std::string& file, const Options& opt) {
  const SRing a = parse_sring(read_file(file));
  const Deadline deadline = opt.deadline();
  const PermGroup aut = aut_group(a, deadline);
  const bool schurian = is_schurian(a, aut);
  if (opt.json) {
    nlohmann::ordered_json j;
    j["order"] = aut.order().str();
    j["schurian"] = schurian;
    j["degree"] = aut.degree();
    auto& gens = j["generators"] = nlohmann::ordered_json::array();
    for (const Permutation& g : aut.generators()) gens.push_back(g.images());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "order: " << aut.order().str() << "\n"
              << "schurian: " << yes_no(schurian) << "\n"
              << format_perm_group(aut);
  }
  return kOk;
}

int cmd_decompose(const std::string& file, const Options& opt) {
  const SRing a = parse_sring(read_file(file));
  const auto witness = decomposability_witness(a);
  const GroupContext& ctx = a.context();
  if (opt.json) {
    nlohmann::ordered_json j;
    j["decomposable"] = witness.has_value();
    if (witness) {
      j["E"] = subspace_basis(ctx, witness->e);
      j["F"] = subspace_basis(ctx, witness->f);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "decomposable: " << yes_no(witness.has_value()) << "\n";
    if (witness)
      std::cout << "E: " << join(subspace_basis(ctx, witness->e)) << "\n"
                << "F: " << join(subspace_basis(ctx, witness->f)) << "\n";
  }
  return kOk;
}

int cmd_quotient(const std::string& file, const std::string& by, const Options& opt) {
  const SRing a = parse_sring(read_file(file));
  const ElementSet basis = parse_index_list(by);
  for (Index h : basis)
    if (h >= a.context().order()) throw InputError("--by element out of range");
  print_sring(quotient_sring(a, Subspace::span_of_indices(a.context(), basis)), opt);
  return kOk;
}

int print_ci(const CiResult& r, const Options& opt) {
  const char* method = r.method == CiResult::Method::kRegularSubgroups
                           ? "regular-subgroups"
                           : "normalized-isomorphisms";
  if (opt.json) {
    nlohmann::ordered_json j;
    j["ci"] = r.ci;
    j["method"] = method;
    if (r.method == CiResult::Method::kRegularSubgroups) {
      j["regular_subgroups"] = r.regular_subgroups.size();
      auto& list = j["conjugate_to_translations"] = nlohmann::ordered_json::array();
      for (const RegularWitness& w : r.regular_subgroups) list.push_back(w.conjugator.has_value());
    } else {
      j["representatives"] = r.representatives;
      if (r.counterexample) j["counterexample"] = r.counterexample->images();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "ci: " << yes_no(r.ci) << "\n"
              << "method: " << method << "\n";
    if (r.method == CiResult::Method::kRegularSubgroups) {
      std::cout << "regular_subgroups: " << r.regular_subgroups.size() << "\n";
    } else {
      std::cout << "representatives: " << r.representatives << "\n";
      if (r.counterexample) {
        std::cout << "counterexample:";
        for (Point x : r.counterexample->images()) std::cout << ' ' << x;
        std::cout << "\n";
      }
    }
  }
  return r.ci ? kOk : kPropertyFailure;
}

int cmd_table1(int p, const std::string& out_file, const Options& opt) {
  const ClassificationReport report = build_table1(p, opt.deadline());
  const std::string text = opt.json ? format_report_json(report) : format_report(report);
  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_file);
    if (!out) throw InputError("cannot write " + out_file);
    out << text;
  }
  if (!report.matches_table()) {
    std::cerr << "error: classification does not match the six expected classes\n";
    return kPropertyFailure;
  }
  return kOk;
}

int cmd_suite(const std::string& name, int p, std::uint64_t seed, std::size_t trials,
              const Options& opt) {
  const SuiteReport report = verify_suite(name, p, seed, trials, opt.deadline());
  std::cout << (opt.json ? format_report_json(report) : format_report(report));
  return report.passed() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S-rings over elementary abelian p-groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Machine-readable output");
  app.add_option("--timeout", opt.timeout, "Wall-clock limit in seconds")
      ->check(CLI::NonNegativeNumber);

  int p = 3, n = 3;
  std::string file, sets, by, out_file, name;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::function<int()> action;

  auto add_pn = [&](CLI::App* cmd) {
    cmd->add_option("--p", p, "Odd prime")->required();
    cmd->add_option("--n", n, "Rank of Z_p^n")->required();
  };

  CLI::App* sring_cmd = app.add_subcommand("sring", "Build and inspect S-rings");
  sring_cmd->require_subcommand(1);
  {
    auto* c = sring_cmd->add_subcommand("verify", "Check the S-ring axioms of a file");
    c->add_option("file", file)->required();
    c->callback([&] { action = [&] { return cmd_verify(file, opt); }; });

    c = sring_cmd->add_subcommand("gen", "Least S-ring with the given sets as unions of classes");
    add_pn(c);
    c->add_option("--set", sets, "Sets as \"a,b,c;d,e\"")->required();
    c->callback([&] { action = [&] { return cmd_gen(p, n, sets, opt); }; });

    c = sring_cmd->add_subcommand("from-matrices", "Transitivity module of a matrix group");
    add_pn(c);
    c->add_option("file", file)->required();
    c->callback([&] { action = [&] { return cmd_from_matrices(p, n, file, opt); }; });

    c = sring_cmd->add_subcommand("aut", "Automorphism group of an S-ring");
    c->add_option("file", file)->required();
    c->callback([&] { action = [&] { return cmd_aut(file, opt); }; });

    c = sring_cmd->add_subcommand("decompose", "Wedge decomposition witness");
    c->add_option("file", file)->required();
    c->callback([&] { action = [&] { return cmd_decompose(file, opt); }; });

    c = sring_cmd->add_subcommand("quotient", "Quotient by an A-subgroup");
    c->add_option("file", file)->required();
    c->add_option("--by", by, "Spanning elements as \"a,b\"")->required();
    c->callback([&] { action = [&] { return cmd_quotient(file, by, opt); }; });
  }

  CLI::App* ci_cmd = app.add_subcommand("ci", "CI tests");
  ci_cmd->require_subcommand(1);
  {
    auto* c = ci_cmd->add_subcommand("subset", "Is the Cayley digraph of S a CI-digraph");
    add_pn(c);
    c->add_option("--set", sets, "Elements as \"a,b,c\"")->required();
    c->callback([&] {
      action = [&] {
        GroupContext ctx(p, n);
        const ElementSet s = parse_index_list(sets);
        for (Index h : s)
          if (h >= ctx.order()) throw InputError("--set element out of range");
        return print_ci(is_ci_subset(ctx, s, opt.deadline()), opt);
      };
    });

    c = ci_cmd->add_subcommand("sring", "Is an S-ring a CI-S-ring");
    c->add_option("file", file)->required();
    c->callback([&] {
      action = [&] {
        return print_ci(is_ci_sring(parse_sring(read_file(file)), opt.deadline()), opt);
      };
    });
  }

  CLI::App* catalog_cmd = app.add_subcommand("catalog", "Named constructions");
  catalog_cmd->require_subcommand(1);
  {
    auto* c = catalog_cmd->add_subcommand("table1", "Classify UT(3,p) transitivity modules");
    c->add_option("--p", p)->required();
    c->add_option("--out", out_file, "Write the report to a file");
    c->callback([&] { action = [&] { return cmd_table1(p, out_file, opt); }; });

    c = catalog_cmd->add_subcommand("exceptional", "The exceptional S-ring over Z_p^3");
    c->add_option("--p", p)->required();
    c->callback([&] {
      action = [&] {
        print_sring(exceptional_sring(p), opt);
        return kOk;
      };
    });

    c = catalog_cmd->add_subcommand("ll2", "V(Z_p^5, L) for the pair x, y");
    c->add_option("--p", p)->required();
    c->callback([&] {
      action = [&] {
        print_sring(ll2_sring(p).ring, opt);
        return kOk;
      };
    });
  }

  CLI::App* verify_cmd = app.add_subcommand("verify", "Property suites");
  verify_cmd->require_subcommand(1);
  {
    auto* c = verify_cmd->add_subcommand("suite", "Run a named suite");
    c->add_option("--name", name)->required()->check(CLI::IsMember(suite_names()));
    c->add_option("--p", p)->required();
    c->add_option("--seed", seed);
    c->add_option("--trials", trials);
    c->callback([&] { action = [&] { return cmd_suite(name, p, seed, trials, opt); }; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const TimeoutError& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kTimeout;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
