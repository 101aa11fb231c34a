/*
 * Copyright 2026 The superrec authors
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

#include <CLI11.hpp>
#include <iostream>

#include "superrec/airy.hpp"
#include "superrec/gaiotto.hpp"
#include "superrec/io.hpp"
#include "superrec/operator_expr.hpp"
#include "superrec/str.hpp"

namespace {

using namespace superrec;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

struct Config {
  std::string curve;
  std::string sector = "NS";
  std::string mode = "raw";
  std::string out;
  int chi_max = 5;
  int index_bound = 0;
  int lambda_order = 4;
};

SuperCurve resolve_curve(const Config& cfg) {
  if (cfg.curve == "gaiotto-ns")
    return build_gaiotto_curve(GaiottoSpec::make(
        std::make_shared<const Context>(), Sector::ns, cfg.mode == "calibrated"));
  if (cfg.curve == "gaiotto-r")
    return build_gaiotto_curve(GaiottoSpec::make(
        std::make_shared<const Context>(), Sector::r, cfg.mode == "calibrated"));
  return load_curve_file(cfg.curve);
}

int require_valid(const SuperCurve& curve) {
  auto violations = validate(curve);
  if (violations.empty()) return kExitOk;
  for (const auto& v : violations)
    std::cerr << "violation [" << v.param << "]: " << v.message << "\n";
  return kExitValidation;
}

GaiottoSpec spec_from(const Config& cfg) {
  Sector s = cfg.sector == "R" ? Sector::r : Sector::ns;
  return GaiottoSpec::make(std::make_shared<const Context>(), s,
                           cfg.mode == "calibrated");
}

int cmd_validate(const Config& cfg) {
  SuperCurve curve = resolve_curve(cfg);
  int rc = require_valid(curve);
  if (rc == kExitOk) std::cout << "curve valid\n";
  if (!cfg.out.empty()) write_file(cfg.out, curve_to_json(curve));
  return rc;
}

int cmd_airy(const Config& cfg) {
  SuperCurve curve = resolve_curve(cfg);
  if (int rc = require_valid(curve)) return rc;
  SolveOptions opt;
  opt.chi_max = cfg.chi_max;
  opt.index_bound = cfg.index_bound;
  CoeffTable table = airy_solve(curve, opt);
  ConstraintReport rep = verify_constraints(curve, table, cfg.chi_max);
  std::cout << rep.summary();
  if (!cfg.out.empty()) write_file(cfg.out, table_to_json(table));
  std::cout << "cells: " << table.entries().size() << "\n";
  return rep.all_zero ? kExitOk : kExitMismatch;
}

int cmd_str(const Config& cfg) {
  SuperCurve curve = resolve_curve(cfg);
  if (int rc = require_valid(curve)) return rc;
  StrOptions opt;
  opt.chi_max = cfg.chi_max;
  opt.index_bound = cfg.index_bound;
  opt.check_loop_equations = true;
  OmegaTable table = str_recurse(curve, opt);
  if (!cfg.out.empty()) write_file(cfg.out, table_to_json(table.table));
  std::cout << "cells: " << table.table.entries().size()
            << " (loop equations certified)\n";
  return kExitOk;
}

int cmd_crosscheck(const Config& cfg) {
  SuperCurve curve = resolve_curve(cfg);
  if (int rc = require_valid(curve)) return rc;
  SolveOptions aopt;
  aopt.chi_max = cfg.chi_max;
  aopt.index_bound = cfg.index_bound;
  CoeffTable algebraic = airy_solve(curve, aopt);
  StrOptions sopt;
  sopt.chi_max = cfg.chi_max;
  sopt.index_bound = cfg.index_bound;
  OmegaTable geometric = str_recurse(curve, sopt);
  if (algebraic == geometric.table) {
    std::cout << "all cells equal (" << algebraic.entries().size()
              << " nonzero cells)\n";
    return kExitOk;
  }
  std::cout << "MISMATCH between the algebraic and residue tables\n";
  return kExitMismatch;
}

int cmd_gaiotto(const Config& cfg) {
  PartitionFunction pf = partition_function(spec_from(cfg), cfg.chi_max);
  WhittakerReport rep = whittaker_residuals(pf);
  std::cout << rep.summary();
  if (!cfg.out.empty())
    write_file(cfg.out, table_to_json(pf.table));
  return rep.all_zero ? kExitOk : kExitMismatch;
}

int cmd_norm(const Config& cfg) {
  int chi = std::max(cfg.chi_max, cfg.lambda_order / 2 + 1);
  PartitionFunction pf = partition_function(spec_from(cfg), chi);
  NormReport rep = nekrasov_series(pf, cfg.lambda_order);
  std::cout << rep.summary();
  if (!cfg.out.empty())
    write_file(cfg.out, lambda_series_to_json(rep.zz, cfg.lambda_order));
  return kExitOk;
}

int cmd_virasoro(const Config& cfg) {
  bool ok = true;
  for (Sector s : {Sector::ns, Sector::r}) {
    if (cfg.sector == "NS" && s == Sector::r) continue;
    if (cfg.sector == "R" && s == Sector::ns) continue;
    auto report = virasoro_sweep(std::make_shared<const Context>(), s, 4, 7);
    std::cout << sector_name(s) << ": " << report.relations_checked
              << " relations, "
              << (report.all_zero ? "all residuals zero" : "FAILURES") << "\n";
    for (const auto& f : report.failures) std::cout << "  " << f << "\n";
    ok = ok && report.all_zero;
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for super spectral curve correlators"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&cfg](CLI::App* cmd, bool needs_curve) {
    if (needs_curve)
      cmd->add_option("--curve", cfg.curve,
                      "curve file or gaiotto-ns / gaiotto-r")
          ->required();
    cmd->add_option("--sector", cfg.sector, "NS or R");
    cmd->add_option("--chi-max", cfg.chi_max, "recursion depth 2g+n+2m");
    cmd->add_option("--index-bound", cfg.index_bound,
                    "basis index bound (0 = automatic)");
    cmd->add_option("--lambda-order", cfg.lambda_order, "Lambda order");
    cmd->add_option("--mode", cfg.mode, "raw or calibrated");
    cmd->add_option("--out", cfg.out, "export path");
  };

  add_common(app.add_subcommand("validate", "check a curve file"), true);
  add_common(app.add_subcommand("airy", "solve the constraint recursion"),
             true);
  add_common(app.add_subcommand("str", "run the residue recursion"), true);
  add_common(
      app.add_subcommand("crosscheck", "compare the two recursions cell by cell"),
      true);
  add_common(app.add_subcommand("gaiotto",
                                "partition function and Whittaker residuals"),
             false);
  add_common(app.add_subcommand("norm", "conjugate-pairing norm series"),
             false);
  add_common(app.add_subcommand("virasoro", "algebra relation sweep"), false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("validate")) return cmd_validate(cfg);
    if (app.got_subcommand("airy")) return cmd_airy(cfg);
    if (app.got_subcommand("str")) return cmd_str(cfg);
    if (app.got_subcommand("crosscheck")) return cmd_crosscheck(cfg);
    if (app.got_subcommand("gaiotto")) return cmd_gaiotto(cfg);
    if (app.got_subcommand("norm")) return cmd_norm(cfg);
    if (app.got_subcommand("virasoro")) return cmd_virasoro(cfg);
  } catch (const IndexBoundError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kExitResource;
  } catch (const WindowError& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
