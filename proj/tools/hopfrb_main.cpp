// hopfrb — exact verification and construction tool for finite-dimensional
// Hopf algebras: L-R smash (co)products and Rota-Baxter (co)operators.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input/schema error,
// 3 mathematical precondition violated.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hopfrb/io.hpp"

namespace {

using namespace hopfrb;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitPrecondition = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    io::write_file(out_path, text);
}

int report_exit(const VerificationReport& rep, const std::string& out_path) {
  emit(io::serialize_report(rep), out_path);
  return rep.pass() ? kExitPass : kExitCheckFailed;
}

RBOperatorCandidate load_candidate(const std::string& map_path, const FiniteHopfAlgebra& carrier,
                                   RBKind kind, std::optional<Field> field = {}) {
  io::ParsedMap m = io::load_map(map_path, carrier.dim(), field);
  const char* wanted = kind == RBKind::Operator ? "operator" : "co-operator";
  if (m.kind != wanted && m.kind != "plain")
    throw SchemaError(map_path + ": kind: expected \"" + wanted + "\" or \"plain\", got \"" +
                      m.kind + "\"");
  return RBOperatorCandidate(carrier, std::move(m.op), kind);
}

std::string group_path_from_name(const std::string& name) {
  if (name.find('/') != std::string::npos || name.ends_with(".json")) return name;
  std::string lower;
  for (char ch : name) lower.push_back(static_cast<char>(std::tolower(ch)));
  return io::fixture_path(lower + ".group.json");
}

int run(int argc, char** argv) {
  CLI::App app{"exact toolkit for L-R smash products and Rota-Baxter (co)operators"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path, field_spec;
  app.add_option("--out", out_path, "write the primary output to this path")->capture_default_str();
  app.add_option("--field", field_spec,
                 "coefficient field override for loaded files: rational or gf:P");

  // --- check-hopf ---------------------------------------------------------
  std::string alg_path;
  auto* check_hopf = app.add_subcommand("check-hopf", "verify the Hopf axioms of an algebra file");
  check_hopf->add_option("algebra", alg_path, "algebra file")->required();

  // --- check-action / check-coaction --------------------------------------
  std::string action_path, coaction_path;
  auto* check_action =
      app.add_subcommand("check-action", "verify the bimodule suite of an action file");
  check_action->add_option("action", action_path, "action file")->required();
  auto* check_coaction =
      app.add_subcommand("check-coaction", "verify the bicomodule suite of a coaction file");
  check_coaction->add_option("coaction", coaction_path, "coaction file")->required();

  // --- smash / cosmash -----------------------------------------------------
  std::string a_path, h_path, c_path;
  auto* smash = app.add_subcommand("smash", "construct the L-R smash product A⋊H");
  smash->add_option("a-file", a_path, "module factor algebra file")->required();
  smash->add_option("h-file", h_path, "acting algebra file")->required();
  smash->add_option("action-file", action_path, "action file")->required();
  auto* cosmash = app.add_subcommand("cosmash", "construct the L-R smash coproduct C⋉H");
  cosmash->add_option("c-file", c_path, "comodule factor algebra file")->required();
  cosmash->add_option("h-file", h_path, "coacting algebra file")->required();
  cosmash->add_option("coaction-file", coaction_path, "coaction file")->required();

  // --- check-rb / check-corb ----------------------------------------------
  std::string map_path;
  auto* check_rb = app.add_subcommand("check-rb", "run the Rota-Baxter operator suite on a map");
  check_rb->add_option("algebra", alg_path, "carrier algebra file")->required();
  check_rb->add_option("map", map_path, "candidate map file")->required();
  auto* check_corb =
      app.add_subcommand("check-corb", "run the Rota-Baxter co-operator suite on a map");
  check_corb->add_option("algebra", alg_path, "carrier algebra file")->required();
  check_corb->add_option("map", map_path, "candidate map file")->required();

  // --- lift / colift --------------------------------------------------------
  std::string r_path, b_path;
  auto* lift = app.add_subcommand("lift", "lift R and B to the smash product");
  lift->add_option("--action", action_path, "action file")->required();
  lift->add_option("--r", r_path, "map file for R on A")->required();
  lift->add_option("--b", b_path, "map file for B on H (defaults to the antipode)");
  auto* colift = app.add_subcommand("colift", "lift R and B to the smash coproduct");
  colift->add_option("--coaction", coaction_path, "coaction file")->required();
  colift->add_option("--r", r_path, "map file for R on C")->required();
  colift->add_option("--b", b_path, "map file for B on H (defaults to the antipode)");

  // --- check-conditions -----------------------------------------------------
  std::string which;
  auto* check_conditions =
      app.add_subcommand("check-conditions", "run one of the named condition suites");
  check_conditions
      ->add_option("--which", which,
                   "one of 2a2b, cor24, cor25, 3c3d, cor34, cor35, cor36, internal")
      ->required();
  check_conditions->add_option("--action", action_path, "action file (product side)");
  check_conditions->add_option("--coaction", coaction_path, "coaction file (coproduct side)");
  check_conditions->add_option("--r", r_path, "map file for R");
  check_conditions->add_option("--b", b_path, "map file for B");

  // --- enumerate -------------------------------------------------------------
  std::string group_name;
  std::size_t max_order = 8;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate group-level Rota-Baxter maps");
  enumerate->add_option("--group", group_name, "group name (fixture) or group file path")
      ->required();
  enumerate->add_option("--max-order", max_order, "enumeration bound on the group order");

  // --- dualize ---------------------------------------------------------------
  auto* dualize = app.add_subcommand("dualize", "transpose an algebra or an action file");
  dualize->add_option("algebra", alg_path, "algebra file (omit when using --action)");
  dualize->add_option("--action", action_path, "action file to dualize into a coaction");

  // --- harness ----------------------------------------------------------------
  std::size_t jobs = 1;
  auto* harness = app.add_subcommand("harness", "exhaustive equivalence harness");
  harness->add_option("--which", which, "2a2b (product side) or 3c3d (coproduct side)")
      ->required();
  harness->add_option("--action", action_path, "action file (defaults to the shipped fixture)");
  harness->add_option("--coaction", coaction_path,
                      "coaction file (defaults to the shipped fixture)");
  harness->add_option("--b", b_path, "map file for B (defaults to the antipode)");
  harness->add_option("--jobs", jobs, "worker threads for the candidate sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    std::optional<Field> field;
    if (!field_spec.empty()) {
      if (field_spec == "rational") {
        field = Field::rationals();
      } else if (field_spec.starts_with("gf:")) {
        try {
          field = Field::gf(std::stoull(field_spec.substr(3)));
        } catch (const std::exception& e) {
          throw SchemaError(std::string("--field: ") + e.what());
        }
      } else {
        throw SchemaError("--field: expected rational or gf:P");
      }
    }

    if (check_hopf->parsed()) {
      return report_exit(io::load_algebra(alg_path, field).verify(), out_path);
    }

    if (check_action->parsed()) {
      BimoduleAction act = io::load_action(action_path, field);
      VerificationReport rep = verify_bimodule_bialgebra(act);
      rep.merge(verify_antipode_bilinear(act));
      return report_exit(rep, out_path);
    }

    if (check_coaction->parsed()) {
      BicomoduleCoaction coact = io::load_coaction(coaction_path, field);
      VerificationReport rep = verify_bicomodule_bialgebra(coact);
      rep.merge(verify_antipode_bicolinear(coact));
      return report_exit(rep, out_path);
    }

    if (smash->parsed()) {
      FiniteHopfAlgebra a = io::load_algebra(a_path, field);
      FiniteHopfAlgebra h = io::load_algebra(h_path, field);
      SmashProductAlgebra sp = lr_smash_product(a, h, io::load_action(action_path, field));
      std::string provenance = std::string("{\"construction\":\"lr_smash_product\",\"inputs\":") +
                               "{\"a\":\"" + a_path + "\",\"action\":\"" + action_path +
                               "\",\"h\":\"" + h_path + "\"}}";
      emit(io::serialize_algebra(sp.algebra(), provenance), out_path);
      return kExitPass;
    }

    if (cosmash->parsed()) {
      FiniteHopfAlgebra c = io::load_algebra(c_path, field);
      FiniteHopfAlgebra h = io::load_algebra(h_path, field);
      SmashCoproductAlgebra sp = lr_smash_coproduct(c, h, io::load_coaction(coaction_path, field));
      std::string provenance =
          std::string("{\"construction\":\"lr_smash_coproduct\",\"inputs\":") + "{\"c\":\"" +
          c_path + "\",\"coaction\":\"" + coaction_path + "\",\"h\":\"" + h_path + "\"}}";
      emit(io::serialize_algebra(sp.algebra(), provenance), out_path);
      return kExitPass;
    }

    if (check_rb->parsed()) {
      FiniteHopfAlgebra carrier = io::load_algebra(alg_path, field);
      return report_exit(is_rb_operator(load_candidate(map_path, carrier, RBKind::Operator, field)),
                         out_path);
    }

    if (check_corb->parsed()) {
      FiniteHopfAlgebra carrier = io::load_algebra(alg_path, field);
      RBOperatorCandidate cand = load_candidate(map_path, carrier, RBKind::CoOperator, field);
      VerificationReport rep = is_rb_co_operator(cand);
      rep.merge(check_counit_identity(cand));
      return report_exit(rep, out_path);
    }

    if (lift->parsed()) {
      BimoduleAction act = io::load_action(action_path, field);
      LinearOperator r = io::load_map(r_path, act.a().dim(), field).op;
      LinearOperator lifted =
          b_path.empty() ? lift_rb_operator_via_antipode(r, act)
                         : lift_rb_operator(r, load_candidate(b_path, act.h(), RBKind::Operator, field),
                                            act);
      emit(io::serialize_map(lifted, "operator", ""), out_path);
      return kExitPass;
    }

    if (colift->parsed()) {
      BicomoduleCoaction coact = io::load_coaction(coaction_path, field);
      LinearOperator r = io::load_map(r_path, coact.c().dim(), field).op;
      LinearOperator lifted =
          b_path.empty()
              ? lift_rb_co_operator_via_antipode(r, coact)
              : lift_rb_co_operator(r, load_candidate(b_path, coact.h(), RBKind::CoOperator, field),
                                    coact);
      emit(io::serialize_map(lifted, "co-operator", ""), out_path);
      return kExitPass;
    }

    if (check_conditions->parsed()) {
      if (which == "2a2b" || which == "cor24" || which == "cor25" ||
          (which == "internal" && !action_path.empty())) {
        if (action_path.empty()) throw SchemaError("--action is required for --which " + which);
        BimoduleAction act = io::load_action(action_path, field);
        if (which == "2a2b" || which == "internal") {
          if (r_path.empty()) throw SchemaError("--r is required for --which " + which);
          LinearOperator r = io::load_map(r_path, act.a().dim(), field).op;
          RBOperatorCandidate b =
              b_path.empty()
                  ? RBOperatorCandidate(act.h(), act.h().antipode(), RBKind::Operator)
                  : load_candidate(b_path, act.h(), RBKind::Operator, field);
          return report_exit(which == "2a2b" ? check_conditions_2a2b(r, b, act)
                                             : check_internal_2c2d(r, b, act),
                             out_path);
        }
        if (which == "cor24") {
          if (r_path.empty()) throw SchemaError("--r is required for --which cor24");
          LinearOperator r = io::load_map(r_path, act.a().dim(), field).op;
          return report_exit(check_conditions_cor24(r, act), out_path);
        }
        // cor25
        if (b_path.empty()) throw SchemaError("--b is required for --which cor25");
        return report_exit(
            check_conditions_cor25(load_candidate(b_path, act.h(), RBKind::Operator, field), act),
            out_path);
      }
      if (which == "3c3d" || which == "cor34" || which == "cor35" || which == "cor36" ||
          which == "internal") {
        if (coaction_path.empty())
          throw SchemaError("--coaction is required for --which " + which);
        BicomoduleCoaction coact = io::load_coaction(coaction_path, field);
        auto b_cand = [&] {
          return b_path.empty()
                     ? RBOperatorCandidate(coact.h(), coact.h().antipode(), RBKind::CoOperator)
                     : load_candidate(b_path, coact.h(), RBKind::CoOperator, field);
        };
        if (which == "cor35") return report_exit(check_conditions_cor35(b_cand(), coact), out_path);
        if (r_path.empty()) throw SchemaError("--r is required for --which " + which);
        LinearOperator r = io::load_map(r_path, coact.c().dim(), field).op;
        if (which == "3c3d") return report_exit(check_conditions_3c3d(r, b_cand(), coact), out_path);
        if (which == "internal")
          return report_exit(check_internal_3b(r, b_cand(), coact), out_path);
        if (which == "cor34")
          return report_exit(check_conditions_cor34(r, b_cand(), coact), out_path);
        return report_exit(check_conditions_cor36(r, coact), out_path);
      }
      throw SchemaError("--which: unknown condition tag \"" + which + "\"");
    }

    if (enumerate->parsed()) {
      FiniteGroup g = io::load_group(group_path_from_name(group_name));
      std::vector<GroupRBMap> maps = enumerate_group_rb(g, max_order);
      std::string lines;
      for (std::size_t i = 0; i < maps.size(); ++i)
        lines += io::group_rb_map_line(maps[i], i) + "\n";
      emit(lines, out_path);
      return kExitPass;
    }

    if (dualize->parsed()) {
      if (!action_path.empty()) {
        if (out_path.empty()) throw SchemaError("--out is required when dualizing an action");
        BimoduleAction act = io::load_action(action_path, field);
        BicomoduleCoaction coact = dualize_action(act);
        io::write_file(out_path + ".h.alg.json", io::serialize_algebra(coact.h()));
        io::write_file(out_path + ".c.alg.json", io::serialize_algebra(coact.c()));
        io::write_file(out_path + ".coaction.json",
                       io::serialize_coaction(coact, out_path + ".h.alg.json",
                                              out_path + ".c.alg.json"));
        return kExitPass;
      }
      if (alg_path.empty()) throw SchemaError("dualize needs an algebra file or --action");
      emit(io::serialize_algebra(linear_dual(io::load_algebra(alg_path, field))), out_path);
      return kExitPass;
    }

    if (harness->parsed()) {
      HarnessSummary sum;
      if (which == "2a2b") {
        BimoduleAction act = io::load_action(
            action_path.empty() ? io::fixture_path("c2-on-c3.action.json") : action_path, field);
        RBOperatorCandidate b =
            b_path.empty() ? RBOperatorCandidate(act.h(), act.h().antipode(), RBKind::Operator)
                           : load_candidate(b_path, act.h(), RBKind::Operator, field);
        sum = iff_harness_2a2b(act, b, jobs);
      } else if (which == "3c3d") {
        BicomoduleCoaction coact = io::load_coaction(
            coaction_path.empty() ? io::fixture_path("dual-c2-on-dual-c3.coaction.json")
                                  : coaction_path,
            field);
        RBOperatorCandidate b =
            b_path.empty()
                ? RBOperatorCandidate(coact.h(), coact.h().antipode(), RBKind::CoOperator)
                : load_candidate(b_path, coact.h(), RBKind::CoOperator, field);
        sum = iff_harness_3c3d(coact, b, jobs);
      } else {
        throw SchemaError("--which: harness side must be 2a2b or 3c3d");
      }
      std::string lines;
      for (const auto& v : sum.verdicts) lines += io::harness_verdict_line(v) + "\n";
      lines += io::harness_summary_line(sum) + "\n";
      emit(lines, out_path);
      return sum.equivalence ? kExitPass : kExitCheckFailed;
    }
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
