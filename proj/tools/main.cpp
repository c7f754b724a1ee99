#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "cli_commands.hpp"

namespace {

using fermiga::cli::Options;

void add_common(CLI::App *cmd, Options &o) {
  cmd->add_option("--format", o.format, "Output format: text or json")->capture_default_str();
  cmd->add_option("--max-dense-n", o.max_dense_n, "Largest n for dense 2^n x 2^n operators")
      ->capture_default_str();
  cmd->add_option("--tolerance", o.tolerance, "Eigenvalue clustering tolerance")
      ->capture_default_str();
}

void add_n(CLI::App *cmd, Options &o) {
  cmd->add_option("--n", o.n, "Number of generators (dim H)")->required();
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"fermiga: the geometric algebra G(H) as a fermion field model"};
  app.require_subcommand(1);
  Options o;

  auto *info = app.add_subcommand("algebra-info", "Dimension and grade sizes of G(H)");
  add_n(info, o);
  add_common(info, o);

  auto *matrix = app.add_subcommand("op-matrix", "Dense matrix of an operator in grade-lex order");
  add_n(matrix, o);
  matrix->add_option("--op", o.op, "Operator spec or operator JSON")->required();
  add_common(matrix, o);

  auto *spectrum = app.add_subcommand("spectrum", "Eigenvalues of a self-adjoint or unitary operator");
  add_n(spectrum, o);
  spectrum->add_option("--op", o.op, "Operator spec or operator JSON")->required();
  add_common(spectrum, o);

  auto *evolve = app.add_subcommand("evolve", "States U_{k t} psi for k = 0..steps");
  add_n(evolve, o);
  evolve->add_option("--hamiltonian", o.hamiltonian, "Self-adjoint operator spec")->required();
  evolve->add_option("--state", o.state, "Initial state (text or JSON)")->required();
  evolve->add_option("--t", o.t, "Time step")->capture_default_str();
  evolve->add_option("--steps", o.steps, "Number of steps")->capture_default_str();
  evolve->add_flag("--normalize", o.normalize, "Normalize the initial state");
  add_common(evolve, o);

  auto *prob = app.add_subcommand("probability", "tr(rho A) for a pure state rho");
  add_n(prob, o);
  prob->add_option("--state", o.state, "State (text or JSON)")->required();
  prob->add_option("--effect", o.effect, "Effect operator spec");
  prob->add_option("--observable", o.observable, "Observable: create:eK or e1obs:a,b,c,d");
  prob->add_flag("--normalize", o.normalize, "Normalize the state");
  add_common(prob, o);

  auto *extend = app.add_subcommand("extend", "alpha-extension of an operator on H");
  add_n(extend, o);
  extend->add_option("--base", o.base, "Base operator spec or JSON")->required();
  extend->add_option("--alpha", o.alpha, "alpha_1,...,alpha_n, simple or trivial")->required();
  extend->add_option("--product", o.product, "Leibniz product: exterior or geometric")
      ->capture_default_str();
  extend->add_flag("--spectrum", o.spectrum, "Print the spectrum instead of the matrix");
  add_common(extend, o);

  auto *fock = app.add_subcommand("fock", "Boson-fermion field over a truncated Fock space");
  fock->add_option("--m", o.m, "Boson space dimension")->required();
  fock->add_option("--r", o.r, "Boson truncation")->required();
  fock->add_flag("--list-basis", o.list_basis, "List the basis blades with labels");
  fock->add_option("--grade", o.grade, "Restrict the listing to one grade");
  add_common(fock, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return fermiga::cli::kUsage;
  }

  for (const auto *sub : app.get_subcommands())
    return fermiga::cli::run(sub->get_name(), o, std::cout, std::cerr);
  return fermiga::cli::kUsage;
}
