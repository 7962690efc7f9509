#include <iostream>

#include "CLI11.hpp"
#include "mcgfin/cli.hpp"

int main(int argc, char** argv) {
  using mcgfin::cli::Command;

  mcgfin::cli::RunConfig cfg;
  cfg.workers = mcgfin::cli::default_workers();

  CLI::App app{"mcgfin: finite orbits of mapping class group actions on representations"};
  app.require_subcommand(1);
  app.add_flag("--no-timestamp", cfg.no_timestamp, "omit generated_at from JSON output");
  app.add_flag("--unsafe-accept-field", cfg.unsafe_accept,
               "accept a minimal polynomial whose irreducibility is not certified");

  std::string out_path;
  auto        add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the JSON result to this file");
  };

  auto* orbit = app.add_subcommand("orbit", "enumerate the conjugacy-class orbit of a tuple");
  std::string rep_path;
  std::vector<std::string> auts;
  double max_seconds = 0;
  orbit->add_option("--rep", rep_path, "representation file")->required();
  orbit->add_option("--moves", cfg.moves, "nielsen, none, or a comma list of c,tau,eps,d");
  orbit->add_option("--aut", auts, "extra automorphism file (repeatable)");
  orbit->add_option("--max-classes", cfg.max_classes);
  orbit->add_option("--max-depth", cfg.max_depth);
  orbit->add_option("--max-seconds", max_seconds)->check(CLI::PositiveNumber);
  orbit->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);
  orbit->add_option("--fingerprint-length", cfg.fingerprint_length);
  orbit->add_option("--pencil-cap", cfg.pencil_cap);
  orbit->add_flag("--full-mcg", cfg.full_mcg, "also run the image and consistency checks");
  add_out(orbit);

  auto* conj = app.add_subcommand("conjugate", "decide simultaneous conjugacy of two tuples");
  std::vector<std::string> conj_files;
  std::string cert_path;
  conj->add_option("files", conj_files, "A B")->required()->expected(2);
  conj->add_option("--cert", cert_path, "write the conjugator certificate here");
  conj->add_option("--fingerprint-length", cfg.fingerprint_length);
  conj->add_option("--pencil-cap", cfg.pencil_cap);
  add_out(conj);

  auto* image = app.add_subcommand("finite-image", "decide finiteness of the generated group");
  image->add_option("--rep", rep_path, "representation file")->required();
  image->add_option("--cap", cfg.cap);
  image->add_option("--witness-length", cfg.witness_length);
  add_out(image);

  auto* jordan = app.add_subcommand("jordan", "commutator test for Jordan blocks");
  jordan->add_option("--rank", cfg.jordan_rank);
  jordan->add_option("--n-max", cfg.jordan_n_max);
  add_out(jordan);

  auto* verify = app.add_subcommand("verify-paper", "replay the bundled example scenarios");
  std::string data_dir;
  verify->add_option("--only", cfg.only, "scenario name or tag (repeatable)");
  verify->add_option("--data-dir", data_dir);
  add_out(verify);

  auto* fmt = app.add_subcommand("fmt", "rewrite an input file in canonical form");
  std::string fmt_file;
  fmt->add_option("file", fmt_file)->required();
  fmt->add_flag("--check", cfg.check_only, "exit 1 if the file is not canonical");
  add_out(fmt);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : mcgfin::cli::kExitInput;
  }

  if (*orbit) {
    cfg.command = Command::Orbit;
  } else if (*conj) {
    cfg.command = Command::Conjugate;
  } else if (*image) {
    cfg.command = Command::FiniteImage;
  } else if (*jordan) {
    cfg.command = Command::Jordan;
  } else if (*verify) {
    cfg.command = Command::VerifyPaper;
  } else {
    cfg.command = Command::Fmt;
  }
  if (!rep_path.empty()) {
    cfg.rep = rep_path;
  }
  for (auto const& a : auts) {
    cfg.automorphisms.emplace_back(a);
  }
  for (auto const& f : conj_files) {
    cfg.inputs.emplace_back(f);
  }
  if (!fmt_file.empty()) {
    cfg.inputs.emplace_back(fmt_file);
  }
  if (max_seconds > 0) {
    cfg.max_seconds = max_seconds;
  }
  if (!out_path.empty()) {
    cfg.out = out_path;
  }
  if (!cert_path.empty()) {
    cfg.cert = cert_path;
  }
  if (!data_dir.empty()) {
    cfg.data_dir = data_dir;
  }
  return mcgfin::cli::run(cfg, std::cout, std::cerr);
}
