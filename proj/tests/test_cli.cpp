#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "mcgfin/cli.hpp"
#include "mcgfin/io.hpp"
#include "support/fixtures.hpp"

using namespace mcgfin;
using namespace mcgfin::test;
namespace fs = std::filesystem;
using io::json;

namespace {

  fs::path const scenarios = MCGFIN_SCENARIOS;

  struct TempDir {
    fs::path path;
    TempDir() {
      path = fs::temp_directory_path() / ("mcgfin_cli_" + std::to_string(::getpid()));
      fs::remove_all(path);
      fs::create_directories(path);
    }
    ~TempDir() {
      fs::remove_all(path);
    }
  };

  struct Outcome {
    int         status;
    std::string out;
    std::string err;
  };

  Outcome run_in_process(cli::RunConfig const& cfg) {
    std::ostringstream out, err;
    int                status = cli::run(cfg, out, err);
    return {status, out.str(), err.str()};
  }

  // Runs the installed executable; stdout goes to `capture`.
  int run_exe(std::string const& args, fs::path const& capture) {
    std::string cmd = std::string(MCGFIN_EXE) + " " + args + " > " + capture.string()
                      + " 2> " + capture.string() + ".err";
    int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  cli::RunConfig orbit_config(fs::path const& rep) {
    cli::RunConfig cfg;
    cfg.command      = cli::Command::Orbit;
    cfg.rep          = rep;
    cfg.no_timestamp = true;
    return cfg;
  }

}  // namespace

TEST_CASE("orbit command") {
  auto res = run_in_process(orbit_config(scenarios / "potapchik.json"));
  CHECK(res.status == cli::kExitOk);
  auto j = io::parse(res.out);
  CHECK(j["verdict"] == "finite");
  CHECK(j["classes"] == 1);
  CHECK(j["closure_check"] == "verified");
  CHECK(!j.contains("generated_at"));
}

TEST_CASE("budget exceeded is a successful run") {
  TempDir  tmp;
  auto     q = rationals();
  RepTuple rep(GroupShape::free(2), {Matrix::from_ints(q, {{2, 1}, {1, 1}}),
                                     Matrix::from_ints(q, {{1, 1}, {0, 1}})});
  io::write_text_file(tmp.path / "hyp.json", io::dump(io::to_json(rep)));
  auto cfg        = orbit_config(tmp.path / "hyp.json");
  cfg.max_classes = 10;
  auto res        = run_in_process(cfg);
  CHECK(res.status == cli::kExitOk);
  CHECK(io::parse(res.out)["verdict"] == "budget_exceeded");
}

TEST_CASE("orbit with the full mapping class group gate") {
  TempDir  tmp;
  auto     q = rationals();
  RepTuple rep(GroupShape::surface(1, 1), {Matrix::identity(q, 2), Matrix::identity(q, 2)});
  io::write_text_file(tmp.path / "surf.json", io::dump(io::to_json(rep)));
  auto cfg     = orbit_config(tmp.path / "surf.json");
  cfg.full_mcg = true;
  auto res     = run_in_process(cfg);
  CHECK(res.status == cli::kExitOk);
  CHECK(io::parse(res.out)["theorem_gate"]["applicable"] == false);

  RepTuple big(GroupShape::surface(2, 1),
               std::vector<Matrix>(4, Matrix::identity(q, 1)));
  io::write_text_file(tmp.path / "surf2.json", io::dump(io::to_json(big)));
  cfg.rep = tmp.path / "surf2.json";
  auto r2 = run_in_process(cfg);
  CHECK(r2.status == cli::kExitOk);
  CHECK(io::parse(r2.out)["theorem_gate"]["contradiction"] == false);
}

TEST_CASE("conjugate command writes a checkable certificate") {
  TempDir tmp;
  auto    a = potapchik();
  auto    b = nielsen_move(a, Move::Twist);
  io::write_text_file(tmp.path / "a.json", io::dump(io::to_json(a)));
  io::write_text_file(tmp.path / "b.json", io::dump(io::to_json(b)));
  cli::RunConfig cfg;
  cfg.command      = cli::Command::Conjugate;
  cfg.inputs       = {tmp.path / "a.json", tmp.path / "b.json"};
  cfg.cert         = tmp.path / "cert.json";
  cfg.no_timestamp = true;
  auto res         = run_in_process(cfg);
  CHECK(res.status == cli::kExitOk);
  CHECK(io::parse(res.out)["verdict"] == "conjugate");
  auto cert = io::read_json_file(tmp.path / "cert.json");
  auto B    = io::matrix_from_json(cert["matrix"], a.field_ptr());
  CHECK(verify_conjugator(a, b, B));
}

TEST_CASE("finite-image and jordan commands") {
  cli::RunConfig cfg;
  cfg.command      = cli::Command::FiniteImage;
  cfg.rep          = scenarios / "potapchik.json";
  cfg.no_timestamp = true;
  auto res         = run_in_process(cfg);
  CHECK(res.status == cli::kExitOk);
  auto j = io::parse(res.out);
  CHECK(j["verdict"] == "infinite_image");
  CHECK(j["screens"]["det_screen"]["result"] == "pass");

  cli::RunConfig jc;
  jc.command      = cli::Command::Jordan;
  jc.jordan_rank  = 4;
  jc.jordan_n_max = 30;
  jc.no_timestamp = true;
  auto jr         = run_in_process(jc);
  CHECK(jr.status == cli::kExitOk);
  CHECK(io::parse(jr.out)["all_nonidentity"] == true);
  jc.jordan_rank = 1;
  CHECK(run_in_process(jc).status == cli::kExitInput);
  jc.jordan_rank  = 2;
  jc.jordan_n_max = 0;
  CHECK(run_in_process(jc).status == cli::kExitInput);
}

TEST_CASE("verify-paper runs every bundled scenario") {
  cli::RunConfig cfg;
  cfg.command = cli::Command::VerifyPaper;
  auto res    = run_in_process(cfg);
  CHECK(res.status == cli::kExitOk);
  CHECK(res.out.find("all passed") != std::string::npos);
  CHECK(res.out.find("FAIL") == std::string::npos);

  auto only = cli::verify_paper(scenarios, {"rank1"});
  CHECK(only.size() == 3);
  for (auto const& o : only) {
    CHECK(o.name.rfind("rank1", 0) == 0);
    CHECK(o.passed);
  }
  CHECK(cli::verify_paper(scenarios, {"closure-q8"}).size() == 1);
}

TEST_CASE("corrupted bundled data is an input error") {
  TempDir tmp;
  fs::copy(scenarios, tmp.path / "data");
  io::write_text_file(tmp.path / "data" / "potapchik.json", "{\"field\": [");
  auto status = run_exe("verify-paper --data-dir " + (tmp.path / "data").string(), tmp.path / "out");
  CHECK(status == 1);
  CHECK(io::read_text_file(tmp.path / "out.err").find("error:") != std::string::npos);

  io::write_text_file(tmp.path / "data" / "manifest.json", "[]");
  CHECK(run_exe("verify-paper --data-dir " + (tmp.path / "data").string(), tmp.path / "out") == 1);
}

TEST_CASE("executable exit codes") {
  TempDir tmp;
  auto    pot = (scenarios / "potapchik.json").string();
  CHECK(run_exe("orbit --rep " + pot, tmp.path / "o") == 0);
  CHECK(run_exe("orbit --rep /nonexistent.json", tmp.path / "o") == 1);
  CHECK(run_exe("orbit --rep " + pot + " --moves c,zz", tmp.path / "o") == 1);
  CHECK(run_exe("orbit", tmp.path / "o") == 1);
  CHECK(run_exe("bogus", tmp.path / "o") == 1);
  CHECK(run_exe("jordan --rank 3 --n-max 10", tmp.path / "o") == 0);
  CHECK(run_exe("--help", tmp.path / "o") == 0);

  // reducible, non-cyclotomic minimal polynomial
  io::write_text_file(tmp.path / "red.json", R"({"field":{"minpoly":["2","0","3","0","1"]},
    "shape":{"kind":"free","rank":1},"matrices":[[[["1","0","0","0"]]]]})");
  CHECK(run_exe("orbit --rep " + (tmp.path / "red.json").string(), tmp.path / "o") == 1);
  CHECK(run_exe("--unsafe-accept-field orbit --rep " + (tmp.path / "red.json").string(),
                tmp.path / "o")
        == 0);
}

TEST_CASE("runs are deterministic") {
  TempDir tmp;
  auto    pot = (scenarios / "dihedral_6.json").string();
  REQUIRE(run_exe("--no-timestamp orbit --workers 1 --rep " + pot, tmp.path / "a") == 0);
  REQUIRE(run_exe("--no-timestamp orbit --workers 8 --rep " + pot, tmp.path / "b") == 0);
  auto a = io::read_text_file(tmp.path / "a");
  CHECK(a == io::read_text_file(tmp.path / "b"));

  REQUIRE(run_exe("orbit --rep " + pot, tmp.path / "c") == 0);
  auto c = io::parse(io::read_text_file(tmp.path / "c"));
  CHECK(c.contains("generated_at"));
  c.erase("generated_at");
  CHECK(io::dump(c) == a);
}

TEST_CASE("fmt canonicalises and checks") {
  TempDir tmp;
  for (auto const& entry : fs::directory_iterator(scenarios)) {
    if (entry.path().filename() == "manifest.json") {
      continue;
    }
    cli::RunConfig cfg;
    cfg.command    = cli::Command::Fmt;
    cfg.inputs     = {entry.path()};
    cfg.check_only = true;
    CHECK_MESSAGE(run_in_process(cfg).status == cli::kExitOk, entry.path().string());
  }

  auto compact = io::to_json(potapchik()).dump();
  io::write_text_file(tmp.path / "p.json", compact);
  cli::RunConfig cfg;
  cfg.command    = cli::Command::Fmt;
  cfg.inputs     = {tmp.path / "p.json"};
  cfg.check_only = true;
  CHECK(run_in_process(cfg).status == cli::kExitInput);
  cfg.check_only = false;
  cfg.out        = tmp.path / "p2.json";
  CHECK(run_in_process(cfg).status == cli::kExitOk);
  CHECK(io::read_rep(tmp.path / "p2.json") == potapchik());
  cfg.inputs     = {tmp.path / "p2.json"};
  cfg.out        = std::nullopt;
  cfg.check_only = true;
  CHECK(run_in_process(cfg).status == cli::kExitOk);

  io::write_text_file(tmp.path / "x.json", R"({"hello": 1})");
  cfg.inputs = {tmp.path / "x.json"};
  CHECK(run_in_process(cfg).status == cli::kExitInput);
}

TEST_CASE("worker count from the environment") {
  ::setenv("MCGFIN_WORKERS", "6", 1);
  CHECK(cli::default_workers() == 6);
  ::setenv("MCGFIN_WORKERS", "zero", 1);
  CHECK(cli::default_workers() == 1);
  ::unsetenv("MCGFIN_WORKERS");
  CHECK(cli::default_workers() == 1);
}

TEST_CASE("internal error codes map to exit status 2") {
  CHECK(is_internal(ErrorCode::InternalSchurViolation));
  CHECK(is_internal(ErrorCode::ClosureRecheckFailed));
  CHECK(is_internal(ErrorCode::GateContradiction));
  CHECK(!is_internal(ErrorCode::ParseError));
}
