#include "mcgfin/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "mcgfin/error.hpp"
#include "mcgfin/io.hpp"

namespace mcgfin::cli {

  namespace {

    using io::json;

    std::string utc_timestamp() {
      auto        now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
      std::tm     tm{};
      gmtime_r(&now, &tm);
      std::ostringstream s;
      s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
      return s.str();
    }

    void emit(RunConfig const& cfg, json doc, std::ostream& out) {
      if (!cfg.no_timestamp) {
        doc["generated_at"] = utc_timestamp();
      }
      auto text = io::dump(doc);
      if (cfg.out) {
        io::write_text_file(*cfg.out, text);
      } else {
        out << text;
      }
    }

    MoveSet parse_move_spec(std::string const& spec, int rank,
                            std::vector<std::filesystem::path> const& auts) {
      MoveSet moves;
      if (spec == "nielsen") {
        moves = MoveSet::nielsen(rank);
      } else if (spec != "none" && !spec.empty()) {
        std::stringstream s(spec);
        std::string       tok;
        while (std::getline(s, tok, ',')) {
          auto m = parse_move(tok);
          if (!m) {
            throw Error(ErrorCode::InvalidArgument,
                        "unknown move '" + tok + "' (expected c, tau, eps, d)");
          }
          if (!moves.contains(*m)) {
            moves.named.push_back(*m);
          }
        }
      }
      for (auto const& path : auts) {
        moves.custom.push_back(io::read_substitution(path));
      }
      if (moves.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no moves given");
      }
      return moves;
    }

    int run_orbit(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
      if (!cfg.rep) {
        throw Error(ErrorCode::InvalidArgument, "orbit needs --rep FILE");
      }
      RepTuple rep = io::read_rep(*cfg.rep, cfg.unsafe_accept);
      MoveSet  moves =
          parse_move_spec(cfg.moves, static_cast<int>(rep.generator_count()),
                          cfg.automorphisms);
      OrbitBudget budget{cfg.max_classes, cfg.max_depth, cfg.max_seconds};
      OrbitOptions options;
      options.workers            = cfg.workers;
      options.fingerprint_length = cfg.fingerprint_length;
      options.pencil_cap         = cfg.pencil_cap;

      OrbitResult result = mcg_finite_check(rep, moves, budget, options);
      json        doc    = io::to_json(result);
      int         status = kExitOk;
      if (result.verdict == OrbitResult::Verdict::Finite) {
        bool closed        = check_closure(result, moves, cfg.fingerprint_length);
        doc["closure_check"] = closed ? "verified" : "FAILED";
        if (!closed) {
          err << "error: orbit closure re-check failed\n";
          status = kExitInternal;
        }
      }
      if (cfg.full_mcg && rep.shape().is_surface()) {
        try {
          auto image  = finite_image(rep, cfg.cap, cfg.witness_length);
          auto report = theorem_gate(rep, rep.shape(), result, image);
          doc["theorem_gate"] = {{"contradiction", report.contradiction},
                                 {"clause", report.clause},
                                 {"image", io::to_json(image)}};
          if (report.contradiction) {
            err << "error: " << report.clause << "\n";
            status = kExitInternal;
          }
        } catch (Error const& e) {
          if (e.code() != ErrorCode::GateNotApplicable) {
            throw;
          }
          doc["theorem_gate"] = {{"applicable", false}, {"reason", e.what()}};
        }
      }
      emit(cfg, std::move(doc), out);
      err << "orbit: " << verdict_name(result.verdict) << ", "
          << result.class_count() << " class(es)\n";
      return status;
    }

    int run_conjugate(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
      if (cfg.inputs.size() != 2) {
        throw Error(ErrorCode::InvalidArgument, "conjugate needs two representation files");
      }
      RepTuple a = io::read_rep(cfg.inputs[0], cfg.unsafe_accept);
      RepTuple b = io::read_rep(cfg.inputs[1], cfg.unsafe_accept);
      ConjugacyOptions options;
      options.fingerprint_length = cfg.fingerprint_length;
      options.pencil_cap         = cfg.pencil_cap;
      auto v = are_conjugate(a, b, options);
      if (v.conjugator && cfg.cert) {
        io::write_text_file(*cfg.cert, io::dump(io::conjugator_certificate(*v.conjugator)));
      }
      emit(cfg, io::to_json(v), out);
      err << "conjugate: " << io::to_json(v)["verdict"].get<std::string>() << "\n";
      return kExitOk;
    }

    int run_finite_image(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
      if (!cfg.rep) {
        throw Error(ErrorCode::InvalidArgument, "finite-image needs --rep FILE");
      }
      RepTuple rep   = io::read_rep(*cfg.rep, cfg.unsafe_accept);
      auto     image = finite_image(rep, cfg.cap, cfg.witness_length);
      json     doc   = io::to_json(image);
      doc["screens"] = io::to_json(screens(rep));
      emit(cfg, std::move(doc), out);
      err << "finite-image: " << image_kind_name(image.kind) << "\n";
      return kExitOk;
    }

    int run_jordan(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
      if (cfg.jordan_n_max < 1) {
        throw Error(ErrorCode::InvalidExponent, "--n-max must be >= 1");
      }
      json failures = json::array();
      for (long long n = 1; n <= cfg.jordan_n_max; ++n) {
        if (!jordan_commutator_test(cfg.jordan_rank, n)) {
          failures.push_back(n);
        }
      }
      json doc = {{"rank", cfg.jordan_rank},
                  {"n_max", cfg.jordan_n_max},
                  {"all_nonidentity", failures.empty()},
                  {"identity_at", failures}};
      emit(cfg, std::move(doc), out);
      if (!failures.empty()) {
        err << "error: commutator is the identity for some n\n";
        return kExitInternal;
      }
      return kExitOk;
    }

    int run_fmt(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
      if (cfg.inputs.size() != 1) {
        throw Error(ErrorCode::InvalidArgument, "fmt needs exactly one file");
      }
      auto original = io::read_text_file(cfg.inputs[0]);
      json j        = io::parse(original);
      json canonical;
      if (j.is_object() && j.contains("matrices")) {
        canonical = io::to_json(io::rep_from_json(j, cfg.unsafe_accept));
      } else if (j.is_object() && j.contains("images")) {
        canonical = io::to_json(io::substitution_from_json(j));
      } else {
        throw Error(ErrorCode::ParseError,
                    "not a representation or automorphism file");
      }
      auto text = io::dump(canonical);
      if (cfg.check_only) {
        if (text != original) {
          err << cfg.inputs[0].string() << ": not in canonical form\n";
          return kExitInput;
        }
        return kExitOk;
      }
      if (cfg.out) {
        io::write_text_file(*cfg.out, text);
      } else {
        out << text;
      }
      return kExitOk;
    }

    int run_verify(RunConfig const& cfg, std::ostream& out, std::ostream&) {
      auto dir      = cfg.data_dir.value_or(default_data_dir());
      auto outcomes = verify_paper(dir, cfg.only);
      bool all      = true;
      json report   = json::array();
      out << std::left << std::setw(7) << "result" << std::setw(34) << "scenario"
          << std::setw(20) << "source" << "time\n";
      for (auto const& o : outcomes) {
        all = all && o.passed;
        out << std::setw(7) << (o.passed ? "PASS" : "FAIL") << std::setw(34) << o.name
            << std::setw(20) << o.source << std::fixed << std::setprecision(1)
            << o.millis << " ms";
        if (!o.detail.empty()) {
          out << "  " << o.detail;
        }
        out << "\n";
        report.push_back({{"name", o.name},
                          {"source", o.source},
                          {"passed", o.passed},
                          {"detail", o.detail}});
      }
      out << outcomes.size() << " scenario(s), "
          << (all ? "all passed" : "FAILURES present") << "\n";
      if (cfg.out) {
        json doc = {{"scenarios", report}, {"all_passed", all}};
        if (!cfg.no_timestamp) {
          doc["generated_at"] = utc_timestamp();
        }
        io::write_text_file(*cfg.out, io::dump(doc));
      }
      return all ? kExitOk : kExitInternal;
    }

  }  // namespace

  std::size_t default_workers() {
    if (char const* env = std::getenv("MCGFIN_WORKERS")) {
      char* end = nullptr;
      long  v   = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) {
        return static_cast<std::size_t>(v);
      }
    }
    return 1;
  }

  std::filesystem::path default_data_dir() {
    return MCGFIN_DATA_DIR;
  }

  int run(RunConfig const& config, std::ostream& out, std::ostream& err) {
    try {
      switch (config.command) {
        case Command::Orbit: return run_orbit(config, out, err);
        case Command::Conjugate: return run_conjugate(config, out, err);
        case Command::FiniteImage: return run_finite_image(config, out, err);
        case Command::Jordan: return run_jordan(config, out, err);
        case Command::VerifyPaper: return run_verify(config, out, err);
        case Command::Fmt: return run_fmt(config, out, err);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return is_internal(e.code()) ? kExitInternal : kExitInput;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
    return kExitInput;
  }

}  // namespace mcgfin::cli
