// Replays the bundled example scenarios listed in manifest.json.

#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "mcgfin/cli.hpp"
#include "mcgfin/error.hpp"
#include "mcgfin/io.hpp"

namespace mcgfin::cli {

  namespace {

    using io::json;
    namespace fs = std::filesystem;

    struct Check {
      bool        passed = true;
      std::string detail;

      void expect(bool cond, std::string const& what) {
        if (!cond && passed) {
          passed = false;
          detail = what;
        }
      }
    };

    std::string get_string(json const& s, char const* key,
                           std::string fallback = "") {
      return s.contains(key) ? s.at(key).get<std::string>() : fallback;
    }

    MoveSet scenario_moves(json const& s, fs::path const& dir, int rank) {
      std::string spec = get_string(s, "moves", "nielsen");
      MoveSet     moves;
      if (spec == "nielsen") {
        moves = MoveSet::nielsen(rank);
      } else if (spec != "none") {
        throw Error(ErrorCode::ParseError, "scenario moves must be nielsen or none");
      }
      if (s.contains("automorphisms")) {
        for (auto const& f : s.at("automorphisms")) {
          moves.custom.push_back(io::read_substitution(dir / f.get<std::string>()));
        }
      }
      return moves;
    }

    Check run_orbit(json const& s, fs::path const& dir) {
      RepTuple rep = io::read_rep(dir / get_string(s, "rep"));
      auto     combine = get_string(s, "combine");
      if (combine == "direct_sum_trivial") {
        rep = direct_sum(rep, trivial_rep(rep.shape(), rep.field_ptr(), 1));
      } else if (combine == "tensor_trivial") {
        rep = tensor(rep, trivial_rep(rep.shape(), rep.field_ptr(), 1));
      }
      MoveSet moves = scenario_moves(s, dir, static_cast<int>(rep.generator_count()));
      auto    result = mcg_finite_check(rep, moves);
      auto const& expect = s.at("expect");
      Check   c;
      c.expect(verdict_name(result.verdict) == expect.at("verdict").get<std::string>(),
               "verdict " + std::string(verdict_name(result.verdict)));
      if (expect.contains("classes")) {
        c.expect(result.class_count() == expect.at("classes").get<std::size_t>(),
                 std::to_string(result.class_count()) + " classes");
      }
      if (result.verdict == OrbitResult::Verdict::Finite) {
        c.expect(check_closure(result, moves), "closure re-check failed");
      }
      if (c.passed) {
        c.detail = std::to_string(result.class_count()) + " class(es), rank "
                   + std::to_string(rep.dimension());
      }
      return c;
    }

    Check run_finite_image(json const& s, fs::path const& dir) {
      RepTuple    rep    = io::read_rep(dir / get_string(s, "rep"));
      auto        image  = finite_image(rep, s.value("cap", std::size_t{200000}));
      auto const& expect = s.at("expect");
      Check       c;
      c.expect(image_kind_name(image.kind) == expect.at("verdict").get<std::string>(),
               "verdict " + std::string(image_kind_name(image.kind)));
      if (c.passed && expect.contains("order")) {
        c.expect(image.order == expect.at("order").get<std::size_t>(),
                 "order " + std::to_string(image.order));
      }
      if (c.passed && expect.contains("reason")) {
        c.expect(reason_code(image.witness->reason) == expect.at("reason").get<std::string>(),
                 "reason " + std::string(reason_code(image.witness->reason)));
      }
      if (c.passed && expect.contains("witness_length")) {
        c.expect(image.witness->word.length()
                     == expect.at("witness_length").get<std::size_t>(),
                 "witness " + format_word(image.witness->word));
      }
      if (c.passed) {
        c.detail = image.kind == ImageVerdict::Kind::FiniteImage
                       ? "order " + std::to_string(image.order)
                       : image.witness ? "witness " + format_word(image.witness->word)
                                       : "";
      }
      return c;
    }

    Check run_conjugate_move(json const& s, fs::path const& dir) {
      RepTuple a    = io::read_rep(dir / get_string(s, "rep"));
      auto     move = parse_move(get_string(s, "move", "d"));
      if (!move) {
        throw Error(ErrorCode::ParseError, "unknown move in scenario");
      }
      RepTuple b = nielsen_move(a, *move);
      auto     v = are_conjugate(a, b);
      Check    c;
      c.expect(v.kind == ConjugacyVerdict::Kind::Conjugate, "not conjugate");
      if (c.passed) {
        c.expect(verify_conjugator(a, b, *v.conjugator), "conjugator rejected");
      }
      return c;
    }

    Check run_rank1(json const& s, fs::path const& dir) {
      RepTuple    rep    = io::read_rep(dir / get_string(s, "rep"));
      auto        v      = rank1_verdict(rep);
      auto const& expect = s.at("expect");
      Check       c;
      bool        want_finite = expect.at("verdict").get<std::string>() == "finite";
      c.expect(v.finite == want_finite, v.finite ? "finite orbit" : "infinite orbit");
      if (c.passed && !v.finite && expect.contains("witness")) {
        c.expect(v.witness->generator == expect.at("witness").get<std::size_t>(),
                 "witness generator " + std::to_string(v.witness->generator));
      }
      return c;
    }

    // Brute-force closure of a scalar pair under c, tau, eps, d.
    std::set<std::vector<std::string>> scalar_pair_closure(FieldElement a,
                                                           FieldElement b) {
      using Pair = std::pair<FieldElement, FieldElement>;
      auto key   = [](Pair const& p) {
        return std::vector<std::string>{p.first.to_string(), p.second.to_string()};
      };
      std::set<std::vector<std::string>> seen;
      std::vector<Pair>                  todo{{a, b}};
      seen.insert(key(todo[0]));
      while (!todo.empty()) {
        Pair p = todo.back();
        todo.pop_back();
        for (Pair q : {Pair{p.second, p.first}, Pair{p.first.inverse(), p.second},
                       Pair{p.first * p.second, p.second}}) {
          if (seen.insert(key(q)).second) {
            todo.push_back(q);
          }
        }
      }
      return seen;
    }

    Check run_rank1_mu4_sweep(json const&, fs::path const&) {
      auto k = NumberField::make(QPoly{Rational(1), Rational(0), Rational(1)}, "i");
      auto i = FieldElement::generator(k);
      std::vector<FieldElement> mu4{FieldElement::one(k), i, i.pow(2), i.pow(3)};
      std::set<std::vector<std::string>> ambient;
      for (auto const& x : mu4) {
        for (auto const& y : mu4) {
          ambient.insert({x.to_string(), y.to_string()});
        }
      }
      Check c;
      for (auto const& x : mu4) {
        for (auto const& y : mu4) {
          RepTuple rep(GroupShape::free(2),
                       {Matrix::diagonal({x}), Matrix::diagonal({y})});
          auto     v = rank1_verdict(rep);
          c.expect(v.finite, "(" + x.to_string() + ", " + y.to_string() + ") not finite");
          if (!c.passed) {
            return c;
          }
          std::set<std::vector<std::string>> orbit;
          for (auto const& r : v.orbit->representatives) {
            orbit.insert({r[0](0, 0).to_string(), r[1](0, 0).to_string()});
          }
          auto brute = scalar_pair_closure(x, y);
          c.expect(orbit == brute, "orbit differs from brute force");
          for (auto const& t : orbit) {
            c.expect(ambient.contains(t), "orbit leaves the ambient set");
          }
        }
      }
      if (c.passed) {
        c.detail = "16 tuples";
      }
      return c;
    }

    Check run_closure(json const& s, fs::path const& dir) {
      RepTuple rep = io::read_rep(dir / get_string(s, "rep"));
      auto     cl  = group_closure(rep, s.value("cap", std::size_t{200000}));
      auto     want = s.at("expect").at("order").get<std::size_t>();
      Check    c;
      c.expect(cl.finite && cl.count == want,
               cl.finite ? "order " + std::to_string(cl.count) : "cap exceeded");
      if (c.passed) {
        c.detail = "order " + std::to_string(cl.count);
      }
      return c;
    }

    Check run_cyclotomic_orders(json const& s, fs::path const&) {
      auto  q     = NumberField::rationals();
      auto  m_max = s.value("m_max", 30);
      Check c;
      for (int m = 1; m <= m_max && c.passed; ++m) {
        auto a     = Matrix::companion(q, cyclotomic_polynomial(m));
        auto order = matrix_finite_order(a);
        c.expect(order && *order == static_cast<std::uint64_t>(m),
                 "companion of Phi_" + std::to_string(m));
      }
      c.expect(!matrix_finite_order(Matrix::from_ints(q, {{1, 1}, {0, 1}})),
               "unipotent reported finite");
      return c;
    }

    Check run_jordan_sweep(json const& s, fs::path const&) {
      auto  r_min = s.value("rank_min", 2), r_max = s.value("rank_max", 6);
      auto  n_max = s.value("n_max", 100);
      Check c;
      for (int r = r_min; r <= r_max; ++r) {
        for (int n = 1; n <= n_max; ++n) {
          c.expect(jordan_commutator_test(static_cast<std::size_t>(r), n),
                   "identity at r=" + std::to_string(r) + " n=" + std::to_string(n));
        }
      }
      return c;
    }

    using Runner = std::function<Check(json const&, fs::path const&)>;

    std::map<std::string, Runner> const& runners() {
      static std::map<std::string, Runner> const table{
          {"orbit", run_orbit},
          {"finite_image", run_finite_image},
          {"conjugate_move", run_conjugate_move},
          {"rank1", run_rank1},
          {"rank1_mu4_sweep", run_rank1_mu4_sweep},
          {"closure", run_closure},
          {"cyclotomic_orders", run_cyclotomic_orders},
          {"jordan_sweep", run_jordan_sweep},
      };
      return table;
    }

    bool selected(json const& s, std::vector<std::string> const& only) {
      if (only.empty()) {
        return true;
      }
      for (auto const& o : only) {
        if (s.at("name") == o) {
          return true;
        }
        if (s.contains("tags")) {
          for (auto const& t : s.at("tags")) {
            if (t == o) {
              return true;
            }
          }
        }
      }
      return false;
    }

  }  // namespace

  std::vector<ScenarioOutcome> verify_paper(fs::path const&                 data_dir,
                                            std::vector<std::string> const& only) {
    json manifest = io::read_json_file(data_dir / "manifest.json");
    if (!manifest.contains("scenarios") || !manifest.at("scenarios").is_array()) {
      throw Error(ErrorCode::ParseError, "manifest.json has no scenario list");
    }
    std::vector<ScenarioOutcome> outcomes;
    for (auto const& s : manifest.at("scenarios")) {
      if (!s.contains("name") || !s.contains("kind") || !s.contains("source")) {
        throw Error(ErrorCode::ParseError,
                    "every scenario needs name, kind and source: " + s.dump());
      }
      if (!selected(s, only)) {
        continue;
      }
      auto it = runners().find(s.at("kind").get<std::string>());
      if (it == runners().end()) {
        throw Error(ErrorCode::ParseError,
                    "unknown scenario kind " + s.at("kind").dump());
      }
      ScenarioOutcome o;
      o.name     = s.at("name").get<std::string>();
      o.source   = s.at("source").get<std::string>();
      auto start = std::chrono::steady_clock::now();
      Check c;
      try {
        c = it->second(s, data_dir);
      } catch (json::exception const& e) {
        throw Error(ErrorCode::ParseError, o.name + ": " + e.what());
      }
      std::chrono::duration<double, std::milli> spent =
          std::chrono::steady_clock::now() - start;
      o.passed = c.passed;
      o.detail = c.detail;
      o.millis = spent.count();
      outcomes.push_back(std::move(o));
    }
    return outcomes;
  }

}  // namespace mcgfin::cli
