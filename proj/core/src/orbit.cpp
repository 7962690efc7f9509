#include "mcgfin/orbit.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "mcgfin/error.hpp"

namespace mcgfin {

  std::string_view verdict_name(OrbitResult::Verdict v) noexcept {
    switch (v) {
      case OrbitResult::Verdict::Finite: return "finite";
      case OrbitResult::Verdict::BudgetExceeded: return "budget_exceeded";
      case OrbitResult::Verdict::InfiniteCertified: return "infinite_certified";
    }
    return "?";
  }

  namespace {

    std::vector<Move> ordered_named(MoveSet const& moves) {
      std::vector<Move> out;
      for (auto m : {Move::Cycle, Move::Transpose, Move::Invert, Move::Twist}) {
        if (moves.contains(m)) {
          out.push_back(m);
        }
      }
      return out;
    }

    void validate_moves(RepTuple const& rep, MoveSet const& moves) {
      if (moves.empty()) {
        throw Error(ErrorCode::InvalidArgument, "empty move set");
      }
      auto n = static_cast<int>(rep.generator_count());
      for (auto m : moves.named) {
        if (n < move_min_rank(m)) {
          throw Error(ErrorCode::MoveRankMismatch,
                      "move " + std::string(move_name(m)) + " needs rank >= 2, tuple has "
                          + std::to_string(n) + " generators");
        }
      }
      for (auto const& s : moves.custom) {
        if (s.rank() != n) {
          throw Error(ErrorCode::MoveRankMismatch,
                      "automorphism of rank " + std::to_string(s.rank())
                          + " on a tuple of " + std::to_string(n) + " generators");
        }
      }
    }

    template <typename F>
    void parallel_for(std::size_t count, std::size_t workers, F&& body) {
      workers = std::max<std::size_t>(1, std::min(workers, count));
      if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) {
          body(i);
        }
        return;
      }
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < count; i = next++) {
            body(i);
          }
        });
      }
      for (auto& t : pool) {
        t.join();
      }
    }

    struct Item {
      std::size_t                       source;
      std::size_t                       move;
      std::optional<RepTuple>           image;
      std::optional<TraceFingerprint>   fp;
      std::optional<std::size_t>        match;
      bool                              unsupported = false;
      std::exception_ptr                error;
    };

    std::uint64_t saturating_pow(std::uint64_t base, std::size_t e,
                                 std::uint64_t limit) {
      std::uint64_t r = 1;
      for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && r > limit / base) {
          return limit;
        }
        r *= base;
      }
      return std::min(r, limit);
    }

    // Position that can be brought to slot 2 by the permutation moves, and
    // therefore escapes under powers of d if its scalar has infinite order.
    std::optional<Rank1Witness> rank1_escape(RepTuple const& rep,
                                             MoveSet const&  moves) {
      std::size_t n = rep.generator_count();
      if (n < 2 || !moves.contains(Move::Twist)) {
        return std::nullopt;
      }
      // Positions whose entry can be moved into slot 2 (0-based slot 1).
      std::vector<bool>        reach(n, false);
      std::vector<std::size_t> todo{1};
      reach[1] = true;
      while (!todo.empty()) {
        std::size_t p = todo.back();
        todo.pop_back();
        std::vector<std::size_t> nbrs;
        if (moves.contains(Move::Cycle)) {
          nbrs.push_back((p + 1) % n);
          nbrs.push_back((p + n - 1) % n);
        }
        if (moves.contains(Move::Transpose) && p <= 1) {
          nbrs.push_back(1 - p);
        }
        for (auto q : nbrs) {
          if (!reach[q]) {
            reach[q] = true;
            todo.push_back(q);
          }
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[j] && !root_of_unity_order(rep[j](0, 0))) {
          return Rank1Witness{j + 1, rep[j](0, 0)};
        }
      }
      return std::nullopt;
    }

    // lcm of the scalar orders when every scalar is torsion.
    std::optional<std::uint64_t> rank1_torsion_exponent(RepTuple const& rep) {
      std::uint64_t m = 1;
      for (auto const& a : rep.matrices()) {
        auto order = root_of_unity_order(a(0, 0));
        if (!order) {
          return std::nullopt;
        }
        m = std::lcm(m, *order);
      }
      return m;
    }

    OrbitBudget exact_rank1_budget(RepTuple const& rep, std::uint64_t exponent,
                                   OrbitBudget budget) {
      constexpr std::uint64_t limit = 10'000'000;
      auto bound = saturating_pow(exponent, rep.generator_count(), limit);
      if (bound < limit) {
        budget.max_classes = std::max<std::size_t>(budget.max_classes, bound);
        budget.max_depth   = std::max<std::size_t>(budget.max_depth, bound);
        budget.max_seconds.reset();
      }
      return budget;
    }

  }  // namespace

  RepTuple apply_labeled_move(RepTuple const& rep, MoveSet const& moves,
                              std::size_t index) {
    auto named = ordered_named(moves);
    if (index < named.size()) {
      return nielsen_move(rep, named[index]);
    }
    index -= named.size();
    if (index >= moves.custom.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "move index out of range");
    }
    return apply_substitution(rep, moves.custom[index]);
  }

  OrbitResult enumerate_orbit(RepTuple const& rep, MoveSet const& moves,
                              OrbitBudget const& budget,
                              OrbitOptions const& options) {
    validate_moves(rep, moves);
    using clock  = std::chrono::steady_clock;
    auto started = clock::now();
    auto out_of_time = [&] {
      if (!budget.max_seconds) {
        return false;
      }
      std::chrono::duration<double> spent = clock::now() - started;
      return spent.count() > *budget.max_seconds;
    };

    OrbitResult result;
    result.moves          = moves.labels();
    std::size_t move_count = moves.size();

    std::vector<TraceFingerprint> fps;
    std::unordered_map<TraceFingerprint, std::vector<std::size_t>,
                       TraceFingerprintHash>
        buckets;
    auto add_class = [&](RepTuple r, TraceFingerprint fp) {
      std::size_t idx = result.representatives.size();
      result.representatives.push_back(std::move(r));
      buckets[fp].push_back(idx);
      fps.push_back(std::move(fp));
      return idx;
    };
    add_class(rep, fingerprint(rep, options.fingerprint_length));

    ConjugacyOptions copts;
    copts.fingerprint_length       = options.fingerprint_length;
    copts.pencil_cap               = options.pencil_cap;
    copts.fingerprints_known_equal = true;

    auto exceeded = [&](std::string reason, std::size_t expanded) {
      result.verdict       = OrbitResult::Verdict::BudgetExceeded;
      result.budget_reason = std::move(reason);
      result.frontier_size = result.representatives.size() - expanded;
      return result;
    };

    std::size_t level_begin = 0, level_end = 1, depth = 0;
    while (level_begin < level_end) {
      if (out_of_time()) {
        return exceeded("max_seconds", level_begin);
      }
      std::vector<Item> items;
      items.reserve((level_end - level_begin) * move_count);
      for (std::size_t s = level_begin; s < level_end; ++s) {
        for (std::size_t m = 0; m < move_count; ++m) {
          items.push_back(Item{s, m, {}, {}, {}, false, nullptr});
        }
      }

      // Phase 1: pure work against the classes numbered before this level.
      parallel_for(items.size(), options.workers, [&](std::size_t k) {
        Item& it = items[k];
        try {
          it.image = apply_labeled_move(result.representatives[it.source],
                                        moves, it.move);
          it.fp    = fingerprint(*it.image, options.fingerprint_length);
          auto b   = buckets.find(*it.fp);
          if (b == buckets.end()) {
            return;
          }
          for (auto j : b->second) {
            auto v = are_conjugate(*it.image, result.representatives[j], copts);
            if (v.kind == ConjugacyVerdict::Kind::Conjugate) {
              it.match = j;
              return;
            }
            if (v.kind == ConjugacyVerdict::Kind::Unsupported) {
              it.unsupported = true;
              return;
            }
          }
        } catch (...) {
          it.error = std::current_exception();
        }
      });
      if (out_of_time()) {
        return exceeded("max_seconds", level_begin);
      }

      // Phase 2: single owner, fixed order.
      for (auto& it : items) {
        if (it.error) {
          std::rethrow_exception(it.error);
        }
        if (it.unsupported) {
          throw Error(ErrorCode::UnsupportedRepresentation,
                      "intertwiner space exceeds the pencil cap");
        }
        std::optional<std::size_t> target = it.match;
        if (!target) {
          auto& bucket = buckets[*it.fp];
          for (auto j : bucket) {
            if (j < level_end) {
              continue;  // already tested in phase 1
            }
            auto v = are_conjugate(*it.image, result.representatives[j], copts);
            if (v.kind == ConjugacyVerdict::Kind::Conjugate) {
              target = j;
              break;
            }
            if (v.kind == ConjugacyVerdict::Kind::Unsupported) {
              throw Error(ErrorCode::UnsupportedRepresentation,
                          "intertwiner space exceeds the pencil cap");
            }
          }
        }
        if (!target) {
          if (result.representatives.size() >= budget.max_classes) {
            return exceeded("max_classes", it.source);
          }
          if (depth + 1 > budget.max_depth) {
            return exceeded("max_depth", it.source);
          }
          target       = add_class(std::move(*it.image), std::move(*it.fp));
          result.depth = depth + 1;
        }
        result.edges.push_back(
            {it.source, result.moves[it.move], *target});
      }
      level_begin = level_end;
      level_end   = result.representatives.size();
      ++depth;
    }
    result.verdict = OrbitResult::Verdict::Finite;
    return result;
  }

  Rank1Verdict rank1_verdict(RepTuple const& rep) {
    if (rep.dimension() != 1) {
      throw Error(ErrorCode::RankNotOne, "rank-1 verdict on a rank-"
                                             + std::to_string(rep.dimension())
                                             + " tuple");
    }
    auto         moves = MoveSet::nielsen(static_cast<int>(rep.generator_count()));
    Rank1Verdict v;
    if (auto w = rank1_escape(rep, moves)) {
      v.finite  = false;
      v.witness = w;
      return v;
    }
    // Either every scalar is torsion, or N = 1 where the only moves are
    // c (trivial) and eps, so the orbit is {a, a^-1}.
    OrbitBudget budget;
    if (auto e = rank1_torsion_exponent(rep)) {
      budget = exact_rank1_budget(rep, *e, budget);
    }
    v.orbit = enumerate_orbit(rep, moves, budget);
    if (v.orbit->verdict != OrbitResult::Verdict::Finite) {
      throw Error(ErrorCode::ClosureRecheckFailed,
                  "rank-1 orbit did not close within its exact bound");
    }
    return v;
  }

  OrbitResult mcg_finite_check(RepTuple const& rep, MoveSet const& moves,
                               OrbitBudget const& budget,
                               OrbitOptions const& options) {
    validate_moves(rep, moves);
    OrbitBudget effective = budget;
    if (rep.dimension() == 1) {
      if (auto w = rank1_escape(rep, moves)) {
        OrbitResult r;
        r.verdict = OrbitResult::Verdict::InfiniteCertified;
        r.moves   = moves.labels();
        r.representatives.push_back(rep);
        r.witness = w;
        return r;
      }
      if (auto e = rank1_torsion_exponent(rep)) {
        effective = exact_rank1_budget(rep, *e, budget);
      }
    }
    OrbitResult r = enumerate_orbit(rep, moves, effective, options);
    if (r.verdict == OrbitResult::Verdict::BudgetExceeded) {
      for (std::size_t k = 0; k < moves.size(); ++k) {
        EscapeDiagnostic diag;
        diag.move    = r.moves[k];
        RepTuple cur = rep;
        for (std::size_t step = 1; step <= options.probe_depth; ++step) {
          cur = apply_labeled_move(cur, moves, k);
          diag.traces.push_back(word_eval(cur, options.probe_word).trace());
        }
        r.diagnostics.push_back(std::move(diag));
      }
    }
    return r;
  }

  bool check_closure(OrbitResult const& result, MoveSet const& moves,
                     std::size_t fingerprint_length) {
    if (result.verdict != OrbitResult::Verdict::Finite) {
      return false;
    }
    auto        labels = moves.labels();
    std::size_t k      = result.class_count();
    if (result.edges.size() != k * labels.size()) {
      return false;
    }
    ConjugacyOptions copts;
    copts.fingerprint_length = fingerprint_length;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t m = 0; m < labels.size(); ++m) {
        std::optional<std::size_t> target;
        for (auto const& e : result.edges) {
          if (e.from == i && e.move == labels[m]) {
            if (target || e.to >= k) {
              return false;
            }
            target = e.to;
          }
        }
        if (!target) {
          return false;
        }
        auto image = apply_labeled_move(result.representatives[i], moves, m);
        auto v     = are_conjugate(image, result.representatives[*target], copts);
        if (v.kind != ConjugacyVerdict::Kind::Conjugate) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace mcgfin
