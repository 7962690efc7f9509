#ifndef MCGFIN_ORBIT_HPP_
#define MCGFIN_ORBIT_HPP_

// Orbit of a conjugacy class of tuples under a set of moves.
//
// Classes are numbered in breadth-first discovery order.  Each level of the
// search is expanded in parallel (move images, fingerprints and conjugacy
// tests against already numbered classes), then merged by a single owner in
// (source class, move) order, so numbering and edges do not depend on the
// worker count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcgfin/autgen.hpp"
#include "mcgfin/conj.hpp"

namespace mcgfin {

  struct OrbitBudget {
    std::size_t           max_classes = 10000;
    std::size_t           max_depth   = 64;
    std::optional<double> max_seconds;
  };

  struct OrbitOptions {
    std::size_t workers            = 1;
    std::size_t fingerprint_length = 3;
    std::size_t pencil_cap         = 8;
    std::size_t probe_depth        = 32;
    Word        probe_word         = Word::generator(1);
  };

  struct OrbitEdge {
    std::size_t from;
    std::string move;
    std::size_t to;

    friend bool operator==(OrbitEdge const&, OrbitEdge const&) = default;
  };

  // Trace of the probe word along sigma, sigma^2, ..., for one move.
  struct EscapeDiagnostic {
    std::string               move;
    std::vector<FieldElement> traces;
  };

  struct Rank1Witness {
    std::size_t  generator;  // 1-based
    FieldElement scalar;
  };

  struct OrbitResult {
    enum class Verdict { Finite, BudgetExceeded, InfiniteCertified };
    Verdict verdict = Verdict::BudgetExceeded;

    // Classes discovered so far (all of them when Finite).
    std::vector<RepTuple>  representatives;
    std::vector<OrbitEdge> edges;
    std::size_t            depth          = 0;
    std::size_t            frontier_size  = 0;
    std::string            budget_reason;
    std::vector<EscapeDiagnostic> diagnostics;
    std::optional<Rank1Witness>   witness;

    std::vector<std::string> moves;
    std::string              conjugacy_scope = "over K";

    std::size_t class_count() const noexcept {
      return representatives.size();
    }
  };

  std::string_view verdict_name(OrbitResult::Verdict v) noexcept;

  // Throws UnsupportedRepresentation when a conjugacy test is undecidable
  // under the pencil cap, and MoveRankMismatch for inapplicable moves.
  OrbitResult enumerate_orbit(RepTuple const&     rep,
                              MoveSet const&      moves,
                              OrbitBudget const&  budget  = {},
                              OrbitOptions const& options = {});

  struct Rank1Verdict {
    bool                        finite = true;
    std::optional<OrbitResult>  orbit;  // when finite
    std::optional<Rank1Witness> witness;
  };

  // Exact verdict for r = 1 under the Nielsen moves.  Throws RankNotOne.
  Rank1Verdict rank1_verdict(RepTuple const& rep);

  // Exact rank-1 decision when applicable, orbit enumeration otherwise;
  // BudgetExceeded results carry escape diagnostics.
  OrbitResult mcg_finite_check(RepTuple const&     rep,
                               MoveSet const&      moves,
                               OrbitBudget const&  budget  = {},
                               OrbitOptions const& options = {});

  // Independent re-check of a Finite result: every (class, move) has
  // exactly one edge and the move image is conjugate to its target.
  bool check_closure(OrbitResult const& result, MoveSet const& moves,
                     std::size_t fingerprint_length = 3);

  // The image of rep under the index-th move of `moves`, counted in
  // MoveSet::labels() order.
  RepTuple apply_labeled_move(RepTuple const& rep, MoveSet const& moves,
                              std::size_t index);

}  // namespace mcgfin

#endif  // MCGFIN_ORBIT_HPP_
