#ifndef MCGFIN_AUTGEN_HPP_
#define MCGFIN_AUTGEN_HPP_

// Free-group automorphisms acting on representation tuples.
//
// Tuples are acted on from the right: a substitution sigma sends rho to
// rho o sigma, i.e. the i-th matrix becomes rho(sigma(x_i)).  With this
// convention the four named moves are exactly
//   c   : (A1, ..., AN) -> (A2, ..., AN, A1)
//   tau : (A1, A2, ...) -> (A2, A1, ...)
//   eps : (A1, ...)     -> (A1^-1, ...)
//   d   : (A1, A2, ...) -> (A1 A2, A2, ...)

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgfin/matrep.hpp"
#include "mcgfin/word.hpp"

namespace mcgfin {

  // An endomorphism x_i -> images[i] together with a claimed inverse; the
  // constructor checks both composites reduce to the identity.
  class Substitution {
   public:
    Substitution(int rank, std::vector<Word> images,
                 std::vector<Word> inverse_images, std::string name = "");

    static Substitution identity(int rank);

    int rank() const noexcept {
      return _rank;
    }
    std::vector<Word> const& images() const noexcept {
      return _images;
    }
    std::vector<Word> const& inverse_images() const noexcept {
      return _inverse;
    }
    std::string const& name() const noexcept {
      return _name;
    }

    Substitution inverse() const;
    // The image of w under this substitution, freely reduced.
    Word apply(Word const& w) const;

    friend bool operator==(Substitution const& a, Substitution const& b) {
      return a._rank == b._rank && a._images == b._images
             && a._inverse == b._inverse;
    }

   private:
    int               _rank;
    std::vector<Word> _images;
    std::vector<Word> _inverse;
    std::string       _name;
  };

  // Substitutes images[j] for x_j in w and reduces.
  Word substitute(Word const& w, std::vector<Word> const& images);

  // (outer o inner)(x) = outer(inner(x))
  Substitution compose(Substitution const& outer, Substitution const& inner);

  enum class Move { Cycle, Transpose, Invert, Twist };

  // "c", "tau", "eps", "d"
  std::string_view      move_name(Move m) noexcept;
  std::optional<Move>   parse_move(std::string_view name);
  int                   move_min_rank(Move m) noexcept;

  struct MoveSet {
    std::vector<Move>         named;
    std::vector<Substitution> custom;

    // c, tau, eps, d restricted to those defined at this rank.
    static MoveSet nielsen(int rank);

    bool        empty() const noexcept {
      return named.empty() && custom.empty();
    }
    bool        contains(Move m) const noexcept;
    std::size_t size() const noexcept {
      return named.size() + custom.size();
    }
    // Names in application order: named moves in c, tau, eps, d order,
    // then custom substitutions in insertion order.
    std::vector<std::string> labels() const;
  };

  // Throws RankTooSmall.
  RepTuple     nielsen_move(RepTuple const& rep, Move move);
  Substitution substitution_for_move(Move move, int rank);

  // rho -> rho o sigma.  Throws RankMismatch.
  RepTuple apply_substitution(RepTuple const& rep, Substitution const& sigma);

  // Puncture loops of the standard presentation of pi_1(Sigma_{g,n}) with
  // free generators a1, b1, ..., ag, bg, p1, ..., p_{n-1}: the n - 1 free
  // puncture generators and p_n = (prod [a_i, b_i] p_1 ... p_{n-1})^-1.
  std::vector<Word> peripheral_words(GroupShape const& shape);

  // Whether sigma sends every peripheral word to a conjugate of a
  // peripheral word.  Throws ShapeNotSurface.
  bool peripheral_check(Substitution const& sigma, GroupShape const& shape);

}  // namespace mcgfin

#endif  // MCGFIN_AUTGEN_HPP_
