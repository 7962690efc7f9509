#ifndef MCGFIN_MATREP_HPP_
#define MCGFIN_MATREP_HPP_

// Representation tuples of free and punctured-surface groups.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcgfin/matrix.hpp"
#include "mcgfin/word.hpp"

namespace mcgfin {

  class GroupShape {
   public:
    enum class Kind { Free, Surface };

    static GroupShape free(int rank);
    // Requires n >= 1; g = 0 needs n >= 3.
    static GroupShape surface(int genus, int punctures);

    Kind kind() const noexcept {
      return _kind;
    }
    bool is_surface() const noexcept {
      return _kind == Kind::Surface;
    }
    int rank() const noexcept {
      return _rank;
    }
    int genus() const noexcept {
      return _genus;
    }
    int punctures() const noexcept {
      return _punctures;
    }
    // N for F_N; 2g + n - 1 for a punctured surface.
    int generator_count() const noexcept {
      return _rank;
    }
    std::string describe() const;

    friend bool operator==(GroupShape const&, GroupShape const&) = default;

   private:
    Kind _kind      = Kind::Free;
    int  _rank      = 1;
    int  _genus     = 0;
    int  _punctures = 0;
  };

  class RepTuple {
   public:
    // Validates shape/length agreement, a common size and field, and exact
    // invertibility of every matrix.
    RepTuple(GroupShape shape, std::vector<Matrix> matrices);

    // Skips the invertibility check; for tuples produced from valid tuples
    // by invertibility-preserving operations.
    struct Trusted {};
    RepTuple(GroupShape shape, std::vector<Matrix> matrices, Trusted);

    GroupShape const& shape() const noexcept {
      return _shape;
    }
    std::vector<Matrix> const& matrices() const noexcept {
      return _m;
    }
    Matrix const& operator[](std::size_t i) const {
      return _m[i];
    }
    std::size_t generator_count() const noexcept {
      return _m.size();
    }
    std::size_t dimension() const noexcept {
      return _m.front().size();
    }
    FieldPtr const& field_ptr() const noexcept {
      return _m.front().field_ptr();
    }
    NumberField const& field() const noexcept {
      return _m.front().field();
    }

    friend bool operator==(RepTuple const& a, RepTuple const& b) {
      return a._shape == b._shape && a._m == b._m;
    }

    std::size_t hash() const noexcept;

   private:
    void check_common(bool check_invertible) const;

    GroupShape          _shape;
    std::vector<Matrix> _m;
  };

  // Caches generator inverses for repeated word evaluation.
  class WordEvaluator {
   public:
    explicit WordEvaluator(RepTuple const& rep);

    // Throws IndexOutOfRange or NotReduced.
    Matrix evaluate(Word const& w) const;
    Matrix const& generator(int index, int sign) const;

   private:
    RepTuple const*     _rep;
    std::vector<Matrix> _inv;
  };

  Matrix word_eval(RepTuple const& rep, Word const& w);

  // Dimension of {X : X A_i = A_i X for all i}.
  std::size_t commutant_dimension(RepTuple const& rep);

  // Dimension of the K-span of the algebra generated by the tuple.
  std::size_t generated_algebra_dimension(RepTuple const& rep);

  // The generated algebra is all of M_r (Burnside), which is equivalent
  // to irreducibility over an algebraic closure.
  bool is_absolutely_irreducible(RepTuple const& rep);

  // Monic minimal polynomial over Q of A, i.e. of the rational matrix of
  // dimension r * [K:Q] that A induces on K^r.
  QPoly minimal_polynomial_over_q(Matrix const& a);

  bool is_unipotent(Matrix const& a);

  // Least m with A^m = I, if any.  Throws Singular.
  std::optional<std::uint64_t> matrix_finite_order(Matrix const& a);

  RepTuple direct_sum(RepTuple const& a, RepTuple const& b);
  RepTuple tensor(RepTuple const& a, RepTuple const& b);

  // Tuple of identity matrices (the trivial representation) of size r.
  RepTuple trivial_rep(GroupShape const& shape, FieldPtr const& field,
                       std::size_t r);

  struct DetScreen {
    bool passed = false;
    // When passed: multiplicative order of each det(A_i).
    std::vector<std::uint64_t> orders;
    // When failed: 1-based index of the first generator whose determinant
    // is not a root of unity.
    std::size_t failed_index = 0;
  };

  DetScreen det_screen(RepTuple const& rep);

}  // namespace mcgfin

template <>
struct std::hash<mcgfin::RepTuple> {
  std::size_t operator()(mcgfin::RepTuple const& a) const noexcept {
    return a.hash();
  }
};

#endif  // MCGFIN_MATREP_HPP_
