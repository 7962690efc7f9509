#ifndef MCGFIN_MATRIX_HPP_
#define MCGFIN_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "mcgfin/numfield.hpp"

namespace mcgfin {

  // Square matrix over a number field, row-major.
  class Matrix {
   public:
    Matrix(FieldPtr field, std::size_t size);  // zero matrix
    Matrix(FieldPtr field, std::size_t size, std::vector<FieldElement> entries);

    static Matrix identity(FieldPtr const& field, std::size_t size);
    static Matrix from_rationals(FieldPtr const&                           field,
                                 std::vector<std::vector<Rational>> const& rows);
    static Matrix from_ints(FieldPtr const&                                field,
                            std::initializer_list<std::initializer_list<long>> rows);
    static Matrix diagonal(std::vector<FieldElement> const& diag);
    // Companion matrix of a monic rational polynomial (embedded in `field`).
    static Matrix companion(FieldPtr const& field, QPoly const& monic_poly);

    std::size_t size() const noexcept {
      return _n;
    }
    NumberField const& field() const noexcept {
      return *_field;
    }
    FieldPtr const& field_ptr() const noexcept {
      return _field;
    }
    FieldElement const& operator()(std::size_t i, std::size_t j) const {
      return _e[i * _n + j];
    }
    FieldElement& operator()(std::size_t i, std::size_t j) {
      return _e[i * _n + j];
    }
    std::vector<FieldElement> const& entries() const noexcept {
      return _e;
    }

    bool         is_identity() const noexcept;
    bool         is_zero() const noexcept;
    FieldElement trace() const;
    FieldElement determinant() const;
    bool         is_invertible() const {
      return !determinant().is_zero();
    }
    // Gauss-Jordan elimination; throws Singular.
    Matrix inverse() const;
    Matrix pow(long long e) const;
    Matrix scaled(FieldElement const& c) const;

    friend Matrix operator+(Matrix const& a, Matrix const& b);
    friend Matrix operator-(Matrix const& a, Matrix const& b);
    friend Matrix operator*(Matrix const& a, Matrix const& b);
    friend bool   operator==(Matrix const& a, Matrix const& b);
    friend bool   operator!=(Matrix const& a, Matrix const& b) {
      return !(a == b);
    }

    std::size_t hash() const noexcept;

   private:
    void check_compatible(Matrix const& b) const;

    FieldPtr                  _field;
    std::size_t               _n;
    std::vector<FieldElement> _e;
  };

  // Block-diagonal a (+) b and Kronecker product a (x) b.
  Matrix block_sum(Matrix const& a, Matrix const& b);
  Matrix kronecker(Matrix const& a, Matrix const& b);

  // a b a^-1 b^-1
  Matrix commutator(Matrix const& a, Matrix const& b);

  // Flattened rational coordinates (entry-major, then coefficient).
  std::vector<Rational> rational_coordinates(Matrix const& a);

}  // namespace mcgfin

template <>
struct std::hash<mcgfin::Matrix> {
  std::size_t operator()(mcgfin::Matrix const& a) const noexcept {
    return a.hash();
  }
};

#endif  // MCGFIN_MATRIX_HPP_
