#ifndef MCGFIN_NUMFIELD_HPP_
#define MCGFIN_NUMFIELD_HPP_

// Exact arithmetic in a number field K = Q[x]/(m(x)).
//
// A NumberField is built once, certified irreducible, and then shared
// (immutably) by every element and matrix that lives in it.  Elements are
// stored as the coefficient vector of the reduced residue polynomial, so
// equality and hashing are plain comparisons of canonical rationals.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcgfin/qpoly.hpp"

namespace mcgfin {

  struct IrreducibilityCertificate {
    enum class Kind {
      Trivial,     // degree 1
      GoodPrime,   // irreducible modulo `prime`, which divides no denominator
      Cyclotomic,  // equal to the cyclotomic polynomial of `index`
      Unchecked,   // caller forced acceptance
    };
    Kind          kind  = Kind::Trivial;
    std::uint64_t prime = 0;
    std::uint64_t index = 0;

    std::string describe() const;
  };

  class NumberField;
  using FieldPtr = std::shared_ptr<NumberField const>;

  class NumberField {
   public:
    // Validates and certifies `min_poly` (low degree first, monic).  With
    // `unsafe_accept` an undecided irreducibility check is accepted instead
    // of rejected; the certificate records that.
    static FieldPtr make(QPoly min_poly,
                         std::string variable  = "z",
                         bool        unsafe_accept = false);

    static FieldPtr rationals();

    std::size_t degree() const noexcept {
      return _degree;
    }
    QPoly const& min_poly() const noexcept {
      return _min_poly;
    }
    std::string const& variable() const noexcept {
      return _variable;
    }
    IrreducibilityCertificate const& certificate() const noexcept {
      return _certificate;
    }

    // Reduces an arbitrary polynomial modulo the minimal polynomial and pads
    // to exactly degree() coefficients.
    std::vector<Rational> reduce(QPoly p) const;

    // Coefficient vector of the product of two reduced residues.
    std::vector<Rational> multiply(std::vector<Rational> const& a,
                                   std::vector<Rational> const& b) const;

    bool same_as(NumberField const& other) const noexcept;

   private:
    NumberField() = default;

    QPoly                     _min_poly;
    std::string               _variable;
    std::size_t               _degree = 1;
    IrreducibilityCertificate _certificate;
    // x^k mod m(x) for k = degree .. 2*degree - 2
    std::vector<std::vector<Rational>> _power_table;
  };

  // Finds a prime among the first `prime_count` primes at which the monic
  // polynomial is irreducible and has p-integral coefficients.
  std::optional<std::uint64_t> find_certifying_prime(QPoly const& monic_poly,
                                                     int prime_count = 100);

  // Irreducibility of a polynomial over F_p (coefficients reduced mod p).
  bool is_irreducible_mod_p(std::vector<std::uint64_t> const& poly,
                            std::uint64_t                     p);

  class FieldElement {
   public:
    FieldElement(FieldPtr field, std::vector<Rational> coeffs);

    static FieldElement zero(FieldPtr const& field);
    static FieldElement one(FieldPtr const& field);
    static FieldElement from_rational(FieldPtr const& field, Rational const& q);
    static FieldElement from_int(FieldPtr const& field, long v);
    // The class of x, i.e. a root of the minimal polynomial.
    static FieldElement generator(FieldPtr const& field);

    NumberField const& field() const noexcept {
      return *_field;
    }
    FieldPtr const& field_ptr() const noexcept {
      return _field;
    }
    std::vector<Rational> const& coeffs() const noexcept {
      return _coeffs;
    }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    // Some rational q with *this == q, if the element lies in Q.
    std::optional<Rational> as_rational() const;

    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    FieldElement& operator+=(FieldElement const& b);
    FieldElement& operator-=(FieldElement const& b);
    FieldElement& operator*=(FieldElement const& b);
    FieldElement& operator/=(FieldElement const& b);

    friend FieldElement operator+(FieldElement a, FieldElement const& b) {
      return a += b;
    }
    friend FieldElement operator-(FieldElement a, FieldElement const& b) {
      return a -= b;
    }
    friend FieldElement operator*(FieldElement a, FieldElement const& b) {
      return a *= b;
    }
    friend FieldElement operator/(FieldElement a, FieldElement const& b) {
      return a /= b;
    }
    friend bool operator==(FieldElement const& a, FieldElement const& b) {
      return a._coeffs == b._coeffs && a.field().same_as(b.field());
    }
    friend bool operator!=(FieldElement const& a, FieldElement const& b) {
      return !(a == b);
    }

    std::size_t hash() const noexcept;
    // Human-readable polynomial in the field variable, e.g. "1/2 - 1/2*z".
    std::string to_string() const;

   private:
    void check_same_field(FieldElement const& b) const;

    FieldPtr              _field;
    std::vector<Rational> _coeffs;
  };

  enum class ArithOp { Add, Sub, Mul, Div };

  FieldElement fe_arith(FieldElement const& a,
                        FieldElement const& b,
                        ArithOp             op);

  // Monic minimal polynomial over Q.
  QPoly minimal_polynomial(FieldElement const& a);

  // The exact multiplicative order of a, if finite.  Throws ZeroElement.
  std::optional<std::uint64_t> root_of_unity_order(FieldElement const& a);

  bool is_algebraic_integer(FieldElement const& a);

  std::size_t hash_rational(Rational const& q) noexcept;

  inline bool is_zero(Rational const& q) {
    return sgn(q) == 0;
  }
  inline bool is_zero(FieldElement const& a) {
    return a.is_zero();
  }

}  // namespace mcgfin

template <>
struct std::hash<mcgfin::FieldElement> {
  std::size_t operator()(mcgfin::FieldElement const& a) const noexcept {
    return a.hash();
  }
};

#endif  // MCGFIN_NUMFIELD_HPP_
