#ifndef MCGFIN_QPOLY_HPP_
#define MCGFIN_QPOLY_HPP_

// Dense univariate polynomials over Q, coefficients low degree first.
// The zero polynomial is the empty vector; every routine returns trimmed
// results (no trailing zero coefficients).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mcgfin {

  using Rational = mpq_class;
  using QPoly    = std::vector<Rational>;

  // Accepts "p", "-p", "p/q" with q != 0; the result is canonical.
  Rational    parse_rational(std::string const& text);
  std::string to_string(Rational const& q);
  bool        is_integer(Rational const& q);

  namespace qpoly {

    void   trim(QPoly& p);
    int    degree(QPoly const& p);  // -1 for the zero polynomial
    bool   is_zero(QPoly const& p);
    QPoly  from_ints(std::vector<long long> const& coeffs);
    QPoly  add(QPoly const& a, QPoly const& b);
    QPoly  sub(QPoly const& a, QPoly const& b);
    QPoly  mul(QPoly const& a, QPoly const& b);
    QPoly  scale(QPoly const& a, Rational const& c);
    QPoly  derivative(QPoly const& a);
    QPoly  monic(QPoly const& a);
    Rational evaluate(QPoly const& a, Rational const& x);

    // Euclidean division; throws DivisionByZero when b is zero.
    std::pair<QPoly, QPoly> divmod(QPoly const& a, QPoly const& b);

    // Monic gcd (zero if both inputs are zero).
    QPoly gcd(QPoly const& a, QPoly const& b);

    struct ExtendedGcd {
      QPoly g;  // monic
      QPoly s;
      QPoly t;  // s*a + t*b == g
    };
    ExtendedGcd extended_gcd(QPoly const& a, QPoly const& b);

    bool is_squarefree(QPoly const& a);

    std::string to_string(QPoly const& p, char var = 'x');

  }  // namespace qpoly

  // Arithmetic-function helpers used by the cyclotomic machinery.
  std::uint64_t euler_phi(std::uint64_t m);
  int           moebius(std::uint64_t m);

  // The m-th cyclotomic polynomial, m >= 1.
  QPoly cyclotomic_polynomial(std::uint64_t m);

  // All m in [1, 2 d^2] with euler_phi(m) == d, ascending.  Since
  // phi(m) >= sqrt(m / 2) this is every such m.
  std::vector<std::uint64_t> cyclotomic_indices_of_degree(std::uint64_t d);

  // If p is exactly some cyclotomic polynomial, its index.
  std::optional<std::uint64_t> cyclotomic_index(QPoly const& p);

}  // namespace mcgfin

#endif  // MCGFIN_QPOLY_HPP_
