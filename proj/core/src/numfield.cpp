#include "mcgfin/numfield.hpp"

#include <functional>

#include "mcgfin/error.hpp"
#include "mcgfin/linalg.hpp"

namespace mcgfin {

  namespace {

    using ModPoly = std::vector<std::uint64_t>;

    std::vector<std::uint64_t> first_primes(int count) {
      std::vector<std::uint64_t> primes;
      for (std::uint64_t n = 2; static_cast<int>(primes.size()) < count; ++n) {
        bool prime = true;
        for (auto p : primes) {
          if (p * p > n) {
            break;
          }
          if (n % p == 0) {
            prime = false;
            break;
          }
        }
        if (prime) {
          primes.push_back(n);
        }
      }
      return primes;
    }

    std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
      std::uint64_t r = 1;
      b %= p;
      while (e > 0) {
        if (e & 1) {
          r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
      }
      return r;
    }

    std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
      return pow_mod(a, p - 2, p);
    }

    void trim_mod(ModPoly& f) {
      while (!f.empty() && f.back() == 0) {
        f.pop_back();
      }
    }

    ModPoly rem_mod(ModPoly a, ModPoly const& b, std::uint64_t p) {
      trim_mod(a);
      std::uint64_t lead_inv = inv_mod(b.back(), p);
      while (a.size() >= b.size()) {
        std::uint64_t f     = a.back() * lead_inv % p;
        std::size_t   shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
          a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
        }
        trim_mod(a);
      }
      return a;
    }

    ModPoly mul_mod(ModPoly const& a, ModPoly const& b, ModPoly const& f,
                    std::uint64_t p) {
      if (a.empty() || b.empty()) {
        return {};
      }
      ModPoly r(a.size() + b.size() - 1, 0);
      for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
          r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
      }
      return rem_mod(std::move(r), f, p);
    }

    ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
      trim_mod(a);
      trim_mod(b);
      while (!b.empty()) {
        ModPoly r = rem_mod(a, b, p);
        a         = std::move(b);
        b         = std::move(r);
      }
      return a;
    }

    std::optional<ModPoly> reduce_mod_p(QPoly const& f, std::uint64_t p) {
      ModPoly      out;
      mpz_class    pz(static_cast<unsigned long>(p));
      for (auto const& c : f) {
        mpz_class den = c.get_den();
        if (den % pz == 0) {
          return std::nullopt;
        }
        mpz_class num = c.get_num() % pz;
        if (num < 0) {
          num += pz;
        }
        mpz_class d = den % pz;
        auto nv = static_cast<std::uint64_t>(num.get_ui());
        auto dv = static_cast<std::uint64_t>(d.get_ui());
        out.push_back(nv * inv_mod(dv, p) % p);
      }
      return out;
    }

    std::string poly_in(std::vector<Rational> const& c, std::string const& var) {
      std::string out;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (sgn(c[k]) == 0) {
          continue;
        }
        Rational v   = c[k];
        bool     neg = sgn(v) < 0;
        if (neg) {
          v = -v;
        }
        if (out.empty()) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        if (k == 0) {
          out += v.get_str();
          continue;
        }
        if (v != 1) {
          out += v.get_str() + "*";
        }
        out += var;
        if (k >= 2) {
          out += "^" + std::to_string(k);
        }
      }
      return out.empty() ? "0" : out;
    }

  }  // namespace

  std::string IrreducibilityCertificate::describe() const {
    switch (kind) {
      case Kind::Trivial: return "degree-1";
      case Kind::GoodPrime:
        return "irreducible mod " + std::to_string(prime);
      case Kind::Cyclotomic:
        return "cyclotomic polynomial Phi_" + std::to_string(index);
      case Kind::Unchecked: return "unchecked (forced)";
    }
    return "";
  }

  bool is_irreducible_mod_p(std::vector<std::uint64_t> const& poly,
                            std::uint64_t                     p) {
    ModPoly f(poly);
    trim_mod(f);
    if (f.size() < 2) {
      return false;
    }
    std::size_t n = f.size() - 1;
    if (n == 1) {
      return true;
    }
    // Ben-Or: f is irreducible iff gcd(x^(p^i) - x, f) == 1 for i <= n/2.
    ModPoly x{0, 1};
    ModPoly h = x;
    for (std::size_t i = 1; i <= n / 2; ++i) {
      ModPoly       base = h, acc{1};
      std::uint64_t e    = p;
      while (e > 0) {
        if (e & 1) {
          acc = mul_mod(acc, base, f, p);
        }
        base = mul_mod(base, base, f, p);
        e >>= 1;
      }
      h            = acc;
      ModPoly diff = h;
      diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
      diff[1] = (diff[1] + p - 1) % p;
      ModPoly g = gcd_mod(diff, f, p);
      if (g.size() != 1) {
        return false;
      }
    }
    return true;
  }

  std::optional<std::uint64_t> find_certifying_prime(QPoly const& monic_poly,
                                                     int prime_count) {
    for (auto p : first_primes(prime_count)) {
      auto f = reduce_mod_p(monic_poly, p);
      if (f && is_irreducible_mod_p(*f, p)) {
        return p;
      }
    }
    return std::nullopt;
  }

  FieldPtr NumberField::make(QPoly min_poly, std::string variable,
                             bool unsafe_accept) {
    qpoly::trim(min_poly);
    if (min_poly.empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty minimal polynomial");
    }
    if (min_poly.back() != 1) {
      throw Error(ErrorCode::NotMonic,
                  "minimal polynomial " + qpoly::to_string(min_poly)
                      + " is not monic");
    }
    if (min_poly.size() < 2) {
      throw Error(ErrorCode::InvalidArgument,
                  "minimal polynomial must have degree >= 1");
    }
    if (!qpoly::is_squarefree(min_poly)) {
      throw Error(ErrorCode::NotSquarefree,
                  qpoly::to_string(min_poly) + " has a repeated factor");
    }
    std::shared_ptr<NumberField> k(new NumberField());
    k->_degree   = min_poly.size() - 1;
    k->_min_poly = std::move(min_poly);
    k->_variable = std::move(variable);

    using Kind = IrreducibilityCertificate::Kind;
    if (k->_degree == 1) {
      k->_certificate = {Kind::Trivial, 0, 0};
    } else if (auto p = find_certifying_prime(k->_min_poly)) {
      k->_certificate = {Kind::GoodPrime, *p, 0};
    } else if (auto m = cyclotomic_index(k->_min_poly)) {
      k->_certificate = {Kind::Cyclotomic, 0, *m};
    } else if (unsafe_accept) {
      k->_certificate = {Kind::Unchecked, 0, 0};
    } else {
      throw Error(ErrorCode::IrreducibilityUndecided,
                  "no certifying prime among the first 100 primes for "
                      + qpoly::to_string(k->_min_poly));
    }

    std::size_t d = k->_degree;
    if (d >= 2) {
      // x^d = -(m_0 + ... + m_{d-1} x^{d-1}); then shift and fold.
      std::vector<Rational> cur(d);
      for (std::size_t j = 0; j < d; ++j) {
        cur[j] = -k->_min_poly[j];
      }
      k->_power_table.push_back(cur);
      for (std::size_t e = d + 1; e <= 2 * d - 2; ++e) {
        std::vector<Rational> next(d);
        Rational              top = cur[d - 1];
        for (std::size_t j = d - 1; j >= 1; --j) {
          next[j] = cur[j - 1];
        }
        for (std::size_t j = 0; j < d; ++j) {
          next[j] -= top * k->_min_poly[j];
        }
        k->_power_table.push_back(next);
        cur = std::move(next);
      }
    }
    return k;
  }

  FieldPtr NumberField::rationals() {
    static FieldPtr const q = make(QPoly{Rational(0), Rational(1)}, "z");
    return q;
  }

  std::vector<Rational> NumberField::reduce(QPoly p) const {
    qpoly::trim(p);
    if (p.size() > _degree) {
      p = qpoly::divmod(p, _min_poly).second;
    }
    p.resize(_degree);
    return p;
  }

  std::vector<Rational> NumberField::multiply(
      std::vector<Rational> const& a,
      std::vector<Rational> const& b) const {
    std::size_t d = _degree;
    if (d == 1) {
      return {a[0] * b[0]};
    }
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(a[i]) == 0) {
        continue;
      }
      for (std::size_t j = 0; j < d; ++j) {
        if (sgn(b[j]) != 0) {
          prod[i + j] += a[i] * b[j];
        }
      }
    }
    std::vector<Rational> out(prod.begin(), prod.begin() + d);
    for (std::size_t k = d; k < prod.size(); ++k) {
      if (sgn(prod[k]) == 0) {
        continue;
      }
      auto const& row = _power_table[k - d];
      for (std::size_t j = 0; j < d; ++j) {
        out[j] += prod[k] * row[j];
      }
    }
    return out;
  }

  bool NumberField::same_as(NumberField const& other) const noexcept {
    return this == &other || _min_poly == other._min_poly;
  }

  // FieldElement

  FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
      : _field(std::move(field)), _coeffs(std::move(coeffs)) {
    if (_coeffs.size() != _field->degree()) {
      throw Error(ErrorCode::InvalidArgument,
                  "expected " + std::to_string(_field->degree())
                      + " coefficients, got " + std::to_string(_coeffs.size()));
    }
    for (auto& c : _coeffs) {
      c.canonicalize();
    }
  }

  FieldElement FieldElement::zero(FieldPtr const& field) {
    return FieldElement(field, std::vector<Rational>(field->degree()));
  }

  FieldElement FieldElement::one(FieldPtr const& field) {
    return from_rational(field, 1);
  }

  FieldElement FieldElement::from_rational(FieldPtr const& field,
                                           Rational const& q) {
    std::vector<Rational> c(field->degree());
    c[0] = q;
    return FieldElement(field, std::move(c));
  }

  FieldElement FieldElement::from_int(FieldPtr const& field, long v) {
    return from_rational(field, Rational(v));
  }

  FieldElement FieldElement::generator(FieldPtr const& field) {
    return FieldElement(field, field->reduce(QPoly{Rational(0), Rational(1)}));
  }

  bool FieldElement::is_zero() const noexcept {
    for (auto const& c : _coeffs) {
      if (sgn(c) != 0) {
        return false;
      }
    }
    return true;
  }

  bool FieldElement::is_one() const noexcept {
    if (_coeffs[0] != 1) {
      return false;
    }
    for (std::size_t i = 1; i < _coeffs.size(); ++i) {
      if (sgn(_coeffs[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::optional<Rational> FieldElement::as_rational() const {
    for (std::size_t i = 1; i < _coeffs.size(); ++i) {
      if (sgn(_coeffs[i]) != 0) {
        return std::nullopt;
      }
    }
    return _coeffs[0];
  }

  void FieldElement::check_same_field(FieldElement const& b) const {
    if (!_field->same_as(*b._field)) {
      throw Error(ErrorCode::FieldMismatch,
                  "operands live in different number fields");
    }
  }

  FieldElement FieldElement::operator-() const {
    FieldElement r(*this);
    for (auto& c : r._coeffs) {
      c = -c;
    }
    return r;
  }

  FieldElement& FieldElement::operator+=(FieldElement const& b) {
    check_same_field(b);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      _coeffs[i] += b._coeffs[i];
    }
    return *this;
  }

  FieldElement& FieldElement::operator-=(FieldElement const& b) {
    check_same_field(b);
    for (std::size_t i = 0; i < _coeffs.size(); ++i) {
      _coeffs[i] -= b._coeffs[i];
    }
    return *this;
  }

  FieldElement& FieldElement::operator*=(FieldElement const& b) {
    check_same_field(b);
    _coeffs = _field->multiply(_coeffs, b._coeffs);
    return *this;
  }

  FieldElement& FieldElement::operator/=(FieldElement const& b) {
    check_same_field(b);
    return *this *= b.inverse();
  }

  FieldElement FieldElement::inverse() const {
    if (is_zero()) {
      throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    if (_field->degree() == 1) {
      return from_rational(_field, 1 / _coeffs[0]);
    }
    auto eg = qpoly::extended_gcd(_coeffs, _field->min_poly());
    if (qpoly::degree(eg.g) != 0) {
      // only reachable for a field accepted without certification
      throw Error(ErrorCode::DivisionByZero,
                  "element is a zero divisor: minimal polynomial is reducible");
    }
    return FieldElement(_field, _field->reduce(std::move(eg.s)));
  }

  FieldElement FieldElement::pow(long long e) const {
    FieldElement base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    FieldElement acc = one(_field);
    while (n > 0) {
      if (n & 1) {
        acc *= base;
      }
      n >>= 1;
      if (n > 0) {
        base *= base;
      }
    }
    return acc;
  }

  std::size_t hash_rational(Rational const& q) noexcept {
    auto limb_hash = [](mpz_srcptr z) {
      std::size_t h = static_cast<std::size_t>(mpz_sgn(z) + 1);
      std::size_t n = mpz_size(z);
      h             = h * 1000003u ^ n;
      if (n > 0) {
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(z, 0));
      }
      return h;
    };
    return limb_hash(q.get_num_mpz_t()) * 31u + limb_hash(q.get_den_mpz_t());
  }

  std::size_t FieldElement::hash() const noexcept {
    std::size_t h = _coeffs.size();
    for (auto const& c : _coeffs) {
      h = h * 0x9e3779b97f4a7c15ull + hash_rational(c);
    }
    return h;
  }

  std::string FieldElement::to_string() const {
    return poly_in(_coeffs, _field->variable());
  }

  FieldElement fe_arith(FieldElement const& a, FieldElement const& b,
                        ArithOp op) {
    switch (op) {
      case ArithOp::Add: return a + b;
      case ArithOp::Sub: return a - b;
      case ArithOp::Mul: return a * b;
      case ArithOp::Div: return a / b;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
  }

  QPoly minimal_polynomial(FieldElement const& a) {
    linalg::DependencyFinder<Rational> finder(Rational(0), Rational(1));
    FieldElement power = FieldElement::one(a.field_ptr());
    while (true) {
      if (auto dep = finder.add(power.coeffs())) {
        QPoly mp(dep->size() + 1);
        for (std::size_t j = 0; j < dep->size(); ++j) {
          mp[j] = -(*dep)[j];
        }
        mp.back() = 1;
        return mp;
      }
      power *= a;
    }
  }

  std::optional<std::uint64_t> root_of_unity_order(FieldElement const& a) {
    if (a.is_zero()) {
      throw Error(ErrorCode::ZeroElement, "zero is not a root of unity");
    }
    QPoly mp = minimal_polynomial(a);
    auto  d  = static_cast<std::uint64_t>(qpoly::degree(mp));
    for (auto m : cyclotomic_indices_of_degree(d)) {
      if (cyclotomic_polynomial(m) == mp) {
        if (!a.pow(static_cast<long long>(m)).is_one()) {
          return std::nullopt;
        }
        return m;
      }
    }
    return std::nullopt;
  }

  bool is_algebraic_integer(FieldElement const& a) {
    for (auto const& c : minimal_polynomial(a)) {
      if (!is_integer(c)) {
        return false;
      }
    }
    return true;
  }

}  // namespace mcgfin
