#include "mcgfin/qpoly.hpp"

#include <algorithm>
#include <cctype>

#include "mcgfin/error.hpp"

namespace mcgfin {

  std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::InvalidArgument: return "InvalidArgument";
      case ErrorCode::NotMonic: return "NotMonic";
      case ErrorCode::NotSquarefree: return "NotSquarefree";
      case ErrorCode::IrreducibilityUndecided: return "IrreducibilityUndecided";
      case ErrorCode::FieldMismatch: return "FieldMismatch";
      case ErrorCode::InvalidShape: return "InvalidShape";
      case ErrorCode::ShapeMismatch: return "ShapeMismatch";
      case ErrorCode::SizeMismatch: return "SizeMismatch";
      case ErrorCode::Singular: return "Singular";
      case ErrorCode::DivisionByZero: return "DivisionByZero";
      case ErrorCode::ZeroElement: return "ZeroElement";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::NotReduced: return "NotReduced";
      case ErrorCode::RankTooSmall: return "RankTooSmall";
      case ErrorCode::RankMismatch: return "RankMismatch";
      case ErrorCode::RankNotOne: return "RankNotOne";
      case ErrorCode::MoveRankMismatch: return "MoveRankMismatch";
      case ErrorCode::InvalidSubstitution: return "InvalidSubstitution";
      case ErrorCode::ShapeNotSurface: return "ShapeNotSurface";
      case ErrorCode::InvalidExponent: return "InvalidExponent";
      case ErrorCode::GateNotApplicable: return "GateNotApplicable";
      case ErrorCode::UnsupportedRepresentation:
        return "UnsupportedRepresentation";
      case ErrorCode::InternalSchurViolation: return "InternalSchurViolation";
      case ErrorCode::ClosureRecheckFailed: return "ClosureRecheckFailed";
      case ErrorCode::GateContradiction: return "GateContradiction";
    }
    return "Unknown";
  }

  bool is_internal(ErrorCode code) noexcept {
    return code == ErrorCode::InternalSchurViolation
           || code == ErrorCode::ClosureRecheckFailed
           || code == ErrorCode::GateContradiction;
  }

  Rational parse_rational(std::string const& text) {
    auto valid_int = [](std::string const& s, bool allow_sign) {
      size_t i = 0;
      if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
        ++i;
      }
      if (i == s.size()) {
        return false;
      }
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
          return false;
        }
      }
      return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num, true) || !valid_int(den, false)) {
      throw Error(ErrorCode::ParseError, "malformed rational '" + text + "'");
    }
    if (num[0] == '+') {
      num.erase(0, 1);
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) {
      throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
  }

  std::string to_string(Rational const& q) {
    return q.get_str(10);
  }

  bool is_integer(Rational const& q) {
    return q.get_den() == 1;
  }

  namespace qpoly {

    void trim(QPoly& p) {
      while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
      }
    }

    int degree(QPoly const& p) {
      int d = static_cast<int>(p.size()) - 1;
      while (d >= 0 && sgn(p[d]) == 0) {
        --d;
      }
      return d;
    }

    bool is_zero(QPoly const& p) {
      return degree(p) < 0;
    }

    QPoly from_ints(std::vector<long long> const& coeffs) {
      QPoly p;
      p.reserve(coeffs.size());
      for (auto c : coeffs) {
        p.emplace_back(static_cast<long>(c));
      }
      trim(p);
      return p;
    }

    QPoly add(QPoly const& a, QPoly const& b) {
      QPoly r(std::max(a.size(), b.size()));
      for (size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
      }
      for (size_t i = 0; i < b.size(); ++i) {
        r[i] += b[i];
      }
      trim(r);
      return r;
    }

    QPoly sub(QPoly const& a, QPoly const& b) {
      QPoly r(std::max(a.size(), b.size()));
      for (size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
      }
      for (size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
      }
      trim(r);
      return r;
    }

    QPoly mul(QPoly const& a, QPoly const& b) {
      if (is_zero(a) || is_zero(b)) {
        return {};
      }
      QPoly r(a.size() + b.size() - 1);
      for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
          continue;
        }
        for (size_t j = 0; j < b.size(); ++j) {
          r[i + j] += a[i] * b[j];
        }
      }
      trim(r);
      return r;
    }

    QPoly scale(QPoly const& a, Rational const& c) {
      QPoly r(a);
      for (auto& x : r) {
        x *= c;
      }
      trim(r);
      return r;
    }

    QPoly derivative(QPoly const& a) {
      QPoly r;
      for (size_t i = 1; i < a.size(); ++i) {
        r.push_back(a[i] * static_cast<unsigned long>(i));
      }
      trim(r);
      return r;
    }

    QPoly monic(QPoly const& a) {
      int d = degree(a);
      if (d < 0) {
        return {};
      }
      Rational lead = a[d];
      QPoly    r(a.begin(), a.begin() + d + 1);
      for (auto& x : r) {
        x /= lead;
      }
      return r;
    }

    Rational evaluate(QPoly const& a, Rational const& x) {
      Rational acc = 0;
      for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * x + *it;
      }
      return acc;
    }

    std::pair<QPoly, QPoly> divmod(QPoly const& a, QPoly const& b) {
      int db = degree(b);
      if (db < 0) {
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
      }
      QPoly rem(a);
      trim(rem);
      int da = degree(rem);
      if (da < db) {
        return {{}, rem};
      }
      QPoly    quo(da - db + 1);
      Rational lead = b[db];
      for (int k = da; k >= db; --k) {
        if (sgn(rem[k]) == 0) {
          continue;
        }
        Rational f = rem[k] / lead;
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j) {
          rem[k - db + j] -= f * b[j];
        }
      }
      trim(quo);
      trim(rem);
      return {quo, rem};
    }

    QPoly gcd(QPoly const& a, QPoly const& b) {
      QPoly x(a), y(b);
      trim(x);
      trim(y);
      while (!is_zero(y)) {
        auto r = divmod(x, y).second;
        x      = std::move(y);
        y      = std::move(r);
      }
      return monic(x);
    }

    ExtendedGcd extended_gcd(QPoly const& a, QPoly const& b) {
      QPoly r0(a), r1(b);
      trim(r0);
      trim(r1);
      QPoly s0{Rational(1)}, s1{};
      QPoly t0{}, t1{Rational(1)};
      while (!is_zero(r1)) {
        auto [q, r] = divmod(r0, r1);
        QPoly s2    = sub(s0, mul(q, s1));
        QPoly t2    = sub(t0, mul(q, t1));
        r0          = std::move(r1);
        r1          = std::move(r);
        s0          = std::move(s1);
        s1          = std::move(s2);
        t0          = std::move(t1);
        t1          = std::move(t2);
      }
      int d = degree(r0);
      if (d < 0) {
        return {{}, {}, {}};
      }
      Rational lead = r0[d];
      return {monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)};
    }

    bool is_squarefree(QPoly const& a) {
      if (degree(a) <= 0) {
        return true;
      }
      return degree(gcd(a, derivative(a))) == 0;
    }

    std::string to_string(QPoly const& p, char var) {
      int d = degree(p);
      if (d < 0) {
        return "0";
      }
      std::string out;
      for (int k = d; k >= 0; --k) {
        if (sgn(p[k]) == 0) {
          continue;
        }
        Rational c   = p[k];
        bool     neg = sgn(c) < 0;
        if (neg) {
          c = -c;
        }
        if (out.empty()) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        bool unit = c == 1;
        if (!unit || k == 0) {
          out += c.get_str();
        }
        if (k >= 1) {
          out += var;
        }
        if (k >= 2) {
          out += "^" + std::to_string(k);
        }
      }
      return out;
    }

  }  // namespace qpoly

  std::uint64_t euler_phi(std::uint64_t m) {
    std::uint64_t result = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        while (m % p == 0) {
          m /= p;
        }
        result -= result / p;
      }
    }
    if (m > 1) {
      result -= result / m;
    }
    return result;
  }

  int moebius(std::uint64_t m) {
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) {
          return 0;
        }
        sign = -sign;
      }
    }
    if (m > 1) {
      sign = -sign;
    }
    return sign;
  }

  QPoly cyclotomic_polynomial(std::uint64_t m) {
    if (m == 0) {
      throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be >= 1");
    }
    // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}: multiply first, then divide.
    // Every intermediate stays a small-coefficient integer polynomial.
    std::vector<std::uint64_t> num, den;
    for (std::uint64_t d = 1; d <= m; ++d) {
      if (m % d != 0) {
        continue;
      }
      int mu = moebius(m / d);
      if (mu == 1) {
        num.push_back(d);
      } else if (mu == -1) {
        den.push_back(d);
      }
    }
    std::vector<mpz_class> p{1};
    for (auto d : num) {
      std::vector<mpz_class> r(p.size() + d);
      for (size_t i = 0; i < p.size(); ++i) {
        r[i + d] += p[i];
        r[i] -= p[i];
      }
      p = std::move(r);
    }
    for (auto d : den) {
      // Exact division by x^d - 1, from the top coefficient down.
      size_t                 n = p.size() - 1;
      std::vector<mpz_class> q(n - d + 1);
      for (size_t i = q.size(); i-- > 0;) {
        q[i] = p[i + d] + (i + d < q.size() ? q[i + d] : mpz_class(0));
      }
      p = std::move(q);
    }
    QPoly out;
    out.reserve(p.size());
    for (auto& c : p) {
      out.emplace_back(c);
    }
    qpoly::trim(out);
    return out;
  }

  std::vector<std::uint64_t> cyclotomic_indices_of_degree(std::uint64_t d) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m = 1; m <= 2 * d * d; ++m) {
      if (euler_phi(m) == d) {
        out.push_back(m);
      }
    }
    return out;
  }

  std::optional<std::uint64_t> cyclotomic_index(QPoly const& p) {
    int d = qpoly::degree(p);
    if (d < 1) {
      return std::nullopt;
    }
    QPoly q(p.begin(), p.begin() + d + 1);
    for (auto m : cyclotomic_indices_of_degree(static_cast<std::uint64_t>(d))) {
      if (cyclotomic_polynomial(m) == q) {
        return m;
      }
    }
    return std::nullopt;
  }

}  // namespace mcgfin
