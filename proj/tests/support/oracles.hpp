#ifndef MCGFIN_TESTS_ORACLES_HPP_
#define MCGFIN_TESTS_ORACLES_HPP_

// Reference computations that share no algorithmic code with the library
// beyond field arithmetic.  Slow on purpose.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "mcgfin/matrix.hpp"

namespace mcgfin::oracle {

  // Closure by linear search over a plain list: no hashing involved.
  inline std::vector<Matrix> closure(std::vector<Matrix> const& gens,
                                     std::size_t               cap = 5000) {
    std::vector<Matrix> elems{Matrix::identity(gens[0].field_ptr(), gens[0].size())};
    for (std::size_t i = 0; i < elems.size() && elems.size() <= cap; ++i) {
      for (auto const& g : gens) {
        Matrix x = elems[i] * g;
        if (std::find(elems.begin(), elems.end(), x) == elems.end()) {
          elems.push_back(x);
        }
      }
    }
    return elems;
  }

  inline bool contains(std::vector<Matrix> const& set, Matrix const& x) {
    return std::find(set.begin(), set.end(), x) != set.end();
  }

  // Integer polynomials, low degree first.
  using ZPoly = std::vector<long>;

  inline void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) {
      p.pop_back();
    }
  }

  // Exact quotient by a monic divisor; the remainder is returned via `rem`.
  inline ZPoly zdiv(ZPoly a, ZPoly const& b, ZPoly& rem) {
    long  shift = static_cast<long>(a.size()) - static_cast<long>(b.size());
    ZPoly q(shift >= 0 ? shift + 1 : 0, 0);
    for (long s = shift; s >= 0; --s) {
      long c = a[s + b.size() - 1];
      q[s]        = c;
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[s + j] -= c * b[j];
      }
    }
    ztrim(a);
    rem = a;
    return q;
  }

  // Phi_m as (x^m - 1) / prod_{d | m, d < m} Phi_d.
  inline ZPoly cyclotomic(int m) {
    ZPoly p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (int d = 1; d < m; ++d) {
      if (m % d == 0) {
        ZPoly rem;
        p = zdiv(p, cyclotomic(d), rem);
      }
    }
    return p;
  }

  // Whether some monic polynomial over F_p of degree 1..deg/2 divides f.
  inline bool has_small_factor_mod_p(std::vector<int> f, int p) {
    int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
      std::vector<int> g(d + 1, 0);
      g[d] = 1;
      // odometer over the lower coefficients
      while (true) {
        std::vector<int> r = f;
        for (int i = n; i >= d; --i) {
          int c = ((r[i] % p) + p) % p;
          for (int j = 0; j <= d; ++j) {
            r[i - d + j] = ((r[i - d + j] - c * g[j]) % p + p) % p;
          }
        }
        if (std::all_of(r.begin(), r.begin() + d, [](int x) { return x == 0; })) {
          return true;
        }
        int j = 0;
        while (j < d && g[j] == p - 1) {
          g[j++] = 0;
        }
        if (j == d) {
          break;
        }
        ++g[j];
      }
    }
    return false;
  }

  // Multivariate polynomial in t_1..t_d with field coefficients.
  using Monomial = std::vector<int>;
  using MPoly    = std::map<Monomial, FieldElement>;

  // det(sum_j t_j M_j) by the Leibniz formula.
  inline MPoly symbolic_pencil_det(std::vector<Matrix> const& basis) {
    std::size_t r = basis[0].size(), d = basis.size();
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    MPoly total;
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
          inversions += perm[i] > perm[j];
        }
      }
      // product over rows of the linear forms sum_j t_j M_j(i, perm[i])
      MPoly term{{Monomial(d, 0), FieldElement::one(basis[0].field_ptr())}};
      for (std::size_t i = 0; i < r; ++i) {
        MPoly next;
        for (auto const& [mono, c] : term) {
          for (std::size_t j = 0; j < d; ++j) {
            auto const& e = basis[j](i, perm[i]);
            if (e.is_zero()) {
              continue;
            }
            Monomial m = mono;
            ++m[j];
            auto it = next.find(m);
            if (it == next.end()) {
              next.emplace(m, c * e);
            } else {
              it->second += c * e;
            }
          }
        }
        term = std::move(next);
      }
      for (auto const& [mono, c] : term) {
        auto v  = inversions % 2 ? -c : c;
        auto it = total.find(mono);
        if (it == total.end()) {
          total.emplace(mono, v);
        } else {
          it->second += v;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::erase_if(total, [](auto const& kv) { return kv.second.is_zero(); });
    return total;
  }

}  // namespace mcgfin::oracle

#endif  // MCGFIN_TESTS_ORACLES_HPP_
