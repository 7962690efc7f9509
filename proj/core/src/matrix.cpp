#include "mcgfin/matrix.hpp"

#include "mcgfin/error.hpp"

namespace mcgfin {

  Matrix::Matrix(FieldPtr field, std::size_t size)
      : _field(std::move(field)), _n(size) {
    if (_n == 0) {
      throw Error(ErrorCode::InvalidArgument, "matrix size must be >= 1");
    }
    _e.assign(_n * _n, FieldElement::zero(_field));
  }

  Matrix::Matrix(FieldPtr field, std::size_t size,
                 std::vector<FieldElement> entries)
      : _field(std::move(field)), _n(size), _e(std::move(entries)) {
    if (_n == 0) {
      throw Error(ErrorCode::InvalidArgument, "matrix size must be >= 1");
    }
    if (_e.size() != _n * _n) {
      throw Error(ErrorCode::SizeMismatch, "entry count is not size^2");
    }
    for (auto const& x : _e) {
      if (!x.field().same_as(*_field)) {
        throw Error(ErrorCode::FieldMismatch, "matrix entry in another field");
      }
    }
  }

  Matrix Matrix::identity(FieldPtr const& field, std::size_t size) {
    Matrix m(field, size);
    for (std::size_t i = 0; i < size; ++i) {
      m(i, i) = FieldElement::one(field);
    }
    return m;
  }

  Matrix Matrix::from_rationals(FieldPtr const&                           field,
                                std::vector<std::vector<Rational>> const& rows) {
    Matrix m(field, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) {
        throw Error(ErrorCode::SizeMismatch, "matrix is not square");
      }
      for (std::size_t j = 0; j < rows.size(); ++j) {
        m(i, j) = FieldElement::from_rational(field, rows[i][j]);
      }
    }
    return m;
  }

  Matrix Matrix::from_ints(
      FieldPtr const&                                    field,
      std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<Rational>> q;
    for (auto const& row : rows) {
      std::vector<Rational> r;
      for (auto v : row) {
        r.emplace_back(v);
      }
      q.push_back(std::move(r));
    }
    return from_rationals(field, q);
  }

  Matrix Matrix::diagonal(std::vector<FieldElement> const& diag) {
    if (diag.empty()) {
      throw Error(ErrorCode::InvalidArgument, "empty diagonal");
    }
    Matrix m(diag[0].field_ptr(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
      m(i, i) = diag[i];
    }
    return m;
  }

  Matrix Matrix::companion(FieldPtr const& field, QPoly const& monic_poly) {
    int d = qpoly::degree(monic_poly);
    if (d < 1 || monic_poly[d] != 1) {
      throw Error(ErrorCode::NotMonic, "companion matrix needs a monic polynomial");
    }
    auto   n = static_cast<std::size_t>(d);
    Matrix m(field, n);
    for (std::size_t i = 1; i < n; ++i) {
      m(i, i - 1) = FieldElement::one(field);
    }
    for (std::size_t i = 0; i < n; ++i) {
      m(i, n - 1) = FieldElement::from_rational(field, -monic_poly[i]);
    }
    return m;
  }

  void Matrix::check_compatible(Matrix const& b) const {
    if (_n != b._n) {
      throw Error(ErrorCode::SizeMismatch, "matrix sizes differ");
    }
    if (!_field->same_as(*b._field)) {
      throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
    }
  }

  bool Matrix::is_identity() const noexcept {
    for (std::size_t i = 0; i < _n; ++i) {
      for (std::size_t j = 0; j < _n; ++j) {
        auto const& x = (*this)(i, j);
        if (i == j ? !x.is_one() : !x.is_zero()) {
          return false;
        }
      }
    }
    return true;
  }

  bool Matrix::is_zero() const noexcept {
    for (auto const& x : _e) {
      if (!x.is_zero()) {
        return false;
      }
    }
    return true;
  }

  FieldElement Matrix::trace() const {
    FieldElement t = FieldElement::zero(_field);
    for (std::size_t i = 0; i < _n; ++i) {
      t += (*this)(i, i);
    }
    return t;
  }

  FieldElement Matrix::determinant() const {
    std::vector<FieldElement> a(_e);
    FieldElement              det = FieldElement::one(_field);
    for (std::size_t c = 0; c < _n; ++c) {
      std::size_t p = c;
      while (p < _n && a[p * _n + c].is_zero()) {
        ++p;
      }
      if (p == _n) {
        return FieldElement::zero(_field);
      }
      if (p != c) {
        for (std::size_t j = 0; j < _n; ++j) {
          std::swap(a[p * _n + j], a[c * _n + j]);
        }
        det = -det;
      }
      FieldElement pivot = a[c * _n + c];
      det *= pivot;
      FieldElement inv = pivot.inverse();
      for (std::size_t i = c + 1; i < _n; ++i) {
        if (a[i * _n + c].is_zero()) {
          continue;
        }
        FieldElement f = a[i * _n + c] * inv;
        for (std::size_t j = c; j < _n; ++j) {
          if (!a[c * _n + j].is_zero()) {
            a[i * _n + j] -= f * a[c * _n + j];
          }
        }
      }
    }
    return det;
  }

  Matrix Matrix::inverse() const {
    std::vector<FieldElement> a(_e);
    Matrix                    inv = identity(_field, _n);
    auto&                     b   = inv._e;
    for (std::size_t c = 0; c < _n; ++c) {
      std::size_t p = c;
      while (p < _n && a[p * _n + c].is_zero()) {
        ++p;
      }
      if (p == _n) {
        throw Error(ErrorCode::Singular, "matrix is not invertible");
      }
      if (p != c) {
        for (std::size_t j = 0; j < _n; ++j) {
          std::swap(a[p * _n + j], a[c * _n + j]);
          std::swap(b[p * _n + j], b[c * _n + j]);
        }
      }
      FieldElement pinv = a[c * _n + c].inverse();
      for (std::size_t j = 0; j < _n; ++j) {
        a[c * _n + j] *= pinv;
        b[c * _n + j] *= pinv;
      }
      for (std::size_t i = 0; i < _n; ++i) {
        if (i == c || a[i * _n + c].is_zero()) {
          continue;
        }
        FieldElement f = a[i * _n + c];
        for (std::size_t j = 0; j < _n; ++j) {
          if (!a[c * _n + j].is_zero()) {
            a[i * _n + j] -= f * a[c * _n + j];
          }
          if (!b[c * _n + j].is_zero()) {
            b[i * _n + j] -= f * b[c * _n + j];
          }
        }
      }
    }
    return inv;
  }

  Matrix Matrix::pow(long long e) const {
    Matrix base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Matrix acc = identity(_field, _n);
    while (n > 0) {
      if (n & 1) {
        acc = acc * base;
      }
      n >>= 1;
      if (n > 0) {
        base = base * base;
      }
    }
    return acc;
  }

  Matrix Matrix::scaled(FieldElement const& c) const {
    Matrix r(*this);
    for (auto& x : r._e) {
      x *= c;
    }
    return r;
  }

  Matrix operator+(Matrix const& a, Matrix const& b) {
    a.check_compatible(b);
    Matrix r(a);
    for (std::size_t k = 0; k < r._e.size(); ++k) {
      r._e[k] += b._e[k];
    }
    return r;
  }

  Matrix operator-(Matrix const& a, Matrix const& b) {
    a.check_compatible(b);
    Matrix r(a);
    for (std::size_t k = 0; k < r._e.size(); ++k) {
      r._e[k] -= b._e[k];
    }
    return r;
  }

  Matrix operator*(Matrix const& a, Matrix const& b) {
    a.check_compatible(b);
    std::size_t n = a._n;
    Matrix      r(a._field, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        auto const& x = a._e[i * n + k];
        if (x.is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          auto const& y = b._e[k * n + j];
          if (!y.is_zero()) {
            r._e[i * n + j] += x * y;
          }
        }
      }
    }
    return r;
  }

  bool operator==(Matrix const& a, Matrix const& b) {
    return a._n == b._n && a._field->same_as(*b._field) && a._e == b._e;
  }

  std::size_t Matrix::hash() const noexcept {
    std::size_t h = _n;
    for (auto const& x : _e) {
      h = h * 0x100000001b3ull ^ x.hash();
    }
    return h;
  }

  Matrix block_sum(Matrix const& a, Matrix const& b) {
    if (!a.field().same_as(b.field())) {
      throw Error(ErrorCode::FieldMismatch, "direct sum across fields");
    }
    std::size_t n = a.size() + b.size();
    Matrix      r(a.field_ptr(), n);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        r(i, j) = a(i, j);
      }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        r(a.size() + i, a.size() + j) = b(i, j);
      }
    }
    return r;
  }

  Matrix kronecker(Matrix const& a, Matrix const& b) {
    if (!a.field().same_as(b.field())) {
      throw Error(ErrorCode::FieldMismatch, "tensor product across fields");
    }
    std::size_t p = a.size(), q = b.size();
    Matrix      r(a.field_ptr(), p * q);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < q; ++k) {
          for (std::size_t l = 0; l < q; ++l) {
            r(i * q + k, j * q + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
    return r;
  }

  Matrix commutator(Matrix const& a, Matrix const& b) {
    return a * b * a.inverse() * b.inverse();
  }

  std::vector<Rational> rational_coordinates(Matrix const& a) {
    std::vector<Rational> out;
    out.reserve(a.entries().size() * a.field().degree());
    for (auto const& x : a.entries()) {
      out.insert(out.end(), x.coeffs().begin(), x.coeffs().end());
    }
    return out;
  }

}  // namespace mcgfin
