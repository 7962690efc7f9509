#include "mcgfin/matrep.hpp"

#include <numeric>

#include "mcgfin/error.hpp"
#include "mcgfin/linalg.hpp"

namespace mcgfin {

  GroupShape GroupShape::free(int rank) {
    if (rank < 1) {
      throw Error(ErrorCode::InvalidShape, "free group rank must be >= 1");
    }
    GroupShape s;
    s._kind = Kind::Free;
    s._rank = rank;
    return s;
  }

  GroupShape GroupShape::surface(int genus, int punctures) {
    if (genus < 0 || punctures < 0) {
      throw Error(ErrorCode::InvalidShape, "negative genus or puncture count");
    }
    if (punctures == 0) {
      throw Error(ErrorCode::InvalidShape,
                  "closed surfaces are not supported (need n >= 1)");
    }
    if (genus == 0 && punctures < 3) {
      throw Error(ErrorCode::InvalidShape,
                  "genus-0 surfaces need at least 3 punctures");
    }
    GroupShape s;
    s._kind      = Kind::Surface;
    s._genus     = genus;
    s._punctures = punctures;
    s._rank      = 2 * genus + punctures - 1;
    return s;
  }

  std::string GroupShape::describe() const {
    if (_kind == Kind::Free) {
      return "F_" + std::to_string(_rank);
    }
    return "Sigma_{" + std::to_string(_genus) + "," + std::to_string(_punctures)
           + "}";
  }

  RepTuple::RepTuple(GroupShape shape, std::vector<Matrix> matrices)
      : _shape(shape), _m(std::move(matrices)) {
    check_common(true);
  }

  RepTuple::RepTuple(GroupShape shape, std::vector<Matrix> matrices, Trusted)
      : _shape(shape), _m(std::move(matrices)) {
    check_common(false);
  }

  void RepTuple::check_common(bool check_invertible) const {
    if (_m.empty()) {
      throw Error(ErrorCode::InvalidArgument, "representation has no matrices");
    }
    if (static_cast<int>(_m.size()) != _shape.generator_count()) {
      throw Error(ErrorCode::ShapeMismatch,
                  _shape.describe() + " needs "
                      + std::to_string(_shape.generator_count())
                      + " matrices, got " + std::to_string(_m.size()));
    }
    for (std::size_t i = 0; i < _m.size(); ++i) {
      if (_m[i].size() != _m[0].size()) {
        throw Error(ErrorCode::SizeMismatch, "matrices of different sizes");
      }
      if (!_m[i].field().same_as(_m[0].field())) {
        throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
      }
      if (check_invertible && !_m[i].is_invertible()) {
        throw Error(ErrorCode::Singular,
                    "generator " + std::to_string(i + 1) + " is singular");
      }
    }
  }

  std::size_t RepTuple::hash() const noexcept {
    std::size_t h = _m.size();
    for (auto const& a : _m) {
      h = h * 0x9e3779b97f4a7c15ull ^ a.hash();
    }
    return h;
  }

  WordEvaluator::WordEvaluator(RepTuple const& rep) : _rep(&rep) {
    for (auto const& a : rep.matrices()) {
      _inv.push_back(a.inverse());
    }
  }

  Matrix const& WordEvaluator::generator(int index, int sign) const {
    if (index < 1 || index > static_cast<int>(_inv.size())) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "generator x" + std::to_string(index) + " out of range");
    }
    return sign > 0 ? (*_rep)[index - 1] : _inv[index - 1];
  }

  Matrix WordEvaluator::evaluate(Word const& w) const {
    if (!w.is_reduced()) {
      throw Error(ErrorCode::NotReduced,
                  "word '" + format_word(w) + "' is not freely reduced");
    }
    Matrix acc = Matrix::identity(_rep->field_ptr(), _rep->dimension());
    for (auto const& l : w.letters) {
      Matrix const& g = generator(l.generator, l.exponent);
      int           k = std::abs(l.exponent);
      acc             = acc * (k == 1 ? g : g.pow(k));
    }
    return acc;
  }

  Matrix word_eval(RepTuple const& rep, Word const& w) {
    if (!w.is_reduced()) {
      throw Error(ErrorCode::NotReduced,
                  "word '" + format_word(w) + "' is not freely reduced");
    }
    if (w.max_generator() > static_cast<int>(rep.generator_count())) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "word '" + format_word(w) + "' uses a missing generator");
    }
    return WordEvaluator(rep).evaluate(w);
  }

  std::size_t commutant_dimension(RepTuple const& rep) {
    std::size_t                            r    = rep.dimension();
    auto const&                            k    = rep.field_ptr();
    FieldElement                           zero = FieldElement::zero(k);
    std::vector<linalg::Vec<FieldElement>> rows;
    // (X A - A X)_{pq} = sum_l X_{pl} A_{lq} - sum_l A_{pl} X_{lq}
    for (auto const& a : rep.matrices()) {
      for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t q = 0; q < r; ++q) {
          linalg::Vec<FieldElement> row(r * r, zero);
          for (std::size_t l = 0; l < r; ++l) {
            row[p * r + l] += a(l, q);
            row[l * r + q] -= a(p, l);
          }
          rows.push_back(std::move(row));
        }
      }
    }
    auto pivots = linalg::rref(rows, r * r);
    return r * r - pivots.size();
  }

  std::size_t generated_algebra_dimension(RepTuple const& rep) {
    std::size_t r = rep.dimension();
    auto const& k = rep.field_ptr();
    linalg::DependencyFinder<FieldElement> span(FieldElement::zero(k),
                                                FieldElement::one(k));
    std::vector<Matrix> basis;
    Matrix              id = Matrix::identity(k, r);
    span.add(id.entries());
    basis.push_back(id);
    // Closing the span under right multiplication by the generators
    // yields the algebra (the A_i^-1 are polynomials in A_i).
    for (std::size_t next = 0; next < basis.size() && basis.size() < r * r;
         ++next) {
      for (auto const& a : rep.matrices()) {
        Matrix prod = basis[next] * a;
        if (!span.add(prod.entries())) {
          basis.push_back(std::move(prod));
        }
      }
    }
    return basis.size();
  }

  bool is_absolutely_irreducible(RepTuple const& rep) {
    std::size_t r = rep.dimension();
    return generated_algebra_dimension(rep) == r * r;
  }

  QPoly minimal_polynomial_over_q(Matrix const& a) {
    linalg::DependencyFinder<Rational> finder(Rational(0), Rational(1));
    Matrix power = Matrix::identity(a.field_ptr(), a.size());
    while (true) {
      if (auto dep = finder.add(rational_coordinates(power))) {
        QPoly mp(dep->size() + 1);
        for (std::size_t j = 0; j < dep->size(); ++j) {
          mp[j] = -(*dep)[j];
        }
        mp.back() = 1;
        return mp;
      }
      power = power * a;
    }
  }

  bool is_unipotent(Matrix const& a) {
    Matrix n = a - Matrix::identity(a.field_ptr(), a.size());
    return n.pow(static_cast<long long>(a.size())).is_zero();
  }

  std::optional<std::uint64_t> matrix_finite_order(Matrix const& a) {
    if (!a.is_invertible()) {
      throw Error(ErrorCode::Singular, "finite order of a singular matrix");
    }
    QPoly mp = minimal_polynomial_over_q(a);
    if (!qpoly::is_squarefree(mp)) {
      return std::nullopt;
    }
    // Strip cyclotomic factors; what remains must be 1.
    auto          deg   = static_cast<std::uint64_t>(qpoly::degree(mp));
    QPoly         rest  = mp;
    std::uint64_t order = 1;
    for (std::uint64_t m = 1; m <= 2 * deg * deg && qpoly::degree(rest) > 0;
         ++m) {
      if (euler_phi(m) > static_cast<std::uint64_t>(qpoly::degree(rest))) {
        continue;
      }
      auto [q, r] = qpoly::divmod(rest, cyclotomic_polynomial(m));
      if (qpoly::is_zero(r)) {
        rest  = std::move(q);
        order = std::lcm(order, m);
      }
    }
    if (qpoly::degree(rest) != 0) {
      return std::nullopt;
    }
    if (!a.pow(static_cast<long long>(order)).is_identity()) {
      return std::nullopt;
    }
    return order;
  }

  namespace {

    void check_pair(RepTuple const& a, RepTuple const& b) {
      if (!(a.shape() == b.shape())) {
        throw Error(ErrorCode::ShapeMismatch, "representations of different groups");
      }
      if (!a.field().same_as(b.field())) {
        throw Error(ErrorCode::FieldMismatch, "representations over different fields");
      }
    }

  }  // namespace

  RepTuple direct_sum(RepTuple const& a, RepTuple const& b) {
    check_pair(a, b);
    std::vector<Matrix> m;
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
      m.push_back(block_sum(a[i], b[i]));
    }
    return RepTuple(a.shape(), std::move(m), RepTuple::Trusted{});
  }

  RepTuple tensor(RepTuple const& a, RepTuple const& b) {
    check_pair(a, b);
    std::vector<Matrix> m;
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
      m.push_back(kronecker(a[i], b[i]));
    }
    return RepTuple(a.shape(), std::move(m), RepTuple::Trusted{});
  }

  RepTuple trivial_rep(GroupShape const& shape, FieldPtr const& field,
                       std::size_t r) {
    std::vector<Matrix> m(static_cast<std::size_t>(shape.generator_count()),
                          Matrix::identity(field, r));
    return RepTuple(shape, std::move(m), RepTuple::Trusted{});
  }

  DetScreen det_screen(RepTuple const& rep) {
    DetScreen out;
    for (std::size_t i = 0; i < rep.generator_count(); ++i) {
      auto order = root_of_unity_order(rep[i].determinant());
      if (!order) {
        out.passed       = false;
        out.orders.clear();
        out.failed_index = i + 1;
        return out;
      }
      out.orders.push_back(*order);
    }
    out.passed = true;
    return out;
  }

}  // namespace mcgfin
