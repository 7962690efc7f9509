#ifndef MCGFIN_TESTS_FIXTURES_HPP_
#define MCGFIN_TESTS_FIXTURES_HPP_

#include "mcgfin/error.hpp"
#include "mcgfin/matrep.hpp"

namespace mcgfin::test {

  inline FieldPtr rationals() {
    return NumberField::rationals();
  }

  inline FieldPtr gaussian() {
    return NumberField::make(qpoly::from_ints({1, 0, 1}), "i");
  }

  inline FieldPtr cyclotomic_field(std::uint64_t m) {
    return NumberField::make(cyclotomic_polynomial(m), "z");
  }

  inline Matrix potapchik_g1() {
    return Matrix::from_ints(rationals(), {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
  }

  inline Matrix potapchik_g2() {
    return Matrix::from_ints(rationals(), {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  }

  inline RepTuple potapchik() {
    return RepTuple(GroupShape::free(2), {potapchik_g1(), potapchik_g2()});
  }

  inline RepTuple s3_pair() {
    auto q = rationals();
    return RepTuple(GroupShape::free(2),
                    {Matrix::from_ints(q, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}),
                     Matrix::from_ints(q, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})});
  }

  inline RepTuple quaternion_pair() {
    auto k = gaussian();
    auto i = FieldElement::generator(k);
    return RepTuple(GroupShape::free(2),
                    {Matrix::diagonal({i, -i}), Matrix::from_ints(k, {{0, 1}, {-1, 0}})});
  }

  inline RepTuple dihedral_pair(std::uint64_t m) {
    auto k = cyclotomic_field(m);
    auto z = FieldElement::generator(k);
    return RepTuple(GroupShape::free(2),
                    {Matrix::diagonal({z, z.inverse()}), Matrix::from_ints(k, {{0, 1}, {1, 0}})});
  }

  inline RepTuple scalar_rep(std::vector<FieldElement> const& s) {
    std::vector<Matrix> m;
    for (auto const& x : s) {
      m.push_back(Matrix::diagonal({x}));
    }
    return RepTuple(GroupShape::free(static_cast<int>(s.size())), std::move(m));
  }

  template <typename F>
  ErrorCode code_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    throw std::logic_error("expected an mcgfin::Error");
  }

}  // namespace mcgfin::test

#endif  // MCGFIN_TESTS_FIXTURES_HPP_
