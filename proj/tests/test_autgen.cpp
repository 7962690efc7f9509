#include "doctest.h"

#include "mcgfin/autgen.hpp"
#include "mcgfin/conj.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace mcgfin;
using namespace mcgfin::test;

namespace {

  std::vector<std::string> formatted(std::vector<Word> const& ws) {
    std::vector<std::string> out;
    for (auto const& w : ws) {
      out.push_back(format_word(w));
    }
    return out;
  }

  using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("named moves on tuples") {
  auto q = rationals();
  auto d = nielsen_move(potapchik(), Move::Twist);
  CHECK(d[0] == Matrix::from_ints(q, {{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(d[1] == potapchik_g2());

  auto e = nielsen_move(scalar_rep({FieldElement::from_int(q, 2)}), Move::Invert);
  CHECK(e[0](0, 0) == FieldElement::from_rational(q, Rational(1, 2)));

  auto a1 = FieldElement::from_int(q, 2), a2 = FieldElement::from_int(q, 3),
       a3 = FieldElement::from_int(q, 5);
  CHECK(nielsen_move(scalar_rep({a1, a2, a3}), Move::Cycle) == scalar_rep({a2, a3, a1}));
  CHECK(nielsen_move(scalar_rep({a1, a2, a3}), Move::Transpose) == scalar_rep({a2, a1, a3}));
  CHECK(code_of([&] { nielsen_move(scalar_rep({a1}), Move::Twist); }) == ErrorCode::RankTooSmall);
  CHECK(code_of([&] { substitution_for_move(Move::Transpose, 1); }) == ErrorCode::RankTooSmall);
}

TEST_CASE("substitutions for moves") {
  auto d = substitution_for_move(Move::Twist, 2);
  CHECK(formatted(d.images()) == Strings{"x1 x2", "x2"});
  CHECK(formatted(d.inverse_images()) == Strings{"x1 x2^-1", "x2"});

  auto e = substitution_for_move(Move::Invert, 2);
  CHECK(formatted(e.images()) == Strings{"x1^-1", "x2"});
  CHECK(e.inverse() == e);

  auto c = substitution_for_move(Move::Cycle, 3);
  CHECK(formatted(c.images()) == Strings{"x2", "x3", "x1"});
  CHECK(formatted(c.inverse_images()) == Strings{"x3", "x1", "x2"});

  CHECK(code_of([] {
          Substitution(2, {parse_word("x1 x2"), parse_word("x2")},
                       {parse_word("x1 x2"), parse_word("x2")});
        })
        == ErrorCode::InvalidSubstitution);
  CHECK(code_of([] { Substitution(2, {parse_word("x1")}, {parse_word("x1")}); })
        == ErrorCode::InvalidSubstitution);
  CHECK(code_of([] { Substitution(1, {parse_word("x2")}, {parse_word("x2")}); })
        == ErrorCode::InvalidSubstitution);
}

TEST_CASE("applying substitutions") {
  auto rep = potapchik();
  CHECK(apply_substitution(rep, substitution_for_move(Move::Twist, 2))
        == nielsen_move(rep, Move::Twist));
  CHECK(apply_substitution(rep, Substitution::identity(2)) == rep);
  auto d = substitution_for_move(Move::Twist, 2);
  CHECK(apply_substitution(apply_substitution(rep, d), d.inverse()) == rep);
  CHECK(apply_substitution(rep, compose(d, d.inverse())) == rep);
  CHECK(code_of([&] { apply_substitution(rep, Substitution::identity(3)); })
        == ErrorCode::RankMismatch);
}

TEST_CASE("move set labels") {
  auto ms = MoveSet::nielsen(2);
  CHECK(ms.labels() == Strings{"c", "tau", "eps", "d"});
  CHECK(MoveSet::nielsen(1).labels() == Strings{"c", "eps"});
  ms.custom.push_back(Substitution(2, {parse_word("x2"), parse_word("x1")},
                                   {parse_word("x2"), parse_word("x1")}, "swap"));
  ms.custom.push_back(Substitution(2, {parse_word("x1"), parse_word("x2")}, {parse_word("x1"), parse_word("x2")}));
  CHECK(ms.labels() == Strings{"c", "tau", "eps", "d", "swap", "aut2"});
  CHECK(parse_move("tau") == Move::Transpose);
  CHECK(!parse_move("t"));
}

TEST_CASE("peripheral structure") {
  auto shape = GroupShape::surface(1, 2);
  auto p     = peripheral_words(shape);
  REQUIRE(p.size() == 2);
  CHECK(format_word(p[0]) == "x3");
  CHECK(format_word(p[1]) == "x3^-1 x2 x1 x2^-1 x1^-1");
  CHECK(peripheral_check(Substitution::identity(3), shape));

  // inverting the puncture generator sends its loop to a non-conjugate
  Substitution inv(3, {parse_word("x1"), parse_word("x2"), parse_word("x3^-1")},
                   {parse_word("x1"), parse_word("x2"), parse_word("x3^-1")});
  CHECK(!peripheral_check(inv, shape));

  // conjugation by a fixed word is point-pushing
  auto         w  = parse_word("x1 x2");
  auto         wi = inverse(w);
  std::vector<Word> img, back;
  for (int i = 1; i <= 3; ++i) {
    img.push_back(concat(concat(w, Word::generator(i)), wi));
    back.push_back(concat(concat(wi, Word::generator(i)), w));
  }
  CHECK(peripheral_check(Substitution(3, img, back), shape));
  CHECK(code_of([] { peripheral_check(Substitution::identity(2), GroupShape::free(2)); })
        == ErrorCode::ShapeNotSurface);
  CHECK(code_of([&] { peripheral_check(Substitution::identity(2), shape); })
        == ErrorCode::RankMismatch);
}

TEST_CASE("property: moves agree with their substitutions") {
  Rng rng(31);
  for (int t = 0; t < 50; ++t) {
    auto k   = t % 2 ? gaussian() : rationals();
    int  n   = static_cast<int>(uniform(rng, 1, 3));
    auto rep = random_rep(rng, k, static_cast<std::size_t>(uniform(rng, 1, 3)), n);
    for (auto m : {Move::Cycle, Move::Transpose, Move::Invert, Move::Twist}) {
      if (move_min_rank(m) > n) {
        continue;
      }
      auto moved = nielsen_move(rep, m);
      CHECK(moved == apply_substitution(rep, substitution_for_move(m, n)));
      for (auto const& a : moved.matrices()) {
        CHECK(a.is_invertible());
        CHECK(a.field().same_as(rep.field()));
      }
    }
  }
}

TEST_CASE("property: substitutions act bijectively") {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    auto rep = random_rep(rng, rationals(), 2, 3);
    // a random product of named moves
    auto sigma = Substitution::identity(3);
    for (int j = 0; j < 5; ++j) {
      sigma = compose(sigma, substitution_for_move(random_move(rng, 3), 3));
    }
    CHECK(apply_substitution(apply_substitution(rep, sigma), sigma.inverse()) == rep);
    CHECK(apply_substitution(apply_substitution(rep, sigma.inverse()), sigma) == rep);
  }
}

TEST_CASE("property: moves are equivariant under conjugation") {
  Rng rng(33);
  for (int t = 0; t < 20; ++t) {
    auto k   = gaussian();
    auto rep = random_rep(rng, k, 2, 2);
    auto b   = invertible_matrix(rng, k, 2);
    auto img = conjugate_by(rep, b);
    auto m   = random_move(rng, 2);
    CHECK(verify_conjugator(nielsen_move(img, m), nielsen_move(rep, m), b));
  }
}
