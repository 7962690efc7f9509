#include "mcgfin/autgen.hpp"

#include <algorithm>

#include "mcgfin/error.hpp"

namespace mcgfin {

  Word substitute(Word const& w, std::vector<Word> const& images) {
    Word out;
    for (auto const& l : w.letters) {
      if (l.generator < 1 || l.generator > static_cast<int>(images.size())) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "x" + std::to_string(l.generator) + " beyond substitution rank");
      }
      Word piece = l.exponent > 0 ? images[l.generator - 1]
                                  : inverse(images[l.generator - 1]);
      for (int k = 0; k < std::abs(l.exponent); ++k) {
        out.letters.insert(out.letters.end(), piece.letters.begin(),
                           piece.letters.end());
      }
    }
    return free_reduce(out);
  }

  Substitution::Substitution(int rank, std::vector<Word> images,
                             std::vector<Word> inverse_images, std::string name)
      : _rank(rank),
        _images(std::move(images)),
        _inverse(std::move(inverse_images)),
        _name(std::move(name)) {
    if (_rank < 1) {
      throw Error(ErrorCode::InvalidSubstitution, "rank must be >= 1");
    }
    if (static_cast<int>(_images.size()) != _rank
        || static_cast<int>(_inverse.size()) != _rank) {
      throw Error(ErrorCode::InvalidSubstitution,
                  "expected " + std::to_string(_rank) + " images and inverse images");
    }
    for (auto* list : {&_images, &_inverse}) {
      for (auto& w : *list) {
        w = free_reduce(w);
        if (w.max_generator() > _rank) {
          throw Error(ErrorCode::InvalidSubstitution,
                      "image '" + format_word(w) + "' uses a generator beyond rank");
        }
      }
    }
    for (int i = 1; i <= _rank; ++i) {
      Word x = Word::generator(i);
      if (substitute(substitute(x, _inverse), _images) != x
          || substitute(substitute(x, _images), _inverse) != x) {
        throw Error(ErrorCode::InvalidSubstitution,
                    "inverse images do not invert the images at x"
                        + std::to_string(i));
      }
    }
  }

  Substitution Substitution::identity(int rank) {
    std::vector<Word> id;
    for (int i = 1; i <= rank; ++i) {
      id.push_back(Word::generator(i));
    }
    return Substitution(rank, id, id, "id");
  }

  Substitution Substitution::inverse() const {
    return Substitution(_rank, _inverse, _images,
                        _name.empty() ? "" : _name + "^-1");
  }

  Word Substitution::apply(Word const& w) const {
    return substitute(w, _images);
  }

  Substitution compose(Substitution const& outer, Substitution const& inner) {
    if (outer.rank() != inner.rank()) {
      throw Error(ErrorCode::RankMismatch, "composing substitutions of different rank");
    }
    std::vector<Word> img, inv;
    for (int i = 1; i <= outer.rank(); ++i) {
      Word x = Word::generator(i);
      img.push_back(outer.apply(inner.apply(x)));
      inv.push_back(substitute(substitute(x, outer.inverse_images()),
                               inner.inverse_images()));
    }
    return Substitution(outer.rank(), img, inv);
  }

  std::string_view move_name(Move m) noexcept {
    switch (m) {
      case Move::Cycle: return "c";
      case Move::Transpose: return "tau";
      case Move::Invert: return "eps";
      case Move::Twist: return "d";
    }
    return "?";
  }

  std::optional<Move> parse_move(std::string_view name) {
    for (auto m : {Move::Cycle, Move::Transpose, Move::Invert, Move::Twist}) {
      if (move_name(m) == name) {
        return m;
      }
    }
    return std::nullopt;
  }

  int move_min_rank(Move m) noexcept {
    return m == Move::Transpose || m == Move::Twist ? 2 : 1;
  }

  MoveSet MoveSet::nielsen(int rank) {
    MoveSet s;
    for (auto m : {Move::Cycle, Move::Transpose, Move::Invert, Move::Twist}) {
      if (rank >= move_min_rank(m)) {
        s.named.push_back(m);
      }
    }
    return s;
  }

  bool MoveSet::contains(Move m) const noexcept {
    for (auto x : named) {
      if (x == m) {
        return true;
      }
    }
    return false;
  }

  std::vector<std::string> MoveSet::labels() const {
    std::vector<std::string> out;
    for (auto m : {Move::Cycle, Move::Transpose, Move::Invert, Move::Twist}) {
      if (contains(m)) {
        out.emplace_back(move_name(m));
      }
    }
    for (std::size_t i = 0; i < custom.size(); ++i) {
      out.push_back(custom[i].name().empty() ? "aut" + std::to_string(i + 1)
                                             : custom[i].name());
    }
    return out;
  }

  RepTuple nielsen_move(RepTuple const& rep, Move move) {
    auto n = static_cast<int>(rep.generator_count());
    if (n < move_min_rank(move)) {
      throw Error(ErrorCode::RankTooSmall,
                  std::string("move ") + std::string(move_name(move))
                      + " needs at least 2 generators");
    }
    std::vector<Matrix> m = rep.matrices();
    switch (move) {
      case Move::Cycle:
        std::rotate(m.begin(), m.begin() + 1, m.end());
        break;
      case Move::Transpose: std::swap(m[0], m[1]); break;
      case Move::Invert: m[0] = m[0].inverse(); break;
      case Move::Twist: m[0] = m[0] * m[1]; break;
    }
    return RepTuple(rep.shape(), std::move(m), RepTuple::Trusted{});
  }

  Substitution substitution_for_move(Move move, int rank) {
    if (rank < move_min_rank(move)) {
      throw Error(ErrorCode::RankTooSmall,
                  std::string("move ") + std::string(move_name(move))
                      + " needs at least 2 generators");
    }
    std::vector<Word> img, inv;
    for (int i = 1; i <= rank; ++i) {
      img.push_back(Word::generator(i));
    }
    inv = img;
    switch (move) {
      case Move::Cycle:
        for (int i = 1; i <= rank; ++i) {
          img[i - 1] = Word::generator(i % rank + 1);
          inv[i - 1] = Word::generator((i + rank - 2) % rank + 1);
        }
        break;
      case Move::Transpose:
        std::swap(img[0], img[1]);
        std::swap(inv[0], inv[1]);
        break;
      case Move::Invert:
        img[0] = inv[0] = Word::generator(1, -1);
        break;
      case Move::Twist:
        img[0] = Word({{1, 1}, {2, 1}});
        inv[0] = Word({{1, 1}, {2, -1}});
        break;
    }
    return Substitution(rank, img, inv, std::string(move_name(move)));
  }

  RepTuple apply_substitution(RepTuple const& rep, Substitution const& sigma) {
    if (sigma.rank() != static_cast<int>(rep.generator_count())) {
      throw Error(ErrorCode::RankMismatch,
                  "substitution of rank " + std::to_string(sigma.rank())
                      + " on a tuple of " + std::to_string(rep.generator_count())
                      + " matrices");
    }
    WordEvaluator       eval(rep);
    std::vector<Matrix> m;
    for (auto const& w : sigma.images()) {
      m.push_back(eval.evaluate(w));
    }
    return RepTuple(rep.shape(), std::move(m), RepTuple::Trusted{});
  }

  std::vector<Word> peripheral_words(GroupShape const& shape) {
    if (!shape.is_surface()) {
      throw Error(ErrorCode::ShapeNotSurface,
                  "peripheral structure needs a punctured-surface shape");
    }
    int               g = shape.genus(), n = shape.punctures();
    std::vector<Word> out;
    for (int j = 1; j < n; ++j) {
      out.push_back(Word::generator(2 * g + j));
    }
    Word relator;
    for (int i = 0; i < g; ++i) {
      int a = 2 * i + 1, b = 2 * i + 2;
      relator.letters.insert(relator.letters.end(),
                             {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    }
    for (int j = 1; j < n; ++j) {
      relator.letters.push_back({2 * g + j, 1});
    }
    out.push_back(inverse(free_reduce(relator)));
    return out;
  }

  bool peripheral_check(Substitution const& sigma, GroupShape const& shape) {
    auto peripheral = peripheral_words(shape);
    if (sigma.rank() != shape.generator_count()) {
      throw Error(ErrorCode::RankMismatch,
                  "substitution rank differs from the surface generator count");
    }
    for (auto const& p : peripheral) {
      Word image = sigma.apply(p);
      bool found = false;
      for (auto const& q : peripheral) {
        if (are_conjugate_words(image, q)) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

}  // namespace mcgfin
