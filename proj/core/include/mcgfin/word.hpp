#ifndef MCGFIN_WORD_HPP_
#define MCGFIN_WORD_HPP_

// Words in the free group on x1, ..., xN, stored as runs
// (generator index, nonzero exponent).  Generator indices are 1-based.

#include <cstddef>
#include <string>
#include <vector>

namespace mcgfin {

  struct Letter {
    int generator = 1;
    int exponent  = 1;

    friend bool operator==(Letter const&, Letter const&) = default;
  };

  struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> l) : letters(std::move(l)) {}

    static Word generator(int index, int exponent = 1) {
      return Word({Letter{index, exponent}});
    }

    bool empty() const noexcept {
      return letters.empty();
    }
    // No zero exponents and no two adjacent runs on the same generator.
    bool is_reduced() const noexcept;
    // Number of unit letters, i.e. the sum of |exponent|.
    std::size_t length() const noexcept;
    int         max_generator() const noexcept;

    friend bool operator==(Word const&, Word const&) = default;
  };

  Word free_reduce(Word const& w);
  Word concat(Word const& a, Word const& b);  // freely reduced
  Word inverse(Word const& w);

  // Cyclically reduced representative of the conjugacy class of w.
  Word cyclic_reduce(Word const& w);
  // Conjugacy in the free group: equal cyclic reductions up to rotation.
  bool are_conjugate_words(Word const& a, Word const& b);

  // Whitespace-separated tokens `x3`, `x3^-1`, `x3^4`; the empty string is
  // the identity.  Parsing reduces the result freely.
  Word        parse_word(std::string const& text);
  std::string format_word(Word const& w);

  // All freely reduced words with 1 <= length <= max_length over
  // x1..x_rank in shortlex order, with unit letters ordered
  // x1 < x1^-1 < x2 < x2^-1 < ...
  std::vector<Word> reduced_words_shortlex(int rank, std::size_t max_length);

  // The unit-letter walk that reduced_words_shortlex flattens: each node is
  // (parent index or -1, generator, +1/-1).  Node order equals the word order
  // above, so callers can evaluate words by extending their parent.
  struct WordTreeNode {
    long parent;
    int  generator;
    int  sign;
  };
  std::vector<WordTreeNode> reduced_word_tree(int rank, std::size_t max_length);

}  // namespace mcgfin

#endif  // MCGFIN_WORD_HPP_
