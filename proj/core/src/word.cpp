#include "mcgfin/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "mcgfin/error.hpp"

namespace mcgfin {

  namespace {

    // (generator, +-1) sequence
    std::vector<std::pair<int, int>> expand(Word const& w) {
      std::vector<std::pair<int, int>> out;
      for (auto const& l : w.letters) {
        int s = l.exponent > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(l.exponent); ++k) {
          out.emplace_back(l.generator, s);
        }
      }
      return out;
    }

  }  // namespace

  bool Word::is_reduced() const noexcept {
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (letters[i].exponent == 0 || letters[i].generator < 1) {
        return false;
      }
      if (i > 0 && letters[i].generator == letters[i - 1].generator) {
        return false;
      }
    }
    return true;
  }

  std::size_t Word::length() const noexcept {
    std::size_t n = 0;
    for (auto const& l : letters) {
      n += static_cast<std::size_t>(std::abs(l.exponent));
    }
    return n;
  }

  int Word::max_generator() const noexcept {
    int m = 0;
    for (auto const& l : letters) {
      m = std::max(m, l.generator);
    }
    return m;
  }

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    for (auto const& l : w.letters) {
      if (l.exponent == 0) {
        continue;
      }
      if (!stack.empty() && stack.back().generator == l.generator) {
        stack.back().exponent += l.exponent;
        if (stack.back().exponent == 0) {
          stack.pop_back();
        }
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  Word concat(Word const& a, Word const& b) {
    Word r(a.letters);
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(r);
  }

  Word inverse(Word const& w) {
    Word r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      r.letters.push_back({it->generator, -it->exponent});
    }
    return r;
  }

  Word cyclic_reduce(Word const& w) {
    Word r = free_reduce(w);
    while (r.letters.size() >= 2
           && r.letters.front().generator == r.letters.back().generator) {
      Letter last = r.letters.back();
      r.letters.pop_back();
      r.letters.front().exponent += last.exponent;
      if (r.letters.front().exponent == 0) {
        r.letters.erase(r.letters.begin());
      }
    }
    return r;
  }

  bool are_conjugate_words(Word const& a, Word const& b) {
    auto x = expand(cyclic_reduce(a));
    auto y = expand(cyclic_reduce(b));
    if (x.size() != y.size()) {
      return false;
    }
    if (x.empty()) {
      return true;
    }
    for (std::size_t shift = 0; shift < x.size(); ++shift) {
      bool match = true;
      for (std::size_t i = 0; i < x.size() && match; ++i) {
        match = x[(i + shift) % x.size()] == y[i];
      }
      if (match) {
        return true;
      }
    }
    return false;
  }

  Word parse_word(std::string const& text) {
    std::istringstream in(text);
    std::string        tok;
    Word               w;
    while (in >> tok) {
      auto bad = [&] {
        return Error(ErrorCode::ParseError, "malformed word token '" + tok + "'");
      };
      if (tok.size() < 2 || tok[0] != 'x') {
        throw bad();
      }
      auto        caret = tok.find('^');
      std::string idx   = tok.substr(1, caret == std::string::npos
                                              ? std::string::npos
                                              : caret - 1);
      std::string exp = caret == std::string::npos ? "1" : tok.substr(caret + 1);
      try {
        std::size_t used = 0;
        int         g    = std::stoi(idx, &used);
        if (used != idx.size() || g < 1 || idx[0] == '+' || idx[0] == '-') {
          throw bad();
        }
        int e = std::stoi(exp, &used);
        if (used != exp.size() || e == 0) {
          throw bad();
        }
        w.letters.push_back({g, e});
      } catch (std::logic_error const&) {
        throw bad();
      }
    }
    return free_reduce(w);
  }

  std::string format_word(Word const& w) {
    std::string out;
    for (auto const& l : w.letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "x" + std::to_string(l.generator);
      if (l.exponent != 1) {
        out += "^" + std::to_string(l.exponent);
      }
    }
    return out;
  }

  std::vector<WordTreeNode> reduced_word_tree(int rank, std::size_t max_length) {
    std::vector<WordTreeNode> nodes;
    std::size_t               level_begin = 0;
    if (max_length == 0) {
      return nodes;
    }
    // length 1
    for (int g = 1; g <= rank; ++g) {
      nodes.push_back({-1, g, 1});
      nodes.push_back({-1, g, -1});
    }
    for (std::size_t len = 2; len <= max_length; ++len) {
      std::size_t level_end = nodes.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (int g = 1; g <= rank; ++g) {
          for (int s : {1, -1}) {
            if (g == nodes[i].generator && s == -nodes[i].sign) {
              continue;
            }
            nodes.push_back({static_cast<long>(i), g, s});
          }
        }
      }
      level_begin = level_end;
    }
    return nodes;
  }

  std::vector<Word> reduced_words_shortlex(int rank, std::size_t max_length) {
    auto              tree = reduced_word_tree(rank, max_length);
    std::vector<Word> words;
    words.reserve(tree.size());
    for (auto const& node : tree) {
      Word w = node.parent < 0 ? Word() : words[node.parent];
      w.letters.push_back({node.generator, node.sign});
      words.push_back(free_reduce(w));
    }
    return words;
  }

}  // namespace mcgfin
