#ifndef MCGFIN_FINIMG_HPP_
#define MCGFIN_FINIMG_HPP_

// Finiteness of the matrix group generated by a tuple, and the
// necessary-condition screens that go with it.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgfin/matrep.hpp"
#include "mcgfin/orbit.hpp"

namespace mcgfin {

  struct ClosureResult {
    bool                finite = false;
    std::size_t         count  = 0;  // order when finite, cap otherwise
    std::vector<Matrix> elements;    // in discovery order, when finite
  };

  // Breadth-first closure of {A_i, A_i^-1} starting from I.
  ClosureResult group_closure(RepTuple const& rep, std::size_t cap = 200000);

  enum class InfiniteReason { UnipotentNontrivial, NonTorsionSpectrum };
  std::string_view reason_code(InfiniteReason r) noexcept;

  struct InfiniteWitness {
    Word           word;
    InfiniteReason reason;
  };

  // First word in shortlex order (length <= max_length) whose image is a
  // nontrivial unipotent or has infinite order.
  std::optional<InfiniteWitness> infinite_image_witness(RepTuple const& rep,
                                                        std::size_t max_length = 4);

  struct ImageVerdict {
    enum class Kind { FiniteImage, InfiniteImage, CapExceeded };
    Kind                           kind  = Kind::CapExceeded;
    std::size_t                    order = 0;  // FiniteImage
    std::size_t                    found = 0;  // CapExceeded
    std::optional<InfiniteWitness> witness;    // InfiniteImage
  };

  std::string_view image_kind_name(ImageVerdict::Kind k) noexcept;

  // Witness scan first, then closure.  A FiniteImage verdict is re-derived
  // from the generators in reverse order; a mismatch throws
  // ClosureRecheckFailed.
  ImageVerdict finite_image(RepTuple const& rep, std::size_t cap = 200000,
                            std::size_t witness_length = 4);

  struct ScreenReport {
    DetScreen det;
    bool      all_integral = true;
    // (generator, row, column), 1-based, of the first entry that is not
    // visibly an algebraic integer.
    std::optional<std::array<std::size_t, 3>> non_integral_entry;
    // Largest finite order among the sampled words (length <= 3).
    std::uint64_t       max_sampled_order = 1;
    std::optional<Word> infinite_order_word;
  };

  ScreenReport screens(RepTuple const& rep, std::size_t sample_length = 3);

  // [g1^n, g2^n] != I for g1 = [[1,1],[0,1]] (+) I_{r-2} and
  // g2 = [[1,0],[1,1]] (+) I_{r-2} over Q.  Throws RankTooSmall,
  // InvalidExponent.
  bool jordan_commutator_test(std::size_t r, long long n);

  struct ConsistencyReport {
    bool        contradiction = false;
    std::string clause;
  };

  // Checks "r^2 < g + 1, finite orbit under a full mapping-class move set
  // => finite image".  Throws GateNotApplicable when r^2 >= g + 1 or the
  // shape is free.
  ConsistencyReport theorem_gate(std::size_t            r,
                                 GroupShape const&      shape,
                                 OrbitResult::Verdict   orbit,
                                 ImageVerdict::Kind     image);

  ConsistencyReport theorem_gate(RepTuple const&     rep,
                                 GroupShape const&   shape,
                                 OrbitResult const&  orbit,
                                 ImageVerdict const& image);

}  // namespace mcgfin

#endif  // MCGFIN_FINIMG_HPP_
