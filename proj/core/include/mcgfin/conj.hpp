#ifndef MCGFIN_CONJ_HPP_
#define MCGFIN_CONJ_HPP_

// Simultaneous conjugacy of representation tuples.
//
// Tuples (A_i) and (A'_i) are conjugate when some invertible B has
// A_i = B A'_i B^-1 for all i.  Fingerprints (traces of short words plus
// generator determinants) are conjugation invariant and serve as hash
// buckets; the decision itself is made exactly from the intertwiner space.

#include <cstddef>
#include <optional>
#include <vector>

#include "mcgfin/matrep.hpp"

namespace mcgfin {

  struct TraceFingerprint {
    std::size_t               word_length = 0;
    std::vector<FieldElement> values;

    std::size_t hash() const noexcept;
    friend bool operator==(TraceFingerprint const& a,
                           TraceFingerprint const& b) {
      return a.word_length == b.word_length && a.values == b.values;
    }
  };

  struct TraceFingerprintHash {
    std::size_t operator()(TraceFingerprint const& f) const noexcept {
      return f.hash();
    }
  };

  // Traces of rho(w) for the reduced words of length 1..L in shortlex
  // order, then det(A_i) for each generator.
  TraceFingerprint fingerprint(RepTuple const& rep, std::size_t length = 3);

  // Basis of {M : M b_i = a_i M for all i}.  Throws SizeMismatch.
  std::vector<Matrix> intertwiners(RepTuple const& a, RepTuple const& b);

  struct ConjugacyOptions {
    std::size_t fingerprint_length = 3;
    std::size_t pencil_cap         = 8;
    // Skip the fingerprint comparison (the caller has already matched them).
    bool fingerprints_known_equal = false;
  };

  struct ConjugacyVerdict {
    enum class Kind { Conjugate, NotConjugate, Unsupported };
    Kind kind = Kind::NotConjugate;
    // When Conjugate: a[i] == B b[i] B^-1 for every i.
    std::optional<Matrix> conjugator;
    // Dimension of the intertwiner space, when it was computed.
    std::optional<std::size_t> intertwiner_dimension;
    // Conjugacy is decided over the field of definition K.
    bool over_field_only = true;
  };

  // Throws SizeMismatch, FieldMismatch or InternalSchurViolation.
  ConjugacyVerdict are_conjugate(RepTuple const&         a,
                                 RepTuple const&         b,
                                 ConjugacyOptions const& options = {});

  // B invertible with B b_i B^-1 == a_i for all i.
  bool verify_conjugator(RepTuple const& a, RepTuple const& b, Matrix const& B);

}  // namespace mcgfin

#endif  // MCGFIN_CONJ_HPP_
