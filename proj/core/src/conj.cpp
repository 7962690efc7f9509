#include "mcgfin/conj.hpp"

#include <algorithm>

#include "mcgfin/error.hpp"
#include "mcgfin/linalg.hpp"

namespace mcgfin {

  std::size_t TraceFingerprint::hash() const noexcept {
    std::size_t h = word_length;
    for (auto const& v : values) {
      h = h * 0x9e3779b97f4a7c15ull ^ v.hash();
    }
    return h;
  }

  TraceFingerprint fingerprint(RepTuple const& rep, std::size_t length) {
    TraceFingerprint fp;
    fp.word_length = length;
    WordEvaluator       eval(rep);
    auto                tree = reduced_word_tree(
        static_cast<int>(rep.generator_count()), length);
    std::vector<Matrix> images;
    images.reserve(tree.size());
    fp.values.reserve(tree.size() + rep.generator_count());
    for (auto const& node : tree) {
      Matrix const& g = eval.generator(node.generator, node.sign);
      images.push_back(node.parent < 0 ? g : images[node.parent] * g);
      fp.values.push_back(images.back().trace());
    }
    for (auto const& a : rep.matrices()) {
      fp.values.push_back(a.determinant());
    }
    return fp;
  }

  namespace {

    void check_sizes(RepTuple const& a, RepTuple const& b) {
      if (a.dimension() != b.dimension()
          || a.generator_count() != b.generator_count()) {
        throw Error(ErrorCode::SizeMismatch,
                    "tuples differ in matrix size or length");
      }
      if (!a.field().same_as(b.field())) {
        throw Error(ErrorCode::FieldMismatch, "tuples over different fields");
      }
    }

    // det(sum_j t_j M_j) for t on the grid point
    FieldElement pencil_det(std::vector<Matrix> const&   basis,
                            std::vector<unsigned> const& t,
                            Matrix&                      out) {
      auto const& k = basis[0].field_ptr();
      out           = Matrix(k, basis[0].size());
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (t[j] == 0) {
          continue;
        }
        out = out + basis[j].scaled(FieldElement::from_int(k, t[j]));
      }
      return out.determinant();
    }

  }  // namespace

  std::vector<Matrix> intertwiners(RepTuple const& a, RepTuple const& b) {
    check_sizes(a, b);
    std::size_t  r    = a.dimension();
    auto const&  k    = a.field_ptr();
    FieldElement zero = FieldElement::zero(k);
    std::vector<linalg::Vec<FieldElement>> rows;
    // (M b - a M)_{pq} = sum_l M_{pl} b_{lq} - sum_l a_{pl} M_{lq}
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
      for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t q = 0; q < r; ++q) {
          linalg::Vec<FieldElement> row(r * r, zero);
          for (std::size_t l = 0; l < r; ++l) {
            row[p * r + l] += b[i](l, q);
            row[l * r + q] -= a[i](p, l);
          }
          rows.push_back(std::move(row));
        }
      }
    }
    auto                basis = linalg::kernel(std::move(rows), r * r, zero,
                                               FieldElement::one(k));
    std::vector<Matrix> out;
    for (auto& v : basis) {
      out.emplace_back(k, r, std::move(v));
    }
    return out;
  }

  bool verify_conjugator(RepTuple const& a, RepTuple const& b, Matrix const& B) {
    if (!B.is_invertible()) {
      return false;
    }
    for (std::size_t i = 0; i < a.generator_count(); ++i) {
      if (B * b[i] != a[i] * B) {
        return false;
      }
    }
    return true;
  }

  ConjugacyVerdict are_conjugate(RepTuple const& a, RepTuple const& b,
                                 ConjugacyOptions const& options) {
    check_sizes(a, b);
    ConjugacyVerdict verdict;
    if (!options.fingerprints_known_equal
        && !(fingerprint(a, options.fingerprint_length)
             == fingerprint(b, options.fingerprint_length))) {
      verdict.kind = ConjugacyVerdict::Kind::NotConjugate;
      return verdict;
    }

    auto basis                    = intertwiners(a, b);
    std::size_t d                 = basis.size();
    verdict.intertwiner_dimension = d;
    if (d == 0) {
      verdict.kind = ConjugacyVerdict::Kind::NotConjugate;
      return verdict;
    }

    auto accept = [&](Matrix B) {
      if (!verify_conjugator(a, b, B)) {
        throw Error(ErrorCode::InternalSchurViolation,
                    "candidate conjugator failed re-verification");
      }
      verdict.kind       = ConjugacyVerdict::Kind::Conjugate;
      verdict.conjugator = std::move(B);
      return verdict;
    };

    // Between absolutely irreducible tuples the intertwiners are zero or a
    // line of invertible matrices (Schur).  Anything else is a bug.
    auto schur_guard = [&] {
      if (is_absolutely_irreducible(a) && is_absolutely_irreducible(b)) {
        throw Error(ErrorCode::InternalSchurViolation,
                    "irreducible tuples with intertwiner space of dimension "
                        + std::to_string(d)
                        + (d == 1 ? " spanned by a singular matrix" : ""));
      }
    };

    if (d == 1) {
      if (basis[0].is_invertible()) {
        return accept(basis[0]);
      }
      schur_guard();
      verdict.kind = ConjugacyVerdict::Kind::NotConjugate;
      return verdict;
    }
    schur_guard();
    if (d > options.pencil_cap) {
      verdict.kind = ConjugacyVerdict::Kind::Unsupported;
      return verdict;
    }

    // det(t_1 M_1 + ... + t_d M_d) has degree <= r in each t_j, so it
    // vanishes on {0..r}^d only if it is identically zero.
    auto                  side = static_cast<unsigned>(a.dimension() + 1);
    std::vector<unsigned> t(d, 0);
    Matrix                candidate(a.field_ptr(), a.dimension());
    // Points with every coordinate nonzero first; they almost always hit.
    for (unsigned shift = 0; shift + 1 < side; ++shift) {
      for (std::size_t j = 0; j < d; ++j) {
        t[j] = 1 + static_cast<unsigned>((j + shift) % (side - 1));
      }
      if (!pencil_det(basis, t, candidate).is_zero()) {
        return accept(candidate);
      }
    }
    std::fill(t.begin(), t.end(), 0u);
    while (true) {
      std::size_t j = 0;
      while (j < d && t[j] + 1 == side) {
        t[j] = 0;
        ++j;
      }
      if (j == d) {
        break;
      }
      ++t[j];
      if (!pencil_det(basis, t, candidate).is_zero()) {
        return accept(candidate);
      }
    }
    verdict.kind = ConjugacyVerdict::Kind::NotConjugate;
    return verdict;
  }

}  // namespace mcgfin
