#include "mcgfin/finimg.hpp"

#include <algorithm>
#include <unordered_set>

#include "mcgfin/error.hpp"

namespace mcgfin {

  namespace {

    ClosureResult closure_of(std::vector<Matrix> const& gens, FieldPtr const& k,
                             std::size_t r, std::size_t cap) {
      ClosureResult                     out;
      std::unordered_set<Matrix>        seen;
      std::vector<Matrix>               elems;
      Matrix                            id = Matrix::identity(k, r);
      seen.insert(id);
      elems.push_back(id);
      for (std::size_t next = 0; next < elems.size(); ++next) {
        for (auto const& g : gens) {
          Matrix prod = elems[next] * g;
          if (seen.contains(prod)) {
            continue;
          }
          if (elems.size() >= cap) {
            out.finite = false;
            out.count  = cap;
            return out;
          }
          seen.insert(prod);
          elems.push_back(std::move(prod));
        }
      }
      out.finite   = true;
      out.count    = elems.size();
      out.elements = std::move(elems);
      return out;
    }

    std::vector<Matrix> generators_with_inverses(RepTuple const& rep) {
      std::vector<Matrix> gens;
      for (auto const& a : rep.matrices()) {
        gens.push_back(a);
        gens.push_back(a.inverse());
      }
      return gens;
    }

  }  // namespace

  ClosureResult group_closure(RepTuple const& rep, std::size_t cap) {
    if (cap == 0) {
      throw Error(ErrorCode::InvalidArgument, "closure cap must be >= 1");
    }
    return closure_of(generators_with_inverses(rep), rep.field_ptr(),
                      rep.dimension(), cap);
  }

  std::string_view reason_code(InfiniteReason r) noexcept {
    switch (r) {
      case InfiniteReason::UnipotentNontrivial: return "unipotentNontrivial";
      case InfiniteReason::NonTorsionSpectrum: return "nonTorsionSpectrum";
    }
    return "?";
  }

  std::string_view image_kind_name(ImageVerdict::Kind k) noexcept {
    switch (k) {
      case ImageVerdict::Kind::FiniteImage: return "finite_image";
      case ImageVerdict::Kind::InfiniteImage: return "infinite_image";
      case ImageVerdict::Kind::CapExceeded: return "cap_exceeded";
    }
    return "?";
  }

  std::optional<InfiniteWitness> infinite_image_witness(RepTuple const& rep,
                                                        std::size_t max_length) {
    if (max_length == 0) {
      throw Error(ErrorCode::InvalidArgument, "witness length must be >= 1");
    }
    WordEvaluator eval(rep);
    auto tree  = reduced_word_tree(static_cast<int>(rep.generator_count()),
                                   max_length);
    auto words = reduced_words_shortlex(static_cast<int>(rep.generator_count()),
                                        max_length);
    std::vector<Matrix> images;
    images.reserve(tree.size());
    for (std::size_t k = 0; k < tree.size(); ++k) {
      auto const&   node = tree[k];
      Matrix const& g    = eval.generator(node.generator, node.sign);
      images.push_back(node.parent < 0 ? g : images[node.parent] * g);
      Matrix const& m = images.back();
      if (m.is_identity()) {
        continue;
      }
      if (is_unipotent(m)) {
        return InfiniteWitness{words[k], InfiniteReason::UnipotentNontrivial};
      }
      if (!matrix_finite_order(m)) {
        return InfiniteWitness{words[k], InfiniteReason::NonTorsionSpectrum};
      }
    }
    return std::nullopt;
  }

  ImageVerdict finite_image(RepTuple const& rep, std::size_t cap,
                            std::size_t witness_length) {
    ImageVerdict v;
    if (auto w = infinite_image_witness(rep, witness_length)) {
      v.kind    = ImageVerdict::Kind::InfiniteImage;
      v.witness = std::move(w);
      return v;
    }
    auto closure = group_closure(rep, cap);
    if (!closure.finite) {
      v.kind  = ImageVerdict::Kind::CapExceeded;
      v.found = closure.count;
      return v;
    }
    auto gens = generators_with_inverses(rep);
    std::reverse(gens.begin(), gens.end());
    auto again = closure_of(gens, rep.field_ptr(), rep.dimension(), cap);
    if (!again.finite || again.count != closure.count) {
      throw Error(ErrorCode::ClosureRecheckFailed,
                  "closure order changed with generator order");
    }
    v.kind  = ImageVerdict::Kind::FiniteImage;
    v.order = closure.count;
    return v;
  }

  ScreenReport screens(RepTuple const& rep, std::size_t sample_length) {
    ScreenReport out;
    out.det = det_screen(rep);
    for (std::size_t g = 0; g < rep.generator_count() && out.all_integral; ++g) {
      std::size_t r = rep.dimension();
      for (std::size_t i = 0; i < r && out.all_integral; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          if (!is_algebraic_integer(rep[g](i, j))) {
            out.all_integral       = false;
            out.non_integral_entry = std::array<std::size_t, 3>{g + 1, i + 1, j + 1};
            break;
          }
        }
      }
    }
    WordEvaluator eval(rep);
    auto tree  = reduced_word_tree(static_cast<int>(rep.generator_count()),
                                   sample_length);
    auto words = reduced_words_shortlex(static_cast<int>(rep.generator_count()),
                                        sample_length);
    std::vector<Matrix> images;
    images.reserve(tree.size());
    for (std::size_t k = 0; k < tree.size(); ++k) {
      auto const&   node = tree[k];
      Matrix const& g    = eval.generator(node.generator, node.sign);
      images.push_back(node.parent < 0 ? g : images[node.parent] * g);
      auto order = matrix_finite_order(images.back());
      if (order) {
        out.max_sampled_order = std::max(out.max_sampled_order, *order);
      } else if (!out.infinite_order_word) {
        out.infinite_order_word = words[k];
      }
    }
    return out;
  }

  bool jordan_commutator_test(std::size_t r, long long n) {
    if (r < 2) {
      throw Error(ErrorCode::RankTooSmall, "Jordan commutator test needs r >= 2");
    }
    if (n < 1) {
      throw Error(ErrorCode::InvalidExponent, "exponent n must be >= 1");
    }
    auto   q  = NumberField::rationals();
    Matrix g1 = Matrix::identity(q, r);
    Matrix g2 = Matrix::identity(q, r);
    g1(0, 1)  = FieldElement::one(q);
    g2(1, 0)  = FieldElement::one(q);
    return !commutator(g1.pow(n), g2.pow(n)).is_identity();
  }

  ConsistencyReport theorem_gate(std::size_t r, GroupShape const& shape,
                                 OrbitResult::Verdict orbit,
                                 ImageVerdict::Kind   image) {
    if (!shape.is_surface()) {
      throw Error(ErrorCode::GateNotApplicable,
                  "rank bound applies to punctured surfaces only");
    }
    auto g = static_cast<std::size_t>(shape.genus());
    if (r * r >= g + 1) {
      throw Error(ErrorCode::GateNotApplicable,
                  "r^2 = " + std::to_string(r * r) + " >= g + 1 = "
                      + std::to_string(g + 1));
    }
    ConsistencyReport rep;
    bool finite_orbit  = orbit == OrbitResult::Verdict::Finite;
    bool infinite_image = image == ImageVerdict::Kind::InfiniteImage;
    if (finite_orbit && infinite_image) {
      rep.contradiction = true;
      rep.clause = "CONTRADICTION: finite orbit with r^2 < g + 1 but the image "
                   "is certified infinite";
    } else if (!finite_orbit) {
      rep.clause = "CONSISTENT: orbit not certified finite; the rank bound "
                   "makes no claim";
    } else if (image == ImageVerdict::Kind::FiniteImage) {
      rep.clause = "CONSISTENT: finite orbit and finite image, as the rank "
                   "bound predicts";
    } else {
      rep.clause = "CONSISTENT: finite orbit; image finiteness undecided "
                   "within the closure cap";
    }
    return rep;
  }

  ConsistencyReport theorem_gate(RepTuple const& rep, GroupShape const& shape,
                                 OrbitResult const& orbit,
                                 ImageVerdict const& image) {
    return theorem_gate(rep.dimension(), shape, orbit.verdict, image.kind);
  }

}  // namespace mcgfin
