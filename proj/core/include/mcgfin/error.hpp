#ifndef MCGFIN_ERROR_HPP_
#define MCGFIN_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcgfin {

  enum class ErrorCode {
    // input / validation
    ParseError,
    InvalidArgument,
    NotMonic,
    NotSquarefree,
    IrreducibilityUndecided,
    FieldMismatch,
    InvalidShape,
    ShapeMismatch,
    SizeMismatch,
    Singular,
    DivisionByZero,
    ZeroElement,
    IndexOutOfRange,
    NotReduced,
    RankTooSmall,
    RankMismatch,
    RankNotOne,
    MoveRankMismatch,
    InvalidSubstitution,
    ShapeNotSurface,
    InvalidExponent,
    GateNotApplicable,
    UnsupportedRepresentation,
    // internal consistency
    InternalSchurViolation,
    ClosureRecheckFailed,
    GateContradiction,
  };

  std::string_view error_code_name(ErrorCode code) noexcept;

  // True for the codes that signal a broken invariant rather than bad input.
  bool is_internal(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

}  // namespace mcgfin

#endif  // MCGFIN_ERROR_HPP_
