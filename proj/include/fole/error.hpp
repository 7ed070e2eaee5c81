#ifndef FOLE_ERROR_HPP
#define FOLE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace fole {

enum class Errc {
  UnknownSort,
  UnknownType,
  UnknownRelation,
  UnknownSymbol,
  UnknownName,
  ArityMismatch,
  TypeMismatch,
  SortError,
  SortClash,
  CompositionMismatch,
  InvalidMorphism,
  CapacityExceeded,
  UnsoundLogic,
  UnsoundWitness,
  NotCovering,
  ShapeMismatch,
  ConditionViolated,
  SyntaxError,
  IoError,
};

const char* errc_name(Errc c);

/// All fole operations signal failure through this exception type.
/// SyntaxError carries a 1-based line/column of the offending input.
struct Error : std::runtime_error {
  Errc code;
  int line = 0;
  int column = 0;

  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
  Error(Errc c, const std::string& msg, int ln, int col)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg + " (line " +
                           std::to_string(ln) + ", column " + std::to_string(col) + ")"),
        code(c), line(ln), column(col) {}
};

/// One diagnostic produced by a validator.
struct Finding {
  std::string subject;
  std::string message;
};

using Report = std::vector<Finding>;

}  // namespace fole

#endif
