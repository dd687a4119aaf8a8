#ifndef LATOL_ERRORS_HPP
#define LATOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace latol {

/// Base class for all domain errors raised by the library.
struct LatolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by Lattice::from_covers when the cover digraph contains a cycle
// (the reflexive-transitive closure would not be antisymmetric).
struct NotAPosetError : LatolError {
  using LatolError::LatolError;
};

// Raised when some pair of elements has no meet or no join.
struct NotALatticeError : LatolError {
  using LatolError::LatolError;
};

// Raised when a listed cover pair is implied by the other covers,
// i.e. the input is not a transitive reduction.
struct NotTransitiveReductionError : LatolError {
  using LatolError::LatolError;
};

struct NotAToleranceError : LatolError {
  using LatolError::LatolError;
};

struct NotTwoUniformError : LatolError {
  using LatolError::LatolError;
};

// The witness construction detected a step that only holds for amicable
// pairs; reported instead of looping or asserting.
struct NotAmicableError : LatolError {
  using LatolError::LatolError;
};

// construct_witness was asked for a pair (a,b) that is not in T∘S.
struct NotInProductError : LatolError {
  using LatolError::LatolError;
};

/// Input file error; carries the 1-based line number of the offending line.
struct ParseError : LatolError {
  ParseError(int line_number, const std::string& what)
      : LatolError("line " + std::to_string(line_number) + ": " + what),
        line(line_number) {}
  int line;
};

}  // namespace latol

#endif  // LATOL_ERRORS_HPP
