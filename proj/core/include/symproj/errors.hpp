#pragma once

#include <stdexcept>
#include <string>

namespace symproj {

/// Malformed or inconsistent input: bad files, unknown labels, wrong shapes.
/// The CLI maps this family to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands with mismatched qubit / mode counts.
class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// A numerical contract was violated (non-Hermitian operator, projector that
/// is not idempotent, empty symmetry sector, ...). CLI exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A qubit that was asked to be removed is acted on by X or Y somewhere.
class StationarityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// The variational state has (numerically) no weight in the projected sector.
class SectorCollapseError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace symproj
