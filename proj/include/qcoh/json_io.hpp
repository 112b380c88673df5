#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "json.hpp"
#include "qcoh/correlations.hpp"
#include "qcoh/pdc.hpp"
#include "qcoh/states.hpp"
#include "qcoh/tomography.hpp"

namespace qcoh {

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Input is not valid JSON or does not match the state-file schema.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using StateFile = std::variant<SingleQubitState, TwoQubitState>;

/// Reads a JSON state file: an object with "dim" (2 or 4) and "re"/"im"
/// holding the dim x dim real and imaginary parts, either as nested rows or
/// as a flat row-major list. Throws IoError when the file cannot be opened,
/// ParseError on malformed JSON or schema, ValidationError when the matrix
/// is not a density matrix.
StateFile read_state_file(const std::string& path);

/// Same, but requires dim = 4.
TwoQubitState read_two_qubit_file(const std::string& path);

/// Writes the nested-rows form of the schema above.
void write_state_file(const std::string& path, const ComplexMatrix& m);

nlohmann::ordered_json state_to_json(const ComplexMatrix& m);
nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const StokesVector& r);
nlohmann::ordered_json to_json(const TomographyReport& r);
nlohmann::ordered_json to_json(const PdcReport& r);

}  // namespace qcoh
