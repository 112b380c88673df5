#include "qcoh/json_io.hpp"

#include <fstream>
#include <vector>

namespace qcoh {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Accepts either nested rows [[..],[..]] or a flat row-major list of
// dim*dim numbers.
std::vector<double> read_part(const json& j, const char* key, int dim) {
  if (!j.contains(key)) {
    throw ParseError(std::string("state file: missing field '") + key + "'");
  }
  const json& part = j[key];
  if (!part.is_array()) {
    throw ParseError(std::string("state file: '") + key + "' must be an array");
  }
  const auto n = static_cast<int>(part.size());
  std::vector<double> flat;
  flat.reserve(static_cast<std::size_t>(dim) * dim);
  if (n == dim && part[0].is_array()) {
    for (const json& row : part) {
      if (!row.is_array() || static_cast<int>(row.size()) != dim) {
        throw ParseError(std::string("state file: '") + key + "' rows must have " +
                         std::to_string(dim) + " entries");
      }
      for (const json& v : row) {
        if (!v.is_number()) {
          throw ParseError(std::string("state file: '") + key + "' entries must be numbers");
        }
        flat.push_back(v.get<double>());
      }
    }
  } else if (n == dim * dim) {
    for (const json& v : part) {
      if (!v.is_number()) {
        throw ParseError(std::string("state file: '") + key + "' entries must be numbers");
      }
      flat.push_back(v.get<double>());
    }
  } else {
    throw ParseError(std::string("state file: '") + key + "' must be " +
                     std::to_string(dim) + "x" + std::to_string(dim) +
                     " nested rows or a flat list of " + std::to_string(dim * dim));
  }
  return flat;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("state file: top level must be an object");
  if (!j.contains("dim")) throw ParseError("state file: missing field 'dim'");
  if (!j["dim"].is_number_integer()) {
    throw ParseError("state file: 'dim' must be an integer");
  }
  const int dim = j["dim"].get<int>();
  if (dim != 2 && dim != 4) throw ParseError("state file: 'dim' must be 2 or 4");
  const std::vector<double> re = read_part(j, "re", dim);
  const std::vector<double> im = read_part(j, "im", dim);
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k) {
      m(i, k) = cplx(re[i * dim + k], im[i * dim + k]);
    }
  }
  return m;
}

}  // namespace

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  const ComplexMatrix m = matrix_from_json(j);
  if (m.dim() == 2) return SingleQubitState::validate(m);
  return TwoQubitState::validate(m);
}

TwoQubitState read_two_qubit_file(const std::string& path) {
  StateFile s = read_state_file(path);
  if (auto* two = std::get_if<TwoQubitState>(&s)) return *two;
  throw ParseError("state file: expected dim 4, got 2: " + path);
}

nlohmann::ordered_json state_to_json(const ComplexMatrix& m) {
  ordered_json re = ordered_json::array();
  ordered_json im = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json re_row = ordered_json::array();
    ordered_json im_row = ordered_json::array();
    for (int k = 0; k < m.dim(); ++k) {
      re_row.push_back(m(i, k).real());
      im_row.push_back(m(i, k).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return ordered_json{{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

void write_state_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << state_to_json(m).dump(2) << '\n';
  if (!out) throw IoError("write failed: " + path);
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  return ordered_json{{"name", r.name},
                      {"quantity", r.quantity},
                      {"bound", r.bound},
                      {"slack", r.slack},
                      {"satisfied", r.satisfied}};
}

nlohmann::ordered_json to_json(const StokesVector& r) {
  return ordered_json(r.r);
}

nlohmann::ordered_json to_json(const TomographyReport& r) {
  ordered_json settings = ordered_json::array();
  for (const MeasurementSetting& s : r.settings) {
    settings.push_back({s.theta_s, s.theta_i, s.delta_s, s.delta_i});
  }
  ordered_json out{{"settings", std::move(settings)},
                   {"m", r.coincidences.m},
                   {"stokes", to_json(r.stokes)},
                   {"p2x2", r.p2x2},
                   {"physical", r.physical}};
  out["shots"] = r.coincidences.shots ? ordered_json(*r.coincidences.shots)
                                      : ordered_json(nullptr);
  return out;
}

nlohmann::ordered_json to_json(const PdcReport& r) {
  return ordered_json{{"p2_pump", r.p2_pump},
                      {"bound", r.bound},
                      {"p2x2_si", r.p2x2_si},
                      {"slack", r.slack},
                      {"majorization_ok", r.majorization_ok}};
}

}  // namespace qcoh
