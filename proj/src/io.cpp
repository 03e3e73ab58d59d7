#include "rebit/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rebit {

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string format_entry(double v) { return format_number(v); }
std::string format_entry(const Complex &v) {
  return "[" + format_number(v.real()) + ", " + format_number(v.imag()) + "]";
}

// Vectors on one line; matrices one row per line.
template <typename Scalar>
std::string format_data(const Mat<Scalar> &m) {
  const bool matrix = m.cols() > 1;
  std::string out = "[";
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (matrix) out += "\n    ";
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out += format_entry(m(r, c));
      const bool last = r + 1 == m.rows() && c + 1 == m.cols();
      if (!last) out += matrix && c + 1 == m.cols() ? "," : ", ";
    }
  }
  out += matrix ? "\n  ]" : "]";
  return out;
}

template <typename Scalar>
std::string document(const char *kind, int n, const Mat<Scalar> &data) {
  std::ostringstream out;
  out << "{\n"
      << "  \"field\": \"" << to_string(field_of_v<Scalar>) << "\",\n"
      << "  \"kind\": \"" << kind << "\",\n"
      << "  \"n_systems\": " << n << ",\n"
      << "  \"data\": " << format_data(data) << "\n"
      << "}\n";
  return out.str();
}

template <typename Scalar>
Vec<Scalar> parse_entries(const nlohmann::json &data, std::size_t expected) {
  if (!data.is_array()) throw std::invalid_argument("state file: 'data' must be an array");
  if (data.size() != expected)
    throw std::invalid_argument("state file: 'data' has " + std::to_string(data.size()) + " entries, expected " +
                                std::to_string(expected));
  Vec<Scalar> out(static_cast<Eigen::Index>(expected));
  for (std::size_t k = 0; k < expected; ++k) {
    const auto &e = data[k];
    if constexpr (is_complex_v<Scalar>) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw std::invalid_argument("state file: complex entries must be [re, im] pairs");
      out(static_cast<Eigen::Index>(k)) = Complex(e[0].get<double>(), e[1].get<double>());
    } else {
      if (!e.is_number()) throw std::invalid_argument("state file: real entries must be plain numbers");
      out(static_cast<Eigen::Index>(k)) = e.get<double>();
    }
  }
  return out;
}

template <typename Scalar>
AnyState build(const std::string &kind, int n, const nlohmann::json &data) {
  const std::size_t dim = std::size_t{1} << n;
  try {
    if (kind == "state_vector") return StateVector<Scalar>(parse_entries<Scalar>(data, dim));
    const Vec<Scalar> flat = parse_entries<Scalar>(data, dim * dim);
    Mat<Scalar> m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = flat(static_cast<Eigen::Index>(r * dim + c));
    return DensityMatrix<Scalar>(std::move(m));
  } catch (const std::invalid_argument &e) {
    const std::string what = e.what();
    if (what.rfind("state file:", 0) == 0) throw;
    throw std::invalid_argument("state file: " + what);
  }
}

}  // namespace

std::string format_state(const AnyState &state) {
  return std::visit(
      [](const auto &s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, RealState> || std::is_same_v<T, ComplexState>)
          return document("state_vector", s.n_systems(), Mat<typename T::Scalar>(s.amplitudes()));
        else
          return document("density_matrix", s.n_systems(), s.matrix());
      },
      state);
}

AnyState parse_state(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::invalid_argument(std::string("state file: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("state file: top level must be an object");
  for (const char *key : {"field", "kind", "n_systems", "data"})
    if (!doc.contains(key)) throw std::invalid_argument(std::string("state file: missing field '") + key + "'");
  if (!doc["field"].is_string() || !doc["kind"].is_string())
    throw std::invalid_argument("state file: 'field' and 'kind' must be strings");
  const auto field_name = doc["field"].get<std::string>();
  const auto kind = doc["kind"].get<std::string>();
  if (field_name != "real" && field_name != "complex")
    throw std::invalid_argument("state file: 'field' must be \"real\" or \"complex\"");
  if (kind != "state_vector" && kind != "density_matrix")
    throw std::invalid_argument("state file: 'kind' must be \"state_vector\" or \"density_matrix\"");
  if (!doc["n_systems"].is_number_integer()) throw std::invalid_argument("state file: 'n_systems' must be an integer");
  const int n = doc["n_systems"].get<int>();
  if (n < 1 || n > 12) throw std::invalid_argument("state file: 'n_systems' must be between 1 and 12");
  return field_name == "real" ? build<double>(kind, n, doc["data"]) : build<Complex>(kind, n, doc["data"]);
}

void write_state_file(const std::filesystem::path &path, const AnyState &state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << format_state(state);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

AnyState read_state_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state(buf.str());
}

Field field_of(const AnyState &state) {
  return std::visit([](const auto &s) { return s.field(); }, state);
}

int n_systems_of(const AnyState &state) {
  return std::visit([](const auto &s) { return s.n_systems(); }, state);
}

ReportRow ReportRow::numeric(std::string check, double target, double computed, double tolerance) {
  const bool pass = std::abs(computed - target) <= tolerance;  // false for NaN
  return {std::move(check), target, computed, tolerance, pass};
}

ReportRow ReportRow::boolean(std::string check, bool ok) { return {std::move(check), 1.0, ok ? 1.0 : 0.0, 0.0, ok}; }

bool Report::all_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow &r) { return r.pass; });
}

std::string Report::to_csv() const {
  std::string out = "check,target,computed,tolerance,pass\n";
  for (const auto &r : rows)
    out += r.check + "," + format_number(r.target) + "," + format_number(r.computed) + "," +
           format_number(r.tolerance) + "," + (r.pass ? "true" : "false") + "\n";
  return out;
}

}  // namespace rebit
