#include "rebit/linalg.hpp"
#include "rebit/random.hpp"

#include <numbers>

namespace rebit {

std::string to_string(Field f) { return f == Field::Real ? "real" : "complex"; }

Field parse_field(const std::string &s) {
  if (s == "real") return Field::Real;
  if (s == "complex") return Field::Complex;
  throw std::invalid_argument("unknown field '" + s + "' (expected real|complex)");
}

MatC pauli_y() {
  MatC y(2, 2);
  y << 0.0, Complex(0, -1), Complex(0, 1), 0.0;
  return y;
}

MatR pauli_x() {
  MatR x(2, 2);
  x << 0, 1, 1, 0;
  return x;
}

MatR pauli_z() {
  MatR z(2, 2);
  z << 1, 0, 0, -1;
  return z;
}

MatR sigma_yy() {
  const MatC yy = tensor(pauli_y(), pauli_y());
  return yy.real();
}

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MatR random_rotation2(Rng &rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  const double t = angle(rng);
  MatR r(2, 2);
  r << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
  return r;
}

}  // namespace rebit
