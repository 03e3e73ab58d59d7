#include "oracles.hpp"

#include "rebit/decomposition.hpp"
#include "rebit/entanglement.hpp"

#include <doctest.h>

using namespace rebit;

namespace {

RealState canonical(double a, double b) {
  VecR v = VecR::Zero(4);
  v(0) = a;
  v(3) = b;
  return RealState(v);
}

ComplexState ghz3() {
  VecC v = VecC::Zero(8);
  v(0) = v(7) = 1 / std::sqrt(2.0);
  return ComplexState(v);
}

}  // namespace

TEST_CASE("Schmidt coefficients") {
  const auto phi = schmidt(bell(Bell::PhiPlus));
  CHECK(phi.alpha == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(phi.beta == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-14));
  const auto product = schmidt(basis_state({0, 0}));
  CHECK(product.alpha == doctest::Approx(1.0));
  CHECK(product.beta == doctest::Approx(0.0));
  const auto c = schmidt(canonical(0.8, 0.6));
  CHECK(c.alpha == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(c.beta == doctest::Approx(0.6).epsilon(1e-14));
  CHECK_THROWS(schmidt(mu_state(SIndex::parse("++"))));
}

TEST_CASE("pure concurrence and entropy") {
  CHECK(concurrence_pure(bell(Bell::PhiMinus)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(concurrence_pure(basis_state({0, 1})) == doctest::Approx(0.0));
  CHECK(concurrence_pure(canonical(0.8, 0.6)) == doctest::Approx(0.96).epsilon(1e-14));
  CHECK(entropy_of_entanglement(bell(Bell::PhiPlus)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(entropy_of_entanglement(basis_state({0, 0})) == 0.0);
  const double e = -(0.64 * std::log2(0.64) + 0.36 * std::log2(0.36));
  CHECK(entropy_of_entanglement(canonical(0.8, 0.6)) == doctest::Approx(e).epsilon(1e-13));
}

TEST_CASE("pure concurrence matches 2|det| on random states") {
  Rng rng = make_rng(21);
  for (int t = 0; t < 200; ++t) {
    const ComplexState psi(random_unit_vector<Complex>(4, rng));
    CHECK(concurrence_pure(psi) == doctest::Approx(oracle::pure_concurrence(psi.amplitudes())).epsilon(1e-12));
  }
}

TEST_CASE("mixed-state concurrence on the named states") {
  CHECK(concurrence_complex(omega()) < 1e-10);
  CHECK(concurrence_complex(omega_prime()) < 1e-10);
  CHECK(concurrence_complex(RealDensity(bell(Bell::PhiPlus))) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(concurrence_real(omega_prime()) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_real(maximally_mixed(2)) < 1e-15);
  CHECK(concurrence_real(RealDensity(bell(Bell::PhiMinus))) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(concurrence_real(omega()) < 1e-15);
}

TEST_CASE("real concurrence rejects complex data and wrong dimensions") {
  CHECK_THROWS_AS(concurrence_real(omega_prime().to_complex()), std::invalid_argument);
  CHECK_THROWS(concurrence_real(maximally_mixed(3)));
  CHECK_THROWS(concurrence_complex(maximally_mixed(3)));
}

TEST_CASE("Wootters formula against the non-Hermitian eigenvalue oracle") {
  Rng rng = make_rng(22);
  for (int t = 0; t < 200; ++t) {
    const auto rho = random_density<Complex>(2, rng);
    CHECK(concurrence_complex(rho) == doctest::Approx(oracle::wootters(rho.matrix())).epsilon(1e-9));
  }
}

TEST_CASE("mixed concurrence equals pure concurrence on projectors") {
  Rng rng = make_rng(23);
  for (int t = 0; t < 200; ++t) {
    const ComplexState psi(random_unit_vector<Complex>(4, rng));
    CHECK(std::abs(concurrence_complex(ComplexDensity(psi)) - concurrence_pure(psi)) < 1e-10);
  }
}

TEST_CASE("real concurrence bounds and ordering") {
  Rng rng = make_rng(24);
  for (int t = 0; t < 200; ++t) {
    const auto rho = random_density<double>(2, rng);
    const double cr = concurrence_real(rho);
    CHECK(cr == doctest::Approx(std::abs((sigma_yy() * rho.matrix()).trace())).epsilon(1e-15));
    CHECK(cr <= 1 + 1e-12);
    CHECK(concurrence_complex(rho) <= cr + 1e-9);
  }
}

TEST_CASE("real concurrence is invariant under local rotations") {
  Rng rng = make_rng(25);
  for (int t = 0; t < 100; ++t) {
    const auto rho = random_density<double>(2, rng);
    const MatR r = tensor(random_rotation2(rng), random_rotation2(rng));
    const RealDensity rotated(r * rho.matrix() * r.transpose());
    CHECK(std::abs(concurrence_real(rotated) - concurrence_real(rho)) < 1e-12);
  }
}

TEST_CASE("pairwise maps") {
  for (int n = 2; n <= 6; ++n)
    for (const auto &s : SIndex::all(n)) {
      const auto direct = pairwise_concurrences(mu_state(s), Field::Real);
      const auto via = pairwise_real_via_marginals(RealDensity(mu_state(s)));
      CHECK((direct.values - via.values).cwiseAbs().maxCoeff() < 1e-12);
      const auto mixed = pairwise_concurrences(rho_s(s), Field::Real);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          CHECK(direct.at(i, j) == direct.at(j, i));
          CHECK(std::abs(mixed.at(i, j) - 1.0) < 1e-12);
        }
    }
  const auto ghz = pairwise_concurrences(ghz3(), Field::Complex);
  CHECK(ghz.values.cwiseAbs().maxCoeff() < 1e-10);
  CHECK_THROWS(pairwise_concurrences(ghz3(), Field::Real));
  CHECK_THROWS(pairwise_concurrences(basis_state({0}), Field::Complex));
}

TEST_CASE("sigma_y sigma_y expectations of mu_s are the sign products") {
  for (const auto &s : SIndex::all(4))
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(std::abs(std::abs(yy_expectation(mu_state(s), i, j)) - 1.0) < 1e-12);
}

TEST_CASE("monogamy in the complex theory") {
  const auto ghz = monogamy_check(ghz3(), 0);
  CHECK(ghz.lhs < 1e-10);
  CHECK(ghz.satisfied);
  VecC v = VecC::Zero(8);
  v(0) = v(6) = 1 / std::sqrt(2.0);  // |Phi+> (x) |0>
  const auto pair = monogamy_check(ComplexState(v), 0);
  CHECK(pair.lhs == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pair.satisfied);
  CHECK_THROWS_AS(monogamy_check(mu_state(SIndex::parse("++")), 0), std::invalid_argument);

  Rng rng = make_rng(26);
  for (int t = 0; t < 500; ++t) {
    const auto psi = haar_random_state(3, rng);
    for (int hub = 0; hub < 3; ++hub) CHECK(monogamy_check(psi, hub).satisfied);
  }
}

TEST_CASE("the real exhibit exceeds the complex bound") {
  for (int n = 3; n <= 6; ++n)
    for (const auto &s : SIndex::all(n)) {
      const auto map = pairwise_concurrences(nu_state(s), Field::Real);
      for (int hub = 0; hub < n; ++hub) CHECK(std::abs(map.squared_sum(hub) - (n - 1)) < 1e-12);
    }
}
