#include "oracles.hpp"

#include "rebit/entanglement.hpp"
#include "rebit/states.hpp"

#include <doctest.h>

using namespace rebit;

namespace {

// Product of |y_sign> vectors with every sign given explicitly, including the
// last one.
VecC y_chain(const std::vector<int> &signs) {
  VecC out = VecC::Ones(1);
  for (int s : signs) {
    VecC y(2);
    y << 1.0, Complex(0, s);
    out = oracle::kron<MatC>(out, y / std::sqrt(2.0));
  }
  return out;
}

std::vector<int> with_last(const SIndex &s, int last) {
  std::vector<int> signs = s.signs();
  signs.push_back(last);
  return signs;
}

}  // namespace

TEST_CASE("sign strings") {
  const SIndex s = SIndex::parse("+-+");
  CHECK(s.n_systems() == 4);
  CHECK(s.sign(1) == -1);
  CHECK(s.sign(3) == 1);
  CHECK(s.to_string() == "+-+");
  CHECK(SIndex::parse("+−") == SIndex::parse("+-"));
  CHECK(SIndex::from_id(4, s.id()) == s);
  CHECK(SIndex::all(5).size() == 16);
  CHECK_THROWS(SIndex::all(1));
  CHECK_THROWS(SIndex::parse("+x"));
}

TEST_CASE("Bell states and state validation") {
  const VecR phi = bell(Bell::PhiPlus).amplitudes();
  CHECK(phi(0) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(phi(3) == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(parse_bell("psi-") == Bell::PsiMinus);
  CHECK_THROWS(parse_bell("chi"));
  CHECK_THROWS(RealState(VecR::Ones(4)));
  CHECK_THROWS(RealState(VecR::Ones(3) / std::sqrt(3.0)));
  CHECK(RealState::normalized(VecR::Ones(4)).amplitudes().norm() == doctest::Approx(1.0));
  CHECK(basis_state({0, 1, 1}).amplitudes()(3) == 1.0);
}

TEST_CASE("density validation names the failing invariant") {
  MatR not_psd = MatR::Zero(2, 2);
  not_psd(0, 0) = 1.5;
  not_psd(1, 1) = -0.5;
  CHECK_THROWS_AS(RealDensity{not_psd}, std::invalid_argument);
  MatR asym = MatR::Identity(2, 2) / 2.0;
  asym(0, 1) = 0.1;
  CHECK_THROWS_AS(RealDensity{asym}, std::invalid_argument);
  CHECK_THROWS_AS(RealDensity{MatR::Identity(2, 2)}, std::invalid_argument);
  CHECK_THROWS_AS(RealDensity{MatR::Identity(3, 3) / 3.0}, std::invalid_argument);
}

TEST_CASE("Phi+ marginal is maximally mixed") {
  const RealDensity rho(bell(Bell::PhiPlus));
  const std::vector<int> keep{0};
  CHECK((rho.marginal(keep).matrix() - MatR::Identity(2, 2) / 2.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("omega has both written forms") {
  MatR diag = MatR::Zero(4, 4);
  diag(0, 0) = diag(3, 3) = 0.5;
  CHECK((omega().matrix() - diag).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("omega prime is the xi mixture") {
  const MatC mix = 0.5 * (xi_state(1).projector() + xi_state(-1).projector());
  CHECK((mix - omega_prime().to_complex().matrix()).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((omega_prime().matrix() - (MatR::Identity(4, 4) + sigma_yy()) / 4.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("mu and nu against the printed vectors") {
  const SIndex pp = SIndex::parse("++");
  VecR mu(8), nu(8);
  mu << 1, 0, 0, -1, 0, -1, -1, 0;
  nu << 0, 1, 1, 0, 1, 0, 0, -1;
  CHECK((mu_state(pp).amplitudes() - mu / 2.0).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((nu_state(pp).amplitudes() - nu / 2.0).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("mu and nu from an independent product of y eigenvectors") {
  for (int n = 2; n <= 6; ++n)
    for (const auto &s : SIndex::all(n)) {
      const VecC y = y_chain(with_last(s, 1));
      CHECK((mu_state(s).amplitudes() - std::sqrt(2.0) * y.real()).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((nu_state(s).amplitudes() - std::sqrt(2.0) * y.imag()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("flipping every sign leaves mu and negates nu") {
  for (int n = 2; n <= 5; ++n)
    for (const auto &s : SIndex::all(n)) {
      std::vector<int> flipped = with_last(s, 1);
      for (int &x : flipped) x = -x;
      const VecC y = y_chain(flipped);
      CHECK((std::sqrt(2.0) * y.real() - mu_state(s).amplitudes()).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((std::sqrt(2.0) * y.imag() + nu_state(s).amplitudes()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("mu/nu family is an orthonormal basis") {
  for (int n = 2; n <= 6; ++n) {
    const auto labels = SIndex::all(n);
    MatR basis(1 << n, 1 << n);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      basis.col(static_cast<Eigen::Index>(2 * k)) = mu_state(labels[k]).amplitudes();
      basis.col(static_cast<Eigen::Index>(2 * k + 1)) = nu_state(labels[k]).amplitudes();
    }
    CHECK(orthonormality_error(basis) < 1e-12);
  }
}

TEST_CASE("rho_s: two forms agree, rank two, pair marginals") {
  for (int n = 2; n <= 6; ++n)
    for (const auto &s : SIndex::all(n)) {
      const RealDensity rho = rho_s(s);
      CHECK((rho.matrix() - rho_s_expansion(s).matrix()).cwiseAbs().maxCoeff() < 1e-12);
      const VecR values = eig_hermitian(rho.matrix()).values;
      CHECK(values(0) == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(values(1) == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(values.tail(values.size() - 2).cwiseAbs().maxCoeff() < 1e-12);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const MatR brute = oracle::trace_out<MatR>(rho.matrix(), n, {i, j});
          const MatR expected = (MatR::Identity(4, 4) + s.sign(i) * s.sign(j) * sigma_yy()) / 4.0;
          CHECK((brute - expected).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("rho_++ pair marginals equal omega prime") {
  const RealDensity rho = rho_s(SIndex::parse("++"));
  for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
    CHECK((rho.marginal(i, j).matrix() - omega_prime().matrix()).cwiseAbs().maxCoeff() < 1e-15);
  const std::vector<int> keep{0, 1};
  const MatR from_mu = partial_trace_qubits<double>(RealDensity(mu_state(SIndex::parse("++"))).matrix(), 3, keep);
  CHECK((from_mu - omega_prime().matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("real generators stay real") {
  CHECK(RealDensity::field() == Field::Real);
  CHECK(max_imag(mu_state(SIndex::parse("+-+")).to_complex().amplitudes()) == 0.0);
  CHECK(maximally_mixed(3).matrix().trace() == doctest::Approx(1.0));
}
