#include "oracles.hpp"

#include "rebit/linalg.hpp"
#include "rebit/random.hpp"

#include <doctest.h>

using namespace rebit;

TEST_CASE("tensor matches index arithmetic and is associative") {
  Rng rng = make_rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const MatC a = gaussian_matrix<Complex>(2, 3, rng);
    const MatC b = gaussian_matrix<Complex>(3, 2, rng);
    const MatC c = gaussian_matrix<Complex>(2, 2, rng);
    CHECK((tensor(a, b) - oracle::kron(a, b)).cwiseAbs().maxCoeff() == 0.0);
    CHECK((tensor(tensor(a, b), c) - tensor(a, tensor(b, c))).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("embed places operators with system 0 most significant") {
  const MatR z = pauli_z();
  const std::vector<MatR> ops{z};
  for (int site = 0; site < 3; ++site) {
    const std::vector<int> sites{site};
    const MatR e = embed<double>(ops, sites, 3);
    for (int k = 0; k < 8; ++k) CHECK(e(k, k) == (oracle::bit(k, site, 3) ? -1.0 : 1.0));
  }
  const std::vector<int> bad{3};
  CHECK_THROWS_AS(embed<double>(ops, bad, 3), std::out_of_range);
}

TEST_CASE("partial trace agrees with the brute-force oracle") {
  Rng rng = make_rng(12);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const MatC g = gaussian_matrix<Complex>(1 << n, 1 << n, rng);
      const MatC m = g * g.adjoint();
      for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> keep;
        for (int q = 0; q < n; ++q)
          if (mask >> q & 1) keep.push_back(q);
        if (keep.empty()) continue;
        const MatC got = partial_trace_qubits<Complex>(m, n, keep);
        CHECK((got - oracle::trace_out(m, n, keep)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(got.trace() - m.trace()) < 1e-12);
      }
    }
}

TEST_CASE("partial trace of a product returns the kept factor") {
  Rng rng = make_rng(13);
  const MatC a = gaussian_matrix<Complex>(2, 2, rng), b = gaussian_matrix<Complex>(4, 4, rng);
  MatC rho = a * a.adjoint(), sigma = b * b.adjoint();
  rho /= rho.trace();
  sigma /= sigma.trace();
  const std::vector<int> dims{2, 4}, first{0}, second{1};
  CHECK((partial_trace<Complex>(tensor(rho, sigma), dims, first) - rho).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((partial_trace<Complex>(tensor(rho, sigma), dims, second) - sigma).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial trace rejects bad arguments") {
  const MatR m = MatR::Identity(4, 4);
  const std::vector<int> dims{2, 2}, wrong{2, 3}, out_of_range{2}, keep{0};
  CHECK_THROWS_AS(partial_trace<double>(m, wrong, keep), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace<double>(m, dims, out_of_range), std::out_of_range);
}

TEST_CASE("eig_hermitian reconstructs and orders eigenvalues") {
  Rng rng = make_rng(14);
  for (int dim : {1, 2, 5, 16, 64}) {
    const MatC g = gaussian_matrix<Complex>(dim, dim, rng);
    const MatC h = (g + g.adjoint()) / 2.0;
    const auto e = eig_hermitian(h);
    const MatC rebuilt = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
    CHECK((rebuilt - h).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(orthonormality_error(e.vectors) < 1e-10);
    for (int k = 1; k < dim; ++k) CHECK(e.values(k - 1) >= e.values(k));
  }
}

TEST_CASE("eig_hermitian on a degenerate spectrum: projectors, not vectors") {
  Rng rng = make_rng(15);
  const MatR q = random_isometry<double>(4, 4, rng);
  VecR spectrum(4);
  spectrum << 3, 3, 1, 1;
  const MatR h = q * spectrum.asDiagonal() * q.transpose();
  const auto e = eig_hermitian(h);
  const MatR top = e.vectors.leftCols(2) * e.vectors.leftCols(2).transpose();
  const MatR expected = q.leftCols(2) * q.leftCols(2).transpose();
  CHECK((top - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
  MatR m(2, 2);
  m << 1, 2, 0, 1;
  CHECK_THROWS_AS(eig_hermitian(m), std::invalid_argument);
  CHECK_THROWS_AS(eig_hermitian(MatR(2, 3)), std::invalid_argument);
}

TEST_CASE("sigma_y (x) sigma_y is real") {
  const MatR yy = sigma_yy();
  MatR expected = MatR::Zero(4, 4);
  expected(0, 3) = expected(3, 0) = -1;
  expected(1, 2) = expected(2, 1) = 1;
  CHECK((yy - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK(max_imag(oracle::yy()) == 0.0);
}

TEST_CASE("singular values of a rank-one product") {
  const VecR phi = (VecR(4) << 1, 0, 0, 1).finished() / std::sqrt(2.0);
  const MatR p = phi * phi.transpose();
  const VecR sv = singular_values<double>(p * p);
  CHECK(sv(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sv.tail(3).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("random isometries have orthonormal columns") {
  Rng rng = make_rng(16);
  CHECK(orthonormality_error(random_isometry<double>(6, 3, rng)) < 1e-12);
  CHECK(orthonormality_error(random_isometry<Complex>(6, 6, rng)) < 1e-12);
  CHECK_THROWS_AS(random_isometry<double>(2, 3, rng), std::invalid_argument);
  const MatR r = random_rotation2(rng);
  CHECK((r.transpose() * r - MatR::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("derived seeds are deterministic and distinct per stream") {
  CHECK(derive_seed(7, 0) == derive_seed(7, 0));
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
  CHECK(derive_seed(7, 0) != derive_seed(8, 0));
  Rng a = make_rng(3, 4), b = make_rng(3, 4);
  CHECK(a() == b());
}

TEST_CASE("field names") {
  CHECK(parse_field("real") == Field::Real);
  CHECK(parse_field("complex") == Field::Complex);
  CHECK(to_string(Field::Complex) == "complex");
  CHECK_THROWS(parse_field("quaternion"));
}
