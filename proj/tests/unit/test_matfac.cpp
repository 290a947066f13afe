#include "test_util.hpp"

#include "qfrob/json.hpp"
#include "qfrob/matfac.hpp"
#include "qfrob/quadric_ring.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using namespace qfrob;

TEST_CASE("phi and psi factor the quadric for m = 0..6") {
  for (std::uint32_t p : {3u, 5u}) {
    const PrimeField F(p);
    for (int m = 0; m <= 6; ++m) {
      const PhiPsi pp = build_phi_psi(F, m);
      CHECK(pp.phi.size() == (std::size_t{1} << m));
      CHECK(verify_factorization(pp.phi));
      CHECK(verify_factorization(pp.psi));
      // Entrywise oracle: every entry is +-x_i or zero, one variable per slot.
      for (std::size_t i = 0; i < pp.phi.size(); ++i)
        for (std::size_t j = 0; j < pp.phi.size(); ++j) CHECK(pp.phi.a().at(i, j).term_count() <= 1);
    }
  }
}

TEST_CASE("m = 0 and m = 1 matrices") {
  const PrimeField F(3);
  const PhiPsi p0 = build_phi_psi(F, 0);
  CHECK(matrix_strings(p0.phi.a()) == nlohmann::ordered_json::parse(R"([["x1"]])"));
  CHECK(matrix_strings(p0.phi.b()) == nlohmann::ordered_json::parse(R"([["x2"]])"));
  const PhiPsi p1 = build_phi_psi(F, 1);
  CHECK(matrix_strings(p1.phi.a()) == nlohmann::ordered_json::parse(R"([["x1","x3"],["x4","-x2"]])"));
  CHECK(matrix_strings(p1.psi.a()) == nlohmann::ordered_json::parse(R"([["x2","x3"],["x4","-x1"]])"));
}

TEST_CASE("constructor validates shape and grading") {
  const PrimeField F(3);
  const QuadricRing R(F, 1);
  const PhiPsi pp = build_phi_psi(F, 1);
  CHECK(error_kind([&] { MatrixFactorization(1, R.quadric(), pp.phi.a(), pp.phi.b(), {1, 1}, {3, 2}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(error_kind([&] { MatrixFactorization(1, R.quadric(), pp.phi.a(), pp.phi.b(), {1}, {2}); }) ==
        ErrorKind::InvalidArgument);
  CHECK(error_kind([&] {
          MatrixFactorization(1, R.quadric() + R.var(1), pp.phi.a(), pp.phi.b(), {1, 1}, {2, 2});
        }) == ErrorKind::InvalidArgument);
  // A wrong product is caught by verification, not by the constructor.
  const MatrixFactorization bad(1, R.quadric(), pp.phi.a(), pp.phi.a(), {1, 1}, {2, 2});
  CHECK_FALSE(verify_factorization(bad));
}

TEST_CASE("cosyzygy, dual and twist") {
  const PrimeField F(5);
  for (int m = 1; m <= 3; ++m) {
    const MatrixFactorization x = build_phi_psi(F, m).phi;
    const MatrixFactorization c = cosyzygy(x);
    CHECK(verify_factorization(c));
    CHECK(c.a() == x.b());
    CHECK(cosyzygy(c) == twist(x, 2));
    CHECK(dual(dual(x)) == x);
    CHECK(verify_factorization(dual(x)));
    CHECK(twist(twist(x, 3), -3) == x);
    const MatrixFactorization s = direct_sum(x, build_phi_psi(F, m).psi);
    CHECK(s.size() == 2 * x.size());
    CHECK(verify_factorization(s));
  }
}

TEST_CASE("involution parity and reflection") {
  for (std::uint32_t p : {3u, 5u}) {
    const PrimeField F(p);
    for (int m = 1; m <= 4; ++m) {
      const PhiPsi pp = build_phi_psi(F, m);
      const MatrixFactorization swapped = apply_involution(pp.phi, Involution(m));
      CHECK(verify_factorization(swapped));
      // All m+1 pairs swapped: determinant (-1)^(m+1); the spinor modules trade places only for even m.
      CHECK(find_base_change_witness(swapped, pp.psi).has_value() == (m % 2 == 0));
      CHECK(find_base_change_witness(swapped, pp.phi).has_value() == (m % 2 == 1));
      const MatrixFactorization reflected = apply_involution(pp.phi, Involution::reflection(m));
      const auto w = find_base_change_witness(reflected, pp.psi);
      REQUIRE(w.has_value());
      CHECK(w->p.invertible());
      CHECK(w->q.invertible());
      // The witness really intertwines: P * X.A == Y.A * Q entrywise.
      for (std::size_t i = 0; i < pp.psi.size(); ++i)
        for (std::size_t j = 0; j < pp.psi.size(); ++j) {
          MultiPoly lhs(F, 2 * m + 2), rhs(F, 2 * m + 2);
          for (std::size_t k = 0; k < pp.psi.size(); ++k) {
            lhs += reflected.a().at(k, j).scaled(w->p.at(i, k));
            rhs += pp.psi.a().at(i, k).scaled(w->q.at(k, j));
          }
          CHECK(lhs == rhs);
        }
      CHECK_FALSE(find_base_change_witness(pp.phi, pp.psi).has_value());
    }
  }
}

TEST_CASE("witness search bound") {
  const PrimeField F(3);
  const PhiPsi pp = build_phi_psi(F, 2);
  const MatrixFactorization swapped = apply_involution(pp.phi, Involution(2));
  CHECK(error_kind([&] { find_base_change_witness(swapped, pp.psi, 0); }) == ErrorKind::SearchExhausted);
  CHECK(find_base_change_witness(pp.phi, pp.phi).has_value());
}

TEST_CASE("factorization JSON") {
  const auto j = to_json(build_phi_psi(PrimeField(3), 1).phi);
  CHECK(j["size"] == 2);
  CHECK(j["p"] == 3);
  CHECK(j["row_degrees"] == nlohmann::ordered_json::parse("[1,1]"));
  CHECK(j["col_degrees"] == nlohmann::ordered_json::parse("[2,2]"));
  CHECK(j["A"][0][0][0]["exps"] == nlohmann::ordered_json::parse("[1,0,0,0]"));
  CHECK(j["A"][1][1][0]["coeff"] == 2);
}
