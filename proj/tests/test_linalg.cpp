#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "uncertainty/errors.hpp"
#include "uncertainty/factorizations.hpp"
#include "uncertainty/linalg.hpp"
#include "uncertainty/random.hpp"

using namespace uncertainty;

TEST_CASE("index sets") {
  const IndexSet s(8, {7, 1, 3});
  CHECK(s.members() == std::vector<std::size_t>{1, 3, 7});
  CHECK(s.zero_based() == std::vector<std::size_t>{0, 2, 6});
  CHECK(s.complement().members() == std::vector<std::size_t>{2, 4, 5, 6, 8});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK_THROWS_AS(IndexSet(4, {5}), DomainError);
  CHECK_THROWS_AS(IndexSet(4, {0}), DomainError);
  CHECK_THROWS_AS(IndexSet(4, {2, 2}), DomainError);

  const IndexSet wrap = IndexSet::circular_interval(8, 6, 4);
  CHECK(wrap.members() == std::vector<std::size_t>{1, 2, 7, 8});
  const auto iv = wrap.as_circular_interval();
  REQUIRE(iv.has_value());
  CHECK(iv->length == 4);
  CHECK(IndexSet::circular_interval(8, 6, 4) == IndexSet(8, {7, 8, 1, 2}));
  CHECK_FALSE(IndexSet(8, {1, 3}).as_circular_interval().has_value());
  CHECK(IndexSet::empty(5).is_subset_of(s.complement().complement()) == false);
  CHECK(IndexSet(8, {1}).is_subset_of(s));
}

TEST_CASE("dft matrix entries and unitarity") {
  const ComplexMatrix f = dft_matrix(4);
  // F_{kl} = exp(-2 pi j k l / m) / sqrt(m), 1-based k, l.
  CHECK(std::abs(f(0, 0) - std::polar(0.5, -std::numbers::pi / 2)) < 1e-15);
  CHECK(std::abs(f(3, 3) - cd(0.5, 0)) < 1e-15);
  CHECK(max_abs_difference(f * f.adjoint(), ComplexMatrix::identity(4)) < 1e-15);
  CHECK(UnitaryMatrix::dft(12).is_dft());
  Rng rng = make_stream(3, 0);
  CHECK_FALSE(random_unitary(rng, 5).is_dft());
}

TEST_CASE("unitary and dictionary validation") {
  ComplexMatrix bad = ComplexMatrix::identity(3);
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(UnitaryMatrix{bad}, ValidationError);
  CHECK_THROWS_AS(UnitaryMatrix(ComplexMatrix(2, 3)), ValidationError);
  ComplexMatrix nan = ComplexMatrix::identity(2);
  nan(1, 1) = std::nan("");
  CHECK_THROWS_AS(UnitaryMatrix{nan}, ValidationError);

  ComplexMatrix cols(2, 2, {2.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS(Dictionary{cols}, ValidationError);
  const Dictionary d(cols, ColumnPolicy::Renormalize);
  CHECK(d.matrix()(0, 0) == cd(1.0));
  CHECK_FALSE(d.warnings().empty());
  CHECK_THROWS_AS(Dictionary(ComplexMatrix(2, 1)), ValidationError);
}

TEST_CASE("op_norm_2 against a dense SVD oracle") {
  Rng rng = make_stream(5, 0);
  for (int t = 0; t < 200; ++t) {
    std::uniform_int_distribution<std::size_t> dim(1, 9);
    const ComplexMatrix a = complex_gaussian_matrix(rng, dim(rng), dim(rng));
    const double oracle = testutil::svd_norm(a);
    CHECK(std::abs(op_norm_2(a) - oracle) <= 1e-10 * oracle);
    const auto sv = singular_values(a);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(testutil::to_eigen(a));
    REQUIRE(sv.size() == static_cast<std::size_t>(svd.singularValues().size()));
    for (std::size_t i = 0; i < sv.size(); ++i) CHECK(std::abs(sv[i] - svd.singularValues()(i)) <= 1e-10 * oracle);
  }
  CHECK(op_norm_2(ComplexMatrix(3, 2)) == 0.0);
}

TEST_CASE("op_norm_1 and entrywise norms") {
  const ComplexMatrix a(2, 2, {cd(3, 4), 1.0, cd(0, -2), cd(0, 1)});
  CHECK(op_norm_1(a) == 7.0);
  CHECK(matrix_norms(a).entrywise_l1 == 9.0);
  CHECK(matrix_norms(a).frobenius == doctest::Approx(std::sqrt(31.0)));
}

TEST_CASE("coherence") {
  CHECK(coherence(Dictionary(ComplexMatrix::identity(4))) == 0.0);
  const Dictionary id(ComplexMatrix::identity(16));
  const Dictionary f(dft_matrix(16));
  CHECK(mutual_coherence(id, f) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(coherence(Dictionary(hconcat(ComplexMatrix::identity(16), dft_matrix(16)))) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(coherence(Dictionary(ComplexMatrix(1, 1, {1.0}))) == 0.0);
}

TEST_CASE("projector and restriction") {
  const UnitaryMatrix f = UnitaryMatrix::dft(6);
  const IndexSet q(6, {2, 5});
  const ComplexMatrix p = projector(f, q);
  CHECK(max_abs_difference(p * p, p) < 1e-14);
  CHECK(numerical_rank(p) == 2);
  const ComplexVector x{1.0, 2.0, 3.0};
  CHECK(restrict_to(x, IndexSet(3, {2})) == ComplexVector{0.0, 2.0, 0.0});
  const ComplexMatrix sel = selector(IndexSet(3, {1, 3}));
  CHECK(sel(0, 0) == cd(1.0));
  CHECK(sel(1, 1) == cd(0.0));
}

TEST_CASE("vector norms and counting") {
  const ComplexVector x{cd(3, 4), 0.0, cd(0, 1e-12)};
  CHECK(norm1(x) == doctest::Approx(5.0));
  CHECK(norm2(x) == doctest::Approx(5.0));
  CHECK(count_nonzero(x) == 2);
  CHECK(count_nonzero(x, 1e-9) == 1);
}

TEST_CASE("least squares, range complement, null space") {
  Rng rng = make_stream(9, 0);
  const ComplexMatrix a = complex_gaussian_matrix(rng, 5, 3);
  const ComplexVector x = complex_gaussian_vector(rng, 3);
  const ComplexVector b = a * std::span<const cd>(x);
  CHECK(testutil::dist(least_squares(a, b), x) < 1e-10);

  const ComplexMatrix sq = complex_gaussian_matrix(rng, 4, 4);
  const ComplexVector x4 = complex_gaussian_vector(rng, 4);
  CHECK(testutil::dist(solve_square(sq, sq * std::span<const cd>(x4)), x4) < 1e-10);

  const OrthonormalBasis rc = range_complement(a);
  REQUIRE(rc.basis.has_value());
  CHECK(rc.rank == 3);
  CHECK(rc.basis->cols() == 2);
  CHECK(op_norm_2(rc.basis->adjoint() * a) < 1e-12);

  const OrthonormalBasis ns = null_space(a.adjoint());
  REQUIRE(ns.basis.has_value());
  CHECK(op_norm_2(a.adjoint() * *ns.basis) < 1e-12);
  CHECK_FALSE(null_space(a).basis.has_value());
}

TEST_CASE("affine projector") {
  Rng rng = make_stream(10, 0);
  const ComplexMatrix a = complex_gaussian_matrix(rng, 3, 6);
  const ComplexVector b = complex_gaussian_vector(rng, 3);
  const AffineProjector proj(a, b);
  CHECK(proj.rank() == 3);
  CHECK(proj.residual() < 1e-12);
  const ComplexVector v = complex_gaussian_vector(rng, 6);
  const ComplexVector pv = proj.project(v);
  const ComplexVector apv = a * std::span<const cd>(pv);
  CHECK(testutil::dist(apv, b) < 1e-12);
  CHECK(testutil::dist(proj.project(pv), pv) < 1e-12);
  // v - Pv is orthogonal to the null space of A, i.e. in the row space.
  ComplexVector d(6);
  for (std::size_t i = 0; i < 6; ++i) d[i] = v[i] - pv[i];
  const OrthonormalBasis ns = null_space(a);
  CHECK(norm2(ns.basis->adjoint() * std::span<const cd>(d)) < 1e-12);

  // Inconsistent system: rank 1, b not in range.
  const ComplexMatrix r1(2, 2, {1.0, 1.0, 1.0, 1.0});
  const ComplexVector inconsistent{1.0, -1.0};
  CHECK(AffineProjector(r1, inconsistent).residual() > 1.0);
}

TEST_CASE("random streams are deterministic and distinct") {
  Rng a = make_stream(1, 2), b = make_stream(1, 2), c = make_stream(1, 3);
  const auto x = a(), y = b(), z = c();
  CHECK(x == y);
  CHECK(x != z);
  Rng n1 = make_named_stream(4, "alpha"), n2 = make_named_stream(4, "beta");
  CHECK(n1() != n2());
  CHECK(fnv1a("") == 14695981039346656037ull);

  Rng rng = make_stream(2, 0);
  const IndexSet s = random_subset(rng, 10, 4);
  CHECK(s.size() == 4);
  CHECK(random_nonempty_subset(rng, 3).size() >= 1);
  const UnitaryMatrix u = random_unitary(rng, 7);
  CHECK(max_abs_difference(u.matrix() * u.matrix().adjoint(), ComplexMatrix::identity(7)) < 1e-12);
  double energy = 0.0;
  for (int i = 0; i < 20000; ++i) energy += std::norm(complex_gaussian(rng));
  CHECK(energy / 20000.0 == doctest::Approx(1.0).epsilon(0.03));
}
