#include "kfcl/spinlie.hpp"

#include <doctest.h>

#include <cmath>

#include "kfcl/serialize.hpp"
#include "test_util.hpp"

using namespace kfcl;

TEST_SUITE_BEGIN("spinlie");

TEST_CASE("generator counts and ranks") {
  const GeneratorSet s1 = gen_spin7();
  const GeneratorSet s2 = gen_spin8();
  const GeneratorSet s3 = gen_spin9();
  CHECK(s1.size() == 21);
  CHECK(s2.size() == 28);
  CHECK(s3.size() == 36);
  // Ranks equal the dimensions of the orthogonal algebras in 7, 8, 9
  // variables: 21, 28, 36.
  CHECK(rank_tol(s1.flattened()) == 21);
  CHECK(rank_tol(s2.flattened()) == 28);
  CHECK(rank_tol(s3.flattened()) == 36);
}

TEST_CASE("pair generators") {
  const GeneratorSet s1 = gen_spin7();
  const Vector e7 = paper_basis().unit(7).to_vector();
  for (std::size_t k = 0; k < s1.triples.size(); ++k) {
    const InfTriple& t = s1.triples[k];
    CHECK(inf_residual(t) < 1e-10);
    CHECK(t.a.col(0).norm() == 0.0);            // first entry kills the unit
    CHECK((t.b - t.c).norm() == 0.0);           // equal second and third
    CHECK((t.b + t.b.transpose()).norm() == 0.0);
  }
  // The (1,2) element maps 1 to e7 under its second entry.
  for (std::size_t k = 0; k < s1.labels.size(); ++k) {
    if (s1.labels[k] == std::pair<int, int>{1, 2}) {
      CHECK((s1.triples[k].b.col(0) - e7).norm() == 0.0);
    }
  }
  CHECK(spin7_first_entry_pattern_residual() < 1e-12);
}

TEST_CASE("one-parameter generators extend the set") {
  const GeneratorSet s2 = gen_spin8();
  const Octonion e1 = paper_basis().unit(1);
  const InfTriple& first_new = s2.triples[21];
  CHECK((first_new.a - left_op(e1)).norm() == 0.0);
  CHECK((first_new.b - right_op(e1)).norm() == 0.0);
  CHECK((first_new.c - left_op(e1) - right_op(e1)).norm() == 0.0);
  // Same triple as the tangent lift of its first entry.
  const InfLiftResult lift = inf_lift(first_new.a);
  CHECK((lift.triple.b - first_new.b).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((lift.triple.c - first_new.c).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("block generators and rotations") {
  const GeneratorSet s3 = gen_spin9();
  for (const Matrix& m : s3.blocks) {
    CHECK((m + m.transpose()).norm() == 0.0);
  }

  const double h = 1e-6;
  const Matrix dj = (spin9_rotation(h) - spin9_rotation(-h)) / (2 * h);
  CHECK((dj - spin9_J()).cwiseAbs().maxCoeff() < 1e-9);
  const Matrix dji =
      (spin9_partial_rotation(h, 1) - spin9_partial_rotation(-h, 1)) / (2 * h);
  CHECK((dji - spin9_Ji(1)).cwiseAbs().maxCoeff() < 1e-9);

  // The closed forms agree with the generic exponential.
  CHECK((spin9_rotation(0.8) - mat_exp(0.8 * spin9_J())).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((spin9_partial_rotation(0.8, 3) - mat_exp(0.8 * spin9_Ji(3)))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
  CHECK(testutil::orthogonality_defect(spin9_rotation(0.8)) < 1e-12);
  CHECK(testutil::orthogonality_defect(spin9_partial_rotation(0.8, 3)) <
        1e-12);
}

TEST_CASE("bracket basics") {
  const GeneratorSet s2 = gen_spin8();
  RngStream rng(21);
  INFO("seed ", rng.seed());

  const InfTriple& x = s2.triples[3];
  const InfTriple& y = s2.triples[24];
  const InfTriple zero = bracket(x, x);
  CHECK(zero.a.norm() == 0.0);
  const InfTriple xy = bracket(x, y);
  const InfTriple yx = bracket(y, x);
  CHECK((xy.a + yx.a).norm() == 0.0);
  CHECK(inf_residual(xy) < 1e-9);  // brackets stay in the algebra

  // Jacobi identity on random generator triples.
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto pick = [&] {
      return s2.triples[static_cast<std::size_t>(
          rng.uniform(0, static_cast<double>(s2.size())))];
    };
    const InfTriple a = pick(), b = pick(), c = pick();
    const InfTriple j1 = bracket(a, bracket(b, c));
    const InfTriple j2 = bracket(b, bracket(c, a));
    const InfTriple j3 = bracket(c, bracket(a, b));
    worst = std::max(worst, (j1.a + j2.a + j3.a).cwiseAbs().maxCoeff());
    worst = std::max(worst, (j1.b + j2.b + j3.b).cwiseAbs().maxCoeff());
    worst = std::max(worst, (j1.c + j2.c + j3.c).cwiseAbs().maxCoeff());
  }
  CHECK(worst < 1e-10);

  CHECK_THROWS_AS(bracket(Matrix::Zero(8, 8), Matrix::Zero(16, 16)),
                  std::invalid_argument);
}

TEST_CASE("bracket closure of all three sets") {
  CHECK(closure_check(gen_spin7()) < 1e-9);
  CHECK(closure_check(gen_spin8()) < 1e-9);
  CHECK(closure_check(gen_spin9()) < 1e-9);
}

TEST_CASE("derivation subalgebra") {
  const std::vector<InfTriple> g2 = g2_subalgebra();
  REQUIRE(g2.size() == 14);
  std::vector<Vector> flat;
  for (const InfTriple& t : g2) {
    CHECK((t.a - t.b).norm() == 0.0);
    CHECK((t.b - t.c).norm() == 0.0);
    CHECK(derivation_residual(t.b) < 1e-10);
    CHECK(t.b.col(0).norm() < 1e-10);  // derivations kill the unit
    Vector v(64);
    v = Eigen::Map<const Vector>(t.b.data(), 64);
    flat.push_back(v);
  }
  CHECK(rank_tol(flat) == 14);
}

TEST_CASE("embedding respects brackets") {
  const GeneratorSet s2 = gen_spin8();
  double worst = 0;
  for (int a = 0; a < s2.size(); a += 5) {
    for (int b = a + 1; b < s2.size(); b += 5) {
      const Matrix lhs = embed_block_diagonal(
          bracket(s2.triples[static_cast<std::size_t>(a)],
                  s2.triples[static_cast<std::size_t>(b)]));
      const Matrix rhs = bracket(
          embed_block_diagonal(s2.triples[static_cast<std::size_t>(a)]),
          embed_block_diagonal(s2.triples[static_cast<std::size_t>(b)]));
      worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("embedded pair generators meet the off-diagonal part only at zero") {
  const GeneratorSet s1 = gen_spin7();
  const GeneratorSet s3 = gen_spin9();
  std::vector<Vector> mixed;
  for (const InfTriple& t : s1.triples) {
    const Matrix m = embed_block_diagonal(t);
    mixed.push_back(Eigen::Map<const Vector>(m.data(), 256));
  }
  for (int k = 28; k < 36; ++k) {
    mixed.push_back(Eigen::Map<const Vector>(
        s3.blocks[static_cast<std::size_t>(k)].data(), 256));
  }
  CHECK(rank_tol(mixed) == 29);
}

TEST_CASE("curve derivatives generate the pair algebra") {
  const CurveCheck c = curve_generator_crosscheck();
  REQUIRE(c.span_distances.size() == 21);
  CHECK(c.max_span_distance < 1e-6);
  CHECK(c.max_oracle_residual < 1e-6);
}

TEST_CASE("curve derivative of the first pair matches the analytic value") {
  const PaperBasis& pb = paper_basis();
  const Octonion e1 = pb.unit(1);
  const Octonion e2 = pb.unit(2);
  auto triple_at = [&](const Octonion& z) {
    const Matrix lz = left_op(z);
    return TrialityTriple{lz * right_op(conj(z)), lz, lz};
  };
  const double h = 1e-5;
  auto curve = [&](double t) {
    const Octonion z = std::cos(t) * e1 + std::sin(t) * e2;
    return mul(triple_at(z), triple_at(e1));
  };
  const TrialityTriple fwd = curve(h);
  const TrialityTriple bwd = curve(-h);
  const Matrix raw_b = (fwd.B - bwd.B) / (2 * h);
  // Raw derivative of the second entry is L_{e2} L_{e1} = -L_{e1} L_{e2}.
  CHECK((raw_b - left_op(e2) * left_op(e1)).cwiseAbs().maxCoeff() < 1e-6);
  CHECK((raw_b + left_op(e1) * left_op(e2)).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("constant curves have zero derivative") {
  const Octonion e1 = paper_basis().unit(1);
  auto triple_at = [&](const Octonion& z) {
    const Matrix lz = left_op(z);
    return TrialityTriple{lz * right_op(conj(z)), lz, lz};
  };
  // The curve s -> T(e1) T(e1)^{-1} ignores s; its central difference is 0.
  auto curve = [&](double) { return mul(triple_at(e1), inverse(triple_at(e1))); };
  const double h = 1e-5;
  const TrialityTriple fwd = curve(h);
  const TrialityTriple bwd = curve(-h);
  CHECK(((fwd.A - bwd.A) / (2 * h)).norm() == 0.0);
  CHECK(((fwd.B - bwd.B) / (2 * h)).norm() == 0.0);
  CHECK(((fwd.C - bwd.C) / (2 * h)).norm() == 0.0);
}

TEST_CASE("generator set JSON round trip") {
  const GeneratorSet s1 = gen_spin7();
  nlohmann::json j = s1;
  const GeneratorSet back = j.get<GeneratorSet>();
  CHECK(back.name == "S1");
  REQUIRE(back.size() == s1.size());
  CHECK((back.triples[5].b - s1.triples[5].b).norm() == 0.0);
  CHECK(back.labels == s1.labels);

  const GeneratorSet s3 = gen_spin9();
  nlohmann::json j3 = s3;
  const GeneratorSet back3 = j3.get<GeneratorSet>();
  CHECK(back3.is_block_set());
  CHECK((back3.blocks[30] - s3.blocks[30]).norm() == 0.0);
}

TEST_SUITE_END();
