#include <benchmark/benchmark.h>

#include "kfcl/spheres.hpp"
#include "kfcl/triality.hpp"

namespace {

using namespace kfcl;

Matrix random_skew8(std::uint64_t seed) {
  RngStream rng(seed);
  Matrix m = Matrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) {
    for (int j = i + 1; j < 8; ++j) {
      const double v = rng.normal();
      m(i, j) += v;
      m(j, i) -= v;
    }
  }
  return m;
}

void BM_octonion_mul(benchmark::State& state) {
  RngStream rng(1);
  const Octonion x = Octonion::from_vector(rng.sphere_point(8));
  const Octonion y = Octonion::from_vector(rng.sphere_point(8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(x, y));
  }
}
BENCHMARK(BM_octonion_mul);

void BM_left_op(benchmark::State& state) {
  RngStream rng(2);
  const Octonion x = Octonion::from_vector(rng.sphere_point(8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_op(x));
  }
}
BENCHMARK(BM_left_op);

void BM_mat_exp8(benchmark::State& state) {
  const Matrix a = random_skew8(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_exp(a));
  }
}
BENCHMARK(BM_mat_exp8);

void BM_verify_triple(benchmark::State& state) {
  RngStream rng(4);
  const Octonion z = Octonion::from_vector(rng.sphere_point(8));
  const TrialityTriple t{left_op(z), right_op(z), left_op(z) * right_op(z)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_triple(t));
  }
}
BENCHMARK(BM_verify_triple);

void BM_inf_lift(benchmark::State& state) {
  const Matrix a = random_skew8(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(inf_lift(a));
  }
}
BENCHMARK(BM_inf_lift);

void BM_companions(benchmark::State& state) {
  const Matrix a = mat_exp(random_skew8(6));
  for (auto _ : state) {
    benchmark::DoNotOptimize(companions(a));
  }
}
BENCHMARK(BM_companions);

void BM_sample_orbit_u2(benchmark::State& state) {
  const SphereModel model = make_model(SphereKind::U, 1);
  const Matrix x = model.lie_basis[2] - model.lie_basis[3];
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_orbit(model, x, static_cast<int>(state.range(0)), 7));
  }
}
BENCHMARK(BM_sample_orbit_u2)->Arg(64)->Arg(256);

void BM_find_conjugation_g2(benchmark::State& state) {
  const SphereModel model = make_model(SphereKind::G2);
  RngStream rng(8);
  Matrix x = model.lie_combination(rng.gaussian_vector(14));
  x /= x.norm();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        find_conjugation(model, x, Vector::Zero(7), 1e-6, 100000, 9));
  }
}
BENCHMARK(BM_find_conjugation_g2);

}  // namespace

BENCHMARK_MAIN();
