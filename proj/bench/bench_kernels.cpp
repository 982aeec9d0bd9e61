// Compares the OpenMP kernels against the serial reference on the shapes
// the trainer actually runs, plus one full twin training step.
#include <benchmark/benchmark.h>

#include "twinnet/matrix.hpp"
#include "twinnet/mnist.hpp"
#include "twinnet/ref.hpp"
#include "twinnet/rng.hpp"
#include "twinnet/trainer.hpp"

namespace {

using namespace twinnet;

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(-1.0, 1.0);
  return m;
}

// Layer-1 forward shape: (B x 784) times (64 x 784)^T.
void BM_matmul_nt_kernel(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const Matrix x = random_matrix(batch, 784, 1);
  const Matrix w = random_matrix(64, 784, 2);
  for (auto _ : state) {
    Matrix z = matmul_nt(x, w);
    benchmark::DoNotOptimize(z.data());
  }
}

void BM_matmul_nt_serial(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const Matrix x = random_matrix(batch, 784, 1);
  const Matrix w = random_matrix(64, 784, 2);
  for (auto _ : state) {
    Matrix z = ref::matmul_nt(x, w);
    benchmark::DoNotOptimize(z.data());
  }
}

// Layer-1 gradient shape: (B x 64)^T times (B x 784).
void BM_matmul_tn_kernel(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const Matrix dz = random_matrix(batch, 64, 3);
  const Matrix x = random_matrix(batch, 784, 4);
  for (auto _ : state) {
    Matrix g = matmul_tn(dz, x);
    benchmark::DoNotOptimize(g.data());
  }
}

void BM_matmul_tn_serial(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  const Matrix dz = random_matrix(batch, 64, 3);
  const Matrix x = random_matrix(batch, 784, 4);
  for (auto _ : state) {
    Matrix g = ref::matmul_tn(dz, x);
    benchmark::DoNotOptimize(g.data());
  }
}

void BM_matmul_square_kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 5);
  const Matrix b = random_matrix(n, n, 6);
  for (auto _ : state) {
    Matrix c = matmul(a, b);
    benchmark::DoNotOptimize(c.data());
  }
}

void BM_matmul_square_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 5);
  const Matrix b = random_matrix(n, n, 6);
  for (auto _ : state) {
    Matrix c = ref::matmul(a, b);
    benchmark::DoNotOptimize(c.data());
  }
}

// One Adam update of the layer-1 weight tensor (the big one).
void BM_adam_w1(benchmark::State& state) {
  Matrix param = random_matrix(64, 784, 9);
  const Matrix grad = random_matrix(64, 784, 10);
  AdamState st = make_adam_state(64, 784);
  const AdamHyper hyper;
  for (auto _ : state) {
    adam_step(param, grad, st, hyper);
    benchmark::DoNotOptimize(param.data());
  }
}

void BM_gather_batch(benchmark::State& state) {
  const Matrix images = random_matrix(60000, 784, 11);
  Rng rng(12);
  std::vector<std::size_t> idx(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (auto& i : idx) i = static_cast<std::size_t>(rng.next_below(60000));
    Matrix x = gather_rows(images, idx);
    benchmark::DoNotOptimize(x.data());
  }
}

void BM_local_step(benchmark::State& state) {
  const auto batch = static_cast<std::size_t>(state.range(0));
  TwinModel a = make_twin(1, 'A');
  TwinModel b = make_twin(2, 'B');
  const Matrix x = random_matrix(batch, 784, 7);
  std::vector<std::uint8_t> labels(batch);
  Rng rng(8);
  for (auto& l : labels) l = static_cast<std::uint8_t>(rng.next_below(10));
  const Matrix targets = one_hot(labels, 10);
  AdamHyper hyper;
  for (auto _ : state) {
    StepReport r = local_step(a, b, x, targets, hyper);
    benchmark::DoNotOptimize(r.cl_a);
  }
}

}  // namespace

BENCHMARK(BM_matmul_nt_kernel)->Arg(4)->Arg(64)->Arg(256);
BENCHMARK(BM_matmul_nt_serial)->Arg(4)->Arg(64)->Arg(256);
BENCHMARK(BM_matmul_tn_kernel)->Arg(4)->Arg(64)->Arg(256);
BENCHMARK(BM_matmul_tn_serial)->Arg(4)->Arg(64)->Arg(256);
BENCHMARK(BM_matmul_square_kernel)->Arg(128)->Arg(512);
BENCHMARK(BM_matmul_square_serial)->Arg(128)->Arg(512);
BENCHMARK(BM_adam_w1);
BENCHMARK(BM_gather_batch)->Arg(4)->Arg(64);
BENCHMARK(BM_local_step)->Arg(4)->Arg(64);

BENCHMARK_MAIN();
