#include "csmm/gue.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

namespace csmm {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Box-Muller over mt19937_64, keeping the paired deviate.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1p-53;
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    has_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using CMat = std::vector<std::complex<double>>;

void matmul(const CMat& a, const CMat& b, CMat& out, int n) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::complex<double> acc = 0;
      for (int k = 0; k < n; ++k) acc += a[i * n + k] * b[k * n + j];
      out[i * n + j] = acc;
    }
  }
}

struct BatchSums {
  double sum = 0;
  double sumsq = 0;
};

BatchSums run_batch(int n, const Partition& lambda, std::uint64_t count, std::uint64_t seed) {
  Gaussian gauss(seed);
  const int maxpart = lambda.parts.empty() ? 0 : lambda.parts.front();
  CMat h(n * n), pw(n * n), tmp(n * n);
  std::vector<double> traces(maxpart + 1, 0.0);
  BatchSums out;
  for (std::uint64_t s = 0; s < count; ++s) {
    for (int i = 0; i < n; ++i) {
      h[i * n + i] = gauss.next();
      for (int j = i + 1; j < n; ++j) {
        const double re = gauss.next() * M_SQRT1_2;
        const double im = gauss.next() * M_SQRT1_2;
        h[i * n + j] = {re, im};
        h[j * n + i] = {re, -im};
      }
    }
    traces[0] = n;
    pw = h;
    for (int k = 1; k <= maxpart; ++k) {
      double tr = 0;
      for (int i = 0; i < n; ++i) tr += pw[i * n + i].real();
      traces[k] = tr;
      if (k < maxpart) {
        matmul(pw, h, tmp, n);
        pw.swap(tmp);
      }
    }
    double v = 1;
    for (int part : lambda.parts) v *= traces[part];
    out.sum += v;
    out.sumsq += v * v;
  }
  return out;
}

}  // namespace

McEstimate gue_sample_moments(int n, const Partition& lambda, std::uint64_t samples,
                              std::uint64_t seed, bool parallel) {
  if (n < 1) throw std::invalid_argument("gue_sample_moments: need n >= 1");
  if (samples < 1) throw std::invalid_argument("gue_sample_moments: need at least one sample");
  const int nbatch = static_cast<int>(std::min<std::uint64_t>(256, samples));
  std::vector<BatchSums> batches(nbatch);
  std::vector<std::uint64_t> counts(nbatch);
  for (int b = 0; b < nbatch; ++b)
    counts[b] = samples / nbatch + (b < static_cast<int>(samples % nbatch) ? 1 : 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (int b = 0; b < nbatch; ++b)
    batches[b] = run_batch(n, lambda, counts[b], splitmix64(seed ^ (0xabcdef12345ULL + b)));

  double sum = 0, sumsq = 0;
  for (const auto& bs : batches) {
    sum += bs.sum;
    sumsq += bs.sumsq;
  }
  McEstimate est;
  est.samples = samples;
  est.value = sum / static_cast<double>(samples);
  if (samples > 1) {
    const double var =
        (sumsq - static_cast<double>(samples) * est.value * est.value) / (static_cast<double>(samples) - 1.0);
    est.stderr_ = std::sqrt(std::max(0.0, var) / static_cast<double>(samples));
  }
  return est;
}

}  // namespace csmm
