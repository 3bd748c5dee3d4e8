#include "csmm/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace csmm {
namespace {

// Orthonormal Hermite functions psi_j(t) = h_j(t) e^{-t^2/2}, evaluated by the
// three-term recurrence; O(1) magnitudes for every j and t.
long double hermite_function(int q, long double t, long double* prev_out = nullptr) {
  long double prev = 0.0L;
  long double cur = 0.7511255444649424828587030047762276930510L;  // pi^{-1/4}
  cur *= std::exp(-t * t / 2);
  for (int j = 0; j < q; ++j) {
    long double next = t * std::sqrt(2.0L / (j + 1)) * cur - std::sqrt(static_cast<long double>(j) / (j + 1)) * prev;
    prev = cur;
    cur = next;
  }
  if (prev_out) *prev_out = prev;
  return cur;
}

GaussHermiteRule compute_rule(int q) {
  GaussHermiteRule rule;
  const long double edge = std::sqrt(2.0L * q + 1.0L) + 1.0L;
  const long double step = 1.0L / (4.0L * std::sqrt(2.0L * q + 1.0L));
  long double t0 = -edge;
  long double f0 = hermite_function(q, t0);
  for (long double t = -edge + step; t <= edge + step / 2; t += step) {
    long double f1 = hermite_function(q, t);
    if ((f0 < 0) != (f1 < 0)) {
      long double lo = t - step, hi = t;
      for (int it = 0; it < 80; ++it) {
        const long double mid = (lo + hi) / 2;
        const long double fm = hermite_function(q, mid);
        if ((fm < 0) == (f0 < 0)) lo = mid;
        else hi = mid;
      }
      rule.nodes.push_back((lo + hi) / 2);
    }
    f0 = f1;
  }
  if (static_cast<int>(rule.nodes.size()) != q)
    throw std::runtime_error("gauss_hermite_rule: root isolation failed");
  // Christoffel weights w_k = 1 / sum_{j<q} h_j(t_k)^2 for the orthonormal
  // Hermite polynomials h_j; with h_j = psi_j e^{t^2/2} this is
  // e^{-t^2} / sum psi_j^2, all magnitudes safe in long double.
  for (long double t : rule.nodes) {
    long double prev = 0.0L;
    long double cur = 0.7511255444649424828587030047762276930510L;
    cur *= std::exp(-t * t / 2);
    long double sum = cur * cur;
    for (int j = 0; j < q - 1; ++j) {
      long double next = t * std::sqrt(2.0L / (j + 1)) * cur - std::sqrt(static_cast<long double>(j) / (j + 1)) * prev;
      prev = cur;
      cur = next;
      sum += cur * cur;
    }
    rule.weights.push_back(std::exp(-t * t) / sum);
  }
  return rule;
}

long double sinhc(long double z) {
  const long double a = std::fabs(z);
  if (a < 1e-4L) {
    const long double z2 = z * z;
    return 1.0L + z2 / 6.0L + z2 * z2 / 120.0L;
  }
  return std::sinh(z) / z;
}

struct GridSums {
  long double numer = 0;
  long double denom = 0;
};

GridSums evaluate_grid(const SeifertData& d, int n_eigen, double g,
                       const std::vector<double>& t_shift, const GaussHermiteRule& rule,
                       bool parallel) {
  const int q = static_cast<int>(rule.nodes.size());
  const long double sqrt2 = std::sqrt(2.0L);
  std::vector<long double> x(q), logw(q);
  for (int i = 0; i < q; ++i) {
    x[i] = sqrt2 * rule.nodes[i];
    logw[i] = std::log(rule.weights[i]);
  }
  const int n = d.n();
  long long total = 1;
  for (int i = 0; i < n_eigen; ++i) total *= q;

  const long long block = 1 << 13;
  const long long nblocks = (total + block - 1) / block;
  std::vector<GridSums> partial(nblocks);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (long long bi = 0; bi < nblocks; ++bi) {
    GridSums local;
    const long long lo = bi * block;
    const long long hi = std::min(total, lo + block);
    std::vector<int> idx(n_eigen);
    for (long long flat = lo; flat < hi; ++flat) {
      long long rem = flat;
      for (int i = 0; i < n_eigen; ++i) {
        idx[i] = static_cast<int>(rem % q);
        rem /= q;
      }
      // log of the weight product keeps edge-node underflow away from double.
      long double logwp = 0;
      for (int i = 0; i < n_eigen; ++i) logwp += logw[idx[i]];
      long double vand = 1;
      long double kernel = 1;
      for (int i = 0; i < n_eigen; ++i) {
        for (int j = i + 1; j < n_eigen; ++j) {
          const long double dij = x[idx[i]] - x[idx[j]];
          vand *= dij * dij;
          if (g != 0) {
            const long double base = sinhc(0.5L * g * dij);
            long double f = 1;
            for (int rep = 0; rep < std::abs(2 - n); ++rep) f *= base;
            if (n > 2) f = 1.0L / f;
            for (const auto& [p, qq] : d.pairs) f *= sinhc(0.5L * g * dij / p);
            kernel *= f;
          }
        }
      }
      // The shift weights the integrand only; the normalizing measure
      // e^{-sum x^2/2} Delta^2 stays fixed.
      long double shift = 0;
      for (std::size_t i = 0; i < t_shift.size(); ++i) shift -= t_shift[i] * x[idx[i]];
      const long double wv = std::exp(logwp) * vand;
      local.denom += wv;
      local.numer += wv * kernel * std::exp(shift);
    }
    partial[bi] = local;
  }
  GridSums out;
  for (const auto& p : partial) {
    out.numer += p.numer;
    out.denom += p.denom;
  }
  return out;
}

}  // namespace

GaussHermiteRule gauss_hermite_rule(int q) {
  if (q < 1) throw std::invalid_argument("gauss_hermite_rule: need at least one node");
  static std::map<int, GaussHermiteRule> cache;
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  GaussHermiteRule rule = compute_rule(q);
  cache.emplace(q, rule);
  return rule;
}

double seifert_integral_numeric(const SeifertData& d, int n_eigen, double g,
                                const std::vector<double>& t_shift,
                                const QuadratureOptions& opt, double* rel_change_out) {
  if (n_eigen < 1) throw std::invalid_argument("seifert_integral_numeric: need N >= 1");
  if (g < 0) throw std::invalid_argument("seifert_integral_numeric: coupling must be >= 0");
  if (!t_shift.empty() && static_cast<int>(t_shift.size()) != n_eigen)
    throw std::invalid_argument("seifert_integral_numeric: shift length must match N");
  if (d.n() < 2 && g > 1.0)
    throw std::invalid_argument(
        "seifert_integral_numeric: non-convergent regime (fewer than two fibers with large coupling)");
  if (n_eigen == 1 && t_shift.empty()) {
    if (rel_change_out) *rel_change_out = 0;
    return 1.0;
  }

  double prev = 0;
  bool have_prev = false;
  for (int q = opt.min_nodes; q <= opt.max_nodes; q *= 2) {
    long long total = 1;
    for (int i = 0; i < n_eigen; ++i) {
      total *= q;
      if (total > opt.max_evals)
        throw std::runtime_error("seifert_integral_numeric: grid exceeds the evaluation budget");
    }
    const GridSums sums = evaluate_grid(d, n_eigen, g, t_shift, gauss_hermite_rule(q), opt.parallel);
    if (sums.denom == 0)
      throw std::runtime_error("seifert_integral_numeric: degenerate grid");
    const double cur = static_cast<double>(sums.numer / sums.denom);
    if (have_prev && std::fabs(cur - prev) <= opt.rel_tol * std::max(1.0, std::fabs(cur))) {
      if (rel_change_out)
        *rel_change_out = std::fabs(cur - prev) / std::max(1.0, std::fabs(cur));
      return cur;
    }
    prev = cur;
    have_prev = true;
  }
  throw std::runtime_error("seifert_integral_numeric: node cap reached before convergence");
}

}  // namespace csmm
