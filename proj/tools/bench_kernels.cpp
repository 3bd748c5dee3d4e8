// Timing comparison of the parallel kernels against their serial reference
// implementations. Each row reports wall time for both paths and verifies the
// results agree before printing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "csmm/gue.hpp"
#include "csmm/pairing.hpp"
#include "csmm/quadrature.hpp"
#include "csmm/seifert.hpp"
#include "csmm/wick.hpp"

using namespace csmm;

namespace {

double time_of(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-34s %9.3fs %9.3fs %6.2fx  %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, agree ? "results agree" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %7s\n", "kernel", "serial", "parallel", "speedup");

  {
    const Partition lam{16};
    NPoly a, b;
    double ts = time_of([&] { a = gauss_moment_reference(lam); });
    double tp = time_of([&] { b = gauss_moment(lam, true); });
    row("wick enumeration p16", ts, tp, a == b);
  }
  {
    const SurfaceCombo combo = monomial_surface({Partition{8, 8}});
    GluedValue a, b;
    double ts = time_of([&] { a = lmo_pair_reference(combo); });
    double tp = time_of([&] { b = lmo_pair(combo); });
    row("lmo pairing p8 p8", ts, tp, a.by_exponent == b.by_exponent && a.matchings == b.matchings);
  }
  {
    // Two fixed grids (96 then 192 nodes, rel_tol 1 accepts the second),
    // so both paths do identical deterministic work.
    const SeifertData d = seifert_data({{2, 1}, {3, 1}, {5, -4}});
    QuadratureOptions os;
    os.parallel = false;
    os.min_nodes = 96;
    os.max_nodes = 192;
    os.rel_tol = 1.0;
    QuadratureOptions op = os;
    op.parallel = true;
    double va = 0, vb = 0;
    double ts = time_of([&] { va = seifert_integral_numeric(d, 3, 0.08, {}, os); });
    double tp = time_of([&] { vb = seifert_integral_numeric(d, 3, 0.08, {}, op); });
    row("quadrature N=3 192 nodes", ts, tp, va == vb);
  }
  {
    McEstimate a, b;
    double ts = time_of([&] { a = gue_sample_moments(6, Partition{4, 2}, 400000, 7, false); });
    double tp = time_of([&] { b = gue_sample_moments(6, Partition{4, 2}, 400000, 7, true); });
    row("gue sampling N=6 4e5", ts, tp, a.value == b.value && a.stderr_ == b.stderr_);
  }
  return 0;
}
