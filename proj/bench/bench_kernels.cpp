// Wall-clock comparison of the serial reference kernels against the OpenMP ones.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "rcomm/liealg.hpp"
#include "rcomm/racah.hpp"

using namespace rcomm;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
  auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count() / reps;
}

void row(const std::string& name, double serial, double parallel) {
  std::printf("%-36s serial %10.2f ms   parallel %10.2f ms   speedup %5.2fx\n", name.c_str(), serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
  std::printf("OpenMP threads available: %d\n", omp_get_max_threads());

  for (int n : {3, 4}) {
    SO2nContext ctx(n);
    Operator c = quadratic_casimir(ctx);
    Operator c2 = c * c;
    Operator s = Operator::zero(c.signature()), p = s;
    double ts = time_ms([&] { s = mul_serial(c2, c); }, 3);
    double tp = time_ms([&] { p = mul_parallel(c2, c); }, 3);
    if (!(s == p)) {
      std::fprintf(stderr, "serial and parallel products differ at n = %d\n", n);
      return 1;
    }
    row("C^2 * C, n = " + std::to_string(n), ts, tp);
  }

  for (int n : {3, 4}) {
    // Expressions memoize their expansions, so each run gets fresh identities.
    auto sweep = [n](Schedule schedule) {
      return [n, schedule] {
        CommutantBasis b{SO2nContext(n)};
        if (!verify_identities(racah_identities(b), schedule).all_passed()) std::fprintf(stderr, "sweep failed\n");
      };
    };
    row("commutant relations, n = " + std::to_string(n), time_ms(sweep(Schedule::serial), 1),
        time_ms(sweep(Schedule::parallel), 1));
  }

  auto o2n = [](Schedule schedule) { return [schedule] { check_o2n_relations(SO2nContext(5), schedule); }; };
  row("o(2n) relations, n = 5", time_ms(o2n(Schedule::serial), 1), time_ms(o2n(Schedule::parallel), 1));
  return 0;
}
