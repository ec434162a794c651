#include "weberdex/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "weberdex/errors.hpp"

namespace weberdex {

double gauss_panels(const RealFn& f, double a, double b, int panels) {
  if (panels < 1) panels = 1;
  double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    sum += boost::math::quadrature::gauss<double, 20>::integrate(f, a + p * h, a + (p + 1) * h);
  }
  return sum;
}

double integrate_finite(const RealFn& f, double a, double b, double tol) {
  static thread_local boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0.0;
  return ts.integrate(f, a, b, tol, &err);
}

double integrate_half_line(const RealFn& f, double tol) {
  static thread_local boost::math::quadrature::exp_sinh<double> es;
  double err = 0.0;
  double head = integrate_finite(f, 0.0, 1.0, tol);
  auto shifted = [&](double t) { return f(1.0 + t); };
  double tail = es.integrate(shifted, tol, &err);
  return head + tail;
}

double wynn_epsilon(const std::vector<double>& s) {
  const std::size_t n = s.size();
  if (n == 0) return 0.0;
  if (n < 3) return s.back();
  std::vector<double> em1(n, 0.0);
  std::vector<double> e0 = s;
  double best = s.back();
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<double> e1(n - r);
    for (std::size_t k = 0; k + 1 < e0.size(); ++k) {
      double d = e0[k + 1] - e0[k];
      if (d == 0.0) return best;
      e1[k] = em1[k + 1] + 1.0 / d;
    }
    if (r % 2 == 0) best = e1.back();
    em1 = std::move(e0);
    e0 = std::move(e1);
  }
  return best;
}

double oscillatory_tail(const RealFn& f, double a, double half_period, double tol, int max_panels) {
  std::vector<double> partial;
  double sum = 0.0;
  double last = 0.0;
  int stable = 0;
  for (int k = 0; k < max_panels; ++k) {
    double lo = a + k * half_period;
    sum += boost::math::quadrature::gauss<double, 20>::integrate(f, lo, lo + half_period);
    partial.push_back(sum);
    if (partial.size() >= 8) {
      // extrapolate from a sliding window; long tables amplify rounding
      std::size_t w = std::min<std::size_t>(partial.size(), 24);
      std::vector<double> window(partial.end() - w, partial.end());
      double est = wynn_epsilon(window);
      if (std::abs(est - last) <= tol) {
        if (++stable >= 3) return est;
      } else {
        stable = 0;
      }
      last = est;
    }
  }
  throw ConvergenceError("oscillatory_tail: extrapolation did not settle");
}

unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WEBERDEX_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  return hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        next = n;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace weberdex
