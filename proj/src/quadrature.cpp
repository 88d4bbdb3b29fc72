#include "holopow/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

#include "holopow/errors.hpp"

namespace holopow {

namespace {

// QUADPACK dqk15 nodes and weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
                            0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
                            0.2077849550078985, 0.0};
constexpr double kWgk[8] = {0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
                            0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
                            0.2044329400752989, 0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                           0.4179591836734694};

template <class V>
double magnitude(const V& v) {
  return std::abs(v);
}

template <class V, class F>
struct Kernel {
  struct Segment {
    double a, b;
    V value;
    double error;
    bool operator<(const Segment& o) const { return error < o.error; }
  };

  const F& f;
  std::size_t evaluations = 0;

  Segment eval(double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    V fc = f(c);
    evaluations += 15;
    V kron = kWgk[7] * fc;
    V gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
      V lo = f(c - h * kXgk[j]);
      V hi = f(c + h * kXgk[j]);
      kron += kWgk[j] * (lo + hi);
      if (j % 2 == 1) gauss += kWg[j / 2] * (lo + hi);
    }
    kron = kron * h;
    gauss = gauss * h;
    double err = magnitude(V(kron - gauss));  // conservative estimate
    return {a, b, kron, err};
  }

  std::pair<V, double> run(double a, double b, double abs_tol, std::size_t max_segments) {
    std::priority_queue<Segment> heap;
    heap.push(eval(a, b));
    V total = heap.top().value;
    double total_err = heap.top().error;
    while (total_err > abs_tol && heap.size() < max_segments) {
      Segment worst = heap.top();
      heap.pop();
      if (worst.b - worst.a < 1e-15 * (std::abs(worst.a) + std::abs(worst.b) + 1)) {
        heap.push(worst);  // cannot split further
        break;
      }
      double mid = 0.5 * (worst.a + worst.b);
      Segment left = eval(worst.a, mid);
      Segment right = eval(mid, worst.b);
      total = total - worst.value + left.value + right.value;
      total_err = total_err - worst.error + left.error + right.error;
      heap.push(left);
      heap.push(right);
    }
    if (total_err > abs_tol)
      throw ToleranceError("quadrature tolerance not met", total_err);
    return {total, total_err};
  }
};

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, std::size_t max_segments) {
  Kernel<double, std::function<double(double)>> k{f};
  auto [v, e] = k.run(a, b, abs_tol, max_segments);
  return {v, e, k.evaluations};
}

ComplexQuadratureResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                          double a, double b, double abs_tol,
                                          std::size_t max_segments) {
  Kernel<std::complex<double>, std::function<std::complex<double>(double)>> k{f};
  auto [v, e] = k.run(a, b, abs_tol, max_segments);
  return {v, e, k.evaluations};
}

}  // namespace holopow
