#include "laplacext/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace laplacext::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kMaxLevel = 12;
constexpr double kUMax = 6.56;  // exp decay underflows well before this

struct Node {
  double xi;   // position in (0,1), distance from the left endpoint exact
  double w;    // weight d xi / du
};

// Abscissa/weight of the tanh-sinh map xi = (1 + tanh((pi/2) sinh u)) / 2.
Node ts_node(double u) {
  double y = 0.5 * kPi * std::sinh(u);
  double w = 0.25 * kPi * std::cosh(u) / (std::cosh(y) * std::cosh(y));
  double xi = 1.0 / (1.0 + std::exp(-2.0 * y));  // stable near both ends
  return {xi, w};
}

struct SegmentResult {
  Complex value;
  double err;
  double l1;
};

// One straight segment from A to B. `base` is A - contour start, so that the
// integrand receives an exact offset from the singular endpoint; when A is
// itself the start node, base == 0 and u = (B - A) xi keeps full precision
// down to xi ~ 1e-300.
SegmentResult integrate_segment(const Integrand& f, Complex A, Complex B, Complex base,
                                double tol, long& evals, double outer_scale) {
  const Complex D = B - A;
  const double eps = std::numeric_limits<double>::epsilon();

  auto eval = [&](double u_ts) -> Complex {
    Node n = ts_node(u_ts);
    Complex u = base + D * n.xi;
    Complex t = A + D * n.xi;
    ++evals;
    Complex v = f(t, u) * D * n.w;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      // endpoint underflow/overflow artifacts: the double-exponential weight
      // kills anything integrable, treat as zero
      return Complex(0.0, 0.0);
    }
    return v;
  };

  double h = 1.0;
  Complex sum = eval(0.0);
  double l1 = std::abs(sum);
  // level 0: integer abscissas
  for (int dir : {-1, 1}) {
    int quiet = 0;
    for (int j = 1; j * h <= kUMax; ++j) {
      Complex v = eval(dir * j * h);
      sum += v;
      l1 += std::abs(v);
      // Break on negligible values only deep in the transform tail: closer
      // to the middle the integrand may be dead here yet alive further out.
      if (std::abs(v) < eps * (l1 + outer_scale) && j * h >= 3.0) {
        if (++quiet >= 3) break;
      } else {
        quiet = 0;
      }
    }
  }
  Complex prev = sum * h;
  double diff_prev = std::numeric_limits<double>::infinity();
  double diff_last = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= kMaxLevel; ++level) {
    h *= 0.5;
    Complex add(0.0, 0.0);
    for (int dir : {-1, 1}) {
      int quiet = 0;
      for (int j = 1; j * h <= kUMax; j += 2) {
        Complex v = eval(dir * j * h);
        add += v;
        l1 += std::abs(v);
        if (std::abs(v) < eps * (l1 + outer_scale) && j * h >= 3.0) {
          if (++quiet >= 3) break;
        } else {
          quiet = 0;
        }
      }
    }
    Complex cur = prev * 0.5 + add * h;
    double diff = std::abs(cur - prev);
    double scale = std::max({std::abs(cur), 1e-3 * outer_scale, 1e-300});
    if (level >= 3 && diff <= tol * scale) {
      double est = std::max(diff, 4.0 * eps * l1 * h);
      return {cur, est, l1 * h};
    }
    diff_prev = diff_last;
    diff_last = diff;
    prev = cur;
  }
  std::ostringstream os;
  os << "tanh-sinh did not reach tol=" << tol << " by level " << kMaxLevel
     << "; last two level deltas " << diff_prev << ", " << diff_last;
  throw NumericsError(os.str());
}

}  // namespace

QuadratureResult integrate_contour(const Integrand& f, const Contour& path, double tol,
                                   const DecayWitness& decay) {
  if (path.nodes.size() < 2) throw SpecError("contour needs at least two nodes");
  if (!(tol > 0.0)) throw SpecError("tolerance must be positive");
  for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    if (path.nodes[i] == path.nodes[i + 1]) {
      throw SpecError("contour has coincident consecutive nodes");
    }
  }

  QuadratureResult total;
  const Complex start = path.nodes.front();
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    SegmentResult s = integrate_segment(f, path.nodes[i], path.nodes[i + 1],
                                        path.nodes[i] - start, tol, total.evaluations,
                                        scale);
    total.value += s.value;
    total.est_error += s.err;
    scale = std::max(scale, std::abs(total.value));
  }

  if (path.tail == Contour::Tail::ray) {
    if (!decay) throw SpecError("ray tail requires a decay witness");
    double mag = std::abs(path.ray_dir);
    if (!(mag > 0.0)) throw SpecError("ray direction must be nonzero");
    Complex dir = path.ray_dir / mag;
    const double need = -std::log(tol * 1e-3);
    const double w0 = decay(0.0);
    double S = 1.0;
    int doublings = 0;
    while (decay(S) - w0 < need) {
      S *= 2.0;
      if (++doublings > 60) {
        throw NumericsError("decay witness never certified ray truncation");
      }
    }
    Complex A = path.nodes.back();
    SegmentResult s = integrate_segment(f, A, A + dir * S, A - start, tol,
                                        total.evaluations, scale);
    total.value += s.value;
    total.est_error += s.err;
  }
  return total;
}

QuadratureResult faxen_by_quadrature(const faxen::FaxenQuery& q, double ray_angle,
                                     double tol) {
  if (!(std::abs(ray_angle) < 0.5 * kPi)) {
    throw SpecError("faxen_by_quadrature: |ray angle| must be below pi/2");
  }
  if (!(q.alpha >= 0.0 && q.alpha < 1.0) || !(q.beta.real() > 0.0)) {
    throw SpecError("faxen_by_quadrature: parameter domain violation");
  }
  const Complex dir = std::exp(Complex(0.0, ray_angle));
  const double alpha = q.alpha;
  const Complex beta = q.beta;
  const Complex x = q.x;

  Integrand f = [=](Complex, Complex u) -> Complex {
    // u is the exact offset from 0, i.e. t itself.
    Complex lt = std::log(u);
    return std::exp(-u + x * std::exp(alpha * lt) + (beta - 1.0) * lt);
  };
  Contour path;
  path.nodes = {Complex(0.0, 0.0), dir};
  path.start_singularity = beta - 1.0;
  path.tail = Contour::Tail::ray;
  path.ray_dir = dir;
  DecayWitness decay = [=](double s) {
    Complex t = dir * (1.0 + s);
    return (t - x * std::pow(t, alpha)).real();
  };
  return integrate_contour(f, path, tol, decay);
}

double tail_bound_check(double alpha, Complex beta, Complex x, Complex zeta, double tol) {
  if (std::abs(zeta) < 10.0) throw SpecError("tail_bound_check: |zeta| must be >= 10");
  if (std::abs(std::arg(zeta)) > 0.5 * kPi + 1e-12) {
    throw SpecError("tail_bound_check: |arg zeta| must be <= pi/2");
  }
  const double mag = std::abs(zeta);
  Integrand f = [=](Complex t, Complex) -> Complex {
    Complex lt = std::log(t);
    return std::exp(-t + x * std::exp(alpha * lt) + (beta - 1.0) * lt);
  };
  Contour path;
  path.nodes = {zeta, zeta + mag};
  path.tail = Contour::Tail::ray;
  path.ray_dir = Complex(1.0, 0.0);
  DecayWitness decay = [=](double s) {
    Complex t = zeta + mag + s;
    return (t - x * std::pow(t, alpha)).real();
  };
  QuadratureResult r = integrate_contour(f, path, tol, decay);
  Complex first = std::exp(-zeta + x * std::pow(zeta, alpha) +
                           (beta - 1.0) * std::log(zeta));
  return std::abs(r.value) / std::abs(first);
}

}  // namespace laplacext::quad
