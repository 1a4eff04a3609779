#include "siegel/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "siegel/grid.hpp"
#include "siegel/special.hpp"

namespace siegel {

namespace {

constexpr long long kChunk = 4096;
// Double-exponential nodes stop where the complement of the unit interval
// reaches exp(-2 u_max); beyond that Jacobian powers overflow. Functions handed
// a BallPoint only see |xi| in double precision, so their radial rule stops
// where 1 - |xi|^2 is still resolved.
constexpr double kUMax = 30.0;
constexpr double kUMaxBall = 17.0;
constexpr double kTruncFraction = 0.75;

struct Acc {
  cd sum{0.0, 0.0};
  double abs_sum = 0.0;
  double sq_sum = 0.0;
  cd coarse{0.0, 0.0};
  cd trunc{0.0, 0.0};
  long long count = 0;

  Acc& operator+=(const Acc& o) {
    sum += o.sum;
    abs_sum += o.abs_sum;
    sq_sum += o.sq_sum;
    coarse += o.coarse;
    trunc += o.trunc;
    count += o.count;
    return *this;
  }
};

Acc pairwise(const std::vector<Acc>& parts, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return parts[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  Acc a = pairwise(parts, lo, mid);
  a += pairwise(parts, mid, hi);
  return a;
}

// Evaluates fn(c) for every chunk c on a worker pool and sums the partials in
// chunk order, so the result does not depend on scheduling.
template <class Fn>
Acc run_chunks(long long nchunks, int workers, Fn fn) {
  if (nchunks <= 0) return {};
  std::vector<Acc> parts(static_cast<std::size_t>(nchunks));
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const long long c = next.fetch_add(1);
      if (c >= nchunks) return;
      try {
        parts[static_cast<std::size_t>(c)] = fn(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(nchunks);
        return;
      }
    }
  };
  int w = workers > 0 ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  w = static_cast<int>(std::min<long long>(w, nchunks));
  std::vector<std::thread> pool;
  for (int k = 1; k < w; ++k) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return pairwise(parts, 0, parts.size());
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::mt19937_64 chunk_rng(std::uint64_t seed, long long chunk) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(chunk) + 1)));
}

// Double-exponential (tanh-sinh) nodes on (0,1): x and 1-x are both kept to
// full relative precision.
struct DENode {
  double x;
  double cx;
  double w;
  double u;
  bool even;
};

std::vector<DENode> de_nodes(int order, double u_max = kUMax) {
  if (order < 1) throw DomainError("quadrature: tensor order must be positive");
  const double h = 1.0 / order;
  const double tau_max = std::asinh(2.0 * u_max / kPi);
  const int K = static_cast<int>(std::ceil(tau_max / h));
  std::vector<DENode> out;
  for (int k = -K; k <= K; ++k) {
    const double tau = k * h;
    const double u = 0.5 * kPi * std::sinh(tau);
    const double ch = std::cosh(u);
    out.push_back({1.0 / (1.0 + std::exp(-2.0 * u)), 1.0 / (1.0 + std::exp(2.0 * u)),
                   h * 0.5 * kPi * std::cosh(tau) / (2.0 * ch * ch), u, k % 2 == 0});
  }
  return out;
}

// One node of the tensor rule on the unit disc, xi = -r e^{i phi}.
struct DiscNode {
  double s;          // |xi|^2
  double cs;         // 1 - |xi|^2
  double r;
  double phi;
  double sin_phi;
  double den;        // |1 + xi|^2
  double log_w;      // log of the dv_0-probability weight (without (1-s)^lambda)
  bool even;
  bool inner;        // inside the truncated rule
};

class DiscRule {
 public:
  DiscRule(const QuadratureSpec& spec, double s_umax)
      : snodes_(de_nodes(spec.radial_order, s_umax)),
        pnodes_(de_nodes(spec.angular_order)),
        s_trunc_(kTruncFraction * s_umax) {}

  std::size_t rows() const { return snodes_.size(); }

  template <class Visit>
  void row(std::size_t i, Visit&& visit) const {
    const DENode& sn = snodes_[i];
    const double r = std::sqrt(sn.x);
    const double one_minus_r = sn.cx / (1.0 + r);
    for (const DENode& pn : pnodes_) {
      const double phi = kPi * pn.x;
      const double sphi = std::sin(kPi * std::min(pn.x, pn.cx));
      const double sh = std::sin(0.5 * phi);
      const double den = one_minus_r * one_minus_r + 4.0 * r * sh * sh;
      // dv_0 = (1/pi) dA = (1/(2 pi)) ds dphi; phi runs over (0, pi) with weight pi * w.
      const double log_w = std::log(sn.w * kPi * pn.w / (2.0 * kPi));
      const bool even = sn.even && pn.even;
      const bool inner = std::abs(sn.u) <= s_trunc_ && std::abs(pn.u) <= kTruncFraction * kUMax;
      for (double sign : {1.0, -1.0})
        visit(DiscNode{sn.x, sn.cx, r, sign * phi, sign * sphi, den, log_w, even, inner});
    }
  }

 private:
  std::vector<DENode> snodes_;
  std::vector<DENode> pnodes_;
  double s_trunc_;
};

BallPoint disc_point(const DiscNode& d) { return BallPoint{{-std::polar(d.r, d.phi)}}; }

// Phi(xi) computed from |1+xi|^2 and 1-|xi|^2 directly, stable near xi = -1.
Point disc_cayley(const DiscNode& d) {
  return Point(cd(-2.0 * d.r * d.sin_phi / d.den, d.cs / d.den));
}

void add_sample(Acc& a, cd v, double wt, const DiscNode& d) {
  const cd c = v * wt;
  a.sum += c;
  a.abs_sum += std::abs(c);
  if (d.even) a.coarse += 4.0 * c;
  if (d.inner) a.trunc += c;
  ++a.count;
}

IntegralResult finish_tensor(const Acc& a, double tail = 0.0) {
  IntegralResult r;
  r.value = a.sum;
  r.abs_integral = a.abs_sum;
  r.richardson_delta = std::max(std::abs(a.sum - a.coarse), std::abs(a.sum - a.trunc)) + tail;
  r.converged = std::isfinite(r.abs_integral) && r.richardson_delta <= 1e-4 * std::max(r.abs_integral, 1e-300);
  r.evaluations = a.count;
  return r;
}

IntegralResult finish_mc(const Acc& a) {
  IntegralResult r;
  const double N = static_cast<double>(a.count);
  r.value = a.sum / N;
  r.abs_integral = a.abs_sum / N;
  const double var = std::max(0.0, a.sq_sum / N - std::norm(r.value));
  r.stderr_estimate = std::sqrt(var / N);
  r.converged = std::isfinite(r.abs_integral);
  r.evaluations = a.count;
  return r;
}

void add_mc(Acc& a, cd c) {
  a.sum += c;
  a.abs_sum += std::abs(c);
  a.sq_sum += std::norm(c);
  ++a.count;
}

void require_tensor_dim(int n, const char* what) {
  if (n != 1) throw DimensionError(std::string(what) + ": the tensor engine supports n = 1 only");
}

long long chunk_count(long long samples) {
  if (samples < 1) throw DomainError("quadrature: sample_count must be positive");
  return (samples + kChunk - 1) / kChunk;
}

long long chunk_size(long long samples, long long c) { return std::min(kChunk, samples - c * kChunk); }

// Uniform direction on the unit sphere of C^m scaled to modulus sqrt(v).
std::vector<cd> random_direction(std::mt19937_64& rng, int m, double v) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cd> out(static_cast<std::size_t>(m));
  double s = 0.0;
  for (cd& c : out) {
    c = cd(g(rng), g(rng));
    s += std::norm(c);
  }
  const double scale = std::sqrt(v / s);
  for (cd& c : out) c *= scale;
  return out;
}

double gamma_variate(std::mt19937_64& rng, double a) {
  std::gamma_distribution<double> g(a, 1.0);
  return g(rng);
}

double log_beta(double a, double b) { return log_gamma_fn(a) + log_gamma_fn(b) - log_gamma_fn(a + b); }

}  // namespace

// ---------------------------------------------------------------------------

IntegralResult integrate_B(const BallFunction& F, int n, double lambda, const QuadratureSpec& spec) {
  if (!(lambda > -1.0)) throw DomainError("integrate_B: lambda must exceed -1");
  if (spec.engine == Engine::Tensor) {
    require_tensor_dim(n, "integrate_B");
    const DiscRule rule(spec, kUMaxBall);
    const double lnorm = std::log(1.0 + lambda);
    const Acc a = run_chunks(static_cast<long long>(rule.rows()), spec.workers, [&](long long i) {
      Acc acc;
      rule.row(static_cast<std::size_t>(i), [&](const DiscNode& d) {
        const double wt = std::exp(d.log_w + lnorm + lambda * std::log(d.cs));
        add_sample(acc, F(disc_point(d)), wt, d);
      });
      return acc;
    });
    return finish_tensor(a);
  }
  const long long N = spec.sample_count;
  const Acc a = run_chunks(chunk_count(N), spec.workers, [&](long long c) {
    auto rng = chunk_rng(spec.seed, c);
    Acc acc;
    for (long long k = 0; k < chunk_size(N, c); ++k) {
      const double x = gamma_variate(rng, n);
      const double y = gamma_variate(rng, lambda + 1.0);
      const double s = x / (x + y);
      BallPoint xi{random_direction(rng, n, s)};
      add_mc(acc, F(xi));
    }
    return acc;
  });
  return finish_mc(a);
}

IntegralResult integrate_U(const PointFunction& F, int n, double lambda, const QuadratureSpec& spec) {
  if (!(lambda > -1.0)) throw DomainError("integrate_U: lambda must exceed -1");
  if (spec.center) {
    // dV_lambda(sigma_c^{-1} v) = rho(c)^{n+1+lambda} dV_lambda(v).
    const Point c = *spec.center;
    require_same_dim(n, c.dim(), "integrate_U(center)");
    const SiegelAffine back = sigma_inv(c);
    const double scale = std::pow(rho(c), n + 1.0 + lambda);
    QuadratureSpec plain = spec;
    plain.center.reset();
    auto r = integrate_U([&](const Point& v) { return F(back(v)); }, n, lambda, plain);
    r.value *= scale;
    r.abs_integral *= scale;
    r.stderr_estimate *= scale;
    r.richardson_delta *= scale;
    return r;
  }
  if (spec.engine == Engine::Tensor) {
    require_tensor_dim(n, "integrate_U");
    const DiscRule rule(spec, kUMax);
    const double lnorm = std::log(1.0 + lambda);
    const Acc a = run_chunks(static_cast<long long>(rule.rows()), spec.workers, [&](long long i) {
      Acc acc;
      rule.row(static_cast<std::size_t>(i), [&](const DiscNode& d) {
        // dV_lambda on U pulls back to |1+xi|^{-2(n+1+lambda)} dv_lambda.
        const double wt =
            std::exp(d.log_w + lnorm + lambda * std::log(d.cs) - (2.0 + lambda) * std::log(d.den));
        add_sample(acc, F(disc_cayley(d)), wt, d);
      });
      return acc;
    });
    return finish_tensor(a);
  }
  // Slice coordinates w = (u', t + i(|u'|^2 + h)), dV = du' dt dh. Proposal
  // q ~ h^lambda (A^2 + t^2)^{-k/2} with A = 1 + h + |u'|^2 and k = n+1+lambda+kappa.
  const int m = n - 1;
  const double kappa = spec.tail_kappa;
  if (!(kappa > 0.0)) throw DomainError("integrate_U: tail_kappa must be positive");
  const double k = n + 1.0 + lambda + kappa;
  double log_z = log_beta(0.5, 0.5 * (k - 1.0));
  if (m == 0) {
    log_z += log_beta(lambda + 1.0, kappa);
  } else {
    log_z += m * std::log(kPi) - log_gamma_fn(m) + log_beta(lambda + 1.0, m) + log_beta(lambda + m + 1.0, kappa);
  }
  const double log_c = std::log(c_lambda(n, lambda));
  const long long N = spec.sample_count;
  const Acc a = run_chunks(chunk_count(N), spec.workers, [&](long long c) {
    auto rng = chunk_rng(spec.seed, c);
    std::student_t_distribution<double> student(k - 1.0);
    Acc acc;
    for (long long q = 0; q < chunk_size(N, c); ++q) {
      const double S = gamma_variate(rng, lambda + m + 1.0) / gamma_variate(rng, kappa);
      double h = S;
      double v = 0.0;
      if (m > 0) {
        const double x = gamma_variate(rng, lambda + 1.0);
        const double y = gamma_variate(rng, m);
        h = S * x / (x + y);
        v = S * y / (x + y);
      }
      const double A = 1.0 + h + v;
      const double t = A * student(rng) / std::sqrt(k - 1.0);
      const auto uprime = random_direction(rng, m, v);
      const Point w = from_slice_coords(uprime, t, h);
      const double log_wt = log_c + log_z + 0.5 * k * std::log(A * A + t * t);
      add_mc(acc, F(w) * std::exp(log_wt));
    }
    return acc;
  });
  return finish_mc(a);
}

namespace {

// Decay exponent of |G| along a ray, from two far samples; NaN when G vanishes there.
double decay_exponent(const PointFunction& G, const Point& near, const Point& far, double ratio) {
  const double a = std::abs(G(near));
  const double b = std::abs(G(far));
  if (a == 0.0 || b == 0.0 || !std::isfinite(a) || !std::isfinite(b)) return NAN;
  return -std::log(b / a) / std::log(ratio);
}

void check_boundary_decay(const PointFunction& G, int n) {
  const std::vector<cd> zero(static_cast<std::size_t>(n - 1));
  for (double sgn : {1.0, -1.0}) {
    const double R = 1e6;
    const double e = decay_exponent(G, from_slice_coords(zero, sgn * R, 0.0),
                                    from_slice_coords(zero, sgn * 2.0 * R, 0.0), 2.0);
    if (std::isfinite(e) && !(e > n))
      throw DomainError("integrate_bU: integrand decays like |t|^-" + std::to_string(e) +
                        ", not integrable");
  }
  if (n >= 2) {
    std::vector<cd> u1(static_cast<std::size_t>(n - 1));
    std::vector<cd> u2(static_cast<std::size_t>(n - 1));
    u1[0] = 1e3;
    u2[0] = 2e3;
    const double e = decay_exponent(G, from_slice_coords(u1, 0.0, 0.0), from_slice_coords(u2, 0.0, 0.0), 2.0);
    if (std::isfinite(e) && !(e > 2 * n))
      throw DomainError("integrate_bU: integrand decays like |u'|^-" + std::to_string(e) +
                        ", not integrable");
  }
}

}  // namespace

IntegralResult integrate_bU(const PointFunction& G, int n, const QuadratureSpec& spec) {
  check_boundary_decay(G, n);
  if (spec.engine == Engine::Tensor) {
    require_tensor_dim(n, "integrate_bU");
    const double T = spec.truncation;
    if (!(T > 0.0)) throw DomainError("integrate_bU: truncation must be positive");
    const auto nodes = de_nodes(spec.radial_order * 4);
    auto t_of = [&](const DENode& d) { return d.x < 0.5 ? -T / std::tan(kPi * d.x) : T / std::tan(kPi * d.cx); };
    const Acc a = run_chunks(1, 1, [&](long long) {
      Acc acc;
      for (const auto& d : nodes) {
        const double t = t_of(d);
        const double wt = d.w * kPi * (T * T + t * t) / T;
        const cd c = G(Point(cd(t, 0.0))) * wt;
        acc.sum += c;
        acc.abs_sum += std::abs(c);
        if (d.even) acc.coarse += 2.0 * c;
        if (std::abs(d.u) <= kTruncFraction * kUMax) acc.trunc += c;
        ++acc.count;
      }
      return acc;
    });
    // Tail beyond the outermost nodes, from the local decay exponent.
    double tail = 0.0;
    for (const DENode* d : {&nodes.front(), &nodes.back()}) {
      const double t = t_of(*d);
      const double e = decay_exponent(G, Point(cd(0.5 * t, 0.0)), Point(cd(t, 0.0)), 2.0);
      if (std::isfinite(e) && e > 1.0) tail += std::abs(G(Point(cd(t, 0.0)))) * std::abs(t) / (e - 1.0);
    }
    return finish_tensor(a, tail);
  }
  // Boundary coordinates (u', t): proposal ~ (A^2 + t^2)^{-k/2}, A = 1 + |u'|^2, k = n + kappa.
  const int m = n - 1;
  const double kappa = spec.tail_kappa;
  if (!(kappa > 0.0)) throw DomainError("integrate_bU: tail_kappa must be positive");
  const double k = n + kappa;
  double log_z = log_beta(0.5, 0.5 * (k - 1.0));
  if (m > 0) log_z += m * std::log(kPi) - log_gamma_fn(m) + log_beta(m, kappa);
  const long long N = spec.sample_count;
  const Acc a = run_chunks(chunk_count(N), spec.workers, [&](long long c) {
    auto rng = chunk_rng(spec.seed, c);
    std::student_t_distribution<double> student(k - 1.0);
    Acc acc;
    for (long long q = 0; q < chunk_size(N, c); ++q) {
      const double v = m > 0 ? gamma_variate(rng, m) / gamma_variate(rng, kappa) : 0.0;
      const double A = 1.0 + v;
      const double t = A * student(rng) / std::sqrt(k - 1.0);
      const auto uprime = random_direction(rng, m, v);
      const Point u = from_slice_coords(uprime, t, 0.0);
      add_mc(acc, G(u) * std::exp(log_z + 0.5 * k * std::log(A * A + t * t)));
    }
    return acc;
  });
  return finish_mc(a);
}

namespace {

IntegralResult circle_trapezoid(const BallFunction& F, double r, long long M) {
  Acc a;
  for (long long k = 0; k < M; ++k) {
    const cd c = F(BallPoint{{std::polar(r, 2.0 * kPi * static_cast<double>(k) / static_cast<double>(M))}});
    a.sum += c;
    a.abs_sum += std::abs(c);
    if (k % 2 == 0) a.coarse += 2.0 * c;
    ++a.count;
  }
  IntegralResult out;
  out.value = a.sum / static_cast<double>(M);
  out.abs_integral = a.abs_sum / static_cast<double>(M);
  out.richardson_delta = std::abs(a.sum - a.coarse) / static_cast<double>(M);
  out.evaluations = M;
  return out;
}

long long circle_nodes(const QuadratureSpec& spec, double r) {
  return std::max<long long>(16LL * spec.angular_order, static_cast<long long>(std::ceil(64.0 / (1.0 - r))));
}

}  // namespace

IntegralResult integrate_sphere(const BallFunction& F, int n, double r, const QuadratureSpec& spec) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("integrate_sphere: radius must lie in [0, 1)");
  if (n == 1) return circle_trapezoid(F, r, circle_nodes(spec, r));
  const int count = static_cast<int>(std::clamp<long long>(spec.sample_count, 4096, 65536));
  Acc a;
  for (auto& z : sphere_points(n, count, spec.seed)) {
    for (cd& c : z.xi) c *= r;
    add_mc(a, F(z));
  }
  return finish_mc(a);
}

NormResult hardy_norm_U(const PointFunction& f, int n, double p, const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw DomainError("hardy_norm_U: p must be positive");
  NormResult out;
  double prev = 0.0;
  for (int k = 0; k <= spec.levels; ++k) {
    const double eps = std::ldexp(1.0, -k);
    const auto r = integrate_bU([&](const Point& u) { return cd(std::pow(std::abs(f(u.lifted(eps))), p), 0.0); },
                                n, spec);
    const double v = r.value.real();
    if (k > 0 && v < prev - 3.0 * r.error_estimate() - 1e-12 * std::abs(prev)) out.monotone = false;
    out.levels.push_back(v);
    prev = v;
  }
  out.value = std::pow(std::max(0.0, out.levels.back()), 1.0 / p);
  return out;
}

NormResult hardy_norm_B(const BallFunction& F, int n, double p, const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw DomainError("hardy_norm_B: p must be positive");
  NormResult out;
  double prev = 0.0;
  for (int k = 1; k <= spec.levels; ++k) {
    const double r = 1.0 - std::ldexp(1.0, -k);
    const auto res = integrate_sphere([&](const BallPoint& x) { return cd(std::pow(std::abs(F(x)), p), 0.0); }, n,
                                      r, spec);
    const double v = res.value.real();
    if (k > 1 && v < prev - 3.0 * res.error_estimate() - 1e-12 * std::abs(prev)) out.monotone = false;
    out.levels.push_back(v);
    prev = v;
  }
  out.value = std::pow(std::max(0.0, out.levels.back()), 1.0 / p);
  return out;
}

double bergman_norm_B(const BallFunction& F, int n, double p, double lambda, const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw DomainError("bergman_norm_B: p must be positive");
  const auto r = integrate_B([&](const BallPoint& x) { return cd(std::pow(std::abs(F(x)), p), 0.0); }, n, lambda,
                             spec);
  return std::pow(std::max(0.0, r.value.real()), 1.0 / p);
}

double bergman_norm_U(const PointFunction& f, int n, double p, double lambda, const QuadratureSpec& spec) {
  if (!(p > 0.0)) throw DomainError("bergman_norm_U: p must be positive");
  const auto r = integrate_U([&](const Point& z) { return cd(std::pow(std::abs(f(z)), p), 0.0); }, n, lambda,
                             spec);
  return std::pow(std::max(0.0, r.value.real()), 1.0 / p);
}

}  // namespace siegel
