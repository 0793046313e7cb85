#include "lexstat/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <thread>

#include "lexstat/errors.hpp"

namespace lexstat {

namespace {

Eigen::MatrixXd to_eigen(const TransitionMatrix& m) {
  Eigen::MatrixXd p(m.n, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) p(i, j) = m.at(i, j);
  return p;
}

double spectral_norm(const Eigen::MatrixXd& a) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues()(0);
}

}  // namespace

TransitionMatrix transition_matrix(const BigramCounts& c) {
  if (c.total() == 0)
    fail(ErrorCode::empty_counts, "transition_matrix: no pair observations");

  TransitionMatrix m;
  m.profile_name = c.profile_name;
  m.n = c.n;
  m.p.assign(static_cast<std::size_t>(c.n) * c.n, 0.0);
  m.symbol_freq.assign(static_cast<std::size_t>(c.n), 0.0);
  const double total = static_cast<double>(c.total());
  for (int i = 0; i < c.n; ++i) {
    std::int64_t row_sum = 0;
    for (int j = 0; j < c.n; ++j) row_sum += c.at(i, j);
    m.symbol_freq[static_cast<std::size_t>(i)] = static_cast<double>(row_sum) / total;
    if (row_sum == 0) {
      m.uniform_rows.push_back(i);
      for (int j = 0; j < c.n; ++j)
        m.p[static_cast<std::size_t>(i) * c.n + j] = 1.0 / c.n;
    } else {
      for (int j = 0; j < c.n; ++j)
        m.p[static_cast<std::size_t>(i) * c.n + j] =
            static_cast<double>(c.at(i, j)) / static_cast<double>(row_sum);
    }
  }
  m.norm2 = spectral_norm(to_eigen(m));
  return m;
}

TransitionMatrix transition_from_rows(std::string name, int n, std::vector<double> rows) {
  if (n < 1 || rows.size() != static_cast<std::size_t>(n) * n)
    fail(ErrorCode::invalid_argument, "transition_from_rows: need n*n entries");
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
      const double v = rows[static_cast<std::size_t>(i) * n + j];
      if (v < 0.0)
        fail(ErrorCode::invalid_argument, "transition_from_rows: negative entry in row " +
                                              std::to_string(i));
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      fail(ErrorCode::invalid_argument, "transition_from_rows: row " + std::to_string(i) +
                                            " sums to " + std::to_string(sum));
  }
  TransitionMatrix m;
  m.profile_name = std::move(name);
  m.n = n;
  m.p = std::move(rows);
  m.norm2 = spectral_norm(to_eigen(m));
  return m;
}

ResolventValue resolvent_norm(const TransitionMatrix& m, std::complex<double> lambda) {
  Eigen::MatrixXcd a = -to_eigen(m).cast<std::complex<double>>();
  for (int i = 0; i < m.n; ++i) a(i, i) += lambda;
  const auto sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(a).singularValues();
  const double sigma_min = sv(sv.size() - 1);
  ResolventValue r;
  if (sigma_min <= 0.0 || 1.0 / sigma_min >= kResolventCap) {
    r.norm = kResolventCap;
    r.capped = true;
  } else {
    r.norm = 1.0 / sigma_min;
  }
  return r;
}

double PseudospectrumGrid::re_at(int ix) const {
  if (region.nx < 2) return region.re_min;
  return region.re_min + (region.re_max - region.re_min) * ix / (region.nx - 1);
}

double PseudospectrumGrid::im_at(int iy) const {
  if (region.ny < 2) return region.im_min;
  return region.im_min + (region.im_max - region.im_min) * iy / (region.ny - 1);
}

PseudospectrumGrid pseudospectrum_grid(const TransitionMatrix& m, const GridSpec& region,
                                       const std::vector<double>& eps_levels, int threads) {
  if (!(region.re_max > region.re_min) || !(region.im_max > region.im_min))
    fail(ErrorCode::invalid_region, "pseudospectrum_grid: empty or inverted region");
  if (region.nx < 2 || region.ny < 2)
    fail(ErrorCode::invalid_region, "pseudospectrum_grid: need at least 2 nodes per axis");
  for (double e : eps_levels)
    if (!(e > 0.0))
      fail(ErrorCode::invalid_argument, "pseudospectrum_grid: epsilon levels must be positive");

  PseudospectrumGrid g;
  g.region = region;
  g.eps_levels = eps_levels;
  const std::size_t total = static_cast<std::size_t>(region.nx) * region.ny;
  g.log10_norm.assign(total, 0.0);
  g.capped.assign(total, 0);
  g.mask.assign(eps_levels.size() * total, 0);

  const auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t node = begin; node < end; ++node) {
      const int iy = static_cast<int>(node) / region.nx;
      const int ix = static_cast<int>(node) % region.nx;
      const std::complex<double> lambda(g.re_at(ix), g.im_at(iy));
      const ResolventValue r = resolvent_norm(m, lambda);
      g.log10_norm[node] = std::log10(r.norm);
      g.capped[node] = r.capped ? 1 : 0;
      for (std::size_t e = 0; e < eps_levels.size(); ++e)
        if (r.norm >= 1.0 / (eps_levels[e] * m.norm2)) g.mask[e * total + node] = 1;
    }
  };

  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(total)));
  if (nthreads == 1) {
    worker(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (total + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const std::size_t begin = chunk * static_cast<std::size_t>(t);
      const std::size_t end = std::min(total, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(worker, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return g;
}

DichotomyResult radial_dichotomy(const TransitionMatrix& m, double r, int initial_nodes) {
  if (!(r > 0.0))
    fail(ErrorCode::invalid_argument, "radial_dichotomy: radius must be positive");
  if (initial_nodes < 1 || initial_nodes > kDichotomyMaxNodes)
    fail(ErrorCode::invalid_argument, "radial_dichotomy: node count outside [1, " +
                                          std::to_string(kDichotomyMaxNodes) + "]");

  const Eigen::MatrixXd p = to_eigen(m);
  const Eigen::VectorXcd eigs = Eigen::EigenSolver<Eigen::MatrixXd>(p, false).eigenvalues();
  for (Eigen::Index i = 0; i < eigs.size(); ++i)
    if (std::abs(std::abs(eigs(i)) - r) < kCircleEigenTol)
      fail(ErrorCode::eigenvalue_on_circle,
           "radial_dichotomy: eigenvalue of modulus " + std::to_string(std::abs(eigs(i))) +
               " lies on the circle of radius " + std::to_string(r));

  const Eigen::MatrixXcd pc = p.cast<std::complex<double>>();
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(m.n, m.n);

  // Trapezoidal quadrature of the periodic integrand: with equispaced nodes
  // the weights are uniform, so H is the plain node average.
  const auto k_of = [&](int nodes) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m.n, m.n);
    for (int k = 0; k < nodes; ++k) {
      const double phi = 2.0 * M_PI * k / nodes;
      const Eigen::MatrixXcd b = pc - r * std::exp(std::complex<double>(0.0, phi)) * id;
      const Eigen::MatrixXcd binv = b.partialPivLu().solve(id);
      h += binv.adjoint() * binv;
    }
    h /= static_cast<double>(nodes);
    const double h_norm = Eigen::JacobiSVD<Eigen::MatrixXcd>(h).singularValues()(0);
    return m.norm2 * m.norm2 * h_norm;
  };

  double prev = k_of(initial_nodes);
  for (int nodes = initial_nodes * 2; nodes <= kDichotomyMaxNodes; nodes *= 2) {
    const double cur = k_of(nodes);
    if (std::abs(cur - prev) < kDichotomyRelTol * std::abs(cur))
      return {r, cur, nodes};
    prev = cur;
  }
  fail(ErrorCode::no_convergence,
       "radial_dichotomy: quadrature did not settle within " +
           std::to_string(kDichotomyMaxNodes) + " nodes");
}

}  // namespace lexstat
