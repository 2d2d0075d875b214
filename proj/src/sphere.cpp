#include "logbm/sphere.hpp"

#include <cmath>

namespace logbm {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kGolden = 0.6180339887498948482;  // 1/phi

/// van der Corput radical inverse, base 2.
double van_der_corput(std::uint64_t i) {
  double x = 0.0, f = 0.5;
  while (i > 0) {
    if (i & 1u) x += f;
    f *= 0.5;
    i >>= 1;
  }
  return x;
}

}  // namespace

double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double gaussian(std::mt19937_64& gen) {
  // Box-Muller; discard the second member of the pair to keep the stream
  // stateless.
  double u1 = uniform01(gen);
  while (u1 <= 0.0) u1 = uniform01(gen);
  const double u2 = uniform01(gen);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  // SplitMix64 over base ^ golden-ratio-stepped index.
  std::uint64_t z = base + 0x9E3779B97F4A7C15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<Direction> nested_direction_sequence(int dim, int count) {
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(count));
  if (dim == 1) {
    out.emplace_back(Eigen::VectorXd::Ones(1));
    return out;
  }
  if (dim == 2) {
    for (int j = 0; j < count; ++j) {
      const double theta = kPi * std::fmod(static_cast<double>(j) * kGolden, 1.0);
      Eigen::VectorXd v(2);
      v << std::cos(theta), std::sin(theta);
      out.emplace_back(v);
    }
    return out;
  }
  if (dim == 3) {
    for (int j = 0; j < count; ++j) {
      const double z = 1.0 - 2.0 * van_der_corput(static_cast<std::uint64_t>(j) + 1);
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = 2.0 * kPi * std::fmod(static_cast<double>(j) * kGolden, 1.0);
      Eigen::VectorXd v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      if (v.norm() < 0.5) continue;  // poles of the vdc sequence
      out.emplace_back(v);
    }
    return out;
  }
  std::mt19937_64 gen(0x5EEDD1Ful);  // fixed: the sequence is a constant
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian(gen);
    if (v.norm() < 1e-6) continue;
    out.emplace_back(v);
  }
  return out;
}

std::vector<Direction> sample_directions(std::mt19937_64& gen, int dim, int count) {
  std::vector<Direction> out;
  out.reserve(static_cast<std::size_t>(count));
  if (dim == 3) {
    const Eigen::MatrixXd rot = random_rotation(gen, 3);
    for (int j = 0; j < count; ++j) {
      const double z = 1.0 - (2.0 * j + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = 2.0 * kPi * std::fmod((j + 1) * kGolden, 1.0);
      Eigen::VectorXd v(3);
      v << r * std::cos(phi), r * std::sin(phi), z;
      out.emplace_back(rot * v);
    }
    return out;
  }
  while (static_cast<int>(out.size()) < count) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v[i] = gaussian(gen);
    if (v.norm() < 1e-6) continue;
    out.emplace_back(v);
  }
  return out;
}

Eigen::MatrixXd random_rotation(std::mt19937_64& gen, int dim) {
  Eigen::MatrixXd a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = gaussian(gen);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  }
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

Eigen::MatrixXd hyperplane_basis(const Eigen::VectorXd& u) {
  const int n = static_cast<int>(u.size());
  if (n < 2) throw DimensionMismatch("hyperplane_basis: need dim >= 2");
  Eigen::VectorXd w = u.normalized();
  // Householder vector mapping e_k -> w, with k the largest coordinate of w;
  // the remaining columns of the reflector form the basis.
  int k = 0;
  w.cwiseAbs().maxCoeff(&k);
  Eigen::VectorXd v = w;
  v[k] += (w[k] >= 0 ? 1.0 : -1.0);
  v.normalize();
  Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - 2.0 * v * v.transpose();
  // Column k of h is (+/-)w; drop it, keep the others.
  Eigen::MatrixXd basis(n, n - 1);
  int c = 0;
  for (int j = 0; j < n; ++j) {
    if (j == k) continue;
    basis.col(c++) = h.col(j);
  }
  return basis;
}

}  // namespace logbm
