#include "logbm/relations.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <sstream>

namespace logbm {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

Eigen::MatrixXd orthonormal_span(const std::vector<Direction>& dirs,
                                 const std::vector<int>& members, double tol) {
  Eigen::MatrixXd m(dirs[0].dim(), static_cast<Eigen::Index>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = dirs[static_cast<std::size_t>(members[i])].coords();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()[i] > tol) ++rank;
  }
  return svd.matrixU().leftCols(rank);
}

}  // namespace

bool verify_direct_sum(const std::vector<Eigen::MatrixXd>& bases, int dim, double tol) {
  int total = 0;
  for (const auto& b : bases) total += static_cast<int>(b.cols());
  if (total != dim) return false;
  Eigen::MatrixXd stacked(dim, dim);
  int c = 0;
  for (const auto& b : bases) {
    stacked.middleCols(c, b.cols()) = b;
    c += static_cast<int>(b.cols());
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked);
  return svd.singularValues()(dim - 1) > tol;
}

Decomposition decompose(const std::vector<Direction>& omega,
                        const std::vector<Direction>& omega_small, double orth_tol) {
  if (omega.empty() || omega_small.empty()) {
    throw NonSpanning("decompose: empty direction set");
  }
  const int n = omega[0].dim();
  if (!directions_span(omega, n) || !directions_span(omega_small, n)) {
    throw NonSpanning("decompose: both direction sets must span R^n");
  }
  const int ka = static_cast<int>(omega.size());
  const int kb = static_cast<int>(omega_small.size());

  // Joint union-find over omega nodes [0, ka) and omega_small nodes [ka, ka+kb).
  UnionFind uf(ka + kb);
  for (int i = 0; i < ka; ++i) {
    for (int j = 0; j < kb; ++j) {
      if (std::abs(omega[static_cast<std::size_t>(i)].dot(omega_small[static_cast<std::size_t>(j)])) > orth_tol) {
        uf.unite(i, ka + j);
      }
    }
  }

  Decomposition dec;
  dec.dim = n;
  std::vector<int> root_to_class(static_cast<std::size_t>(ka + kb), -1);
  auto class_of = [&](int node) {
    const int r = uf.find(node);
    if (root_to_class[static_cast<std::size_t>(r)] < 0) {
      root_to_class[static_cast<std::size_t>(r)] = static_cast<int>(dec.classes.size());
      dec.classes.emplace_back();
    }
    return root_to_class[static_cast<std::size_t>(r)];
  };
  for (int i = 0; i < ka; ++i) dec.classes[static_cast<std::size_t>(class_of(i))].omega_members.push_back(i);
  for (int j = 0; j < kb; ++j) {
    dec.classes[static_cast<std::size_t>(class_of(ka + j))].omega_small_members.push_back(j);
  }

  // Contract checks: classes paired on both sides, spans are direct sums,
  // cross-orthogonality between V_i and U_j for i != j.
  for (std::size_t c = 0; c < dec.classes.size(); ++c) {
    auto& cls = dec.classes[c];
    if (cls.omega_members.empty() || cls.omega_small_members.empty()) {
      // A class with members on one side only can occur when every pairing
      // fell below orth_tol; the lemma's hypotheses then fail numerically.
      throw InconsistentDecomposition(
          "decompose: a relation class has members on one side only; "
          "orth_tol likely misconfigured for this input");
    }
    cls.basis_v = orthonormal_span(omega, cls.omega_members, orth_tol);
    cls.basis_u = orthonormal_span(omega_small, cls.omega_small_members, orth_tol);
  }
  std::vector<Eigen::MatrixXd> vs, us;
  for (const auto& cls : dec.classes) {
    vs.push_back(cls.basis_v);
    us.push_back(cls.basis_u);
  }
  if (!verify_direct_sum(vs, n, orth_tol) || !verify_direct_sum(us, n, orth_tol)) {
    throw InconsistentDecomposition(
        "decompose: class spans do not form a direct sum of R^n");
  }
  for (std::size_t i = 0; i < dec.classes.size(); ++i) {
    for (std::size_t j = 0; j < dec.classes.size(); ++j) {
      if (i == j) continue;
      const double overlap =
          (dec.classes[i].basis_v.transpose() * dec.classes[j].basis_u)
              .cwiseAbs().maxCoeff();
      if (overlap > 1e-7) {
        std::ostringstream os;
        os << "decompose: cross-orthogonality V_" << i << " perp U_" << j
           << " fails with overlap " << overlap;
        throw InconsistentDecomposition(os.str());
      }
    }
  }
  return dec;
}

std::optional<SummandCertificate> detect_dilated_direct_summands(
    const SymmetricPolytope& k, const SymmetricPolytope& l,
    const std::vector<Direction>* witness_omega, double phi_rel_tol) {
  const auto sk = surface_area_measure(k);
  const auto sl = surface_area_measure(l);
  if (sk.size() != sl.size()) {
    throw SupportMismatch("detect_dilated_direct_summands: support sizes differ");
  }
  Eigen::VectorXd phi(sk.size());
  for (int i = 0; i < sk.size(); ++i) {
    const int j = sl.find(sk.direction(i));
    if (j < 0) {
      throw SupportMismatch("detect_dilated_direct_summands: supports differ at a direction");
    }
    phi[i] = sl.weight(j) / sk.weight(i);
  }

  const std::vector<Direction>& omega = sk.directions();
  const std::vector<Direction>& small = witness_omega ? *witness_omega : omega;

  Decomposition dec;
  try {
    dec = decompose(omega, small);
  } catch (const InconsistentDecomposition&) {
    return std::nullopt;
  }

  Eigen::VectorXd constants(dec.class_count());
  for (int c = 0; c < dec.class_count(); ++c) {
    const auto& members = dec.classes[static_cast<std::size_t>(c)].omega_members;
    double lo = phi[members.front()], hi = lo, sum = 0.0;
    for (int m : members) {
      lo = std::min(lo, phi[m]);
      hi = std::max(hi, phi[m]);
      sum += phi[m];
    }
    if (hi - lo > phi_rel_tol * std::max(std::abs(lo), std::abs(hi))) {
      return std::nullopt;  // phi not constant on this class
    }
    constants[c] = sum / static_cast<double>(members.size());
  }

  // Each support direction must sit in exactly one summand: its own class
  // contains it by construction; reject overlap with any other class span.
  for (int c = 0; c < dec.class_count(); ++c) {
    for (int m : dec.classes[static_cast<std::size_t>(c)].omega_members) {
      const auto& v = omega[static_cast<std::size_t>(m)].coords();
      for (int c2 = 0; c2 < dec.class_count(); ++c2) {
        if (c2 == c) continue;
        const auto& basis = dec.classes[static_cast<std::size_t>(c2)].basis_v;
        if (basis.cols() == 0) continue;
        if ((basis.transpose() * v).norm() > 1e-7) return std::nullopt;
      }
    }
  }

  SummandCertificate cert;
  cert.decomposition = std::move(dec);
  cert.constants = std::move(constants);
  return cert;
}

}  // namespace logbm
