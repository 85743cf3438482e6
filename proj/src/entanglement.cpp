#include "hybrident/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hybrident/errors.hpp"

namespace hybrident {

namespace {

// The closed-form 4x4 cofactor determinant loses about eps * |V|^4; pivoted LU
// keeps the error near eps * cond(V), which matters for strongly squeezed states.
double full_det(const Mat4& m) { return Eigen::PartialPivLU<Mat4>(m).determinant(); }

}  // namespace

std::string_view pair_name(ModePair pair) {
  switch (pair) {
    case ModePair::cavity_mechanics: return "cavity-mechanics";
    case ModePair::cavity_spin: return "cavity-spin";
    case ModePair::mechanics_spin: return "mechanics-spin";
  }
  return "?";
}

ModePair pair_from_name(std::string_view name) {
  for (auto p : kAllPairs)
    if (pair_name(p) == name) return p;
  throw DomainError("unknown mode pair '" + std::string(name) +
                    "'; valid: cavity-spin, cavity-mechanics, mechanics-spin");
}

TwoModeCovariance TwoModeCovariance::from_blocks(const Mat2& v11, const Mat2& v22,
                                                 const Mat2& v12) {
  TwoModeCovariance out;
  out.entries.topLeftCorner<2, 2>() = v11;
  out.entries.bottomRightCorner<2, 2>() = v22;
  out.entries.topRightCorner<2, 2>() = v12;
  out.entries.bottomLeftCorner<2, 2>() = v12.transpose();
  return out;
}

TwoModeCovariance reduce_pair(const CovarianceMatrix& v, ModePair pair) {
  int first = 0;
  int second = 0;
  switch (pair) {
    case ModePair::cavity_mechanics: first = kXc; second = kQm; break;
    case ModePair::cavity_spin: first = kXc; second = kXs; break;
    case ModePair::mechanics_spin: first = kQm; second = kXs; break;
  }
  const auto& m = v.entries;
  return TwoModeCovariance::from_blocks(m.block<2, 2>(first, first), m.block<2, 2>(second, second),
                                        m.block<2, 2>(first, second));
}

double seralian(const TwoModeCovariance& v) {
  return v.v11().determinant() + v.v22().determinant() - 2.0 * v.v12().determinant();
}

double eta_minus(const TwoModeCovariance& v) {
  const double sigma = seralian(v);
  const double det = full_det(v.entries);
  double radicand = sigma * sigma - 4.0 * det;
  if (radicand < 0.0) {
    if (radicand < -1e-12 * std::max(1.0, sigma * sigma)) {
      std::ostringstream os;
      os << "unphysical two-mode covariance: Sigma^2 - 4 det V = " << radicand
         << " (Sigma = " << sigma << ", det V = " << det << ")";
      throw DomainError(os.str());
    }
    radicand = 0.0;
  }
  // (Sigma - sqrt(rad)) / 2 written without cancellation.
  const double root = std::sqrt(radicand);
  const double larger = 0.5 * (sigma + root);
  const double eta_sq = larger > 0.0 ? det / larger : 0.5 * (sigma - root);
  if (eta_sq < -1e-12 * std::max(1.0, std::abs(sigma))) {
    std::ostringstream os;
    os << "unphysical two-mode covariance: negative squared symplectic eigenvalue " << eta_sq
       << " (Sigma = " << sigma << ", det V = " << det << ")";
    throw DomainError(os.str());
  }
  return std::sqrt(std::max(0.0, eta_sq));
}

EntanglementReport log_negativity(const TwoModeCovariance& v) {
  EntanglementReport rep;
  rep.eta_minus = eta_minus(v);
  rep.entangled = rep.eta_minus < 0.5 - kBoundaryTol;
  rep.log_neg = rep.entangled ? -std::log(2.0 * rep.eta_minus) : 0.0;

  const double sigma = seralian(v);
  const double det = full_det(v.entries);
  // Same boundary band as eta_minus: the gap scales like 4 delta Sigma there.
  rep.simon_violated = (sigma - 0.25) - 4.0 * det > 4.0 * kBoundaryTol * std::max(1.0, sigma);
  return rep;
}

StandardForm duan_standard_form(const TwoModeCovariance& v) {
  const Mat4 twice = 2.0 * v.entries;
  const double det11 = twice.topLeftCorner<2, 2>().determinant();
  const double det22 = twice.bottomRightCorner<2, 2>().determinant();
  const double det12 = twice.topRightCorner<2, 2>().determinant();

  if (det11 < 1.0 - 1e-9 || det22 < 1.0 - 1e-9) {
    std::ostringstream os;
    os << "local states are unphysical: det(2V11) = " << det11 << ", det(2V22) = " << det22;
    throw DomainError(os.str());
  }

  StandardForm sf;
  sf.n = std::sqrt(det11);
  sf.m = std::sqrt(det22);
  const double nm = sf.n * sf.m;
  if (nm == 0.0) throw DomainError("standard form undefined for n m = 0");

  // c^2 and c'^2 are the roots of t^2 - S t + P with P = (c c')^2. S comes
  // from the local invariant tr(A J C J B J C^T J) = n m (c^2 + c'^2), which
  // stays accurate when the correlations are tiny.
  Mat2 j;
  j << 0.0, 1.0, -1.0, 0.0;
  const Mat2 a = twice.topLeftCorner<2, 2>();
  const Mat2 b = twice.bottomRightCorner<2, 2>();
  const Mat2 c = twice.topRightCorner<2, 2>();
  const double p = det12 * det12;
  const double s = std::max(0.0, (a * j * c * j * b * j * c.transpose() * j).trace() / nm);
  double disc = s * s - 4.0 * p;
  if (disc < 0.0) {
    if (disc < -1e-10 * std::max(1.0, s * s)) {
      std::ostringstream os;
      os << "standard-form discriminant is negative: " << disc;
      throw NumericalError(os.str());
    }
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  const double c_sq = std::max(0.0, 0.5 * (s + root));
  // Product of the roots is p; dividing avoids cancellation in the smaller one.
  const double cp_sq = c_sq > 0.0 ? std::max(0.0, p / c_sq) : 0.0;

  sf.c = std::sqrt(c_sq);
  sf.cprime = std::copysign(std::sqrt(cp_sq), det12);
  if (det12 == 0.0) sf.cprime = 0.0;
  return sf;
}

DuanReport duan_quantity(const TwoModeCovariance& v) {
  const auto sf = duan_standard_form(v);
  DuanReport rep;
  rep.n = sf.n;
  rep.m = sf.m;
  rep.c = sf.c;
  rep.cprime = sf.cprime;
  rep.degenerate = sf.n <= 1.0 + kDuanDegenerateTol || sf.m <= 1.0 + kDuanDegenerateTol;
  rep.c0_sq = rep.degenerate ? 1.0 : std::sqrt((sf.m - 1.0) / (sf.n - 1.0));
  rep.lhs = rep.c0_sq * sf.n + sf.m / rep.c0_sq - std::abs(sf.c) - std::abs(sf.cprime);
  rep.rhs = rep.c0_sq + 1.0 / rep.c0_sq;
  rep.ratio = rep.lhs / rep.rhs;
  rep.separable_consistent = rep.ratio >= 1.0;
  return rep;
}

}  // namespace hybrident
