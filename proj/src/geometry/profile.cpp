#include "qlm/geometry/profile.hpp"

namespace qlm::geometry {

double SpherePolynomial::value(const Vec3& x) const {
  const Eigen::Matrix3d q = 0.5 * (quadratic + quadratic.transpose());
  return constant + linear.dot(x) + x.dot(q * x);
}

Vec3 SpherePolynomial::gradient(const Vec3& x) const {
  return linear + (quadratic + quadratic.transpose()) * x;
}

Eigen::Matrix3d SpherePolynomial::hessian() const {
  return quadratic + quadratic.transpose();
}

bool SpherePolynomial::is_zero() const {
  return constant == 0.0 && linear.isZero(0.0) && quadratic.isZero(0.0);
}

SpherePolynomial SpherePolynomial::constant_value(double c) {
  SpherePolynomial p;
  p.constant = c;
  return p;
}

}  // namespace qlm::geometry
