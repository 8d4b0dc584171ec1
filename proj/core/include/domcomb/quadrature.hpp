#ifndef DOMCOMB_QUADRATURE_HPP_
#define DOMCOMB_QUADRATURE_HPP_

#include <functional>

namespace domcomb {

// Adaptive Simpson integration of f over [a, b] to the given absolute
// tolerance.  The integrand must be finite on [a, b].
double integrate_adaptive(const std::function<double(double)>& f, double a,
                          double b, double abs_tol, int max_depth = 48);

}  // namespace domcomb

#endif  // DOMCOMB_QUADRATURE_HPP_
