#include "liepoisson/verify.hpp"

namespace liepoisson {

TangentVector kappa_field(const SpaceInstance& inst, const Mat& X, const Mat& g0)
{
    return {g0, kappa(inst, X, g0)};
}

double central_difference(const std::function<double(double)>& f, double step)
{
    return (f(step) - f(-step)) / (2.0 * step);
}

Mat curve_tangent(const SpaceInstance& inst, const std::function<Mat(double)>& curve, double step)
{
    const Mat c0 = curve(0.0);
    const Mat d = (curve(step) - curve(-step)) / (2.0 * step);
    return project(inst, Space::p, inverse(c0) * d);
}

double d_omega_fd(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& X, const Mat& Y,
                  const Mat& Z, double step)
{
    if (!(step >= 1e-6 && step <= 1e-3))
        throw Error("d_omega_fd: step outside [1e-6, 1e-3]");
    auto pair_at = [&](const Mat& g, const Mat& A, const Mat& B) {
        return omega(inst, w1, kappa_field(inst, A, g), kappa_field(inst, B, g));
    };
    auto directional = [&](const Mat& A, const Mat& B, const Mat& C) {
        return central_difference([&](double e) { return pair_at(expm(e * A) * g0, B, C); }, step);
    };
    const double flows = directional(X, Y, Z) + directional(Y, Z, X) + directional(Z, X, Y);
    const double brackets =
        pair_at(g0, bracket(X, Y), Z) + pair_at(g0, bracket(Y, Z), X) + pair_at(g0, bracket(Z, X), Y);
    return flows + brackets;
}

} // namespace liepoisson
