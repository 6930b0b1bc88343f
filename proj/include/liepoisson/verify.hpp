#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "liepoisson/hamiltonian.hpp"

namespace liepoisson {

/// [g0, {Ad(g0^{-1}) X}_p]; the flow is exp(eps X) g0 K.
TangentVector kappa_field(const SpaceInstance& inst, const Mat& X, const Mat& g0);

/// Invariant-formula exterior derivative of omega_{w1} on kappa(X), kappa(Y), kappa(Z) at g0.
double d_omega_fd(const SpaceInstance& inst, const Mat& w1, const Mat& g0, const Mat& X, const Mat& Y,
                  const Mat& Z, double step);

/// {c(0)^{-1} c'(0)}_p by central differences for a curve in G0.
Mat curve_tangent(const SpaceInstance& inst, const std::function<Mat(double)>& curve, double step);

/// Central difference of a scalar function.
double central_difference(const std::function<double(double)>& f, double step);

enum class Suite { core, factorization, hamiltonian, noncompact, compact, iso, group, all };

std::string to_string(Suite s);
/// Throws Error on an unknown name.
Suite suite_from_string(const std::string& s);

struct CheckRecord {
    std::string name;
    double max_residual = 0.0;
    double tol = 0.0;
    bool pass = true;
};

struct SuiteOptions {
    double step = 1e-4;
    /// Multiplies every tolerance.
    double tol_scale = 1.0;
    /// Per-check tolerances replacing the defaults, keyed by check name.
    std::map<std::string, double> tol_overrides;
    /// When false the report carries seconds = 0, so equal inputs give byte-identical JSON.
    bool timing = true;
};

struct SuiteReport {
    std::string suite;
    std::string instance;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    SuiteOptions options;
    std::vector<CheckRecord> checks;
    /// Measured constants worth logging, e.g. the momentum reconciliation factor.
    std::vector<std::pair<std::string, double>> measurements;
    bool vacuous = false;
    bool pass = true;
    double seconds = 0.0;

    const CheckRecord* find(const std::string& name) const;
    std::string to_json(int indent = 2) const;
};

/// LIEPOISSON_TOL_SCALE, default 1; throws Error on a malformed or non-positive value.
double tol_scale_from_env();

/// Runs the invariants of the named module(s); failures are recorded, never thrown.
SuiteReport run_suite(Suite suite, const SpaceInstance& inst, int samples, std::uint64_t seed,
                      const SuiteOptions& options = {});

} // namespace liepoisson
