#include <doctest.h>

#include "helpers.hpp"
#include "liepoisson/verify.hpp"

using namespace liepoisson;

TEST_CASE("suite names")
{
    for (Suite s : {Suite::core, Suite::factorization, Suite::hamiltonian, Suite::noncompact, Suite::compact,
                    Suite::iso, Suite::group, Suite::all})
        CHECK(suite_from_string(to_string(s)) == s);
    CHECK_THROWS_AS(suite_from_string("bogus"), Error);
}

TEST_CASE("kappa field and finite differences")
{
    Rng rng = make_rng(71);
    const auto inst = SpaceInstance::grass(2, 1);
    const Mat e = identity(inst);
    const Mat x = sample(inst, Space::p, rng), k = sample(inst, Space::k, rng);
    CHECK(frob(kappa_field(inst, x, e).vec - x) < 1e-14);
    CHECK(frob(kappa_field(inst, k, e).vec) < 1e-14);
    CHECK(central_difference([](double t) { return t * t * t; }, 1e-3) == doctest::Approx(0.0).epsilon(1e-5));
    CHECK(central_difference([](double t) { return 3.0 * t + 1.0; }, 1e-3) == doctest::Approx(3.0));
    const Mat t = curve_tangent(inst, [&](double s) { return Mat(expm(s * x)); }, 1e-5);
    CHECK(frob(t - x) < 1e-8);
}

TEST_CASE("suites pass and are deterministic")
{
    SuiteOptions opt;
    opt.timing = false;
    for (const auto& name : {"grass:1,1", "group:2"}) {
        const auto inst = SpaceInstance::parse(name);
        const auto r = run_suite(Suite::all, inst, 5, 11, opt);
        for (const auto& c : r.checks) {
            INFO(name << " " << c.name << " " << c.max_residual << " tol " << c.tol);
            CHECK(c.pass);
        }
        CHECK(r.pass);
        CHECK_FALSE(r.vacuous);
        CHECK(r.to_json() == run_suite(Suite::all, inst, 5, 11, opt).to_json());
    }
    const auto inst = SpaceInstance::grass(2, 1);
    const auto a = run_suite(Suite::core, inst, 5, 1, opt), b = run_suite(Suite::core, inst, 5, 2, opt);
    CHECK(a.find("core.nijenhuis")->max_residual != b.find("core.nijenhuis")->max_residual);
}

TEST_CASE("vacuous run, overrides and scaling")
{
    const auto inst = SpaceInstance::grass(1, 1);
    const auto r = run_suite(Suite::core, inst, 0, 1);
    CHECK(r.vacuous);
    CHECK(r.pass);
    CHECK(r.to_json().find("warning") != std::string::npos);

    SuiteOptions opt;
    opt.tol_overrides["core.nijenhuis"] = 0.0;
    const auto f = run_suite(Suite::core, inst, 3, 1, opt);
    REQUIRE(f.find("core.nijenhuis"));
    CHECK(f.find("core.nijenhuis")->tol == 0.0);

    SuiteOptions scaled;
    scaled.tol_scale = 10.0;
    const auto base = run_suite(Suite::core, inst, 1, 1);
    const auto big = run_suite(Suite::core, inst, 1, 1, scaled);
    CHECK(big.find("core.hilbert_skew")->tol == doctest::Approx(10.0 * base.find("core.hilbert_skew")->tol));
    CHECK(base.find("missing") == nullptr);
}
