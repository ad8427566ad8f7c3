#include "shockdecay/core.hpp"
#include "shockdecay/errors.hpp"

#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>

using namespace shockdecay;

namespace {
const Geometry kAll[] = {Geometry::Planar, Geometry::Cylindrical, Geometry::Spherical};
}

TEST_CASE("gas parameters")
{
    CHECK(GasParams().gamma() == 1.4);
    CHECK_THROWS_AS(GasParams(1.0), std::invalid_argument);
    CHECK_THROWS_AS(GasParams(0.5), std::invalid_argument);
    CHECK_THROWS_AS(GasParams(std::nan("")), std::invalid_argument);
}

TEST_CASE("geometry names and indices")
{
    CHECK(parse_geometry("planar") == Geometry::Planar);
    CHECK(parse_geometry("cylindrical") == Geometry::Cylindrical);
    CHECK(parse_geometry("2") == Geometry::Spherical);
    CHECK_THROWS_AS(parse_geometry("conical"), std::invalid_argument);
    CHECK(geometry_from_index(1) == Geometry::Cylindrical);
    CHECK_THROWS_AS(geometry_from_index(3), std::invalid_argument);
    for (Geometry g : kAll) CHECK(parse_geometry(geometry_name(g)) == g);
}

TEST_CASE("jumps at U = 1.2")
{
    const GasParams gas;
    const JumpSet js = jumps_from_mach(1.2, gas);
    CHECK(js.u_jump == doctest::Approx(0.305556).epsilon(1e-6));
    CHECK(js.p_jump == doctest::Approx(0.366667).epsilon(1e-6));
    CHECK(js.rho_jump == doctest::Approx(0.341615).epsilon(1e-6));
    CHECK(js.p_jump == doctest::Approx(1.2 * js.u_jump).epsilon(1e-15));

    // [rho] from [u] = U[rho]/(1+[rho]) by bisection.
    double lo = 0.0, hi = 10.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (1.2 * mid / (1.0 + mid) < js.u_jump ? lo : hi) = mid;
    }
    CHECK(js.rho_jump == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-13));
}

TEST_CASE("zero-strength and inadmissible shocks")
{
    const GasParams gas;
    const JumpSet js = jumps_from_mach(1.0, gas);
    CHECK(js.u_jump == 0.0);
    CHECK(js.p_jump == 0.0);
    CHECK(js.rho_jump == 0.0);
    CHECK_THROWS_AS(jumps_from_mach(0.999, gas), DomainError);
    CHECK_THROWS_AS(mach_from_p_jump(-1e-3, gas), DomainError);
    CHECK(mach_from_p_jump(0.0, gas) == 1.0);
}

TEST_CASE("weak-shock expansion of [p]")
{
    const GasParams gas;
    const double d = 1e-6;
    CHECK(jumps_from_mach(1.0 + d, gas).p_jump / d == doctest::Approx(4.0 / 2.4).epsilon(1e-5));
    const double p = 1e-7;
    CHECK((mach_from_p_jump(p, gas) - 1.0) / p == doctest::Approx(2.4 / 4.0).epsilon(1e-6));
}

TEST_CASE("mach/p_jump round trip")
{
    for (double g : {1.4, 5.0 / 3.0, 1.1}) {
        const GasParams gas(g);
        for (double U = 1.0; U <= 5.0; U += 0.0625) {
            CHECK(mach_from_p_jump(jumps_from_mach(U, gas).p_jump, gas) == doctest::Approx(U).epsilon(1e-12));
        }
        CHECK(jumps_from_mach(1.2, gas).p_jump ==
              doctest::Approx(jumps_from_mach(mach_from_p_jump(jumps_from_mach(1.2, gas).p_jump, gas), gas).p_jump)
                  .epsilon(1e-12));
    }
    CHECK(mach_from_p_jump(0.366667, GasParams()) == doctest::Approx(1.2).epsilon(1e-6));
}

TEST_CASE("dp/du along the Hugoniot")
{
    const GasParams gas;
    for (double U : {1.05, 1.3, 2.0, 4.0}) {
        const double e = 1e-6;
        const JumpSet a = jumps_from_mach(U - e, gas), b = jumps_from_mach(U + e, gas);
        const double fd = (b.p_jump - a.p_jump) / (b.u_jump - a.u_jump);
        CHECK(fd == doctest::Approx(2 * U * U * U / (U * U + 1)).epsilon(1e-6));
    }
}

TEST_CASE("mu and nu")
{
    const auto a = mu_nu(1.0, GasParams(1.4));
    CHECK(a.mu == doctest::Approx(2.4));
    CHECK(a.nu == doctest::Approx(2.4));
    const auto b = mu_nu(2.0, GasParams(1.4));
    CHECK(b.mu == doctest::Approx(3.6));
    CHECK(b.nu == doctest::Approx(10.8));
    const auto c = mu_nu(1.0, GasParams(5.0 / 3.0));
    CHECK(c.mu == doctest::Approx(8.0 / 3.0));
    CHECK(c.nu == doctest::Approx(8.0 / 3.0));
    for (double g : {1.01, 1.4, 3.0}) {
        const auto m = mu_nu(1.0, GasParams(g));
        CHECK(m.mu == g + 1.0);
        CHECK(m.nu == g + 1.0);
    }
}

TEST_CASE("ray tube functions")
{
    CHECK(psi(4, Geometry::Planar) == 1.0);
    CHECK(psi(4, Geometry::Cylindrical) == doctest::Approx(0.5));
    CHECK(psi(4, Geometry::Spherical) == doctest::Approx(0.25));
    CHECK_THROWS_AS(psi(0.5, Geometry::Planar), DomainError);

    for (Geometry g : kAll) CHECK(ray_integral(1.0, g) == 0.0);
    CHECK(ray_integral(4, Geometry::Cylindrical) == doctest::Approx(2.0));
    CHECK(ray_integral(std::exp(1.0), Geometry::Spherical) == doctest::Approx(1.0));
    CHECK_THROWS_AS(ray_integral(0.9, Geometry::Spherical), DomainError);

    using boost::math::quadrature::gauss_kronrod;
    for (Geometry g : kAll) {
        for (double x : {1.5, 3.0, 10.0, 100.0}) {
            const double q = gauss_kronrod<double, 31>::integrate([g](double s) { return psi(s, g); }, 1.0, x, 15, 1e-14);
            CHECK(std::abs(q - ray_integral(x, g)) < 1e-10);
            CHECK(inverse_ray_integral(ray_integral(x, g), g) == doctest::Approx(x).epsilon(1e-13));
        }
    }
}
