#include <doctest.h>

#include <cmath>

#include "duprec/correlation.hpp"
#include "duprec/diversity.hpp"
#include "duprec/synth.hpp"

using namespace duprec;

using cd = std::complex<double>;

TEST_CASE("selection combining picks the stronger element per polarization")
{
    auto g = build_grid(15.0, 15.0, 180.0);
    auto h1 = harmonic_pattern(101, 5, 0.0, g).ul;
    auto h2 = harmonic_pattern(202, 5, 0.0, g).ul;

    SUBCASE("a silent second element leaves the first untouched")
    {
        Pattern zero = h2;
        for (auto &v : zero.e_theta)
            v = {};
        for (auto &v : zero.e_phi)
            v = {};
        auto sc = sc_pattern(h1, zero);
        CHECK(sc.pattern.e_theta == h1.e_theta);
        CHECK(sc.pattern.e_phi == h1.e_phi);
        for (auto w : sc.winner_theta)
            CHECK(w == 1);
    }

    SUBCASE("ties go to element 1")
    {
        auto sc = sc_pattern(h1, h1);
        CHECK(sc.pattern.e_theta == h1.e_theta);
        for (std::size_t i = 0; i < g.n_nodes(); ++i)
        {
            CHECK(sc.winner_theta[i] == 1);
            CHECK(sc.winner_phi[i] == 1);
        }
    }

    SUBCASE("per-node magnitude maximum, complex value retained")
    {
        auto sc = sc_pattern(h1, h2);
        for (std::size_t i = 0; i < g.n_nodes(); ++i)
        {
            double m1 = std::abs(h1.e_theta[i]), m2 = std::abs(h2.e_theta[i]);
            CHECK(std::abs(sc.pattern.e_theta[i]) == std::max(m1, m2));
            CHECK(sc.pattern.e_theta[i] == (m2 > m1 ? h2.e_theta[i] : h1.e_theta[i]));
            CHECK(sc.winner_theta[i] == (m2 > m1 ? 2 : 1));
        }
    }
}

TEST_CASE("maximum ratio combining gives the root-sum-square scalar pattern")
{
    auto g = build_grid(15.0, 15.0, 180.0);
    auto h1 = harmonic_pattern(303, 5, 0.0, g).ul;

    SUBCASE("silent second element reduces to |h1|")
    {
        Pattern zero = h1;
        for (auto &v : zero.e_theta)
            v = {};
        for (auto &v : zero.e_phi)
            v = {};
        auto m = mrc_pattern(h1, zero);
        CHECK(m.kind == PatternKind::scalar);
        for (std::size_t i = 0; i < g.n_nodes(); ++i)
        {
            CHECK(m.e_theta[i].real() == doctest::Approx(std::abs(h1.e_theta[i])).epsilon(1e-15));
            CHECK(m.e_theta[i].imag() == 0.0);
        }
    }

    SUBCASE("identical elements gain sqrt(2)")
    {
        auto m = mrc_pattern(h1, h1);
        for (std::size_t i = 0; i < g.n_nodes(); ++i)
            CHECK(m.e_phi[i].real() ==
                  doctest::Approx(std::sqrt(2.0) * std::abs(h1.e_phi[i])).epsilon(1e-12));
    }

    SUBCASE("MRC bounds and dominance over SC")
    {
        auto h2 = harmonic_pattern(404, 5, 0.0, g).ul;
        auto m = mrc_pattern(h1, h2);
        auto sc = sc_pattern(h1, h2);
        for (std::size_t i = 0; i < g.n_nodes(); ++i)
        {
            double top = std::max(std::abs(h1.e_theta[i]), std::abs(h2.e_theta[i]));
            CHECK(m.e_theta[i].real() >= top - 1e-15);
            CHECK(m.e_theta[i].real() <= std::sqrt(2.0) * top + 1e-15);
            CHECK(m.e_theta[i].real() >= std::abs(sc.pattern.e_theta[i]) - 1e-15);
            double topp = std::max(std::abs(h1.e_phi[i]), std::abs(h2.e_phi[i]));
            CHECK(m.e_phi[i].real() >= topp - 1e-15);
            CHECK(m.e_phi[i].real() <= std::sqrt(2.0) * topp + 1e-15);
        }
    }
}

TEST_CASE("SC against the UL element splits the correlation map by winner region")
{
    auto g = build_grid(15.0, 15.0, 180.0);

    // element 1: a duplex pair with mild detune (high co-element correlation)
    auto el1 = harmonic_pattern(11, 5, 0.005, g);
    // element 2: independent pattern, phase-center shifted, dominant in the north
    auto el2dl = harmonic_pattern(22, 5, 0.0, g).ul;
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        double theta = deg2rad(g.node_theta_deg(i));
        cd translation = std::polar(1.0, 40.0 * std::cos(theta)); // ~6 wavelength offset
        double taper = g.node_theta_deg(i) < 90.0 ? 4.0 : 0.05;
        el2dl.e_theta[i] *= taper * translation;
        el2dl.e_phi[i] *= taper * translation;
    }

    auto sc = sc_pattern(el1.dl, el2dl);
    auto map = correlation_map(el1.ul, sc.pattern, 15.0, 3.0, CorrelationMode::complex_field, 4);

    // winner regions: element 2 rules the north, element 1 the south
    std::size_t north2 = 0, north_n = 0, south1 = 0, south_n = 0;
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        if (g.node_theta_deg(i) < 60.0)
        {
            ++north_n;
            north2 += sc.winner_theta[i] == 2;
        }
        if (g.node_theta_deg(i) > 120.0)
        {
            ++south_n;
            south1 += sc.winner_theta[i] == 1;
        }
    }
    CHECK(static_cast<double>(north2) / static_cast<double>(north_n) > 0.9);
    CHECK(static_cast<double>(south1) / static_cast<double>(south_n) > 0.9);

    // correlation is high where the UL element wins, low where the other does
    double mean1 = 0.0, mean2 = 0.0;
    std::size_t n1 = 0, n2 = 0;
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        double r = std::abs(map.rho[i]);
        if (sc.winner_theta[i] == 1 && sc.winner_phi[i] == 1)
        {
            mean1 += r;
            ++n1;
        }
        else if (sc.winner_theta[i] == 2 && sc.winner_phi[i] == 2)
        {
            mean2 += r;
            ++n2;
        }
    }
    REQUIRE(n1 > 10);
    REQUIRE(n2 > 10);
    mean1 /= static_cast<double>(n1);
    mean2 /= static_cast<double>(n2);
    CHECK(mean1 > mean2 + 0.3);
    CHECK(mean1 > 0.8);
}
