#include <doctest.h>

#include <cmath>

#include "duprec/scalar_metrics.hpp"

using namespace duprec;

namespace
{
    Pattern flat(const SphericalGrid &g, double m_theta, double m_phi)
    {
        Pattern p;
        p.grid = g;
        p.kind = PatternKind::scalar;
        p.e_theta.assign(g.n_nodes(), {m_theta, 0.0});
        p.e_phi.assign(g.n_nodes(), {m_phi, 0.0});
        return p;
    }
}

TEST_CASE("ipb is a perfect sphere for reciprocal patterns")
{
    auto g = build_grid(15.0, 15.0, 180.0);
    auto sphere = Region::full_measured();
    Pattern ul = flat(g, 1.0, 0.5);
    ul.e_theta[5] = {1.7, 0.0};

    // DL equals UL after inversion: raw EIS is the dB negation of the UL gains
    Pattern dl = ul;
    dl.convention = PowerConvention::eis_raw;
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        dl.e_theta[i] = {1.0 / std::abs(ul.e_theta[i]), 0.0};
        dl.e_phi[i] = {1.0 / std::abs(ul.e_phi[i]), 0.0};
    }
    auto f = ipb(ul, dl, sphere, PowerComponent::theta_pol);
    for (std::size_t i = 1; i < g.n_nodes(); ++i)
        CHECK(f.value[i] == doctest::Approx(f.value[0]).epsilon(1e-12));

    // a -10 dB DL dent shows up as a 10 dB IPB deviation
    Pattern dent = invert_eis(dl);
    dent.e_theta[7] *= std::pow(10.0, -10.0 / 20.0);
    auto fd = ipb(ul, dent, sphere, PowerComponent::theta_pol);
    CHECK(fd.value[7] - fd.value[6] == doctest::Approx(10.0).epsilon(1e-9));

    // constant scaling shifts IPB, shape unchanged
    Pattern scaled = dent;
    for (auto &v : scaled.e_theta)
        v *= 3.0;
    auto fs = ipb(ul, scaled, sphere, PowerComponent::theta_pol);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK(fs.value[i] - fd.value[i] == doctest::Approx(fs.value[0] - fd.value[0]).epsilon(1e-9));
}

TEST_CASE("delta_ip vanishes for proportional patterns")
{
    auto g = build_grid(15.0, 15.0, 180.0);
    auto sphere = Region::full_measured();
    Pattern ul = flat(g, 1.0, 0.3);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        ul.e_theta[i] = {1.0 + 0.2 * std::sin(0.1 * static_cast<double>(i)), 0.0};
    Pattern dl = ul;
    for (auto &v : dl.e_theta)
        v *= 2.7;
    for (auto &v : dl.e_phi)
        v *= 2.7;
    auto f = delta_ip(ul, dl, sphere);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK(std::abs(f.value[i]) < 1e-12);
}

TEST_CASE("delta_ip two-node hand oracle")
{
    // two equal-area nodes: the theta = 90 ring of a two-node azimuth grid
    auto g = build_grid(45.0, 180.0, 180.0);
    auto region = Region::custom(90.0, 90.0);
    Pattern ul = flat(g, 1.0, 0.0);
    Pattern dl = flat(g, 1.0, 0.0);
    std::size_t a = g.node_index(2, 0), b = g.node_index(2, 1);
    dl.e_theta[a] = {std::sqrt(2.0), 0.0};
    dl.e_theta[b] = {std::sqrt(0.5), 0.0};
    auto f = delta_ip(ul, dl, region, PowerComponent::theta_pol);
    CHECK(f.value[a] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(f.value[b] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(f.mask[a]);
    CHECK_FALSE(f.mask[0]);

    Pattern raw = dl;
    raw.convention = PowerConvention::eis_raw;
    CHECK_THROWS_AS(delta_ip(ul, raw, region), std::invalid_argument);
}

TEST_CASE("delta_fb: zero for identical links, +40 dB for opposing focus")
{
    auto g = build_grid(15.0, 15.0, 180.0);
    auto girdle = Region::girdle();

    Pattern ul = flat(g, 1e-3, 1e-3);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        ul.e_theta[i] = {1e-3 + 1e-4 * static_cast<double>(i % 11), 0.0};
    auto r0 = delta_fb(ul, ul, girdle, PowerComponent::theta_pol);
    CHECK(r0.delta_fb_db == doctest::Approx(0.0).epsilon(1e-12));

    // DL looks at phi = 90 (0 dB) with a -20 dB back lobe; UL mirrors it
    Pattern dl = flat(g, 1e-3, 1e-3);
    Pattern ul2 = flat(g, 1e-3, 1e-3);
    std::size_t front = 0, back = 0;
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        if (g.node_theta_deg(i) == 75.0 && g.node_phi_deg(i) == 90.0)
            front = i;
        if (g.node_theta_deg(i) == 75.0 && g.node_phi_deg(i) == 270.0)
            back = i;
    }
    dl.e_theta[front] = {1.0, 0.0};
    dl.e_theta[back] = {0.1, 0.0}; // -20 dB power
    ul2.e_theta[front] = {0.1, 0.0};
    ul2.e_theta[back] = {1.0, 0.0};
    auto r = delta_fb(ul2, dl, girdle, PowerComponent::theta_pol);
    CHECK(r.phi_max_dl_deg == 90.0);
    CHECK(r.delta_fb_db == doctest::Approx(40.0).epsilon(1e-9));

    // swap flips the sign when the argmax azimuth coincides
    Pattern dl_shared = dl;
    Pattern ul_shared = flat(g, 1e-3, 1e-3);
    ul_shared.e_theta[front] = {0.5, 0.0};
    ul_shared.e_theta[back] = {0.25, 0.0};
    auto fwd = delta_fb(ul_shared, dl_shared, girdle, PowerComponent::theta_pol);
    auto rev = delta_fb(dl_shared, ul_shared, girdle, PowerComponent::theta_pol);
    CHECK(fwd.delta_fb_db == doctest::Approx(-rev.delta_fb_db).epsilon(1e-9));

    CHECK(std::abs(r.delta_fb_db) >= delta_fb_high_db); // the Table-I "high" flag regime
}

TEST_CASE("xpd values and sentinels")
{
    auto g = build_grid(90.0, 90.0, 180.0);
    auto sphere = Region::full_measured();

    auto f_eq = xpd(flat(g, 1.0, 1.0), sphere);
    CHECK(f_eq.value[1] == doctest::Approx(0.0));

    auto f_2x = xpd(flat(g, std::sqrt(2.0), 1.0), sphere);
    CHECK(f_2x.value[1] == doctest::Approx(3.0102999566398120));

    auto f_pure = xpd(flat(g, 1.0, 0.0), sphere);
    CHECK(std::isinf(f_pure.value[1]));
    CHECK(f_pure.value[1] > 0.0);
    CHECK(f_pure.mask[1]); // sentinel kept in the field, dropped by aggregation
}

TEST_CASE("tilt angles from XPD")
{
    auto g = build_grid(90.0, 90.0, 180.0);
    auto sphere = Region::full_measured();

    CHECK(tilt(flat(g, 1.0, 1.0), sphere).value[1] == doctest::Approx(45.0));
    CHECK(tilt(flat(g, 1.0, 0.0), sphere).value[1] == doctest::Approx(90.0));
    CHECK(tilt(flat(g, 0.0, 1.0), sphere).value[1] == doctest::Approx(0.0));
    // XPD = 3 dB
    CHECK(tilt(flat(g, std::pow(10.0, 0.15), 1.0), sphere).value[1] ==
          doctest::Approx(54.70357542922022).epsilon(1e-12));

    auto f = tilt(flat(g, 0.0, 0.0), sphere);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK_FALSE(f.mask[i]); // dead directions are excluded, not errors
}

TEST_CASE("delta_psi bounds and extremes")
{
    auto g = build_grid(30.0, 30.0, 180.0);
    auto sphere = Region::full_measured();

    Pattern a = flat(g, 0.7, 0.7);
    auto same = delta_psi(a, a, sphere);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK(same.value[i] == doctest::Approx(0.0));

    auto ortho = delta_psi(flat(g, 1.0, 0.0), flat(g, 0.0, 1.0), sphere);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK(ortho.value[i] == doctest::Approx(90.0));

    Pattern b = flat(g, 1.3, 0.4);
    auto f = delta_psi(a, b, sphere);
    auto tu = tilt(a, sphere);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        CHECK(f.value[i] >= 0.0);
        CHECK(f.value[i] <= 90.0);
        CHECK(tu.value[i] >= 0.0);
        CHECK(tu.value[i] <= 90.0);
    }
}

TEST_CASE("tilt mismatch loss anchor points")
{
    CHECK(tilt_mismatch_loss_db(24.0) == doctest::Approx(0.7853967492139409).epsilon(1e-12));
    CHECK(tilt_mismatch_loss_db(56.0) == doctest::Approx(5.048766974255063).epsilon(1e-12));
}
