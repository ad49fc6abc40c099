#include <doctest.h>

#include <cmath>
#include <sstream>

#include "duprec/pattern.hpp"
#include "duprec/scalar_metrics.hpp"

using namespace duprec;

namespace
{
    Pattern uniform_pattern(const SphericalGrid &g, std::complex<double> et, std::complex<double> ep,
                            PatternKind kind = PatternKind::complex_field)
    {
        Pattern p;
        p.grid = g;
        p.kind = kind;
        p.e_theta.assign(g.n_nodes(), et);
        p.e_phi.assign(g.n_nodes(), ep);
        return p;
    }
}

TEST_CASE("complex CSV row parses into the right node")
{
    std::istringstream in(
        "# link: DL\n"
        "# band: LTE1800\n"
        "# kind: complex\n"
        "# convention: gain\n"
        "theta_deg,phi_deg,etheta_re,etheta_im,ephi_re,ephi_im\n"
        "0,0,1,0,0,0\n"
        "90,0,0.5,0.1,-0.2,0.3\n"
        "90,180,0,1,0,0\n"
        "180,0,1,0,0,0\n");
    auto p = load_pattern(in, "t");
    CHECK(p.link == Link::dl);
    CHECK(p.band == "LTE1800");
    CHECK(p.kind == PatternKind::complex_field);
    CHECK(p.grid.n_nodes() == 4); // 90 deg spacings inferred, 1 ring x 2 + 2 poles
    std::size_t node = p.grid.node_index(1, 0);
    CHECK(p.e_theta[node] == std::complex<double>(0.5, 0.1));
    CHECK(p.e_phi[node] == std::complex<double>(-0.2, 0.3));
}

TEST_CASE("scalar EIS file is flagged raw and stores sqrt-power magnitudes")
{
    std::istringstream in(
        "# link: DL\n"
        "# band: UMTS900\n"
        "# kind: scalar\n"
        "# convention: eis\n"
        "theta_deg,phi_deg,ptheta_db,pphi_db\n"
        "0,0,-95,-95\n"
        "90,0,-95,-101\n"
        "90,180,-95,-95\n"
        "180,0,-95,-95\n");
    auto p = load_pattern(in, "t");
    CHECK(p.convention == PowerConvention::eis_raw);
    CHECK(p.kind == PatternKind::scalar);
    std::size_t node = p.grid.node_index(1, 0);
    CHECK(10.0 * std::log10(p.p_theta(node)) == doctest::Approx(-95.0));
    CHECK(10.0 * std::log10(p.p_phi(node)) == doctest::Approx(-101.0));
}

TEST_CASE("missing node is reported by name")
{
    std::istringstream in(
        "theta_deg,phi_deg,ptheta_db,pphi_db\n"
        "0,0,0,0\n"
        "90,0,0,0\n"
        "180,0,0,0\n"); // (90, 180) absent
    CHECK_THROWS_WITH_AS(load_pattern(in, "t"),
                         doctest::Contains("missing node"), std::runtime_error);
    std::istringstream in2(
        "theta_deg,phi_deg,ptheta_db,pphi_db\n"
        "0,0,0,0\n"
        "90,0,0,0\n"
        "90,180,0,0\n"
        "180,0,0,0\n"
        "90,180,0,0\n"); // duplicate
    CHECK_THROWS_WITH_AS(load_pattern(in2, "t"), doctest::Contains("duplicate"), std::runtime_error);
    std::istringstream in3(
        "theta_deg,phi_deg,ptheta_db,pphi_db\n"
        "0,0,0,0\n"
        "90,0,zero,0\n"
        "90,180,0,0\n"
        "180,0,0,0\n");
    CHECK_THROWS_WITH_AS(load_pattern(in3, "t"), doctest::Contains("t:3"), std::runtime_error);
}

TEST_CASE("pattern CSV round-trips")
{
    auto g = build_grid(30.0, 30.0, 180.0);
    Pattern p = uniform_pattern(g, {0.25, -1.5}, {2.0, 0.125});
    p.band = "LTE800";
    p.link = Link::ul;
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        p.e_theta[i] += std::complex<double>(0.001 * static_cast<double>(i), 0.0);

    std::ostringstream out;
    save_pattern(p, out);
    std::istringstream in(out.str());
    auto q = load_pattern(in, "rt");
    CHECK(q.grid.same_layout(g));
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        CHECK(q.e_theta[i].real() == doctest::Approx(p.e_theta[i].real()).epsilon(1e-8));
        CHECK(q.e_phi[i].imag() == doctest::Approx(p.e_phi[i].imag()).epsilon(1e-8));
    }
}

TEST_CASE("EIS inversion negates dB and is an involution")
{
    auto g = build_grid(90.0, 90.0, 180.0);
    Pattern p = uniform_pattern(g, {1.0, 0.0}, {1.0, 0.0}, PatternKind::scalar);
    p.convention = PowerConvention::eis_raw;
    // -10 dB relative EIS at one node
    p.e_theta[1] = {std::pow(10.0, -10.0 / 20.0), 0.0};

    bool did = false;
    auto q = invert_eis(p, &did);
    CHECK(did);
    CHECK(q.convention == PowerConvention::gain_proportional);
    CHECK(10.0 * std::log10(q.p_theta(1)) == doctest::Approx(10.0)); // negated
    CHECK(q.p_theta(2) == doctest::Approx(1.0));                     // uniform stays uniform

    // two nodes 6 dB apart invert to -6 dB apart
    Pattern r = p;
    r.e_theta[2] = {std::pow(10.0, -4.0 / 20.0), 0.0};
    r.e_theta[3] = {std::pow(10.0, -10.0 / 20.0), 0.0};
    auto ri = invert_eis(r);
    double d_before = 10.0 * std::log10(r.p_theta(2) / r.p_theta(3));
    double d_after = 10.0 * std::log10(ri.p_theta(2) / ri.p_theta(3));
    CHECK(d_before == doctest::Approx(6.0));
    CHECK(d_after == doctest::Approx(-6.0));

    // no-op on gain-proportional input
    bool again = true;
    auto qq = invert_eis(q, &again);
    CHECK_FALSE(again);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK(qq.e_theta[i] == q.e_theta[i]);

    // involution up to the reference constant
    auto back = invert_eis(Pattern{[&] { auto t = q; t.convention = PowerConvention::eis_raw; return t; }()});
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK(std::abs(back.e_theta[i] - p.e_theta[i]) < 1e-12);
}

TEST_CASE("resample: identity, midpoints, constants, restriction")
{
    auto src = build_grid(30.0, 30.0, 180.0);
    auto fine = build_grid(15.0, 15.0, 180.0);

    Pattern p = uniform_pattern(src, {1.0, 0.0}, {0.5, 0.0}, PatternKind::scalar);

    SUBCASE("identical grids give a bit-identical pattern")
    {
        auto q = resample(p, src);
        CHECK(q.e_theta == p.e_theta);
        CHECK(q.e_phi == p.e_phi);
    }

    SUBCASE("linear midpoint between adjacent phi nodes")
    {
        // magnitudes 1 and 3 at (90, 0) and (90, 30): midpoint (90, 15) -> 2
        Pattern s = p;
        std::size_t i0 = src.node_index(3, 0), i1 = src.node_index(3, 1);
        s.e_theta[i0] = {1.0, 0.0};
        s.e_theta[i1] = {3.0, 0.0};
        auto q = resample(s, fine);
        std::size_t mid = 0;
        for (std::size_t i = 0; i < fine.n_nodes(); ++i)
            if (fine.node_theta_deg(i) == 90.0 && fine.node_phi_deg(i) == 15.0)
                mid = i;
        CHECK(q.e_theta[mid].real() == doctest::Approx(2.0).epsilon(1e-15));
    }

    SUBCASE("constants survive exactly; source nodes reproduce exactly")
    {
        auto q = resample(p, fine);
        for (std::size_t i = 0; i < fine.n_nodes(); ++i)
        {
            CHECK(q.e_theta[i] == std::complex<double>(1.0, 0.0));
            CHECK(q.e_phi[i] == std::complex<double>(0.5, 0.0));
        }
        Pattern noisy = p;
        for (std::size_t i = 0; i < src.n_nodes(); ++i)
            noisy.e_theta[i] = {1.0 + 0.01 * static_cast<double>(i % 7), 0.0};
        auto r = resample(noisy, fine);
        for (std::size_t i = 0; i < fine.n_nodes(); ++i)
        {
            double t = fine.node_theta_deg(i), f = fine.node_phi_deg(i);
            if (std::fmod(t, 30.0) == 0.0 && std::fmod(f, 30.0) == 0.0)
            {
                auto it = static_cast<std::size_t>(t / 30.0);
                auto ip = static_cast<std::size_t>(f / 30.0);
                CHECK(r.e_theta[i] == noisy.e_theta[src.node_index(it, ip)]);
            }
        }
    }

    SUBCASE("coarsening onto every n-th node")
    {
        Pattern dense = uniform_pattern(fine, {2.0, 0.0}, {1.0, 0.0}, PatternKind::scalar);
        auto q = resample(dense, src);
        CHECK(q.grid.same_layout(src));
        for (auto &v : q.e_theta)
            CHECK(v == std::complex<double>(2.0, 0.0));
    }

    SUBCASE("incommensurate spacings are rejected")
    {
        auto odd = build_grid(20.0, 20.0, 180.0);
        CHECK_THROWS_AS(resample(p, odd), std::invalid_argument);
        auto deeper = build_grid(30.0, 30.0, 180.0);
        auto shallow = build_grid(30.0, 30.0, 90.0);
        Pattern ps = uniform_pattern(shallow, {1, 0}, {1, 0}, PatternKind::scalar);
        CHECK_THROWS_AS(resample(ps, deeper), std::invalid_argument); // domain grows
    }
}

TEST_CASE("normalize: max scaling, idempotence, mean mode")
{
    auto g = build_grid(30.0, 30.0, 180.0);
    Pattern p = uniform_pattern(g, {1.0, 0.0}, {1.0, 0.0}, PatternKind::scalar);
    std::size_t hot = g.node_index(3, 0);
    p.e_theta[hot] = {std::sqrt(3.0), 0.0}; // total power 4 at the hot node

    auto sphere = Region::full_measured();
    auto n1 = normalize(p, sphere, NormalizeMode::max_total);
    CHECK(n1.p_total(hot) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(n1.p_total(0) == doctest::Approx(0.5).epsilon(1e-12)); // scaled by 1/4

    auto n2 = normalize(n1, sphere, NormalizeMode::max_total);
    CHECK(n2.e_theta == n1.e_theta); // idempotent
    CHECK(n2.e_phi == n1.e_phi);

    Pattern u = uniform_pattern(g, {2.0, 0.0}, {0.0, 0.0}, PatternKind::scalar);
    auto nm = normalize(u, sphere, NormalizeMode::mean_total);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        CHECK(nm.p_total(i) == doctest::Approx(1.0).epsilon(1e-12));

    Pattern z = uniform_pattern(g, {0.0, 0.0}, {0.0, 0.0}, PatternKind::scalar);
    CHECK_THROWS_AS(normalize(z, sphere, NormalizeMode::max_total), std::invalid_argument);
}

TEST_CASE("normalization leaves ratio metrics unchanged")
{
    auto g = build_grid(30.0, 30.0, 180.0);
    Pattern ul = uniform_pattern(g, {1.0, 0.0}, {0.5, 0.0}, PatternKind::scalar);
    Pattern dl = ul;
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
    {
        ul.e_theta[i] = {1.0 + 0.1 * static_cast<double>(i % 5), 0.0};
        dl.e_theta[i] = {1.3 + 0.2 * static_cast<double>(i % 3), 0.0};
    }
    auto sphere = Region::full_measured();
    auto dip_before = delta_ip(ul, dl, sphere);
    auto psi_before = delta_psi(ul, dl, sphere);
    auto uln = normalize(ul, sphere, NormalizeMode::max_total);
    auto dln = normalize(dl, sphere, NormalizeMode::mean_total);
    auto dip_after = delta_ip(uln, dln, sphere);
    auto psi_after = delta_psi(uln, dln, sphere);
    for (std::size_t i = 0; i < g.n_nodes(); ++i)
        if (dip_before.mask[i])
        {
            CHECK(dip_after.value[i] == doctest::Approx(dip_before.value[i]).epsilon(1e-12));
            CHECK(psi_after.value[i] == doctest::Approx(psi_before.value[i]).epsilon(1e-12));
        }
}
