// SPDX-License-Identifier: Apache-2.0
//
// duprec - FDD duplex antenna pattern reciprocity analysis
// Copyright (C) 2026 duprec project contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "duprec/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace duprec
{
    Pattern hertzian_dipole(const SphericalGrid &grid, double axis_tilt_deg)
    {
        const double t = deg2rad(axis_tilt_deg);
        const double ax = std::sin(t), ay = 0.0, az = std::cos(t); // dipole axis in the x-z plane

        Pattern p;
        p.grid = grid;
        p.kind = PatternKind::complex_field;
        p.band = "dipole";
        p.e_theta.resize(grid.n_nodes());
        p.e_phi.resize(grid.n_nodes());
        for (std::size_t i = 0; i < grid.n_nodes(); ++i)
        {
            double theta = deg2rad(grid.node_theta_deg(i));
            double phi = deg2rad(grid.node_phi_deg(i));
            // transverse projection of the axis onto the local polarization basis
            double et = -(ax * std::cos(theta) * std::cos(phi) + ay * std::cos(theta) * std::sin(phi) -
                          az * std::sin(theta));
            double ep = -(-ax * std::sin(phi) + ay * std::cos(phi));
            p.e_theta[i] = {et, 0.0};
            p.e_phi[i] = {ep, 0.0};
        }
        return p;
    }

    namespace
    {
        // portable normal deviates: mt19937_64 raw draws mapped to (0,1) doubles,
        // Box-Muller transform; sequence is identical on every platform
        class NormalStream
        {
        public:
            explicit NormalStream(std::uint64_t seed) : eng_(seed) {}

            double operator()()
            {
                if (have_spare_)
                {
                    have_spare_ = false;
                    return spare_;
                }
                double u1 = next_unit();
                double u2 = next_unit();
                double r = std::sqrt(-2.0 * std::log(u1));
                spare_ = r * std::sin(2.0 * pi * u2);
                have_spare_ = true;
                return r * std::cos(2.0 * pi * u2);
            }

            std::complex<double> complex_normal()
            {
                double re = (*this)();
                double im = (*this)();
                return {re, im};
            }

        private:
            double next_unit()
            {
                // (0, 1): offset by half an ulp step so log() never sees zero
                return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
            }

            std::mt19937_64 eng_;
            double spare_ = 0.0;
            bool have_spare_ = false;
        };
    } // namespace

    HarmonicPair harmonic_pattern(std::uint64_t seed, int max_degree, double detune,
                                  const SphericalGrid &grid)
    {
        if (max_degree < 1)
            throw std::invalid_argument("harmonic_pattern: max_degree must be at least 1");
        if (detune < 0.0)
            throw std::invalid_argument("harmonic_pattern: detune must be non-negative");

        const int L = max_degree;
        // real spherical-harmonic basis: (L+1)^2 functions per polarization
        const std::size_t n_basis = static_cast<std::size_t>(L + 1) * static_cast<std::size_t>(L + 1);

        NormalStream rng(seed);
        std::vector<std::complex<double>> coeff_ul(2 * n_basis), perturb(2 * n_basis);
        for (auto &c : coeff_ul)
            c = rng.complex_normal();
        for (auto &c : perturb)
            c = rng.complex_normal();

        std::vector<std::complex<double>> coeff_dl(2 * n_basis);
        const double s = detune * detune_gain;
        for (std::size_t k = 0; k < coeff_dl.size(); ++k)
            coeff_dl[k] = coeff_ul[k] + s * perturb[k];

        auto evaluate = [&](const std::vector<std::complex<double>> &coeff, Pattern &p) {
            p.grid = grid;
            p.kind = PatternKind::complex_field;
            p.e_theta.assign(grid.n_nodes(), {});
            p.e_phi.assign(grid.n_nodes(), {});
            for (std::size_t i = 0; i < grid.n_nodes(); ++i)
            {
                double theta = deg2rad(grid.node_theta_deg(i));
                double phi = deg2rad(grid.node_phi_deg(i));
                for (int pol = 0; pol < 2; ++pol)
                {
                    const std::complex<double> *c = coeff.data() + static_cast<std::size_t>(pol) * n_basis;
                    std::complex<double> acc{0.0, 0.0};
                    std::size_t k = 0;
                    for (int l = 0; l <= L; ++l)
                    {
                        acc += c[k++] * std::sph_legendre(l, 0, theta);
                        for (int m = 1; m <= l; ++m)
                        {
                            double base = std::sph_legendre(l, m, theta);
                            acc += c[k++] * (base * std::cos(m * phi));
                            acc += c[k++] * (base * std::sin(m * phi));
                        }
                    }
                    (pol == 0 ? p.e_theta : p.e_phi)[i] = acc;
                }
            }
        };

        HarmonicPair pair;
        pair.ul.link = Link::ul;
        pair.dl.link = Link::dl;
        pair.ul.band = pair.dl.band = "synthetic";
        evaluate(coeff_ul, pair.ul);
        if (detune == 0.0)
        {
            pair.dl.grid = pair.ul.grid;
            pair.dl.kind = pair.ul.kind;
            pair.dl.e_theta = pair.ul.e_theta;
            pair.dl.e_phi = pair.ul.e_phi;
        }
        else
            evaluate(coeff_dl, pair.dl);
        return pair;
    }

} // namespace duprec
