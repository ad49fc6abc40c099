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

#ifndef DUPREC_SYNTH_HPP
#define DUPREC_SYNTH_HPP

#include <cstdint>

#include "duprec/pattern.hpp"

namespace duprec
{
    // Analytic and seeded-random synthetic patterns. These serve as test oracles
    // (the dipole has an exact closed form) and as duplex-divergence emulators whose
    // decorrelation grows with the detune parameter.

    // Hertzian dipole with its axis tilted by `axis_tilt_deg` from +z within the x-z
    // plane. In the dipole frame E_theta' = sin(theta'); components are expressed in
    // the grid's local (theta^, phi^) basis. Pole nodes use the phi = 0 basis.
    Pattern hertzian_dipole(const SphericalGrid &grid, double axis_tilt_deg);

    struct HarmonicPair
    {
        Pattern ul;
        Pattern dl;
    };

    // Perturbation scale per unit detune for the DL coefficients.
    constexpr double detune_gain = 20.0;

    // Identifier of the random stream (recorded in run summaries so fixtures can be
    // reproduced in other languages).
    constexpr const char *synth_rng_id = "mt19937_64+box-muller";

    // Seeded band-limited random expansion in spherical harmonics up to `max_degree`,
    // independent for the two polarizations. The DL coefficients are the UL ones plus
    // a Gaussian perturbation scaled by detune*detune_gain; the perturbation draw is
    // a deterministic function of the seed alone, so sweeping detune moves along a
    // fixed direction in coefficient space and detune = 0 reproduces the UL pattern
    // exactly.
    HarmonicPair harmonic_pattern(std::uint64_t seed, int max_degree, double detune,
                                  const SphericalGrid &grid);

} // namespace duprec

#endif
