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

#ifndef DUPREC_DIVERSITY_HPP
#define DUPREC_DIVERSITY_HPP

#include <cstdint>
#include <vector>

#include "duprec/pattern.hpp"

namespace duprec
{
    // Emulated two-element receive diversity under per-direction point-source
    // exposure. SC keeps, per node and polarization, the complex field of the element
    // with the larger magnitude (ties go to element 1). MRC yields the root-sum-square
    // magnitude per polarization; the ideal phase compensation leaves a scalar pattern.

    struct ScCombined
    {
        Pattern pattern;
        std::vector<std::uint8_t> winner_theta; // selected element (1 or 2) per node
        std::vector<std::uint8_t> winner_phi;
    };

    ScCombined sc_pattern(const Pattern &h1, const Pattern &h2);

    Pattern mrc_pattern(const Pattern &h1, const Pattern &h2);

} // namespace duprec

#endif
