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

#include "duprec/diversity.hpp"

#include <cmath>
#include <stdexcept>

namespace duprec
{
    static void require_same_grid(const Pattern &a, const Pattern &b)
    {
        if (!a.grid.same_layout(b.grid))
            throw std::invalid_argument("element patterns live on different grids; resample first");
    }

    ScCombined sc_pattern(const Pattern &h1, const Pattern &h2)
    {
        require_same_grid(h1, h2);
        ScCombined out;
        out.pattern = h1;
        out.winner_theta.assign(h1.grid.n_nodes(), 1);
        out.winner_phi.assign(h1.grid.n_nodes(), 1);
        for (std::size_t i = 0; i < h1.e_theta.size(); ++i)
        {
            if (std::abs(h2.e_theta[i]) > std::abs(h1.e_theta[i]))
            {
                out.pattern.e_theta[i] = h2.e_theta[i];
                out.winner_theta[i] = 2;
            }
            if (std::abs(h2.e_phi[i]) > std::abs(h1.e_phi[i]))
            {
                out.pattern.e_phi[i] = h2.e_phi[i];
                out.winner_phi[i] = 2;
            }
        }
        return out;
    }

    Pattern mrc_pattern(const Pattern &h1, const Pattern &h2)
    {
        require_same_grid(h1, h2);
        Pattern out = h1;
        out.kind = PatternKind::scalar;
        for (std::size_t i = 0; i < h1.e_theta.size(); ++i)
        {
            out.e_theta[i] = {std::sqrt(std::norm(h1.e_theta[i]) + std::norm(h2.e_theta[i])), 0.0};
            out.e_phi[i] = {std::sqrt(std::norm(h1.e_phi[i]) + std::norm(h2.e_phi[i])), 0.0};
        }
        return out;
    }

} // namespace duprec
