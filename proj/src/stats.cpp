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

#include "duprec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace duprec
{
    std::string to_string(AggregateKind k)
    {
        switch (k)
        {
        case AggregateKind::max:
            return "max";
        case AggregateKind::mean:
            return "mean";
        case AggregateKind::mean_plus_sigma:
            return "mean_plus_sigma";
        case AggregateKind::mean_minus_sigma:
            return "mean_minus_sigma";
        default:
            return "min";
        }
    }

    double FieldSummary::get(AggregateKind k) const
    {
        switch (k)
        {
        case AggregateKind::max:
            return max;
        case AggregateKind::mean:
            return mean;
        case AggregateKind::mean_plus_sigma:
            return mean + sigma;
        case AggregateKind::mean_minus_sigma:
            return mean - sigma;
        default:
            return min;
        }
    }

    FieldSummary aggregate(const MetricField &field)
    {
        AreaWeights w = area_weights(field.grid);

        FieldSummary s;
        double acc = 0.0, den = 0.0;
        double vmax = -std::numeric_limits<double>::infinity();
        double vmin = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < field.value.size(); ++i)
        {
            if (!field.mask[i] || !std::isfinite(field.value[i]))
                continue;
            acc += w.steradians[i] * field.value[i];
            den += w.steradians[i];
            vmax = std::max(vmax, field.value[i]);
            vmin = std::min(vmin, field.value[i]);
            ++s.n;
        }
        if (s.n == 0)
            throw std::invalid_argument("aggregate: metric field has no finite region values");
        s.mean = acc / den;
        double var = 0.0;
        for (std::size_t i = 0; i < field.value.size(); ++i)
        {
            if (!field.mask[i] || !std::isfinite(field.value[i]))
                continue;
            double d = field.value[i] - s.mean;
            var += w.steradians[i] * d * d;
        }
        s.sigma = std::sqrt(var / den);
        s.max = vmax;
        s.min = vmin;
        return s;
    }

    CdfCurve population_cdf(std::vector<double> samples)
    {
        if (samples.empty())
            throw std::invalid_argument("population_cdf: no samples");
        std::sort(samples.begin(), samples.end());
        CdfCurve c;
        c.value = std::move(samples);
        c.prob.resize(c.value.size());
        double n = static_cast<double>(c.value.size());
        for (std::size_t i = 0; i < c.prob.size(); ++i)
            c.prob[i] = static_cast<double>(i + 1) / n;
        return c;
    }

    double quantile(std::vector<double> samples, double level)
    {
        if (samples.empty())
            throw std::invalid_argument("quantile: no samples");
        if (level < 0.0 || level > 1.0)
            throw std::invalid_argument("quantile: level must be in [0, 1]");
        std::sort(samples.begin(), samples.end());
        double h = (static_cast<double>(samples.size()) - 1.0) * level;
        auto lo = static_cast<std::size_t>(std::floor(h));
        if (lo + 1 >= samples.size())
            return samples.back();
        double frac = h - std::floor(h);
        return samples[lo] + frac * (samples[lo + 1] - samples[lo]);
    }

} // namespace duprec
