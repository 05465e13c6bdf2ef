#pragma once

// Classical additive decomposition into trend + daily + weekly seasonality +
// residual. Reconstruction is exact by construction: the residual is defined
// as what the other three components leave over.

#include <Eigen/Dense>

#include "ntf/common.hpp"
#include "ntf/timeseries.hpp"

namespace ntf {

struct DecompositionResult {
    Vector trend;
    Vector seasonal_daily;
    Vector seasonal_weekly;
    Vector residual;
};

// Centered moving average with even window `period` (the textbook 2xMA:
// endpoints weighted 1/2). Edges hold the nearest valid center value.
inline Vector centered_moving_average(const Vector& x, Index period) {
    const Index T = x.size();
    const Index half = period / 2;
    Vector out(T);
    const Index first = half;
    const Index last = T - half - 1;
    if (first > last) throw ConfigError("series too short for moving average");
    for (Index t = first; t <= last; ++t) {
        double acc = 0.5 * x[t - half] + 0.5 * x[t + half];
        for (Index i = -half + 1; i <= half - 1; ++i) acc += x[t + i];
        out[t] = acc / static_cast<double>(period);
    }
    for (Index t = 0; t < first; ++t) out[t] = out[first];
    for (Index t = last + 1; t < T; ++t) out[t] = out[last];
    return out;
}

// Per-phase means of x over the given period, mean-centered and tiled back to
// full length. Centering makes each seasonal component sum to ~0 per period.
inline Vector periodic_means(const Vector& x, Index period) {
    const Index T = x.size();
    Vector sums = Vector::Zero(period);
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(static_cast<int>(period));
    for (Index t = 0; t < T; ++t) {
        sums[t % period] += x[t];
        counts[static_cast<int>(t % period)] += 1;
    }
    Vector means(period);
    for (Index p = 0; p < period; ++p)
        means[p] = sums[p] / static_cast<double>(counts[static_cast<int>(p)]);
    means.array() -= means.mean();
    Vector tiled(T);
    for (Index t = 0; t < T; ++t) tiled[t] = means[t % period];
    return tiled;
}

inline DecompositionResult decompose(const Vector& series) {
    const Index T = series.size();
    if (T < 2 * kHoursPerWeek)
        throw ConfigError("decompose needs at least " + std::to_string(2 * kHoursPerWeek) +
                          " rows (got " + std::to_string(T) + ")");

    DecompositionResult r;
    r.trend = centered_moving_average(series, kHoursPerWeek);
    const Vector detrended = series - r.trend;
    r.seasonal_daily = periodic_means(detrended, kHoursPerDay);
    r.seasonal_weekly = periodic_means(detrended - r.seasonal_daily, kHoursPerWeek);
    r.residual = series - r.trend - r.seasonal_daily - r.seasonal_weekly;
    return r;
}

}  // namespace ntf
