#pragma once

// Per-series standard scaling with a leakage guard: fitting is only legal on
// the training split, enforced through split provenance.

#include <Eigen/Dense>

#include "ntf/common.hpp"
#include "ntf/timeseries.hpp"

namespace ntf {

struct ScalerState {
    Vector mean;    // per series
    Vector stddev;  // per series, sample convention; 1.0 for degenerate series
    bool fitted = false;
    SplitProvenance fitted_on{SplitRole::train, 0, 0, 0};

    Index n_series() const { return mean.size(); }
};

inline ScalerState fit_scaler(const NetworkMTS& train) {
    if (!train.provenance)
        throw ContractError("scaler fit requires split provenance; split the dataset first");
    if (train.provenance->role != SplitRole::train)
        throw ContractError("leakage: scaler fit on " +
                            std::string(split_role_name(train.provenance->role)) +
                            " rows " + train.provenance->describe());
    const Index T = train.rows();
    const Index N = train.cols();
    if (T < 1) throw ArgumentError("cannot fit scaler on empty split");

    ScalerState s;
    s.mean.resize(N);
    s.stddev.resize(N);
    for (Index n = 0; n < N; ++n) {
        const double mu = train.values.col(n).mean();
        double var = 0.0;
        if (T > 1) {
            var = (train.values.col(n).array() - mu).square().sum() / static_cast<double>(T - 1);
        }
        double sd = std::sqrt(var);
        if (!(sd > 1e-12)) sd = 1.0;  // degenerate series: keep invertible
        s.mean[n] = mu;
        s.stddev[n] = sd;
    }
    s.fitted = true;
    s.fitted_on = *train.provenance;
    return s;
}

inline void check_fitted(const ScalerState& s, Index n_cols) {
    if (!s.fitted) throw StateError("scaler used before fit");
    if (s.n_series() != n_cols)
        throw ShapeError("scaler fitted on " + std::to_string(s.n_series()) +
                         " series, data has " + std::to_string(n_cols));
}

inline Matrix transform(const ScalerState& s, const Matrix& values) {
    check_fitted(s, values.cols());
    Matrix out = values;
    for (Index n = 0; n < out.cols(); ++n)
        out.col(n) = (out.col(n).array() - s.mean[n]) / s.stddev[n];
    return out;
}

inline Matrix inverse_transform(const ScalerState& s, const Matrix& values) {
    check_fitted(s, values.cols());
    Matrix out = values;
    for (Index n = 0; n < out.cols(); ++n)
        out.col(n) = out.col(n).array() * s.stddev[n] + s.mean[n];
    return out;
}

inline NetworkMTS transform(const ScalerState& s, const NetworkMTS& data) {
    NetworkMTS out = data;
    out.values = transform(s, data.values);
    return out;
}

inline NetworkMTS inverse_transform(const ScalerState& s, const NetworkMTS& data) {
    NetworkMTS out = data;
    out.values = inverse_transform(s, data.values);
    return out;
}

}  // namespace ntf
