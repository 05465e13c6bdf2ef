#pragma once

// Sliding-window (input, target) sample construction for direct multi-horizon
// training, plus the small dense 3-D tensor type batches live in.

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "ntf/common.hpp"
#include "ntf/timeseries.hpp"

namespace ntf {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Dense S×R×C tensor, row-major (sample, row, col).
struct Tensor3 {
    Index s = 0, r = 0, c = 0;
    std::vector<double> data;

    Tensor3() = default;
    Tensor3(Index s_, Index r_, Index c_)
        : s(s_), r(r_), c(c_), data(static_cast<std::size_t>(s_ * r_ * c_), 0.0) {}

    double& at(Index i, Index j, Index k) {
        return data[static_cast<std::size_t>((i * r + j) * c + k)];
    }
    double at(Index i, Index j, Index k) const {
        return data[static_cast<std::size_t>((i * r + j) * c + k)];
    }

    Eigen::Map<RowMat> sample(Index i) {
        return Eigen::Map<RowMat>(data.data() + static_cast<std::size_t>(i * r * c), r, c);
    }
    Eigen::Map<const RowMat> sample(Index i) const {
        return Eigen::Map<const RowMat>(data.data() + static_cast<std::size_t>(i * r * c), r, c);
    }

    std::size_t size() const { return data.size(); }

    std::uint64_t fingerprint() const {
        std::uint64_t h = fnv1a64(&s, sizeof(s));
        h = fnv1a64(&r, sizeof(r), h);
        h = fnv1a64(&c, sizeof(c), h);
        return fnv1a64(data.data(), data.size() * sizeof(double), h);
    }
};

struct WindowBatch {
    Tensor3 inputs;   // S×L×N
    Tensor3 targets;  // S×H×N
    std::vector<Index> origin_indices;  // per sample: first target row in the source matrix
    std::optional<SplitProvenance> provenance;

    Index n_samples() const { return inputs.s; }
    Index input_length() const { return inputs.r; }
    Index horizon() const { return targets.r; }
    Index n_series() const { return inputs.c; }

    // Identity of the evaluation windows; reports compare this before any
    // cross-model comparison.
    std::uint64_t fingerprint() const {
        std::uint64_t h = targets.fingerprint();
        h = fnv1a64(origin_indices.data(), origin_indices.size() * sizeof(Index), h);
        return h;
    }
};

inline WindowBatch make_windows(const NetworkMTS& data, Index L, Index H) {
    if (L < 1 || H < 1) throw ArgumentError("window sizes must be positive");
    const Index T = data.rows();
    const Index N = data.cols();
    if (T < L + H)
        throw ConfigError("not enough rows for windowing: T=" + std::to_string(T) +
                          " < L+H=" + std::to_string(L + H));
    const Index S = T - L - H + 1;
    WindowBatch batch;
    batch.inputs = Tensor3(S, L, N);
    batch.targets = Tensor3(S, H, N);
    batch.origin_indices.resize(static_cast<std::size_t>(S));
    for (Index i = 0; i < S; ++i) {
        batch.origin_indices[static_cast<std::size_t>(i)] = i + L;
        for (Index t = 0; t < L; ++t)
            for (Index n = 0; n < N; ++n) batch.inputs.at(i, t, n) = data.values(i + t, n);
        for (Index h = 0; h < H; ++h)
            for (Index n = 0; n < N; ++n) batch.targets.at(i, h, n) = data.values(i + L + h, n);
    }
    batch.provenance = data.provenance;
    return batch;
}

}  // namespace ntf
