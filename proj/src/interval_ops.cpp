#include "frozen/interval_ops.hpp"

#include "frozen/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace frozen {

GridFunction::GridFunction(int k, int m) : GridFunction(k, m, std::vector<cplx>(static_cast<std::size_t>(k) * m)) {}

GridFunction::GridFunction(int k, int m, std::vector<cplx> values) : k_(k), m_(m), values_(std::move(values)) {
    if (k < 1 || m < 1) throw InvalidInput("grid needs k >= 1 and m >= 1");
    if (values_.size() != static_cast<std::size_t>(k) * m) {
        throw InvalidInput("grid function length " + std::to_string(values_.size()) + " != k*m = " +
                           std::to_string(k * m));
    }
}

GridFunction GridFunction::reflected() const {
    GridFunction out = *this;
    std::reverse(out.values_.begin(), out.values_.end());
    return out;
}

double GridFunction::sup_norm() const {
    double s = 0.0;
    for (const auto& v : values_) s = std::max(s, std::abs(v));
    return s;
}

double GridFunction::l2_norm() const {
    double s = 0.0;
    for (const auto& v : values_) s += std::norm(v);
    return std::sqrt(s * step());
}

void GridFunction::check_layout(const GridFunction& rhs) const {
    if (k_ != rhs.k_ || m_ != rhs.m_) throw InvalidInput("grid functions on different grids");
}

GridFunction& GridFunction::operator+=(const GridFunction& rhs) {
    check_layout(rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += rhs.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& rhs) {
    check_layout(rhs);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= rhs.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(cplx s) {
    for (auto& v : values_) v *= s;
    return *this;
}

SubintervalVector::SubintervalVector(int k, int m)
    : k_(k), m_(m), data_(static_cast<std::size_t>(k) * m) {
    if (k < 1 || m < 1) throw InvalidInput("subinterval vector needs k >= 1 and m >= 1");
}

std::span<cplx> SubintervalVector::component(int v) {
    return std::span<cplx>(data_).subspan(static_cast<std::size_t>(v) * m_, m_);
}

std::span<const cplx> SubintervalVector::component(int v) const {
    return std::span<const cplx>(data_).subspan(static_cast<std::size_t>(v) * m_, m_);
}

std::vector<SegmentSource> q_segments(int k) {
    std::vector<SegmentSource> out;
    out.reserve(k);
    for (int v = 1; v <= k; ++v) out.push_back({v - 1, v % 2 == 0});
    return out;
}

std::vector<SegmentSource> r_segments(int j, int k) {
    std::vector<SegmentSource> out;
    out.reserve(k);
    for (int v = 1; v <= k; ++v) out.push_back({k - v, (j + v) % 2 == 1});
    return out;
}

namespace {

// Flat index map: component v, local sample p <- grid index.
std::vector<std::size_t> index_map(const std::vector<SegmentSource>& segments, int m) {
    const std::size_t n = segments.size() * static_cast<std::size_t>(m);
    std::vector<std::size_t> map(n);
    std::vector<bool> hit(n, false);
    for (std::size_t v = 0; v < segments.size(); ++v) {
        const auto [source, reversed] = segments[v];
        for (int p = 0; p < m; ++p) {
            const std::size_t src = static_cast<std::size_t>(source) * m + (reversed ? m - 1 - p : p);
            if (hit[src]) throw std::logic_error("segment rules do not form a permutation of the grid");
            hit[src] = true;
            map[v * m + p] = src;
        }
    }
    return map;
}

SubintervalVector chop(const GridFunction& f, const std::vector<SegmentSource>& segments) {
    SubintervalVector out(f.k(), f.m());
    const auto map = index_map(segments, f.m());
    for (int v = 0; v < f.k(); ++v)
        for (int p = 0; p < f.m(); ++p) out(v, p) = f[map[static_cast<std::size_t>(v) * f.m() + p]];
    return out;
}

GridFunction glue(const SubintervalVector& F, const std::vector<SegmentSource>& segments) {
    GridFunction out(F.k(), F.m());
    const auto map = index_map(segments, F.m());
    for (int v = 0; v < F.k(); ++v)
        for (int p = 0; p < F.m(); ++p) out[map[static_cast<std::size_t>(v) * F.m() + p]] = F(v, p);
    return out;
}

}  // namespace

SubintervalVector q_apply(const GridFunction& f) { return chop(f, q_segments(f.k())); }

GridFunction q_inverse(const SubintervalVector& F) { return glue(F, q_segments(F.k())); }

SubintervalVector r_apply(const GridFunction& f, int j) { return chop(f, r_segments(j, f.k())); }

GridFunction r_inverse(const SubintervalVector& F, int j) {
    if (j % 2 == 0 && F.k() % 2 == 0) {
        throw InvalidInput("even j with even k is not a reduced frozen argument");
    }
    return glue(F, r_segments(j, F.k()));
}

SubintervalVector lift(std::span<const int> coefficients, std::span<const cplx> f) {
    SubintervalVector out(static_cast<int>(coefficients.size()), static_cast<int>(f.size()));
    for (std::size_t v = 0; v < coefficients.size(); ++v)
        for (std::size_t p = 0; p < f.size(); ++p)
            out(static_cast<int>(v), static_cast<int>(p)) = static_cast<double>(coefficients[v]) * f[p];
    return out;
}

}  // namespace frozen
