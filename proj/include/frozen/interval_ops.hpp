#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace frozen {

using cplx = std::complex<double>;

/// Complex function on (0,1) sampled at the midpoints x_i = (i + 1/2)/(k m)
/// of k subintervals of length b = 1/k, each holding m samples.
///
/// Reflections x -> 2 v b - x and shifts by multiples of b map this grid
/// onto itself, so the shift/involution operators are pure permutations.
class GridFunction {
public:
    GridFunction() = default;
    GridFunction(int k, int m);
    GridFunction(int k, int m, std::vector<cplx> values);

    template <typename F>
    [[nodiscard]] static GridFunction sample(int k, int m, F&& f) {
        GridFunction g(k, m);
        for (std::size_t i = 0; i < g.values_.size(); ++i) g.values_[i] = f(g.x(i));
        return g;
    }

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double step() const noexcept { return 1.0 / static_cast<double>(values_.size()); }
    [[nodiscard]] double x(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * step(); }

    [[nodiscard]] std::span<const cplx> values() const noexcept { return values_; }
    [[nodiscard]] std::span<cplx> values() noexcept { return values_; }
    cplx& operator[](std::size_t i) { return values_[i]; }
    const cplx& operator[](std::size_t i) const { return values_[i]; }

    /// x -> 1 - x (exact index reversal).
    [[nodiscard]] GridFunction reflected() const;

    /// Sup norm and discrete L2 norm.
    [[nodiscard]] double sup_norm() const;
    [[nodiscard]] double l2_norm() const;

    GridFunction& operator+=(const GridFunction& rhs);
    GridFunction& operator-=(const GridFunction& rhs);
    GridFunction& operator*=(cplx s);
    friend GridFunction operator+(GridFunction lhs, const GridFunction& rhs) { return lhs += rhs; }
    friend GridFunction operator-(GridFunction lhs, const GridFunction& rhs) { return lhs -= rhs; }
    friend GridFunction operator*(GridFunction g, cplx s) { return g *= s; }
    friend GridFunction operator*(cplx s, GridFunction g) { return g *= s; }
    friend bool operator==(const GridFunction&, const GridFunction&) = default;

private:
    void check_layout(const GridFunction& rhs) const;

    int k_ = 1;
    int m_ = 0;
    std::vector<cplx> values_;
};

/// k functions on (0,b), each sampled at t_p = (p + 1/2) b / m.
class SubintervalVector {
public:
    SubintervalVector() = default;
    SubintervalVector(int k, int m);

    [[nodiscard]] int k() const noexcept { return k_; }
    [[nodiscard]] int m() const noexcept { return m_; }

    /// Component v (0-based).
    [[nodiscard]] std::span<cplx> component(int v);
    [[nodiscard]] std::span<const cplx> component(int v) const;

    cplx& operator()(int v, int p) { return data_[static_cast<std::size_t>(v) * m_ + p]; }
    const cplx& operator()(int v, int p) const { return data_[static_cast<std::size_t>(v) * m_ + p]; }

    friend bool operator==(const SubintervalVector&, const SubintervalVector&) = default;

private:
    int k_ = 0;
    int m_ = 0;
    std::vector<cplx> data_;
};

/// Component v of a chop operator reads subinterval `source` (0-based) of
/// (0,1), either shifted (reversed = false) or reflected.
struct SegmentSource {
    int source;
    bool reversed;
};

/// Segment rules of Q: odd components are shifts, even ones reflections.
[[nodiscard]] std::vector<SegmentSource> q_segments(int k);

/// Segment rules of R: component v reads subinterval k - v + 1, shifted for
/// even j + v and reflected for odd j + v.
[[nodiscard]] std::vector<SegmentSource> r_segments(int j, int k);

[[nodiscard]] SubintervalVector q_apply(const GridFunction& f);
[[nodiscard]] GridFunction q_inverse(const SubintervalVector& F);
[[nodiscard]] SubintervalVector r_apply(const GridFunction& f, int j);

/// Inverse of r_apply. Even j with even k is not a coprime pair and is rejected.
[[nodiscard]] GridFunction r_inverse(const SubintervalVector& F, int j);

/// Lifts a function on (0,b) through a coefficient vector: component v = x_v f.
[[nodiscard]] SubintervalVector lift(std::span<const int> coefficients, std::span<const cplx> f);

}  // namespace frozen
