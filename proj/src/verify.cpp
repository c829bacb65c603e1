#include "frozen/verify.hpp"

#include "frozen/frozen_matrix.hpp"
#include "frozen/poly_roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace frozen {

namespace {

constexpr int kFlags[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

template <typename F>
void for_each_config(int kmax, F&& body) {
    for (int k = 2; k <= kmax; ++k)
        for (int j = 1; 2 * j <= k; ++j) {
            if (std::gcd(j, k) != 1) continue;
            for (const auto& f : kFlags) body(make_config(f[0], f[1], j, k));
        }
}

std::string describe(const ProblemConfig& c) {
    std::ostringstream os;
    os << "(alpha,beta,j,k)=(" << c.alpha << ',' << c.beta << ',' << c.j << ',' << c.k << ')';
    return os.str();
}

void fail(CheckResult& r, const std::string& what) {
    if (r.passed) r.detail = what;
    r.passed = false;
}

}  // namespace

CheckResult check_chebyshev_form(int kmax) {
    CheckResult r{"chebyshev_form", true, 0, {}};
    for (int k = 2; k <= kmax; ++k)
        for (const auto& f : kFlags) {
            ++r.cases;
            if (char_poly_j1(k, f[0], f[1]) != theorem1_poly(k, f[0], f[1]))
                fail(r, describe(make_config(f[0], f[1], 1, k)));
        }
    return r;
}

CheckResult check_matrix_reduction(int kmax) {
    CheckResult r{"matrix_reduction", true, 0, {}};
    for_each_config(kmax, [&](const ProblemConfig& c) {
        ++r.cases;
        const IntMatrix a = build_matrix(c).entries;
        if (reduce_to_j1(c) != a) fail(r, describe(c));
        if (c.j == 2 && j2_identity_rhs(c.k, c.alpha, c.beta) != a) fail(r, "two-step identity " + describe(c));
    });
    return r;
}

CheckResult check_determinant_formula(int kmax) {
    CheckResult r{"determinant_formula", true, 0, {}};
    for (int k = 2; k <= kmax; ++k)
        for (const auto& f : kFlags) {
            ++r.cases;
            if (det_closed_form(k, f[0], f[1]) != determinant(matrix_j1(k, f[0], f[1])))
                fail(r, describe(make_config(f[0], f[1], 1, k)));
        }
    return r;
}

CheckResult check_singularity_classes(int kmax) {
    CheckResult r{"singularity_classes", true, 0, {}};
    for_each_config(kmax, [&](const ProblemConfig& c) {
        ++r.cases;
        const bool singular = determinant(build_matrix(c).entries) == 0;
        if (singular != classify(c).degenerate()) fail(r, describe(c));
    });
    return r;
}

CheckResult check_kernels(int kmax) {
    CheckResult r{"kernels", true, 0, {}};
    for_each_config(kmax, [&](const ProblemConfig& c) {
        ++r.cases;
        const IntMatrix a = build_matrix(c).entries;
        const KernelDescriptor ker = kernel(c);
        const int expected = classify(c).degenerate() ? c.k - 1 : c.k;
        if (rank(a) != expected || ker.dimension != c.k - expected) {
            fail(r, describe(c));
            return;
        }
        if (ker.dimension == 1) {
            std::vector<BigInt> x(ker.generator.begin(), ker.generator.end());
            const auto ax = a.apply(x);
            if (std::any_of(ax.begin(), ax.end(), [](const BigInt& v) { return v != 0; })) fail(r, describe(c));
        }
    });
    return r;
}

CheckResult check_j1_spectra(int kmax) {
    CheckResult r{"j1_spectra", true, 0, {}};
    double worst = 0.0;
    std::vector<int> double_zero;
    for (int k = 2; k <= kmax; ++k)
        for (const auto& f : kFlags) {
            ++r.cases;
            const IntPolynomial p = char_poly_j1(k, f[0], f[1]);
            if (f[0] == 0 && f[1] == 1) {
                if (abs(p[0]) < 1) fail(r, "zero eigenvalue for " + describe(make_config(0, 1, 1, k)));
                continue;
            }
            if (f[0] == 0 && f[1] == 0 && p[1] == 0) double_zero.push_back(k);
            const double dist = multiset_distance(spectrum_closed_form(k, f[0], f[1]), polynomial_roots(p));
            worst = std::max(worst, dist);
            if (dist > 1e-9) fail(r, describe(make_config(f[0], f[1], 1, k)));
        }
    std::ostringstream os;
    if (!r.passed) os << r.detail << "; ";
    os << "max distance " << worst << "; double zero for (0,0) at k =";
    for (int k : double_zero) os << ' ' << k;
    r.detail = os.str();
    return r;
}

CheckResult check_geometric_multiplicity(int kmax) {
    CheckResult r{"geometric_multiplicity", true, 0, {}};
    for (int k = 2; k <= kmax; ++k)
        for (const auto& f : kFlags) {
            const Eigen::MatrixXcd a = build_matrix(make_config(f[0], f[1], 1, k)).to_complex();
            const auto eig = f[0] == 0 && f[1] == 1 ? spectrum_numeric(k, 0, 1) : spectrum_closed_form(k, f[0], f[1]);
            for (const auto& z : eig) {
                ++r.cases;
                const Eigen::MatrixXcd shifted = z * Eigen::MatrixXcd::Identity(k, k) - a;
                if (numeric_rank(shifted) != k - 1) fail(r, describe(make_config(f[0], f[1], 1, k)));
            }
        }
    return r;
}

std::vector<CheckResult> verify_all(int kmax) {
    return {check_chebyshev_form(kmax), check_matrix_reduction(kmax), check_determinant_formula(kmax),
            check_singularity_classes(kmax), check_kernels(kmax), check_j1_spectra(kmax),
            check_geometric_multiplicity(kmax)};
}

}  // namespace frozen
