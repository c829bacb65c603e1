#pragma once

#include <string>
#include <vector>

namespace frozen {

struct CheckResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    std::string detail;  ///< first failing case, or observations worth reporting
};

/// Sweep of the exact matrix identities. `kmax` bounds every sweep.
[[nodiscard]] CheckResult check_chebyshev_form(int kmax);         ///< det(zI - A_{1,k}) in Chebyshev form
[[nodiscard]] CheckResult check_matrix_reduction(int kmax);       ///< A_{j,k} as a polynomial in A_{1,k}
[[nodiscard]] CheckResult check_determinant_formula(int kmax);    ///< closed-form det A_{1,k}
[[nodiscard]] CheckResult check_singularity_classes(int kmax);    ///< det == 0 exactly on the degenerate classes
[[nodiscard]] CheckResult check_kernels(int kmax);                ///< rank k-1 and the sign-vector kernel
[[nodiscard]] CheckResult check_j1_spectra(int kmax);             ///< trigonometric eigenvalues vs polynomial roots
[[nodiscard]] CheckResult check_geometric_multiplicity(int kmax); ///< simple eigenvectors of A_{1,k}

/// All of the above.
[[nodiscard]] std::vector<CheckResult> verify_all(int kmax);

}  // namespace frozen
