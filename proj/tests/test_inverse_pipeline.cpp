#include "frozen/characteristic.hpp"
#include "frozen/errors.hpp"
#include "frozen/frozen_matrix.hpp"
#include "frozen/inverse_pipeline.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace frozen;

namespace {

std::string golden(std::string_view id) {
    std::ifstream in(std::string(FROZEN_GOLDEN_DIR) + "/" + std::string(id) + ".txt");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_fraction(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
}

// Evaluates a row such as "-f(2/7-x) on (1/7,2/7)" at x for a given f.
cplx eval_row(const std::string& row, double x, const std::function<double(double)>& f) {
    const bool negative = row[0] == '-';
    const std::size_t open = row.find('(');
    const std::string arg = row.substr(open + 1, row.find(')') - open - 1);
    double t = 0.0;
    if (arg == "x") {
        t = x;
    } else if (arg.rfind("x-", 0) == 0) {
        t = x - parse_fraction(arg.substr(2));
    } else {
        t = parse_fraction(arg.substr(0, arg.size() - 2)) - x;
    }
    return negative ? -f(t) : f(t);
}

double max_relative_gap(const Spectrum& a, const Spectrum& b) {
    double worst = 0.0;
    for (std::size_t n = 0; n < a.count(); ++n)
        worst = std::max(worst, std::abs(a.eigenvalues[n] - b.eigenvalues[n]) / std::max(1.0, std::abs(a.eigenvalues[n])));
    return worst;
}

}  // namespace

TEST_SUITE("inverse_pipeline") {

TEST_CASE("quadratic profile") {
    const int k = 7;
    const double b = 1.0 / k;
    CHECK(paper_profile(3 * b / 5, k) == doctest::Approx(1.0));
    CHECK(paper_profile(b, k) == doctest::Approx(5.0 / 9.0));
    CHECK(paper_profile(0.0, k) == 0.0);
    const auto s = paper_profile_samples(k, 10);
    REQUIRE(s.size() == 10);
    CHECK(s[0].real() == doctest::Approx(10.0 / (3 * b) * (b / 20) - 25.0 / (9 * b * b) * (b / 20) * (b / 20)));
}

TEST_CASE("algorithm 1 basics") {
    std::mt19937_64 rng(8);
    const ProblemConfig c = make_config(0, 0, 3, 7);
    const int m = 12;
    const GridFunction q0 = oracle::random_grid(7, m, rng);
    const GridFunction q1 = oracle::random_grid(7, m, rng);
    const std::vector<cplx> zero(m);
    CHECK(algorithm1(q0, c, zero) == q0);

    const GridFunction f1 = oracle::random_grid(1, m, rng);
    const GridFunction f2 = oracle::random_grid(1, m, rng);
    const std::vector<cplx> v1(f1.values().begin(), f1.values().end());
    const std::vector<cplx> v2(f2.values().begin(), f2.values().end());
    std::vector<cplx> sum(m);
    for (int p = 0; p < m; ++p) sum[p] = v1[p] + v2[p];
    const IsoSpectralFamily fam = make_family(q0, c);
    CHECK((algorithm1(q0, c, sum) - (algorithm1(q0, c, v1) + fam.generator(v2))).sup_norm() < 1e-15);

    // The supplement does not depend on the base potential.
    CHECK(((algorithm1(q0, c, v1) - q0) - (algorithm1(q1, c, v1) - q1)).sup_norm() < 1e-14);

    CHECK_THROWS_AS((void)algorithm1(q0, make_config(0, 1, 3, 7), v1), InvalidInput);
    CHECK_THROWS_AS((void)algorithm1(q0, c, std::vector<cplx>(m + 1)), InvalidInput);
    CHECK_THROWS_AS((void)make_family(q0, make_config(0, 0, 4, 7)), InvalidInput);
}

TEST_CASE("family members share W") {
    std::mt19937_64 rng(21);
    for (ExampleId id : {ExampleId::I7, ExampleId::I8, ExampleId::II, ExampleId::III, ExampleId::IV}) {
        const ProblemConfig c = example_config(id);
        const GridFunction q0 = oracle::random_grid(c.k, 10, rng);
        const IsoSpectralFamily fam = make_family(q0, c);
        const GridFunction f = oracle::random_grid(1, 10, rng);
        const std::vector<cplx> fv(f.values().begin(), f.values().end());
        CHECK((forward_w_direct(fam.member(fv), c) - forward_w_direct(q0, c)).sup_norm() < 1e-12);
    }
}

TEST_CASE("worked examples match the transcribed tables") {
    for (ExampleId id : {ExampleId::I7, ExampleId::I8, ExampleId::II, ExampleId::III, ExampleId::IV}) {
        const ExampleReport r = reproduce_example(id, 40);
        CHECK(r.table_text() == golden(to_string(id)));
        CHECK(r.kernel_vector == kernel(r.config).generator);

        // The symbolic rows and the sampled operator describe the same function.
        const int k = r.config.k;
        auto f = [k](double t) { return paper_profile(t, k); };
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            const std::size_t seg = i / 40;
            CHECK(std::abs(eval_row(r.table[seg].to_string(), r.samples.x(i), f) - r.samples[i]) < 1e-12);
        }
    }
    CHECK(reproduce_example(ExampleId::I7).kernel_vector == std::vector<int>{1, -1, 1, -1, 1, -1, 1});
    CHECK(reproduce_example(ExampleId::II).table.front().to_string() == "-f(1/7-x) on (0,1/7)");
    CHECK(reproduce_example(ExampleId::IV).table.back().to_string() == "f(x-7/8) on (7/8,1)");
    CHECK(parse_example_id("III") == ExampleId::III);
    CHECK_THROWS_AS((void)parse_example_id("V"), InvalidInput);

    const std::string svg = render_svg(reproduce_example(ExampleId::IV, 16));
    CHECK(svg.rfind("<svg", 0) == 0);
    std::size_t lines = 0;
    for (std::size_t pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) ++lines;
    CHECK(lines == 8);
}

TEST_CASE("iso-spectral partners") {
    for (ExampleId id : {ExampleId::I7, ExampleId::II, ExampleId::IV}) {
        const ProblemConfig c = example_config(id);
        const GridFunction q0 = GridFunction::sample(c.k, 32, oracle::smooth_potential);
        const GridFunction q = algorithm1(q0, c, paper_profile_samples(c.k, 32));
        CHECK(max_relative_gap(eigenvalues(q0, c, 15), eigenvalues(q, c, 15)) < 1e-6);
    }
}

TEST_CASE("non-degenerate spectra move under perturbation") {
    std::mt19937_64 rng(1234);
    const ProblemConfig c = make_config(0, 1, 1, 3);
    const GridFunction q0 = GridFunction::sample(3, 32, oracle::smooth_potential);
    const Spectrum base = eigenvalues(q0, c, 30);
    for (int draw = 0; draw < 10; ++draw) {
        const GridFunction g = oracle::random_grid(3, 32, rng);
        const Spectrum moved = eigenvalues(q0 + 1e-3 * g, c, 30);
        double change = 0.0;
        for (int n = 0; n < 30; ++n) change = std::max(change, std::abs(moved.eigenvalues[n] - base.eigenvalues[n]));
        CHECK(change > 1e-9);
    }
}

TEST_CASE("spectrum to potential") {
    SUBCASE("zero data") {
        const ProblemConfig c = make_config(0, 1, 1, 3);
        Spectrum s{0, 1, {}};
        for (int n = 1; n <= 100; ++n) s.eigenvalues.emplace_back(reference_eigenvalue(n, 0, 1));
        PipelineOptions o;
        o.m = 16;
        o.n_used = 100;
        o.modes = 25;
        CHECK(invert_from_spectrum(s, c, o).particular.sup_norm() < 1e-10);
    }
    SUBCASE("grid-consistent recovery, non-degenerate") {
        const ProblemConfig c = make_config(0, 1, 1, 3);
        const GridFunction q = GridFunction::sample(3, 32, oracle::smooth_potential);
        const Spectrum s = eigenvalues(q, c, 384);
        PipelineOptions o;
        o.m = 32;
        o.n_used = 384;
        o.modes = 96;
        const MainEqSolution sol = invert_from_spectrum(s, c, o);
        CHECK_FALSE(sol.degenerate);
        CHECK((sol.particular - q).l2_norm() < 1e-4);
    }
    SUBCASE("degenerate closed loop") {
        const ProblemConfig c = make_config(0, 0, 1, 2);
        const GridFunction q = GridFunction::sample(2, 32, oracle::smooth_potential);
        const Spectrum s = eigenvalues(q, c, 256);
        PipelineOptions o;
        o.m = 32;
        o.n_used = 256;
        o.modes = 64;
        const MainEqSolution sol = invert_from_spectrum(s, c, o);
        CHECK(sol.degenerate);
        REQUIRE(sol.kernel_generator.has_value());
        const Spectrum back = eigenvalues(sol.particular, c, 20);
        const Spectrum first{0, 0, {s.eigenvalues.begin(), s.eigenvalues.begin() + 20}};
        CHECK(max_relative_gap(first, back) < 1e-5);
        const Spectrum shifted = eigenvalues(sol.particular + 0.7 * *sol.kernel_generator, c, 20);
        CHECK(max_relative_gap(first, shifted) < 1e-5);
    }
    SUBCASE("frozen argument above one half") {
        const ProblemConfig c = make_config(1, 0, 2, 3);
        const auto [normalized, reflected] = normalize_to_half(c);
        REQUIRE(reflected);
        // The spectrum of q on the reflected problem is the spectrum of the original.
        const GridFunction q = GridFunction::sample(3, 32, oracle::smooth_potential);
        const Spectrum s_reflected = eigenvalues(q.reflected(), normalized, 384);
        const Spectrum s{1, 0, s_reflected.eigenvalues};
        PipelineOptions o;
        o.m = 32;
        o.n_used = 384;
        o.modes = 96;
        CHECK((invert_from_spectrum(s, c, o).particular - q).l2_norm() < 1e-4);
    }
    SUBCASE("mismatched data") {
        const ProblemConfig c = make_config(0, 1, 1, 3);
        Spectrum wrong_flags{1, 1, std::vector<cplx>(100, 1.0)};
        CHECK_THROWS_AS((void)invert_from_spectrum(wrong_flags, c), InvalidInput);
        Spectrum dirichlet{0, 1, {}};
        for (int n = 1; n <= 200; ++n) dirichlet.eigenvalues.emplace_back(reference_eigenvalue(n, 0, 0));
        try {
            (void)invert_from_spectrum(dirichlet, c);
            FAIL("expected NumericalFailure");
        } catch (const NumericalFailure& e) {
            CHECK(e.stage() == "asymptotics");
        }
        Spectrum short_spec{0, 1, std::vector<cplx>(10, 1.0)};
        CHECK_THROWS_AS((void)invert_from_spectrum(short_spec, c), InvalidInput);
    }
}

}
