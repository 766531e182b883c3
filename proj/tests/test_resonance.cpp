#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "erkn/errors.hpp"
#include "erkn/harness.hpp"
#include "erkn/resonance.hpp"

using namespace erkn;

namespace {

// Independent oracle: every k in the cube [-N, N]^l, filtered by |k|_1 and |k·λ|.
std::set<IntVec> brute_force_module(const std::vector<double>& lambda, int N, double tol) {
    std::set<IntVec> out;
    const std::size_t l = lambda.size();
    IntVec k(l, -N);
    for (;;) {
        int norm = 0;
        double dotv = 0.0;
        bool zero = true;
        for (std::size_t i = 0; i < l; ++i) {
            norm += std::abs(k[i]);
            dotv += k[i] * lambda[i];
            zero = zero && k[i] == 0;
        }
        if (!zero && norm <= N && std::fabs(dotv) <= tol) out.insert(k);
        std::size_t i = 0;
        while (i < l && k[i] == N) k[i++] = -N;
        if (i == l) break;
        ++k[i];
    }
    return out;
}

std::set<IntVec> as_set(const std::vector<IntVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("resonance scan on lambda = (1, sqrt2, 2)") {
    const auto lambda = paper_lambda();
    const double tol = 1e-9;
    const auto scan3 = resonance_scan(lambda, 3, tol);
    CHECK(as_set(scan3.module_vectors) == std::set<IntVec>{{-2, 0, 1}, {2, 0, -1}});
    CHECK(as_set(scan3.module_vectors) == brute_force_module(lambda, 3, tol));

    const auto scan6 = resonance_scan(lambda, 6, tol);
    CHECK(as_set(scan6.module_vectors) ==
          std::set<IntVec>{{-2, 0, 1}, {2, 0, -1}, {-4, 0, 2}, {4, 0, -2}});
    CHECK(as_set(scan6.module_vectors) == brute_force_module(lambda, 6, tol));

    CHECK(resonance_scan(lambda, 1, tol).module_vectors.empty());
    CHECK(resonance_scan(lambda, 2, tol).module_vectors.empty());
}

TEST_CASE("resonance scan small cases") {
    const std::vector<double> irrational{1.0, kSqrt2};
    CHECK(resonance_scan(irrational, 4, 1e-9).module_vectors.empty());
    CHECK(brute_force_module(irrational, 4, 1e-9).empty());

    // (-2, 1) has |k| = 3, so it first appears at N = 3.
    const std::vector<double> one_two{1.0, 2.0};
    CHECK(resonance_scan(one_two, 2, 1e-9).module_vectors.empty());
    CHECK(as_set(resonance_scan(one_two, 3, 1e-9).module_vectors) ==
          std::set<IntVec>{{-2, 1}, {2, -1}});
}

TEST_CASE("resonance scan matches brute force on assorted frequency vectors") {
    const std::vector<std::vector<double>> cases{
        {1.0, 2.0, 3.0}, {1.0, 1.5, 2.5}, {1.0, kSqrt2, 2.0, 3.0}, {1.0, 3.0}, {2.0, 3.0, 5.0}};
    for (const auto& lambda : cases) {
        for (int N = 1; N <= 5; ++N) {
            const double tol = default_resonance_tol(lambda);
            CHECK(as_set(resonance_scan(lambda, N, tol).module_vectors) ==
                  brute_force_module(lambda, N, tol));
        }
    }
}

TEST_CASE("representatives: minimal, closed under negation, one per class") {
    const std::vector<std::vector<double>> cases{paper_lambda(), {1.0, 2.0, 3.0}, {1.0, 2.0}};
    for (const auto& lambda : cases) {
        for (int N = 1; N <= 6; ++N) {
            const double tol = default_resonance_tol(lambda);
            const auto scan = resonance_scan(lambda, N, tol);
            const auto reps = as_set(scan.representatives);
            CHECK(reps.size() == scan.representatives.size());
            CHECK(reps.count(IntVec(lambda.size(), 0)) == 1);
            for (const auto& r : scan.representatives) {
                IntVec neg = r;
                for (int& v : neg) v = -v;
                CHECK(reps.count(neg) == 1);
                CHECK(l1_norm(r) <= N);
            }
            // Distinct representatives lie in distinct classes.
            for (auto a = reps.begin(); a != reps.end(); ++a)
                for (auto b = std::next(a); b != reps.end(); ++b)
                    CHECK(std::fabs(dot(*a, lambda) - dot(*b, lambda)) > tol);
            // Every ball point has a representative of no larger norm in its class.
            for (const auto& k : enumerate_l1_ball(lambda.size(), N)) {
                const auto it = std::find_if(reps.begin(), reps.end(), [&](const IntVec& r) {
                    return std::fabs(dot(r, lambda) - dot(k, lambda)) <= tol;
                });
                REQUIRE(it != reps.end());
                CHECK(l1_norm(*it) <= l1_norm(k));
            }
        }
    }
}

TEST_CASE("representative tie-break is lexicographic") {
    // λ = (1, 2): class of k = (2, 0) also holds (0, 1); (0, 1) is shorter.
    const auto scan = resonance_scan(std::vector<double>{1.0, 2.0}, 2, 1e-9);
    const auto reps = as_set(scan.representatives);
    CHECK(reps.count({0, 1}) == 1);
    CHECK(reps.count({2, 0}) == 0);
    // Class k·λ = 1 holds (1, 0) and (-1, 1), both |k| ≤ 2; (1, 0) is minimal.
    CHECK(reps.count({1, 0}) == 1);
    CHECK(reps.count({-1, 1}) == 0);
}

TEST_CASE("resonance scan errors") {
    const auto lambda = paper_lambda();
    CHECK_THROWS_AS((void)resonance_scan(lambda, 13, 1e-9), ResourceError);
    CHECK_THROWS_AS((void)resonance_scan(lambda, 0, 1e-9), DomainError);
    CHECK_THROWS_AS((void)resonance_scan(lambda, 3, 0.0), DomainError);
    CHECK_THROWS_AS((void)enumerate_l1_ball(40, 12), ResourceError);
}

TEST_CASE("non-resonance margin") {
    const auto lambda = paper_lambda();
    const double eps = 1.0 / 70.0;
    const auto scan = resonance_scan(lambda, 2, 1e-9);
    // Brute-force mpmath value over all |k| <= 2; attained at k = ±(1, -1, 0).
    const double margin = nonresonance_margin(0.01, eps, lambda, 2, scan);
    CHECK(margin == doctest::Approx(1.444674415041761737).epsilon(1e-12));

    // Resonant k = (-2, 0, 1) has sin = 0 but is excluded.
    const auto scan3 = resonance_scan(lambda, 3, 1e-9);
    CHECK(nonresonance_margin(0.01, eps, lambda, 3, scan3) > 0.0);

    for (double h : {1e-3, 1e-5, 1e-8}) CHECK(std::isfinite(nonresonance_margin(h, eps, lambda, 2, scan)));

    CHECK_THROWS_AS((void)nonresonance_margin(0.01, eps, std::vector<double>{}, 2, scan), DomainError);
    CHECK_THROWS_AS((void)nonresonance_margin(0.01, eps, lambda, 3, scan), DomainError);
}

TEST_CASE("non-resonance margin is symmetric under k -> -k") {
    // Each ±k pair contributes the same |sin|; the brute-force min over k with
    // k_first_nonzero > 0 equals the full min.
    const auto lambda = paper_lambda();
    const double h = 0.013, eps = 1.0 / 55.0;
    const auto scan = resonance_scan(lambda, 4, 1e-9);
    double half_min = 1e300;
    for (const auto& k : enumerate_l1_ball(3, 4)) {
        auto first = std::find_if(k.begin(), k.end(), [](int v) { return v != 0; });
        if (first == k.end() || *first < 0) continue;
        const double kl = dot(k, lambda);
        if (std::fabs(kl) <= 1e-9) continue;
        half_min = std::min(half_min, std::fabs(std::sin(h / (2 * eps) * kl)) / std::sqrt(h));
    }
    CHECK(nonresonance_margin(h, eps, lambda, 4, scan) == doctest::Approx(half_min).epsilon(1e-15));
}
