#include "erkn/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "erkn/errors.hpp"

namespace erkn {
namespace {

constexpr std::uint64_t kMaxBallPoints = 5'000'000;

// Number of points of Z^l with |k| ≤ N, saturating at kMaxBallPoints + 1.
std::uint64_t ball_size(std::size_t l, int N) {
    // count[n] = points of Z^d with |k| exactly n.
    std::vector<std::uint64_t> count(static_cast<std::size_t>(N) + 1, 0);
    count[0] = 1;
    for (std::size_t d = 0; d < l; ++d) {
        std::vector<std::uint64_t> next(count.size(), 0);
        for (int n = 0; n <= N; ++n) {
            for (int a = 0; a <= n; ++a) {
                const std::uint64_t ways = (a == 0) ? 1 : 2;
                next[n] += ways * count[n - a];
                if (next[n] > kMaxBallPoints) next[n] = kMaxBallPoints + 1;
            }
        }
        count = std::move(next);
    }
    std::uint64_t total = 0;
    for (auto c : count) total = std::min(total + c, kMaxBallPoints + 1);
    return total;
}

void fill_ball(std::size_t pos, int budget, IntVec& k, std::vector<IntVec>& out) {
    if (pos == k.size()) {
        out.push_back(k);
        return;
    }
    for (int v = -budget; v <= budget; ++v) {
        k[pos] = v;
        fill_ball(pos + 1, budget - std::abs(v), k, out);
    }
    k[pos] = 0;
}

bool better_representative(const IntVec& a, const IntVec& b) {
    const int na = l1_norm(a);
    const int nb = l1_norm(b);
    if (na != nb) return na < nb;
    return a < b;
}

IntVec negated(IntVec k) {
    for (int& v : k) v = -v;
    return k;
}

}  // namespace

double default_resonance_tol(std::span<const double> lambda) {
    double m = 0.0;
    for (double v : lambda) m = std::max(m, std::fabs(v));
    return 1e-9 * m;
}

int l1_norm(std::span<const int> k) {
    int n = 0;
    for (int v : k) n += std::abs(v);
    return n;
}

double dot(std::span<const int> k, std::span<const double> lambda) {
    double s = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) s += k[i] * lambda[i];
    return s;
}

std::vector<IntVec> enumerate_l1_ball(std::size_t l, int N) {
    if (N < 0) throw DomainError("enumerate_l1_ball: N must be non-negative");
    if (ball_size(l, N) > kMaxBallPoints)
        throw ResourceError("enumerate_l1_ball: |k| <= " + std::to_string(N) + " in dimension " +
                            std::to_string(l) + " is too large to enumerate");
    std::vector<IntVec> out;
    IntVec k(l, 0);
    fill_ball(0, N, k, out);
    return out;
}

ResonanceScan resonance_scan(std::span<const double> lambda, int N, double tol) {
    if (N > kMaxResonanceOrder)
        throw ResourceError("resonance_scan: N = " + std::to_string(N) + " exceeds " +
                            std::to_string(kMaxResonanceOrder));
    if (N < 1) throw DomainError("resonance_scan: N must be >= 1");
    if (!(tol > 0.0)) throw DomainError("resonance_scan: tol must be positive");
    if (lambda.empty()) throw DomainError("resonance_scan: empty frequency vector");

    ResonanceScan scan;
    scan.lambda.assign(lambda.begin(), lambda.end());
    scan.N = N;
    scan.tol = tol;

    const std::vector<IntVec> ball = enumerate_l1_ball(lambda.size(), N);
    std::vector<double> value(ball.size());
    for (std::size_t i = 0; i < ball.size(); ++i) {
        value[i] = dot(ball[i], lambda);
        if (std::fabs(value[i]) <= tol && l1_norm(ball[i]) != 0)
            scan.module_vectors.push_back(ball[i]);
    }

    // Group the ball into classes k + M: equal k·λ up to tol, chained along the sorted values.
    std::vector<std::size_t> order(ball.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    std::vector<std::size_t> class_of(ball.size());
    std::vector<std::size_t> best;  // best member index per class
    for (std::size_t r = 0; r < order.size(); ++r) {
        const std::size_t i = order[r];
        if (r == 0 || value[i] - value[order[r - 1]] > tol) best.push_back(i);
        const std::size_t c = best.size() - 1;
        class_of[i] = c;
        if (better_representative(ball[i], ball[best[c]])) best[c] = i;
    }

    std::vector<std::size_t> class_order(best.size());
    std::iota(class_order.begin(), class_order.end(), 0);
    std::sort(class_order.begin(), class_order.end(), [&](std::size_t a, std::size_t b) {
        return better_representative(ball[best[a]], ball[best[b]]);
    });

    // Lexicographic index lookup for -k: the ball is enumerated in lexicographic order.
    auto index_of = [&](const IntVec& k) {
        auto it = std::lower_bound(ball.begin(), ball.end(), k);
        return static_cast<std::size_t>(it - ball.begin());
    };

    std::vector<bool> assigned(best.size(), false);
    for (std::size_t c : class_order) {
        if (assigned[c]) continue;
        const IntVec& rep = ball[best[c]];
        assigned[c] = true;
        scan.representatives.push_back(rep);
        const IntVec neg = negated(rep);
        const std::size_t partner = class_of[index_of(neg)];
        if (!assigned[partner]) {
            assigned[partner] = true;
            scan.representatives.push_back(neg);
        }
    }
    std::sort(scan.representatives.begin(), scan.representatives.end(), better_representative);
    return scan;
}

double nonresonance_margin(double h, double epsilon, std::span<const double> lambda, int N,
                           const ResonanceScan& scan) {
    if (lambda.empty()) throw DomainError("nonresonance_margin: no oscillatory frequencies");
    if (!(h > 0.0) || !(epsilon > 0.0))
        throw DomainError("nonresonance_margin: h and epsilon must be positive");
    if (scan.N != N || !std::equal(lambda.begin(), lambda.end(), scan.lambda.begin(),
                                   scan.lambda.end()))
        throw DomainError("nonresonance_margin: scan was computed for different lambda or N");

    const double scale = h / (2.0 * epsilon);
    const double root_h = std::sqrt(h);
    double margin = std::numeric_limits<double>::infinity();
    bool any = false;
    for (const IntVec& k : enumerate_l1_ball(lambda.size(), N)) {
        const double kl = dot(k, lambda);
        if (std::fabs(kl) <= scan.tol) continue;  // k = 0 or k ∈ M
        any = true;
        margin = std::min(margin, std::fabs(std::sin(scale * kl)) / root_h);
    }
    if (!any) throw DomainError("nonresonance_margin: no non-resonant k with |k| <= N");
    return margin;
}

}  // namespace erkn
