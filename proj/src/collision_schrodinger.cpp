#include "wavekin/collision_schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wavekin/parallel.hpp"
#include "wavekin/quadrature.hpp"

namespace wavekin {

double kernel_1d(double p, double p2, double p3) {
    if (!(p > 0.0)) throw std::invalid_argument("kernel_1d: need p > 0");
    if (p2 < 0.0 || p3 < 0.0) throw std::invalid_argument("kernel_1d: negative radius");
    const double s = p2 * p2 + p3 * p3 - p * p;
    if (s < 0.0) return 0.0;
    const double p1 = std::sqrt(s);
    return p2 * p3 * std::min(std::min(p, p1), std::min(p2, p3)) / p;
}

namespace {

// Visit quadrature points of the kinematically allowed region
//   p2^2 + p3^2 in [p^2, 2 r_max^2],  p2, p3 >= 0.
// The cap is where every bracket term has died: the gain needs all three
// partner radii below r_max, the f2 f3 term allows p1 up to
// sqrt(2 r_max^2 - p^2), the loss terms allow one of p2, p3 beyond r_max.
// Zero-extended state evaluations cut each term on its own support. The min
// kernel has derivative kinks along p3 = p2, p3 = p, p1 = p, p1 = r_max, and
// state evaluation has one at p3 = r_max; panel boundaries are placed on
// those curves so each segment is smooth.
// Calls fn(p1, p2, p3, kernel, combined weight).
template <class Fn>
void visit_region(double p, double r_max, int n_quad, Fn&& fn) {
    if (n_quad < 8) throw std::invalid_argument("collision 1d: need n_quad >= 8");
    const double cap2 = 2.0 * r_max * r_max;
    const double cap = std::sqrt(cap2);
    // Outer kinks: lo(p2) flattens at p2 = p, the p1 = p curve exits at
    // sqrt(2) p, state truncation at p2 = r_max, the p1 = r_max curve exits
    // at sqrt(r_max^2 + p^2).
    std::vector<double> obrk = {0.0, cap};
    for (double b : {p, std::sqrt(2.0) * p, r_max, std::sqrt(r_max * r_max + p * p)})
        if (b > 0.0 && b < cap) obrk.push_back(b);
    std::sort(obrk.begin(), obrk.end());

    std::vector<double> ibrk;
    for (std::size_t seg = 0; seg + 1 < obrk.size(); ++seg) {
        const int n_outer =
            std::max(8, static_cast<int>(std::lround(n_quad * (obrk[seg + 1] - obrk[seg]) / cap)));
        const QuadRule outer = composite_gauss(obrk[seg], obrk[seg + 1], n_outer, 8);
        for (std::size_t i = 0; i < outer.size(); ++i) {
            const double p2 = outer.nodes[i];
            const double lo2 = p * p - p2 * p2;
            const double lo = lo2 > 0.0 ? std::sqrt(lo2) : 0.0;
            const double hi = std::sqrt(cap2 - p2 * p2);
            if (!(lo < hi)) continue;

            ibrk.clear();
            ibrk.push_back(lo);
            ibrk.push_back(hi);
            const double p1_eq_p = 2.0 * p * p - p2 * p2;                    // p1 = p
            const double p1_eq_cut = r_max * r_max + p * p - p2 * p2;        // p1 = r_max
            for (double b2 : {p1_eq_p, p1_eq_cut})
                if (b2 > lo * lo && b2 < hi * hi) ibrk.push_back(std::sqrt(b2));
            for (double b : {p2, p, r_max})
                if (b > lo && b < hi) ibrk.push_back(b);
            std::sort(ibrk.begin(), ibrk.end());

            for (std::size_t s = 0; s + 1 < ibrk.size(); ++s) {
                const double a = ibrk[s], b = ibrk[s + 1];
                if (!(b - a > 1e-14 * cap)) continue;
                const int n_inner =
                    std::max(8, static_cast<int>(std::lround(n_quad * (b - a) / (hi - lo))));
                const QuadRule inner = composite_gauss(a, b, n_inner, 8);
                for (std::size_t j = 0; j < inner.size(); ++j) {
                    const double p3 = inner.nodes[j];
                    const double k = kernel_1d(p, p2, p3);
                    if (k == 0.0) continue;
                    const double p1 = std::sqrt(p2 * p2 + p3 * p3 - p * p);
                    fn(p1, p2, p3, k, outer.weights[i] * inner.weights[j]);
                }
            }
        }
    }
}

}  // namespace

CollisionSplit evaluate_Q_1d(const DistributionState& f, int n_quad) {
    const std::size_t n = f.size();
    const double r_max = f.grid->r_max;
    const StateEvaluator fe(f);
    CollisionSplit out;
    out.q.resize(n);
    out.gain.resize(n);
    out.q2.resize(n);
    out.q3.resize(n);
    parallel_for(n, [&](std::size_t i) {
        const double p = f.grid->nodes[i];
        double gain = 0.0, q2 = 0.0, q3 = 0.0;
        visit_region(p, r_max, n_quad, [&](double p1, double p2, double p3, double k, double wt) {
            (void)p2;
            (void)p3;
            const double f1 = fe(p1), f2 = fe(p2), f3 = fe(p3);
            gain += wt * k * f1 * f2 * f3;
            q2 += wt * k * f2 * f3;
            q3 += wt * k * f1 * 0.5 * (f2 + f3);
        });
        out.gain[i] = gain;
        out.q2[i] = q2;
        out.q3[i] = q3;
        out.q[i] = gain + f.values[i] * (q2 - 2.0 * q3);
    });
    return out;
}

double evaluate_T_1d(int j, const DistributionState& f, const DistributionState& g,
                     const DistributionState& h, double p, int n_quad) {
    if (f.grid != g.grid || f.grid != h.grid)
        throw std::invalid_argument("evaluate_T_1d: operands must share one grid");
    if (!(p > 0.0)) throw std::invalid_argument("evaluate_T_1d: need p > 0");
    if (j < 1 || j > 3) throw std::invalid_argument("evaluate_T_1d: j must be 1, 2 or 3");
    const StateEvaluator fe(f), ge(g), he(h);
    double acc = 0.0;
    visit_region(p, f.grid->r_max, n_quad,
                 [&](double p1, double p2, double p3, double k, double wt) {
                     if (j == 1)
                         acc += wt * k * fe(p1) * 0.5 * (ge(p2) * he(p3) + ge(p3) * he(p2));
                     else if (j == 2)
                         acc += wt * k * 0.5 * (ge(p2) * he(p3) + ge(p3) * he(p2));
                     else
                         acc += wt * k * ge(p1) * 0.5 * (he(p2) + he(p3));
                 });
    return (j == 1) ? acc : fe(p) * acc;
}

}  // namespace wavekin
