#include "wavekin/collision_general.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "wavekin/parallel.hpp"
#include "wavekin/quadrature.hpp"
#include "wavekin/resonance.hpp"

namespace wavekin {

namespace {

void check_quad(const QuadSpec& quad) {
    if (quad.n_r1 < 8 || quad.n_mu < 8 || quad.n_u < 8)
        throw std::invalid_argument("collision quadrature orders must be >= 8 per dimension");
}

void check_common_grid(const DistributionState& f, const DistributionState& g,
                       const DistributionState& h) {
    if (f.grid != g.grid || f.grid != h.grid)
        throw std::invalid_argument("collision operands must share one grid");
}

// Composite 8-point Gauss iteration without allocation.
template <class Fn>
void for_composite(double lo, double hi, int n_points, Fn&& fn) {
    if (!(hi > lo)) return;
    const int panels = (n_points + 7) / 8;
    const QuadRule& base = gauss_legendre(8);
    const double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = lo + (p + 0.5) * h;
        for (int i = 0; i < 8; ++i) fn(mid + 0.5 * h * base.nodes[i], 0.5 * h * base.weights[i]);
    }
}

// Reduced quadrature geometry for one output radius p. The angular integral
// is carried in rho = |p + p1| (dmu = rho drho / (p r1)), which cancels the
// 1/rho of the resonant measure; the weight handed to `point` is
//   w_r1 w_rho w_u * 4 pi^2 r1 u w / (p Omega'(w)),
// everything nonnegative. Outer r1 runs to Omega^-1(2 Omega(r_max)): past it
// every resonance point has u or w beyond r_max, so zero-extended states
// contribute nothing.
template <class BeginBlock, class Point, class EndBlock>
void traverse_radius(double p, const RadialGrid& grid, const DispersionRelation& disp,
                     const QuadSpec& quad, BeginBlock&& begin_block, Point&& point,
                     EndBlock&& end_block) {
    const double r_max = grid.r_max;
    const double r1_cap = disp.invert_omega(2.0 * disp.omega(r_max));
    int n_r1 = static_cast<int>(std::ceil(quad.n_r1 * r1_cap / r_max));
    n_r1 = std::min(n_r1, 4 * quad.n_r1);

    for_composite(0.0, r1_cap, n_r1, [&](double r1, double w_a) {
        begin_block(r1);
        const double rho_lo = std::abs(p - r1);
        const double rho_hi = p + r1;
        for_composite(rho_lo, rho_hi, quad.n_mu, [&](double rho, double w_m) {
            const ResonantSlice slice = make_slice_rho(p, r1, rho, disp);
            const UInterval iv = feasible_u_interval(slice, disp);
            if (iv.width() <= 1e-12 * (1.0 + iv.hi)) return;
            for_composite(iv.lo, iv.hi, quad.n_u, [&](double u, double w_q) {
                const double w = pair_radius(slice, u, disp);
                const double dpw = disp.omega_prime(w);
                if (!(dpw > 0.0)) return;
                const double wt =
                    w_a * w_m * w_q * 4.0 * M_PI * M_PI * r1 * u * w / (p * dpw);
                point(u, w, wt);
            });
        });
        end_block();
    });
}

struct DirectAccum {
    double t1 = 0.0;  // sum_a f(r1_a) * inner_prod_a
    double q2 = 0.0;  // sum_a inner_prod_a
    double q3 = 0.0;  // sum_a g(r1_a) * inner_sum_a
};

// One output radius, direct evaluation. The u-integrand is symmetrized over
// the u <-> w relabeling, which makes the g <-> h exchange exact.
DirectAccum accumulate_direct(double p, const RadialGrid& grid, const DispersionRelation& disp,
                              const QuadSpec& quad, const StateEvaluator& fe,
                              const StateEvaluator& ge, const StateEvaluator& he) {
    DirectAccum acc;
    double block_prod = 0.0, block_sum = 0.0;
    double r1_cur = 0.0;
    traverse_radius(
        p, grid, disp, quad,
        [&](double r1) {
            r1_cur = r1;
            block_prod = 0.0;
            block_sum = 0.0;
        },
        [&](double u, double w, double wt) {
            const double gu = ge(u), gw = ge(w);
            const double hu = he(u), hw = he(w);
            block_prod += wt * 0.5 * (gu * hw + gw * hu);
            block_sum += wt * 0.5 * (hu + hw);
        },
        [&]() {
            acc.t1 += fe(r1_cur) * block_prod;
            acc.q2 += block_prod;
            acc.q3 += ge(r1_cur) * block_sum;
        });
    return acc;
}

}  // namespace

double evaluate_T(int j, const DistributionState& f, const DistributionState& g,
                  const DistributionState& h, double p, const DispersionRelation& disp,
                  const QuadSpec& quad) {
    check_quad(quad);
    check_common_grid(f, g, h);
    if (!(p > 0.0)) throw std::invalid_argument("evaluate_T: need p > 0");
    const StateEvaluator fe(f), ge(g), he(h);
    const DirectAccum acc = accumulate_direct(p, *f.grid, disp, quad, fe, ge, he);
    switch (j) {
        case 1: return acc.t1;
        case 2: return fe(p) * acc.q2;
        case 3: return fe(p) * acc.q3;
        default: throw std::invalid_argument("evaluate_T: j must be 1, 2 or 3");
    }
}

CollisionSplit evaluate_Q_general(const DistributionState& f, const DispersionRelation& disp,
                                  const QuadSpec& quad) {
    check_quad(quad);
    const std::size_t n = f.size();
    CollisionSplit out;
    out.q.resize(n);
    out.gain.resize(n);
    out.q2.resize(n);
    out.q3.resize(n);
    const StateEvaluator fe(f);
    const RadialGrid& grid = *f.grid;
    parallel_for(n, [&](std::size_t i) {
        const DirectAccum acc = accumulate_direct(grid.nodes[i], grid, disp, quad, fe, fe, fe);
        out.gain[i] = acc.t1;
        out.q2[i] = acc.q2;
        out.q3[i] = acc.q3;
        out.q[i] = acc.t1 + f.values[i] * (acc.q2 - 2.0 * acc.q3);
    });
    return out;
}

// ---------------------------------------------------------------------------
// KernelTensor

struct KernelBuilder {
    static KernelTensor run(GridPtr grid, const DispersionRelation& disp, const QuadSpec& quad) {
        check_quad(quad);
        KernelTensor k;
        k.grid_ = grid;
        k.grid_hash_ = grid->hash();
        k.disp_hash_ = disp.hash();
        k.quad_ = quad;
        const std::size_t n = grid->size();
        k.panel_left_.assign(grid->nodes.begin(), grid->nodes.end() - 1);
        k.panel_width_.resize(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            k.panel_width_[i] = grid->nodes[i + 1] - grid->nodes[i];
        k.blocks_.resize(n);
        k.points_.resize(n);

        parallel_for(n, [&](std::size_t i) {
            auto& blocks = k.blocks_[i];
            auto& points = k.points_[i];
            std::uint32_t block_first = 0;
            KernelTensor::PointRef r1_ref;
            traverse_radius(
                grid->nodes[i], *grid, disp, quad,
                [&](double r1) {
                    r1_ref = make_ref(*grid, r1);
                    block_first = static_cast<std::uint32_t>(points.size());
                },
                [&](double u, double w, double wt) {
                    const KernelTensor::PointRef ur = make_ref(*grid, u);
                    const KernelTensor::PointRef wr = make_ref(*grid, w);
                    // Both legs beyond the cutoff contribute nothing ever.
                    if (ur.panel == KernelTensor::kZero && wr.panel == KernelTensor::kZero) return;
                    points.push_back({ur, wr, static_cast<float>(wt)});
                },
                [&]() {
                    const auto count = static_cast<std::uint32_t>(points.size()) - block_first;
                    if (count > 0) blocks.push_back({r1_ref, block_first, count});
                });
            blocks.shrink_to_fit();
            points.shrink_to_fit();
        });
        return k;
    }

    static KernelTensor::PointRef make_ref(const RadialGrid& grid, double r) {
        if (r > grid.r_max) return {KernelTensor::kZero, 0.0f};
        const auto& x = grid.nodes;
        if (r <= x.front()) return {KernelTensor::kClampLeft, 0.0f};
        if (r >= x.back()) return {KernelTensor::kClampRight, 0.0f};
        const auto it = std::upper_bound(x.begin(), x.end(), r);
        const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
        return {static_cast<std::uint16_t>(i), static_cast<float>((r - x[i]) / (x[i + 1] - x[i]))};
    }
};

KernelTensor KernelTensor::build(GridPtr grid, const DispersionRelation& disp,
                                 const QuadSpec& quad) {
    if (!grid) throw std::invalid_argument("KernelTensor::build: null grid");
    if (grid->size() >= kClampRight)
        throw std::invalid_argument("KernelTensor::build: grid too large for 16-bit panel refs");
    return KernelBuilder::run(std::move(grid), disp, quad);
}

double KernelTensor::eval_point(const PointRef& pr, const std::vector<double>& f,
                                const std::vector<double>& d) const {
    switch (pr.panel) {
        case kZero: return 0.0;
        case kClampLeft: return f.front();
        case kClampRight: return f.back();
        default: break;
    }
    const std::size_t i = pr.panel;
    const double t = pr.t;
    const double h = panel_width_[i];
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * f[i] + h * (t3 - 2 * t2 + t) * d[i] +
           (-2 * t3 + 3 * t2) * f[i + 1] + h * (t3 - t2) * d[i + 1];
}

void KernelTensor::check_state(const DistributionState& f) const {
    if (!f.grid || f.grid->hash() != grid_hash_)
        throw std::invalid_argument("KernelTensor: state grid does not match kernel grid");
}

CollisionSplit KernelTensor::apply(const DistributionState& f) const {
    check_state(f);
    const std::size_t n = f.size();
    const std::vector<double> d = pchip_slopes(grid_->nodes, f.values);
    CollisionSplit out;
    out.q.resize(n);
    out.gain.resize(n);
    out.q2.resize(n);
    out.q3.resize(n);
    parallel_for(n, [&](std::size_t i) {
        double t1 = 0.0, q2 = 0.0, q3 = 0.0;
        const auto& pts = points_[i];
        for (const auto& blk : blocks_[i]) {
            double prod = 0.0, sum = 0.0;
            for (std::uint32_t s = blk.first; s < blk.first + blk.count; ++s) {
                const Point& pt = pts[s];
                const double fu = eval_point(pt.u, f.values, d);
                const double fw = eval_point(pt.w, f.values, d);
                prod += pt.weight * fu * fw;
                sum += pt.weight * 0.5 * (fu + fw);
            }
            const double fr1 = eval_point(blk.r1, f.values, d);
            t1 += fr1 * prod;
            q2 += prod;
            q3 += fr1 * sum;
        }
        out.gain[i] = t1;
        out.q2[i] = q2;
        out.q3[i] = q3;
        out.q[i] = t1 + f.values[i] * (q2 - 2.0 * q3);
    });
    return out;
}

std::vector<double> KernelTensor::apply_T(int j, const DistributionState& f,
                                          const DistributionState& g,
                                          const DistributionState& h) const {
    check_state(f);
    check_state(g);
    check_state(h);
    if (j < 1 || j > 3) throw std::invalid_argument("apply_T: j must be 1, 2 or 3");
    const std::size_t n = f.size();
    const std::vector<double> df = pchip_slopes(grid_->nodes, f.values);
    const std::vector<double> dg = pchip_slopes(grid_->nodes, g.values);
    const std::vector<double> dh = pchip_slopes(grid_->nodes, h.values);
    std::vector<double> out(n, 0.0);
    parallel_for(n, [&](std::size_t i) {
        double acc = 0.0;
        const auto& pts = points_[i];
        for (const auto& blk : blocks_[i]) {
            double inner = 0.0;
            if (j == 3) {
                for (std::uint32_t s = blk.first; s < blk.first + blk.count; ++s) {
                    const Point& pt = pts[s];
                    inner += pt.weight * 0.5 * (eval_point(pt.u, h.values, dh) +
                                                eval_point(pt.w, h.values, dh));
                }
                acc += eval_point(blk.r1, g.values, dg) * inner;
            } else {
                for (std::uint32_t s = blk.first; s < blk.first + blk.count; ++s) {
                    const Point& pt = pts[s];
                    const double gu = eval_point(pt.u, g.values, dg);
                    const double gw = eval_point(pt.w, g.values, dg);
                    const double hu = eval_point(pt.u, h.values, dh);
                    const double hw = eval_point(pt.w, h.values, dh);
                    inner += pt.weight * 0.5 * (gu * hw + gw * hu);
                }
                acc += (j == 1) ? eval_point(blk.r1, f.values, df) * inner : inner;
            }
        }
        out[i] = (j == 1) ? acc : f.values[i] * acc;
    });
    return out;
}

std::size_t KernelTensor::point_count() const {
    std::size_t n = 0;
    for (const auto& pts : points_) n += pts.size();
    return n;
}

bool KernelTensor::weights_nonnegative() const {
    for (const auto& pts : points_)
        for (const auto& pt : pts)
            if (!(pt.weight >= 0.0f)) return false;
    return true;
}

namespace {

constexpr char kMagic[8] = {'W', 'K', 'K', 'T', '0', '0', '0', '1'};

template <class T>
void put(std::ofstream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
void get(std::ifstream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
}

}  // namespace

void KernelTensor::save(const std::string& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("KernelTensor::save: cannot open " + path);
    os.write(kMagic, sizeof(kMagic));
    put(os, grid_hash_);
    put(os, disp_hash_);
    put(os, quad_.n_r1);
    put(os, quad_.n_mu);
    put(os, quad_.n_u);
    const std::uint64_t n = blocks_.size();
    put(os, n);
    for (std::uint64_t i = 0; i < n; ++i) {
        const std::uint64_t nb = blocks_[i].size(), np = points_[i].size();
        put(os, nb);
        put(os, np);
        for (const auto& b : blocks_[i]) {
            put(os, b.r1.panel);
            put(os, b.r1.t);
            put(os, b.first);
            put(os, b.count);
        }
        for (const auto& p : points_[i]) {
            put(os, p.u.panel);
            put(os, p.u.t);
            put(os, p.w.panel);
            put(os, p.w.t);
            put(os, p.weight);
        }
    }
    if (!os) throw std::runtime_error("KernelTensor::save: write failed for " + path);
}

KernelTensor KernelTensor::load(const std::string& path, GridPtr grid,
                                const DispersionRelation& disp) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("KernelTensor::load: cannot open " + path);
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("KernelTensor::load: bad magic in " + path);
    KernelTensor k;
    get(is, k.grid_hash_);
    get(is, k.disp_hash_);
    get(is, k.quad_.n_r1);
    get(is, k.quad_.n_mu);
    get(is, k.quad_.n_u);
    if (k.grid_hash_ != grid->hash() || k.disp_hash_ != disp.hash())
        throw std::runtime_error("KernelTensor::load: cache key mismatch (grid or dispersion)");
    k.grid_ = grid;
    const std::size_t n = grid->size();
    k.panel_left_.assign(grid->nodes.begin(), grid->nodes.end() - 1);
    k.panel_width_.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) k.panel_width_[i] = grid->nodes[i + 1] - grid->nodes[i];
    std::uint64_t count = 0;
    get(is, count);
    if (count != n) throw std::runtime_error("KernelTensor::load: node count mismatch");
    k.blocks_.resize(n);
    k.points_.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::uint64_t nb = 0, np = 0;
        get(is, nb);
        get(is, np);
        k.blocks_[i].resize(nb);
        k.points_[i].resize(np);
        for (auto& b : k.blocks_[i]) {
            get(is, b.r1.panel);
            get(is, b.r1.t);
            get(is, b.first);
            get(is, b.count);
        }
        for (auto& p : k.points_[i]) {
            get(is, p.u.panel);
            get(is, p.u.t);
            get(is, p.w.panel);
            get(is, p.w.t);
            get(is, p.weight);
        }
    }
    if (!is) throw std::runtime_error("KernelTensor::load: truncated file " + path);
    return k;
}

KernelTensor build_kernel(GridPtr grid, const DispersionRelation& disp, const QuadSpec& quad) {
    return KernelTensor::build(std::move(grid), disp, quad);
}

CollisionSplit apply_kernel(const KernelTensor& kernel, const DistributionState& f) {
    return kernel.apply(f);
}

}  // namespace wavekin
