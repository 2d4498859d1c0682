#include "stabdyn/perron.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace stabdyn {

namespace {

// Strongly connected components of the sparsity digraph (edge i -> j iff
// a[i][j] > 0), Tarjan's algorithm.  Matrix sizes here are tiny, so the
// recursive form is fine.
std::vector<std::vector<int>> strongly_connected_components(
    const RealMatrix& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> index(n, -1), lowlink(n, 0), stack;
    std::vector<bool> on_stack(n, false);
    std::vector<std::vector<int>> components;
    int next_index = 0;

    std::function<void(int)> visit = [&](int v) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w = 0; w < n; ++w) {
            if (a[v][w] <= 0.0) {
                continue;
            }
            if (index[w] < 0) {
                visit(w);
                lowlink[v] = std::min(lowlink[v], lowlink[w]);
            } else if (on_stack[w]) {
                lowlink[v] = std::min(lowlink[v], index[w]);
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<int> component;
            while (true) {
                int w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                component.push_back(w);
                if (w == v) {
                    break;
                }
            }
            components.push_back(std::move(component));
        }
    };

    for (int v = 0; v < n; ++v) {
        if (index[v] < 0) {
            visit(v);
        }
    }
    return components;
}

// Osborne balancing restricted to exact power-of-2 similarity factors, so
// no rounding error is introduced.  Shrinks the entry spread so that the
// largest entry is within a modest factor of the block's spectral radius;
// mirrors the LAPACK gebal improvement test to guarantee termination.
void balance_in_place(RealMatrix& b) {
    const int m = static_cast<int>(b.size());
    if (m < 2) {
        return;
    }
    for (int sweep = 0; sweep < 200; ++sweep) {
        bool changed = false;
        for (int i = 0; i < m; ++i) {
            double r = 0.0, c = 0.0;
            for (int j = 0; j < m; ++j) {
                if (j == i) {
                    continue;
                }
                r += b[i][j];
                c += b[j][i];
            }
            if (r <= 0.0 || c <= 0.0) {
                continue;
            }
            int e = static_cast<int>(std::lround(0.5 * std::log2(r / c)));
            e = std::clamp(e, -512, 512);
            if (e == 0) {
                continue;
            }
            const double f = std::ldexp(1.0, e);
            if (c * f + r / f >= 0.95 * (c + r)) {
                continue;
            }
            for (int j = 0; j < m; ++j) {
                if (j == i) {
                    continue;
                }
                b[j][i] *= f;
                b[i][j] /= f;
            }
            changed = true;
        }
        if (!changed) {
            break;
        }
    }
}

double max_entry(const RealMatrix& b) {
    double best = 0.0;
    for (const auto& row : b) {
        for (double v : row) {
            best = std::max(best, v);
        }
    }
    return best;
}

// Max row sum; the normalization used between squarings.
double inf_norm(const RealMatrix& b) {
    double best = 0.0;
    for (const auto& row : b) {
        double s = 0.0;
        for (double v : row) {
            s += v;
        }
        best = std::max(best, s);
    }
    return best;
}

RealMatrix square(const RealMatrix& b) {
    const int m = static_cast<int>(b.size());
    RealMatrix out(m, std::vector<double>(m, 0.0));
    for (int i = 0; i < m; ++i) {
        for (int k = 0; k < m; ++k) {
            const double v = b[i][k];
            if (v == 0.0) {
                continue;
            }
            for (int j = 0; j < m; ++j) {
                out[i][j] += v * b[k][j];
            }
        }
    }
    return out;
}

// rho of an irreducible block (every vertex lies on a cycle, so rho > 0).
double irreducible_block_radius(RealMatrix b) {
    const int m = static_cast<int>(b.size());
    if (m == 1) {
        return b[0][0];
    }
    balance_in_place(b);

    // Shift to break periodicity; undone exactly at the end since the
    // Perron root of a nonnegative matrix shifts by exactly eps.
    const double eps = 1e-3 * max_entry(b);
    for (int i = 0; i < m; ++i) {
        b[i][i] += eps;
    }

    // log rho(B) = log s_0 + sum_j 2^{-j} log s_j + 2^{-J} log rho(B_J)
    // where B_0 = B / s_0 and B_j = B_{j-1}^2 / s_j.  After J squarings with
    // 2^J >= m - 1 the block is entrywise positive (irreducible matrices
    // with positive diagonal satisfy B^{m-1} > 0), which makes the
    // Collatz-Wielandt enclosure below tight and fast.
    int squarings = 4;
    while ((1 << squarings) < m - 1) {
        ++squarings;
    }
    double log_rho = 0.0;
    double s = inf_norm(b);
    log_rho += std::log(s);
    for (auto& row : b) {
        for (double& v : row) {
            v /= s;
        }
    }
    for (int j = 1; j <= squarings; ++j) {
        b = square(b);
        s = inf_norm(b);
        log_rho += std::ldexp(std::log(s), -j);
        for (auto& row : b) {
            for (double& v : row) {
                v /= s;
            }
        }
    }

    std::vector<double> x(m, 1.0), y(m, 0.0);
    double lower = 0.0, upper = 0.0;
    for (int iter = 0; iter < 100000; ++iter) {
        double ymax = 0.0;
        for (int i = 0; i < m; ++i) {
            double acc = 0.0;
            for (int j = 0; j < m; ++j) {
                acc += b[i][j] * x[j];
            }
            y[i] = acc;
            ymax = std::max(ymax, acc);
        }
        lower = y[0] / x[0];
        upper = lower;
        for (int i = 1; i < m; ++i) {
            const double ratio = y[i] / x[i];
            lower = std::min(lower, ratio);
            upper = std::max(upper, ratio);
        }
        if (upper - lower <= 1e-13 * upper) {
            break;
        }
        for (int i = 0; i < m; ++i) {
            x[i] = y[i] / ymax;
        }
    }
    log_rho += std::ldexp(std::log(0.5 * (lower + upper)), -squarings);
    return std::max(std::exp(log_rho) - eps, 0.0);
}

}  // namespace

double spectral_radius(const RealMatrix& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) {
        throw std::invalid_argument("spectral_radius: empty matrix");
    }
    for (const auto& row : a) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("spectral_radius: matrix not square");
        }
        for (double v : row) {
            if (!(v >= 0.0) || !std::isfinite(v)) {
                throw std::invalid_argument(
                    "spectral_radius: entries must be finite and nonnegative");
            }
        }
    }

    double rho = 0.0;
    for (const auto& component : strongly_connected_components(a)) {
        const int m = static_cast<int>(component.size());
        if (m == 1) {
            // Singleton component: rho contribution is the self-loop weight.
            rho = std::max(rho, a[component[0]][component[0]]);
            continue;
        }
        RealMatrix block(m, std::vector<double>(m, 0.0));
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                block[i][j] = a[component[i]][component[j]];
            }
        }
        rho = std::max(rho, irreducible_block_radius(std::move(block)));
    }
    return rho;
}

double entropy_at(const LaurentMatrix& m, double t) {
    const double rho = spectral_radius(eval_matrix(m, std::exp(-t)));
    // rho == 0 iff the sparsity digraph is acyclic iff M is nilpotent; the
    // growth curve is undefined in that case.
    if (rho == 0.0) {
        throw NilpotentError("entropy_at: nilpotent matrix");
    }
    return std::log(rho);
}

Slopes asymptotic_slopes(const LaurentMatrix& m) {
    if (is_nilpotent(m)) {
        throw NilpotentError("asymptotic_slopes: nilpotent matrix");
    }
    const DegreeRange range = degree_range(m);
    return Slopes{-static_cast<double>(range.max),
                  -static_cast<double>(range.min)};
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
    if (n < 2 || !(lo < hi)) {
        throw std::invalid_argument(
            "uniform_grid: need n >= 2 points and lo < hi");
    }
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    return grid;
}

std::vector<double> default_grid() { return uniform_grid(-10.0, 10.0, 201); }

double lower_basic(const EntropySample& s) {
    return std::max(s.slope_minus * s.t, s.slope_plus * s.t);
}

double upper_basic(const EntropySample& s) {
    return s.h_zero + lower_basic(s);
}

double lower_sharp(const EntropySample& s) {
    return std::max(lower_basic(s),
                    s.h_zero + std::min(s.slope_minus * s.t,
                                        s.slope_plus * s.t));
}

EntropyCurve sample_entropy_curve(const LaurentMatrix& m,
                                  const std::vector<double>& grid) {
    if (grid.empty()) {
        throw std::invalid_argument("sample_entropy_curve: empty grid");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
            throw std::invalid_argument(
                "sample_entropy_curve: grid must be strictly increasing");
        }
    }
    const double h_zero = entropy_at(m, 0.0);
    const Slopes slopes = asymptotic_slopes(m);
    EntropyCurve curve;
    curve.grid = grid;
    curve.samples.reserve(grid.size());
    for (double t : grid) {
        curve.samples.push_back(EntropySample{
            t, entropy_at(m, t), slopes.phi_minus, slopes.phi_plus, h_zero});
    }
    return curve;
}

BoundReport check_pl_bounds(const EntropyCurve& curve) {
    BoundReport report{0.0, 0.0};
    if (!curve.samples.empty()) {
        report.worst_t = curve.samples.front().t;
    }
    for (const EntropySample& s : curve.samples) {
        const double excess = std::max(
            {lower_sharp(s) - s.value, s.value - upper_basic(s), 0.0});
        if (excess > report.max_violation) {
            report.max_violation = excess;
            report.worst_t = s.t;
        }
    }
    return report;
}

BoundReport check_pl_bounds(const LaurentMatrix& m,
                            const std::vector<double>& grid) {
    return check_pl_bounds(sample_entropy_curve(m, grid));
}

double convexity_defect(const LaurentMatrix& m,
                        const std::vector<double>& grid) {
    if (grid.size() < 3) {
        throw std::invalid_argument("convexity_defect: need at least 3 points");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i - 1] < grid[i])) {
            throw std::invalid_argument(
                "convexity_defect: grid must be strictly increasing");
        }
    }
    std::vector<double> h(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        h[i] = entropy_at(m, grid[i]);
    }
    double worst = 0.0;
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double lam = (grid[i] - grid[i - 1]) / (grid[i + 1] - grid[i - 1]);
        const double chord = h[i - 1] + lam * (h[i + 1] - h[i - 1]);
        worst = std::max(worst, h[i] - chord);
    }
    return worst;
}

bool convexity_check(const LaurentMatrix& m, const std::vector<double>& grid,
                     double tol) {
    return convexity_defect(m, grid) <= tol;
}

}  // namespace stabdyn
