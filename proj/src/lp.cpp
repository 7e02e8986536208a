#include "conserv/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "conserv/errors.hpp"
#include "conserv/tolerances.hpp"

namespace conserv {

namespace {

constexpr double kPivotTol = 1e-11;

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0),
                                                  basis_(rows, 0) {}

    double& at(std::size_t r, std::size_t c) { return t_[r * (cols_ + 1) + c]; }
    double& rhs(std::size_t r) { return at(r, cols_); }
    double& cost(std::size_t c) { return at(rows_, c); }
    std::size_t& basis(std::size_t r) { return basis_[r]; }

    void pivot(std::size_t r, std::size_t c) {
        const double p = at(r, c);
        for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == r) continue;
            const double f = at(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
            at(i, c) = 0.0;
        }
        basis_[r] = c;
    }

    // Runs simplex iterations over columns [0, allowed). Returns false when unbounded.
    bool optimize(std::size_t allowed) {
        for (;;) {
            std::size_t enter = allowed;
            for (std::size_t j = 0; j < allowed; ++j) {
                if (cost(j) < -kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter == allowed) return true;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows_; ++i)
                if (at(i, enter) > kPivotTol) best = std::min(best, rhs(i) / at(i, enter));
            std::size_t leave = rows_;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (at(i, enter) <= kPivotTol || rhs(i) / at(i, enter) > best + kPivotTol) continue;
                if (leave == rows_ || basis_[i] < basis_[leave]) leave = i;
            }
            if (leave == rows_) return false;
            pivot(leave, enter);
        }
    }

    std::size_t rows() const { return rows_; }

private:
    std::size_t rows_, cols_;
    std::vector<double> t_;
    std::vector<std::size_t> basis_;
};

}  // namespace

LpResult minimize(const std::vector<std::vector<double>>& a, std::vector<double> b, const std::vector<double>& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw DomainError("minimize: row count mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("minimize: column count mismatch");

    // Columns: n structural variables, then m artificials.
    Tableau t(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        const double sign = b[i] < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * a[i][j];
        t.at(i, n + i) = 1.0;
        t.rhs(i) = sign * b[i];
        t.basis(i) = n + i;
    }

    // Phase 1: minimize the sum of artificials.
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) t.cost(j) -= t.at(i, j);
        t.cost(n + m) -= t.rhs(i);
    }
    t.optimize(n + m);
    LpResult out;
    if (-t.cost(n + m) > kFitTolerance * 1e-3) return out;

    // Drive remaining artificials out of the basis where possible.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis(i) < n) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (std::abs(t.at(i, j)) > kPivotTol) {
                t.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2 reduced costs.
    for (std::size_t j = 0; j <= n + m; ++j) t.cost(j) = 0.0;
    for (std::size_t j = 0; j < n; ++j) t.cost(j) = c[j];
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t bj = t.basis(i);
        if (bj >= n || c[bj] == 0.0) continue;
        for (std::size_t j = 0; j <= n + m; ++j) t.cost(j) -= c[bj] * t.at(i, j);
    }
    if (!t.optimize(n)) {
        out.status = LpStatus::unbounded;
        return out;
    }
    out.status = LpStatus::optimal;
    out.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis(i) < n) out.x[t.basis(i)] = t.rhs(i);
    out.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) out.objective += c[j] * out.x[j];
    return out;
}

double hull_distance(std::span<const Belief> points, const Belief& p) {
    if (points.empty()) throw DomainError("hull_distance: no points");
    const std::size_t k = points.size();
    const std::size_t d = p.dimension();
    // Variables: lambda (k), t, s_plus (d), s_minus (d).
    const std::size_t nv = k + 1 + 2 * d;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (std::size_t s = 0; s < d; ++s) {
        std::vector<double> upper(nv, 0.0), lower(nv, 0.0);
        for (std::size_t j = 0; j < k; ++j) {
            if (points[j].dimension() != d) throw DomainError("hull_distance: dimension mismatch");
            upper[j] = lower[j] = points[j][s];
        }
        upper[k] = -1.0;  // (V lambda)_s - t + s+ = p_s
        upper[k + 1 + s] = 1.0;
        lower[k] = 1.0;   // (V lambda)_s + t - s- = p_s
        lower[k + 1 + d + s] = -1.0;
        a.push_back(std::move(upper));
        b.push_back(p[s]);
        a.push_back(std::move(lower));
        b.push_back(p[s]);
    }
    std::vector<double> sum(nv, 0.0);
    for (std::size_t j = 0; j < k; ++j) sum[j] = 1.0;
    a.push_back(std::move(sum));
    b.push_back(1.0);
    std::vector<double> c(nv, 0.0);
    c[k] = 1.0;
    const LpResult r = minimize(a, b, c);
    if (r.status != LpStatus::optimal) throw DomainError("hull_distance: solver failed");
    return std::max(0.0, r.objective);
}

bool in_hull(std::span<const Belief> points, const Belief& p) { return hull_distance(points, p) <= kFitTolerance; }

}  // namespace conserv
