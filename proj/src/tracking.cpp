#include "stokes/tracking.hpp"
#include "stokes/errors.hpp"
#include "stokes/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stokes {

namespace {

// Signed difference b - a on the circle R/Z, in [-1/2, 1/2).
double circ_diff(double a, double b) {
    double d = std::fmod(b - a, 1.0);
    if (d < -0.5) d += 1;
    if (d >= 0.5) d -= 1;
    return d;
}

// Continues the lifted angles prev onto the unordered angles now by
// nearest matching, closest pairs first.
std::vector<double> match(const std::vector<double>& prev, const std::vector<double>& now) {
    int n = static_cast<int>(prev.size());
    struct Cand {
        double dist;
        int i, j;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cands.push_back({std::fabs(circ_diff(prev[i], now[j])), i, j});
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.dist < b.dist; });
    std::vector<double> out(n);
    std::vector<bool> used_i(n), used_j(n);
    for (const auto& c : cands) {
        if (used_i[c.i] || used_j[c.j]) continue;
        used_i[c.i] = used_j[c.j] = true;
        out[c.i] = prev[c.i] + circ_diff(prev[c.i], now[c.j]);
    }
    return out;
}

double min_gap(const std::vector<double>& angles) {
    double g = 1;
    for (size_t i = 0; i < angles.size(); ++i)
        for (size_t j = i + 1; j < angles.size(); ++j) g = std::min(g, std::fabs(circ_diff(angles[i], angles[j])));
    return g;
}

std::string r_str(double r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace

AlphaPaths simplex_path_track(const HorScal& target, int steps) {
    validate(target);
    int n = target.n(), k = target.k;
    steps = std::max(steps, 64 * n);
    HorScal gamma = gamma_base(k, n);
    std::vector<double> theta(n), end(n);
    for (int j = 0; j < n; ++j) {
        theta[j] = gamma.beta[j].value();
        end[j] = target.beta[j].value();
    }
    auto to_alpha = [&](const std::vector<double>& th) {
        std::vector<double> a(n);
        for (int j = 0; j < n; ++j) a[j] = n * th[j] - (j + 1) + k / 2.0;
        return a;
    };
    AlphaPaths out;
    out.r.push_back(0);
    out.alpha.push_back(std::vector<double>(n, 0.0));
    for (int s = 1; s <= steps; ++s) {
        std::vector<double> angles;
        if (s < steps) {
            HorScal b{k, {}};
            for (int j = 0; j < n; ++j) {
                Number r = target.exact() ? Number(ratio(s, steps)) : Number(double(s) / steps);
                b.beta.push_back(gamma.beta[j] + r * (target.beta[j] - gamma.beta[j]));
            }
            for (auto z : numeric_roots(scal_to_poly_numeric(b))) angles.push_back(angle_of(z));
            if (min_gap(angles) < 1e-9)
                fail("CollisionInsideSimplex", "eigenvalues of R collide at r=" + r_str(double(s) / steps));
        } else {
            angles = end;
        }
        theta = match(theta, angles);
        out.r.push_back(double(s) / steps);
        out.alpha.push_back(to_alpha(theta));
    }
    return out;
}

AlphaPaths simplex_path_track(const HorMatrixQ& target, int steps) {
    return simplex_path_track(poly_to_scal(target.p, target.k), steps);
}

TrackResult generic_path_track(const std::vector<MatrixD>& path, int steps, double collision_tol) {
    if (path.empty()) fail("BadPath", "empty path");
    int n = path.front().rows();
    MatrixD id = MatrixD::identity(n);
    for (const auto& m : path)
        if (m.rows() != n || !is_unit_upper_triangular(m)) fail("BadPath", "path samples must be unit upper triangular of one size");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::fabs(path.front()(i, j) - id(i, j)) > 1e-12) fail("BadPath", "path must start at the unit matrix");
    int segs = static_cast<int>(path.size()) - 1;
    steps = std::max(steps, 1);
    TrackResult res;
    std::vector<double> alpha(n, 0.0);
    res.paths.r.push_back(0);
    res.paths.alpha.push_back(alpha);
    if (segs == 0) return res;
    for (int s = 1; s <= steps; ++s) {
        double r = double(s) / steps;
        double pos = r * segs;
        int seg = std::min(static_cast<int>(pos), segs - 1);
        double t = pos - seg;
        MatrixD sm = (1 - t) * path[seg] + t * path[seg + 1];
        MatrixD mono = inverse(sm) * sm.transpose();
        std::vector<double> angles;
        for (auto z : eigenvalues(mono)) {
            if (std::fabs(std::abs(z) - 1) > 1e-6) fail("LeftT", "sample leaves T(n,R) at r=" + r_str(r));
            angles.push_back(angle_of(z));
        }
        // alpha is tracked through exp(-2 pi i alpha), so the lift is alpha itself
        alpha = match(alpha, angles);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::fabs(circ_diff(alpha[i], alpha[j])) < collision_tol) {
                    res.collisions.push_back({r, i, j});
                    if (s < steps) res.ambiguous = true;
                }
        res.paths.r.push_back(r);
        res.paths.alpha.push_back(alpha);
    }
    return res;
}

}  // namespace stokes
