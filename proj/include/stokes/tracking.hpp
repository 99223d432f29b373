#pragma once

#include "stokes/hor.hpp"
#include "stokes/linalg.hpp"

#include <vector>

namespace stokes {

struct AlphaPaths {
    std::vector<double> r;                    // sample parameters
    std::vector<std::vector<double>> alpha;   // alpha[step][j]
    std::vector<double> endpoint() const { return alpha.back(); }
};

// Straight segment from gamma to beta(target) in the simplex coordinates.
// At least 64 n steps are taken. Throws CollisionInsideSimplex.
AlphaPaths simplex_path_track(const HorScal& target, int steps);
AlphaPaths simplex_path_track(const HorMatrixQ& target, int steps);

struct Collision {
    double r;
    int i, j;  // 0-based branches
};

struct TrackResult {
    AlphaPaths paths;
    std::vector<Collision> collisions;
    bool ambiguous = false;  // collisions before the endpoint make the result path dependent
};

// Piecewise linear path through the given matrices; the first must be E_n.
// Throws LeftT when a sample has an eigenvalue off the unit circle.
TrackResult generic_path_track(const std::vector<MatrixD>& path, int steps, double collision_tol = 1e-6);

}  // namespace stokes
