#pragma once

#include "stokes/errors.hpp"
#include "stokes/hor.hpp"
#include "stokes/linalg.hpp"

#include <string>
#include <vector>

namespace stokes {

using SignVector = std::vector<int>;

// diag(eps) S diag(eps)
template <class T>
Matrix<T> sign_act(const SignVector& eps, const Matrix<T>& s) {
    if (static_cast<int>(eps.size()) != s.rows()) fail("BadInput", "sign vector length differs from n");
    Matrix<T> out = s;
    for (int i = 0; i < s.rows(); ++i)
        for (int j = 0; j < s.cols(); ++j)
            if (eps[i] * eps[j] < 0) out(i, j) = -out(i, j);
    return out;
}

// Mutation of the basis at positions i, i+1 (1-based i). Direction +1:
// d'_i = d_{i+1} - s_{i,i+1} d_i, d'_{i+1} = d_i; direction -1 inverts it.
MatrixQ braid_act(int i, const MatrixQ& s, int direction);
MatrixD braid_act(int i, const MatrixD& s, int direction);

// Lexicographically smallest member of the sign orbit.
MatrixQ sign_canonical(const MatrixQ& s);

struct OrbitNode {
    MatrixQ S;
    int depth = 0;
    std::vector<int> moves;  // signed 1-based braid indices from the start
};

struct OrbitReport {
    std::vector<OrbitNode> nodes;  // canonical representatives, BFS order
    bool exhausted = false;        // budget hit before the orbit closed
    int depth_reached = 0;
    bool charpoly_invariant = true;
};

OrbitReport orbit_explore(const MatrixQ& s, int depth, int budget);

// Every HOR matrix whose polynomial is a product of cyclotomic polynomials
// of total degree n, for both families.
std::vector<HorMatrixQ> cyclotomic_hor_pool(int n);

struct StratumGroup {
    PolyQ charpoly;                       // of S^{-1} S^t
    std::vector<int> members;             // indices into the pool
    std::vector<std::vector<Number>> spectra;
    std::vector<std::string> seifert;     // class of each member
    bool agree = true;                    // equal Seifert class implies equal spectrum
    bool spectra_differ = false;          // some members have different spectra
};

struct StratumReport {
    std::vector<StratumGroup> groups;
    std::vector<int> violations;  // groups that fail agree
};

StratumReport stratum_experiment(const std::vector<HorMatrixQ>& pool);

}  // namespace stokes
