#pragma once

#include "stokes/irrtype.hpp"
#include "stokes/linalg.hpp"
#include "stokes/spectra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stokes {

// L(a,b) = a^t G b.
template <class T>
struct SeifertForms {
    Matrix<T> M;   // G^{-t} G
    Matrix<T> Is;  // G + G^t
    Matrix<T> Ia;  // G^t - G
};

// Also verifies M^t G M = G and the radical dimensions of I_s and I_a.
SeifertForms<Rational> monodromy_and_forms(const MatrixQ& g);
SeifertForms<double> monodromy_and_forms(const MatrixD& g, double tol = 1e-8);

struct Classification {
    bool classified = false;
    TypeList types;
    std::string diagnostic;  // eigenvalue and block pattern when unclassified
};

Classification classify(const MatrixQ& g);
Classification classify(const MatrixD& g, double tol = 1e-8);

// Irreducible types carried by one ladder (paired: the ladder and its
// partner together), following the polarized or signed rule.
TypeList types_from_ladder(const SppLadder& ladder, bool paired, bool signed_rule);

// Throws NotLadderComposed when spp is not built from single ladders and
// ladder pairs with center m.
TypeList class_from_spp(const Spp& spp, int m, bool signed_rule);

// Nothing when either side is unclassified.
std::optional<bool> iso_equal(const MatrixQ& g1, const MatrixQ& g2);

struct EnhancementBlock {
    SppLadder ladder;
    bool paired = false;
    IrrType type;
    int copies = 1;
};

// Each block's sign or phase follows the (signed) polarized rule and the
// blocks add up to the classification of g.
bool check_enhancement(const MatrixQ& g, const std::vector<EnhancementBlock>& blocks, bool signed_rule);

// ---- semiorthogonal data ----

struct Semiorthogonal {
    MatrixQ basis;          // column j spans the j-th line of the splitting
    std::vector<int> eps;   // sign of L on each line
};

// Basis with L(v_i, v_j) = 0 for i < j; throws NotSemiorthogonal otherwise.
Semiorthogonal splitting_from_basis(const MatrixQ& g, const MatrixQ& basis);
// Column j of flag spans U_{j+1} together with the previous columns.
// Throws DegenerateFlag naming the 1-based index.
Semiorthogonal splitting_from_flag(const MatrixQ& g, const MatrixQ& flag);
// First j columns span U_j.
MatrixQ flag_from_splitting(const Semiorthogonal& s);
// Lines agree up to scaling.
bool same_splitting(const MatrixQ& a, const MatrixQ& b);

}  // namespace stokes
