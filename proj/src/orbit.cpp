#include "stokes/orbit.hpp"
#include "stokes/seifert.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <map>

namespace stokes {

namespace {

template <class T>
Matrix<T> braid_impl(int i, const Matrix<T>& s, int direction) {
    int n = s.rows();
    if (i < 1 || i >= n) fail("BadInput", "braid index out of range");
    if (direction != 1 && direction != -1) fail("BadInput", "braid direction must be +1 or -1");
    if (!is_unit_upper_triangular(s)) fail("NotUnitUpper", "braid action needs a unit upper triangular matrix");
    int p = i - 1, q = i;
    T a = s(p, q);
    Matrix<T> b = Matrix<T>::identity(n);
    b(p, p) = T(0);
    b(q, q) = T(0);
    if (direction == 1) {
        b(q, p) = T(1);
        b(p, p) = -a;
        b(p, q) = T(1);
    } else {
        b(q, p) = T(1);
        b(p, q) = T(1);
        b(q, q) = -a;
    }
    Matrix<T> g = s.transpose();
    return (b.transpose() * g * b).transpose();
}

PolyQ monodromy_charpoly(const MatrixQ& s) { return charpoly(inverse_unit_upper(s) * s.transpose()); }

std::vector<Rational> key_of(const MatrixQ& s) { return s.data(); }

}  // namespace

MatrixQ braid_act(int i, const MatrixQ& s, int direction) {
    MatrixQ out = braid_impl(i, s, direction);
    if (!is_unit_upper_triangular(out)) fail("InternalError", "braid move left the unit upper triangular matrices");
    return out;
}

MatrixD braid_act(int i, const MatrixD& s, int direction) {
    MatrixD out = braid_impl(i, s, direction);
    for (int j = 0; j < out.rows(); ++j) {
        for (int k = 0; k < j; ++k) {
            if (std::fabs(out(j, k)) > 1e-9 * (1 + std::fabs(s(k, j)))) fail("InternalError", "braid move left the unit upper triangular matrices");
            out(j, k) = 0;
        }
        out(j, j) = 1;
    }
    return out;
}

MatrixQ sign_canonical(const MatrixQ& s) {
    int n = s.rows();
    if (n > 20) fail("BadInput", "sign canonicalization limited to n <= 20");
    MatrixQ best = s;
    for (long mask = 0; mask < (1L << (n - 1)); ++mask) {
        SignVector eps(n, 1);
        for (int j = 1; j < n; ++j)
            if (mask >> (j - 1) & 1) eps[j] = -1;
        MatrixQ t = sign_act(eps, s);
        if (key_of(t) < key_of(best)) best = t;
    }
    return best;
}

OrbitReport orbit_explore(const MatrixQ& s, int depth, int budget) {
    OrbitReport rep;
    PolyQ cp = monodromy_charpoly(s);
    std::map<std::vector<Rational>, int> seen;
    std::deque<int> frontier;
    OrbitNode root{sign_canonical(s), 0, {}};
    seen[key_of(root.S)] = 0;
    rep.nodes.push_back(root);
    frontier.push_back(0);
    int n = s.rows();
    while (!frontier.empty()) {
        int idx = frontier.front();
        frontier.pop_front();
        OrbitNode node = rep.nodes[idx];
        if (node.depth >= depth) {
            rep.exhausted = true;
            continue;
        }
        for (int i = 1; i < n; ++i) {
            for (int dir : {1, -1}) {
                MatrixQ t = sign_canonical(braid_act(i, node.S, dir));
                auto key = key_of(t);
                if (seen.count(key)) continue;
                if (static_cast<int>(rep.nodes.size()) >= budget) {
                    rep.exhausted = true;
                    return rep;
                }
                if (monodromy_charpoly(t) != cp) rep.charpoly_invariant = false;
                OrbitNode child{t, node.depth + 1, node.moves};
                child.moves.push_back(dir * i);
                seen[key] = static_cast<int>(rep.nodes.size());
                rep.depth_reached = std::max(rep.depth_reached, child.depth);
                rep.nodes.push_back(child);
                frontier.push_back(static_cast<int>(rep.nodes.size()) - 1);
            }
        }
    }
    return rep;
}

std::vector<HorMatrixQ> cyclotomic_hor_pool(int n) {
    std::vector<long> ds;
    for (long d = 1; d <= 2L * n * n + 2; ++d)
        if (euler_phi(d) <= n) ds.push_back(d);
    std::vector<HorMatrixQ> out;
    std::vector<long> chosen;
    std::function<void(size_t, int)> rec = [&](size_t from, int left) {
        if (left == 0) {
            PolyQ p = PolyQ::constant(1);
            for (long d : chosen) p = p * cyclotomic(d);
            for (int k : {1, 2}) {
                if (palindrome_class(p).k != k) continue;
                try {
                    poly_to_scal(p, k);
                    out.push_back(poly_to_matrix(p, k));
                } catch (const Error&) {
                }
            }
            return;
        }
        for (size_t i = from; i < ds.size(); ++i) {
            long phi = euler_phi(ds[i]);
            if (phi > left) continue;
            chosen.push_back(ds[i]);
            rec(i, left - static_cast<int>(phi));
            chosen.pop_back();
        }
    };
    rec(0, n);
    return out;
}

StratumReport stratum_experiment(const std::vector<HorMatrixQ>& pool) {
    StratumReport rep;
    std::map<std::vector<Rational>, int> index;
    for (size_t i = 0; i < pool.size(); ++i) {
        const auto& h = pool[i];
        PolyQ cp = monodromy_charpoly(h.S);
        auto sp = recipe_spectrum(poly_to_scal(h.p, h.k));
        sort_numbers(sp);
        Classification c = classify(MatrixQ(h.S.transpose()));
        std::string seif = c.classified ? types_str(c.types) : "unclassified";
        auto [it, fresh] = index.emplace(cp.coeffs(), static_cast<int>(rep.groups.size()));
        if (fresh) rep.groups.push_back({cp, {}, {}, {}, true, false});
        auto& g = rep.groups[it->second];
        for (size_t j = 0; j < g.spectra.size(); ++j) {
            if (same_multiset(g.spectra[j], sp)) continue;
            g.spectra_differ = true;
            if (c.classified && g.seifert[j] == seif) g.agree = false;
        }
        g.members.push_back(static_cast<int>(i));
        g.spectra.push_back(sp);
        g.seifert.push_back(seif);
    }
    for (size_t g = 0; g < rep.groups.size(); ++g)
        if (!rep.groups[g].agree) rep.violations.push_back(static_cast<int>(g));
    return rep;
}

}  // namespace stokes
