#include "stokes/chain.hpp"
#include "stokes/errors.hpp"
#include "stokes/hor.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace stokes {

namespace {

constexpr long kMaxR = 2000000;

std::string tuple_str(const std::vector<long>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

std::string mono_str(const Monomial& b) {
    std::string s;
    for (size_t j = 0; j < b.size(); ++j) {
        if (!b[j]) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(j);
        if (b[j] != 1) s += "^" + std::to_string(b[j]);
    }
    return s.empty() ? "1" : s;
}

bool reduced_form(const std::vector<long>& a) {
    if (a.empty() || a[0] < 3) return false;
    for (size_t j = 1; j < a.size(); ++j)
        if (a[j] < 2) return false;
    return true;
}

std::vector<Rational> sorted(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Exact division of an integer polynomial by s^p - 1.
std::vector<std::int64_t> divide_binomial(const std::vector<std::int64_t>& num, int p) {
    int deg = static_cast<int>(num.size()) - 1;
    if (deg < p) fail("InternalError", "generating function does not divide");
    std::vector<std::int64_t> rem = num, q(deg - p + 1, 0);
    for (int i = deg; i >= p; --i) {
        q[i - p] = rem[i];
        rem[i - p] += rem[i];
        rem[i] = 0;
    }
    for (int i = 0; i < p; ++i)
        if (rem[i] != 0) fail("InternalError", "generating function does not divide");
    return q;
}

}  // namespace

ChainSing chain_invariants(const std::vector<long>& a) {
    if (a.empty()) fail("BadExponents", "empty exponent tuple");
    if (a[0] < 2) fail("BadExponents", "a_0 must be at least 2 in " + tuple_str(a));
    for (size_t j = 1; j < a.size(); ++j)
        if (a[j] < 1) fail("BadExponents", "a_j must be at least 1 in " + tuple_str(a));
    ChainSing c;
    c.a = a;
    long r_prev = 1, mu_prev = 1;
    for (long x : a) {
        if (r_prev > kMaxR / x) fail("BadExponents", "product of exponents too large in " + tuple_str(a));
        long r = r_prev * x;
        long mu = r - mu_prev;
        c.r.push_back(r);
        c.mu.push_back(mu);
        c.w.push_back(ratio(mu_prev, r));
        r_prev = r;
        mu_prev = mu;
    }
    c.milnor = c.mu.back();
    Rational prod = 1, w_prev = 0;
    for (size_t k = 0; k < a.size(); ++k) {
        if (c.w[k] != (1 - w_prev) / Rational(a[k])) fail("InternalError", "weight recursions disagree");
        prod *= 1 / c.w[k] - 1;
        w_prev = c.w[k];
    }
    if (prod != Rational(c.milnor)) fail("InternalError", "Milnor number disagrees with the weight formula");
    return c;
}

long rho(const std::vector<long>& a) {
    long total = 0, sign = 1;
    for (size_t i = 0; i <= a.size(); ++i) {
        long prod = 1;
        for (size_t j = i; j < a.size(); ++j) prod *= a[j];
        total += sign * prod;
        sign = -sign;
    }
    return total;
}

StokesPoly stokes_poly(const std::vector<long>& a) {
    ChainSing c = chain_invariants(a);
    int m = c.m();
    std::vector<SignedFactor> factors{{1, (m + 1) % 2 == 0 ? 1 : -1}};
    for (int k = 0; k <= m; ++k) factors.push_back({c.r[k], (m - k) % 2 == 0 ? 1 : -1});
    StokesPoly s;
    s.p = expand_signed_product(factors);
    if (s.p.degree() != c.milnor) fail("InternalError", "Stokes polynomial degree differs from the Milnor number");
    s.angles = signed_product_angles(factors);
    for (const auto& item : s.angles.items)
        if (item.mult != 1) fail("InternalError", "Stokes polynomial has a multiple root");
    if (s.angles.total() != c.milnor) fail("InternalError", "root count differs from the Milnor number");
    Rational p0 = s.p[0];
    if (p0 == 1) s.k = 1;
    else if (p0 == -1) s.k = 2;
    else fail("InternalError", "constant coefficient is not a sign");
    return s;
}

std::vector<Rational> qh_spectrum(const std::vector<Rational>& w) {
    long d = 1;
    for (const auto& x : w) {
        if (x <= 0 || x >= 1) fail("BadWeights", "weight " + to_string(x) + " outside (0,1)");
        d = std::lcm(d, to_long(Rational(x.get_den())));
    }
    // prod (t - t^w)/(t^w - 1) = prod s^p (s^{d-p} - 1)/(s^p - 1), s = t^{1/d}
    std::vector<std::int64_t> num{1};
    std::vector<int> den;
    for (const auto& x : w) {
        int p = static_cast<int>(to_long(x * d));
        std::vector<std::int64_t> next(num.size() + d, 0);
        for (size_t i = 0; i < num.size(); ++i) {
            next[i + d] += num[i];
            next[i + p] -= num[i];
        }
        num = next;
        den.push_back(p);
    }
    for (int p : den) num = divide_binomial(num, p);
    std::vector<Rational> out;
    for (size_t e = 0; e < num.size(); ++e) {
        if (num[e] < 0) fail("InternalError", "negative coefficient in the generating function");
        for (std::int64_t i = 0; i < num[e]; ++i) out.push_back(ratio(static_cast<long>(e), d) - 1);
    }
    return out;
}

Rational weighted_degree(const Monomial& b, const std::vector<Rational>& w) {
    Rational s = 0;
    for (size_t j = 0; j < b.size(); ++j) s += b[j] * w[j];
    return s;
}

std::vector<Monomial> jacobi_basis(const std::vector<long>& a) {
    ChainSing c = chain_invariants(a);
    if (!reduced_form(a)) fail("ReductionRequired", "basis needs a_0 >= 3 and a_j >= 2, got " + tuple_str(a));
    int m = c.m();
    std::vector<Monomial> out;
    for (int t = 0; m - 2 * t >= -1; ++t) {
        int top = m - 2 * t;  // index with bound a - 2
        Monomial tail(m + 1, 0);
        for (int i = 0; i < t; ++i) tail[m - 2 * i] = static_cast<int>(a[m - 2 * i] - 1);
        if (top < 0) {
            out.push_back(tail);
            break;
        }
        std::vector<int> bound(top + 1);
        for (int j = 0; j < top; ++j) bound[j] = static_cast<int>(a[j] - 1);
        bound[top] = static_cast<int>(a[top] - 2);
        Monomial b = tail;
        // odometer over the free indices 0..top
        for (;;) {
            out.push_back(b);
            int j = 0;
            while (j <= top && b[j] == bound[j]) b[j++] = 0;
            if (j > top) break;
            ++b[j];
        }
    }
    if (static_cast<long>(out.size()) != c.milnor) fail("InternalError", "basis size differs from the Milnor number");
    return out;
}

std::vector<Rational> spectrum_from_basis(const std::vector<long>& a) {
    ChainSing c = chain_invariants(a);
    Rational base = -1;
    for (const auto& x : c.w) base += x;
    std::vector<Rational> out;
    for (const auto& b : jacobi_basis(a)) out.push_back(base + weighted_degree(b, c.w));
    return sorted(out);
}

std::vector<int> chain_step(const std::vector<long>& a, int j) {
    int m = static_cast<int>(a.size()) - 1;
    std::vector<int> g(m + 1, 0);
    int i = m - j;
    if (i == 0) {
        g[m] = -1;
        return g;
    }
    g[j] = i % 2 ? 1 : -1;
    for (int l = j + 1; l < m; ++l) g[l] = static_cast<int>(a[l] - 1) * ((m - l) % 2 == 0 ? 1 : -1);
    g[m] = static_cast<int>(a[m]) - (i % 2 ? 2 : 1);
    return g;
}

ChainGraph chain_graph(const std::vector<long>& a) {
    ChainSing c = chain_invariants(a);
    int m = c.m();
    auto basis = jacobi_basis(a);
    std::set<Monomial> verts(basis.begin(), basis.end());
    std::map<Monomial, std::pair<Monomial, int>> next;
    std::map<Monomial, int> indeg;
    for (const auto& b : basis) {
        for (int j = 0; j <= m; ++j) {
            auto g = chain_step(a, j);
            Monomial t = b;
            bool ok = true;
            for (int l = 0; l <= m; ++l) {
                t[l] += g[l];
                if (t[l] < 0) ok = false;
            }
            if (!ok || !verts.count(t)) continue;
            if (next.count(b)) fail("ChainBroken", "two edges leave " + mono_str(b));
            next[b] = {t, j};
            if (++indeg[t] > 1) fail("ChainBroken", "two edges enter " + mono_str(t));
        }
    }
    Monomial start(m + 1, 0), end(m + 1, 0);
    for (int l = 0; l <= m; ++l) {
        bool even_index = (l % 2) == 0;
        bool start_side = (m % 2 == 0) ? even_index : !even_index;
        (start_side ? start : end)[l] = static_cast<int>(a[l] - 1);
    }
    if (m % 2 == 0) start[m] -= 1;
    if (!verts.count(start) || indeg[start] != 0) fail("ChainBroken", "chain does not start at " + mono_str(start));
    if (!verts.count(end) || next.count(end)) fail("ChainBroken", "chain does not end at " + mono_str(end));
    ChainGraph out;
    Rational wm = c.w[m];
    Monomial cur = start;
    out.vertices.push_back(cur);
    while (next.count(cur)) {
        auto [t, j] = next[cur];
        Rational inc = weighted_degree(t, c.w) - weighted_degree(cur, c.w);
        Rational want = (j % 2) == (m % 2) ? Rational(-wm) : Rational(1 - 2 * wm);
        if (inc != want) fail("ChainBroken", "edge from " + mono_str(cur) + " has the wrong weight");
        out.labels.push_back(j);
        out.increments.push_back(inc);
        out.vertices.push_back(t);
        cur = t;
        if (out.vertices.size() > basis.size()) fail("ChainBroken", "cycle through " + mono_str(cur));
    }
    if (cur != end || out.vertices.size() != basis.size())
        fail("ChainBroken", "chain misses monomials, stops at " + mono_str(cur));
    return out;
}

std::vector<Rational> stokes_spectrum(const std::vector<long>& a) {
    StokesPoly s = stokes_poly(a);
    HorScal b = scal_from_angles(s.angles, s.k, s.p.degree());
    validate(b);
    std::vector<Rational> out;
    for (const auto& x : recipe_spectrum(b)) out.push_back(x.rational());
    return out;
}

ShiftReport verify_spectrum_shift(const std::vector<long>& a) {
    ChainSing c = chain_invariants(a);
    ShiftReport r;
    r.shift = ratio(c.m() - 1, 2);
    r.sp_stokes = stokes_spectrum(a);
    r.sp_f = sorted(qh_spectrum(c.w));
    std::vector<Rational> shifted;
    for (const auto& x : r.sp_f) shifted.push_back(x - r.shift);
    r.holds = sorted(r.sp_stokes) == sorted(shifted);
    if (reduced_form(a)) {
        r.basis_route = true;
        if (spectrum_from_basis(a) != r.sp_f) r.holds = false;
        auto g = chain_graph(a);
        Rational base = -1 - r.shift;
        for (const auto& x : c.w) base += x;
        r.chain_order_ok = true;
        for (size_t j = 0; j < g.vertices.size(); ++j)
            if (base + weighted_degree(g.vertices[j], c.w) != r.sp_stokes[j]) r.chain_order_ok = false;
    }
    return r;
}

Reduction reduce_chain(const std::vector<long>& a) {
    chain_invariants(a);
    Reduction red;
    red.shift = 0;
    std::vector<long> cur = a;
    for (;;) {
        if (cur[0] == 2 && cur.size() > 1) {
            std::vector<long> next{2 * cur[1]};
            next.insert(next.end(), cur.begin() + 2, cur.end());
            cur = next;
            red.suspensions += 1;
            red.shift -= Rational(1, 2);
            continue;
        }
        if (cur[0] == 2) break;
        size_t j = 1;
        while (j < cur.size() && cur[j] >= 2) ++j;
        if (j == cur.size()) break;
        if (j < 2 || j + 1 >= cur.size())
            fail("NotReducible", "exponent 1 at position " + std::to_string(j) + " of " + tuple_str(cur));
        std::vector<long> next(cur.begin(), cur.begin() + (j - 1));
        next.push_back(cur[j - 1] * cur[j + 1]);
        next.insert(next.end(), cur.begin() + (j + 2), cur.end());
        cur = next;
        red.suspensions += 2;
        red.shift -= 1;
    }
    red.reduced = cur;
    return red;
}

namespace {

template <class T>
Matrix<T> monodromy_of(const Matrix<T>& s);

template <>
MatrixQ monodromy_of(const MatrixQ& s) { return inverse_unit_upper(s) * s.transpose(); }

template <>
MatrixD monodromy_of(const MatrixD& s) { return inverse(s) * s.transpose(); }

}  // namespace

TensorResult<Rational> thom_sebastiani(const MatrixQ& s1, const MatrixQ& s2) {
    if (!is_unit_upper_triangular(s1) || !is_unit_upper_triangular(s2))
        fail("NotUnitUpper", "factors must be unit upper triangular");
    TensorResult<Rational> t;
    t.S = kron(s1, s2);
    t.monodromy_ok = monodromy_of(t.S) == kron(monodromy_of(s1), monodromy_of(s2));
    return t;
}

TensorResult<double> thom_sebastiani(const MatrixD& s1, const MatrixD& s2, double tol) {
    if (!is_unit_upper_triangular(s1) || !is_unit_upper_triangular(s2))
        fail("NotUnitUpper", "factors must be unit upper triangular");
    TensorResult<double> t;
    t.S = kron(s1, s2);
    MatrixD diff = monodromy_of(t.S) - kron(monodromy_of(s1), monodromy_of(s2));
    double worst = 0;
    for (double x : diff.data()) worst = std::max(worst, std::fabs(x));
    t.monodromy_ok = worst < tol * std::max<double>(1, t.S.rows());
    return t;
}

std::vector<Rational> qh_ts_spectrum(const std::vector<Rational>& w1, const std::vector<Rational>& w2) {
    auto s1 = qh_spectrum(w1);
    auto s2 = qh_spectrum(w2);
    std::vector<Rational> out;
    for (const auto& x : s1)
        for (const auto& y : s2) out.push_back(x + y + 1);
    return sorted(out);
}

}  // namespace stokes
