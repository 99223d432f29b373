#include "stokes/seifert.hpp"
#include "stokes/errors.hpp"
#include "stokes/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace stokes {

namespace {

double max_abs(const MatrixD& a) {
    double m = 0;
    for (double x : a.data()) m = std::max(m, std::fabs(x));
    return m;
}

MatrixQ poly_at(const PolyQ& f, const MatrixQ& m) {
    int n = m.rows();
    MatrixQ acc(n, n);
    for (int j = f.degree(); j >= 0; --j) acc = m * acc + f[j] * MatrixQ::identity(n);
    return acc;
}

Number zeta_l(const Number& lambda_angle, int s) {
    return -lambda_angle / Number(2) - Number(ratio(s + 1, 4));
}

// Jordan pattern from nullities nu_1..nu_mult of f(M)^j; deg = deg f.
// Returns the uniform block size, or 0 for a mixed pattern.
int uniform_size(const std::vector<int>& nu, int deg, int mult, int& count) {
    std::vector<int> at_least;
    int prev = 0;
    for (int v : nu) {
        if ((v - prev) % deg != 0) return 0;
        at_least.push_back((v - prev) / deg);
        prev = v;
    }
    at_least.push_back(0);
    int s = 0;
    for (size_t j = 0; j + 1 < at_least.size(); ++j) {
        int exactly = at_least[j] - at_least[j + 1];
        if (exactly == 0) continue;
        if (s) return 0;
        s = static_cast<int>(j) + 1;
        count = exactly;
    }
    if (s == 0 || s * count != mult) return 0;
    return s;
}

std::string pattern_str(const std::string& root, const std::vector<int>& nu) {
    std::string s = "eigenvalue " + root + " with kernel dimensions (";
    for (size_t i = 0; i < nu.size(); ++i) s += (i ? "," : "") + std::to_string(nu[i]);
    return s + ") of the powers: mixed Jordan block sizes";
}

Inertia inertia_of(const MatrixQ& a) { return inertia(a); }
Inertia inertia_of(const MatrixD& a) { return inertia(a, 1e-6); }

MatrixQ kernel(const MatrixQ& a, int) { return nullspace(a); }
MatrixD kernel(const MatrixD& a, int dim) { return nullspace(a, dim); }

template <class T>
bool real_types(const Matrix<T>& g, const Matrix<T>& m, int lam, int s, int c, TypeList& out, std::string& diag) {
    int n = m.rows();
    Matrix<T> x = T(lam) * m - Matrix<T>::identity(n);
    Matrix<T> b = kernel(power(x, s), c * s);
    bool f1 = lam == 1 ? s % 2 == 1 : s % 2 == 0;
    if (!f1) {
        if (c % 2) {
            diag = "odd number of blocks for a two-block type at eigenvalue " + std::to_string(lam);
            return false;
        }
        for (int i = 0; i < c / 2; ++i) out.push_back(IrrType::f2real(lam, s));
        return true;
    }
    Matrix<T> q = b.transpose() * g * power(x, s - 1) * b;
    Inertia in = inertia_of(q + q.transpose());
    if (in.pos + in.neg != c) {
        diag = "sign form degenerate at eigenvalue " + std::to_string(lam);
        return false;
    }
    for (int i = 0; i < in.pos; ++i) out.push_back(IrrType::f1(lam, s, 1));
    for (int i = 0; i < in.neg; ++i) out.push_back(IrrType::f1(lam, s, -1));
    return true;
}

// Quadratic factor with odd block size: the count of each zeta sign
// follows from the inertia of I_s on the real subspace.
bool quadratic_types(const MatrixQ& g, const MatrixQ& fm, const Number& angle, int s, int c, TypeList& out,
                     std::string& diag) {
    MatrixQ w = nullspace(power(fm, s));
    Inertia in = inertia(w.transpose() * (g + g.transpose()) * w);
    int minus2 = in.pos - c * (s - 1);
    if (in.zero != 0 || minus2 < 0 || minus2 % 2 || minus2 / 2 > c) {
        diag = "inconsistent I_s signature " + in.str() + " at eigenvalue angle " + angle.str();
        return false;
    }
    Number zl = zeta_l(angle, s);
    for (int i = 0; i < c - minus2 / 2; ++i) out.push_back(IrrType::f2complex(angle, s, zl));
    for (int i = 0; i < minus2 / 2; ++i) out.push_back(IrrType::f2complex(angle, s, zl + Number(Rational(1, 2))));
    return true;
}

bool hermitian_types(const MatrixD& g, const MatrixD& m, const Number& angle, int s, int c, TypeList& out,
                     std::string& diag) {
    int n = m.rows();
    using C = std::complex<double>;
    MatrixC mc = to_complex(m);
    MatrixC id = MatrixC::identity(n);
    C lam = unit_from_angle(angle.value());
    MatrixC b = nullspace(power(mc - lam * id, s), c * s);
    MatrixC xb = (C(1) / std::conj(lam)) * mc - id;
    Number zl = zeta_l(angle, s);
    C z = unit_from_angle(zl.value());
    MatrixC h = (C(1) / z) * (b.transpose() * to_complex(g) * power(xb, s - 1) * conj(b));
    Inertia in = inertia_hermitian(h, 1e-6);
    if (in.pos + in.neg != c) {
        diag = "hermitian sign form degenerate at eigenvalue angle " + angle.str();
        return false;
    }
    for (int i = 0; i < in.pos; ++i) out.push_back(IrrType::f2complex(angle, s, zl));
    for (int i = 0; i < in.neg; ++i) out.push_back(IrrType::f2complex(angle, s, zl + Number(Rational(1, 2))));
    return true;
}

void hyperbolic_types(std::complex<double> z, int s, int c, TypeList& out) {
    if (std::abs(z) <= 1) return;
    if (std::fabs(z.imag()) < 1e-12 * std::abs(z)) {
        for (int i = 0; i < c; ++i) out.push_back(IrrType::hyperbolic({z.real(), 0.0}, s));
    } else if (z.imag() > 0) {
        for (int i = 0; i < c; ++i) out.push_back(IrrType::hyperbolic(z, s));
    }
}

struct ExactClassifier {
    const MatrixQ& g;
    MatrixQ m;
    MatrixD gd, md;
    int n;
    Classification res;

    bool group(const PolyQ& f, int mult, long d) {
        int deg = f.degree();
        MatrixQ fm = poly_at(f, m);
        std::vector<int> nu;
        MatrixQ pw = MatrixQ::identity(n);
        for (int j = 1; j <= mult; ++j) {
            pw = fm * pw;
            nu.push_back(n - rank(pw));
            if (nu.back() == deg * mult) break;
        }
        int c = 0;
        int s = uniform_size(nu, deg, mult, c);
        std::string root = d ? "root of Phi_" + std::to_string(d) : "root of " + to_string(f);
        if (!s) {
            res.diagnostic = pattern_str(root, nu);
            return false;
        }
        if (d == 1 || d == 2) return real_types(g, m, d == 1 ? 1 : -1, s, c, res.types, res.diagnostic);
        if (d >= 3) {
            for (long r = 1; 2 * r < d; ++r) {
                if (std::gcd(r, d) != 1) continue;
                Number angle(ratio(r, d));
                bool ok = deg == 2 && s % 2 == 1 ? quadratic_types(g, fm, angle, s, c, res.types, res.diagnostic)
                                                 : hermitian_types(gd, md, angle, s, c, res.types, res.diagnostic);
                if (!ok) return false;
            }
            return true;
        }
        for (auto z : numeric_roots(to_double(f))) {
            if (std::fabs(std::abs(z) - 1) > 1e-8) {
                hyperbolic_types(z, s, c, res.types);
                continue;
            }
            if (z.imag() >= 0) continue;
            Number angle(angle_of(z));
            bool ok = deg == 2 && s % 2 == 1 ? quadratic_types(g, fm, angle, s, c, res.types, res.diagnostic)
                                             : hermitian_types(gd, md, angle, s, c, res.types, res.diagnostic);
            if (!ok) return false;
        }
        return true;
    }
};

}  // namespace

SeifertForms<Rational> monodromy_and_forms(const MatrixQ& g) {
    if (!g.square() || rank(g) < g.rows()) fail("Singular", "Gram matrix is not invertible");
    int n = g.rows();
    SeifertForms<Rational> f;
    f.M = inverse(g.transpose()) * g;
    f.Is = g + g.transpose();
    f.Ia = g.transpose() - g;
    MatrixQ id = MatrixQ::identity(n);
    if (f.M.transpose() * g * f.M != g) fail("InternalError", "monodromy does not preserve L");
    if (n - rank(f.Is) != n - rank(f.M + id) || n - rank(f.Ia) != n - rank(f.M - id))
        fail("InternalError", "radical dimensions disagree with the monodromy kernels");
    return f;
}

SeifertForms<double> monodromy_and_forms(const MatrixD& g, double tol) {
    if (!g.square() || rank(g, tol) < g.rows()) fail("Singular", "Gram matrix is not invertible");
    SeifertForms<double> f;
    f.M = inverse(g.transpose()) * g;
    f.Is = g + g.transpose();
    f.Ia = g.transpose() - g;
    if (max_abs(f.M.transpose() * g * f.M - g) > 1e-6 * std::max(1.0, max_abs(g)))
        fail("InternalError", "monodromy does not preserve L");
    return f;
}

Classification classify(const MatrixQ& g) {
    auto forms = monodromy_and_forms(g);
    ExactClassifier ec{g, forms.M, to_double(g), to_double(forms.M), g.rows(), {}};
    ec.res.classified = true;
    auto parts = squarefree_decomposition(charpoly(forms.M));
    for (size_t i = 0; i < parts.size(); ++i) {
        PolyQ q = parts[i];
        int mult = static_cast<int>(i) + 1;
        if (q.degree() <= 0) continue;
        for (long d = 1; q.degree() > 0 && d <= 2L * q.degree() * q.degree() + 2; ++d) {
            if (euler_phi(d) > q.degree()) continue;
            PolyQ phi = cyclotomic(d);
            for (;;) {
                auto [quot, rem] = q.divmod(phi);
                if (!rem.is_zero()) break;
                q = quot;
                if (!ec.group(phi, mult, d)) {
                    ec.res.classified = false;
                    return ec.res;
                }
            }
        }
        if (q.degree() > 0 && !ec.group(q.monic(), mult, 0)) {
            ec.res.classified = false;
            return ec.res;
        }
    }
    sort_types(ec.res.types);
    return ec.res;
}

Classification classify(const MatrixD& g, double tol) {
    auto forms = monodromy_and_forms(g, tol);
    const MatrixD& m = forms.M;
    int n = g.rows();
    Classification res;
    res.classified = true;
    auto eig = eigenvalues(m);
    std::vector<std::vector<std::complex<double>>> clusters;
    for (auto z : eig) {
        bool placed = false;
        for (auto& cl : clusters)
            if (std::abs(cl.front() - z) < 1e-5 * std::max(1.0, std::abs(z))) {
                cl.push_back(z);
                placed = true;
                break;
            }
        if (!placed) clusters.push_back({z});
    }
    MatrixC mc = to_complex(m);
    MatrixC id = MatrixC::identity(n);
    for (const auto& cl : clusters) {
        std::complex<double> lam = 0;
        for (auto z : cl) lam += z;
        lam /= static_cast<double>(cl.size());
        int mult = static_cast<int>(cl.size());
        bool on_circle = std::fabs(std::abs(lam) - 1) < 1e-7;
        if (on_circle) lam /= std::abs(lam);
        int sign = 0;
        if (std::abs(lam - 1.0) < 1e-7) sign = 1;
        if (std::abs(lam + 1.0) < 1e-7) sign = -1;
        if (sign) lam = static_cast<double>(sign);
        if (!sign && lam.imag() > 0 && on_circle) continue;
        if (!on_circle && std::abs(lam) < 1) continue;
        std::vector<int> nu;
        MatrixC pw = id;
        for (int j = 1; j <= mult; ++j) {
            pw = (mc - lam * id) * pw;
            nu.push_back(n - rank(pw, tol));
            if (nu.back() == mult) break;
        }
        int c = 0;
        int s = uniform_size(nu, 1, mult, c);
        if (!s) {
            res.classified = false;
            res.diagnostic = pattern_str(std::to_string(lam.real()) + "+" + std::to_string(lam.imag()) + "i", nu);
            return res;
        }
        bool ok = true;
        if (sign) ok = real_types(g, m, sign, s, c, res.types, res.diagnostic);
        else if (on_circle) ok = hermitian_types(g, m, Number(angle_of(lam)), s, c, res.types, res.diagnostic);
        else hyperbolic_types(lam, s, c, res.types);
        if (!ok) {
            res.classified = false;
            return res;
        }
    }
    sort_types(res.types);
    return res;
}

TypeList types_from_ladder(const SppLadder& ladder, bool paired, bool signed_rule) {
    Number d = Number(2) * ladder.alpha + Number(ladder.l + 1 - ladder.m);
    int size = ladder.l + 1;
    Number lam = (ladder.alpha + Number(ratio(ladder.m + 1, 2))).mod(Number(1));
    int flip = signed_rule && ladder.l % 2 ? -1 : 1;
    if (!d.is_integer()) {
        Number zeta = -d / Number(4) + (flip < 0 ? Number(Rational(1, 2)) : Number(0));
        return {IrrType::f2complex(lam, size, zeta)};
    }
    int sign = lam.is_zero() ? 1 : -1;
    long di = std::lround(d.value());
    if (di % 2 != 0) return {IrrType::f2real(sign, size)};
    int eps = ((di / 2) % 2 == 0 ? 1 : -1) * flip;
    if (paired) return {IrrType::f1(sign, size, eps), IrrType::f1(sign, size, eps)};
    return {IrrType::f1(sign, size, eps)};
}

namespace {

// Moves every pair by an even integer so that alpha + level/2 lies in
// (m - 3/2, m + 1/2]; members of one ladder move together.
Spp normalize_mod2(const Spp& spp, int m) {
    Spp out;
    Number lo = Number(m) - Number(ratio(3, 2));
    for (const auto& p : spp.pairs()) {
        Number c = p.alpha + Number(ratio(p.level, 2));
        Number shift = Number(2) * ((c - lo) / Number(2)).floor();
        if (shift == c - lo) shift -= Number(2);
        out.add({p.alpha - shift, p.level});
    }
    return out;
}

std::vector<LadderEntry> ladders_mod2(const Spp& spp, int m) {
    try {
        auto entries = decompose_into_ladders(spp, m);
        bool complete = std::none_of(entries.begin(), entries.end(),
                                     [](const LadderEntry& e) { return e.role == LadderEntry::Role::Unpaired; });
        if (complete) return entries;
    } catch (const Error& e) {
        if (e.code() != "NotLadderComposed") throw;
    }
    return decompose_into_ladders(normalize_mod2(spp, m), m);
}

}  // namespace

TypeList class_from_spp(const Spp& spp, int m, bool signed_rule) {
    TypeList out;
    auto entries = ladders_mod2(spp, m);
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        TypeList t;
        if (e.role == LadderEntry::Role::Unpaired)
            fail("NotLadderComposed", "ladder with first spectral number " + e.ladder.alpha.str() + " has no partner");
        if (e.role == LadderEntry::Role::Single) t = types_from_ladder(e.ladder, false, signed_rule);
        else if (e.partner > static_cast<int>(i)) t = types_from_ladder(e.ladder, true, signed_rule);
        out.insert(out.end(), t.begin(), t.end());
    }
    sort_types(out);
    return out;
}

std::optional<bool> iso_equal(const MatrixQ& g1, const MatrixQ& g2) {
    if (g1.rows() != g2.rows()) return false;
    auto a = classify(g1);
    auto b = classify(g2);
    if (!a.classified || !b.classified) return std::nullopt;
    return same_types(a.types, b.types);
}

bool check_enhancement(const MatrixQ& g, const std::vector<EnhancementBlock>& blocks, bool signed_rule) {
    TypeList total;
    for (const auto& b : blocks) {
        TypeList want = types_from_ladder(b.ladder, b.paired, signed_rule);
        if (want.front() != b.type) return false;
        for (int i = 0; i < b.copies; ++i) total.insert(total.end(), want.begin(), want.end());
    }
    auto c = classify(g);
    return c.classified && same_types(total, c.types);
}

Semiorthogonal splitting_from_basis(const MatrixQ& g, const MatrixQ& basis) {
    int n = g.rows();
    if (basis.rows() != n || basis.cols() != n || rank(basis) < n) fail("BadBasis", "expected n independent vectors");
    MatrixQ l = basis.transpose() * g * basis;
    Semiorthogonal s{basis, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sgn(l(i, j)) != 0)
                fail("NotSemiorthogonal", "L(v_" + std::to_string(i + 1) + ", v_" + std::to_string(j + 1) + ") != 0");
    for (int j = 0; j < n; ++j) {
        if (sgn(l(j, j)) == 0) fail("NotSemiorthogonal", "L vanishes on line " + std::to_string(j + 1));
        s.eps.push_back(sgn(l(j, j)));
    }
    return s;
}

Semiorthogonal splitting_from_flag(const MatrixQ& g, const MatrixQ& flag) {
    int n = g.rows();
    if (flag.rows() != n || flag.cols() != n || rank(flag) < n) fail("BadFlag", "expected a complete flag");
    for (int j = 1; j <= n; ++j) {
        MatrixQ u = flag.cols_range(0, j);
        MatrixQ perp = nullspace(u.transpose() * g);
        if (perp.cols() > 0 && intersect_spans(u, perp).cols() > 0)
            fail("DegenerateFlag", "U_" + std::to_string(j) + " meets its right orthogonal complement");
    }
    MatrixQ basis(n, n);
    Semiorthogonal s;
    for (int j = 1; j <= n; ++j) {
        MatrixQ u = flag.cols_range(0, j);
        MatrixQ h = u;
        if (j > 1) h = intersect_spans(u, nullspace(flag.cols_range(0, j - 1).transpose() * g));
        if (h.cols() != 1) fail("DegenerateFlag", "H^(" + std::to_string(j) + ") is not a line");
        for (int i = 0; i < n; ++i) basis(i, j - 1) = h(i, 0);
        MatrixQ v = h.col(0);
        Rational q = (v.transpose() * g * v)(0, 0);
        if (sgn(q) == 0) fail("DegenerateFlag", "L vanishes on H^(" + std::to_string(j) + ")");
        s.eps.push_back(sgn(q));
    }
    s.basis = basis;
    return s;
}

MatrixQ flag_from_splitting(const Semiorthogonal& s) { return s.basis; }

bool same_splitting(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int j = 0; j < a.cols(); ++j) {
        MatrixQ pair = hconcat(a.col(j), b.col(j));
        if (rank(pair) != 1) return false;
    }
    return true;
}

}  // namespace stokes
