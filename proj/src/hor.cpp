#include "stokes/hor.hpp"
#include "stokes/seifert.hpp"
#include "stokes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace stokes {

namespace {

constexpr double kPi = std::numbers::pi;

Number half() { return Number(Rational(1, 2)); }

std::string beta_str(const HorScal& b) {
    std::string s = "(";
    for (int j = 0; j < b.n(); ++j) s += (j ? "," : "") + b.beta[j].str();
    return s + ")";
}

int mirror(int j, int n, int k) {
    // 0-based partner under the k-symmetry; -1 when position j is fixed to 0.
    if (k == 1) return n - 1 - j;
    if (j == 0) return -1;
    return n - j;
}

double residual_norm(const MatrixD& a) {
    double m = 0;
    for (double x : a.data()) m = std::max(m, std::fabs(x));
    return m;
}

MatrixD residual(const MatrixQ& a, const MatrixQ& b) { return to_double(a - b); }

double scale_of(const MatrixD& a) { return std::max(1.0, residual_norm(a)); }

template <class T>
Matrix<T> sign_times(int k, const Matrix<T>& m) {
    return k == 1 ? T(-1) * m : m;
}

// Symmetrizes a numeric point onto the family.
void symmetrize(HorScal& b) {
    int n = b.n();
    std::vector<Number> out = b.beta;
    for (int j = 0; j < n; ++j) {
        int m = mirror(j, n, b.k);
        if (m < 0) {
            out[j] = Number(0);
            continue;
        }
        if (b.beta[j].exact() && b.beta[m].exact()) continue;
        double v = 0.5 * (b.beta[j].value() + 1.0 - b.beta[m].value());
        out[j] = Number(v);
    }
    b.beta = out;
}

}  // namespace

bool HorScal::exact() const {
    return std::all_of(beta.begin(), beta.end(), [](const Number& x) { return x.exact(); });
}

void validate(const HorScal& b) {
    int n = b.n();
    if (b.k != 1 && b.k != 2) fail("NotInFamily", "k must be 1 or 2");
    if (n < 1) fail("NotInFamily", "empty angle tuple");
    for (int j = 0; j < n; ++j) {
        if (b.beta[j] < Number(0) || b.beta[j] > Number(1))
            fail("NotInFamily", "angle outside [0,1] in " + beta_str(b));
        if (j && b.beta[j] < b.beta[j - 1]) fail("NotInFamily", "angles not nondecreasing in " + beta_str(b));
        int m = mirror(j, n, b.k);
        if (m < 0) {
            if (!b.beta[j].is_zero()) fail("NotInFamily", "k=2 requires beta_1 = 0");
        } else if (b.beta[j] + b.beta[m] != Number(1)) {
            fail("NotInFamily", "symmetry beta_j + beta_mirror = 1 fails in " + beta_str(b));
        }
    }
}

HorScal gamma_base(int k, int n) {
    HorScal g;
    g.k = k;
    for (int j = 1; j <= n; ++j) g.beta.push_back(Number(ratio(2 * j - k, 2 * n)));
    return g;
}

std::optional<PolyQ> scal_to_poly_exact(const HorScal& b) {
    validate(b);
    if (!b.exact()) return std::nullopt;
    std::map<long, std::map<long, int>> count;
    for (const auto& x : b.beta) {
        Rational r = frac(x.rational());
        if (!r.get_den().fits_slong_p()) return std::nullopt;
        count[r.get_den().get_si()][r.get_num().get_si()]++;
    }
    PolyQ p = PolyQ::constant(1);
    for (const auto& [d, residues] : count) {
        if (static_cast<long>(residues.size()) != euler_phi(d)) return std::nullopt;
        int c = residues.begin()->second;
        for (const auto& [r, m] : residues)
            if (m != c) return std::nullopt;
        PolyQ phi = cyclotomic(d);
        for (int i = 0; i < c; ++i) p = p * phi;
    }
    return p;
}

PolyD scal_to_poly_numeric(const HorScal& b) {
    validate(b);
    std::vector<std::complex<double>> c{1.0};
    for (const auto& x : b.beta) {
        std::complex<double> z = unit_from_angle(x.value());
        std::vector<std::complex<double>> next(c.size() + 1, 0.0);
        for (size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= z * c[i];
        }
        c = next;
    }
    std::vector<double> re;
    for (auto z : c) re.push_back(z.real());
    re.back() = 1.0;
    return PolyD(re);
}

HorScal scal_from_angles(const AngleMultiset& angles, int k, int n) {
    int zeros = 0;
    std::vector<Number> rest;
    for (const auto& item : angles.items) {
        bool at_one = item.angle.is_zero() || (!item.angle.exact() && item.angle.value() > 1 - 1e-7);
        if (at_one) zeros += item.mult;
        else
            for (int i = 0; i < item.mult; ++i) rest.push_back(item.angle);
    }
    if ((k == 1) != (zeros % 2 == 0)) fail("NotInFamily", "multiplicity of the root 1 has the wrong parity");
    HorScal b;
    b.k = k;
    int low = k == 1 ? zeros / 2 : (zeros + 1) / 2;
    for (int i = 0; i < low; ++i) b.beta.push_back(Number(0));
    sort_numbers(rest);
    for (const auto& x : rest) b.beta.push_back(x);
    while (b.n() < n) b.beta.push_back(Number(1));
    return b;
}


HorScal poly_to_scal(const PolyQ& p, int k) {
    if (palindrome_class(p).k != k) fail("NotInFamily", "polynomial " + to_string(p) + " is not in family " + std::to_string(k));
    HorScal b = scal_from_angles(unit_circle_angles(p), k, p.degree());
    symmetrize(b);
    validate(b);
    return b;
}

HorScal poly_to_scal(const PolyD& p, int k, double tol) {
    if (palindrome_class(p, tol).k != k) fail("NotInFamily", "polynomial is not in family " + std::to_string(k));
    HorScal b = scal_from_angles(unit_circle_angles(p, std::max(tol, 1e-9)), k, p.degree());
    symmetrize(b);
    validate(b);
    return b;
}

HorMatrixQ poly_to_matrix(const PolyQ& p, int k) {
    if (p.degree() < 1 || palindrome_class(p).k != k)
        fail("NotInFamily", "polynomial " + to_string(p) + " is not in family " + std::to_string(k));
    return {k, p, banded_matrix(p)};
}

HorMatrixD poly_to_matrix(const PolyD& p, int k, double tol) {
    if (p.degree() < 1 || palindrome_class(p, tol).k != k)
        fail("NotInFamily", "polynomial is not in family " + std::to_string(k));
    return {k, p, banded_matrix(p)};
}

std::optional<HorMatrixQ> hor_from_matrix(const MatrixQ& s) {
    if (!is_unit_upper_triangular(s)) return std::nullopt;
    int n = s.rows();
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    for (int d = 1; d < n; ++d) c[n - d] = s(0, d);
    if (banded_matrix(PolyQ(c)) != s) return std::nullopt;
    for (int p0 : {1, -1}) {
        c[0] = p0;
        PolyQ p(c);
        int k = palindrome_class(p).k;
        if (k) return HorMatrixQ{k, p, s};
    }
    return std::nullopt;
}

std::optional<HorMatrixD> hor_from_matrix(const MatrixD& s, double tol) {
    if (!s.square()) return std::nullopt;
    int n = s.rows();
    std::vector<double> c(n + 1, 0.0);
    c[n] = 1;
    for (int d = 1; d < n; ++d) c[n - d] = s(0, d);
    MatrixD want = banded_matrix(PolyD(c));
    if (residual_norm(want - s) > tol * scale_of(s)) return std::nullopt;
    for (double p0 : {1.0, -1.0}) {
        c[0] = p0;
        PolyD p(c);
        int k = palindrome_class(p, tol).k;
        if (k) return HorMatrixD{k, p, s};
    }
    return std::nullopt;
}

std::vector<Number> recipe_spectrum(const HorScal& b) {
    validate(b);
    int n = b.n();
    std::vector<Number> a;
    for (int j = 1; j <= n; ++j) a.push_back(Number(n) * b.beta[j - 1] - Number(j) + Number(ratio(b.k, 2)));
    return a;
}

std::vector<KappaGroup> recipe_groups(const HorScal& b) {
    std::vector<Number> alpha = recipe_spectrum(b);
    std::vector<KappaGroup> groups;
    for (int j = 0; j < b.n(); ++j) {
        Number kappa = b.beta[j].mod(Number(1));
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const KappaGroup& g) { return angles_equal(g.kappa, kappa, 1e-9); });
        if (it == groups.end()) {
            groups.push_back({kappa, {j}, {}});
        } else {
            it->indices.push_back(j);
        }
    }
    for (auto& g : groups) {
        std::vector<Number> a;
        for (int j : g.indices) a.push_back(alpha[j]);
        sort_numbers(a);
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i] - a[i - 1] != Number(1))
                fail("NotArithmeticGroup", "spectral numbers at kappa angle " + g.kappa.str() + " are not consecutive");
        g.ladder = {a.front(), 1, static_cast<int>(a.size()) - 1};
    }
    return groups;
}

Spp recipe_spectral_pairs(const HorScal& b) {
    Spp s;
    for (const auto& g : recipe_groups(b)) s.add(ladder_members(g.ladder));
    return s;
}

namespace {

struct RealizeSearch {
    int n, k;
    std::vector<Number> pool;
    std::vector<bool> used;
    std::vector<Number> seq;
    std::vector<bool> set;
    long budget = 200000;

    int take(const Number& v, int skip = -1) {
        for (size_t i = 0; i < pool.size(); ++i)
            if (!used[i] && static_cast<int>(i) != skip && pool[i] == v) return static_cast<int>(i);
        return -1;
    }

    bool chain_ok(int j) const { return j == 0 || seq[j] >= seq[j - 1] - Number(1); }

    bool go(int j) {
        if (--budget < 0) return false;
        if (j == n) return true;
        if (set[j]) return chain_ok(j) && go(j + 1);
        int m = mirror(j, n, k);
        if (m < 0 || m == j) {
            int i = take(Number(0));
            if (i < 0) return false;
            used[i] = true;
            seq[j] = Number(0);
            set[j] = true;
            if (chain_ok(j) && go(j + 1)) return true;
            used[i] = false;
            set[j] = false;
            return false;
        }
        std::vector<Number> cand;
        for (size_t i = 0; i < pool.size(); ++i) {
            if (used[i]) continue;
            if (std::none_of(cand.begin(), cand.end(), [&](const Number& c) { return c == pool[i]; }))
                cand.push_back(pool[i]);
        }
        sort_numbers(cand);
        std::reverse(cand.begin(), cand.end());
        for (const auto& v : cand) {
            if (j == 0 && k == 1 && v < -half()) continue;
            int i1 = take(v);
            used[i1] = true;
            int i2 = take(-v);
            if (i2 < 0) {
                used[i1] = false;
                continue;
            }
            used[i2] = true;
            seq[j] = v;
            seq[m] = -v;
            set[j] = set[m] = true;
            if (chain_ok(j) && go(j + 1)) return true;
            used[i1] = used[i2] = false;
            set[j] = set[m] = false;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Number>> is_realizable_spectrum(std::vector<Number> candidate, int n, int k) {
    if (static_cast<int>(candidate.size()) != n || n < 1 || (k != 1 && k != 2)) return std::nullopt;
    RealizeSearch s{n, k, candidate, std::vector<bool>(n, false), std::vector<Number>(n), std::vector<bool>(n, false)};
    if (!s.go(0)) return std::nullopt;
    return s.seq;
}

Number max_gap(std::vector<Number> spectrum) {
    sort_numbers(spectrum);
    Number g(0);
    for (size_t i = 1; i < spectrum.size(); ++i) g = std::max(g, spectrum[i] - spectrum[i - 1]);
    return g;
}

namespace {

template <class T>
std::pair<Poly<T>, int> negate_impl(const Poly<T>& p, int k, int cls) {
    if (cls != k) fail("NotInFamily", "polynomial is not in family " + std::to_string(k));
    int n = p.degree();
    std::vector<T> c(n + 1);
    for (int j = 0; j <= n; ++j) c[j] = (n + j) % 2 ? T(-p[j]) : T(p[j]);
    return {Poly<T>(c), (k + n) % 2 ? 1 : 2};
}

}  // namespace

std::pair<PolyQ, int> negate_poly_transform(const PolyQ& p, int k) {
    auto r = negate_impl(p, k, palindrome_class(p).k);
    if (palindrome_class(r.first).k != r.second) fail("InternalError", "negated polynomial left the family");
    return r;
}

std::pair<PolyD, int> negate_poly_transform(const PolyD& p, int k) {
    return negate_impl(p, k, palindrome_class(p).k);
}

PowerIdentity verify_power_identity(const HorMatrixQ& h) {
    PowerIdentity res;
    int n = h.n();
    MatrixQ r = r_matrix(h);
    MatrixQ st = h.S.transpose();
    MatrixQ lhs = sign_times(h.k, inverse_unit_upper(h.S) * st);
    MatrixQ rn = power(r, n);
    res.power_ok = lhs == rn;
    res.power_residual = residual(lhs, rn);
    MatrixQ resp = r.transpose() * st * r;
    res.respects_ok = resp == st;
    res.respects_residual = residual(resp, st);
    return res;
}

PowerIdentity verify_power_identity(const HorMatrixD& h, double tol) {
    PowerIdentity res;
    int n = h.n();
    MatrixD r = r_matrix(h);
    MatrixD st = h.S.transpose();
    MatrixD lhs = sign_times(h.k, inverse(h.S) * st);
    MatrixD rn = power(r, n);
    res.power_residual = lhs - rn;
    res.power_ok = residual_norm(res.power_residual) <= tol * scale_of(rn);
    MatrixD resp = r.transpose() * st * r;
    res.respects_residual = resp - st;
    res.respects_ok = residual_norm(res.respects_residual) <= tol * scale_of(st);
    return res;
}

namespace {

template <class T>
std::vector<Matrix<T>> pl_factors(const Matrix<T>& s, int k) {
    int n = s.rows();
    T sg = k == 1 ? T(-1) : T(1);
    std::vector<Matrix<T>> out;
    for (int j = 0; j < n; ++j) {
        Matrix<T> r(n, n);
        int c = 0;
        for (int i = j + 1; i < n; ++i) r(0, c++) = -s(j, i);
        for (int i = 0; i < j; ++i) r(0, c++) = sg * s(i, j);
        r(0, c) = sg;
        for (int i = 1; i < n; ++i) r(i, i - 1) = T(1);
        out.push_back(r);
    }
    return out;
}

}  // namespace

PlFactors<Rational> pl_factor_product(const MatrixQ& s, int k) {
    if (!is_unit_upper_triangular(s)) fail("NotUnitUpper", "matrix is not unit upper triangular");
    PlFactors<Rational> res;
    res.factors = pl_factors(s, k);
    MatrixQ prod = MatrixQ::identity(s.rows());
    for (const auto& f : res.factors) prod = prod * f;
    res.ok = prod == sign_times(k, inverse_unit_upper(s) * s.transpose());
    return res;
}

PlFactors<double> pl_factor_product(const MatrixD& s, int k, double tol) {
    PlFactors<double> res;
    res.factors = pl_factors(s, k);
    MatrixD prod = MatrixD::identity(s.rows());
    for (const auto& f : res.factors) prod = prod * f;
    MatrixD want = sign_times(k, inverse(s) * s.transpose());
    res.ok = residual_norm(prod - want) <= tol * scale_of(want);
    return res;
}

namespace {

double wrap_pi(double x) {
    x = std::remainder(x, 2 * kPi);
    return std::fabs(x);
}

}  // namespace

std::vector<EnhancementEntry> hor_enhancement(const HorScal& b, bool throw_on_violation) {
    auto groups = recipe_groups(b);
    PolyD p;
    if (auto exact = scal_to_poly_exact(b)) p = to_double(*exact);
    else p = scal_to_poly_numeric(b);
    MatrixD g = banded_matrix(p).transpose();
    MatrixD r = companion_matrix(p);
    int n = b.n();
    std::vector<EnhancementEntry> out;
    for (const auto& grp : groups) {
        EnhancementEntry e;
        e.kappa = grp.kappa;
        e.ladder = grp.ladder;
        bool real = grp.kappa.is_zero() || grp.kappa == half();
        e.representative = real || grp.kappa < half();
        e.types = types_from_ladder(grp.ladder, !real, false);
        int l = grp.ladder.l;
        std::complex<double> kappa = unit_from_angle(grp.kappa.value());
        try {
            auto v = jordan_chain_vectors(p, kappa, l);
            const auto& a = v[l];
            std::vector<std::complex<double>> w(n);
            for (int i = 0; i < n; ++i) w[i] = std::conj(a[i]);
            std::complex<double> kb = std::conj(kappa);
            for (int t = 0; t < l; ++t) {
                std::vector<std::complex<double>> nw(n, 0.0);
                for (int i = 0; i < n; ++i) {
                    for (int c = 0; c < n; ++c) nw[i] += r(i, c) * w[c];
                    nw[i] = nw[i] / kb - w[i];
                }
                w = nw;
            }
            std::complex<double> z = 0;
            double mag = 0;
            for (int i = 0; i < n; ++i) {
                std::complex<double> gw = 0;
                for (int c = 0; c < n; ++c) gw += g(i, c) * w[c];
                z += a[i] * gw;
                mag += std::abs(a[i]) * std::abs(gw);
            }
            double want = kPi * (2 * grp.ladder.alpha.value() + l) / 2;
            e.phase_error = std::abs(z) > 1e-12 * std::max(mag, 1e-300) ? wrap_pi(std::arg(z) - want) : kPi;
            e.phase_ok = e.phase_error <= 1e-6;
        } catch (const Error&) {
            e.phase_ok = false;
            e.phase_error = kPi;
        }
        if (!e.phase_ok && throw_on_violation)
            fail("PhaseViolation", "phase law fails at kappa angle " + e.kappa.str() + " (error " +
                                       std::to_string(e.phase_error) + " rad)");
        out.push_back(e);
    }
    return out;
}

TypeList enhancement_types(const std::vector<EnhancementEntry>& e) {
    TypeList t;
    for (const auto& x : e)
        if (x.representative) t.insert(t.end(), x.types.begin(), x.types.end());
    return t;
}

namespace {

Inertia predicted_signature(const HorScal& b) {
    Inertia s;
    for (const auto& a : recipe_spectrum(b)) {
        Number r = (a + half()).mod(Number(1));
        if (r.is_zero()) continue;  // alpha in 1/2 + Z
        Number m2 = a.mod(Number(2));
        if (m2 < half() || m2 > Number(Rational(3, 2))) ++s.pos;
        else ++s.neg;
    }
    return s;
}

}  // namespace

SignaturePair is_signature(const HorScal& b, const MatrixQ& s) {
    SignaturePair res;
    res.predicted = predicted_signature(b);
    int n = s.rows();
    MatrixQ m = inverse_unit_upper(s) * s.transpose();
    PolyQ cp = charpoly(m);
    PolyQ lin{Rational(1), Rational(1)};
    int mult = 0;
    while (cp.degree() > 0) {
        auto [q, rem] = cp.divmod(lin);
        if (!rem.is_zero()) break;
        cp = q;
        ++mult;
    }
    MatrixQ basis = MatrixQ::identity(n);
    if (mult > 0) basis = column_basis(power(m + MatrixQ::identity(n), mult));
    MatrixQ is = s + s.transpose();
    res.computed = inertia(basis.transpose() * is * basis);
    return res;
}

SignaturePair is_signature(const HorScal& b, const MatrixD& s, double tol) {
    SignaturePair res;
    res.predicted = predicted_signature(b);
    int n = s.rows();
    MatrixD m = inverse(s) * s.transpose();
    int mult = 0;
    for (auto z : eigenvalues(m))
        if (std::abs(z + 1.0) < 1e-5) ++mult;
    MatrixD basis = MatrixD::identity(n);
    if (mult > 0) basis = range_basis(power(m + MatrixD::identity(n), mult), n - mult);
    MatrixD is = s + s.transpose();
    MatrixD form = basis.transpose() * is * basis;
    res.computed = inertia(form, tol);
    double sc = 1, low = INFINITY;
    for (int i = 0; i < form.rows(); ++i)
        for (int j = 0; j < form.cols(); ++j) sc = std::max(sc, std::fabs(form(i, j)));
    for (auto z : eigenvalues(form)) low = std::min(low, std::abs(z));
    res.margin = form.rows() ? low / sc : INFINITY;
    return res;
}

DualBasis dual_basis_matrix(const HorMatrixQ& h) {
    DualBasis d;
    int n = h.n();
    d.matrix = inverse(r_matrix(h)).transpose();
    MatrixQ want(n, n);
    for (int j = 0; j + 1 < n; ++j) want(j + 1, j) = 1;
    for (int i = 0; i < n; ++i) want(i, n - 1) = -h.p[i];
    d.shape_ok = d.matrix == want;
    return d;
}

HorScal random_hor_scal(int n, int k, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 0.5);
    int free = k == 1 ? n / 2 : (n - 1) / 2;
    std::vector<double> t(free);
    for (auto& x : t) x = u(rng);
    std::sort(t.begin(), t.end());
    HorScal b;
    b.k = k;
    b.beta.assign(n, Number(0));
    int first = k == 1 ? 0 : 1;
    for (int i = 0; i < free; ++i) {
        int j = first + i;
        b.beta[j] = Number(t[i]);
        b.beta[mirror(j, n, k)] = Number(1.0 - t[i]);
    }
    for (int j = 0; j < n; ++j) {
        int m = mirror(j, n, k);
        if (m == j) b.beta[j] = half();
    }
    return b;
}

PolyQ random_cyclotomic_hor(int n, int k, std::mt19937_64& rng) {
    for (;;) {
        PolyQ p = PolyQ::constant(1);
        int r = n;
        std::bernoulli_distribution more(0.8);
        while (r >= 2 && more(rng)) {
            std::vector<long> ds;
            for (long d = 3; d <= 2L * r * r + 6; ++d)
                if (euler_phi(d) <= r) ds.push_back(d);
            long d = ds[std::uniform_int_distribution<size_t>(0, ds.size() - 1)(rng)];
            p = p * cyclotomic(d);
            r -= static_cast<int>(euler_phi(d));
        }
        std::vector<int> es;
        for (int e = 0; e <= r; ++e)
            if ((e % 2 == 1) == (k == 2)) es.push_back(e);
        if (es.empty()) continue;
        int e = es[std::uniform_int_distribution<size_t>(0, es.size() - 1)(rng)];
        for (int i = 0; i < e; ++i) p = p * cyclotomic(1);
        for (int i = 0; i < r - e; ++i) p = p * cyclotomic(2);
        return p;
    }
}

}  // namespace stokes
