#include "stokes/polycore.hpp"
#include "stokes/errors.hpp"
#include "stokes/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace stokes {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

PolyQ mul_binomial(const PolyQ& p, long r) {
    const auto& c = p.coeffs();
    std::vector<Rational> out(c.size() + r, Rational(0));
    for (size_t j = 0; j < c.size(); ++j) {
        out[j + r] += c[j];
        out[j] -= c[j];
    }
    return PolyQ(out);
}

// Exact division by x^r - 1; nullopt if there is a remainder.
std::optional<PolyQ> div_binomial(const PolyQ& p, long r) {
    int deg = p.degree();
    if (deg < r) {
        if (p.is_zero()) return PolyQ();
        return std::nullopt;
    }
    std::vector<Rational> q(deg - r + 1, Rational(0));
    auto qat = [&](long j) -> Rational { return j >= 0 && j < static_cast<long>(q.size()) ? q[j] : Rational(0); };
    for (long j = deg; j >= r; --j) q[j - r] = p[static_cast<int>(j)] + qat(j);
    for (long j = 0; j < r; ++j)
        if (p[static_cast<int>(j)] + qat(j) != 0) return std::nullopt;
    return PolyQ(q);
}

long mobius(long n) {
    int m = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

bool is_integral_monic(const PolyQ& p) {
    if (p.is_zero() || p.lead() != 1) return false;
    for (const auto& c : p.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

int sign_changes(const std::vector<PolyQ>& seq, const Rational& t) {
    int changes = 0, last = 0;
    for (const auto& s : seq) {
        int v = sgn(s.eval(t));
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

double scale_of(const PolyD& p) {
    double s = 1;
    for (double c : p.coeffs()) s = std::max(s, std::fabs(c));
    return s;
}

}  // namespace

int AngleMultiset::total() const {
    int t = 0;
    for (const auto& it : items) t += it.mult;
    return t;
}

bool AngleMultiset::exact() const {
    return std::all_of(items.begin(), items.end(), [](const AngleMult& a) { return a.angle.exact(); });
}

std::vector<Number> AngleMultiset::flatten() const {
    std::vector<Number> out;
    for (const auto& it : items)
        for (int i = 0; i < it.mult; ++i) out.push_back(it.angle);
    return out;
}

AngleMultiset AngleMultiset::from_list(std::vector<Number> angles) {
    std::sort(angles.begin(), angles.end(), [](const Number& a, const Number& b) { return a.value() < b.value(); });
    AngleMultiset m;
    for (const auto& a : angles) {
        if (!m.items.empty() && m.items.back().angle == a) ++m.items.back().mult;
        else m.items.push_back({a, 1});
    }
    return m;
}

PolyQ expand_signed_product(const std::vector<SignedFactor>& factors) {
    PolyQ p = PolyQ::constant(1);
    for (const auto& f : factors) {
        if (f.r <= 0 || (f.e != 1 && f.e != -1)) fail("BadFactor", "factor needs r >= 1 and e = +-1");
        if (f.e == 1) p = mul_binomial(p, f.r);
    }
    for (const auto& f : factors) {
        if (f.e != -1) continue;
        auto q = div_binomial(p, f.r);
        if (!q) fail("NotPolynomial", "x^" + std::to_string(f.r) + "-1 does not divide the numerator");
        p = *q;
    }
    return p;
}

AngleMultiset signed_product_angles(const std::vector<SignedFactor>& factors) {
    long big = 1;
    for (const auto& f : factors) big = std::lcm(big, f.r);
    AngleMultiset m;
    for (long delta = 0; delta < big; ++delta) {
        long mult = 0;
        for (const auto& f : factors)
            if (delta % (big / f.r) == 0) mult += f.e;
        if (mult < 0) fail("NotPolynomial", "negative root multiplicity at delta=" + std::to_string(delta));
        if (mult > 0) m.items.push_back({Number(Rational(delta, big)), static_cast<int>(mult)});
    }
    for (auto& it : m.items) {
        Rational q = it.angle.rational();
        q.canonicalize();
        it.angle = Number(q);
    }
    return m;
}

long euler_phi(long d) {
    long result = d;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

PolyQ cyclotomic(long d) {
    static std::mutex mu;
    static std::map<long, PolyQ> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(d);
        if (it != cache.end()) return it->second;
    }
    std::vector<SignedFactor> f;
    for (long e = 1; e <= d; ++e) {
        if (d % e) continue;
        long mu_v = mobius(d / e);
        if (mu_v != 0) f.push_back({e, static_cast<int>(mu_v)});
    }
    PolyQ p = expand_signed_product(f);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(d, p);
    return p;
}

std::optional<std::vector<std::pair<long, int>>> cyclotomic_factors(const PolyQ& p) {
    if (!is_integral_monic(p)) return std::nullopt;
    if (p.degree() == 0) return std::vector<std::pair<long, int>>{};
    if (abs(p[0]) != 1) return std::nullopt;
    long n = p.degree();
    PolyQ rem = p;
    std::vector<std::pair<long, int>> out;
    for (long d = 1; d <= 2 * n * n + 2 && rem.degree() > 0; ++d) {
        if (euler_phi(d) > rem.degree()) continue;
        PolyQ c = cyclotomic(d);
        int cnt = 0;
        while (rem.degree() >= c.degree()) {
            auto [q, r] = rem.divmod(c);
            if (!r.is_zero()) break;
            rem = q;
            ++cnt;
        }
        if (cnt) out.push_back({d, cnt});
    }
    if (rem.degree() != 0) return std::nullopt;
    return out;
}

std::optional<AngleMultiset> cyclotomic_angles(const PolyQ& p) {
    auto f = cyclotomic_factors(p);
    if (!f) return std::nullopt;
    std::vector<Number> angles;
    for (auto [d, cnt] : *f)
        for (long delta = 0; delta < d; ++delta) {
            if (std::gcd(delta, d) != 1) continue;
            for (int i = 0; i < cnt; ++i) angles.push_back(Number(Rational(delta, d)));
        }
    for (auto& a : angles) {
        Rational q = a.rational();
        q.canonicalize();
        a = Number(q);
    }
    return AngleMultiset::from_list(angles);
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = a, y = b;
    while (!y.is_zero()) {
        auto r = x.divmod(y).second;
        x = y;
        y = r;
    }
    return x.monic();
}

std::string to_string(const PolyQ& p) {
    std::string s = "[";
    for (size_t j = 0; j < p.coeffs().size(); ++j) s += (j ? "," : "") + p.coeffs()[j].get_str();
    return s + "]";
}

bool roots_on_unit_circle(const PolyQ& p_in) {
    if (p_in.is_zero()) return false;
    PolyQ p = p_in.monic();
    const PolyQ xm1({Rational(-1), Rational(1)}), xp1({Rational(1), Rational(1)});
    while (p.degree() > 0 && p.eval(Rational(1)) == 0) p = p.divmod(xm1).first;
    while (p.degree() > 0 && p.eval(Rational(-1)) == 0) p = p.divmod(xp1).first;
    int n = p.degree();
    if (n == 0) return true;
    if (n % 2) return false;
    for (int j = 0; j <= n; ++j)
        if (p[j] != p[n - j]) return false;
    int d = n / 2;
    // p(x) / x^d = q(x + 1/x)
    std::vector<PolyQ> v{PolyQ::constant(2), PolyQ({Rational(0), Rational(1)})};
    for (int j = 2; j <= d; ++j) v.push_back(PolyQ({Rational(0), Rational(1)}) * v[j - 1] - v[j - 2]);
    PolyQ q = PolyQ::constant(p[d]);
    for (int j = 1; j <= d; ++j) q = q + p[d + j] * v[j];
    std::vector<PolyQ> seq{q, q.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        auto r = seq[seq.size() - 2].divmod(seq.back()).second;
        if (r.is_zero()) break;
        seq.push_back(Rational(-1) * r);
    }
    int in_range = sign_changes(seq, Rational(-2)) - sign_changes(seq, Rational(2));
    int distinct = q.degree() - gcd(q, q.derivative()).degree();
    return in_range == distinct;
}

std::vector<PolyQ> squarefree_decomposition(const PolyQ& p_in) {
    std::vector<PolyQ> out;
    PolyQ p = p_in.monic();
    if (p.degree() <= 0) return out;
    PolyQ dp = p.derivative();
    PolyQ a0 = gcd(p, dp);
    PolyQ b = p.divmod(a0).first;
    PolyQ c = dp.divmod(a0).first;
    PolyQ d = c - b.derivative();
    while (b.degree() > 0) {
        PolyQ a = gcd(b, d);
        out.push_back(a);
        b = b.divmod(a).first;
        c = d.divmod(a).first;
        d = c - b.derivative();
    }
    return out;
}

std::vector<std::complex<double>> numeric_roots(const PolyD& p) {
    if (p.degree() <= 0) return {};
    PolyD m = p.monic();
    return eigenvalues(companion_matrix(m));
}

double angle_of(std::complex<double> z) {
    double b = -std::arg(z) / kTwoPi;
    if (b < 0) b += 1.0;
    if (b >= 1.0) b -= 1.0;
    return b;
}

std::complex<double> unit_from_angle(double beta) { return std::polar(1.0, -kTwoPi * beta); }

namespace {

[[noreturn]] void off_circle(std::complex<double> z) {
    fail("RootOffCircle", "root " + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") + std::to_string(z.imag()) +
                              "i at distance " + std::to_string(std::fabs(std::abs(z) - 1.0)) + " from S^1");
}

std::complex<double> worst_root(const PolyD& p) {
    auto roots = numeric_roots(p);
    std::complex<double> worst = roots.empty() ? 0.0 : roots[0];
    for (auto z : roots)
        if (std::fabs(std::abs(z) - 1) > std::fabs(std::abs(worst) - 1)) worst = z;
    return worst;
}

}  // namespace

AngleMultiset unit_circle_angles(const PolyQ& p, double tol) {
    if (auto exact = cyclotomic_angles(p)) return *exact;
    if (!roots_on_unit_circle(p)) off_circle(worst_root(to_double(p)));
    auto parts = squarefree_decomposition(p);
    std::vector<Number> angles;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].degree() <= 0) continue;
        for (auto z : numeric_roots(to_double(parts[i]))) {
            if (std::fabs(std::abs(z) - 1) > std::max(tol, 1e-7)) off_circle(z);
            for (size_t k = 0; k <= i; ++k) angles.push_back(Number(angle_of(z)));
        }
    }
    return AngleMultiset::from_list(angles);
}

AngleMultiset unit_circle_angles(const PolyD& p, double tol, double cluster_tol) {
    auto roots = numeric_roots(p);
    std::sort(roots.begin(), roots.end(),
              [](auto a, auto b) { return angle_of(a) < angle_of(b); });
    std::vector<std::vector<std::complex<double>>> groups;
    for (auto z : roots) {
        if (!groups.empty()) {
            double d = std::fabs(angle_of(z) - angle_of(groups.back().front()));
            if (std::min(d, 1 - d) < cluster_tol) {
                groups.back().push_back(z);
                continue;
            }
        }
        groups.push_back({z});
    }
    if (groups.size() > 1) {
        double d = std::fabs(angle_of(groups.front().front()) - angle_of(groups.back().front()));
        if (std::min(d, 1 - d) < cluster_tol) {
            groups.front().insert(groups.front().end(), groups.back().begin(), groups.back().end());
            groups.pop_back();
        }
    }
    AngleMultiset m;
    for (const auto& g : groups) {
        std::complex<double> c = 0;
        for (auto z : g) c += z;
        c /= static_cast<double>(g.size());
        if (std::fabs(std::abs(c) - 1) > tol) off_circle(c);
        m.items.push_back({Number(angle_of(c)), static_cast<int>(g.size())});
    }
    std::sort(m.items.begin(), m.items.end(),
              [](const AngleMult& a, const AngleMult& b) { return a.angle.value() < b.angle.value(); });
    return m;
}

PalindromeClass palindrome_class(const PolyQ& p, double) {
    PalindromeClass res;
    if (p.degree() < 1 || p.lead() != 1) return res;
    int n = p.degree();
    bool sym = true, anti = true;
    for (int j = 0; j <= n; ++j) {
        if (p[j] != p[n - j]) sym = false;
        if (p[j] != -p[n - j]) anti = false;
    }
    if (!sym && !anti) return res;
    if (!roots_on_unit_circle(p)) return res;
    res.k = sym ? 1 : 2;
    res.p0 = Number(p[0]);
    if (p[0] != (res.k == 1 ? 1 : -1)) fail("InternalError", "p_0 does not match the palindrome class");
    return res;
}

PalindromeClass palindrome_class(const PolyD& p, double tol) {
    PalindromeClass res;
    if (p.degree() < 1 || std::fabs(p.lead() - 1) > tol) return res;
    int n = p.degree();
    double s = scale_of(p);
    bool sym = true, anti = true;
    for (int j = 0; j <= n; ++j) {
        if (std::fabs(p[j] - p[n - j]) > tol * s) sym = false;
        if (std::fabs(p[j] + p[n - j]) > tol * s) anti = false;
    }
    if (!sym && !anti) return res;
    try {
        unit_circle_angles(p, std::max(tol, 1e-7));
    } catch (const Error&) {
        return res;
    }
    res.k = sym ? 1 : 2;
    res.p0 = Number(p[0]);
    return res;
}

// ---- cyclotomic field ----

Cyclo::Cyclo(long d, PolyQ c) : d_(d) {
    PolyQ phi = cyclotomic(d);
    c_ = c.degree() >= phi.degree() ? c.divmod(phi).second : c;
}

Cyclo Cyclo::rational(long d, const Rational& q) { return Cyclo(d, PolyQ::constant(q)); }

Cyclo Cyclo::root(long d, long e) {
    long r = ((e % d) + d) % d;
    return Cyclo(d, PolyQ::monomial(static_cast<int>(r)));
}

std::complex<double> Cyclo::value() const {
    std::complex<double> acc = 0;
    for (int j = 0; j <= c_.degree(); ++j) acc += c_[j].get_d() * std::polar(1.0, -kTwoPi * j / d_);
    return acc;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    assert(a.d_ == b.d_);
    return Cyclo(a.d_, a.c_ + b.c_);
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    assert(a.d_ == b.d_);
    return Cyclo(a.d_, a.c_ - b.c_);
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    assert(a.d_ == b.d_);
    return Cyclo(a.d_, a.c_ * b.c_);
}

// ---- Jordan chains ----

namespace {

Rational falling(long a, int j) {
    Rational r = 1;
    for (int i = 0; i < j; ++i) r *= (a - i);
    return r;
}

}  // namespace

std::vector<std::vector<std::complex<double>>> jordan_chain_vectors(
    const PolyD& p, std::complex<double> kappa, int l, double tol) {
    int n = p.degree();
    double s = scale_of(p);
    PolyD q = p;
    for (int j = 0; j <= l; ++j) {
        std::complex<double> val = 0;
        for (int i = q.degree(); i >= 0; --i) val = val * kappa + q[i];
        if (std::abs(val) > 1e3 * tol * s * std::pow(n + 1.0, j + 1))
            fail("MultiplicityTooLow", "kappa is not a root of multiplicity " + std::to_string(l + 1));
        q = q.derivative();
    }
    std::vector<std::vector<std::complex<double>>> v(l + 1, std::vector<std::complex<double>>(n, 0.0));
    for (int j = 0; j <= l; ++j)
        for (int i = 0; i < n; ++i) {
            int e = n - 1 - i;
            v[j][i] = falling(e, j).get_d() * std::pow(kappa, e);
        }
    MatrixD r = companion_matrix(p);
    for (int j = 0; j <= l; ++j) {
        for (int i = 0; i < n; ++i) {
            std::complex<double> acc = 0;
            for (int k = 0; k < n; ++k) acc += r(i, k) * v[j][k];
            acc = acc / kappa - v[j][i];
            std::complex<double> want = j ? static_cast<double>(j) * v[j - 1][i] : 0.0;
            if (std::abs(acc - want) > 1e-6 * s * std::pow(n + 1.0, j + 1))
                fail("InternalError", "Jordan chain relation violated");
        }
    }
    return v;
}

std::vector<std::vector<Cyclo>> jordan_chain_vectors(const PolyQ& p, const Rational& angle_in, int l) {
    Rational angle = frac(angle_in);
    long d = angle.get_den().get_si();
    long delta = angle.get_num().get_si();
    int n = p.degree();
    auto power = [&](long e) { return Cyclo::root(d, delta * e); };
    PolyQ q = p;
    for (int j = 0; j <= l; ++j) {
        Cyclo val = Cyclo::rational(d, 0);
        for (int i = q.degree(); i >= 0; --i) val = val * power(1) + Cyclo::rational(d, q[i]);
        if (!val.is_zero()) fail("MultiplicityTooLow", "kappa is not a root of multiplicity " + std::to_string(l + 1));
        q = q.derivative();
    }
    std::vector<std::vector<Cyclo>> v(l + 1, std::vector<Cyclo>(n));
    for (int j = 0; j <= l; ++j)
        for (int i = 0; i < n; ++i) {
            int e = n - 1 - i;
            v[j][i] = Cyclo::rational(d, falling(e, j)) * power(e);
        }
    MatrixQ r = companion_matrix(p);
    Cyclo kinv = power(-1);
    for (int j = 0; j <= l; ++j)
        for (int i = 0; i < n; ++i) {
            Cyclo acc = Cyclo::rational(d, 0);
            for (int k = 0; k < n; ++k)
                if (sgn(r(i, k)) != 0) acc = acc + Cyclo::rational(d, r(i, k)) * v[j][k];
            acc = kinv * acc - v[j][i];
            Cyclo want = j ? Cyclo::rational(d, j) * v[j - 1][i] : Cyclo::rational(d, 0);
            if (!(acc == want)) fail("InternalError", "Jordan chain relation violated");
        }
    return v;
}

}  // namespace stokes
