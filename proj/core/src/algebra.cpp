#include "mubkit/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace mubkit {

bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

struct ExtensionSpec {
    int p, m;
    std::vector<int> poly;  // monic irreducible, ascending coefficients
};

// Desk-scale prime-power coverage. Larger prime powers are rejected rather
// than silently mishandled.
const std::map<int, ExtensionSpec>& extension_table() {
    static const std::map<int, ExtensionSpec> table = {
        {4,  {2, 2, {1, 1, 1}}},           // x^2 + x + 1
        {8,  {2, 3, {1, 1, 0, 1}}},        // x^3 + x + 1
        {9,  {3, 2, {1, 0, 1}}},           // x^2 + 1
        {16, {2, 4, {1, 1, 0, 0, 1}}},     // x^4 + x + 1
        {25, {5, 2, {1, 1, 1}}},           // x^2 + x + 1
        {27, {3, 3, {1, 2, 0, 1}}},        // x^3 + 2x + 1
        {32, {2, 5, {1, 0, 1, 0, 0, 1}}},  // x^5 + x^2 + 1
        {49, {7, 2, {1, 0, 1}}},           // x^2 + 1
    };
    return table;
}

std::vector<int> digits(int e, int p, int m) {
    std::vector<int> d(m, 0);
    for (int i = 0; i < m; ++i) { d[i] = e % p; e /= p; }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int e = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) e = e * p + d[i];
    return e;
}

}  // namespace

FieldTable::FieldTable(int q) : q_(q) {
    if (q < 2) throw std::invalid_argument("field_new: order must be >= 2");
    int m = 1;
    std::vector<int> poly;
    if (is_prime(q)) {
        p_ = q;
    } else {
        auto it = extension_table().find(q);
        if (it == extension_table().end())
            throw std::invalid_argument(
                "field_new: unsupported order " + std::to_string(q) +
                " (prime, or a prime power in {4,8,9,16,25,27,32,49})");
        p_ = it->second.p;
        m = it->second.m;
        poly = it->second.poly;
    }

    add_.assign(static_cast<std::size_t>(q_) * q_, 0);
    mul_.assign(static_cast<std::size_t>(q_) * q_, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    chi_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        auto da = digits(a, p_, m);
        for (int b = 0; b < q_; ++b) {
            auto db = digits(b, p_, m);
            std::vector<int> s(m);
            for (int i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p_;
            add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(undigits(s, p_));

            // polynomial product reduced modulo the defining polynomial
            std::vector<int> prod(2 * m - 1, 0);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            for (int deg = 2 * m - 2; deg >= m; --deg) {
                int c = prod[deg];
                if (c == 0) continue;
                prod[deg] = 0;
                for (int i = 0; i < m; ++i)
                    prod[deg - m + i] = ((prod[deg - m + i] - c * poly[i]) % p_ + p_) % p_;
            }
            prod.resize(m);
            mul_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint16_t>(undigits(prod, p_));
        }
    }
    for (int a = 0; a < q_; ++a) {
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) == 0) neg_[a] = static_cast<std::uint16_t>(b);
            if (a != 0 && mul(a, b) == 1) inv_[a] = static_cast<std::uint16_t>(b);
        }
    }
    for (int a = 1; a < q_; ++a) chi_[mul(a, a)] = 1;
    if (p_ != 2)
        for (int a = 1; a < q_; ++a)
            if (chi_[a] == 0) chi_[a] = -1;

    verify_axioms();
}

int FieldTable::check(int a) const {
    if (a < 0 || a >= q_) throw std::out_of_range("FieldTable: element out of range");
    return a;
}

int FieldTable::inv(int a) const {
    if (check(a) == 0) throw std::domain_error("FieldTable: inverse of zero");
    return inv_[a];
}

void FieldTable::verify_axioms() const {
    for (int a = 0; a < q_; ++a) {
        if (add(a, 0) != a || mul(a, 1) != a)
            throw std::logic_error("FieldTable: identity axiom failed");
        if (a != 0 && mul(a, inv_[a]) != 1)
            throw std::logic_error("FieldTable: missing multiplicative inverse");
        if (add(a, neg_[a]) != 0)
            throw std::logic_error("FieldTable: missing additive inverse");
    }
    for (int a = 0; a < q_; ++a)
        for (int b = 0; b < q_; ++b) {
            if (add(a, b) != add(b, a) || mul(a, b) != mul(b, a))
                throw std::logic_error("FieldTable: commutativity failed");
            for (int c = 0; c < q_; ++c) {
                if (add(add(a, b), c) != add(a, add(b, c)))
                    throw std::logic_error("FieldTable: additive associativity failed");
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw std::logic_error("FieldTable: multiplicative associativity failed");
                if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c)))
                    throw std::logic_error("FieldTable: distributivity failed");
            }
        }
}

FieldTable field_new(int q) { return FieldTable(q); }

std::vector<std::vector<std::vector<int>>> mols_from_field(const FieldTable& f) {
    const int q = f.order();
    std::vector<std::vector<std::vector<int>>> squares;
    squares.reserve(q - 1);
    for (int a = 1; a < q; ++a) {
        std::vector<std::vector<int>> L(q, std::vector<int>(q));
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                L[i][j] = f.add(f.mul(a, i), j);
        squares.push_back(std::move(L));
    }
    return squares;
}

namespace {

constexpr int kMaxFlatOrder = 4096;

FlatMatrix from_signs(const std::vector<double>& h, int n) {
    FlatMatrix m;
    m.order = n;
    m.kind = FlatKind::RealHadamard;
    m.entries.resize(static_cast<std::size_t>(n) * n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < m.entries.size(); ++i) m.entries[i] = cplx{h[i] * s, 0.0};
    return m;
}

// Unscaled +-1 Hadamard via Sylvester doubling.
std::vector<double> sylvester_signs(int n) {
    std::vector<double> h{1.0};
    int cur = 1;
    while (cur < n) {
        std::vector<double> next(static_cast<std::size_t>(cur) * cur * 4);
        for (int i = 0; i < 2 * cur; ++i)
            for (int j = 0; j < 2 * cur; ++j) {
                double v = h[static_cast<std::size_t>(i % cur) * cur + (j % cur)];
                if (i >= cur && j >= cur) v = -v;
                next[static_cast<std::size_t>(i) * 2 * cur + j] = v;
            }
        h = std::move(next);
        cur *= 2;
    }
    return h;
}

bool paley_supported_order(int q) {
    return is_prime(q) || extension_table().count(q) > 0;
}

std::vector<double> paley_signs(int q) {
    FieldTable f(q);
    const int res = q % 4;
    if (res == 3) {
        const int n = q + 1;
        std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
        auto at = [&](int i, int j) -> double& { return h[static_cast<std::size_t>(i) * n + j]; };
        // H = I + S with S skew: border of +-1, core the Jacobsthal matrix
        for (int j = 1; j < n; ++j) { at(0, j) = 1.0; at(j, 0) = -1.0; }
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < q; ++j)
                at(i + 1, j + 1) = static_cast<double>(f.chi(f.sub(i, j)));
        for (int i = 0; i < n; ++i) at(i, i) += 1.0;
        return h;
    }
    // type II: symmetric conference core C, each entry expanded to a 2x2 cell
    const int nc = q + 1;
    std::vector<double> c(static_cast<std::size_t>(nc) * nc, 0.0);
    auto cat = [&](int i, int j) -> double& { return c[static_cast<std::size_t>(i) * nc + j]; };
    for (int j = 1; j < nc; ++j) { cat(0, j) = 1.0; cat(j, 0) = 1.0; }
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            cat(i + 1, j + 1) = static_cast<double>(f.chi(f.sub(i, j)));
    const int n = 2 * nc;
    std::vector<double> h(static_cast<std::size_t>(n) * n, 0.0);
    const double A[2][2] = {{1, 1}, {1, -1}};   // carries C's entry
    const double B[2][2] = {{1, -1}, {-1, -1}}; // diagonal cell
    for (int i = 0; i < nc; ++i)
        for (int j = 0; j < nc; ++j)
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    h[static_cast<std::size_t>(2 * i + a) * n + (2 * j + b)] =
                        cat(i, j) * A[a][b] + (i == j ? B[a][b] : 0.0);
    return h;
}

bool real_available_impl(int n, std::map<int, bool>& memo) {
    if (n == 1 || n == 2) return true;
    if (n % 4 != 0) return false;
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    memo[n] = false;  // guard against divisor recursion cycles
    bool ok = (n & (n - 1)) == 0;  // Sylvester
    if (!ok && paley_supported_order(n - 1) && (n - 1) % 4 == 3) ok = true;
    if (!ok && n % 2 == 0) {
        const int q = n / 2 - 1;
        if (paley_supported_order(q) && q % 4 == 1) ok = true;
    }
    if (!ok)
        for (int a = 2; a * a <= n && !ok; ++a)
            if (n % a == 0 && real_available_impl(a, memo) && real_available_impl(n / a, memo))
                ok = true;
    memo[n] = ok;
    return ok;
}

FlatMatrix tensor(const FlatMatrix& x, const FlatMatrix& y) {
    FlatMatrix m;
    m.order = x.order * y.order;
    m.kind = (x.kind == FlatKind::RealHadamard && y.kind == FlatKind::RealHadamard)
                 ? FlatKind::RealHadamard
                 : FlatKind::Fourier;
    m.entries.resize(static_cast<std::size_t>(m.order) * m.order);
    // pre-scaled factors multiply straight to the (ab)^(-1/2) target magnitude
    for (int i = 0; i < m.order; ++i)
        for (int j = 0; j < m.order; ++j)
            m.entries[static_cast<std::size_t>(i) * m.order + j] =
                x.at(i / y.order, j / y.order) * y.at(i % y.order, j % y.order);
    return m;
}

FlatMatrix build_real(int n);

FlatMatrix build_real(int n) {
    if ((n & (n - 1)) == 0) {
        int k = 0;
        while ((1 << k) < n) ++k;
        return sylvester_hadamard(k);
    }
    if (paley_supported_order(n - 1) && (n - 1) % 4 == 3) return paley_hadamard(n - 1);
    if (n % 2 == 0) {
        const int q = n / 2 - 1;
        if (paley_supported_order(q) && q % 4 == 1) return paley_hadamard(q);
    }
    for (int a = 2; a * a <= n; ++a)
        if (n % a == 0 && real_hadamard_available(a) && real_hadamard_available(n / a))
            return tensor(build_real(a), build_real(n / a));
    throw std::logic_error("build_real: no construction for order " + std::to_string(n));
}

}  // namespace

FlatMatrix sylvester_hadamard(int k) {
    if (k < 0) throw std::invalid_argument("sylvester_hadamard: exponent must be >= 0");
    if (k > 12 || (1 << k) > kMaxFlatOrder)
        throw std::invalid_argument("sylvester_hadamard: order exceeds configured maximum");
    const int n = 1 << k;
    return from_signs(sylvester_signs(n), n);
}

FlatMatrix paley_hadamard(int q) {
    if (!paley_supported_order(q))
        throw std::invalid_argument("paley_hadamard: " + std::to_string(q) +
                                    " is not a supported prime power");
    if (q % 4 != 3 && q % 4 != 1)
        throw std::invalid_argument("paley_hadamard: q = " + std::to_string(q) +
                                    " is not an odd prime power (q mod 4 must be 1 or 3)");
    const int n = (q % 4 == 3) ? q + 1 : 2 * (q + 1);
    if (n > kMaxFlatOrder)
        throw std::invalid_argument("paley_hadamard: order exceeds configured maximum");
    return from_signs(paley_signs(q), n);
}

FlatMatrix fourier_matrix(int n) {
    if (n < 1) throw std::invalid_argument("fourier_matrix: order must be >= 1");
    FlatMatrix m;
    m.order = n;
    m.kind = FlatKind::Fourier;
    m.entries.resize(static_cast<std::size_t>(n) * n);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            const double ang = 2.0 * std::numbers::pi * ((static_cast<long long>(j) * k) % n) / n;
            m.entries[static_cast<std::size_t>(j) * n + k] = cplx{std::cos(ang) * s, std::sin(ang) * s};
        }
    return m;
}

bool real_hadamard_available(int n) {
    if (n < 1 || n > kMaxFlatOrder) return false;
    std::map<int, bool> memo;
    return real_available_impl(n, memo);
}

FlatMatrix flat_matrix_for(int n, bool prefer_real, bool strict) {
    if (n < 1) throw std::invalid_argument("flat_matrix_for: order must be >= 1");
    if (prefer_real) {
        if (real_hadamard_available(n)) return build_real(n);
        if (strict)
            throw std::invalid_argument("no real Hadamard of order " + std::to_string(n) +
                                        " is constructible here; pass --complex");
    }
    return fourier_matrix(n);
}

}  // namespace mubkit
