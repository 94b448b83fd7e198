#ifndef SKEWCY_SCALAR_HPP
#define SKEWCY_SCALAR_HPP

// Exact scalars over Q, F_p and cyclotomic fields Q(z_n).
//
// Cyclotomic elements live in the power basis 1, z, ..., z^(phi(n)-1) modulo the
// n-th cyclotomic polynomial, so two elements are equal iff their coefficient
// vectors are equal.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skewcy/error.hpp"

namespace skewcy {

enum class FieldKind { Rationals, Prime, Cyclotomic };

namespace detail {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Integer coefficients of Phi_n, lowest degree first.
inline std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
    std::vector<mpz_class> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (std::uint32_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        auto den = cyclotomic_polynomial(d);
        // exact division by a monic polynomial
        std::vector<mpz_class> q(num.size() - den.size() + 1, 0);
        for (std::size_t i = q.size(); i-- > 0;) {
            q[i] = num[i + den.size() - 1];
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
        }
        num = std::move(q);
    }
    return num;
}

struct CyclotomicTables {
    std::uint32_t n = 1;
    std::size_t phi = 1;
    // powers[k] = x^k mod Phi_n for 0 <= k <= 2*phi
    std::vector<std::vector<mpz_class>> powers;
};

inline std::shared_ptr<const CyclotomicTables> cyclotomic_tables(std::uint32_t n) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::shared_ptr<const CyclotomicTables>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;

    auto t = std::make_shared<CyclotomicTables>();
    t->n = n;
    auto phi_poly = cyclotomic_polynomial(n);
    t->phi = phi_poly.size() - 1;
    std::vector<mpz_class> cur(t->phi, 0);
    cur[0] = 1;
    for (std::size_t k = 0; k <= 2 * t->phi; ++k) {
        t->powers.push_back(cur);
        // cur *= x, reduce by the monic Phi_n
        std::vector<mpz_class> next(t->phi, 0);
        mpz_class carry = cur[t->phi - 1];
        for (std::size_t i = t->phi - 1; i > 0; --i) next[i] = cur[i - 1];
        next[0] = 0;
        for (std::size_t i = 0; i < t->phi; ++i) next[i] -= carry * phi_poly[i];
        cur = std::move(next);
    }
    cache.emplace(n, t);
    return t;
}

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Identifies the base field. Equality compares kind and parameter only.
class FieldSpec {
public:
    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }

    static FieldSpec prime(std::uint64_t p) {
        if (!detail::is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
        if (p >= (1ull << 31)) throw Error(Errc::FieldLiteralOutOfRange, "prime modulus must be below 2^31");
        return FieldSpec(FieldKind::Prime, static_cast<std::uint32_t>(p));
    }

    static FieldSpec cyclotomic(std::uint32_t n) {
        if (n == 0) throw Error(Errc::ZeroInput, "cyclotomic order must be positive");
        FieldSpec f(FieldKind::Cyclotomic, n);
        f.tables_ = detail::cyclotomic_tables(n);
        return f;
    }

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_prime() const { return kind_ == FieldKind::Prime; }
    bool is_cyclotomic() const { return kind_ == FieldKind::Cyclotomic; }
    bool characteristic_zero() const { return kind_ != FieldKind::Prime; }

    std::uint32_t modulus() const { return param_; }
    /// n for Q(z_n); 1 for Q.
    std::uint32_t cyclotomic_order() const { return kind_ == FieldKind::Cyclotomic ? param_ : 1; }
    std::size_t vector_length() const { return kind_ == FieldKind::Cyclotomic ? tables_->phi : 1; }
    const detail::CyclotomicTables& tables() const { return *tables_; }

    std::string to_string() const {
        switch (kind_) {
        case FieldKind::Rationals: return "rationals";
        case FieldKind::Prime: return "prime " + std::to_string(param_);
        case FieldKind::Cyclotomic: return "cyclotomic " + std::to_string(param_);
        }
        return {};
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.param_ == b.param_;
    }

private:
    FieldSpec(FieldKind k, std::uint32_t p) : kind_(k), param_(p) {}

    FieldKind kind_ = FieldKind::Rationals;
    std::uint32_t param_ = 0;
    std::shared_ptr<const detail::CyclotomicTables> tables_;
};

class Scalar {
public:
    Scalar() : Scalar(FieldSpec::rationals()) {}
    explicit Scalar(FieldSpec f) : field_(std::move(f)) {
        if (!field_.is_prime()) q_.assign(field_.vector_length(), 0);
    }

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f) { return from_integer(f, 1); }

    static Scalar from_integer(const FieldSpec& f, long long v) { return from_rational(f, mpq_class(mpz_class(static_cast<long>(v)))); }

    static Scalar from_rational(const FieldSpec& f, mpq_class v) {
        v.canonicalize();
        Scalar s(f);
        if (f.is_prime()) {
            mpz_class p = f.modulus();
            mpz_class den = v.get_den() % p;
            if (den == 0)
                throw Error(Errc::FieldLiteralOutOfRange, "denominator " + v.get_den().get_str() +
                                                              " vanishes in " + f.to_string());
            mpz_class num = v.get_num() % p;
            if (num < 0) num += p;
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
            mpz_class r = (num * inv) % p;
            s.r_ = r.get_ui();
        } else {
            s.q_[0] = v;
        }
        return s;
    }

    /// The generator z_n of Q(z_n).
    static Scalar zeta(const FieldSpec& f) {
        if (!f.is_cyclotomic()) throw Error(Errc::FieldMismatch, "z is only defined in a cyclotomic field");
        Scalar s(f);
        const auto& row = f.tables().powers[1];
        for (std::size_t i = 0; i < row.size(); ++i) s.q_[i] = row[i];
        return s;
    }

    const FieldSpec& field() const { return field_; }

    bool is_zero() const {
        if (field_.is_prime()) return r_ == 0;
        for (const auto& c : q_)
            if (c != 0) return false;
        return true;
    }
    bool is_one() const { return *this == one(field_); }

    /// Coefficients in the power basis (Q and cyclotomic fields only).
    const std::vector<mpq_class>& coefficients() const { return q_; }
    std::uint64_t residue() const { return r_; }

    /// Rational value if the element lies in the prime subfield Q.
    std::optional<mpq_class> as_rational() const {
        if (field_.is_prime()) return std::nullopt;
        for (std::size_t i = 1; i < q_.size(); ++i)
            if (q_[i] != 0) return std::nullopt;
        return q_[0];
    }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_prime()) {
            s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
        } else {
            for (std::size_t i = 0; i < q_.size(); ++i) s.q_[i] = -q_[i];
        }
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        check(o);
        if (field_.is_prime()) {
            r_ = (r_ + o.r_) % field_.modulus();
        } else {
            for (std::size_t i = 0; i < q_.size(); ++i) q_[i] += o.q_[i];
        }
        return *this;
    }
    Scalar& operator-=(const Scalar& o) { return *this += -o; }

    Scalar& operator*=(const Scalar& o) {
        check(o);
        if (field_.is_prime()) {
            r_ = r_ * o.r_ % field_.modulus();
        } else if (q_.size() == 1) {
            q_[0] *= o.q_[0];
        } else {
            const auto& t = field_.tables();
            std::vector<mpq_class> prod(2 * t.phi - 1, 0);
            for (std::size_t i = 0; i < t.phi; ++i) {
                if (q_[i] == 0) continue;
                for (std::size_t j = 0; j < t.phi; ++j)
                    if (o.q_[j] != 0) prod[i + j] += q_[i] * o.q_[j];
            }
            std::vector<mpq_class> out(t.phi, 0);
            for (std::size_t k = 0; k < prod.size(); ++k) {
                if (prod[k] == 0) continue;
                if (k < t.phi) {
                    out[k] += prod[k];
                } else {
                    const auto& row = t.powers[k];
                    for (std::size_t i = 0; i < t.phi; ++i)
                        if (row[i] != 0) out[i] += prod[k] * row[i];
                }
            }
            q_ = std::move(out);
        }
        return *this;
    }

    Scalar inverse() const {
        if (is_zero()) throw Error(Errc::ZeroDivision, "inverse of zero");
        Scalar s(field_);
        if (field_.is_prime()) {
            s.r_ = detail::mod_pow(r_, field_.modulus() - 2, field_.modulus());
            return s;
        }
        if (q_.size() == 1) {
            s.q_[0] = 1 / q_[0];
            return s;
        }
        // Solve (multiplication-by-this) * c = e_0 over Q.
        const std::size_t n = q_.size();
        std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n + 1, 0));
        Scalar basis = one(field_);
        const Scalar z = zeta(field_);
        for (std::size_t j = 0; j < n; ++j) {
            Scalar col = *this * basis;
            for (std::size_t i = 0; i < n; ++i) m[i][j] = col.q_[i];
            basis *= z;
        }
        m[0][n] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t piv = c;
            while (m[piv][c] == 0) ++piv;
            std::swap(m[piv], m[c]);
            mpq_class inv = 1 / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[c][k] *= inv;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == c || m[r][c] == 0) continue;
                mpq_class f = m[r][c];
                for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
            }
        }
        for (std::size_t i = 0; i < n; ++i) s.q_[i] = m[i][n];
        return s;
    }

    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

    /// Integer power; negative exponents invert.
    Scalar pow(long long e) const {
        Scalar base = e < 0 ? inverse() : *this;
        unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
        Scalar r = one(field_);
        while (k) {
            if (k & 1) r *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return r;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        if (!(a.field_ == b.field_)) return false;
        if (a.field_.is_prime()) return a.r_ == b.r_;
        return a.q_ == b.q_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// True when the printed form needs parentheses before a `*`.
    bool is_compound() const {
        if (field_.is_prime()) return false;
        int nz = 0;
        for (const auto& c : q_) nz += c != 0;
        return nz > 1;
    }

    /// Canonical text: integers, fractions a/b, and powers of z, highest power first.
    std::string to_string() const {
        if (field_.is_prime()) return std::to_string(r_);
        std::string out;
        bool first = true;
        for (std::size_t k = q_.size(); k-- > 0;) {
            const mpq_class& c = q_[k];
            if (c == 0) continue;
            mpq_class a = abs(c);
            std::string mono = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
            std::string coef = a.get_str();
            std::string term;
            if (mono.empty())
                term = coef;
            else if (a == 1)
                term = mono;
            else
                term = coef + "*" + mono;
            if (first) {
                out += (c < 0 ? "-" : "") + term;
            } else {
                out += (c < 0 ? " - " : " + ") + term;
            }
            first = false;
        }
        return first ? "0" : out;
    }

private:
    void check(const Scalar& o) const {
        if (!(field_ == o.field_))
            throw Error(Errc::FieldMismatch, field_.to_string() + " vs " + o.field_.to_string());
    }

    FieldSpec field_;
    std::vector<mpq_class> q_;
    std::uint64_t r_ = 0;
};

/// Embeds a scalar of Q or Q(z_n) into Q(z_N) with n | N (z_n -> z_N^(N/n)).
inline Scalar embed(const Scalar& a, const FieldSpec& target) {
    if (a.field() == target) return a;
    const FieldSpec& src = a.field();
    if (!src.characteristic_zero() || !target.characteristic_zero())
        throw Error(Errc::FieldMismatch, "cannot embed " + src.to_string() + " into " + target.to_string());
    if (target.is_rationals()) {
        auto r = a.as_rational();
        if (!r) throw Error(Errc::FieldMismatch, "element is not rational");
        return Scalar::from_rational(target, *r);
    }
    std::uint32_t n = src.cyclotomic_order();
    std::uint32_t N = target.cyclotomic_order();
    if (N % n != 0)
        throw Error(Errc::FieldMismatch, src.to_string() + " does not embed into " + target.to_string());
    const Scalar step = Scalar::zeta(target).pow(N / n);
    Scalar out = Scalar::zero(target);
    Scalar p = Scalar::one(target);
    for (const auto& c : a.coefficients()) {
        if (c != 0) out += Scalar::from_rational(target, c) * p;
        p *= step;
    }
    return out;
}

/// Root-of-unity generator g of order N0 in Q(z_n) (or Q): every root of unity of the field is a power of g.
inline std::pair<Scalar, std::uint32_t> root_of_unity_generator(const FieldSpec& f) {
    if (!f.characteristic_zero()) throw Error(Errc::CharacteristicZeroRequired, f.to_string());
    std::uint32_t n = f.cyclotomic_order();
    if (f.is_rationals() || n == 1 || n == 2) return {-Scalar::one(f), 2};
    if (n % 2 == 0) return {Scalar::zeta(f), n};
    return {-Scalar::zeta(f).pow((n + 1) / 2), 2 * n};
}

/// Multiplicative order of a if it is a root of unity; nullopt otherwise.
inline std::optional<std::uint32_t> root_of_unity_order(const Scalar& a) {
    if (a.is_zero()) throw Error(Errc::ZeroInput, "zero is not a root of unity");
    const FieldSpec& f = a.field();
    if (f.is_prime()) {
        std::uint64_t p = f.modulus();
        Scalar x = a;
        for (std::uint64_t k = 1; k < p; ++k) {
            if (x.is_one()) return static_cast<std::uint32_t>(k);
            x *= a;
        }
        return std::nullopt;
    }
    auto [g, n0] = root_of_unity_generator(f);
    Scalar w = Scalar::one(f);
    for (std::uint32_t j = 0; j < n0; ++j) {
        if (w == a) return n0 / std::gcd(j == 0 ? n0 : j, n0);
        w *= g;
    }
    return std::nullopt;
}

struct RootSolution {
    FieldSpec field;
    Scalar root;
};

/// Finds d with d^m = a for a root of unity a, staying in a's field when possible and
/// otherwise enlarging to Q(z_N), N = lcm(n, |m| * order(a)). Returns nullopt when a is not
/// a root of unity.
inline std::optional<RootSolution> root_of_unity_solve(const Scalar& a, long long m) {
    if (a.is_zero()) throw Error(Errc::ZeroInput, "root_of_unity_solve of zero");
    if (m == 0) throw Error(Errc::ZeroInput, "exponent must be nonzero");
    if (!a.field().characteristic_zero())
        throw Error(Errc::CharacteristicZeroRequired, "root extraction needs characteristic 0");
    auto order = root_of_unity_order(a);
    if (!order) return std::nullopt;

    auto search = [&](const FieldSpec& f) -> std::optional<Scalar> {
        Scalar target = embed(a, f);
        auto [g, n0] = root_of_unity_generator(f);
        Scalar d = Scalar::one(f);
        for (std::uint32_t i = 0; i < n0; ++i) {
            if (d.pow(m) == target) return d;
            d *= g;
        }
        return std::nullopt;
    };
    if (auto d = search(a.field())) return RootSolution{a.field(), *d};
    std::uint64_t mm = static_cast<std::uint64_t>(m < 0 ? -m : m);
    std::uint64_t N = std::lcm<std::uint64_t>(a.field().cyclotomic_order(), mm * *order);
    FieldSpec big = FieldSpec::cyclotomic(static_cast<std::uint32_t>(N));
    if (auto d = search(big)) return RootSolution{big, *d};
    return std::nullopt;
}

/// Smallest cyclotomic (or rational) field containing both; throws for prime fields that differ.
inline FieldSpec common_field(const FieldSpec& a, const FieldSpec& b) {
    if (a == b) return a;
    if (!a.characteristic_zero() || !b.characteristic_zero())
        throw Error(Errc::FieldMismatch, a.to_string() + " vs " + b.to_string());
    if (a.is_rationals()) return b;
    if (b.is_rationals()) return a;
    return FieldSpec::cyclotomic(std::lcm(a.cyclotomic_order(), b.cyclotomic_order()));
}

/// Small random nonzero scalar; used by property tests and sampled checks.
template <typename Rng>
Scalar random_nonzero_scalar(const FieldSpec& f, Rng& rng) {
    if (f.is_prime()) {
        std::uniform_int_distribution<std::uint64_t> d(1, f.modulus() - 1);
        return Scalar::from_integer(f, static_cast<long long>(d(rng)));
    }
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    for (;;) {
        Scalar s = Scalar::zero(f);
        Scalar p = Scalar::one(f);
        std::size_t terms = f.is_cyclotomic() ? f.vector_length() : 1;
        for (std::size_t k = 0; k < terms; ++k) {
            if (k == 0 || num(rng) % 3 == 0) {
                mpq_class c(num(rng), den(rng));
                c.canonicalize();
                s += Scalar::from_rational(f, c) * p;
            }
            if (f.is_cyclotomic()) p *= Scalar::zeta(f);
        }
        if (!s.is_zero()) return s;
    }
}

}  // namespace skewcy

#endif
