#ifndef SELBERGLAB_EXACT_HPP
#define SELBERGLAB_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace selberglab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_from_string(const std::string& s) {
    // accepts "p", "-p/q"; cpp_rational's own parser handles both
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer pow_int(Integer base, unsigned e) {
    Integer out = 1;
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

inline Rational pow_rat(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Integer n = numerator(base), d = denominator(base);
    if (e < 0) {
        if (n == 0) throw std::domain_error("0^negative");
        std::swap(n, d);
        if (d < 0) { n = -n; d = -d; }  // keep the denominator positive for the two-arg ctor
        e = -e;
    }
    return Rational(pow_int(n, static_cast<unsigned>(e)), pow_int(d, static_cast<unsigned>(e)));
}

inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// exact square root of a nonnegative rational, if one exists
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer n = numerator(r), d = denominator(r);
    Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

inline Integer binomial_int(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer b = 1;
    for (unsigned i = 0; i < k; ++i) { b *= (n - i); b /= (i + 1); }
    return b;
}

// ---------------------------------------------------------------------------
// Gaussian rationals: a + b*i with exact rational a, b.

struct GaussianRational {
    Rational re{0};
    Rational im{0};

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    GaussianRational(long n) : re(n) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    std::complex<double> value() const { return {to_double(re), to_double(im)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n2 = b.re * b.re + b.im * b.im;
        if (n2 == 0) throw std::domain_error("Gaussian division by zero");
        GaussianRational num = a * b.conj();
        return {num.re / n2, num.im / n2};
    }
    GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// i^k as an exact Gaussian rational, any integer k.
inline GaussianRational i_power(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {Rational(1), Rational(0)};
        case 1: return {Rational(0), Rational(1)};
        case 2: return {Rational(-1), Rational(0)};
        default: return {Rational(0), Rational(-1)};
    }
}

// ---------------------------------------------------------------------------
// Pi-graded exact scalars: finite sums  sum_g  c_g * pi^(g/2)  with Gaussian
// rational c_g and integer half-grades g (so g=1 is sqrt(pi), g=2 is pi).
// Grades add under multiplication; addition only merges equal grades, mixed
// grades are held as a graded sum.

class PiExact {
public:
    PiExact() = default;
    PiExact(GaussianRational c, int half_grade = 0) {
        if (!c.is_zero()) terms_[half_grade] = std::move(c);
    }
    PiExact(Rational r) : PiExact(GaussianRational(std::move(r))) {}
    PiExact(long n) : PiExact(GaussianRational(Rational(n))) {}

    static PiExact pi_power(int half_grade) { return PiExact(GaussianRational(Rational(1)), half_grade); }

    const std::map<int, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_single_grade() const { return terms_.size() <= 1; }

    // the coefficient at a given half-grade (zero if absent)
    GaussianRational coeff(int half_grade) const {
        auto it = terms_.find(half_grade);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    std::complex<double> value() const {
        std::complex<double> v{0.0, 0.0};
        const double sqrt_pi = 1.7724538509055160273;
        for (const auto& [g, c] : terms_) v += c.value() * std::pow(sqrt_pi, g);
        return v;
    }

    PiExact conj() const {
        PiExact out;
        for (const auto& [g, c] : terms_) out.terms_[g] = c.conj();
        return out;
    }

    friend PiExact operator+(const PiExact& a, const PiExact& b) {
        PiExact out = a;
        for (const auto& [g, c] : b.terms_) {
            auto it = out.terms_.find(g);
            if (it == out.terms_.end()) {
                out.terms_[g] = c;
            } else {
                it->second += c;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
        return out;
    }
    friend PiExact operator-(const PiExact& a) {
        PiExact out;
        for (const auto& [g, c] : a.terms_) out.terms_[g] = -c;
        return out;
    }
    friend PiExact operator-(const PiExact& a, const PiExact& b) { return a + (-b); }
    friend PiExact operator*(const PiExact& a, const PiExact& b) {
        PiExact out;
        for (const auto& [ga, ca] : a.terms_)
            for (const auto& [gb, cb] : b.terms_) {
                GaussianRational p = ca * cb;
                if (p.is_zero()) continue;
                auto it = out.terms_.find(ga + gb);
                if (it == out.terms_.end()) {
                    out.terms_[ga + gb] = p;
                } else {
                    it->second += p;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        return out;
    }
    PiExact& operator+=(const PiExact& o) { *this = *this + o; return *this; }
    PiExact& operator-=(const PiExact& o) { *this = *this - o; return *this; }
    PiExact& operator*=(const PiExact& o) { *this = *this * o; return *this; }

    // division by a single-grade value
    friend PiExact operator/(const PiExact& a, const PiExact& b) {
        if (b.terms_.size() != 1) throw std::domain_error("PiExact division requires a single-grade divisor");
        const auto& [gb, cb] = *b.terms_.begin();
        PiExact out;
        for (const auto& [ga, ca] : a.terms_) out.terms_[ga - gb] = ca / cb;
        return out;
    }

    friend bool operator==(const PiExact& a, const PiExact& b) { return a.terms_ == b.terms_; }

private:
    std::map<int, GaussianRational> terms_;
};

// ---------------------------------------------------------------------------
// Dual exact/floating carriers.  The exact slot is absent when the quantity is
// only available in floating point; the floating value is always maintained.

struct ExactReal {
    std::optional<Rational> exact;
    double value = 0.0;

    ExactReal() = default;
    ExactReal(Rational r) : exact(r), value(to_double(r)) {}
    ExactReal(double v) : value(v) {}
    static ExactReal from_float(double v) { return ExactReal(v); }
    bool is_exact() const { return exact.has_value(); }
};

struct ExactComplex {
    std::optional<GaussianRational> exact;
    std::complex<double> value{0.0, 0.0};

    ExactComplex() = default;
    ExactComplex(GaussianRational g) : exact(g), value(g.value()) {}
    ExactComplex(Rational r) : ExactComplex(GaussianRational(std::move(r))) {}
    ExactComplex(std::complex<double> v) : value(v) {}
    bool is_exact() const { return exact.has_value(); }

    ExactComplex conj() const {
        ExactComplex out;
        if (exact) out.exact = exact->conj();
        out.value = std::conj(value);
        return out;
    }

    friend ExactComplex combine(const ExactComplex& a, const ExactComplex& b,
                                GaussianRational (*fe)(const GaussianRational&, const GaussianRational&),
                                std::complex<double> (*fv)(const std::complex<double>&, const std::complex<double>&)) {
        ExactComplex out;
        if (a.exact && b.exact) {
            out.exact = fe(*a.exact, *b.exact);
            out.value = out.exact->value();
        } else {
            out.value = fv(a.value, b.value);
        }
        return out;
    }
    friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
        return combine(a, b,
                       +[](const GaussianRational& x, const GaussianRational& y) { return x + y; },
                       +[](const std::complex<double>& x, const std::complex<double>& y) { return x + y; });
    }
    friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
        return combine(a, b,
                       +[](const GaussianRational& x, const GaussianRational& y) { return x - y; },
                       +[](const std::complex<double>& x, const std::complex<double>& y) { return x - y; });
    }
    friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
        return combine(a, b,
                       +[](const GaussianRational& x, const GaussianRational& y) { return x * y; },
                       +[](const std::complex<double>& x, const std::complex<double>& y) { return x * y; });
    }
    friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
        return combine(a, b,
                       +[](const GaussianRational& x, const GaussianRational& y) { return x / y; },
                       +[](const std::complex<double>& x, const std::complex<double>& y) { return x / y; });
    }
    ExactComplex& operator+=(const ExactComplex& o) { *this = *this + o; return *this; }
    ExactComplex& operator*=(const ExactComplex& o) { *this = *this * o; return *this; }
};

// exact + floating pi-graded value (e.g. a conductor q = c * pi^k)
struct PiValue {
    std::optional<PiExact> exact;
    std::complex<double> value{0.0, 0.0};
};

}  // namespace selberglab

#endif
