#include "wig/adic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace wig {

namespace {

std::int64_t ipow(std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < e; ++i) {
        if (r > (std::int64_t{1} << 56) / b) {
            throw std::overflow_error("ipow: power too large");
        }
        r *= b;
    }
    return r;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

void check_same_base(const NAdicNumber& x, const NAdicNumber& y, const char* op) {
    if (x.base != y.base) throw BaseMismatch(std::string(op) + ": base mismatch");
}

}  // namespace

NAdicNumber make_nadic(std::int64_t base, std::int64_t start,
                       std::vector<std::int64_t> digits) {
    if (base < 2) throw std::invalid_argument("make_nadic: base must be >= 2");
    if (digits.empty()) throw std::invalid_argument("make_nadic: empty digit window");
    for (auto& d : digits) d = mod_pos(d, base);
    return NAdicNumber{base, start, std::move(digits)};
}

NAdicNumber nadic_from_integer(std::int64_t base, std::int64_t start, std::int64_t width,
                               std::int64_t k) {
    if (width < 1) throw std::invalid_argument("nadic_from_integer: width must be >= 1");
    std::vector<std::int64_t> digits(static_cast<std::size_t>(width));
    std::int64_t v = mod_pos(k, ipow(base, width));
    for (auto& d : digits) {
        d = v % base;
        v /= base;
    }
    return NAdicNumber{base, start, std::move(digits)};
}

NAdicNumber nadic_add(const NAdicNumber& x, const NAdicNumber& y) {
    check_same_base(x, y, "nadic_add");
    std::int64_t lo = std::min(x.start, y.start);
    std::int64_t hi = std::min(x.precision_end(), y.precision_end());
    if (lo >= hi) throw std::invalid_argument("nadic_add: empty window intersection");
    NAdicNumber out{x.base, lo, std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo))};
    std::int64_t carry = 0;
    for (std::int64_t k = lo; k < hi; ++k) {
        std::int64_t s = x.digit_at(k) + y.digit_at(k) + carry;
        out.digits[static_cast<std::size_t>(k - lo)] = s % x.base;
        carry = s / x.base;
    }
    return out;
}

NAdicNumber nadic_neg(const NAdicNumber& x) {
    NAdicNumber out = x;
    bool borrow_seen = false;  // complement digits after the first nonzero one
    for (auto& d : out.digits) {
        if (!borrow_seen) {
            if (d != 0) {
                d = x.base - d;
                borrow_seen = true;
            }
        } else {
            d = x.base - 1 - d;
        }
    }
    return out;
}

NAdicNumber nadic_double(const NAdicNumber& x) { return nadic_add(x, x); }

NAdicNumber nadic_halve(const NAdicNumber& y) {
    std::int64_t n = y.base;
    std::int64_t m = y.start;
    std::int64_t M = y.precision_end();
    if (n % 2 == 1) {
        // 2 is invertible digit by digit; the carry keeps the product exact.
        std::int64_t inv2 = (n + 1) / 2;
        NAdicNumber out{n, m, std::vector<std::int64_t>(y.digits.size())};
        std::int64_t c = 0;
        for (std::int64_t k = m; k < M; ++k) {
            std::int64_t xk = inv2 * mod_pos(y.digit_at(k) - c, n) % n;
            out.digits[static_cast<std::size_t>(k - m)] = xk;
            c = (2 * xk + c - y.digit_at(k)) / n;
        }
        return out;
    }
    // Even base: the leading digit at m-1 is 0 or n/2, chosen so the carry
    // into each later position matches that position's parity; the top digit
    // of precision is consumed.
    NAdicNumber out{n, m - 1, std::vector<std::int64_t>(y.digits.size())};
    std::int64_t c = y.digit_at(m) % 2;  // carry out of position m-1
    out.digits[0] = (c == 0) ? 0 : n / 2;
    for (std::int64_t k = m; k < M - 1; ++k) {
        std::int64_t xk = (y.digit_at(k) - c) / 2;  // c has y_k's parity, so this is exact
        std::int64_t c_next = y.digit_at(k + 1) % 2;
        if (c_next == 1) xk += n / 2;
        out.digits[static_cast<std::size_t>(k - m + 1)] = mod_pos(xk, n);
        c = c_next;
    }
    return out;
}

bool nadic_congruent(const NAdicNumber& x, const NAdicNumber& y, std::int64_t upto) {
    check_same_base(x, y, "nadic_congruent");
    std::int64_t lo = std::min(x.start, y.start);
    std::int64_t hi = std::min({x.precision_end(), y.precision_end(), upto});
    for (std::int64_t k = lo; k < hi; ++k) {
        if (x.digit_at(k) != y.digit_at(k)) return false;
    }
    return true;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational rational_add(const Rational& a, const Rational& b) {
    return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational doubling_constant(std::int64_t n, std::int64_t level) {
    if (n < 2 || level < 1) throw std::invalid_argument("doubling_constant: bad arguments");
    Rational prev{};
    for (std::int64_t lvl = level; lvl <= level + 1; ++lvl) {
        std::int64_t size = ipow(n, lvl);
        if (size > 50'000'000) throw CapExceeded("doubling_constant: quotient too large");
        std::vector<char> image(static_cast<std::size_t>(size), 0);
        for (std::int64_t x = 0; x < size; ++x) {
            image[static_cast<std::size_t>((2 * x) % size)] = 1;
        }
        std::int64_t count = std::count(image.begin(), image.end(), char{1});
        Rational r = make_rational(count, size);
        if (lvl > level && !(r == prev)) {
            throw std::logic_error("doubling_constant: unstable across precision levels");
        }
        prev = r;
    }
    return prev;
}

SchwartzBruhatFn make_sb(std::int64_t base, std::int64_t m, std::int64_t M,
                         std::vector<Complex> coeffs) {
    if (base < 2 || m > M) throw std::invalid_argument("make_sb: bad levels");
    if (static_cast<std::int64_t>(coeffs.size()) != ipow(base, M - m)) {
        throw std::invalid_argument("make_sb: coefficient count must be base^(M-m)");
    }
    return SchwartzBruhatFn{base, m, M, std::move(coeffs)};
}

SchwartzBruhatFn sb_indicator(std::int64_t base, std::int64_t m, std::int64_t M) {
    return make_sb(base, m, M,
                   std::vector<Complex>(static_cast<std::size_t>(ipow(base, M - m)),
                                        Complex(1.0)));
}

SchwartzBruhatFn random_sb(std::int64_t base, std::int64_t m, std::int64_t M,
                           std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> coeffs(static_cast<std::size_t>(ipow(base, M - m)));
    for (auto& c : coeffs) c = Complex(gauss(rng), gauss(rng));
    return make_sb(base, m, M, std::move(coeffs));
}

double sb_norm_l2(const SchwartzBruhatFn& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs) s += std::norm(c);
    return std::sqrt(s * std::pow(static_cast<double>(f.base), -static_cast<double>(f.M)));
}

NAdicNumber sb_class_representative(std::int64_t base, std::int64_t m, std::int64_t M,
                                    std::int64_t k) {
    if (base % 2 == 1) {
        return nadic_halve(nadic_from_integer(base, m, M - m, k));
    }
    return nadic_halve(nadic_from_integer(base, m, M - m + 1, k));
}

SbWignerTable sb_wigner(const SchwartzBruhatFn& f_in) {
    SchwartzBruhatFn f = f_in;
    if (f.m == f.M) {
        // Refine once so the constancy level sits strictly above the support
        // level; the function is unchanged.
        std::vector<Complex> refined;
        refined.reserve(f.coeffs.size() * static_cast<std::size_t>(f.base));
        for (std::int64_t d = 0; d < f.base; ++d) {
            refined.insert(refined.end(), f.coeffs.begin(), f.coeffs.end());
        }
        f.M += 1;
        f.coeffs = std::move(refined);
    }
    const std::int64_t n = f.base;
    const std::int64_t m = f.m;
    const std::int64_t M = f.M;
    const std::int64_t L = ipow(n, M - m);
    const bool even = (n % 2 == 0);

    SbWignerTable w;
    w.base = n;
    w.m = m;
    w.M = M;
    w.q = even ? 4 * L : L;
    w.rows = even ? w.q / 2 : w.q;
    w.lambda2 = even ? 0.5 : 1.0;

    // F[k] = value of f on the x-coset of the class representative k*h, where
    // h generates the class group P.
    std::vector<Complex> F(static_cast<std::size_t>(w.q));
    for (std::int64_t k = 0; k < w.q; ++k) {
        NAdicNumber rep = sb_class_representative(n, m, M, k);
        if (even && rep.digit_at(m - 1) != 0) {
            F[static_cast<std::size_t>(k)] = Complex(0.0);
            continue;
        }
        std::int64_t idx = 0;
        for (std::int64_t pos = M - 1; pos >= m; --pos) {
            idx = idx * n + rep.digit_at(pos);
        }
        F[static_cast<std::size_t>(k)] = f.coeffs[static_cast<std::size_t>(idx)];
    }

    const double cell = std::pow(static_cast<double>(n), -static_cast<double>(M));
    const double two_pi = 2.0 * std::numbers::pi;
    w.values.assign(static_cast<std::size_t>(w.rows * w.q), Complex(0.0));
    for (std::int64_t kx = 0; kx < w.rows; ++kx) {
        for (std::int64_t j = 0; j < w.q; ++j) {
            Complex sum(0.0);
            if (even) {
                for (std::int64_t t = 0; t < L; ++t) {
                    std::int64_t ku = (kx + 2 * t) % w.q;
                    Complex term = F[static_cast<std::size_t>((kx + ku) % w.q)] *
                                   std::conj(F[static_cast<std::size_t>(mod_pos(kx - ku, w.q))]);
                    std::int64_t ph = mod_pos(2 * j % w.q * ku, w.q);
                    sum += term * std::polar(1.0, -two_pi * static_cast<double>(ph) /
                                                      static_cast<double>(w.q));
                }
            } else {
                for (std::int64_t ku = 0; ku < w.q; ++ku) {
                    Complex term = F[static_cast<std::size_t>((kx + ku) % w.q)] *
                                   std::conj(F[static_cast<std::size_t>(mod_pos(kx - ku, w.q))]);
                    std::int64_t ph = mod_pos(2 * j % w.q * ku, w.q);
                    sum += term * std::polar(1.0, -two_pi * static_cast<double>(ph) /
                                                      static_cast<double>(w.q));
                }
            }
            w.values[static_cast<std::size_t>(kx * w.q + j)] = w.lambda2 * cell * sum;
        }
    }
    return w;
}

SbMinEntry sb_min(const SbWignerTable& w, double tol) {
    SbMinEntry best;
    best.value = std::numeric_limits<double>::infinity();
    for (std::int64_t r = 0; r < w.rows; ++r) {
        for (std::int64_t j = 0; j < w.q; ++j) {
            Complex v = w.at(r, j);
            if (std::abs(v.imag()) > tol) {
                throw NonRealTable("sb_min: table has a non-real entry");
            }
            if (v.real() < best.value) {
                best = SbMinEntry{v.real(), r, j};
            }
        }
    }
    return best;
}

double sb_total_mass(const SbWignerTable& w) {
    double s = 0.0;
    for (const auto& v : w.values) s += v.real();
    return s * w.lambda2 *
           std::pow(static_cast<double>(w.base), static_cast<double>(w.m - w.M));
}

SolenoidPoint make_solenoid_point(Rational a, NAdicNumber x) {
    if (a.num < 0 || a.num >= a.den) {
        throw std::invalid_argument("make_solenoid_point: real part must lie in [0,1)");
    }
    if (x.start < 0) {
        throw std::invalid_argument("make_solenoid_point: adic part must lie in Delta_n");
    }
    return SolenoidPoint{a, std::move(x)};
}

namespace {

NAdicNumber unit_for(const NAdicNumber& x) {
    return nadic_from_integer(x.base, 0, std::max<std::int64_t>(x.precision_end(), 1), 1);
}

/// Drop leading zero digits at negative indices so the point stays in Delta_n.
NAdicNumber clamp_to_integers(NAdicNumber x) {
    while (x.start < 0 && x.digits.size() > 1) {
        if (x.digits.front() != 0) {
            throw std::logic_error("solenoid: adic part left Delta_n");
        }
        x.digits.erase(x.digits.begin());
        ++x.start;
    }
    return x;
}

}  // namespace

SolenoidPoint solenoid_add(const SolenoidPoint& p, const SolenoidPoint& q) {
    check_same_base(p.x, q.x, "solenoid_add");
    Rational s = rational_add(p.a, q.a);
    bool wrap = s.num >= s.den;  // s in [0,2)
    NAdicNumber x = nadic_add(p.x, q.x);
    if (wrap) {
        s = make_rational(s.num - s.den, s.den);
        x = nadic_add(x, nadic_neg(unit_for(x)));
    }
    return SolenoidPoint{s, std::move(x)};
}

SolenoidPoint solenoid_double(const SolenoidPoint& p) { return solenoid_add(p, p); }

SolenoidPoint solenoid_halve(const SolenoidPoint& q) {
    std::int64_t n = q.x.base;
    if (n % 2 == 1) {
        throw NotTwoRegular("solenoid_halve: doubling is not injective for odd bases");
    }
    std::int64_t y0 = q.x.digit_at(0);
    Rational a;
    NAdicNumber xh{};
    if (y0 % 2 == 0) {
        a = make_rational(q.a.num, 2 * q.a.den);
        xh = nadic_halve(q.x);
    } else {
        a = make_rational(q.a.num + q.a.den, 2 * q.a.den);
        xh = nadic_halve(nadic_add(q.x, unit_for(q.x)));
    }
    return SolenoidPoint{a, clamp_to_integers(std::move(xh))};
}

SolenoidPoint solenoid_doubling_kernel(std::int64_t base, std::int64_t precision) {
    if (base % 2 == 0) {
        throw std::invalid_argument(
            "solenoid_doubling_kernel: doubling is injective for even bases");
    }
    NAdicNumber u = nadic_from_integer(base, 0, precision, 1);
    return SolenoidPoint{make_rational(1, 2), nadic_halve(u)};
}

}  // namespace wig
