#include <doctest.h>

#include <numeric>

#include "pcring/cyclotomic.hpp"
#include "pcring/error.hpp"
#include "support.hpp"

using namespace pcring;
using pcring::testing::Rng;
using pcring::testing::random_cyclo;

namespace {

IntPoly multiply(const IntPoly& a, const IntPoly& b)
{
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// Long division by a monic polynomial, asserting a zero remainder.
IntPoly divide(IntPoly p, const IntPoly& d)
{
    const std::size_t dd = d.size() - 1;
    IntPoly q(p.size() - dd, 0);
    for (std::size_t k = p.size(); k-- > dd;) {
        q[k - dd] = p[k];
        for (std::size_t j = 0; j <= dd; ++j) {
            p[k - dd + j] -= q[k - dd] * d[j];
        }
    }
    for (const auto& r : p) {
        REQUIRE(r == 0);
    }
    return q;
}

int mobius(unsigned n)
{
    int result = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    return n > 1 ? -result : result;
}

// Independent route: Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}.
IntPoly mobius_cyclotomic(unsigned n)
{
    IntPoly num{1};
    IntPoly den{1};
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        IntPoly f(d + 1, 0);
        f[0] = -1;
        f[d] = 1;
        const int mu = mobius(n / d);
        if (mu == 1) {
            num = multiply(num, f);
        } else if (mu == -1) {
            den = multiply(den, f);
        }
    }
    return divide(num, den);
}

CycloNum zeta(unsigned n, long long k) { return root_of_unity(n, k); }

} // namespace

TEST_CASE("cyclotomic polynomials of small order")
{
    CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
    CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
    CHECK(cyclotomic_polynomial(6) == IntPoly{1, -1, 1});
    CHECK_THROWS_AS(cyclotomic_polynomial(0), Error);
}

TEST_CASE("cyclotomic polynomials agree with the Mobius product formula")
{
    for (unsigned n = 1; n <= 60; ++n) {
        CAPTURE(n);
        CHECK(cyclotomic_polynomial(n) == mobius_cyclotomic(n));
        unsigned totient = 0;
        for (unsigned k = 1; k <= n; ++k) {
            totient += std::gcd(k, n) == 1;
        }
        CHECK(euler_phi(n) == totient);
    }
}

TEST_CASE("roots of unity")
{
    CHECK(zeta(4, 2) == CycloNum::scalar(4, -1));
    CHECK(zeta(3, 0) == CycloNum::one(3));
    CHECK(zeta(3, 1) + zeta(3, 2) == CycloNum::scalar(3, -1));
    CHECK(zeta(5, -1) == zeta(5, 4));
    CHECK(zeta(7, 15) == zeta(7, 1));
    CHECK(zeta(1, 3) == CycloNum::one(1));
    // x^N reduces to 1.
    std::vector<Rational> xn(13, Rational(0));
    xn[12] = 1;
    CHECK(CycloNum::from_poly(12, xn) == CycloNum::one(12));
}

TEST_CASE("field operations")
{
    CHECK(zeta(4, 1) * zeta(4, 1) == CycloNum::scalar(4, -1));
    CHECK(CycloNum::scalar(3, 2).inverse() == CycloNum::scalar(3, Rational(1, 2)));
    CHECK(zeta(3, 1).inverse() == zeta(3, 2));
    CHECK(zeta(3, 1) * zeta(3, 2) == CycloNum::one(3));
    CHECK(zeta(12, 5).inverse() == zeta(12, 7));

    try {
        (void)CycloNum::zero(5).inverse();
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::division_by_zero);
        CHECK(std::string(e.what()) == "division by zero in cyclotomic field");
    }
    CHECK_THROWS_AS(zeta(3, 1) + zeta(4, 1), Error);
}

TEST_CASE("zero test is exact")
{
    CHECK(cy_is_zero(CycloNum::zero(7)));
    CHECK(cy_is_zero(zeta(3, 1) + zeta(3, 2) + CycloNum::one(3)));
    CHECK_FALSE(cy_is_zero(zeta(5, 1)));
    for (unsigned n = 1; n <= 30; ++n) {
        for (unsigned k = 0; k < n; ++k) {
            CHECK_FALSE(cy_is_zero(zeta(n, k)));
        }
    }
}

TEST_CASE("canonical form: equal values have equal representations")
{
    const auto a = CycloNum::from_poly(6, {Rational(1, 2), Rational(1, 2)});
    CHECK(a.denominator() == 2);
    CHECK(a.coeffs() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
    const auto b = a * CycloNum::scalar(6, 2);
    CHECK(b.denominator() == 1);
    CHECK(b == CycloNum::from_poly(6, {Rational(1), Rational(1)}));
    CHECK((a - a).denominator() == 1);
    CHECK(CycloNum::scalar(5, Rational(-3, 6)).coeffs()[0] == Rational(-1, 2));
}

TEST_CASE("field axioms on random elements")
{
    Rng rng(11);
    for (unsigned n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u, 20u, 24u, 30u}) {
        CAPTURE(n);
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_cyclo(rng, n);
            const auto b = random_cyclo(rng, n);
            const auto c = random_cyclo(rng, n);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(cy_is_zero(a - a));
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == CycloNum::one(n));
            }
            // Floating-point evaluation is a ring map; use it as a loose cross-check.
            const auto lhs = (a * b + c).approximate();
            const auto rhs = a.approximate() * b.approximate() + c.approximate();
            CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
        }
    }
}

TEST_CASE("accumulator matches direct arithmetic")
{
    Rng rng(5);
    const unsigned n = 20;
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_cyclo(rng, n);
        const auto b = random_cyclo(rng, n);
        const auto c = random_cyclo(rng, n);
        CycloAccumulator acc(n);
        acc.add_product(a, b);
        acc.add_shifted(c, 3);
        acc.add_scaled(a, Rational(2, 3));
        acc.add_root(Rational(-5, 7), 11);
        acc.add(b);
        const auto want = a * b + c * zeta(n, 3) + a * Rational(2, 3) + CycloNum::scalar(n, Rational(-5, 7)) * zeta(n, 11) + b;
        CHECK(acc.result() == want);
    }
}
