#include "pcring/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

#include "pcring/error.hpp"

namespace pcring {

const char* to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::division_by_zero: return "division by zero";
    case ErrorKind::group_mismatch: return "group mismatch";
    case ErrorKind::semisimple_input: return "semisimple input";
    case ErrorKind::invalid_multiplicity: return "invalid multiplicity";
    case ErrorKind::missing_trivial_factor: return "missing trivial factor";
    case ErrorKind::not_associative: return "table not associative";
    case ErrorKind::schema: return "schema violation";
    }
    return "unknown";
}

unsigned euler_phi(unsigned n)
{
    if (n == 0) {
        throw Error(ErrorKind::invalid_argument, "euler_phi: n must be positive");
    }
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

namespace {

void trim(IntPoly& p)
{
    while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
    }
}

// Exact division of p by a monic divisor; the remainder must vanish.
IntPoly divide_exact_monic(IntPoly p, const IntPoly& divisor)
{
    const std::size_t dd = divisor.size() - 1;
    if (p.size() <= dd) {
        return IntPoly{0};
    }
    IntPoly quotient(p.size() - dd, 0);
    for (std::size_t k = p.size(); k-- > dd;) {
        const Integer lead = p[k];
        if (lead == 0) {
            continue;
        }
        quotient[k - dd] = lead;
        for (std::size_t j = 0; j <= dd; ++j) {
            p[k - dd + j] -= lead * divisor[j];
        }
    }
    return quotient;
}

IntPoly cyclotomic_polynomial_cached(unsigned n, std::map<unsigned, IntPoly>& cache)
{
    if (auto it = cache.find(n); it != cache.end()) {
        return it->second;
    }
    IntPoly p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) {
            p = divide_exact_monic(p, cyclotomic_polynomial_cached(d, cache));
        }
    }
    trim(p);
    cache.emplace(n, p);
    return p;
}

// Dense rational polynomial helpers for the extended Euclidean algorithm.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

RatPoly sub_mul(const RatPoly& a, const RatPoly& q, const RatPoly& b)
{
    // a - q * b
    RatPoly out = a;
    if (q.empty() || b.empty()) {
        return out;
    }
    out.resize(std::max(a.size(), q.size() + b.size() - 1), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (sgn(q[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] -= q[i] * b[j];
        }
    }
    trim(out);
    return out;
}

std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b)
{
    RatPoly q;
    trim(a);
    if (a.size() < b.size()) {
        return {q, a};
    }
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational lead_inv = 1 / b.back();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (sgn(a[k]) == 0) {
            continue;
        }
        Rational f = a[k] * lead_inv;
        q[k - (b.size() - 1)] = f;
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[k - (b.size() - 1) + j] -= f * b[j];
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

} // namespace

IntPoly cyclotomic_polynomial(unsigned n)
{
    if (n == 0) {
        throw Error(ErrorKind::invalid_argument, "cyclotomic_polynomial: n must be positive");
    }
    std::map<unsigned, IntPoly> cache;
    return cyclotomic_polynomial_cached(n, cache);
}

class CyclotomicField {
public:
    explicit CyclotomicField(unsigned n)
        : order(n), degree(euler_phi(n)), modulus(cyclotomic_polynomial(n))
    {
        // x^k mod Phi_n for 0 <= k < n, stored sparsely.
        IntPoly current(degree, 0);
        current[0] = 1;
        powers.reserve(n);
        for (unsigned k = 0; k < n; ++k) {
            std::vector<std::pair<unsigned, Integer>> sparse;
            for (unsigned i = 0; i < degree; ++i) {
                if (current[i] != 0) {
                    sparse.emplace_back(i, current[i]);
                }
            }
            powers.push_back(std::move(sparse));
            Integer carry = current[degree - 1];
            for (unsigned i = degree - 1; i > 0; --i) {
                current[i] = current[i - 1];
            }
            current[0] = 0;
            if (carry != 0) {
                for (unsigned i = 0; i < degree; ++i) {
                    current[i] -= carry * modulus[i];
                }
            }
        }
        buffer_length = std::max<std::size_t>(n, 2 * degree - 1);
    }

    // Reduces an integer polynomial of any length modulo Phi_n.
    std::vector<Integer> reduce(const std::vector<Integer>& poly) const
    {
        std::vector<Integer> out(degree, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (sgn(poly[k]) == 0) {
                continue;
            }
            if (k < degree) {
                out[k] += poly[k];
                continue;
            }
            for (const auto& [idx, v] : powers[k % order]) {
                out[idx] += poly[k] * v;
            }
        }
        return out;
    }

    unsigned order;
    unsigned degree;
    IntPoly modulus;
    std::vector<std::vector<std::pair<unsigned, Integer>>> powers;
    std::size_t buffer_length;
};

namespace {

const CyclotomicField* field_for(unsigned order)
{
    if (order == 0) {
        throw Error(ErrorKind::invalid_argument, "cyclotomic field order must be positive");
    }
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<const CyclotomicField>> fields;
    std::lock_guard lock(mutex);
    auto& slot = fields[order];
    if (!slot) {
        slot = std::make_unique<const CyclotomicField>(order);
    }
    return slot.get();
}

void require_same_field(const CyclotomicField* a, const CyclotomicField* b)
{
    if (a != b) {
        throw Error(ErrorKind::invalid_argument, "cyclotomic operands have different conductors");
    }
}

} // namespace

CycloNum::CycloNum(const CyclotomicField* field, std::vector<Integer> num, Integer den)
    : field_(field), num_(std::move(num)), den_(std::move(den))
{
    normalize();
}

void CycloNum::normalize()
{
    if (sgn(den_) < 0) {
        den_ = -den_;
        for (auto& c : num_) {
            c = -c;
        }
    }
    if (den_ == 1) {
        return;
    }
    Integer g = den_;
    for (const auto& c : num_) {
        if (sgn(c) != 0) {
            g = gcd(g, c);
            if (g == 1) {
                return;
            }
        }
    }
    for (auto& c : num_) {
        c /= g;
    }
    den_ /= g;
}

CycloNum CycloNum::zero(unsigned order)
{
    const CyclotomicField* f = field_for(order);
    return CycloNum(f, std::vector<Integer>(f->degree, 0), Integer(1));
}

CycloNum CycloNum::one(unsigned order) { return scalar(order, Rational(1)); }

CycloNum CycloNum::scalar(unsigned order, const Rational& value)
{
    const CyclotomicField* f = field_for(order);
    std::vector<Integer> num(f->degree, 0);
    num[0] = value.get_num();
    return CycloNum(f, std::move(num), value.get_den());
}

CycloNum CycloNum::from_poly(unsigned order, const std::vector<Rational>& poly)
{
    const CyclotomicField* f = field_for(order);
    Integer den = 1;
    for (const auto& q : poly) {
        den = lcm(den, q.get_den());
    }
    std::vector<Integer> num;
    num.reserve(poly.size());
    for (const auto& q : poly) {
        num.push_back(q.get_num() * (den / q.get_den()));
    }
    return CycloNum(f, f->reduce(num), den);
}

unsigned CycloNum::order() const noexcept { return field_->order; }

std::vector<Rational> CycloNum::coeffs() const
{
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (const auto& c : num_) {
        Rational q(c, den_);
        q.canonicalize();
        out.push_back(std::move(q));
    }
    return out;
}

bool CycloNum::is_zero() const noexcept
{
    for (const auto& c : num_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool CycloNum::is_rational() const noexcept
{
    for (std::size_t i = 1; i < num_.size(); ++i) {
        if (sgn(num_[i]) != 0) {
            return false;
        }
    }
    return true;
}

CycloNum& CycloNum::operator+=(const CycloNum& other)
{
    require_same_field(field_, other.field_);
    if (other.is_zero()) {
        return *this;
    }
    if (den_ == other.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] += other.num_[i];
        }
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) {
            num_[i] = num_[i] * other.den_ + other.num_[i] * den_;
        }
        den_ *= other.den_;
    }
    normalize();
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& other)
{
    return *this += -other;
}

CycloNum& CycloNum::operator*=(const CycloNum& other)
{
    *this = *this * other;
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& scale)
{
    for (auto& c : num_) {
        c *= scale.get_num();
    }
    den_ *= scale.get_den();
    normalize();
    return *this;
}

CycloNum CycloNum::operator-() const
{
    CycloNum out = *this;
    for (auto& c : out.num_) {
        c = -c;
    }
    return out;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b)
{
    require_same_field(a.field_, b.field_);
    CycloAccumulator acc(a.order());
    acc.add_product(a, b);
    return acc.result();
}

bool operator==(const CycloNum& a, const CycloNum& b)
{
    return a.field_ == b.field_ && a.den_ == b.den_ && a.num_ == b.num_;
}

CycloNum CycloNum::inverse() const
{
    if (is_zero()) {
        throw Error(ErrorKind::division_by_zero, "division by zero in cyclotomic field");
    }
    // Extended Euclid on (Phi_N, a): track u with u * a == r (mod Phi_N).
    RatPoly r0(field_->modulus.begin(), field_->modulus.end());
    RatPoly r1 = coeffs();
    trim(r1);
    RatPoly u0;
    RatPoly u1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, rem] = divmod(r0, r1);
        RatPoly u2 = sub_mul(u0, q, u1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r1 is a nonzero constant because Phi_N is irreducible.
    const Rational c_inv = 1 / r1[0];
    for (auto& c : u1) {
        c *= c_inv;
    }
    return from_poly(order(), u1);
}

std::complex<double> CycloNum::approximate() const
{
    std::complex<double> sum{0.0, 0.0};
    const double step = 2.0 * std::numbers::pi / static_cast<double>(field_->order);
    const auto values = coeffs();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (sgn(values[i]) != 0) {
            sum += values[i].get_d() * std::polar(1.0, step * static_cast<double>(i));
        }
    }
    return sum;
}

CycloNum root_of_unity(unsigned n, long long k)
{
    if (n == 0) {
        throw Error(ErrorKind::invalid_argument, "root_of_unity: n must be positive");
    }
    long long e = k % static_cast<long long>(n);
    if (e < 0) {
        e += n;
    }
    CycloAccumulator acc(n);
    acc.add_root(Rational(1), static_cast<unsigned>(e));
    return acc.result();
}

CycloAccumulator::CycloAccumulator(unsigned order)
    : field_(field_for(order)), buffer_(field_->buffer_length, 0)
{
}

void CycloAccumulator::clear()
{
    for (auto& c : buffer_) {
        c = 0;
    }
    den_ = 1;
}

Integer CycloAccumulator::align(const Integer& term_den)
{
    if (term_den == den_) {
        return Integer(1);
    }
    Integer l = lcm(den_, term_den);
    if (l != den_) {
        const Integer up = l / den_;
        for (auto& c : buffer_) {
            if (sgn(c) != 0) {
                c *= up;
            }
        }
        den_ = l;
    }
    return l / term_den;
}

void CycloAccumulator::add(const CycloNum& a)
{
    add_shifted(a, 0);
}

void CycloAccumulator::add_product(const CycloNum& a, const CycloNum& b)
{
    require_same_field(field_, a.field_);
    require_same_field(field_, b.field_);
    const auto& an = a.num_;
    const auto& bn = b.num_;
    Integer factor = 1;
    if (a.den_ != 1 || b.den_ != 1 || den_ != 1) {
        mpz_mul(scratch_.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
        if (scratch_ != den_) {
            factor = align(scratch_);
        }
    }
    Integer scaled;
    for (std::size_t i = 0; i < an.size(); ++i) {
        if (sgn(an[i]) == 0) {
            continue;
        }
        const Integer* lhs = &an[i];
        if (factor != 1) {
            scaled = an[i] * factor;
            lhs = &scaled;
        }
        for (std::size_t j = 0; j < bn.size(); ++j) {
            if (sgn(bn[j]) != 0) {
                mpz_addmul(buffer_[i + j].get_mpz_t(), lhs->get_mpz_t(), bn[j].get_mpz_t());
            }
        }
    }
}

void CycloAccumulator::add_scaled(const CycloNum& a, const Rational& k)
{
    require_same_field(field_, a.field_);
    if (sgn(k) == 0) {
        return;
    }
    const Integer factor = align(a.den_ * k.get_den()) * k.get_num();
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (sgn(a.num_[i]) != 0) {
            mpz_addmul(buffer_[i].get_mpz_t(), a.num_[i].get_mpz_t(), factor.get_mpz_t());
        }
    }
}

void CycloAccumulator::add_shifted(const CycloNum& a, unsigned shift)
{
    require_same_field(field_, a.field_);
    const unsigned n = field_->order;
    const Integer factor = align(a.den_);
    for (std::size_t i = 0; i < a.num_.size(); ++i) {
        if (sgn(a.num_[i]) != 0) {
            mpz_addmul(buffer_[(i + shift) % n].get_mpz_t(), a.num_[i].get_mpz_t(), factor.get_mpz_t());
        }
    }
}

void CycloAccumulator::add_root(const Rational& q, unsigned shift)
{
    if (sgn(q) == 0) {
        return;
    }
    const Integer factor = align(q.get_den());
    buffer_[shift % field_->order] += q.get_num() * factor;
}

CycloNum CycloAccumulator::result() const
{
    return CycloNum(field_, field_->reduce(buffer_), den_);
}

} // namespace pcring
