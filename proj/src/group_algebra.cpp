#include "pcring/group_algebra.hpp"

#include <numeric>

namespace pcring {

AbelianGroup::AbelianGroup(std::vector<unsigned> orders) : orders_(std::move(orders))
{
    if (orders_.empty()) {
        throw Error(ErrorKind::invalid_argument, "group needs at least one cyclic factor");
    }
    for (unsigned n : orders_) {
        if (n == 0) {
            throw Error(ErrorKind::invalid_argument, "cyclic factor orders must be positive");
        }
        size_ *= n;
        if (size_ > max_size) {
            throw Error(ErrorKind::invalid_argument, "group order exceeds the supported maximum");
        }
        conductor_ = std::lcm(conductor_, n);
    }
    const std::size_t t = orders_.size();
    strides_.assign(t, 1);
    for (std::size_t i = t - 1; i > 0; --i) {
        strides_[i - 1] = strides_[i] * orders_[i];
    }
    for (unsigned n : orders_) {
        weights_.push_back(conductor_ / n);
    }
    digits_.resize(size_ * t);
    for (std::size_t idx = 0; idx < size_; ++idx) {
        for (std::size_t i = 0; i < t; ++i) {
            digits_[idx * t + i] = static_cast<unsigned>((idx / strides_[i]) % orders_[i]);
        }
    }
}

std::size_t AbelianGroup::index_of(const GroupElement& g) const
{
    const auto& e = g.exponents();
    if (e.size() != orders_.size()) {
        throw Error(ErrorKind::invalid_argument, "exponent tuple length does not match group rank");
    }
    std::size_t idx = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] >= orders_[i]) {
            throw Error(ErrorKind::invalid_argument, "exponent out of range for cyclic factor");
        }
        idx += e[i] * strides_[i];
    }
    return idx;
}

GroupElement AbelianGroup::element(std::size_t index) const
{
    if (index >= size_) {
        throw Error(ErrorKind::invalid_argument, "group element index out of range");
    }
    const std::size_t t = orders_.size();
    return GroupElement(std::vector<unsigned>(digits_.begin() + static_cast<std::ptrdiff_t>(index * t),
                                              digits_.begin() + static_cast<std::ptrdiff_t>((index + 1) * t)));
}

std::size_t AbelianGroup::mul(std::size_t a, std::size_t b) const noexcept
{
    const std::size_t t = orders_.size();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < t; ++i) {
        unsigned d = digits_[a * t + i] + digits_[b * t + i];
        if (d >= orders_[i]) {
            d -= orders_[i];
        }
        idx += d * strides_[i];
    }
    return idx;
}

std::size_t AbelianGroup::inv(std::size_t a) const noexcept
{
    const std::size_t t = orders_.size();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < t; ++i) {
        const unsigned d = digits_[a * t + i];
        idx += (d == 0 ? 0 : orders_[i] - d) * strides_[i];
    }
    return idx;
}

GroupElement AbelianGroup::mul(const GroupElement& a, const GroupElement& b) const
{
    return element(mul(index_of(a), index_of(b)));
}

GroupElement AbelianGroup::inv(const GroupElement& a) const
{
    return element(inv(index_of(a)));
}

unsigned AbelianGroup::pairing(std::size_t a, std::size_t b) const noexcept
{
    const std::size_t t = orders_.size();
    unsigned long long e = 0;
    for (std::size_t i = 0; i < t; ++i) {
        e += static_cast<unsigned long long>(weights_[i]) * digits_[a * t + i] * digits_[b * t + i];
    }
    return static_cast<unsigned>(e % conductor_);
}

std::string AbelianGroup::name() const
{
    std::string out;
    for (unsigned n : orders_) {
        if (n == 1) {
            continue;
        }
        if (!out.empty()) {
            out += " x ";
        }
        out += "Z" + std::to_string(n);
    }
    return out.empty() ? "1" : out;
}

GroupPtr make_group(std::vector<unsigned> orders)
{
    return std::make_shared<const AbelianGroup>(std::move(orders));
}

void require_same_group(const GroupPtr& a, const GroupPtr& b)
{
    if (a != b && !(*a == *b)) {
        throw Error(ErrorKind::group_mismatch, "operands belong to different groups");
    }
}

IntGroupRingElem trace_element(const GroupPtr& group)
{
    return IntGroupRingElem::from_dense(group, std::vector<Integer>(group->size(), Integer(1)));
}

CycloGroupRingElem to_cyclotomic(const IntGroupRingElem& x)
{
    std::vector<CycloGroupRingElem::Term> terms;
    const unsigned n = x.group()->conductor();
    for (const auto& [idx, c] : x.terms()) {
        terms.emplace_back(idx, CycloNum::scalar(n, Rational(c)));
    }
    return CycloGroupRingElem::from_terms(x.group(), std::move(terms));
}

namespace {

void accumulate_term(CycloAccumulator& acc, const Integer& c, unsigned shift)
{
    acc.add_root(Rational(c), shift);
}

void accumulate_term(CycloAccumulator& acc, const CycloNum& c, unsigned shift)
{
    acc.add_shifted(c, shift);
}

} // namespace

template <class R>
CycloNum character_value(std::size_t b, const GroupRingElem<R>& x)
{
    const AbelianGroup& g = *x.group();
    CycloAccumulator acc(g.conductor());
    for (const auto& [a, xa] : x.terms()) {
        accumulate_term(acc, xa, g.pairing(a, b));
    }
    return acc.result();
}

template <class R>
std::vector<CycloNum> fourier(const GroupRingElem<R>& x)
{
    const AbelianGroup& g = *x.group();
    std::vector<CycloNum> out;
    out.reserve(g.size());
    CycloAccumulator acc(g.conductor());
    for (std::size_t b = 0; b < g.size(); ++b) {
        acc.clear();
        for (const auto& [a, xa] : x.terms()) {
            accumulate_term(acc, xa, g.pairing(a, b));
        }
        out.push_back(acc.result());
    }
    return out;
}

CycloGroupRingElem inverse_fourier(const GroupPtr& group, const std::vector<CycloNum>& v)
{
    const AbelianGroup& g = *group;
    if (v.size() != g.size()) {
        throw Error(ErrorKind::invalid_argument, "Fourier vector length must equal the group order");
    }
    const unsigned n = g.conductor();
    const Rational inv_s(1, static_cast<unsigned long>(g.size()));
    std::vector<CycloNum> dense;
    dense.reserve(g.size());
    CycloAccumulator acc(n);
    for (std::size_t a = 0; a < g.size(); ++a) {
        acc.clear();
        for (std::size_t b = 0; b < g.size(); ++b) {
            if (!v[b].is_zero()) {
                acc.add_shifted(v[b], (n - g.pairing(a, b)) % n);
            }
        }
        dense.push_back(acc.result() * inv_s);
    }
    return CycloGroupRingElem::from_dense(group, std::move(dense));
}

template <class R>
CycloNum bilinear_form(const GroupRingElem<R>& x, const GroupRingElem<R>& y)
{
    require_same_group(x.group(), y.group());
    const AbelianGroup& g = *x.group();
    CycloAccumulator acc(g.conductor());
    for (const auto& [a, xa] : x.terms()) {
        for (const auto& [b, yb] : y.terms()) {
            if constexpr (std::is_same_v<R, Integer>) {
                acc.add_root(Rational(xa * yb), g.pairing(a, b));
            } else {
                acc.add_shifted(xa * yb, g.pairing(a, b));
            }
        }
    }
    return acc.result();
}

std::vector<CycloNum> pointwise_product(const std::vector<CycloNum>& u, const std::vector<CycloNum>& v)
{
    if (u.size() != v.size()) {
        throw Error(ErrorKind::invalid_argument, "pointwise product of vectors of different length");
    }
    std::vector<CycloNum> out;
    out.reserve(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        out.push_back(u[i] * v[i]);
    }
    return out;
}

template CycloNum character_value(std::size_t, const GroupRingElem<Integer>&);
template CycloNum character_value(std::size_t, const GroupRingElem<CycloNum>&);
template std::vector<CycloNum> fourier(const GroupRingElem<Integer>&);
template std::vector<CycloNum> fourier(const GroupRingElem<CycloNum>&);
template CycloNum bilinear_form(const GroupRingElem<Integer>&, const GroupRingElem<Integer>&);
template CycloNum bilinear_form(const GroupRingElem<CycloNum>&, const GroupRingElem<CycloNum>&);

} // namespace pcring
