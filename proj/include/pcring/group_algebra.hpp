#pragma once

/**
 * @file group_algebra.hpp
 * @brief Finite abelian groups, their group rings and the Fourier transform.
 *
 * A group is a product Z_{n_1} x ... x Z_{n_t} with generators K_1..K_t.
 * Elements K^a are exponent tuples a, enumerated lexicographically (first
 * coordinate most significant), so the identity has index 0 and index
 * order is the canonical output order.
 *
 * Characters are labelled by group elements through the pairing
 *   chi_b(K^a) = zeta_N^{sum_i (N / n_i) a_i b_i},   N = lcm(n_i),
 * i.e. q_i = zeta_N^{N/n_i}. fourier() maps CG onto C^G, carrying
 * convolution to the pointwise product.
 */

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "pcring/cyclotomic.hpp"
#include "pcring/error.hpp"

namespace pcring {

class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

    const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

private:
    std::vector<unsigned> exponents_;
};

class AbelianGroup {
public:
    static constexpr std::size_t max_size = std::size_t{1} << 20;

    /// Throws Error(invalid_argument) for an empty tuple or a zero order.
    explicit AbelianGroup(std::vector<unsigned> orders);

    const std::vector<unsigned>& orders() const noexcept { return orders_; }
    std::size_t rank() const noexcept { return orders_.size(); }
    std::size_t size() const noexcept { return size_; }
    unsigned conductor() const noexcept { return conductor_; }
    static constexpr std::size_t identity() noexcept { return 0; }

    /// Throws Error(invalid_argument) if the tuple has the wrong length or an exponent out of range.
    std::size_t index_of(const GroupElement& g) const;
    GroupElement element(std::size_t index) const;
    unsigned digit(std::size_t index, std::size_t coordinate) const
    {
        return digits_[index * orders_.size() + coordinate];
    }

    std::size_t mul(std::size_t a, std::size_t b) const noexcept;
    std::size_t inv(std::size_t a) const noexcept;
    GroupElement mul(const GroupElement& a, const GroupElement& b) const;
    GroupElement inv(const GroupElement& a) const;

    /// Exponent e in [0, N) with chi_b(K^a) = zeta_N^e. Symmetric in a and b.
    unsigned pairing(std::size_t a, std::size_t b) const noexcept;

    /// "Z2 x Z3"; factors of order 1 are dropped, the trivial group is "1".
    std::string name() const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.orders_ == b.orders_; }

private:
    std::vector<unsigned> orders_;
    std::vector<std::size_t> strides_;
    std::vector<unsigned> weights_; // N / n_i
    std::vector<unsigned> digits_;  // size_ x rank, row-major
    std::size_t size_ = 1;
    unsigned conductor_ = 1;
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

GroupPtr make_group(std::vector<unsigned> orders);

// Element-level wrappers mirroring the group law.
inline GroupElement elem_mul(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) { return g.mul(a, b); }
inline GroupElement elem_inv(const AbelianGroup& g, const GroupElement& a) { return g.inv(a); }

template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
    static Integer zero(const AbelianGroup&) { return Integer(0); }
    static Integer one(const AbelianGroup&) { return Integer(1); }
    static bool is_zero(const Integer& x) { return sgn(x) == 0; }
};

template <>
struct ScalarTraits<CycloNum> {
    static CycloNum zero(const AbelianGroup& g) { return CycloNum::zero(g.conductor()); }
    static CycloNum one(const AbelianGroup& g) { return CycloNum::one(g.conductor()); }
    static bool is_zero(const CycloNum& x) { return x.is_zero(); }
};

void require_same_group(const GroupPtr& a, const GroupPtr& b);

/// Finitely supported coefficient map G -> R, stored as sorted (index, coeff) terms with no zeros.
template <class R>
class GroupRingElem {
public:
    using Scalar = R;
    using Term = std::pair<std::size_t, R>;

    explicit GroupRingElem(GroupPtr group) : group_(std::move(group)) {}

    static GroupRingElem delta(GroupPtr group, std::size_t index, R coeff)
    {
        GroupRingElem out(std::move(group));
        if (!ScalarTraits<R>::is_zero(coeff)) {
            out.terms_.emplace_back(index, std::move(coeff));
        }
        return out;
    }

    static GroupRingElem delta(GroupPtr group, std::size_t index)
    {
        R one = ScalarTraits<R>::one(*group);
        return delta(std::move(group), index, std::move(one));
    }

    static GroupRingElem from_dense(GroupPtr group, std::vector<R> dense)
    {
        if (dense.size() != group->size()) {
            throw Error(ErrorKind::invalid_argument, "dense coefficient vector has wrong length");
        }
        GroupRingElem out(std::move(group));
        for (std::size_t i = 0; i < dense.size(); ++i) {
            if (!ScalarTraits<R>::is_zero(dense[i])) {
                out.terms_.emplace_back(i, std::move(dense[i]));
            }
        }
        return out;
    }

    /// Sums repeated indices and drops zeros.
    static GroupRingElem from_terms(GroupPtr group, std::vector<Term> terms)
    {
        std::stable_sort(terms.begin(), terms.end(),
                         [](const Term& a, const Term& b) { return a.first < b.first; });
        GroupRingElem out(std::move(group));
        for (auto& [idx, c] : terms) {
            if (idx >= out.group_->size()) {
                throw Error(ErrorKind::invalid_argument, "group element index out of range");
            }
            if (!out.terms_.empty() && out.terms_.back().first == idx) {
                out.terms_.back().second += c;
            } else {
                out.terms_.emplace_back(idx, std::move(c));
            }
        }
        out.drop_zeros();
        return out;
    }

    const GroupPtr& group() const noexcept { return group_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    R coeff(std::size_t index) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                                   [](const Term& t, std::size_t i) { return t.first < i; });
        if (it != terms_.end() && it->first == index) {
            return it->second;
        }
        return ScalarTraits<R>::zero(*group_);
    }

    std::vector<R> dense() const
    {
        std::vector<R> out(group_->size(), ScalarTraits<R>::zero(*group_));
        for (const auto& [idx, c] : terms_) {
            out[idx] = c;
        }
        return out;
    }

    GroupRingElem& operator+=(const GroupRingElem& other) { return combine(other, false); }
    GroupRingElem& operator-=(const GroupRingElem& other) { return combine(other, true); }

    friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
    friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }
    GroupRingElem operator-() const
    {
        GroupRingElem out = *this;
        for (auto& t : out.terms_) {
            t.second = -t.second;
        }
        return out;
    }

    /// Multiplies every coefficient by k.
    template <class K>
    GroupRingElem scaled(const K& k) const
    {
        GroupRingElem out = *this;
        for (auto& t : out.terms_) {
            t.second = t.second * k;
        }
        out.drop_zeros();
        return out;
    }

    /// Convolution product.
    friend GroupRingElem operator*(const GroupRingElem& x, const GroupRingElem& y)
    {
        require_same_group(x.group_, y.group_);
        if (x.terms_.empty() || y.terms_.empty()) {
            return GroupRingElem(x.group_);
        }
        const AbelianGroup& g = *x.group_;
        if constexpr (std::is_same_v<R, CycloNum>) {
            std::vector<const CycloNum*> y_dense(g.size(), nullptr);
            for (const auto& [b, yb] : y.terms_) {
                y_dense[b] = &yb;
            }
            std::vector<std::size_t> x_inv;
            for (const auto& term : x.terms_) {
                x_inv.push_back(g.inv(term.first));
            }
            CycloAccumulator acc(g.conductor());
            std::vector<Term> out;
            for (std::size_t target = 0; target < g.size(); ++target) {
                acc.clear();
                bool touched = false;
                for (std::size_t i = 0; i < x.terms_.size(); ++i) {
                    if (const CycloNum* yb = y_dense[g.mul(target, x_inv[i])]) {
                        acc.add_product(x.terms_[i].second, *yb);
                        touched = true;
                    }
                }
                if (touched) {
                    CycloNum value = acc.result();
                    if (!value.is_zero()) {
                        out.emplace_back(target, std::move(value));
                    }
                }
            }
            GroupRingElem product(x.group_);
            product.terms_ = std::move(out);
            return product;
        } else {
            std::vector<R> dense(g.size(), ScalarTraits<R>::zero(g));
            for (const auto& [a, xa] : x.terms_) {
                for (const auto& [b, yb] : y.terms_) {
                    dense[g.mul(a, b)] += xa * yb;
                }
            }
            return from_dense(x.group_, std::move(dense));
        }
    }

    friend bool operator==(const GroupRingElem& a, const GroupRingElem& b)
    {
        return *a.group_ == *b.group_ && a.terms_ == b.terms_;
    }

private:
    GroupRingElem& combine(const GroupRingElem& other, bool subtract)
    {
        require_same_group(group_, other.group_);
        std::vector<Term> merged;
        merged.reserve(terms_.size() + other.terms_.size());
        auto it = terms_.begin();
        auto jt = other.terms_.begin();
        while (it != terms_.end() || jt != other.terms_.end()) {
            if (jt == other.terms_.end() || (it != terms_.end() && it->first < jt->first)) {
                merged.push_back(std::move(*it++));
            } else if (it == terms_.end() || jt->first < it->first) {
                merged.emplace_back(jt->first, subtract ? R(-jt->second) : jt->second);
                ++jt;
            } else {
                R c = std::move(it->second);
                if (subtract) {
                    c -= jt->second;
                } else {
                    c += jt->second;
                }
                merged.emplace_back(it->first, std::move(c));
                ++it;
                ++jt;
            }
        }
        terms_ = std::move(merged);
        drop_zeros();
        return *this;
    }

    void drop_zeros()
    {
        std::erase_if(terms_, [](const Term& t) { return ScalarTraits<R>::is_zero(t.second); });
    }

    GroupPtr group_;
    std::vector<Term> terms_;
};

using IntGroupRingElem = GroupRingElem<Integer>;
using CycloGroupRingElem = GroupRingElem<CycloNum>;

/// Coefficient 1 on every group element.
IntGroupRingElem trace_element(const GroupPtr& group);

template <class R>
R augmentation(const GroupRingElem<R>& x)
{
    R sum = ScalarTraits<R>::zero(*x.group());
    for (const auto& [idx, c] : x.terms()) {
        sum += c;
    }
    return sum;
}

CycloGroupRingElem to_cyclotomic(const IntGroupRingElem& x);

/// chi_b(x) = sum_a x_a chi_b(K^a).
template <class R>
CycloNum character_value(std::size_t b, const GroupRingElem<R>& x);

/// Vector of character values, indexed by character label in canonical order.
template <class R>
std::vector<CycloNum> fourier(const GroupRingElem<R>& x);

/// Throws Error(invalid_argument) unless v has one entry per group element.
CycloGroupRingElem inverse_fourier(const GroupPtr& group, const std::vector<CycloNum>& v);

/// Bilinear extension of beta(K^a, K^b) = q^{ab}; no conjugation.
template <class R>
CycloNum bilinear_form(const GroupRingElem<R>& x, const GroupRingElem<R>& y);

std::vector<CycloNum> pointwise_product(const std::vector<CycloNum>& u, const std::vector<CycloNum>& v);

} // namespace pcring
