#include "pcring/oracle.hpp"

namespace pcring {

namespace {

std::string element_label(const AbelianGroup& g, std::size_t idx)
{
    std::string out = "(";
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(g.digit(idx, i));
    }
    return out + ")";
}

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::invalid_argument, "structure constant overflow");
    }
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::invalid_argument, "structure constant overflow");
    }
    return out;
}

// Nonzero (k, c_ijk) entries of every basis product e_i e_j.
using SparseRows = std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>;

SparseRows sparse_rows(const StructureTable& t)
{
    const std::size_t d = t.dim();
    SparseRows rows(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (t.at(i, j, k) != 0) {
                    rows[i * d + j].emplace_back(k, t.at(i, j, k));
                }
            }
        }
    }
    return rows;
}

} // namespace

StructureTable::StructureTable(std::size_t dim, std::vector<std::string> labels)
    : dim_(dim), labels_(std::move(labels)), constants_(dim * dim * dim, 0)
{
    if (labels_.size() != dim_) {
        throw Error(ErrorKind::invalid_argument, "one label per basis element required");
    }
}

StructureTable build_table(const PcRing& ring)
{
    const AbelianGroup& g = *ring.group();
    const std::size_t s = g.size();
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < s; ++a) {
        labels.push_back("S" + element_label(g, a));
    }
    for (std::size_t a = 0; a < s; ++a) {
        labels.push_back("P" + element_label(g, a));
    }
    StructureTable table(2 * s, std::move(labels));

    std::vector<std::pair<std::size_t, std::int64_t>> comp;
    for (const auto& [u, cu] : ring.c().terms()) {
        if (!cu.fits_slong_p()) {
            throw Error(ErrorKind::invalid_argument, "composition multiplicity too large for the structure table");
        }
        comp.emplace_back(u, cu.get_si());
    }

    for (std::size_t a = 0; a < s; ++a) {
        for (std::size_t b = 0; b < s; ++b) {
            const std::size_t ab = g.mul(a, b);
            table.at(a, b, ab) = 1;
            table.at(a, s + b, s + ab) = 1;
            table.at(s + a, b, s + ab) = 1;
            for (const auto& [u, cu] : comp) {
                auto& slot = table.at(s + a, s + b, s + g.mul(g.mul(a, u), b));
                slot = checked_add(slot, cu);
            }
        }
    }
    return table;
}

bool table_matches_pair_ring(const StructureTable& table, const PcRing& ring)
{
    const std::size_t s = ring.order();
    if (table.dim() != 2 * s) {
        return false;
    }
    auto basis = [&](std::size_t i) {
        return i < s ? simple_class(ring, i) : projective_class(ring, i - s);
    };
    for (std::size_t i = 0; i < 2 * s; ++i) {
        const IntPair ei = basis(i);
        for (std::size_t j = 0; j < 2 * s; ++j) {
            const IntPair prod = pair_mul(ring, ei, basis(j));
            for (std::size_t k = 0; k < s; ++k) {
                if (prod.s.coeff(k) != table.at(i, j, k) || prod.t.coeff(k) != table.at(i, j, s + k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_associative(const StructureTable& table)
{
    const std::size_t d = table.dim();
    const SparseRows rows = sparse_rows(table);
    std::vector<std::int64_t> left(d), right(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                std::fill(left.begin(), left.end(), 0);
                std::fill(right.begin(), right.end(), 0);
                // (e_i e_j) e_k
                for (const auto& [m, cm] : rows[i * d + j]) {
                    for (const auto& [l, cl] : rows[m * d + k]) {
                        left[l] = checked_add(left[l], checked_mul(cm, cl));
                    }
                }
                // e_i (e_j e_k)
                for (const auto& [m, cm] : rows[j * d + k]) {
                    for (const auto& [l, cl] : rows[i * d + m]) {
                        right[l] = checked_add(right[l], checked_mul(cm, cl));
                    }
                }
                if (left != right) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_commutative(const StructureTable& table)
{
    const std::size_t d = table.dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k) {
                if (table.at(i, j, k) != table.at(j, i, k)) {
                    return false;
                }
            }
        }
    }
    return true;
}

RadicalResult radical_dimension(const StructureTable& table)
{
    if (!is_associative(table)) {
        throw Error(ErrorKind::not_associative, "table not associative");
    }
    const std::size_t d = table.dim();
    // tr(L_{e_k}) = sum_m c_{kmm}
    std::vector<Integer> trace(d, 0);
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t m = 0; m < d; ++m) {
            trace[k] += table.at(k, m, m);
        }
    }
    // Row j of the transposed Gram matrix: x in the radical iff sum_i x_i tr(L_{e_i e_j}) = 0 for all j.
    Matrix<Rational> gram_t(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Integer v = 0;
            for (std::size_t k = 0; k < d; ++k) {
                if (table.at(i, j, k) != 0) {
                    v += trace[k] * table.at(i, j, k);
                }
            }
            gram_t[j][i] = Rational(v);
        }
    }
    RadicalResult out;
    out.basis = nullspace(std::move(gram_t), d, Rational(0));
    out.dimension = out.basis.size();
    return out;
}

} // namespace pcring
