#include "pcring/spectral.hpp"

namespace pcring {

std::string Decomposition::to_string() const
{
    return "C^" + std::to_string(split_factors()) + " x C[eps]^" + std::to_string(dual_number_factors());
}

Spectrum spectrum(const PcRing& ring)
{
    Spectrum out;
    out.fourier_c = fourier(ring.c());
    out.s = ring.order();
    for (std::size_t b = 0; b < out.fourier_c.size(); ++b) {
        if (!cy_is_zero(out.fourier_c[b])) {
            out.support.push_back(b);
        }
    }
    out.r = out.support.size();
    return out;
}

Decomposition decomposition(const PcRing& ring)
{
    const Spectrum spec = spectrum(ring);
    return {spec.r, spec.s};
}

std::vector<std::size_t> bc_set(const PcRing& ring)
{
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < ring.order(); ++x) {
        const auto kx = IntGroupRingElem::delta(ring.group(), x);
        if (!bilinear_form(kx, ring.c()).is_zero()) {
            out.push_back(x);
        }
    }
    return out;
}

namespace {

std::vector<bool> support_mask(const Spectrum& spec)
{
    std::vector<bool> in_f(spec.s, false);
    for (auto x : spec.support) {
        in_f[x] = true;
    }
    return in_f;
}

std::vector<CycloNum> zeros(std::size_t s, unsigned conductor)
{
    return std::vector<CycloNum>(s, CycloNum::zero(conductor));
}

} // namespace

std::vector<FourierPair> idempotent_system_fourier(const PcRing& ring, const Spectrum& spec)
{
    const unsigned n = ring.group()->conductor();
    const auto in_f = support_mask(spec);
    std::vector<FourierPair> out;
    for (std::size_t y = 0; y < spec.s; ++y) {
        if (in_f[y]) {
            continue;
        }
        FourierPair e{zeros(spec.s, n), zeros(spec.s, n)};
        e.s[y] = CycloNum::one(n);
        out.push_back(std::move(e));
    }
    for (auto x : spec.support) {
        const CycloNum inv_lambda = spec.fourier_c[x].inverse();
        FourierPair split{zeros(spec.s, n), zeros(spec.s, n)};
        split.s[x] = CycloNum::one(n);
        split.t[x] = -inv_lambda;
        FourierPair proj{zeros(spec.s, n), zeros(spec.s, n)};
        proj.t[x] = inv_lambda;
        out.push_back(std::move(split));
        out.push_back(std::move(proj));
    }
    return out;
}

CycloPair from_fourier(const GroupPtr& group, const FourierPair& p)
{
    return {inverse_fourier(group, p.s), inverse_fourier(group, p.t)};
}

std::vector<CycloPair> idempotent_system(const PcRing& ring, const Spectrum& spec)
{
    std::vector<CycloPair> out;
    for (const auto& e : idempotent_system_fourier(ring, spec)) {
        out.push_back(from_fourier(ring.group(), e));
    }
    return out;
}

std::vector<CycloPair> idempotent_system(const PcRing& ring)
{
    return idempotent_system(ring, spectrum(ring));
}

std::vector<CycloPair> nilradical_basis(const PcRing& ring, const Spectrum& spec)
{
    const unsigned n = ring.group()->conductor();
    const auto in_f = support_mask(spec);
    std::vector<CycloPair> out;
    for (std::size_t y = 0; y < spec.s; ++y) {
        if (in_f[y]) {
            continue;
        }
        auto v = zeros(spec.s, n);
        v[y] = CycloNum::one(n);
        out.push_back({CycloGroupRingElem(ring.group()), inverse_fourier(ring.group(), v)});
    }
    return out;
}

std::vector<CycloPair> nilradical_basis(const PcRing& ring)
{
    return nilradical_basis(ring, spectrum(ring));
}

NormalizedStructure normalize_structure(const PcRing& ring, const Spectrum& spec)
{
    const unsigned n = ring.group()->conductor();
    auto indicator = zeros(spec.s, n);
    std::vector<CycloNum> unit(spec.s, CycloNum::one(n));
    for (auto x : spec.support) {
        indicator[x] = CycloNum::one(n);
        unit[x] = spec.fourier_c[x];
    }
    return {inverse_fourier(ring.group(), indicator), unit, inverse_fourier(ring.group(), unit)};
}

NormalizedStructure normalize_structure(const PcRing& ring)
{
    return normalize_structure(ring, spectrum(ring));
}

SpectralReport analyze(const PcRing& ring)
{
    Spectrum spec = spectrum(ring);
    auto idempotents_fourier = idempotent_system_fourier(ring, spec);
    std::vector<CycloPair> idempotents;
    for (const auto& e : idempotents_fourier) {
        idempotents.push_back(from_fourier(ring.group(), e));
    }
    auto nilpotents = nilradical_basis(ring, spec);
    auto normalized = normalize_structure(ring, spec);
    const Decomposition decomp{spec.r, spec.s};
    return {std::move(spec), decomp, std::move(idempotents_fourier), std::move(idempotents),
            std::move(nilpotents), std::move(normalized)};
}

std::vector<CycloNum> coordinates(const CycloPair& x)
{
    auto out = x.s.dense();
    auto t = x.t.dense();
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

} // namespace pcring
