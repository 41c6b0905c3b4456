#include "pcring/report.hpp"

#include <cmath>
#include <cstdio>

#include "pcring/oracle.hpp"

namespace pcring {

namespace {

Json integer_json(const Integer& z)
{
    if (z.fits_slong_p()) {
        return Json(z.get_si());
    }
    return Json(z.get_str());
}

std::string display(const CycloNum& x)
{
    const auto z = x.approximate();
    auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6f%+.6fi", clean(z.real()), clean(z.imag()));
    return buf;
}

[[noreturn]] void schema_error(const std::string& pointer, const std::string& problem)
{
    throw InputError(ErrorKind::schema, pointer, pointer + ": " + problem);
}

Integer parse_integer(const Json& v, const std::string& pointer)
{
    if (v.is_number_integer()) {
        return v.is_number_unsigned() ? Integer(v.get<unsigned long>()) : Integer(v.get<long>());
    }
    if (v.is_string()) {
        Integer z;
        const auto& s = v.get_ref<const std::string&>();
        if (!s.empty() && z.set_str(s, 10) == 0) {
            return z;
        }
    }
    schema_error(pointer, "expected an integer");
}

unsigned parse_order(const Json& v, const std::string& pointer)
{
    if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > (1 << 20)) {
        schema_error(pointer, "expected a positive integer cyclic order");
    }
    return static_cast<unsigned>(v.get<long long>());
}

template <class R>
Json group_ring_json(const GroupRingElem<R>& x)
{
    const AbelianGroup& g = *x.group();
    Json terms = Json::array();
    for (const auto& [idx, c] : x.terms()) {
        Json term;
        term["exp"] = exponents_json(g, idx);
        if constexpr (std::is_same_v<R, Integer>) {
            term["coeff"] = integer_json(c);
        } else {
            term["coeff"] = to_json(c);
        }
        terms.push_back(std::move(term));
    }
    Json out;
    out["group"] = g.orders();
    out["terms"] = std::move(terms);
    return out;
}

Json sparse_vector_json(const AbelianGroup& g, const std::vector<CycloNum>& v)
{
    Json out = Json::array();
    for (std::size_t b = 0; b < v.size(); ++b) {
        if (!v[b].is_zero()) {
            out.push_back(Json{{"label", exponents_json(g, b)}, {"value", to_json(v[b])}});
        }
    }
    return out;
}

Json labels_json(const AbelianGroup& g, const std::vector<std::size_t>& labels)
{
    Json out = Json::array();
    for (auto b : labels) {
        out.push_back(exponents_json(g, b));
    }
    return out;
}

Json instance_json(const InstanceDescriptor& inst)
{
    Json out;
    out["name"] = inst.name;
    out["group"] = inst.group->orders();
    if (inst.c) {
        out["c"] = to_json(*inst.c);
    }
    return out;
}

std::string group_ring_name(const AbelianGroup& g)
{
    const std::string name = g.name();
    return name == "1" ? "Z" : "Z[" + name + "]";
}

Matrix<CycloNum> coordinate_rows(const std::vector<CycloPair>& xs)
{
    Matrix<CycloNum> rows;
    for (const auto& x : xs) {
        rows.push_back(coordinates(x));
    }
    return rows;
}

Matrix<CycloNum> embed(const Matrix<Rational>& rows, unsigned conductor)
{
    Matrix<CycloNum> out;
    for (const auto& row : rows) {
        std::vector<CycloNum> v;
        for (const auto& q : row) {
            v.push_back(CycloNum::scalar(conductor, q));
        }
        out.push_back(std::move(v));
    }
    return out;
}

} // namespace

Json exponents_json(const AbelianGroup& g, std::size_t index)
{
    return g.element(index).exponents();
}

Json to_json(const Rational& q)
{
    Rational r(q);
    r.canonicalize();
    return Json::array({integer_json(r.get_num()), integer_json(r.get_den())});
}

Json to_json(const CycloNum& x)
{
    Json coeffs = Json::array();
    for (const auto& q : x.coeffs()) {
        coeffs.push_back(to_json(q));
    }
    Json out;
    out["order"] = x.order();
    out["coeffs"] = std::move(coeffs);
    out["display_only"] = display(x);
    return out;
}

Json to_json(const IntGroupRingElem& x) { return group_ring_json(x); }
Json to_json(const CycloGroupRingElem& x) { return group_ring_json(x); }
Json to_json(const IntPair& x) { return Json{{"s", to_json(x.s)}, {"t", to_json(x.t)}}; }
Json to_json(const CycloPair& x) { return Json{{"s", to_json(x.s)}, {"t", to_json(x.t)}}; }

AnalysisRequest parse_input(std::string_view document)
{
    Json doc;
    try {
        doc = Json::parse(document);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(ErrorKind::schema, "", std::string("invalid JSON: ") + e.what());
    }
    return parse_input_json(doc);
}

AnalysisRequest parse_input_json(const Json& doc)
{
    if (!doc.is_object()) {
        schema_error("", "expected an object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "group" && key != "c" && key != "name") {
            schema_error("/" + key, "unknown field");
        }
    }
    if (!doc.contains("group")) {
        schema_error("/group", "missing required field");
    }
    if (!doc.contains("c")) {
        schema_error("/c", "missing required field");
    }
    const Json& group_doc = doc["group"];
    if (!group_doc.is_array() || group_doc.empty()) {
        schema_error("/group", "expected a non-empty array of cyclic orders");
    }
    std::vector<unsigned> orders;
    unsigned long long size = 1;
    for (std::size_t i = 0; i < group_doc.size(); ++i) {
        orders.push_back(parse_order(group_doc[i], "/group/" + std::to_string(i)));
        size *= orders.back();
        if (size > (1u << 20)) {
            schema_error("/group", "group order too large");
        }
    }
    const GroupPtr group = make_group(orders);

    const Json& c_doc = doc["c"];
    if (!c_doc.is_array()) {
        schema_error("/c", "expected an array of terms");
    }
    std::vector<IntGroupRingElem::Term> terms;
    for (std::size_t i = 0; i < c_doc.size(); ++i) {
        const std::string ptr = "/c/" + std::to_string(i);
        const Json& term = c_doc[i];
        if (!term.is_object()) {
            schema_error(ptr, "expected an object with \"exp\" and \"coeff\"");
        }
        for (const auto& [key, value] : term.items()) {
            if (key != "exp" && key != "coeff") {
                schema_error(ptr + "/" + key, "unknown field");
            }
        }
        if (!term.contains("exp")) {
            schema_error(ptr + "/exp", "missing required field");
        }
        if (!term.contains("coeff")) {
            schema_error(ptr + "/coeff", "missing required field");
        }
        const Json& exp = term["exp"];
        if (!exp.is_array() || exp.size() != orders.size()) {
            schema_error(ptr + "/exp", "expected an array of " + std::to_string(orders.size()) + " exponents");
        }
        std::vector<unsigned> exps;
        for (std::size_t k = 0; k < exp.size(); ++k) {
            const Json& e = exp[k];
            if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() >= orders[k]) {
                schema_error(ptr + "/exp/" + std::to_string(k),
                             "exponent must be an integer in [0, " + std::to_string(orders[k]) + ")");
            }
            exps.push_back(static_cast<unsigned>(e.get<long long>()));
        }
        terms.emplace_back(group->index_of(GroupElement(exps)), parse_integer(term["coeff"], ptr + "/coeff"));
    }

    std::string name = "custom";
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) {
            schema_error("/name", "expected a string");
        }
        name = doc["name"].get<std::string>();
    }

    AnalysisRequest request;
    try {
        request.instance = custom(group, IntGroupRingElem::from_terms(group, std::move(terms)), name);
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        throw InputError(e.kind(), "/c", e.what());
    }
    return request;
}

Json error_report(const Error& error)
{
    Json body;
    body["kind"] = to_string(error.kind());
    body["message"] = error.what();
    if (const auto* input = dynamic_cast<const InputError*>(&error)) {
        body["pointer"] = input->pointer();
    }
    return Json{{"error", std::move(body)}};
}

RunResult run(const AnalysisRequest& request)
{
    const InstanceDescriptor& inst = request.instance;
    RunResult result;
    Json& report = result.report;
    report["instance"] = instance_json(inst);
    const AbelianGroup& g = *inst.group;

    if (inst.semisimple) {
        report["semisimple"] = true;
        report["s"] = g.size();
        report["K0p"] = group_ring_name(g);
        return result;
    }

    const PcRing ring = inst.ring();
    const Spectrum spec = spectrum(ring);
    const Decomposition decomp{spec.r, spec.s};
    report["s"] = spec.s;
    report["r"] = spec.r;
    report["decomposition"] = decomp.to_string();
    report["character_convention"] = "chi_b(K^a) = zeta_N^(sum_i (N/n_i) a_i b_i), N = " +
                                     std::to_string(g.conductor());
    report["support_F"] = labels_json(g, spec.support);
    report["B_c"] = labels_json(g, bc_set(ring));
    report["fourier_c"] = sparse_vector_json(g, spec.fourier_c);

    const NormalizedStructure norm = normalize_structure(ring, spec);
    report["normalized_c"] = Json{{"c_prime", to_json(norm.c_prime)},
                                  {"unit_fourier", sparse_vector_json(g, norm.unit_fourier)}};

    if (request.emit_idempotents) {
        Json list = Json::array();
        for (const auto& e : idempotent_system_fourier(ring, spec)) {
            list.push_back(Json{{"fourier", {{"s", sparse_vector_json(g, e.s)}, {"t", sparse_vector_json(g, e.t)}}},
                                {"group_ring", to_json(from_fourier(inst.group, e))}});
        }
        report["idempotents"] = std::move(list);
    }

    std::vector<CycloPair> nilpotents;
    if (request.emit_nilradical || request.verify) {
        nilpotents = nilradical_basis(ring, spec);
    }
    if (request.emit_nilradical) {
        Json list = Json::array();
        for (const auto& n : nilpotents) {
            list.push_back(to_json(n));
        }
        report["nilradical"] = std::move(list);
    }

    bool ok = true;
    if (inst.expected) {
        const bool matches = inst.expected->r == spec.r && inst.expected->decomposition == decomp;
        ok = ok && matches;
        report["expected"] = Json{{"r", inst.expected->r},
                                  {"decomposition", inst.expected->decomposition.to_string()},
                                  {"matches", matches}};
    }

    if (request.verify) {
        const StructureTable table = build_table(ring);
        const bool associative = is_associative(table);
        const bool commutative = is_commutative(table);
        const bool matches = table_matches_pair_ring(table, ring);
        Json oracle;
        oracle["associative"] = associative;
        oracle["commutative"] = commutative;
        oracle["matches_pair_ring"] = matches;
        bool radical_ok = false;
        if (associative) {
            const RadicalResult radical = radical_dimension(table);
            oracle["radical_dim"] = radical.dimension;
            radical_ok = radical.dimension == spec.s - spec.r &&
                         same_span(embed(radical.basis, g.conductor()), coordinate_rows(nilpotents));
        } else {
            oracle["radical_dim"] = nullptr;
        }
        oracle["radical_matches_spectral"] = radical_ok;
        report["oracle"] = std::move(oracle);
        ok = ok && associative && commutative && matches && radical_ok;
    }

    result.exit_code = ok ? exit_success : exit_verification_failure;
    return result;
}

} // namespace pcring
