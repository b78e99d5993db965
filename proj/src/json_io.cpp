#include "addix/json_io.hpp"

#include "addix/arith.hpp"
#include "addix/error.hpp"

namespace addix {

Json digits_json(const FieldCtx& ctx, Elem e) { return ctx.digits(e); }

Elem elem_from_json(const FieldCtx& ctx, const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidArgument, "element must be a digit list");
    return ctx.from_digits(j.get<Digits>());
}

FieldSpec field_spec_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n"))
        throw Error(ErrorKind::InvalidArgument, "field spec needs p and n");
    FieldSpec s;
    s.p = j.at("p").get<std::uint32_t>();
    s.n = j.at("n").get<unsigned>();
    if (j.contains("modulus") && !j["modulus"].is_null()) s.modulus = j["modulus"].get<Digits>();
    if (j.contains("basis") && !j["basis"].is_null()) s.basis = j["basis"].get<std::vector<Digits>>();
    if (j.contains("generator") && !j["generator"].is_null()) s.generator = j["generator"].get<Digits>();
    return s;
}

Json field_json(const FieldCtx& ctx) {
    Json j;
    j["p"] = ctx.p();
    j["n"] = ctx.n();
    j["q"] = ctx.q();
    j["modulus"] = ctx.modulus();
    Json basis = Json::array();
    for (Elem b : ctx.ordered_basis()) basis.push_back(ctx.digits(b));
    j["basis"] = basis;
    j["generator"] = ctx.digits(ctx.generator());
    return j;
}

Json witness_json(const FieldCtx& ctx, const AffineWitness& w) {
    Json j;
    j["k"] = w.k();
    j["subspace_rref"] = w.U.basis();
    Json M = Json::array();
    for (Elem c : w.M.coeffs) M.push_back(ctx.digits(c));
    j["M_coeffs"] = M;
    Json cs = Json::array();
    for (std::size_t L = 0; L < w.constants.size(); ++L) cs.push_back(Json::array({L, ctx.digits(w.constants[L])}));
    j["constants"] = cs;
    return j;
}

AffineWitness witness_from_json(const FieldCtx& ctx, const Json& j) {
    try {
        AffineWitness w;
        w.U = Subspace(ctx.p(), ctx.n(), j.at("subspace_rref").get<std::vector<Digits>>());
        if (j.contains("k") && j["k"].get<unsigned>() != w.U.codim())
            throw Error(ErrorKind::DimensionMismatch, "k does not match the subspace");
        const auto& M = j.at("M_coeffs");
        if (M.size() != ctx.n()) throw Error(ErrorKind::DimensionMismatch, "M_coeffs needs n entries");
        w.M = LinearisedPoly::zero(ctx);
        for (unsigned i = 0; i < ctx.n(); ++i) w.M.coeffs[i] = elem_from_json(ctx, M[i]);
        w.constants.assign(w.U.num_cosets(), ctx.zero());
        for (const auto& entry : j.at("constants")) {
            const auto L = entry.at(0).get<std::uint64_t>();
            if (L >= w.constants.size()) throw Error(ErrorKind::IndexOutOfRange, "coset label out of range");
            w.constants[L] = elem_from_json(ctx, entry.at(1));
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidArgument, std::string("malformed witness: ") + e.what());
    }
}

Json index_result_json(const FieldCtx& ctx, const IndexResult& r) {
    Json j;
    j["least_codim"] = r.least_codim;
    j["complete"] = r.complete;
    if (r.complete) j["additive_index"] = ipow_sat(ctx.p(), r.least_codim);
    else j["certified_codim_at_least"] = r.least_codim;
    Json per = Json::array();
    for (const auto& c : r.per_k) {
        Json e;
        e["k"] = c.k;
        e["subspaces_total"] = c.subspaces_total;
        e["subspaces_tested"] = c.subspaces_tested;
        e["feasible"] = c.feasible;
        e["complete"] = c.complete;
        per.push_back(e);
    }
    j["per_k"] = per;
    if (!r.dropped.empty()) j["dropped_positions"] = r.dropped;
    j["witness"] = r.witness ? witness_json(ctx, *r.witness) : Json(nullptr);
    return j;
}

}  // namespace addix
