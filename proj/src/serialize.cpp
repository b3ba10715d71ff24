#include "rankcodes/serialize.hpp"

#include <string>

namespace rankcodes {
namespace {

using nlohmann::json;

const json& require_key(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object()) fail(errc::bad_input, ctx + " must be an object");
    auto it = j.find(key);
    if (it == j.end()) fail(errc::bad_input, ctx + "." + key + " is missing");
    return *it;
}

// Accepts both unsigned and signed JSON integers as long as the value is
// non-negative; in-memory documents built from int literals store signed.
bool is_nonneg_int(const json& v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

std::uint64_t require_uint(const json& j, const char* key, const std::string& ctx) {
    const json& v = require_key(j, key, ctx);
    if (!is_nonneg_int(v)) fail(errc::bad_input, ctx + "." + key + " must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::vector<std::vector<Fqm>> require_rows(const json& j, const char* key, const std::string& ctx) {
    const json& v = require_key(j, key, ctx);
    if (!v.is_array()) fail(errc::bad_input, ctx + "." + key + " must be an array of rows");
    std::vector<std::vector<Fqm>> rows;
    for (const json& row : v) {
        if (!row.is_array()) fail(errc::bad_input, ctx + "." + key + " rows must be arrays");
        std::vector<Fqm> out;
        for (const json& e : row) {
            if (!is_nonneg_int(e)) {
                fail(errc::bad_input, ctx + "." + key + " entries must be non-negative integers");
            }
            out.push_back(e.get<Fqm>());
        }
        if (!rows.empty() && out.size() != rows.front().size()) {
            fail(errc::bad_input, ctx + "." + key + " rows must have equal lengths");
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

Matrix matrix_from_rows(FieldLevel level, const std::vector<std::vector<Fqm>>& rows) {
    Matrix m(level, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

json rows_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        rows.push_back(std::vector<Fqm>(m.row(i).begin(), m.row(i).end()));
    }
    return rows;
}

}  // namespace

json field_to_json(const Field& field) {
    return json{{"q", field.q()}, {"m", field.m()}, {"modulus", field.modulus()}};
}

FieldPtr field_from_json(const json& j) {
    const auto q = require_uint(j, "q", "field");
    const auto m = require_uint(j, "m", "field");
    const json& mod = require_key(j, "modulus", "field");
    if (!mod.is_array()) fail(errc::bad_input, "field.modulus must be an array of coefficients");
    std::vector<unsigned> modulus;
    for (const json& c : mod) {
        if (!is_nonneg_int(c)) fail(errc::bad_input, "field.modulus entries must be non-negative integers");
        modulus.push_back(c.get<unsigned>());
    }
    return make_field(static_cast<unsigned>(q), static_cast<unsigned>(m), std::move(modulus));
}

json matrix_to_json(const Matrix& m) {
    return json{{"field", m.level == FieldLevel::base ? "base" : "ext"},
                {"rows", m.rows},
                {"cols", m.cols},
                {"entries", rows_to_json(m)}};
}

Matrix matrix_from_json(const json& j) {
    const json& level = require_key(j, "field", "matrix");
    if (!level.is_string() || (level != "base" && level != "ext")) {
        fail(errc::bad_input, "matrix.field must be \"base\" or \"ext\"");
    }
    const auto rows = require_uint(j, "rows", "matrix");
    const auto cols = require_uint(j, "cols", "matrix");
    Matrix m = matrix_from_rows(level == "base" ? FieldLevel::base : FieldLevel::ext,
                                require_rows(j, "entries", "matrix"));
    if (m.rows != rows || m.cols != cols) {
        fail(errc::bad_input, "matrix.entries shape disagrees with matrix.rows/cols");
    }
    return m;
}

json code_to_json(const RankCode& code) {
    return json{{"field", field_to_json(*code.field())},
                {"n", code.n()},
                {"k", code.k()},
                {"generator", rows_to_json(code.generator())}};
}

RankCode code_from_json(const json& j) {
    FieldPtr field = field_from_json(require_key(j, "field", "code"));
    const auto n = require_uint(j, "n", "code");
    const auto k = require_uint(j, "k", "code");
    Matrix generator = matrix_from_rows(FieldLevel::ext, require_rows(j, "generator", "code"));
    if (generator.rows != k || generator.cols != n) {
        fail(errc::bad_input, "code.generator shape disagrees with code.n/code.k");
    }
    return new_code(std::move(field), std::move(generator));
}

json isometry_to_json(const Isometry& iso) {
    return json{{"lambda", iso.lambda}, {"A", rows_to_json(iso.a)}, {"sigma", iso.sigma}};
}

Isometry isometry_from_json(const json& j) {
    Isometry iso;
    iso.lambda = static_cast<Fqm>(require_uint(j, "lambda", "isometry"));
    iso.a = matrix_from_rows(FieldLevel::base, require_rows(j, "A", "isometry"));
    if (iso.a.rows != iso.a.cols) fail(errc::bad_input, "isometry.A must be square");
    iso.sigma = static_cast<unsigned>(require_uint(j, "sigma", "isometry"));
    return iso;
}

json mrd_verdict_to_json(const MrdVerdict& verdict) {
    const char* method = verdict.method == MrdMethod::distance  ? "distance"
                         : verdict.method == MrdMethod::subspace ? "subspace"
                                                                 : "minor";
    json out{{"method", method},
             {"is_mrd", verdict.is_mrd},
             {"checked", verdict.checked},
             {"failures", verdict.failures},
             {"witness", nullptr}};
    if (!verdict.witness) return out;
    if (const auto* w = std::get_if<DistanceWitness>(&*verdict.witness)) {
        out["witness"] = json{{"type", "distance"}, {"coeffs", w->coeffs}, {"rank", w->rank}};
    } else if (const auto* w = std::get_if<SubspaceWitness>(&*verdict.witness)) {
        out["witness"] = json{{"type", "subspace"}, {"V", rows_to_json(w->v)}, {"rank", w->rank}};
    } else {
        const auto& mw = std::get<MinorWitness>(*verdict.witness);
        out["witness"] = json{{"type", "minor"},
                              {"A", rows_to_json(mw.a)},
                              {"minor_cols", mw.minor_cols},
                              {"minor_index", mw.minor_index}};
    }
    return out;
}

json gabidulin_verdict_to_json(const GabidulinVerdict& verdict) {
    json dims = json::object();
    for (const auto& [s, dim] : verdict.dims) dims[std::to_string(s)] = dim;
    return json{{"is_generalized_gabidulin", verdict.is_generalized_gabidulin},
                {"valid_steps", verdict.valid_steps},
                {"dims", dims}};
}

json gamma_report_to_json(const GammaReport& report) {
    json exclusions = json::array();
    for (const GammaExclusion& e : report.exclusions) {
        exclusions.push_back(json{{"s", e.s},
                                  {"sign", e.sign},
                                  {"value", e.value},
                                  {"in_base_field", e.in_base_field},
                                  {"collides", e.collides}});
    }
    json out{{"kind", report.kind == ConstructionKind::construction4 ? "construction4" : "construction5"},
             {"gamma", report.gamma},
             {"pass", report.pass},
             {"nonzero_ok", report.nonzero_ok},
             {"qnr_required", report.qnr_required},
             {"exclusions", exclusions},
             {"ext_non_residue", nullptr}};
    if (report.qnr_required) out["qnr_ok"] = report.qnr_ok;
    if (report.ext_non_residue) out["ext_non_residue"] = *report.ext_non_residue;
    return out;
}

json search_report_to_json(const SearchReport& report, const FieldPtr& field) {
    json exemplars = json::array();
    for (const Exemplar& e : report.exemplars) {
        exemplars.push_back(json{{"index", e.index}, {"code", code_to_json(RankCode(field, e.generator))}});
    }
    return json{{"counts",
                 {{"candidates_scanned", report.candidates_scanned},
                  {"non_mrd", report.non_mrd},
                  {"mrd_gabidulin", report.mrd_gabidulin},
                  {"mrd_non_gabidulin", report.mrd_non_gabidulin}}},
                {"exemplars", exemplars},
                {"seconds", report.seconds},
                {"shard", {{"index", report.shard_index}, {"total", report.shard_total}}}};
}

}  // namespace rankcodes
