#include <aa/json_io.hpp>

#include <sstream>

namespace aa {

json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

namespace {

json rat_vector(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rat_to_json(r));
    return out;
}

std::vector<Rat> rat_vector_from(const json& j) {
    std::vector<Rat> out;
    for (const auto& e : j) out.push_back(rat_from_json(e));
    return out;
}

json point_list(const std::vector<std::vector<Rat>>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(rat_vector(p));
    return out;
}

} // namespace

json to_json(const DivisorClass& d) { return rat_vector(d.coords); }

json to_json(const SurfaceModel& s) {
    json base;
    if (s.base == SurfaceModel::Base::ProjectivePlane) {
        base = {{"type", "plane"}};
    } else {
        base = {{"type", "hirzebruch"}, {"n", s.hirzebruch_n}};
    }
    json blowups = json::array();
    for (const auto& b : s.blowups) {
        json on = json::array(), mult = json::array();
        for (const auto& [idx, m] : b.center.incidences) {
            on.push_back(idx);
            mult.push_back(m);
        }
        blowups.push_back({{"on", on}, {"mult", mult}});
    }
    return {{"base", base}, {"blowups", blowups}, {"rank", s.rank()}};
}

json to_json(const LinearForm& f) {
    json coeffs = json::object();
    for (const auto& [idx, c] : f.coeffs) coeffs[std::to_string(idx)] = rat_to_json(c);
    return {{"constant", rat_to_json(f.constant)}, {"coeffs", coeffs}, {"text", f.str()}};
}

json to_json(const QuadraticForm& q) {
    json linear = json::object();
    for (const auto& [idx, c] : q.linear) linear[std::to_string(idx)] = rat_to_json(c);
    json quadratic = json::array();
    for (const auto& [key, c] : q.quadratic)
        quadratic.push_back({{"i", key.first}, {"j", key.second}, {"coeff", rat_to_json(c)}});
    return {{"constant", rat_to_json(q.constant)},
            {"linear", linear},
            {"quadratic", quadratic},
            {"text", q.str()}};
}

namespace {

const char* provenance_kind(Provenance::Kind k) {
    switch (k) {
    case Provenance::Kind::BoundaryComponent: return "boundary";
    case Provenance::Kind::Exceptional: return "exceptional";
    case Provenance::Kind::UserCurve: return "curve";
    case Provenance::Kind::UnitCube: return "box";
    }
    return "?";
}

} // namespace

json to_json(const StrictInequality& ineq) {
    return {{"form", to_json(ineq.form)},
            {"provenance",
             {{"kind", provenance_kind(ineq.provenance.kind)},
              {"index", ineq.provenance.index},
              {"label", ineq.provenance.label}}}};
}

json to_json(const ConstraintSystem& sys) {
    json linear = json::array();
    for (const auto& ineq : sys.linear) linear.push_back(to_json(ineq));
    json out = {{"angle_count", sys.angle_count}, {"linear", linear}};
    if (sys.quadratic) out["quadratic"] = to_json(*sys.quadratic);
    return out;
}

json to_json(const HomogeneousSystem& sys) {
    return {{"dim", sys.dim}, {"columns", point_list(sys.columns)}};
}

json to_json(const FeasibilityCertificate& cert) {
    json out = {{"feasible", cert.feasible}};
    if (cert.feasible)
        out["point"] = rat_vector(cert.point);
    else
        out["dual"] = rat_vector(cert.dual);
    return out;
}

HomogeneousSystem homogeneous_system_from_json(const json& j) {
    HomogeneousSystem sys;
    sys.dim = j.at("dim").get<int>();
    for (const auto& col : j.at("columns")) sys.columns.push_back(rat_vector_from(col));
    return sys;
}

FeasibilityCertificate certificate_from_json(const json& j) {
    FeasibilityCertificate cert;
    cert.feasible = j.at("feasible").get<bool>();
    if (cert.feasible)
        cert.point = rat_vector_from(j.at("point"));
    else
        cert.dual = rat_vector_from(j.at("dual"));
    return cert;
}

namespace {

const char* quadratic_verdict_name(QuadraticVerdict v) {
    switch (v) {
    case QuadraticVerdict::Subcritical: return "subcritical";
    case QuadraticVerdict::Critical: return "critical";
    case QuadraticVerdict::Supercritical: return "supercritical";
    case QuadraticVerdict::General: return "general";
    }
    return "?";
}

} // namespace

json to_json(const OriginCheck& check) {
    json out = {{"in_closure", check.in_closure},
                {"undetermined", check.undetermined},
                {"certificate", to_json(check.certificate)},
                {"system", to_json(check.system)}};
    if (check.quadratic_verdict)
        out["quadratic_verdict"] = quadratic_verdict_name(*check.quadratic_verdict);
    if (!check.note.empty()) out["note"] = check.note;
    return out;
}

json to_json(const AmpleAngleBody& body) {
    json hrep = json::array();
    for (const auto& ineq : body.hrep) hrep.push_back(to_json(ineq));
    json out = {{"dim", body.dim},
                {"empty", body.empty},
                {"hrep", hrep},
                {"vertices", point_list(body.vertices)},
                {"vertex_quadratic_sign", body.vertex_quadratic_sign},
                {"samples", point_list(body.samples)},
                {"sample_quadratic_sign", body.sample_quadratic_sign}};
    if (body.quadratic) out["quadratic"] = to_json(*body.quadratic);
    return out;
}

json to_json(const PaperLPMatrix& m) {
    return {{"r", m.r},           {"h", m.h},           {"v", m.v},
            {"c1_sq", m.c1_sq},   {"cr_sq", m.cr_sq},   {"rows", m.rows()},
            {"columns", point_list(m.columns)}};
}

json to_json(const TailEvidence& e) {
    json out = {{"verdict", to_string(e.verdict)},
                {"budget", rat_to_json(e.budget_value)},
                {"x", e.x},
                {"r_equals_one", e.r_equals_one},
                {"curves", e.curve_labels}};
    if (e.quadratic_verdict)
        out["quadratic_verdict"] = quadratic_verdict_name(*e.quadratic_verdict);
    if (e.verdict != TailVerdict::NotALF_Budget) {
        out["origin"] = to_json(e.origin);
        out["system"] = to_json(e.system);
    }
    return out;
}

json make_document(const std::string& kind, json payload) {
    json out = {{"schema", kSchemaVersion}, {"kind", kind}};
    out["result"] = std::move(payload);
    return out;
}

std::string points_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<Rat>>& rows) {
    std::ostringstream out;
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out << ',';
        out << header[i];
    }
    out << '\n';
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << to_string(row[i]);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace aa
