#include <aa/constraints.hpp>

#include <sstream>
#include <stdexcept>

namespace aa {

std::vector<StrictInequality> boundary_constraints(const SurfaceModel& S, const BoundaryChain& C) {
    AngleClass minusK = negate(log_canonical_class(S, C));
    std::vector<StrictInequality> out;
    out.reserve(C.size());
    for (int i = 0; i < C.size(); ++i) {
        StrictInequality ineq;
        ineq.form = intersect_with_class(S, minusK, C.components[i]);
        ineq.provenance.kind = Provenance::Kind::BoundaryComponent;
        ineq.provenance.index = i;
        ineq.provenance.label =
            i < static_cast<int>(C.component_ids.size()) ? C.component_ids[i] : "C" + std::to_string(i + 1);
        out.push_back(std::move(ineq));
    }
    return out;
}

std::vector<StrictInequality> curve_constraints(const SurfaceModel& S, const BoundaryChain& C,
                                                const std::vector<LabeledCurve>& curves) {
    AngleClass minusK = negate(log_canonical_class(S, C));
    std::vector<StrictInequality> out;
    out.reserve(curves.size());
    for (const auto& cur : curves) {
        StrictInequality ineq;
        ineq.form = intersect_with_class(S, minusK, cur.cls);
        ineq.provenance.kind = Provenance::Kind::UserCurve;
        ineq.provenance.label = cur.label;
        out.push_back(std::move(ineq));
    }
    return out;
}

QuadraticForm quadratic_constraint(const SurfaceModel& S, const BoundaryChain& C) {
    return square(S, negate(log_canonical_class(S, C)));
}

QuadraticVerdict classify_quadratic(const QuadraticForm& q, QuadraticContext) {
    if (q.constant > 0) return QuadraticVerdict::Subcritical;
    if (q.constant < 0) return QuadraticVerdict::Supercritical;
    bool has_positive = false, has_negative = false;
    for (const auto& [i, c] : q.linear) {
        if (c > 0) has_positive = true;
        if (c < 0) has_negative = true;
    }
    if (has_positive && !has_negative) return QuadraticVerdict::Critical;
    return QuadraticVerdict::General;
}

NearOriginReduction near_origin_reduce(const ConstraintSystem& sys) {
    NearOriginReduction out;
    out.angle_count = sys.angle_count;
    for (const auto& ineq : sys.linear) {
        if (ineq.form.constant > 0) continue; // no constraint near 0
        if (ineq.form.constant < 0) {
            out.verdict = NearOriginReduction::Verdict::Infeasible;
            out.rows.clear();
            out.row_provenance.clear();
            return out;
        }
        out.rows.push_back(ineq.form.dense(sys.angle_count));
        out.row_provenance.push_back(ineq.provenance);
    }
    return out;
}

std::vector<StrictInequality> cube_constraints(int angle_count, const Rat& box) {
    std::vector<StrictInequality> out;
    for (int i = 0; i < angle_count; ++i) {
        StrictInequality lo;
        lo.form = LinearForm::variable(i);
        lo.provenance = {Provenance::Kind::UnitCube, i, "x" + std::to_string(i + 1) + ">0"};
        out.push_back(std::move(lo));
        StrictInequality hi;
        hi.form = LinearForm(box) - LinearForm::variable(i);
        hi.provenance = {Provenance::Kind::UnitCube, i,
                         "x" + std::to_string(i + 1) + "<" + to_string(box)};
        out.push_back(std::move(hi));
    }
    return out;
}

std::string hrep_text(const ConstraintSystem& sys) {
    std::ostringstream os;
    for (const auto& ineq : sys.linear) {
        os << to_string(ineq.form.constant);
        for (const auto& a : ineq.form.dense(sys.angle_count)) os << " " << to_string(a);
        os << " > 0\n";
    }
    if (sys.quadratic) os << "quadratic: " << sys.quadratic->str() << " > 0\n";
    return os.str();
}

} // namespace aa
