#include <aa/logpair.hpp>

#include <stdexcept>

namespace aa {

ChainKind verify_chain(const SurfaceModel& S, const BoundaryChain& C) {
    const int n = C.size();
    if (n == 0) return ChainKind::Invalid;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat m = intersect(S, C.components[i], C.components[j]);
            if (m == 0) continue;
            if (m != 1) return ChainKind::Invalid;
            adj[i].push_back(j);
            adj[j].push_back(i);
        }
    for (int i = 0; i < n; ++i)
        if (adj[i].size() > 2) return ChainKind::Invalid;

    // walk the components; a cycle visits as many edges as vertices
    std::vector<bool> seen(n, false);
    int pieces = 0;
    bool any_cycle = false;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++pieces;
        int verts = 0, deg_sum = 0;
        std::vector<int> stack{i};
        seen[i] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++verts;
            deg_sum += static_cast<int>(adj[u].size());
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
        if (deg_sum / 2 >= verts) any_cycle = true;
    }
    if (any_cycle) return pieces == 1 && !adj[0].empty() ? ChainKind::Cycle : ChainKind::Invalid;
    return pieces == 1 ? ChainKind::Chain : ChainKind::DisjointChains;
}

void validate_base_chain(const SurfaceModel& S, const BoundaryChain& C) {
    const int n = C.size();
    if (n == 0) throw std::invalid_argument("empty boundary chain");
    DivisorClass K = canonical_class(S);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(C.components[i].coords.size()) != S.rank())
            throw std::invalid_argument("chain component dimension mismatch");
        Rat adjunct = intersect(S, C.components[i], add(C.components[i], K));
        if (adjunct != -2)
            throw std::invalid_argument("chain component fails rational-curve adjunction");
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat m = intersect(S, C.components[i], C.components[j]);
            Rat want = (j == i + 1) ? 1 : 0;
            if (m != want)
                throw std::invalid_argument("components are not a chain in listed order");
        }
}

AngleClass negate(const AngleClass& A) {
    AngleClass out = A;
    for (auto& f : out.coords) f *= Rat(-1);
    return out;
}

DivisorClass evaluate(const AngleClass& A, const std::vector<Rat>& angles) {
    DivisorClass out;
    out.coords.reserve(A.coords.size());
    for (const auto& f : A.coords) out.coords.push_back(f.evaluate(angles));
    return out;
}

AngleClass twisted_class(const SurfaceModel& S, const DivisorClass& L, const BoundaryChain& C) {
    if (static_cast<int>(L.coords.size()) != S.rank())
        throw std::invalid_argument("class dimension mismatch");
    if (verify_chain(S, C) == ChainKind::Invalid)
        throw std::invalid_argument("invalid boundary chain");
    AngleClass out;
    out.coords.reserve(S.rank());
    for (int k = 0; k < S.rank(); ++k) out.coords.emplace_back(LinearForm(L.coords[k]));
    for (int i = 0; i < C.size(); ++i) {
        // - (1 - beta_i) C_i
        LinearForm w = LinearForm(Rat(-1)) + LinearForm::variable(i);
        for (int k = 0; k < S.rank(); ++k) {
            LinearForm term = w;
            term *= C.components[i].coords[k];
            out.coords[k] += term;
        }
    }
    return out;
}

AngleClass log_canonical_class(const SurfaceModel& S, const BoundaryChain& C) {
    DivisorClass minusK = scale(Rat(-1), canonical_class(S));
    return negate(twisted_class(S, minusK, C));
}

LinearForm intersect_with_class(const SurfaceModel& S, const AngleClass& A, const DivisorClass& Z) {
    const int k = S.rank();
    if (static_cast<int>(A.coords.size()) != k || static_cast<int>(Z.coords.size()) != k)
        throw std::invalid_argument("dimension mismatch");
    LinearForm out;
    if (S.base == SurfaceModel::Base::ProjectivePlane) {
        out += Z.coords[0] * A.coords[0];
    } else {
        out += (-Rat(S.hirzebruch_n) * Z.coords[0] + Z.coords[1]) * A.coords[0];
        out += Z.coords[0] * A.coords[1];
    }
    for (int i = S.base_rank(); i < k; ++i) out -= Z.coords[i] * A.coords[i];
    return out;
}

QuadraticForm square(const SurfaceModel& S, const AngleClass& A) {
    const int k = S.rank();
    if (static_cast<int>(A.coords.size()) != k)
        throw std::invalid_argument("dimension mismatch");
    QuadraticForm q;
    if (S.base == SurfaceModel::Base::ProjectivePlane) {
        q += mul(A.coords[0], A.coords[0]);
    } else {
        QuadraticForm zz = mul(A.coords[0], A.coords[0]);
        zz *= -Rat(S.hirzebruch_n);
        q += zz;
        QuadraticForm zf = mul(A.coords[0], A.coords[1]);
        zf *= Rat(2);
        q += zf;
    }
    for (int i = S.base_rank(); i < k; ++i) q -= mul(A.coords[i], A.coords[i]);
    return q;
}

TailLattice tail_blowups(const SurfaceModel& s, const BoundaryChain& c, int h, int v) {
    if (h < 0 || v < 0) throw std::invalid_argument("negative blow-up count");
    validate_base_chain(s, c);
    const int r = c.size();

    TailLattice out;
    out.S = s;
    out.C = c;
    out.angles = AngleVector{r, h, v};
    if (static_cast<int>(out.C.component_ids.size()) != r) {
        out.C.component_ids.clear();
        for (int i = 1; i <= r; ++i) out.C.component_ids.push_back("c" + std::to_string(i));
    }

    auto do_blowup = [&out](int end_index, const std::string& id) {
        out.S = blow_up(out.S, CenterSpec{{{end_index, 1}}}, out.C.size());
        int slot = out.S.rank() - 1;
        for (auto& comp : out.C.components) comp = pullback(out.S, comp);
        out.C.components[end_index].coords[slot] = -1; // strict transform of the end
        out.C.components.push_back(basis_class(out.S, slot));
        out.C.component_ids.push_back(id);
        return slot;
    };

    for (int i = 1; i <= h; ++i) {
        int end = (i == 1) ? r - 1 : r + i - 2;
        out.h_slots.push_back(do_blowup(end, "H" + std::to_string(i)));
    }
    for (int j = 1; j <= v; ++j) {
        int end = (j == 1) ? 0 : r + h + j - 2;
        out.v_slots.push_back(do_blowup(end, "V" + std::to_string(j)));
    }
    return out;
}

std::pair<SurfaceModel, BoundaryChain> node_blowup(const SurfaceModel& S, const BoundaryChain& C,
                                                   int i) {
    validate_base_chain(S, C);
    if (i < 0 || i + 1 >= C.size()) throw std::invalid_argument("node index out of range");
    SurfaceModel S2 = blow_up(S, CenterSpec{{{i, 1}, {i + 1, 1}}}, C.size());
    int slot = S2.rank() - 1;
    BoundaryChain C2;
    for (int j = 0; j < C.size(); ++j) {
        DivisorClass d = pullback(S2, C.components[j]);
        if (j == i || j == i + 1) d.coords[slot] = -1;
        C2.components.push_back(std::move(d));
        C2.component_ids.push_back(j < static_cast<int>(C.component_ids.size())
                                       ? C.component_ids[j]
                                       : "c" + std::to_string(j + 1));
        if (j == i) {
            C2.components.push_back(basis_class(S2, slot));
            C2.component_ids.push_back("E" + std::to_string(slot));
        }
    }
    return {std::move(S2), std::move(C2)};
}

bool verify_pullback_formula(const SurfaceModel& s, const BoundaryChain& c, int h, int v) {
    TailLattice T = tail_blowups(s, c, h, v);
    AngleClass lhs = negate(log_canonical_class(T.S, T.C));

    // -K on the base, pulled back (coordinates extended by zeros)
    AngleClass rhs = negate(log_canonical_class(s, c));
    rhs.coords.resize(T.S.rank());

    const AngleVector& A = T.angles;
    for (int i = 1; i <= h; ++i) {
        LinearForm w = LinearForm(Rat(1)) - LinearForm::variable(A.eta(i)) +
                       LinearForm::variable(A.eta(i - 1));
        rhs.coords[T.h_slots[i - 1]] -= w;
    }
    for (int j = 1; j <= v; ++j) {
        LinearForm w = LinearForm(Rat(1)) - LinearForm::variable(A.nu(j)) +
                       LinearForm::variable(A.nu(j - 1));
        rhs.coords[T.v_slots[j - 1]] -= w;
    }
    return lhs == rhs;
}

} // namespace aa
