#include <aa/json_io.hpp>
#include <aa/selfcheck.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace aa;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SurfaceModel parse_base(const std::string& text) {
    if (text == "P2") return make_projective_plane();
    if (text == "BlP2") return blow_up(make_projective_plane(), CenterSpec{});
    if (text.size() > 1 && text[0] == 'F') {
        try {
            return make_hirzebruch(std::stoi(text.substr(1)));
        } catch (const std::exception&) {
        }
    }
    throw BadInput("unknown base surface '" + text + "' (expected P2, F<n>, or BlP2)");
}

BoundaryChain parse_chain(const SurfaceModel& s, const std::string& text) {
    BoundaryChain c;
    std::string token;
    std::istringstream in(text);
    auto add = [&](const std::string& t) {
        if (t.empty()) return;
        DivisorClass d;
        std::string id = t;
        if (s.base == SurfaceModel::Base::Hirzebruch) {
            if (t == "Z")
                d = basis_class(s, 0);
            else if (t == "F")
                d = basis_class(s, 1);
            else
                throw BadInput("unknown chain component '" + t + "' on a Hirzebruch surface");
        } else {
            DivisorClass H = basis_class(s, 0);
            if (t == "H")
                d = H;
            else if (t == "C")
                d = scale(Rat(2), H); // a conic
            else if (t == "E" && s.rank() > 1)
                d = basis_class(s, 1);
            else
                throw BadInput("unknown chain component '" + t + "'");
        }
        c.components.push_back(std::move(d));
        c.component_ids.push_back(id);
    };
    while (std::getline(in, token, '+')) add(token);
    if (c.components.empty()) throw BadInput("empty chain spec");
    return c;
}

std::vector<LabeledCurve> load_curves(const std::string& path, int rank) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot read curve file '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw BadInput("curve file is not valid JSON: " + std::string(e.what()));
    }
    std::vector<LabeledCurve> out;
    for (const auto& entry : doc) {
        LabeledCurve cur;
        cur.label = entry.at("label").get<std::string>();
        for (const auto& coord : entry.at("class")) cur.cls.coords.push_back(rat_from_json(coord));
        if (static_cast<int>(cur.cls.coords.size()) != rank)
            throw BadInput("curve '" + cur.label + "' has wrong coordinate count");
        out.push_back(std::move(cur));
    }
    return out;
}

void emit(const std::string& out_dir, const std::string& name, const std::string& payload,
          bool to_stdout) {
    if (out_dir.empty()) {
        if (to_stdout) std::cout << payload;
        return;
    }
    std::filesystem::create_directories(out_dir);
    std::ofstream f(std::filesystem::path(out_dir) / name);
    f << payload;
}

std::string intersection_matrix_text(const SurfaceModel& s, const BoundaryChain& c) {
    std::ostringstream os;
    for (int i = 0; i < c.size(); ++i) {
        for (int j = 0; j < c.size(); ++j)
            os << (j ? " " : "") << to_string(intersect(s, c.components[i], c.components[j]));
        os << '\n';
    }
    return os.str();
}

const char* chain_kind_name(ChainKind k) {
    switch (k) {
    case ChainKind::Chain: return "chain";
    case ChainKind::Cycle: return "cycle";
    case ChainKind::DisjointChains: return "disjoint chains";
    case ChainKind::Invalid: return "invalid";
    }
    return "?";
}

// ---- describe -------------------------------------------------------------

struct DescribeConfig {
    std::string base, chain, out_dir, format = "json";
};

int cmd_describe(const DescribeConfig& cfg) {
    SurfaceModel s = parse_base(cfg.base);
    json payload = {{"surface", to_json(s)},
                    {"canonical_class", to_json(canonical_class(s))},
                    {"rank", s.rank()}};
    std::ostringstream text;
    text << "surface: " << cfg.base << " (rank " << s.rank() << ")\n";
    text << "canonical class:";
    for (const auto& x : canonical_class(s).coords) text << ' ' << to_string(x);
    text << '\n';
    if (!cfg.chain.empty()) {
        BoundaryChain c = parse_chain(s, cfg.chain);
        ChainKind kind = verify_chain(s, c);
        payload["chain"] = {{"kind", chain_kind_name(kind)}};
        text << "chain " << cfg.chain << ": " << chain_kind_name(kind);
        if (kind == ChainKind::Cycle) {
            payload["chain"]["note"] = "no tails";
            text << " (no tails)";
        }
        text << '\n';
        text << "intersection matrix:\n" << intersection_matrix_text(s, c);
        if (kind == ChainKind::Chain) {
            Rat b = budget(s, c);
            payload["chain"]["budget"] = rat_to_json(b);
            text << "budget: " << to_string(b) << '\n';
        }
    }
    json doc = make_document("describe", payload);
    std::string rendered = cfg.format == "text" ? text.str() : doc.dump(2) + "\n";
    emit(cfg.out_dir, cfg.format == "text" ? "describe.txt" : "describe.json", rendered, true);
    return kExitOk;
}

// ---- aa -------------------------------------------------------------------

struct AaConfig {
    std::string base, chain, curves, out_dir, format = "json", box = "1";
};

ConstraintSystem build_aa_system(const AaConfig& cfg) {
    if (cfg.base == "BlP2" && (cfg.chain.empty() || cfg.chain == "E")) return plane_blowup_system();
    SurfaceModel s = parse_base(cfg.base);
    BoundaryChain c = parse_chain(s, cfg.chain);
    if (verify_chain(s, c) == ChainKind::Invalid) throw BadInput("invalid boundary chain");
    ConstraintSystem sys;
    sys.angle_count = c.size();
    sys.linear = boundary_constraints(s, c);
    std::vector<LabeledCurve> curves;
    if (s.base == SurfaceModel::Base::Hirzebruch) {
        auto among = [&](const DivisorClass& d) {
            return std::find(c.components.begin(), c.components.end(), d) != c.components.end();
        };
        if (!among(basis_class(s, 1))) curves.push_back({"fiber", basis_class(s, 1)});
        if (!among(basis_class(s, 0))) curves.push_back({"neg_section", basis_class(s, 0)});
    }
    if (!cfg.curves.empty())
        for (auto& cur : load_curves(cfg.curves, s.rank())) curves.push_back(std::move(cur));
    for (auto& ineq : curve_constraints(s, c, curves)) sys.linear.push_back(std::move(ineq));
    sys.quadratic = quadratic_constraint(s, c);
    return sys;
}

int cmd_aa(const AaConfig& cfg) {
    ConstraintSystem sys = build_aa_system(cfg);
    BodyOptions opt;
    opt.box = parse_rational(cfg.box);
    if (opt.box <= 0) throw BadInput("--box must be positive");
    AmpleAngleBody body = ample_angle_body(sys, opt);
    OriginCheck origin = origin_in_closure(sys);
    json payload = {{"system", to_json(sys)},
                    {"body", to_json(body)},
                    {"origin_in_closure", to_json(origin)},
                    {"hrep_text", hrep_text(sys)}};
    json doc = make_document("ample-angle-body", payload);

    std::vector<std::string> header;
    for (int i = 0; i < sys.angle_count; ++i) header.push_back("b" + std::to_string(i + 1));
    const auto& pts = body.vertices.empty() ? body.samples : body.vertices;
    std::string csv = points_csv(header, pts);

    if (cfg.format == "csv") {
        emit(cfg.out_dir, "body.csv", csv, true);
    } else if (cfg.format == "text") {
        std::ostringstream text;
        text << "angles: " << sys.angle_count << (body.empty ? " (empty body)\n" : "\n");
        text << hrep_text(sys);
        text << "origin in closure: " << (origin.in_closure ? "yes" : "no") << '\n';
        for (const auto& p : pts) {
            text << "point:";
            for (const auto& x : p) text << ' ' << to_string(x);
            text << '\n';
        }
        emit(cfg.out_dir, "body.txt", text.str(), true);
    } else {
        emit(cfg.out_dir, "body.json", doc.dump(2) + "\n", true);
        emit(cfg.out_dir, "body.csv", csv, false);
    }
    return kExitOk;
}

// ---- tail -----------------------------------------------------------------

struct TailConfig {
    std::string base, chain, curves, out_dir, format = "json";
    int h = 0, v = 0;
    bool curves_complete = false;
};

int cmd_tail(const TailConfig& cfg) {
    SurfaceModel s = parse_base(cfg.base);
    BoundaryChain c = parse_chain(s, cfg.chain);
    if (cfg.h < 0 || cfg.v < 0) throw BadInput("--h/--v must be nonnegative");
    TailSequenceSpec spec{s, c, cfg.h, cfg.v};
    std::vector<LabeledCurve> extra;
    if (!cfg.curves.empty()) extra = load_curves(cfg.curves, s.rank() + cfg.h + cfg.v);
    TailEvidence ev;
    try {
        ev = classify_tail(spec, extra, cfg.curves_complete);
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    }
    json doc = make_document("tail-classification", to_json(ev));
    std::string rendered;
    if (cfg.format == "text") {
        std::ostringstream text;
        text << "verdict: " << to_string(ev.verdict) << '\n';
        text << "budget: " << to_string(ev.budget_value) << ", x = " << ev.x << '\n';
        rendered = text.str();
    } else {
        rendered = doc.dump(2) + "\n";
    }
    emit(cfg.out_dir, cfg.format == "text" ? "tail.txt" : "tail.json", rendered, true);
    return kExitOk;
}

// ---- sweep ----------------------------------------------------------------

struct SweepConfig {
    std::string out_dir;
    int n_min = 0, n_max = 3, x_max = 6, jobs = 1;
};

int cmd_sweep(const SweepConfig& cfg) {
    struct Cell {
        int n, h, v;
    };
    std::vector<Cell> cells;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n)
        for (int h = 0; h <= cfg.x_max; ++h)
            for (int v = 0; v + h <= cfg.x_max; ++v) cells.push_back({n, h, v});

    std::vector<std::string> rows(cells.size());
    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (size_t i; (i = cursor.fetch_add(1)) < cells.size();) {
            const Cell& cell = cells[i];
            SurfaceModel s = make_hirzebruch(cell.n);
            TailSequenceSpec spec{s, hirzebruch_zf_chain(s), cell.h, cell.v};
            TailEvidence ev = classify_tail(spec, {});
            long c1 = -cell.n;
            Thm1Result thm = verify_thm_tail1(2, cell.h, cell.v, c1, 0);
            std::ostringstream row;
            row << cell.n << ",2," << cell.h << ',' << cell.v << ',' << ev.x << ','
                << to_string(ev.budget_value) << ',' << to_string(ev.verdict) << ','
                << (thm.feasible ? "Feasible" : "Infeasible");
            rows[i] = row.str();
        }
    };
    int jobs = std::max(1, cfg.jobs);
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "n,r,h,v,x,budget,verdict,tilde_lp\n";
    for (const auto& row : rows) csv << row << '\n';
    emit(cfg.out_dir, "sweep.csv", csv.str(), true);
    std::cerr << rows.size() << " cells\n";
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& only) {
    std::vector<CheckResult> results;
    if (only.empty()) {
        results = run_all_checks();
    } else {
        try {
            results.push_back(run_check(only));
        } catch (const std::invalid_argument& e) {
            throw BadInput(e.what());
        }
    }
    bool all = true;
    for (const auto& res : results) {
        std::cout << (res.passed ? "PASS " : "FAIL ") << res.name;
        if (!res.passed) std::cout << ": " << res.detail;
        std::cout << '\n';
        all = all && res.passed;
    }
    return all ? kExitOk : kExitVerifyFailed;
}

// ---- check ----------------------------------------------------------------

int collect_and_verify(const json& node, int& verified) {
    int failures = 0;
    if (node.is_object()) {
        if (node.contains("system") && node.contains("certificate") &&
            node["system"].is_object() && node["system"].contains("columns")) {
            HomogeneousSystem sys = homogeneous_system_from_json(node["system"]);
            FeasibilityCertificate cert = certificate_from_json(node["certificate"]);
            ++verified;
            if (!verify_certificate(sys, cert)) ++failures;
        }
        for (const auto& [key, value] : node.items()) failures += collect_and_verify(value, verified);
    } else if (node.is_array()) {
        for (const auto& value : node) failures += collect_and_verify(value, verified);
    }
    return failures;
}

int cmd_check(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BadInput("cannot read '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw BadInput("not valid JSON: " + std::string(e.what()));
    }
    int verified = 0;
    int failures = collect_and_verify(doc, verified);
    std::cout << verified << " certificate(s), " << failures << " failure(s)\n";
    if (verified == 0) throw BadInput("no certificates found in '" + path + "'");
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bodies of ample angles and tail blow-up classification"};
    app.set_help_flag("--help", "print help"); // plain --h is a tail length
    app.require_subcommand(1);

    DescribeConfig dcfg;
    auto* describe = app.add_subcommand("describe", "surface and chain summary");
    describe->add_option("--base", dcfg.base, "P2, F<n>, or BlP2")->required();
    describe->add_option("--chain", dcfg.chain, "chain components, e.g. Z+F");
    describe->add_option("--out", dcfg.out_dir, "output directory");
    describe->add_option("--format", dcfg.format)->check(CLI::IsMember({"json", "text"}));

    AaConfig acfg;
    auto* aa_cmd = app.add_subcommand("aa", "compute the body of ample angles");
    aa_cmd->add_option("--base", acfg.base)->required();
    aa_cmd->add_option("--chain", acfg.chain);
    aa_cmd->add_option("--curves", acfg.curves, "JSON curve list");
    aa_cmd->add_option("--box", acfg.box, "angle box upper bound (rational)");
    aa_cmd->add_option("--out", acfg.out_dir);
    aa_cmd->add_option("--format", acfg.format)->check(CLI::IsMember({"json", "csv", "text"}));

    TailConfig tcfg;
    auto* tail = app.add_subcommand("tail", "classify a tail blow-up sequence");
    tail->add_option("--base", tcfg.base)->required();
    tail->add_option("--chain", tcfg.chain)->required();
    tail->add_option("--h", tcfg.h, "right-tail blow-ups");
    tail->add_option("--v", tcfg.v, "left-tail blow-ups");
    tail->add_option("--curves", tcfg.curves);
    tail->add_flag("--complete", tcfg.curves_complete, "assert the curve list is complete");
    tail->add_option("--out", tcfg.out_dir);
    tail->add_option("--format", tcfg.format)->check(CLI::IsMember({"json", "text"}));

    SweepConfig scfg;
    auto* sweep = app.add_subcommand("sweep", "classify a grid of tail sequences on (F_n, Z+F)");
    sweep->add_option("--nmin", scfg.n_min);
    sweep->add_option("--nmax", scfg.n_max);
    sweep->add_option("--xmax", scfg.x_max, "max h+v");
    sweep->add_option("--jobs", scfg.jobs);
    sweep->add_option("--out", scfg.out_dir);

    std::string only;
    auto* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--only", only, "run a single named check");

    std::string check_path;
    auto* check = app.add_subcommand("check", "re-verify certificates in a JSON report");
    check->add_option("file", check_path, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (describe->parsed()) return cmd_describe(dcfg);
        if (aa_cmd->parsed()) return cmd_aa(acfg);
        if (tail->parsed()) return cmd_tail(tcfg);
        if (sweep->parsed()) return cmd_sweep(scfg);
        if (verify->parsed()) return cmd_verify(only);
        if (check->parsed()) return cmd_check(check_path);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitBadInput;
}
