#include "ellidh/jobs.hpp"

#include <random>
#include <set>
#include <sstream>

#include "ellidh/error.hpp"
#include "ellidh/finite_geometry.hpp"

namespace ellidh {

namespace {

const std::set<std::string> kTasks = {"curve-info",       "code-build",      "distance", "covering-radius",
                                      "deep-holes",       "conjecture-check", "syndrome-verify", "geometry",
                                      "rs-sanity"};

int int_field(const Json& j, const char* key) {
    require(j[key].is_number_integer(), ErrorCode::InvalidConfig, std::string("\"") + key + "\" must be an integer");
    return j[key].get<int>();
}

LinearCode build_code(const JobConfig& cfg, int k) {
    const EvalSet d = cfg.eval_set();
    return cfg.side == Side::Functional ? functional_code(cfg.require_curve(), d, k)
                                        : residue_code(cfg.require_curve(), d, k);
}

// Values the theorems give for the code when their hypotheses hold.
struct Predicted {
    int min_distance;
    int covering_radius;
};

std::optional<Predicted> predicted(const JobConfig& cfg, int k) {
    const EvalSet d = cfg.eval_set();
    if (!theorem_hypotheses(cfg.require_curve(), d, k, cfg.side).satisfied()) return std::nullopt;
    const int n = static_cast<int>(d.size());
    if (cfg.side == Side::Functional) return Predicted{n - k, n - k - 1};
    return Predicted{k, k - 1};
}

std::string computed_label(const CoveringRadius& cr) {
    return cr.engine == RadiusEngine::SyndromeBfs ? "bfs" : "word-search";
}

Json curve_info(const JobConfig& cfg) {
    const Curve& c = cfg.require_curve();
    const Field& f = c.field();
    Json points = Json::array();
    for (const auto& p : c.points()) points.push_back(point_to_json(f, p));
    Json auts = Json::array();
    for (const auto& a : automorphisms_fixing_o(c)) auts.push_back(element_to_json(f, a.u));
    return {{"points", points},
            {"point_count", c.point_count()},
            {"hasse", satisfies_hasse(f.order(), c.point_count())},
            {"automorphisms_fixing_O", auts},
            {"guarantee", "bfs"}};
}

Json code_build(const JobConfig& cfg) {
    const int k = cfg.require_k();
    const LinearCode code = build_code(cfg, k);
    const Field& f = code.field();
    return {{"family", family_name(code.family())},
            {"k", k},
            {"n", code.length()},
            {"dimension", code.dimension()},
            {"generator", matrix_to_json(f, code.generator())},
            {"parity_check", matrix_to_json(f, code.parity_check())}};
}

Json radius_json(const JobConfig& cfg, int k, CodeAnalysis& analysis, bool with_distance) {
    const CoveringRadius& cr = analysis.covering_radius();
    const auto pred = predicted(cfg, k);
    std::string label = computed_label(cr);
    Json out{{"covering_radius", cr.radius}, {"engine", engine_name(cr.engine)}};
    if (with_distance) {
        const DistanceReport rep = analysis.report();
        out["min_distance"] = rep.min_distance;
        out["is_mds"] = rep.is_mds;
        out["is_near_mds"] = rep.is_near_mds;
        out["n"] = rep.n;
        out["dimension"] = rep.dim;
        if (pred)
            require(rep.min_distance == pred->min_distance, ErrorCode::InternalInvariant,
                    "minimum distance contradicts the theorem value");
    }
    if (pred) {
        require(cr.radius == pred->covering_radius, ErrorCode::InternalInvariant,
                "covering radius contradicts the theorem value");
        label += "+theorem";
    }
    if (cr.witness) out["witness"] = vector_to_json(analysis.code().field(), *cr.witness);
    out["guarantee"] = label;
    return out;
}

Json family_json(const Field& f, const DeepHoleFamily& fam, std::optional<bool> verified) {
    Json reps = Json::array();
    for (const auto& w : fam.representatives) reps.push_back(vector_to_json(f, w));
    Json out{{"P", point_to_json(f, fam.point)},
             {"side", side_name(fam.side)},
             {"k", fam.k},
             {"label", fam.label},
             {"guarantee", guarantee_name(fam.guarantee)},
             {"coset_count", fam.coset_count},
             {"word_count", fam.word_count},
             {"representatives", reps}};
    out["verified_deep"] = verified ? Json(*verified) : Json(nullptr);
    return out;
}

Json deep_holes(const JobConfig& cfg) {
    const Curve& c = cfg.require_curve();
    const Field& f = c.field();
    const EvalSet d = cfg.eval_set();
    const int k = cfg.require_k();
    CodeAnalysis analysis(build_code(cfg, k), cfg.budget);

    std::vector<CurvePoint> points;
    if (cfg.point) points.push_back(*cfg.point);
    else points = complement_points(c, d);

    std::vector<DeepHoleFamily> families;
    Json fams = Json::array();
    for (const auto& p : points) {
        DeepHoleFamily fam = cfg.side == Side::Functional ? construct_functional_deep_holes(c, d, k, p)
                                                          : construct_residue_deep_holes(c, d, k, p, analysis);
        std::optional<bool> verified;
        if (analysis.table_feasible()) {
            verified = true;
            for (const auto& w : fam.representatives) verified = *verified && analysis.is_deep_hole(w);
            require(*verified || fam.guarantee != Guarantee::Theorem, ErrorCode::InternalInvariant,
                    "a theorem-guaranteed representative is not a deep hole");
        } else {
            require(fam.guarantee == Guarantee::Theorem, ErrorCode::BudgetExceeded,
                    "family lacks a theorem guarantee and the coset table exceeds the budget");
        }
        fams.push_back(family_json(f, fam, verified));
        families.push_back(std::move(fam));
    }
    Json out{{"families", fams}, {"pairwise_distinct", families_pairwise_distinct(analysis.code(), families)}};
    out["total_word_count"] = cfg.side == Side::Functional ? functional_deep_hole_total(c, d, k)
                                                           : residue_deep_hole_total(c, d, k);
    if (cfg.side == Side::Functional) {
        Json merges = Json::array();
        for (const auto& m : coincident_families(c, d, k))
            merges.push_back(Json::array({point_to_json(f, m.first), point_to_json(f, m.second)}));
        out["merged_families"] = merges;
    }
    return out;
}

Json conjecture_check(const JobConfig& cfg) {
    const Curve& c = cfg.require_curve();
    const CompletenessReport r = completeness_check(c, cfg.require_k(), cfg.budget);
    Json out{{"k", r.k},
             {"n", r.n},
             {"covering_radius", r.covering_radius},
             {"deep_hole_cosets", r.deep_hole_cosets},
             {"constructed", r.constructed_cosets},
             {"constructed_deep", r.constructed_deep},
             {"verdict", verdict_name(r.verdict)},
             {"guarantee", "finding"}};
    out["counterexample"] = r.counterexample ? vector_to_json(c.field(), *r.counterexample) : Json(nullptr);
    return out;
}

Json syndrome_verify(const JobConfig& cfg) {
    const Curve& c = cfg.require_curve();
    const Field& f = c.field();
    const EvalSet d = cfg.eval_set();
    const int k = cfg.require_k();
    const CurvePoint p = cfg.point.value_or(CurvePoint::at_infinity());
    const LinearCode code = residue_code(c, d, k);
    const Word base = residue_family_word(c, d, k, p);

    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<Elem> coeff(0, f.order() - 1);
    std::uniform_int_distribution<Elem> unit(1, f.order() - 1);
    Json bs = Json::array();
    std::optional<SyndromeIdentity> first;
    for (int i = 0; i < cfg.samples; ++i) {
        Vector msg(code.dimension());
        for (auto& m : msg) m = coeff(rng);
        const Word w = add(f, scale(f, unit(rng), base), code.encode(msg));
        const SyndromeIdentity id = verify_syndrome_identity(c, d, k, w, p);
        bs.push_back(element_to_json(f, id.b));
        if (!first) first = id;
    }
    Json out{{"P", point_to_json(f, p)}, {"k", k}, {"words_checked", cfg.samples}, {"b_values", bs}};
    if (first) {
        out["pattern"] = first->pattern == SyndromePattern::SingleRow ? "single-row" : "scaled-phi";
        if (first->pattern == SyndromePattern::SingleRow) {
            out["row"] = first->row;
            out["row_label"] = basis_ko(k).functions[first->row].label;
        } else {
            out["phi_k"] = vector_to_json(f, phi_k(c, k, p).coords);
        }
    }
    CodeAnalysis analysis(code, cfg.budget);
    if (analysis.table_feasible()) out["covering_radius"] = analysis.covering_radius().radius;
    out["guarantee"] = "theorem";
    return out;
}

Json geometry(const JobConfig& cfg) {
    const Curve& c = cfg.require_curve();
    const Field& f = c.field();
    const int k = cfg.require_k();
    const PointSet eps = elliptic_point_set(c, k);
    Json out{{"k", k}, {"size", eps.size()}, {"guarantee", "finding"}};
    out["is_track"] = is_track(f, eps);
    const bool nk = eps.size() > eps.k() && is_nk_set(f, eps);
    out["is_nk_set"] = nk;
    if (eps.size() > f.order() + eps.k()) {
        const LongTrackReport lt = verify_long_track(f, eps);
        out["long_track"] = {{"is_track", lt.is_track}, {"is_nk_set", lt.is_nk_set}};
    }
    if (nk) {
        const Extensions ext = extensions(f, eps, cfg.budget);
        Json pts = Json::array();
        for (const auto& q : ext.nk_set_extensions) pts.push_back(vector_to_json(f, q.coords));
        out["extensions"] = {{"nk_set", pts},
                             {"track_count", ext.track_extensions.size()},
                             {"complete", ext.complete()}};
    }
    return out;
}

Json rs_sanity(const JobConfig& cfg) {
    require(cfg.k.has_value(), ErrorCode::InvalidConfig, "rs-sanity needs \"k\"");
    const int k = *cfg.k;
    const Field& f = *cfg.field;
    CodeAnalysis analysis(rs_code(cfg.field, cfg.rs_support, k), cfg.budget);
    const int n = static_cast<int>(cfg.rs_support.size());
    Json classes = Json::array();
    for (const auto& cls : rs_deep_hole_classes(cfg.field, cfg.rs_support, k)) {
        std::set<int> dists;
        for (const auto& w : cls.words) dists.insert(analysis.error_distance(w));
        classes.push_back({{"pole", cls.pole ? element_to_json(f, *cls.pole) : Json(nullptr)},
                           {"label", cls.label},
                           {"error_distances", dists},
                           {"deep", dists.size() == 1 && *dists.begin() == n - k}});
    }
    return {{"n", n},
            {"k", k},
            {"covering_radius", analysis.covering_radius().radius},
            {"classes", classes},
            {"guarantee", computed_label(analysis.covering_radius())}};
}

}  // namespace

EvalSet JobConfig::eval_set() const {
    const Curve& c = require_curve();
    return eval_points ? EvalSet(c, *eval_points) : EvalSet::all_but_o(c);
}

const Curve& JobConfig::require_curve() const {
    require(curve.has_value(), ErrorCode::InvalidConfig, "task \"" + task + "\" needs a curve");
    return *curve;
}

int JobConfig::require_k() const {
    require(k.has_value(), ErrorCode::InvalidConfig, "task \"" + task + "\" needs \"k\"");
    return *k;
}

JobConfig parse_config(const Json& j) {
    require(j.is_object(), ErrorCode::InvalidConfig, "configuration must be a JSON object");
    JobConfig cfg;
    cfg.raw = j;
    require(j.contains("task") && j["task"].is_string(), ErrorCode::InvalidConfig, "missing \"task\"");
    cfg.task = j["task"].get<std::string>();
    require(kTasks.contains(cfg.task), ErrorCode::InvalidConfig, "unknown task \"" + cfg.task + "\"");
    require(j.contains("field"), ErrorCode::InvalidConfig, "missing \"field\"");
    cfg.field = field_from_json(j["field"]);
    const Field& f = *cfg.field;

    if (j.contains("curve")) {
        const Json& cj = j["curve"];
        require(cj.is_object() && cj.contains("s") && cj.contains("t"), ErrorCode::InvalidConfig,
                "curve needs \"s\" and \"t\"");
        cfg.curve.emplace(cfg.field, element_from_json(f, cj["s"]), element_from_json(f, cj["t"]));
    }
    if (j.contains("eval_set")) {
        const Json& ej = j["eval_set"];
        if (ej.is_string()) {
            require(ej.get<std::string>() == "all_but_O", ErrorCode::InvalidConfig,
                    "eval_set must be \"all_but_O\" or a point list");
        } else {
            require(ej.is_array(), ErrorCode::InvalidConfig, "eval_set must be \"all_but_O\" or a point list");
            std::vector<CurvePoint> pts;
            for (const auto& p : ej) pts.push_back(point_from_json(f, p));
            cfg.eval_points = std::move(pts);
        }
    }
    if (j.contains("k")) cfg.k = int_field(j, "k");
    if (j.contains("k_range")) {
        const Json& r = j["k_range"];
        require(r.is_array() && r.size() == 2 && r[0].is_number_integer() && r[1].is_number_integer(),
                ErrorCode::InvalidConfig, "\"k_range\" must be [first, last]");
        cfg.k_range = std::make_pair(r[0].get<int>(), r[1].get<int>());
    }
    if (j.contains("side")) {
        require(j["side"].is_string(), ErrorCode::InvalidConfig, "\"side\" must be a string");
        const auto s = j["side"].get<std::string>();
        require(s == "functional" || s == "residue", ErrorCode::InvalidConfig,
                "\"side\" must be \"functional\" or \"residue\"");
        cfg.side = s == "functional" ? Side::Functional : Side::Residue;
    }
    if (j.contains("P")) cfg.point = point_from_json(f, j["P"]);
    if (j.contains("budget")) {
        require(j["budget"].is_number_integer() && j["budget"].get<std::int64_t>() > 0, ErrorCode::InvalidConfig,
                "\"budget\" must be a positive integer");
        cfg.budget.max_states = j["budget"].get<std::uint64_t>();
    }
    if (j.contains("seed")) {
        require(j["seed"].is_number_integer() && j["seed"].get<std::int64_t>() >= 0, ErrorCode::InvalidConfig, "\"seed\" must be a nonnegative integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("samples")) {
        cfg.samples = int_field(j, "samples");
        require(cfg.samples >= 1, ErrorCode::InvalidConfig, "\"samples\" must be positive");
    }
    if (j.contains("rs")) {
        const Json& rj = j["rs"];
        require(rj.is_object() && rj.contains("D"), ErrorCode::InvalidConfig, "\"rs\" needs \"D\"");
        cfg.rs_support = vector_from_json(f, rj["D"]);
        if (rj.contains("k")) cfg.k = int_field(rj, "k");
    }
    if (cfg.task == "rs-sanity")
        require(!cfg.rs_support.empty(), ErrorCode::InvalidConfig, "rs-sanity needs \"rs\": {\"D\": [...]}");
    else
        require(cfg.curve.has_value(), ErrorCode::InvalidConfig, "missing \"curve\"");
    return cfg;
}

Json run_job(const JobConfig& cfg) {
    if (cfg.task == "curve-info") return curve_info(cfg);
    if (cfg.task == "code-build") return code_build(cfg);
    if (cfg.task == "distance" || cfg.task == "covering-radius") {
        const int k = cfg.require_k();
        CodeAnalysis analysis(build_code(cfg, k), cfg.budget);
        return radius_json(cfg, k, analysis, cfg.task == "distance");
    }
    if (cfg.task == "deep-holes") return deep_holes(cfg);
    if (cfg.task == "conjecture-check") return conjecture_check(cfg);
    if (cfg.task == "syndrome-verify") return syndrome_verify(cfg);
    if (cfg.task == "geometry") return geometry(cfg);
    return rs_sanity(cfg);
}

Json make_report(const JobConfig& cfg, Json results, double timing_ms) {
    return {{"schema", kSchema},
            {"tool_version", kToolVersion},
            {"config", cfg.raw},
            {"results", std::move(results)},
            {"timing_ms", timing_ms}};
}

Json error_report(ErrorCode code, const std::string& message) {
    return {{"schema", kSchema},
            {"tool_version", kToolVersion},
            {"error", {{"code", std::string(error_code_name(code))}, {"message", message}}}};
}

std::vector<SweepRow> sweep(const JobConfig& cfg) {
    require(cfg.k_range.has_value(), ErrorCode::InvalidConfig, "sweep needs \"k_range\"");
    std::vector<SweepRow> rows;
    for (int k = cfg.k_range->first; k <= cfg.k_range->second; ++k) {
        SweepRow row;
        row.k = k;
        try {
            CodeAnalysis analysis(build_code(cfg, k), cfg.budget);
            row.min_distance = analysis.min_distance();
            row.covering_radius = analysis.covering_radius().radius;
            row.deep_hole_cosets = analysis.deep_hole_syndromes().size();
        } catch (const Error& e) {
            row.error = std::string(error_code_name(e.code()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "k,d,rho,deep_hole_cosets,error\n";
    auto opt = [&](const auto& v) {
        if (v) os << *v;
    };
    for (const auto& r : rows) {
        os << r.k << ',';
        opt(r.min_distance);
        os << ',';
        opt(r.covering_radius);
        os << ',';
        opt(r.deep_hole_cosets);
        os << ',' << r.error.value_or("") << '\n';
    }
    return os.str();
}

Json sweep_json(const std::vector<SweepRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows) {
        Json row{{"k", r.k}};
        row["d"] = r.min_distance ? Json(*r.min_distance) : Json(nullptr);
        row["rho"] = r.covering_radius ? Json(*r.covering_radius) : Json(nullptr);
        row["deep_hole_cosets"] = r.deep_hole_cosets ? Json(*r.deep_hole_cosets) : Json(nullptr);
        row["error"] = r.error ? Json(*r.error) : Json(nullptr);
        row["guarantee"] = "bfs";
        out.push_back(std::move(row));
    }
    return {{"rows", out}};
}

}  // namespace ellidh
