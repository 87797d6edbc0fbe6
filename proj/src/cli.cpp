#include "cq/cli.hpp"
#include "cq/golden.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace cq::cli {

using io::Json;
using io::member;

namespace {

bool flag(const Json& options, const char* key) {
    return options.is_object() && options.contains(key) && options[key].is_boolean() && options[key].get<bool>();
}

std::size_t count_from(const Json& j, const char* what) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw io::ParseError(std::string(what) + ": non-negative integer expected");
    return j.get<std::size_t>();
}

LimitStrategy strategy_from(const Json& input, const Json& options) {
    std::string s = "auto";
    if (options.is_object() && options.contains("strategy")) s = options["strategy"].get<std::string>();
    if (input.is_object() && input.contains("strategy")) s = input["strategy"].get<std::string>();
    if (s == "auto") return LimitStrategy::Auto;
    if (s == "full") return LimitStrategy::Full;
    if (s == "probe") return LimitStrategy::Probe;
    throw io::ParseError("unknown strategy: " + s);
}

std::optional<std::size_t> dvr_cap(const Json& options) {
    if (options.is_object() && options.contains("dvr_max_order")) return count_from(options["dvr_max_order"], "dvr_max_order");
    return dvr_cap_from_env();
}

QMatrix basis_or_identity(const Json& input, std::size_t d) {
    if (input.contains("basis")) return io::matrix_from(input["basis"]);
    return QMatrix::identity(d);
}

struct OrientedInput {
    ArtinAlgebra alg;
    QVector alpha;
};

// {"algebra", "alpha"} or {"apolar", "nvars"}.
OrientedInput oriented_from(const Json& input) {
    if (input.contains("apolar")) {
        Apolar ap = apolar_algebra(io::mpoly_from(input["apolar"]), count_from(member(input, "nvars"), "nvars"));
        return {ap.alg, ap.alpha};
    }
    OrientedInput o{io::algebra_from(member(input, "algebra")), io::vector_from(member(input, "alpha"))};
    if (o.alpha.size() != o.alg.dim()) throw std::invalid_argument("alpha has the wrong length");
    return o;
}

ArtinAlgebra algebra_input(const Json& input) {
    if (input.contains("apolar"))
        return apolar_algebra(io::mpoly_from(input["apolar"]), count_from(member(input, "nvars"), "nvars")).alg;
    return io::algebra_from(member(input, "algebra"));
}

PolySystem system_input(const Json& input) {
    if (input.contains("system")) return io::system_from(input["system"]);
    if (input.contains("jordan")) {
        const std::size_t d = count_from(input["jordan"], "jordan");
        return compat_equations({jordan_model_action(d)}, jordan_model_params(d), basis_or_identity(input, d));
    }
    std::vector<QMatrix> action;
    for (const auto& m : member(input, "action")) action.push_back(io::matrix_from(m));
    if (action.empty()) throw std::invalid_argument("equations: empty action");
    return compat_equations(action, basis_or_identity(input, action[0].rows()));
}

Json hilbert_json(const ArtinModule& m) { return hilbert_function(m); }

Json cmd_limit(const Json& in, const Json& options) {
    const QPolyMatrix q = io::poly_matrix_from(member(in, "family"));
    const BrokenQuadric bq = limit_minor(q, strategy_from(in, options));
    Json r{{"limit", io::to_json(bq)}, {"ranks", bq.ranks()}};
    if (flag(options, "oracle")) {
        try {
            const BrokenQuadric d = limit_dvr(q, dvr_cap(options));
            if (d != bq) throw MismatchError("limit_minor and limit_dvr disagree");
            r["oracle"] = "agree";
        } catch (const DvrError& e) {
            r["oracle"] = std::string("dvr unavailable: ") + e.what();
        }
    }
    return r;
}

Json cmd_dualize(const Json& in, const Json&) {
    return Json{{"dual", io::to_json(dualize(io::broken_quadric_from(member(in, "quadric"))))}};
}

Json cmd_exterior(const Json& in, const Json&) {
    return Json{{"tuple", io::to_json(to_exterior(io::broken_quadric_from(member(in, "quadric"))))}};
}

Json cmd_from_exterior(const Json& in, const Json&) {
    return Json{{"quadric", io::to_json(from_exterior(io::exterior_from(member(in, "tuple"))))}};
}

Json cmd_tyrrell(const Json& in, const Json&) {
    TyrrellCoords c = io::tyrrell_from(member(in, "coords"));
    ExteriorTuple t = tyrrell_point(c.y, c.x);
    return Json{{"quadric", io::to_json(from_exterior(t))}, {"tuple", io::to_json(t)}};
}

Json cmd_tyrrell_coords(const Json& in, const Json&) {
    BrokenQuadric bq = io::broken_quadric_from(member(in, "quadric"));
    TyrrellCoords c = tyrrell_coords(bq, basis_or_identity(in, bq.dim()));
    return Json{{"coords", io::to_json(c)}, {"point", io::to_json(chart_point(c))}};
}

Json cmd_compat_space(const Json& in, const Json&) {
    BrokenQuadric bq = io::broken_quadric_from(member(in, "quadric"));
    const bool anti = in.contains("anti") && in["anti"].get<bool>();
    return Json{{"anti", anti}, {"space", io::to_json(anti ? anticompatible_space(bq) : compatible_space(bq))}};
}

Json cmd_is_compatible(const Json& in, const Json&) {
    BrokenQuadric bq = io::broken_quadric_from(member(in, "quadric"));
    QMatrix x = io::matrix_from(member(in, "operator"));
    return Json{{"anticompatible", is_anticompatible(x, bq)}, {"compatible", is_compatible(x, bq)}};
}

Json cmd_equations(const Json& in, const Json&) { return Json{{"system", io::to_json(system_input(in))}}; }

Json cmd_tangent(const Json& in, const Json&) {
    PolySystem sys = system_input(in);
    QVector point = io::vector_from(member(in, "point"));
    const bool fiber = in.contains("fiber_only") && in["fiber_only"].get<bool>();
    return Json{{"fiber_only", fiber}, {"tangent_dim", tangent_dim(sys, point, fiber)}, {"vars", sys.vars}};
}

Json cmd_decompose(const Json& in, const Json&) {
    if (in.contains("module")) {
        ArtinModule m;
        for (const auto& x : member(in["module"], "ops")) m.ops.push_back(io::matrix_from(x));
        SymDecomp sd = symmetric_decomposition(m, io::matrix_from(member(in, "form")));
        return Json{{"decomposition", io::to_json(sd)}, {"hilbert", hilbert_json(m)}};
    }
    OrientedInput o = oriented_from(in);
    SymDecomp sd = symmetric_decomposition(o.alg, o.alpha);
    return Json{{"decomposition", io::to_json(sd)}, {"hilbert", hilbert_json(o.alg.module())}};
}

Json cmd_apolar(const Json& in, const Json&) {
    Apolar ap = apolar_algebra(io::mpoly_from(member(in, "apolar")), count_from(member(in, "nvars"), "nvars"));
    Json basis = Json::array();
    for (const auto& p : ap.basis) basis.push_back(io::to_json(p));
    return Json{{"algebra", io::to_json(ap.alg)}, {"alpha", io::to_json(ap.alpha)}, {"basis", basis},
                {"hilbert", hilbert_json(ap.alg.module())}};
}

Json cmd_gr(const Json& in, const Json&) {
    ArtinAlgebra a = algebra_input(in);
    BBLimit bb = bb_limit_ideal(a);
    Json gens = Json::array();
    for (const auto& g : bb.generators) gens.push_back(io::to_json(g));
    return Json{{"degree", bb.gr.gr.degree},
                {"generators", gens},
                {"graded", io::to_json(bb.gr.gr.alg)},
                {"hilbert", hilbert_json(bb.gr.gr.alg.module())},
                {"monomials", bb.gr.monomials}};
}

Json cmd_torus_limit(const Json& in, const Json& options) {
    OrientedInput o = oriented_from(in);
    TorusLimitResult r = torus_limit(o.alg, o.alpha);
    Json ideals = Json::array(), phis = Json::array();
    for (const auto& s : r.ideals) ideals.push_back(io::to_json(s));
    for (const auto& m : r.phi) phis.push_back(io::to_json(m));
    Json out{{"delta", r.decomp.delta},
             {"ideals", ideals},
             {"monomials", r.gr.monomials},
             {"phi", phis},
             {"phi_limit", io::to_json(r.phi_limit)},
             {"q_limit", io::to_json(r.q_limit)},
             {"s", r.s}};
    if (flag(options, "oracle")) {
        if (torus_limit_oracle(o.alg, o.alpha) != r.q_limit) throw MismatchError("torus_limit and its oracle disagree");
        out["oracle"] = "agree";
    }
    return out;
}

Json cmd_verify_paper(const Json&, const Json&) {
    Json cases = Json::array();
    std::size_t passed = 0;
    auto results = golden::verify_all();
    for (const auto& c : results) {
        cases.push_back(Json{{"detail", c.detail}, {"name", c.name}, {"pass", c.pass}});
        if (c.pass) ++passed;
    }
    Json out{{"cases", cases}, {"passed", passed}, {"total", results.size()}};
    if (passed != results.size()) throw MismatchError("verify-paper: " + std::to_string(results.size() - passed) + " case(s) failed");
    return out;
}

using Handler = Json (*)(const Json&, const Json&);

const std::vector<std::pair<std::string, Handler>>& table() {
    static const std::vector<std::pair<std::string, Handler>> t{
        {"limit", cmd_limit},
        {"dualize", cmd_dualize},
        {"exterior", cmd_exterior},
        {"from-exterior", cmd_from_exterior},
        {"tyrrell", cmd_tyrrell},
        {"tyrrell-coords", cmd_tyrrell_coords},
        {"compat-space", cmd_compat_space},
        {"is-compatible", cmd_is_compatible},
        {"equations", cmd_equations},
        {"tangent", cmd_tangent},
        {"decompose", cmd_decompose},
        {"apolar", cmd_apolar},
        {"gr", cmd_gr},
        {"torus-limit", cmd_torus_limit},
        {"verify-paper", cmd_verify_paper},
    };
    return t;
}

Outcome error_outcome(const std::string& command, int code, const std::string& msg) {
    return Outcome{code, Json{{"command", command}, {"error", msg}, {"exit", code}, {"schema", io::kSchema}, {"status", "error"}}};
}

void check_field(const Json& options) {
    if (!options.is_object() || !options.contains("field")) return;
    const Json& f = options["field"];
    if (f.is_string() && f.get<std::string>() == "Q") return;
    if (f.is_object() && f.contains("prime"))
        throw std::domain_error("field: only the rationals are supported by this command set");
    throw io::ParseError("field: \"Q\" or {\"prime\": p} expected");
}

} // namespace

std::optional<std::size_t> dvr_cap_from_env() {
    const char* s = std::getenv("CQ_DVR_MAX_ORDER");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    const unsigned long v = std::strtoul(s, &end, 10);
    if (*end) throw io::ParseError("CQ_DVR_MAX_ORDER: integer expected");
    return static_cast<std::size_t>(v);
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, h] : table()) n.push_back(k);
        return n;
    }();
    return names;
}

Outcome run_job(const std::string& command, const Json& input, const Json& options) {
    auto it = std::find_if(table().begin(), table().end(), [&](const auto& e) { return e.first == command; });
    if (it == table().end()) return error_outcome(command, kParse, "unknown command: " + command);
    try {
        check_field(options);
        Json result = it->second(input.is_null() ? Json::object() : input, options);
        return Outcome{kOk, Json{{"command", command}, {"result", result}, {"schema", io::kSchema}, {"status", "ok"}}};
    } catch (const io::ParseError& e) {
        return error_outcome(command, kParse, e.what());
    } catch (const Json::exception& e) {
        return error_outcome(command, kParse, e.what());
    } catch (const MismatchError& e) {
        return error_outcome(command, kMismatch, e.what());
    } catch (const ReconstructionError& e) {
        return error_outcome(command, kPrecondition, e.what());
    } catch (const DvrError& e) {
        return error_outcome(command, kPrecondition, e.what());
    } catch (const std::domain_error& e) {
        return error_outcome(command, kPrecondition, e.what());
    } catch (const std::invalid_argument& e) {
        return error_outcome(command, kPrecondition, e.what());
    } catch (const std::out_of_range& e) {
        return error_outcome(command, kPrecondition, e.what());
    } catch (const std::exception& e) {
        return error_outcome(command, kMismatch, std::string("internal check failed: ") + e.what());
    }
}

Outcome run_document(const Json& job) {
    if (!job.is_object()) return error_outcome("", kParse, "job: object expected");
    if (job.contains("schema") && job["schema"] != io::kSchema)
        return error_outcome("", kParse, "unsupported schema: " + job["schema"].dump());
    if (!job.contains("command") || !job["command"].is_string()) return error_outcome("", kParse, "job: missing command");
    return run_job(job["command"].get<std::string>(), job.value("input", Json::object()), job.value("options", Json::object()));
}

Outcome run_batch(const Json& batch, unsigned threads) {
    if (!batch.is_object() || !batch.contains("jobs") || !batch["jobs"].is_array())
        return error_outcome("batch", kParse, "batch: {\"jobs\": [...]} expected");
    if (batch.contains("schema") && batch["schema"] != io::kSchema)
        return error_outcome("batch", kParse, "unsupported schema: " + batch["schema"].dump());
    const Json& jobs = batch["jobs"];
    std::vector<Outcome> out(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < jobs.size();) out[i] = run_document(jobs[i]);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    Outcome total{kOk, Json{{"results", Json::array()}, {"schema", io::kSchema}}};
    for (auto& o : out) {
        total.code = std::max(total.code, o.code);
        total.doc["results"].push_back(std::move(o.doc));
    }
    return total;
}

} // namespace cq::cli
