#include <picard/cli.hpp>
#include <picard/golden.hpp>
#include <picard/nonlinear.hpp>
#include <picard/relation_search.hpp>
#include <picard/wronskian.hpp>
#include <picard/yukawa.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>

namespace picard::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string float_text(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

const char* command_name(Command c)
{
    switch (c) {
    case Command::mirror:
        return "mirror";
    case Command::yukawa:
        return "yukawa";
    case Command::instantons:
        return "instantons";
    case Command::prepotential:
        return "prepotential";
    case Command::verify:
        return "verify";
    case Command::wronskian:
        return "wronskian";
    case Command::search_relation:
        return "search-relation";
    case Command::eval_f0:
        return "eval-f0";
    case Command::golden:
        return "golden";
    }
    return "?";
}

const char* emit_name(Emit e)
{
    switch (e) {
    case Emit::z_of_q:
        return "z_of_q";
    case Emit::q_of_z:
        return "q_of_z";
    case Emit::f0_tilde:
        return "f0_tilde";
    }
    return "?";
}

Json strings(const std::vector<Integer>& xs)
{
    Json arr = Json::array();
    for (const auto& x : xs) {
        arr.push_back(x.get_str());
    }
    return arr;
}

Json strings(const std::vector<Rational>& xs)
{
    Json arr = Json::array();
    for (const auto& x : xs) {
        arr.push_back(to_string(x));
    }
    return arr;
}

Json to_json(const TPolyQSeries& f)
{
    Json terms = Json::array();
    for (const auto& t : f.terms()) {
        terms.push_back(picard::to_json(t));
    }
    return terms;
}

// ---- verify -------------------------------------------------------------

struct CheckItem {
    std::string name;
    bool pass = false;
    int order = 0;
    std::optional<int> first_nonzero;
};

CheckItem residual_item(std::string name, const PowerSeries& r, int required)
{
    CheckItem item{std::move(name), false, r.order(), std::nullopt};
    if (!r.is_zero()) {
        item.first_nonzero = r.valuation();
    }
    item.pass = r.is_zero() && r.order() >= required;
    return item;
}

CheckItem residual_item(std::string name, const TPolyQSeries& r, int required)
{
    CheckItem item{std::move(name), false, r.order(), std::nullopt};
    for (const auto& t : r.terms()) {
        if (!t.is_zero() && (!item.first_nonzero || t.valuation() < *item.first_nonzero)) {
            item.first_nonzero = t.valuation();
        }
    }
    item.pass = r.is_zero() && r.order() >= required;
    return item;
}

CheckItem integrality_item(std::string name, const PowerSeries& f, int through)
{
    const auto report = integrality_report(f, through);
    return {std::move(name), report.pass, through + 1, report.first_failure};
}

using Task = std::function<std::vector<CheckItem>()>;

std::vector<Task> verify_tasks(const std::string& target, int s, int order)
{
    std::vector<Task> tasks;
    const bool all = target == "all";
    auto hodge = [order](int fam) {
        return [order, fam] {
            return std::vector<CheckItem>{
                residual_item("squared-solution identity s=" + std::to_string(fam),
                              verify_hodge_identity(fam, order), order)};
        };
    };
    auto schwarzian_eq = [order](int fam) {
        return [order, fam] {
            return std::vector<CheckItem>{residual_item("Schwarzian equation s=" + std::to_string(fam),
                                                        verify_schwarzian_equation(fam, order), order)};
        };
    };
    if (all || target == "eq2") {
        tasks.push_back(hodge(3));
    }
    if (all || target == "eq5") {
        tasks.push_back(hodge(4));
    }
    if (target == "eq9") {
        if (s != 3 && s != 4) {
            throw UsageError("verify eq9 needs --s 3 or --s 4");
        }
        tasks.push_back(schwarzian_eq(s));
    }
    if (all) {
        tasks.push_back(schwarzian_eq(3));
        tasks.push_back(schwarzian_eq(4));
    }
    if (all || target == "eq16") {
        tasks.push_back([order] {
            return std::vector<CheckItem>{
                residual_item("second-order coupling", verify_second_order_coupling(order), order)};
        });
    }
    if (all || target == "eq19") {
        tasks.push_back([order] {
            return std::vector<CheckItem>{
                residual_item("Yukawa defining identity", yukawa_definition_residual(order), order)};
        });
    }
    if (all || target == "eq25") {
        tasks.push_back([order] {
            return std::vector<CheckItem>{
                residual_item("fourth-order coupling", verify_fourth_order_coupling(order), order)};
        });
    }
    if (all || target == "pandharipande") {
        tasks.push_back([order] {
            std::vector<CheckItem> items;
            const auto res = verify_pandharipande(order);
            for (std::size_t j = 0; j < res.size(); ++j) {
                items.push_back(residual_item("t-function equation j=" + std::to_string(j), res[j], order));
            }
            return items;
        });
    }
    if (all || target == "integrality") {
        for (int fam : {3, 4, 5}) {
            tasks.push_back([order, fam] {
                const auto m = mirror_pipeline(fam, order);
                const auto tag = " s=" + std::to_string(fam);
                const auto mantissa = m.q_of_z / PowerSeries::variable(Var::z, order);
                return std::vector<CheckItem>{integrality_item("z(q) integral" + tag, m.z_of_q, order - 1),
                                              integrality_item("q(z)/z integral" + tag, mantissa, order - 2),
                                              integrality_item("f0_tilde integral" + tag, m.f0_tilde, order - 1)};
            });
        }
        tasks.push_back([order] {
            return std::vector<CheckItem>{
                integrality_item("K/5 integral", yukawa_from_definition(order) * Rational(1, 5), order - 1)};
        });
    }
    if (tasks.empty()) {
        throw UsageError("unknown verify target '" + target +
                         "' (eq2 eq5 eq9 eq16 eq19 eq25 pandharipande integrality all)");
    }
    return tasks;
}

RunResult run_verify(const RunConfig& c)
{
    const auto tasks = verify_tasks(c.verify_target, c.s, c.order);
    std::vector<std::future<std::vector<CheckItem>>> running;
    for (const auto& t : tasks) {
        running.push_back(std::async(std::launch::async, t));
    }
    RunResult r;
    Json items = Json::array();
    bool pass = true;
    for (auto& f : running) {
        for (const auto& item : f.get()) {
            Json j{{"name", item.name}, {"pass", item.pass}, {"order", item.order}};
            j["first_nonzero"] = item.first_nonzero ? Json(*item.first_nonzero) : Json(nullptr);
            items.push_back(j);
            pass = pass && item.pass;
        }
    }
    r.report["target"] = c.verify_target;
    r.report["items"] = items;
    r.report["pass"] = pass;
    r.exit_code = pass ? exit_ok : exit_verification_failed;
    return r;
}

// ---- other commands -------------------------------------------------------

RunResult run_wronskian(const RunConfig& c)
{
    std::ifstream in(c.input_path);
    if (!in) {
        throw UsageError("cannot read input file '" + c.input_path + "'");
    }
    Json input;
    try {
        input = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("input is not valid JSON: ") + e.what());
    }
    if (!input.contains("functions") || !input.at("functions").is_array()) {
        throw UsageError("input needs a \"functions\" array of series or log-series records");
    }
    std::vector<LogSeries> fs;
    for (const auto& f : input.at("functions")) {
        fs.push_back(log_series_from_json(f));
    }
    const auto d = input.value("derivation", std::string("plain"));
    if (d != "plain" && d != "euler") {
        throw UsageError("derivation must be \"plain\" or \"euler\"");
    }
    const auto w = wronskian(fs, d == "plain" ? Derivation::plain : Derivation::euler);
    RunResult r;
    r.report["derivation"] = d;
    r.report["status"] = w.status == WronskianStatus::nonzero ? "nonzero" : "indeterminate";
    r.report["value_order"] = w.order;
    r.report["value"] = picard::to_json(w.value);
    if (input.value("r_operator", false)) {
        if (w.status != WronskianStatus::nonzero) {
            throw UsageError("R operator needs linearly independent functions");
        }
        const auto op = r_operator(fs);
        r.report["r_operator"] = {{"normalization", to_string(op.normalization)},
                                  {"poly", picard::to_json(op.poly)}};
    }
    return r;
}

RunResult run_search(const RunConfig& c)
{
    if (c.mode != "p1" && c.mode != "p2") {
        throw UsageError("--mode must be p1 or p2");
    }
    if (c.weight_bound < 2 || c.trials < 1) {
        throw UsageError("--weight-bound must be >= 2 and --trials >= 1");
    }
    const auto rep = relation_search(c.mode == "p1" ? RelationMode::p1 : RelationMode::p2, c.weight_bound,
                                     c.order, c.trials, c.seed);
    const auto& s = rep.search;
    RunResult r;
    r.report["mode"] = c.mode;
    r.report["weight_bound"] = c.weight_bound;
    r.report["trials"] = c.trials;
    r.report["seed"] = c.seed;
    r.report["found"] = s.relation.has_value();
    r.report["weight"] = s.weight;
    r.report["degree"] = s.degree;
    r.report["monomials"] = s.monomials;
    r.report["rank"] = s.rank;
    r.report["nullity"] = s.nullity;
    r.report["certified_trials"] = s.certified_trials;
    r.report["message"] = s.message;
    if (s.relation) {
        r.report["relation"] = picard::to_json(*s.relation);
        r.report["relation_text"] = s.relation->to_string();
        r.report["check"] = picard::to_json(rep.check);
    }
    r.report["verified"] = rep.verified;
    r.exit_code = rep.verified ? exit_ok : exit_verification_failed;
    return r;
}

RunResult run_golden(const RunConfig& c)
{
    if (c.order < 24) {
        throw UsageError("golden needs --order >= 24");
    }
    const auto rep = golden_suite(c.order);
    RunResult r;
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json j{{"name", it.name}, {"status", to_string(it.status)}, {"checked", it.checked}, {"listed", it.listed}};
        j["first_mismatch"] = it.first_mismatch ? Json(*it.first_mismatch) : Json(nullptr);
        j["expected"] = it.expected;
        j["computed"] = it.computed;
        items.push_back(j);
    }
    r.report["items"] = items;
    r.report["pass"] = rep.pass();
    r.exit_code = rep.pass() ? exit_ok : exit_verification_failed;
    return r;
}

RunResult dispatch(const RunConfig& c)
{
    RunResult r;
    switch (c.command) {
    case Command::mirror: {
        const auto m = mirror_pipeline(c.s, c.order);
        const auto& series = c.emit == Emit::z_of_q ? m.z_of_q : c.emit == Emit::q_of_z ? m.q_of_z : m.f0_tilde;
        r.report["s"] = c.s;
        r.report["emit"] = emit_name(c.emit);
        r.report["series"] = picard::to_json(series);
        return r;
    }
    case Command::yukawa:
        r.report["series"] = picard::to_json(yukawa_from_definition(c.order));
        return r;
    case Command::instantons: {
        if (c.count < 1 || c.count >= c.order) {
            throw UsageError("--count must satisfy 1 <= count < order");
        }
        const auto table = instanton_numbers(yukawa_from_definition(c.order), c.count);
        r.report["count"] = c.count;
        r.report["n"] = strings(table.n);
        r.report["N"] = strings(table.N);
        return r;
    }
    case Command::prepotential:
        r.report["t_terms"] = to_json(prepotential(c.order));
        return r;
    case Command::verify:
        return run_verify(c);
    case Command::wronskian:
        return run_wronskian(c);
    case Command::search_relation:
        return run_search(c);
    case Command::eval_f0: {
        const auto e = evaluate_F0_at(c.t, c.order);
        r.report["t"] = float_text(c.t);
        r.report["value"] = float_text(e.value);
        r.report["tail_bound"] = float_text(e.tail_bound);
        return r;
    }
    case Command::golden:
        return run_golden(c);
    }
    throw UsageError("unknown command");
}

void render_text(const Json& j, const std::string& path, std::ostream& out)
{
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            render_text(v, path.empty() ? k : path + "." + k, out);
        }
        return;
    }
    if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j) {
            scalars = scalars && !v.is_structured();
        }
        if (scalars) {
            out << path << " =";
            for (const auto& v : j) {
                out << ' ' << (v.is_string() ? v.get<std::string>() : v.dump());
            }
            out << '\n';
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) {
            render_text(j[i], path + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out << path << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

} // namespace

RunResult run(const RunConfig& config)
{
    RunResult r;
    try {
        if (config.order < 8) {
            throw UsageError("--order must be >= 8, got " + std::to_string(config.order));
        }
        r = dispatch(config);
    } catch (const UsageError& e) {
        r = {exit_usage, Json{{"error", e.what()}}};
    } catch (const PreconditionError& e) {
        r = {exit_usage, Json{{"error", e.what()}}};
    } catch (const IntegralityError& e) {
        r = {exit_verification_failed, Json{{"error", e.what()}}};
    }
    Json out;
    out["command"] = command_name(config.command);
    out["order"] = config.order;
    for (const auto& [k, v] : r.report.items()) {
        out[k] = v;
    }
    out["exit_code"] = r.exit_code;
    r.report = std::move(out);
    return r;
}

std::string render(const Json& report, Format format)
{
    if (format == Format::json) {
        return report.dump(2) + "\n";
    }
    std::ostringstream out;
    render_text(report, "", out);
    return out.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact mirror-map, Yukawa-coupling and differential-identity engine"};
    app.fallthrough();
    app.require_subcommand(1);

    RunConfig c;
    std::string out_path;
    const std::map<std::string, Emit> emits{
        {"z_of_q", Emit::z_of_q}, {"q_of_z", Emit::q_of_z}, {"f0_tilde", Emit::f0_tilde}};
    const std::map<std::string, Format> formats{{"json", Format::json}, {"text", Format::text}};
    app.add_option("--s", c.s, "family parameter (s >= 3)");
    app.add_option("--order", c.order, "series order, >= 8");
    app.add_option("--seed", c.seed, "seed for randomized searches");
    app.add_option("--emit", c.emit, "series to print for mirror")->transform(CLI::CheckedTransformer(emits));
    app.add_option("--out", out_path, "write the report to this file");
    app.add_option("--format", c.format, "json or text")->transform(CLI::CheckedTransformer(formats));

    const std::vector<std::pair<Command, std::string>> names{
        {Command::mirror, "mirror"},
        {Command::yukawa, "yukawa"},
        {Command::instantons, "instantons"},
        {Command::prepotential, "prepotential"},
        {Command::verify, "verify"},
        {Command::wronskian, "wronskian"},
        {Command::search_relation, "search-relation"},
        {Command::eval_f0, "eval-f0"},
        {Command::golden, "golden"}};
    std::map<std::string, CLI::App*> subs;
    for (const auto& [cmd, name] : names) {
        subs[name] = app.add_subcommand(name);
    }
    subs["mirror"]->description("mirror map series for family s");
    subs["yukawa"]->description("Yukawa coupling K(q)");
    subs["instantons"]->description("instanton numbers n_l and N_l");
    subs["instantons"]->add_option("--count", c.count, "number of instanton numbers");
    subs["prepotential"]->description("prepotential as a polynomial in t with q-series coefficients");
    subs["verify"]->description("residual checks");
    subs["verify"]->add_option("target", c.verify_target,
                               "eq2 eq5 eq9 eq16 eq19 eq25 pandharipande integrality all");
    subs["wronskian"]->description("Wronskian of series records read from a JSON file");
    subs["wronskian"]->add_option("--input", c.input_path, "JSON file with a \"functions\" array")->required();
    subs["search-relation"]->description("search for a quasi-homogeneous differential relation");
    subs["search-relation"]->add_option("--mode", c.mode, "p1 or p2");
    subs["search-relation"]->add_option("--weight-bound", c.weight_bound, "largest quasi-weight scanned");
    subs["search-relation"]->add_option("--trials", c.trials, "random inputs per weight");
    subs["eval-f0"]->description("numeric value of F0 at real t < 0");
    subs["eval-f0"]->add_option("--t", c.t, "real t < 0");
    subs["golden"]->description("compare against the embedded coefficient tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }
    for (const auto& [cmd, name] : names) {
        if (subs[name]->parsed()) {
            c.command = cmd;
        }
    }
    if (!out_path.empty()) {
        c.output_path = out_path;
    }

    const auto result = run(c);
    const auto text = render(result.report, c.format);
    if (result.exit_code == exit_usage) {
        err << "error: " << result.report.value("error", std::string("usage error")) << "\n";
    }
    if (c.output_path) {
        std::ofstream file(*c.output_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *c.output_path << "\n";
            return exit_usage;
        }
        file << text;
    } else {
        out << text;
    }
    return result.exit_code;
}

} // namespace picard::cli
