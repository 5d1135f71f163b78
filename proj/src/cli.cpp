#include "lscat/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lscat/catalog.hpp"
#include "lscat/cohomology.hpp"
#include "lscat/element_io.hpp"
#include "lscat/errors.hpp"
#include "lscat/model_file.hpp"
#include "lscat/murillo.hpp"
#include "lscat/random.hpp"
#include "lscat/report.hpp"
#include "lscat/spectral.hpp"

namespace lscat {

namespace {

struct Options {
    std::string model_path;
    std::string format = "human";
    std::optional<int> max_degree;
    bool timing = false;
    int degree = 0;
    std::optional<int> degree_to;
    std::string method = "both";
    std::uint64_t seed = 1;
    int cases = 200;
};

ModelFile load(const std::string& path) {
    constexpr std::string_view prefix = "builtin:";
    if (path.rfind(prefix, 0) == 0) {
        const auto name = path.substr(prefix.size());
        auto entry = find_catalog_entry(name);
        if (!entry) throw IoError("no built-in model named '" + name + "'");
        return ModelFile{path, entry->source, parse_model(entry->source)};
    }
    return parse_model_file(path);
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + std::to_string(xs[i]);
    return out;
}

void add_info(Report& r, const ModelFile& file) {
    const auto& model = file.model;
    const Algebra& alg = *model.algebra;
    r.set("model.source", file.path);
    std::string gens;
    for (const auto& g : alg.generators()) gens += (gens.empty() ? "" : " ") + g.name + ":" + std::to_string(g.degree);
    r.set("model.generators", gens);
    for (const auto& g : alg.generators())
        if (!model.d.image(g.index).is_zero()) r.set("model.d." + g.name, format_element(model.d.image(g.index)));
    r.set("model.k", model.k ? std::to_string(*model.k) : std::string("none"));
    r.set("model.formal_dimension", formal_dimension(model));
    r.set("model.dim_v_even", alg.count_even());
    r.set("model.dim_v_odd", alg.count_odd());
    r.set("model.pure", is_pure(model));
}

void add_elliptic(Report& r, const SullivanModel& model, const Options& opt) {
    const auto cert = is_elliptic(model, opt.max_degree);
    r.set("elliptic.status", to_string(cert.status));
    r.set("elliptic.reason", cert.reason);
    r.set("elliptic.scan_bound", cert.scan_bound);
    r.set("elliptic.window_length", cert.window_length);
    if (cert.window_start) r.set("elliptic.window_start", *cert.window_start);
    r.set("elliptic.nonvanishing_degrees", join_ints(cert.nonvanishing_degrees));
}

void add_cohomology(Report& r, const SullivanModel& model, int from, int to) {
    for (int n = from; n <= to; ++n) {
        const auto h = cohomology_basis(model, n);
        const std::string key = "cohomology." + std::to_string(n);
        r.set(key + ".dim", h.dimension);
        for (std::size_t i = 0; i < h.representatives.size(); ++i)
            r.set(key + ".class." + std::to_string(i), format_element(h.representatives[i]));
    }
}

void add_top_class(Report& r, const SullivanModel& model, const Options& opt) {
    const auto top = top_class(model, opt.max_degree);
    r.set("top_class.degree", top.degree);
    r.set("top_class.dimension", top.space.dimension);
    r.set("top_class.representative", format_element(top.representative()));
}

void add_murillo(Report& r, const SullivanModel& model) {
    const PureModel pure(model);
    const auto a = coefficient_matrix(pure);
    const Algebra& alg = *model.algebra;
    r.set("murillo.matrix.rows", a.rows());
    r.set("murillo.matrix.cols", a.cols());
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i)
            r.set("murillo.matrix." + alg.generator(a.odd[j]).name + "." + alg.generator(a.even[i]).name,
                  format_element(a.at(j, i)));
    r.set("murillo.class", format_element(murillo_fundamental_class(pure)));
    r.set("murillo.verified", true);
}

void add_delta(Report& r, const DeltaCohomology& h, bool with_classes) {
    const std::string key = "delta." + std::to_string(h.degree);
    r.set(key + ".dim", h.dimension());
    for (const auto& [p, classes] : h.by_filtration) {
        const std::string pk = key + ".p" + std::to_string(p);
        r.set(pk + ".dim", classes.size());
        if (with_classes)
            for (const auto& c : classes)
                r.set(pk + ".class." + std::to_string(c.index), format_pair(c.representative));
    }
}

void add_toomer_result(Report& r, const ToomerResult& t) {
    const std::string key = "toomer." + to_string(t.method);
    r.set(key + ".e0", t.e0);
    if (t.witness) {
        r.set(key + ".witness.p", t.witness->p);
        r.set(key + ".witness.parity", t.witness->odd ? "odd" : "even");
    }
    r.set(key + ".representative", format_element(t.representative));
}

void add_lifts(Report& r, const SpectralToomer& s) {
    for (std::size_t i = 0; i < s.lifts.size(); ++i) {
        const auto& lift = s.lifts[i];
        const std::string key = "lift." + std::to_string(i);
        std::size_t extended = 0;
        for (const auto& step : lift.trace.steps) extended += step.extended ? 1 : 0;
        r.set(key + ".class", "p" + std::to_string(lift.delta_class.p) + "." + std::to_string(lift.delta_class.index));
        r.set(key + ".depth", lift.start.depth);
        r.set(key + ".t_bound", lift.trace.t_bound);
        r.set(key + ".steps", lift.trace.steps.size());
        r.set(key + ".extended_steps", extended);
        r.set(key + ".outcome", to_string(lift.trace.outcome));
        r.set(key + ".start", format_element(lift.trace.start));
        r.set(key + ".final", format_element(lift.trace.final_cocycle));
    }
}

// Returns the exit status implied by the comparison.
int add_toomer(Report& r, const SullivanModel& model, const std::string& method, const Options& opt) {
    if (method == "oracle" || method == "both") add_toomer_result(r, toomer_oracle(model, opt.max_degree));
    if (method == "spectral" || method == "both") add_toomer_result(r, toomer_spectral(model, opt.max_degree));
    if (model.k) r.set("toomer.lechuga_murillo_formula", lechuga_murillo_formula(model));
    if (method != "both") return kExitOk;
    const bool agree = *r.find("toomer.oracle.e0") == *r.find("toomer.spectral.e0");
    r.set("toomer.agree", agree);
    return agree ? kExitOk : kExitInconsistent;
}

int full_report(Report& r, const ModelFile& file, const Options& opt) {
    const auto& model = file.model;
    add_info(r, file);
    add_elliptic(r, model, opt);
    if (*r.find("elliptic.status") != "elliptic") throw PreconditionError("model is not elliptic");
    const int n = formal_dimension(model);
    for (int i = 0; i <= n; ++i) r.set("cohomology.dim." + std::to_string(i), cohomology_basis(model, i).dimension);
    add_top_class(r, model, opt);
    if (is_pure(model)) add_murillo(r, model);

    const auto oracle = toomer_oracle(model, opt.max_degree);
    add_toomer_result(r, oracle);
    if (model.k) r.set("toomer.lechuga_murillo_formula", lechuga_murillo_formula(model));
    if (model.k != 3) {
        r.set("toomer.spectral.unavailable", "requires k = 3");
        return kExitOk;
    }
    const auto spectral = toomer_spectral_detailed(model, opt.max_degree);
    add_toomer_result(r, spectral.result);
    const bool agree = oracle.e0 == spectral.result.e0;
    r.set("toomer.agree", agree);
    add_delta(r, spectral.top, true);
    add_lifts(r, spectral);
    return agree ? kExitOk : kExitInconsistent;
}

int selftest(Report& r, const Options& opt) {
    std::mt19937_64 rng(opt.seed);
    r.set("selftest.seed", std::to_string(opt.seed));
    r.set("selftest.cases", opt.cases);
    std::size_t failures = 0;
    std::map<std::string, std::size_t> passed;
    auto check = [&](const std::string& name, bool ok) {
        if (ok)
            ++passed[name];
        else
            ++failures;
    };
    std::vector<SullivanModel> models;
    for (const auto& e : catalog()) models.push_back(parse_model(e.source));
    for (int c = 0; c < opt.cases; ++c) {
        const auto& model = models[static_cast<std::size_t>(c) % models.size()];
        const auto& alg = model.algebra;
        const int top = std::min(formal_dimension(model), 24);
        const Element a = random_element(alg, top, rng);
        const Element b = random_element(alg, top, rng);
        const int da = a.degree().value_or(0), db = b.degree().value_or(0);
        const Rational sign = (da * db) % 2 ? -1 : 1;
        check("graded_commutativity", a * b == (b * a) * sign);
        const Rational lsign = da % 2 ? -1 : 1;
        check("leibniz", model.d(a * b) == model.d(a) * b + (a * model.d(b)) * lsign);
        check("d_squared", model.d(model.d(a)).is_zero());
        if (model.k != 3) continue;
        std::uniform_int_distribution<int> pick_p(0, 3), pick_n(0, top);
        const auto x = random_pair(alg, pick_p(rng), pick_n(rng), rng);
        const auto y = random_pair(alg, pick_p(rng), pick_n(rng), rng);
        check("delta_squared", delta_apply(model, delta_apply(model, x)).is_zero());
        const Rational psign = x.n() % 2 ? -1 : 1;
        const auto lhs = delta_apply(model, pair_product(model, x, y));
        const auto t1 = pair_product(model, delta_apply(model, x), y);
        const auto t2 = pair_product(model, x, delta_apply(model, y));
        check("delta_derivation", lhs.total() == t1.total() + t2.total() * psign);
    }
    for (const auto& [name, count] : passed) r.set("selftest." + name + ".passed", count);
    r.set("selftest.failures", failures);
    return failures == 0 ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rational LS-category and Toomer invariant of Sullivan minimal models", "lscat"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
    app.add_option("--max-degree", opt.max_degree, "Degree bound of the ellipticity scan");
    app.add_flag("--timing", opt.timing, "Append elapsed time (human format)");

    auto with_model = [&](CLI::App* sub) {
        sub->add_option("model", opt.model_path, "Model file, or builtin:<name>")->required();
        return sub;
    };
    auto* info = with_model(app.add_subcommand("info", "Generators, k and formal dimension"));
    auto* validate = with_model(app.add_subcommand("validate", "Check the model file"));
    auto* cohom = with_model(app.add_subcommand("cohomology", "Cohomology in a degree range"));
    cohom->add_option("--degree", opt.degree, "First degree")->required()->check(CLI::NonNegativeNumber);
    cohom->add_option("--to", opt.degree_to, "Last degree")->check(CLI::NonNegativeNumber);
    auto* elliptic = with_model(app.add_subcommand("elliptic", "Ellipticity test with certificate"));
    auto* top = with_model(app.add_subcommand("top-class", "Fundamental class"));
    auto* murillo = with_model(app.add_subcommand("murillo", "Determinant formula for the fundamental class"));
    auto* delta = with_model(app.add_subcommand("delta-cohomology", "Cohomology of the E1 differential"));
    delta->add_option("--degree", opt.degree, "Total degree")->required()->check(CLI::NonNegativeNumber);
    auto* toomer = with_model(app.add_subcommand("toomer", "Toomer invariant e0"));
    toomer->add_option("--method", opt.method, "oracle, spectral or both")
        ->check(CLI::IsMember({"oracle", "spectral", "both"}));
    auto* report = with_model(app.add_subcommand("report", "Everything"));
    auto* self = app.add_subcommand("selftest", "Randomised property checks on the built-in models");
    self->add_option("--seed", opt.seed, "Random seed");
    self->add_option("--cases", opt.cases, "Number of cases")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    Report r;
    r.set("engine.version", kEngineVersion);
    int status = kExitOk;
    auto emit = [&]() {
        if (opt.format == "structured") {
            out << r.structured();
        } else {
            out << r.human();
            if (opt.timing) {
                const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - started);
                out << "\nelapsed: " << ms.count() << " ms\n";
            }
        }
    };
    try {
        if (self->parsed()) {
            status = selftest(r, opt);
        } else {
            r.set("command", app.get_subcommands().front()->get_name());
            const auto file = load(opt.model_path);
            const auto& model = file.model;
            if (info->parsed()) {
                add_info(r, file);
            } else if (validate->parsed()) {
                r.set("validate.ok", true);
                r.set("model.k", model.k ? std::to_string(*model.k) : std::string("none"));
            } else if (cohom->parsed()) {
                add_cohomology(r, model, opt.degree, opt.degree_to.value_or(opt.degree));
            } else if (elliptic->parsed()) {
                add_elliptic(r, model, opt);
            } else if (top->parsed()) {
                add_top_class(r, model, opt);
            } else if (murillo->parsed()) {
                add_murillo(r, model);
            } else if (delta->parsed()) {
                add_delta(r, delta_cohomology(model, opt.degree), true);
            } else if (toomer->parsed()) {
                status = add_toomer(r, model, opt.method, opt);
            } else if (report->parsed()) {
                status = full_report(r, file, opt);
            }
        }
    } catch (const PreconditionError& e) {
        emit();
        err << "error: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const InconsistencyError& e) {
        emit();
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    emit();
    if (status == kExitInconsistent) err << "error: oracle and spectral methods disagree\n";
    return status;
}

}  // namespace lscat
