// weightsys: command-line front end for the weight system library.
//
// Exit codes: 0 success or pass, 1 check failure, 2 usage or input error.

#include <weightsys.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace weightsys;

namespace {

struct Global {
    bool json_out = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

Global global;

bool looks_like_file(const std::string& s) { return s.ends_with(".json") || fs::exists(s); }

AnyTensor load_algebra(const std::string& source) {
    if (looks_like_file(source)) return load_tensor(source);
    return make_algebra(source);
}

// A tensor file, a table file or a generator name.
AnyWeightSystem load_weights(const std::string& source) {
    if (looks_like_file(source)) {
        const json j = detail::read_json_file(source);
        if (j.is_object() && j.contains("dim")) {
            const auto t = tensor_from_json(j);
            if (t.index() == 0) return WeightSystem<Rational>::from_tensor(std::get<0>(t));
            return WeightSystem<Complex>::from_tensor(std::get<1>(t));
        }
        return table_from_json(j);
    }
    const auto t = make_algebra(source);
    if (t.index() == 0) return WeightSystem<Rational>::from_tensor(std::get<0>(t));
    return WeightSystem<Complex>::from_tensor(std::get<1>(t));
}

FixedDiagram load_graph(const std::string& source, int k = 0) {
    if (source == "builtin:theta") return theta();
    if (source == "builtin:k4") return k4();
    if (source == "builtin:loop") return vertexless_loop();
    if (source == "builtin:pid") return identity_permutation_diagram(k);
    if (source.starts_with("builtin:")) throw Error(ErrorKind::ParseError, "unknown builtin '" + source + "'");
    return load_diagram(source);
}

std::string format_value(const Rational& x) { return x.get_str(); }
std::string format_value(const Complex& x) { return ScalarTraits<Complex>::format(x); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

struct EvalArgs {
    std::string algebra, graph;
};

int run_eval(const EvalArgs& a) {
    const auto g = load_graph(a.graph);
    return std::visit(
        [&](const auto& f) {
            const auto v = evaluate(f, g);
            if (global.json_out)
                emit({{"value", scalar_to_json(v)}, {"code", canonical_form(g)}});
            else
                std::cout << format_value(v) << "\n";
            return 0;
        },
        load_weights(a.algebra));
}

struct CheckArgs {
    std::string algebra;
    bool jacobi = false, as = false, ihx = false, all = false;
    double tol = 1e-12;
};

int run_check(const CheckArgs& a) {
    const auto t = load_algebra(a.algebra);
    const bool every = a.all || !(a.jacobi || a.as || a.ihx);
    bool pass = true;
    json reports = json::array();
    std::visit(
        [&](const auto& c) {
            using T = typename std::decay_t<decltype(c)>::value_type;
            const double tol = ScalarTraits<T>::exact ? 0.0 : a.tol;
            auto add = [&](const std::string& name, const auto& residual) {
                const double r = ScalarTraits<T>::to_double(residual);
                const bool ok = ScalarTraits<T>::exact ? r == 0.0 : r <= tol;
                pass = pass && ok;
                reports.push_back(make_report(
                    name, {{"algebra", a.algebra}, {"dim", c.dim()}, {"backend", ScalarTraits<T>::name}, {"tolerance", tol}},
                    std::nullopt, r, ok));
            };
            if (every || a.jacobi) add("jacobi", jacobi_check(c));
            if (every || a.as) add("as", as_residual(c));
            if (every || a.ihx) add("ihx", ihx_residual(c));
        },
        t);
    emit(reports);
    return pass ? 0 : 1;
}

struct DeltaArgs {
    std::string algebra, h, corpus;
    int k = -1;
    std::optional<std::uint64_t> seed;
    int max_vertices = 4;
    double tol = 1e-9;
};

int run_delta(const DeltaArgs& a) {
    std::vector<FixedDiagram> hs;
    json params = {{"algebra", a.algebra}, {"k", a.k}};
    if (!a.h.empty()) {
        hs.push_back(load_graph(a.h, a.k));
        params["h"] = a.h;
    } else {
        const std::string prefix = "random:";
        if (!a.corpus.starts_with(prefix)) throw CLI::ValidationError("--corpus", "expected random:<count>");
        if (!a.seed) throw CLI::ValidationError("--seed", "required with --corpus");
        const auto count = static_cast<std::size_t>(std::stoul(a.corpus.substr(prefix.size())));
        hs = random_diagrams(*a.seed, count, 2 * a.k, a.max_vertices);
        params["corpus"] = a.corpus;
        params["max_vertices"] = a.max_vertices;
    }
    return std::visit(
        [&](const auto& f) {
            const auto rep = delta_check(f, a.k, hs, a.tol, global.threads);
            params["tolerance"] = rep.tolerance;
            if (global.json_out) {
                auto r = make_report("delta", params, a.h.empty() ? a.seed : std::nullopt, rep.max_residual, rep.pass);
                if (hs.size() == 1) r["params"]["value"] = scalar_to_json(rep.sums[0]);
                emit(r);
            } else if (hs.size() == 1) {
                std::cout << format_value(rep.sums[0]) << "\n";
            } else {
                std::cout << "delta k=" << a.k << " over " << hs.size() << " diagrams: max |sum| "
                          << rep.max_residual << " (diagram " << rep.worst << "), " << (rep.pass ? "pass" : "FAIL")
                          << "\n";
            }
            return rep.pass ? 0 : 1;
        },
        load_weights(a.algebra));
}

struct RankArgs {
    std::string weights;
    int legs = 0, max_vertices = 4;
};

int run_rank(const RankArgs& a) {
    std::vector<FixedDiagram> items = enumerate_fixed_diagrams(a.legs, a.max_vertices).items();
    if (a.legs == 0) items.push_back(vertexless_loop());
    const DiagramCorpus corpus(a.legs, std::move(items));
    return std::visit(
        [&](const auto& f) {
            using T = typename std::decay_t<decltype(f)>::value_type;
            const auto r = rank(connection_matrix(f, corpus, global.threads));
            // The bound needs f(loop) to be a nonnegative integer n.
            std::optional<double> n;
            const T loop = f.loop_value();
            if constexpr (ScalarTraits<T>::exact) {
                if (loop.get_den() == 1 && sgn(loop) >= 0) n = loop.get_d();
            } else {
                if (std::abs(loop.imag()) < 1e-9 && loop.real() > -1e-9 &&
                    std::abs(loop.real() - std::round(loop.real())) < 1e-9)
                    n = std::round(loop.real());
            }
            std::optional<double> bound;
            if (n) bound = std::pow(*n, a.legs);
            const bool pass = bound && static_cast<double>(r) <= *bound;
            if (global.json_out) {
                json params = {{"weights", a.weights},
                               {"legs", a.legs},
                               {"max_vertices", a.max_vertices},
                               {"corpus_size", corpus.size()},
                               {"rank", r},
                               {"bound", bound ? json(*bound) : json(nullptr)}};
                // residual: how far the rank exceeds the bound
                const double excess = bound ? std::max(0.0, static_cast<double>(r) - *bound) : static_cast<double>(r);
                emit(make_report("rank", params, std::nullopt, excess, pass));
            } else {
                std::cout << "rank " << r << " bound ";
                if (bound)
                    std::cout << std::setprecision(17) << *bound;
                else
                    std::cout << "none (loop value " << format_value(loop) << " is not a nonnegative integer)";
                std::cout << " corpus " << corpus.size() << " " << (pass ? "pass" : "FAIL") << "\n";
            }
            return pass ? 0 : 1;
        },
        load_weights(a.weights));
}

struct GenArgs {
    std::string algebra, out;
};

int run_gen(const GenArgs& a) {
    const auto t = make_algebra(a.algebra);
    std::ofstream os(a.out);
    if (!os) throw Error(ErrorKind::ParseError, "cannot write " + a.out);
    os << tensor_to_json(t).dump() << "\n";
    return 0;
}

struct EnumArgs {
    int legs = 0, max_vertices = 2;
    std::string out;
};

int run_enum(const EnumArgs& a) {
    const auto corpus = enumerate_fixed_diagrams(a.legs, a.max_vertices);
    fs::create_directories(a.out);
    json index = {{"legs", a.legs}, {"max_vertices", a.max_vertices}, {"diagrams", json::array()}};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        std::ostringstream name;
        name << "d" << std::setw(5) << std::setfill('0') << i << ".json";
        std::ofstream os(fs::path(a.out) / name.str());
        if (!os) throw Error(ErrorKind::ParseError, "cannot write " + (fs::path(a.out) / name.str()).string());
        os << diagram_to_json(corpus[i]).dump() << "\n";
        index["diagrams"].push_back({{"file", name.str()}, {"code", corpus.codes()[i]}});
    }
    std::ofstream idx(fs::path(a.out) / "index.json");
    idx << index.dump(2) << "\n";
    if (global.json_out)
        emit({{"count", corpus.size()}, {"out", a.out}});
    else
        std::cout << corpus.size() << " diagrams written to " << a.out << "\n";
    return 0;
}

int run_canon(const std::string& graph) {
    const auto code = canonical_form(load_graph(graph));
    if (global.json_out)
        emit({{"code", code}});
    else
        std::cout << code << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weight systems on trivalent diagrams"};
    app.require_subcommand(1);
    app.add_flag("--json", global.json_out, "machine-readable output on stdout");
    app.add_option("--threads", global.threads, "worker threads")->check(CLI::PositiveNumber);

    std::function<int()> action;

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate a closed diagram");
    eval->add_option("--algebra", ev.algebra, "generator name, tensor.json or table.json")->required();
    eval->add_option("--graph", ev.graph, "diagram file or builtin:theta|k4|loop")->required();
    eval->callback([&] { action = [&] { return run_eval(ev); }; });

    CheckArgs ck;
    auto* check = app.add_subcommand("check", "relation residuals of a structure tensor");
    check->add_option("--algebra", ck.algebra)->required();
    check->add_flag("--jacobi", ck.jacobi);
    check->add_flag("--as", ck.as);
    check->add_flag("--ihx", ck.ihx);
    check->add_flag("--all", ck.all);
    check->add_option("--tol", ck.tol, "complex tolerance");
    check->callback([&] { action = [&] { return run_check(ck); }; });

    DeltaArgs dl;
    std::uint64_t seed = 0;
    auto* delta = app.add_subcommand("delta", "signed permutation sum");
    delta->set_help_flag("--help", "print this help");  // frees -h for --h
    delta->add_option("--algebra", dl.algebra, "generator name, tensor.json or table.json")->required();
    delta->add_option("--k", dl.k)->required()->check(CLI::NonNegativeNumber);
    auto* h_opt = delta->add_option("--h", dl.h, "diagram with 2k legs, or builtin:pid");
    auto* corpus_opt = delta->add_option("--corpus", dl.corpus, "random:<count>");
    h_opt->excludes(corpus_opt);
    auto* seed_opt = delta->add_option("--seed", seed);
    delta->add_option("--max-vertices", dl.max_vertices);
    delta->add_option("--tol", dl.tol, "complex tolerance");
    delta->callback([&] {
        if (dl.h.empty() && dl.corpus.empty()) throw CLI::RequiredError("--h or --corpus");
        if (seed_opt->count() > 0) dl.seed = seed;
        action = [&] { return run_delta(dl); };
    });

    RankArgs rk;
    auto* rank_cmd = app.add_subcommand("rank", "connection matrix rank");
    rank_cmd->add_option("--weights", rk.weights, "generator name, tensor.json or table.json")->required();
    rank_cmd->add_option("--legs", rk.legs)->required()->check(CLI::NonNegativeNumber);
    rank_cmd->add_option("--max-vertices", rk.max_vertices)->required()->check(CLI::NonNegativeNumber);
    rank_cmd->callback([&] { action = [&] { return run_rank(rk); }; });

    GenArgs gn;
    auto* gen = app.add_subcommand("gen", "write a generator tensor");
    gen->add_option("--algebra", gn.algebra)->required();
    gen->add_option("--out", gn.out)->required();
    gen->callback([&] { action = [&] { return run_gen(gn); }; });

    EnumArgs en;
    auto* enumerate = app.add_subcommand("enum", "enumerate diagrams up to isomorphism");
    enumerate->add_option("--legs", en.legs)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--max-vertices", en.max_vertices)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--out", en.out)->required();
    enumerate->callback([&] { action = [&] { return run_enum(en); }; });

    std::string canon_graph;
    auto* canon = app.add_subcommand("canon", "canonical code of a diagram");
    canon->add_option("--graph", canon_graph)->required();
    canon->callback([&] { action = [&] { return run_canon(canon_graph); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (global.json_out) emit({{"error", std::string(to_string(e.kind()))}, {"detail", e.detail()}});
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (global.json_out) emit({{"error", "IOError"}, {"detail", e.what()}});
        return 2;
    }
}
