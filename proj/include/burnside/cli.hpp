// Command-line front end. Exit status: 0 Finite (or success), 2 Infinite,
// 3 Inconclusive, 64 usage, 65 malformed input, 70 internal error.
#ifndef BURNSIDE_CLI_HPP
#define BURNSIDE_CLI_HPP

#include <algorithm>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <burnside/decision.hpp>
#include <burnside/json_io.hpp>
#include <burnside/reflective.hpp>
#include <burnside/spin4.hpp>
#include <burnside/stokes.hpp>

namespace burnside::cli {

enum ExitCode : int {
    kFinite = 0,
    kInfinite = 2,
    kInconclusive = 3,
    kUsage = 64,
    kDataError = 65,
    kInternal = 70,
};

inline int exit_code(const Verdict& v) {
    if (is_finite(v)) return kFinite;
    if (is_infinite(v)) return kInfinite;
    return kInconclusive;
}

inline std::string render(const SquareMatrix& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.dim(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (j) s += ", ";
            s += pretty(a(i, j));
        }
        s += "]";
    }
    return s + "]";
}

inline std::string render(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + pretty(v[i]);
    return s + ")";
}

inline void print_verdict(std::ostream& out, const Verdict& v) {
    out << "verdict: " << summary(v) << '\n';
    if (const auto* f = std::get_if<FiniteVerdict>(&v)) {
        for (const auto& [w, k] : f->word_orders) out << "  order(" << w.to_string() << ") = " << k << '\n';
    }
}

struct Settings {
    bool json = false;
    unsigned threads = 1;
};

namespace detail {

inline int decide(const Settings& st, const std::string& path, std::size_t cap, std::ostream& out) {
    const GroupInput g = group_from_json(read_json_file(path));
    DecideOptions opt;
    opt.threads = st.threads;
    opt.closure_cap = cap;
    const Verdict v = decide_finite_gl2(g, opt);
    if (st.json) out << to_json(v).dump(2) << '\n';
    else print_verdict(out, v);
    return exit_code(v);
}

inline int shortest(const Settings& st, const std::string& path, std::size_t max_len, std::ostream& out) {
    const GroupInput g = group_from_json(read_json_file(path));
    const Verdict v = shortest_infinite_word(g, max_len, st.threads);
    if (st.json) out << to_json(v).dump(2) << '\n';
    else print_verdict(out, v);
    return exit_code(v);
}

inline int oracle(const Settings& st, const std::string& path, std::size_t cap, std::ostream& out) {
    const GroupInput g = group_from_json(read_json_file(path));
    const Verdict v = bfs_closure(g, cap, st.threads);
    if (st.json) out << to_json(v).dump(2) << '\n';
    else if (is_finite(v)) out << "closure order: " << *as_finite(v).closure_order << '\n';
    else out << summary(v) << '\n';
    return exit_code(v);
}

inline int stokes_report(const Settings& st, const StokesMatrix& s, std::ostream& out, json extra = json::object()) {
    const SquareMatrix cox = coxeter_element(s);
    const SquareMatrix g = gram(s);
    std::optional<bool> psd;
    try {
        psd = is_psd(g, st.threads);
    } catch (const std::invalid_argument&) {
        psd.reset();
    }
    const RadicalData rad = radical_and_induced(s);
    const auto rep = associated_rep(s);
    const auto subsets = nonempty_subsets(s.rank());
    const OrderTester tester(s.field(), s.rank());
    std::vector<std::optional<OrderResult>> orders(subsets.size());
    parallel_for(subsets.size(), st.threads, [&](std::size_t k) { orders[k] = tester.finite_order(subword_rep(rep, subsets[k])); });
    StokesOptions opt;
    opt.threads = st.threads;
    const Verdict v = semisimplification_finite(s, opt);

    if (st.json) {
        json subset_orders = json::array();
        for (std::size_t k = 0; k < subsets.size(); ++k) {
            json e = {{"subset", subsets[k].members()}};
            if (orders[k]->is_finite()) e["order"] = orders[k]->order();
            else e["reason"] = to_string(orders[k]->reason());
            subset_orders.push_back(e);
        }
        json doc = extra;
        doc["coxeter_element"] = to_json(cox);
        doc["gram"] = to_json(g);
        doc["psd"] = psd ? json(*psd) : json(nullptr);
        doc["radical_dimension"] = rad.radical.size();
        doc["subset_orders"] = subset_orders;
        doc["verdict"] = to_json(v);
        out << doc.dump(2) << '\n';
        return exit_code(v);
    }
    out << "Coxeter element: " << render(cox) << '\n';
    out << "Gram: " << render(g) << '\n';
    out << "PSD: " << (psd ? (*psd ? "yes" : "no") : "undetermined (entries not real)") << '\n';
    out << "radical dimension: " << rad.radical.size() << '\n';
    for (const auto& u : rad.radical) out << "  radical vector " << render(u) << '\n';
    std::string finite_orders;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        out << "  " << subsets[k].to_string() << ": ";
        if (orders[k]->is_finite()) {
            out << "order " << orders[k]->order() << '\n';
            finite_orders += (finite_orders.empty() ? "" : ",") + std::to_string(orders[k]->order());
        } else {
            out << "infinite (" << to_string(orders[k]->reason()) << ")\n";
        }
    }
    if (is_finite(v)) out << "orders " << finite_orders << '\n';
    out << "verdict: " << summary(v) << '\n';
    return exit_code(v);
}

inline int stokes_analyze(const Settings& st, const std::string& path, std::ostream& out) {
    return stokes_report(st, stokes_from_json(read_json_file(path)), out);
}

inline int reflective_decide(const Settings& st, const std::string& path, std::ostream& out) {
    const VectorTuple u = vectors_from_json(read_json_file(path));
    const StokesMatrix s = stokes_of_vectors(u);
    if (!st.json) {
        out << "Stokes reduction (x_ij = 2(u_i, u_j)):\n";
        for (std::size_t i = 1; i <= s.rank(); ++i)
            for (std::size_t j = i + 1; j <= s.rank(); ++j) out << "  x" << i << j << " = " << pretty(s.x(i, j)) << '\n';
    }
    json extra = {{"stokes", to_json(s)}, {"linearly_independent", u.linearly_independent()}};
    return stokes_report(st, s, out, extra);
}

inline int sl2_to_stokes(const Settings& st, const std::string& path, std::ostream& out) {
    const GroupInput g = group_from_json(read_json_file(path));
    const auto points = burnside::detail::rethrow_as_input([&] {
        if (g.dim() != 2) throw InputError("sl2-to-stokes expects 2x2 generators");
        return rep_to_points(g.generators(), g.field());
    });
    const SquareMatrix gr = gram_of_sl2_points(points);
    const std::size_t r = g.rank();
    StokesMatrix s(g.field(), r + 1);
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) s.set(i + 1, j + 1, gr(i, j));

    json identity = json::array();
    bool all_hold = true;
    std::string lines;
    for (std::size_t i = 0; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) {
            const FreeWord w = FreeWord::run(static_cast<int>(i) + 1, static_cast<int>(j));
            const FieldElement t = evaluate_word(g, w).trace();
            const bool holds = t == gr(i, j);
            all_hold = all_hold && holds;
            identity.push_back({{"i", i}, {"j", j}, {"word", w.to_string()}, {"trace", to_string(t)}, {"holds", holds}});
            lines += "  G[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + pretty(gr(i, j)) + " = tr(" + w.to_string() +
                     ")" + (holds ? "" : "  MISMATCH") + '\n';
        }
    if (st.json) {
        json pts = json::array();
        for (const auto& p : points) pts.push_back(to_json(p));
        out << json{{"points", pts}, {"gram", to_json(gr)}, {"stokes", to_json(s)}, {"trace_identity", identity}}.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) out << "u" << i << " = " << render(points[i]) << '\n';
        out << "Gram: " << render(gr) << '\n';
        out << "trace identity:\n" << lines;
        out << "Stokes matrix: " << render(s.matrix()) << '\n';
    }
    return all_hold ? kFinite : kInternal;
}

inline int burnside_words(const Settings& st, std::size_t r, bool reflective, std::ostream& out) {
    const auto words = reflective ? burnside_set_Lr(r) : burnside_set_gl2(r);
    if (st.json) {
        json arr = json::array();
        for (const auto& w : words) arr.push_back({{"word", to_json(w)}, {"text", w.to_string()}, {"length", w.length()}});
        out << arr.dump(2) << '\n';
        return kFinite;
    }
    for (const auto& w : words) out << w.to_string() << "  (length " << w.length() << ")\n";
    return kFinite;
}

}  // namespace detail

/// Runs one command; args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finiteness decisions for matrix groups over cyclotomic fields", "burnside"};
    app.require_subcommand(1);
    Settings st;
    app.add_flag("--json", st.json, "Machine-readable JSON output");
    app.add_option("--threads", st.threads, "Worker threads (output does not depend on it)")->check(CLI::PositiveNumber);

    std::string path;
    std::size_t cap = 200000, max_len = 6, r = 1;
    bool gl2 = false, refl = false;

    auto* decide = app.add_subcommand("decide", "Decide finiteness of a GL_2 group via its Burnside word set");
    decide->add_option("group", path, "Group JSON file")->required();
    decide->add_option("--closure-cap", cap, "Cap for the closure order check (0 skips it)");

    auto* shortest = app.add_subcommand("shortest-infinite", "Search for the shortest word of infinite order");
    shortest->add_option("group", path, "Group JSON file")->required();
    shortest->add_option("--max-len", max_len, "Maximum word length")->check(CLI::PositiveNumber);

    auto* stokes = app.add_subcommand("stokes-analyze", "Analyse Stokes data and its associated representation");
    stokes->add_option("stokes", path, "Stokes JSON file")->required();

    auto* reflective = app.add_subcommand("reflective-decide", "Decide a reflective representation from unit vectors");
    reflective->add_option("vectors", path, "Vector tuple JSON file")->required();

    auto* sl2 = app.add_subcommand("sl2-to-stokes", "Convert SL_2 generators to points and their Gram matrix");
    sl2->add_option("group", path, "Group JSON file")->required();

    auto* words = app.add_subcommand("burnside-words", "List a Burnside word set");
    words->add_option("--r", r, "Number of generators")->required()->check(CLI::PositiveNumber);
    auto* gl2_flag = words->add_flag("--gl2", gl2, "GL_2 set (default)");
    words->add_flag("--reflective", refl, "Increasing subwords for reflective representations")->excludes(gl2_flag);

    auto* oracle = app.add_subcommand("oracle", "Breadth-first closure of the group");
    oracle->add_option("group", path, "Group JSON file")->required();
    oracle->add_option("--cap", cap, "Maximum number of elements")->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kUsage;
    }

    try {
        if (*decide) return detail::decide(st, path, cap, out);
        if (*shortest) return detail::shortest(st, path, max_len, out);
        if (*stokes) return detail::stokes_analyze(st, path, out);
        if (*reflective) return detail::reflective_decide(st, path, out);
        if (*sl2) return detail::sl2_to_stokes(st, path, out);
        if (*words) return detail::burnside_words(st, r, refl, out);
        if (*oracle) return detail::oracle(st, path, cap, out);
    } catch (const InputError& e) {
        err << "malformed input: " << e.what() << '\n';
        return kDataError;
    } catch (const std::invalid_argument& e) {
        err << "malformed input: " << e.what() << '\n';
        return kDataError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    err << "no command given\n";
    return kUsage;
}

}  // namespace burnside::cli

#endif
