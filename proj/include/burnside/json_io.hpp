// JSON forms of group inputs, Stokes data, vector tuples and verdicts.
//
// Field elements are coefficient strings "c_0 c_1 ..." in the power basis of
// Q(zeta_m); integers and arrays of coefficients are accepted on input.
#ifndef BURNSIDE_JSON_IO_HPP
#define BURNSIDE_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include <burnside/decision.hpp>
#include <burnside/reflective.hpp>
#include <burnside/stokes.hpp>
#include <burnside/verdict.hpp>

namespace burnside {

using nlohmann::json;

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& field_of(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline unsigned long positive_of(const json& j, const char* key) {
    const json& v = field_of(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 1) throw InputError(std::string("field '") + key + "' must be a positive integer");
    return v.get<unsigned long>();
}

template <class F>
auto rethrow_as_input(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError&) {
        throw;
    } catch (const json::exception& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    } catch (const std::out_of_range& e) {
        throw InputError(e.what());
    } catch (const std::domain_error& e) {
        throw InputError(e.what());
    }
}

}  // namespace detail

inline FieldElement field_element_from_json(const FieldPtr& f, const json& j) {
    if (j.is_string()) return parse_field_element(f, j.get<std::string>());
    if (j.is_number_integer()) return FieldElement(f, j.get<long>());
    if (j.is_array()) {
        std::vector<Rational> c;
        for (const auto& x : j) {
            if (x.is_string()) c.push_back(parse_rational(x.get<std::string>()));
            else if (x.is_number_integer()) c.emplace_back(x.get<long>());
            else throw InputError("field element coefficients must be strings or integers");
        }
        if (c.empty()) throw InputError("empty field element");
        return FieldElement(f, c);
    }
    throw InputError("field element must be a coefficient string, an integer or an array");
}

inline json to_json(const FieldElement& x) { return to_string(x); }

inline SquareMatrix matrix_from_json(const FieldPtr& f, std::size_t n, const json& j) {
    if (!j.is_array() || j.size() != n) throw InputError("matrix must have " + std::to_string(n) + " rows");
    SquareMatrix a(f, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw InputError("matrix row must have " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) a(i, k) = field_element_from_json(f, j[i][k]);
    }
    return a;
}

inline json to_json(const SquareMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) row.push_back(to_string(a(i, k)));
        rows.push_back(row);
    }
    return rows;
}

inline json to_json(const FreeWord& w) { return w.letters(); }

inline FreeWord free_word_from_json(const json& j) {
    if (j.is_string()) return parse_free_word(j.get<std::string>());
    if (!j.is_array()) throw InputError("word must be an array of signed generator indices");
    std::vector<int> letters;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<int>() == 0) throw InputError("word letters must be nonzero integers");
        letters.push_back(x.get<int>());
    }
    return FreeWord(letters);
}

inline GroupInput group_from_json(const json& j) {
    return detail::rethrow_as_input([&] {
        const FieldPtr f = make_field(detail::positive_of(j, "m"));
        const std::size_t n = detail::positive_of(j, "n");
        const json& gens = detail::field_of(j, "generators");
        if (!gens.is_array() || gens.empty()) throw InputError("'generators' must be a nonempty array");
        Representation rep;
        for (const auto& g : gens) rep.push_back(matrix_from_json(f, n, g));
        return GroupInput(f, n, rep);
    });
}

inline json to_json(const GroupInput& g) {
    json gens = json::array();
    for (const auto& a : g.generators()) gens.push_back(to_json(a));
    return {{"m", g.field()->order()}, {"n", g.dim()}, {"generators", gens}};
}

inline StokesMatrix stokes_from_json(const json& j) {
    return detail::rethrow_as_input([&] {
        const FieldPtr f = make_field(detail::positive_of(j, "m"));
        const std::size_t r = detail::positive_of(j, "r");
        StokesMatrix s(f, r);
        const json& upper = detail::field_of(j, "upper");
        if (!upper.is_array()) throw InputError("'upper' must be an array of [i, j, value] triples");
        for (const auto& e : upper) {
            if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw InputError("'upper' entries must be [i, j, value]");
            const long i = e[0].get<long>(), k = e[1].get<long>();
            if (i < 1 || k < 1) throw InputError("Stokes indices are 1-based");
            s.set(static_cast<std::size_t>(i), static_cast<std::size_t>(k), field_element_from_json(f, e[2]));
        }
        return s;
    });
}

inline json to_json(const StokesMatrix& s) {
    json upper = json::array();
    for (std::size_t i = 1; i <= s.rank(); ++i)
        for (std::size_t k = i + 1; k <= s.rank(); ++k)
            if (!s.x(i, k).is_zero()) upper.push_back({i, k, to_string(s.x(i, k))});
    return {{"r", s.rank()}, {"m", s.field()->order()}, {"upper", upper}};
}

inline VectorTuple vectors_from_json(const json& j) {
    return detail::rethrow_as_input([&] {
        const FieldPtr f = make_field(detail::positive_of(j, "m"));
        const std::size_t n = detail::positive_of(j, "n");
        const json& vs = detail::field_of(j, "vectors");
        if (!vs.is_array() || vs.empty()) throw InputError("'vectors' must be a nonempty array");
        std::vector<Vector> out;
        for (const auto& v : vs) {
            if (!v.is_array() || v.size() != n) throw InputError("each vector must have " + std::to_string(n) + " entries");
            Vector u;
            for (const auto& x : v) u.push_back(field_element_from_json(f, x));
            out.push_back(std::move(u));
        }
        return VectorTuple(f, n, out);
    });
}

inline json to_json(const Verdict& v) {
    if (const auto* f = std::get_if<FiniteVerdict>(&v)) {
        json orders = json::array();
        for (const auto& [w, k] : f->word_orders) orders.push_back({to_json(w), k});
        return {{"kind", "Finite"},
                {"closure_order", f->closure_order ? json(*f->closure_order) : json(nullptr)},
                {"word_orders", orders}};
    }
    if (const auto* i = std::get_if<InfiniteVerdict>(&v)) {
        json out = {{"kind", "Infinite"},
                    {"witness", to_json(i->witness)},
                    {"witness_length", i->witness.length()},
                    {"reason", to_string(i->reason)},
                    {"semisimplification_caveat", i->semisimplification_caveat}};
        if (i->detected_by) out["detected_by"] = to_json(*i->detected_by);
        return out;
    }
    return {{"kind", "Inconclusive"}, {"cap_exceeded", std::get<InconclusiveVerdict>(v).cap_exceeded}};
}

inline Verdict verdict_from_json(const json& j) {
    return detail::rethrow_as_input([&]() -> Verdict {
        const std::string kind = detail::field_of(j, "kind").get<std::string>();
        if (kind == "Finite") {
            FiniteVerdict f;
            if (j.contains("closure_order") && !j["closure_order"].is_null()) f.closure_order = j["closure_order"].get<std::uint64_t>();
            for (const auto& e : detail::field_of(j, "word_orders"))
                f.word_orders.emplace_back(free_word_from_json(e.at(0)), e.at(1).get<std::uint64_t>());
            return f;
        }
        if (kind == "Infinite") {
            InfiniteVerdict i;
            i.witness = free_word_from_json(detail::field_of(j, "witness"));
            i.reason = parse_infinite_reason(detail::field_of(j, "reason").get<std::string>());
            if (j.contains("detected_by")) i.detected_by = free_word_from_json(j["detected_by"]);
            i.semisimplification_caveat = j.value("semisimplification_caveat", false);
            return i;
        }
        if (kind == "Inconclusive") return InconclusiveVerdict{j.value("cap_exceeded", std::string{})};
        throw InputError("unknown verdict kind '" + kind + "'");
    });
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

}  // namespace burnside

#endif
