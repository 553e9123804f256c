#ifndef CHARCALC_IO_HPP
#define CHARCALC_IO_HPP

// Text and JSON representations. Weights use "c1,c2,...[;t1,t2,...]":
// exact rationals in fundamental coordinates, optionally followed by the
// torsion vector in coroot coordinates.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include <charcalc/category_o.hpp>
#include <charcalc/laurent_poly.hpp>
#include <charcalc/rational.hpp>
#include <charcalc/rational_char.hpp>
#include <charcalc/root_system.hpp>

namespace charcalc
{

using json = nlohmann::ordered_json;

namespace detail
{

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

inline rat_vector parse_rat_list(std::string_view s, std::size_t rank, std::string_view what)
{
    const auto parts = split(s, ',');
    if (parts.size() == 1 && trim(parts[0]) == "0") {
        return rat_vector(rank, rational(0));
    }
    if (parts.size() != rank) {
        throw parse_error(std::string(what) + " '" + std::string(s) + "' has " + std::to_string(parts.size())
                          + " entries, expected " + std::to_string(rank));
    }
    rat_vector out;
    for (auto p : parts) {
        out.push_back(parse_rational(p));
    }
    return out;
}

inline std::string join(const rat_vector &v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += to_string(v[i]);
    }
    return out;
}

// "c*name_i" sums; used for both weights and roots.
template <typename Vec>
std::string linear_combination(const Vec &coeffs, std::string_view name)
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const rational c(coeffs[i]);
        if (c == 0) {
            continue;
        }
        const rational mag = c < 0 ? rational(-c) : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += to_string(mag) + "*";
        }
        out += std::string(name) + "_" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

inline json integer_to_json(const integer &z)
{
    if (z.fits_slong_p()) {
        return json(static_cast<std::int64_t>(z.get_si()));
    }
    return json(z.get_str());
}

inline integer integer_from_json(const json &j)
{
    if (j.is_number_integer()) {
        return integer(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string() && is_decimal_integer(j.get<std::string>())) {
        std::string s = j.get<std::string>();
        return integer(s.front() == '+' ? s.substr(1) : s);
    }
    throw parse_error("expected an integer, got " + j.dump());
}

inline int_vector int_vector_from_json(const json &j, std::size_t rank, std::string_view what)
{
    if (!j.is_array() || j.size() != rank) {
        throw parse_error(std::string(what) + " must be an array of " + std::to_string(rank) + " integers");
    }
    int_vector out;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw parse_error(std::string(what) + " entries must be integers");
        }
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

inline const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw parse_error(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

} // namespace detail

inline Weight parse_weight(std::string_view text, std::size_t rank)
{
    const auto parts = detail::split(text, ';');
    if (parts.size() > 2) {
        throw parse_error("weight '" + std::string(text) + "' has more than one ';'");
    }
    rat_vector real = detail::parse_rat_list(parts[0], rank, "weight");
    rat_vector tors = parts.size() == 2 ? detail::parse_rat_list(parts[1], rank, "torsion") : rat_vector{};
    return Weight(std::move(real), std::move(tors));
}

inline std::string format_weight(const Weight &w)
{
    std::string out = detail::join(w.real());
    if (w.has_torsion()) {
        out += ";" + detail::join(w.torsion());
    }
    return out;
}

/// "omega_1 - 3/2*omega_2", with a "[torsion ...]" suffix when present.
inline std::string weight_text(const Weight &w)
{
    std::string out = detail::linear_combination(w.real(), "omega");
    if (w.has_torsion()) {
        out += " [torsion " + detail::join(w.torsion()) + "]";
    }
    return out;
}

/// "alpha_1", "2*alpha_1 + alpha_2".
inline std::string root_text(const int_vector &beta)
{
    return detail::linear_combination(beta, "alpha");
}

/// Polynomial in x_i = e^{-alpha_i}, e.g. "1 - x1 + 2*x1*x2^3".
inline std::string poly_text(const LaurentPoly &f)
{
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto &[e, c] : f) {
        const integer mag = c < 0 ? integer(-c) : c;
        if (out.empty()) {
            out += c < 0 ? "-" : "";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += "x" + std::to_string(i + 1);
            if (e[i] > 1) {
                mono += "^" + std::to_string(e[i]);
            }
        }
        if (mono.empty()) {
            out += mag.get_str();
        } else {
            out += (mag == 1 ? std::string{} : mag.get_str() + "*") + mono;
        }
    }
    return out;
}

inline std::string char_text(const RationalChar &a)
{
    std::ostringstream os;
    os << "numerator (x_i = e^-alpha_i):\n";
    if (a.is_zero()) {
        os << "  0\n";
    }
    for (const auto &t : a.terms()) {
        os << "  e^(" << weight_text(t.mu) << ") * (" << poly_text(t.f) << ")\n";
    }
    os << "denominator:";
    if (a.denom().empty()) {
        os << " 1";
    }
    for (const auto &[beta, n] : a.denom()) {
        os << " (1 - e^-(" << root_text(beta) << "))";
        if (n > 1) {
            os << "^" << n;
        }
    }
    os << "\n";
    return os.str();
}

inline json to_json(const LaurentPoly &f)
{
    json arr = json::array();
    for (const auto &[e, c] : f) {
        arr.push_back(json{{"exp", e}, {"c", detail::integer_to_json(c)}});
    }
    return arr;
}

inline json to_json(const Denominator &d)
{
    json arr = json::array();
    for (const auto &[beta, n] : d) {
        arr.push_back(json{{"beta", beta}, {"n", n}});
    }
    return arr;
}

inline json to_json(const RationalChar &a)
{
    json terms = json::array();
    for (const auto &t : a.terms()) {
        terms.push_back(json{{"mu", format_weight(t.mu)}, {"f", to_json(t.f)}});
    }
    return json{{"terms", std::move(terms)}, {"denom", to_json(a.denom())}};
}

inline RationalChar rational_char_from_json(const RootSystem &rs, const json &j)
{
    const auto n = rs.rank();
    std::vector<CharTerm> terms;
    const json &jt = detail::field(j, "terms");
    if (!jt.is_array()) {
        throw parse_error("\"terms\" must be an array");
    }
    for (const auto &t : jt) {
        const json &mu = detail::field(t, "mu");
        if (!mu.is_string()) {
            throw parse_error("\"mu\" must be a weight string");
        }
        LaurentPoly f(n);
        const json &jf = detail::field(t, "f");
        if (!jf.is_array()) {
            throw parse_error("\"f\" must be an array");
        }
        for (const auto &mono : jf) {
            const int_vector e = detail::int_vector_from_json(detail::field(mono, "exp"), n, "exp");
            for (auto x : e) {
                if (x < 0) {
                    throw parse_error("polynomial exponents must be non-negative");
                }
            }
            f.add_term(e, detail::integer_from_json(detail::field(mono, "c")));
        }
        terms.push_back(CharTerm{parse_weight(mu.get<std::string>(), n), std::move(f)});
    }
    Denominator denom;
    const json &jd = detail::field(j, "denom");
    if (!jd.is_array()) {
        throw parse_error("\"denom\" must be an array");
    }
    for (const auto &d : jd) {
        const int_vector beta = detail::int_vector_from_json(detail::field(d, "beta"), n, "beta");
        const json &jn = detail::field(d, "n");
        if (!jn.is_number_integer() || jn.get<std::int64_t>() < 1) {
            throw parse_error("denominator exponent must be a positive integer");
        }
        if (!rs.is_positive_root(beta)) {
            throw domain_error("denominator factor is not a positive root of " + rs.label());
        }
        denom[beta] += static_cast<int>(jn.get<std::int64_t>());
    }
    return RationalChar(rs, std::move(terms), std::move(denom));
}

inline RationalChar rational_char_from_json(const RootSystem &rs, std::string_view text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw parse_error(std::string("invalid character JSON: ") + e.what());
    }
    return rational_char_from_json(rs, j);
}

inline RationalChar rational_char_from_json(const RootSystem &rs, const std::string &text)
{
    return rational_char_from_json(rs, std::string_view(text));
}

/// {"depth": D, "coefficients": [[weight, multiplicity], ...]} sorted by weight.
inline json to_json(const SeriesWindow &s)
{
    json pairs = json::array();
    for (const auto &[w, c] : s.coefficients) {
        pairs.push_back(json::array({format_weight(w), detail::integer_to_json(c)}));
    }
    return json{{"depth", s.depth}, {"coefficients", std::move(pairs)}};
}

inline json to_json(const VermaDecomposition &dec)
{
    json arr = json::array();
    for (const auto &[lambda, c] : dec) {
        arr.push_back(json{{"lambda", format_weight(lambda)}, {"c", detail::integer_to_json(c)}});
    }
    return arr;
}

inline json to_json(const SweepReport &report)
{
    json records = json::array();
    for (const auto &r : report.records) {
        json rec{{"weight", format_weight(r.weight)}, {"finite_dim", r.finite_dim}};
        if (r.dimension) {
            rec["dimension"] = detail::integer_to_json(*r.dimension);
        }
        rec["obstructed"] = r.obstructed;
        rec["witnesses"] = r.witnesses;
        if (r.violation) {
            rec["violation"] = *r.violation;
        }
        records.push_back(std::move(rec));
    }
    return json{{"records", std::move(records)}, {"violations", report.violations()}};
}

} // namespace charcalc

#endif
