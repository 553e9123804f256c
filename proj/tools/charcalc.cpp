// charcalc: command-line front end for the character library.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <charcalc/charcalc.hpp>

using namespace charcalc;

namespace
{

struct Globals {
    std::string rs = "A1";
    bool json = false;
    std::size_t cap = default_weyl_cap;
    int depth = 10;
};

class usage_error : public error
{
public:
    using error::error;
};

std::string read_source(const std::string &arg)
{
    if (arg.empty() || arg[0] != '@') {
        return arg;
    }
    std::ifstream in(arg.substr(1));
    if (!in) {
        throw parse_error("cannot read " + arg.substr(1));
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

VermaDecomposition decomposition_from_json(const RootSystem &rs, const std::string &text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw parse_error(std::string("invalid decomposition JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw parse_error("decomposition must be an array of {\"lambda\", \"c\"}");
    }
    VermaDecomposition dec;
    for (const auto &t : j) {
        const json &lam = detail::field(t, "lambda");
        if (!lam.is_string()) {
            throw parse_error("\"lambda\" must be a weight string");
        }
        dec.push_back(VermaTerm{parse_weight(lam.get<std::string>(), rs.rank()), detail::integer_from_json(detail::field(t, "c"))});
    }
    return dec;
}

/// Character operands, kept in command-line order.
class Operands
{
public:
    explicit Operands(CLI::App *sub, bool with_components) : sub_(sub)
    {
        add("--verma", "Verma character ch M(W)");
        add("--simple", "simple character ch V(W)");
        add("--weyl", "Weyl character of dominant integral W");
        add("--exp", "single exponential e^W");
        add("--char", "character as JSON, or @file");
        add("--from-verma", "integer combination of Verma characters as JSON, or @file");
        p_ = sub->add_flag("--p", "Kostant partition element p");
        if (with_components) {
            add("--verma1", "Verma character of the first simple component, pulled back");
            add("--verma2", "Verma character of the second simple component, pulled back");
        }
    }

    std::vector<RationalChar> build(const RootSystem &rs, const Globals &g) const
    {
        std::vector<RationalChar> out;
        std::map<const CLI::Option *, std::size_t> used;
        for (const CLI::Option *opt : sub_->parse_order()) {
            if (opt == p_) {
                out.push_back(kostant_p(rs));
                continue;
            }
            const auto it = std::find(opts_.begin(), opts_.end(), opt);
            if (it == opts_.end()) {
                continue;
            }
            const std::string &arg = opt->results().at(used[opt]++);
            out.push_back(make(rs, g, opt->get_name(), arg));
        }
        return out;
    }

private:
    void add(const std::string &name, const std::string &help)
    {
        opts_.push_back(sub_->add_option(name, help)->type_name("ARG")->allow_extra_args(false)->expected(1)
                            ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll));
    }

    static RationalChar make(const RootSystem &rs, const Globals &g, const std::string &name, const std::string &arg)
    {
        if (name == "--verma") {
            return verma_character(rs, parse_weight(arg, rs.rank()));
        }
        if (name == "--simple") {
            return simple_character(rs, parse_weight(arg, rs.rank()), g.cap);
        }
        if (name == "--weyl") {
            return weyl_character(rs, parse_weight(arg, rs.rank()), g.cap);
        }
        if (name == "--exp") {
            return RationalChar::exponential(rs, parse_weight(arg, rs.rank()));
        }
        if (name == "--char") {
            return rational_char_from_json(rs, read_source(arg));
        }
        if (name == "--from-verma") {
            return assemble_from_verma(rs, decomposition_from_json(rs, read_source(arg)));
        }
        const std::size_t k = name == "--verma1" ? 0 : 1;
        const auto &comps = rs.components();
        if (k >= comps.size()) {
            throw usage_error(name + " needs a root system with at least " + std::to_string(k + 1) + " simple components");
        }
        return component_verma_character(rs, k, parse_weight(arg, comps[k].size()));
    }

    CLI::App *sub_;
    std::vector<CLI::Option *> opts_;
    CLI::Option *p_ = nullptr;
};

std::vector<RationalChar> expect_operands(const Operands &ops, const RootSystem &rs, const Globals &g, std::size_t n,
                                          const std::string &cmd)
{
    auto out = ops.build(rs, g);
    if (out.size() != n) {
        throw usage_error(cmd + " takes exactly " + std::to_string(n) + " character operand" + (n == 1 ? "" : "s") +
                          ", got " + std::to_string(out.size()));
    }
    return out;
}

std::string witness_text(const std::vector<int_vector> &w)
{
    std::string out;
    for (const auto &beta : w) {
        out += (out.empty() ? "" : ", ") + root_text(beta) + " squared";
    }
    return out;
}

json roots_json(const std::vector<int_vector> &roots)
{
    json arr = json::array();
    for (const auto &r : roots) {
        arr.push_back(r);
    }
    return arr;
}

void emit(const Globals &g, const json &j, const std::string &text)
{
    if (g.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

void cmd_rootsys(const RootSystem &rs, const Globals &g)
{
    const auto n = rs.rank();
    json cartan = json::array();
    std::ostringstream os;
    os << "root system " << rs.label() << ", rank " << n << "\n";
    os << "cartan matrix:\n";
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        os << " ";
        for (std::size_t j = 0; j < n; ++j) {
            row.push_back(rs.cartan(i, j));
            os << " " << rs.cartan(i, j);
        }
        os << "\n";
        cartan.push_back(std::move(row));
    }
    json d = json::array();
    os << "symmetrizers:";
    for (const auto &x : rs.symmetrizers()) {
        d.push_back(to_string(x));
        os << " " << to_string(x);
    }
    os << "\n";
    os << "positive roots (" << rs.positive_roots().size() << "):\n";
    for (const auto &beta : rs.positive_roots()) {
        os << "  " << root_text(beta) << "\n";
    }
    json order = nullptr;
    try {
        const auto w = weyl_elements(rs, g.cap);
        order = w.size();
        os << "weyl group order: " << w.size() << "\n";
    } catch (const enumeration_limit_error &) {
        os << "weyl group order: exceeds cap " << g.cap << "\n";
    }
    json j{{"label", rs.label()},           {"rank", n},
           {"cartan", std::move(cartan)},   {"symmetrizers", std::move(d)},
           {"positive_roots", roots_json(rs.positive_roots())}, {"weyl_order", std::move(order)}};
    emit(g, j, os.str());
}

void cmd_tensor(const RationalChar &a, const RationalChar &b, const Globals &g)
{
    const auto v = tensor_obstruction(a, b);
    std::optional<Weight> verma;
    if (!v.obstructed) {
        try {
            const auto dec = verma_decomposition(v.product.root_system(), v.product);
            if (dec.size() == 1 && dec[0].c == 1) {
                verma = dec[0].lambda;
            }
        } catch (const domain_error &) {
        }
    }
    std::ostringstream os;
    if (v.obstructed) {
        os << "obstructed: " << witness_text(v.witnesses) << "\n";
    } else if (verma) {
        os << "unobstructed; equals Verma character\n";
        os << "highest weight: " << weight_text(*verma) << "\n";
    } else {
        os << "unobstructed\n";
    }
    os << char_text(v.product);
    json j{{"obstructed", v.obstructed},
           {"witnesses", roots_json(v.witnesses)},
           {"product", to_json(v.product)},
           {"verma", verma ? json(format_weight(*verma)) : json(nullptr)}};
    emit(g, j, os.str());
}

void cmd_expand(const RationalChar &a, const Globals &g)
{
    const auto s = series_expand(a, g.depth);
    std::ostringstream os;
    os << "series to depth " << g.depth << ":\n";
    for (const auto &[w, c] : s.coefficients) {
        os << "  " << weight_text(w) << ": " << c.get_str() << "\n";
    }
    emit(g, to_json(s), os.str());
}

void cmd_check(const RationalChar &a, const Globals &g)
{
    const bool o_ok = satisfies_O_necessary(a);
    const auto roots = denominator_roots(a);
    const bool fin = is_finite_dim_char(a);
    std::optional<integer> dim;
    std::optional<std::string> dim_error;
    if (fin) {
        try {
            dim = char_dimension(a);
        } catch (const domain_error &e) {
            dim_error = e.what();
        }
    }
    std::ostringstream os;
    os << "category O necessary condition: " << (o_ok ? "satisfied" : "violated") << "\n";
    os << "denominator roots:";
    if (roots.empty()) {
        os << " none";
    }
    for (const auto &[beta, n] : roots) {
        os << " (" << root_text(beta) << ")" << (n > 1 ? "^" + std::to_string(n) : std::string{});
    }
    os << "\n";
    os << "finite dimensional: " << (fin ? "yes" : "no") << "\n";
    if (dim) {
        os << "dimension: " << dim->get_str() << "\n";
    } else if (dim_error) {
        os << "dimension: " << *dim_error << "\n";
    }
    json j{{"satisfies_O_necessary", o_ok}, {"denominator_roots", to_json(roots)}, {"finite_dim", fin}};
    j["dimension"] = dim ? detail::integer_to_json(*dim) : json(nullptr);
    emit(g, j, os.str());
}

void cmd_decompose(const RationalChar &a, const Globals &g)
{
    const auto dec = verma_decomposition(a.root_system(), a);
    std::ostringstream os;
    if (dec.empty()) {
        os << "0\n";
    }
    for (const auto &[lam, c] : dec) {
        os << c.get_str() << " * M(" << weight_text(lam) << ")\n";
    }
    emit(g, to_json(dec), os.str());
}

void cmd_linkage(const RootSystem &rs, const std::vector<std::string> &args, const Globals &g)
{
    if (args.empty() || args.size() > 2) {
        throw usage_error("linkage takes one or two weights");
    }
    const Weight lam = parse_weight(args[0], rs.rank());
    std::ostringstream os;
    if (args.size() == 1) {
        const auto orbit = linkage_orbit(rs, lam, g.cap);
        json arr = json::array();
        os << "linkage class of " << weight_text(lam) << " (" << orbit.size() << " weights):\n";
        for (const auto &w : orbit) {
            arr.push_back(format_weight(w));
            os << "  " << weight_text(w) << "\n";
        }
        emit(g, json{{"weight", format_weight(lam)}, {"orbit", std::move(arr)}}, os.str());
        return;
    }
    const Weight mu = parse_weight(args[1], rs.rank());
    const bool linked = are_linked(rs, lam, mu, g.cap);
    const bool below = leq(rs, mu, lam);
    os << "linked: " << (linked ? "yes" : "no") << "\n";
    os << "second <= first: " << (below ? "yes" : "no") << "\n";
    emit(g, json{{"linked", linked}, {"leq", below}}, os.str());
}

std::vector<Weight> sweep_weights(const RootSystem &rs, const std::vector<std::string> &args, const std::string &range,
                                  const std::string &along)
{
    std::vector<Weight> out;
    for (const auto &a : args) {
        out.push_back(parse_weight(a, rs.rank()));
    }
    if (range.empty()) {
        if (!along.empty()) {
            throw usage_error("--along needs --range");
        }
        return out;
    }
    const auto parts = detail::split(range, ':');
    if (parts.size() != 3) {
        throw parse_error("range must be lo:hi:step");
    }
    const rational lo = parse_rational(parts[0]), hi = parse_rational(parts[1]), step = parse_rational(parts[2]);
    if (step <= 0) {
        throw parse_error("range step must be positive");
    }
    const Weight dir = along.empty() ? rs.rho_weight() : parse_weight(along, rs.rank());
    if (dir.has_torsion()) {
        throw parse_error("--along takes a weight without torsion");
    }
    for (rational t = lo; t <= hi; t += step) {
        rat_vector c = dir.real();
        for (auto &x : c) {
            x *= t;
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

void cmd_sweep(const RootSystem &rs, const std::vector<Weight> &weights, const Globals &g)
{
    if (weights.empty()) {
        throw usage_error("sweep needs weights or --range");
    }
    const auto report = theorem_sweep(rs, weights, g.cap);
    std::ostringstream os;
    for (const auto &r : report.records) {
        os << weight_text(r.weight) << ": ";
        if (r.finite_dim) {
            os << "finite dimensional (dim " << r.dimension->get_str() << "), ";
        } else {
            os << "infinite dimensional, ";
        }
        os << (r.obstructed ? "obstructed: " + witness_text(r.witnesses) : std::string("no obstruction found"));
        if (r.violation) {
            os << "  VIOLATION: " << *r.violation;
        }
        os << "\n";
    }
    os << "violations: " << report.violations() << "\n";
    emit(g, to_json(report), os.str());
}

int report_error(const Globals &g, const std::string &kind, const std::string &msg, int code)
{
    if (g.json) {
        std::cout << json{{"error", msg}, {"kind", kind}}.dump(2) << "\n";
    }
    std::cerr << "charcalc: " << msg << "\n";
    return code;
}

} // namespace

int main(int argc, char **argv)
{
    Globals g;
    CLI::App app{"Exact characters of category O modules"};
    app.fallthrough();
    app.require_subcommand(1, 1);
    app.add_option("--rs", g.rs, "root system: A2, B3xG2, or {\"cartan\": [[...]]}")->capture_default_str();
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_option("--cap", g.cap, "Weyl group enumeration cap")->envname("CHARCALC_CAP")->capture_default_str();
    app.add_option("--depth", g.depth, "series expansion depth")->capture_default_str();

    auto *rootsys = app.add_subcommand("rootsys", "Cartan data and positive roots");
    auto *chr = app.add_subcommand("char", "build and print one character");
    auto *tensor = app.add_subcommand("tensor", "product of two characters and its obstruction verdict");
    auto *red = app.add_subcommand("reduce", "reduced rational form of a character");
    auto *expand = app.add_subcommand("expand", "truncated series coefficients");
    auto *check = app.add_subcommand("check", "category O and finite-dimensionality checks");
    auto *decompose = app.add_subcommand("decompose", "integer combination of Verma characters");
    auto *linkage = app.add_subcommand("linkage", "linkage class of one weight, or a comparison of two");
    auto *sweep = app.add_subcommand("sweep", "obstruction of V(w) (x) V(w) against finite-dimensionality");
    auto *oracle = app.add_subcommand("oracle", "brute-force reference computations (JSON)");

    const Operands chr_ops(chr, true), tensor_ops(tensor, true), red_ops(red, true), expand_ops(expand, true),
        check_ops(check, true), decompose_ops(decompose, true);

    std::vector<std::string> link_args;
    linkage->add_option("weights", link_args, "one or two weights")->expected(1, 2);

    std::vector<std::string> sweep_args;
    std::string range, along;
    sweep->add_option("weights", sweep_args, "weights to test");
    sweep->add_option("--range", range, "lo:hi:step multiples of the --along weight");
    sweep->add_option("--along", along, "direction weight for --range (default rho)");

    oracle->require_subcommand(1, 1);
    std::string gamma, o_lambda, o_mu;
    auto *kostant = oracle->add_subcommand("kostant", "Kostant partition count of gamma (root coordinates)");
    kostant->add_option("--gamma", gamma, "comma-separated non-negative integers")->required();
    auto *freud = oracle->add_subcommand("freudenthal", "multiplicity of mu in V(lambda)");
    freud->add_option("--lambda", o_lambda, "dominant integral weight")->required();
    freud->add_option("--mu", o_mu, "weight")->required();
    auto *dimension = oracle->add_subcommand("dimension", "Weyl dimension of V(lambda)");
    dimension->add_option("--lambda", o_lambda, "dominant integral weight")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        const RootSystem rs = build_root_system(g.rs);
        if (g.depth < 0) {
            throw usage_error("--depth must be non-negative");
        }
        if (*rootsys) {
            cmd_rootsys(rs, g);
        } else if (*chr) {
            const auto a = expect_operands(chr_ops, rs, g, 1, "char");
            emit(g, to_json(a[0]), char_text(a[0]));
        } else if (*tensor) {
            const auto a = expect_operands(tensor_ops, rs, g, 2, "tensor");
            cmd_tensor(a[0], a[1], g);
        } else if (*red) {
            const auto a = reduce(expect_operands(red_ops, rs, g, 1, "reduce")[0]);
            emit(g, to_json(a), char_text(a));
        } else if (*expand) {
            cmd_expand(expect_operands(expand_ops, rs, g, 1, "expand")[0], g);
        } else if (*check) {
            cmd_check(expect_operands(check_ops, rs, g, 1, "check")[0], g);
        } else if (*decompose) {
            cmd_decompose(expect_operands(decompose_ops, rs, g, 1, "decompose")[0], g);
        } else if (*linkage) {
            cmd_linkage(rs, link_args, g);
        } else if (*sweep) {
            cmd_sweep(rs, sweep_weights(rs, sweep_args, range, along), g);
        } else if (*kostant) {
            int_vector gv;
            for (const auto &x : detail::parse_rat_list(gamma, rs.rank(), "gamma")) {
                if (!is_integral(x)) {
                    throw parse_error("gamma must be integral");
                }
                gv.push_back(to_int64(x));
            }
            std::cout << json{{"gamma", gv}, {"count", detail::integer_to_json(oracles::kostant_partition_count(rs, gv))}}.dump(2)
                      << "\n";
        } else if (*freud) {
            const Weight lam = parse_weight(o_lambda, rs.rank()), mu = parse_weight(o_mu, rs.rank());
            std::cout << json{{"lambda", format_weight(lam)},
                              {"mu", format_weight(mu)},
                              {"multiplicity", detail::integer_to_json(oracles::freudenthal_multiplicity(rs, lam, mu))}}
                             .dump(2)
                      << "\n";
        } else if (*dimension) {
            const Weight lam = parse_weight(o_lambda, rs.rank());
            std::cout << json{{"lambda", format_weight(lam)},
                              {"dimension", detail::integer_to_json(oracles::weyl_dimension(rs, lam))}}
                             .dump(2)
                      << "\n";
        }
    } catch (const usage_error &e) {
        return report_error(g, "usage", e.what(), 2);
    } catch (const parse_error &e) {
        return report_error(g, "parse", e.what(), 2);
    } catch (const domain_error &e) {
        return report_error(g, "domain", e.what(), 1);
    } catch (const std::exception &e) {
        return report_error(g, "internal", e.what(), 3);
    }
    return 0;
}
