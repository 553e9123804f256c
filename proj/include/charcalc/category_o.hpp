#ifndef CHARCALC_CATEGORY_O_HPP
#define CHARCALC_CATEGORY_O_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <charcalc/laurent_poly.hpp>
#include <charcalc/rational.hpp>
#include <charcalc/rational_char.hpp>
#include <charcalc/root_system.hpp>

namespace charcalc
{

struct VermaTerm {
    Weight lambda;
    integer c;

    friend bool operator==(const VermaTerm &a, const VermaTerm &b)
    {
        return a.lambda == b.lambda && a.c == b.c;
    }
};

/// Finite integer combination sum c * ch M(lambda), kept sorted by weight with
/// distinct weights and non-zero coefficients.
using VermaDecomposition = std::vector<VermaTerm>;

inline VermaDecomposition canonicalize(const VermaDecomposition &dec)
{
    std::map<Weight, integer> acc;
    for (const auto &[lambda, c] : dec) {
        acc[lambda] += c;
    }
    VermaDecomposition out;
    for (auto &[lambda, c] : acc) {
        if (c != 0) {
            out.push_back(VermaTerm{lambda, c});
        }
    }
    return out;
}

namespace detail
{

inline Denominator all_positive_roots(const RootSystem &rs)
{
    Denominator d;
    for (const auto &beta : rs.positive_roots()) {
        d.emplace(beta, 1);
    }
    return d;
}

inline void check_rank(const RootSystem &rs, const Weight &lam)
{
    if (lam.rank() != rs.rank()) {
        throw domain_error("weight has rank " + std::to_string(lam.rank()) + " but " + rs.label() + " has rank "
                           + std::to_string(rs.rank()));
    }
}

} // namespace detail

/// p = 1 / prod_{beta > 0} (1 - e^{-beta}).
inline RationalChar kostant_p(const RootSystem &rs)
{
    return RationalChar(rs, {CharTerm{Weight::zero(rs.rank()), LaurentPoly::one(rs.rank())}},
                        detail::all_positive_roots(rs));
}

/// ch M(lambda) = e^lambda p.
inline RationalChar verma_character(const RootSystem &rs, const Weight &lam)
{
    detail::check_rank(rs, lam);
    return RationalChar(rs, {CharTerm{lam, LaurentPoly::one(rs.rank())}}, detail::all_positive_roots(rs));
}

/// Character of the Verma module of one simple component, pulled back along
/// the projection onto that component: e^lambda / prod over the component's
/// positive roots. `lam` is given in the component's fundamental coordinates.
inline RationalChar component_verma_character(const RootSystem &rs, std::size_t component, const Weight &lam)
{
    const auto &comps = rs.components();
    if (component >= comps.size()) {
        throw domain_error(rs.label() + " has " + std::to_string(comps.size()) + " simple components");
    }
    const auto &idx = comps[component];
    if (lam.rank() != idx.size()) {
        throw domain_error("component weight has wrong rank");
    }
    rat_vector real(rs.rank(), rational(0)), tors(rs.rank(), rational(0));
    for (std::size_t k = 0; k < idx.size(); ++k) {
        real[idx[k]] = lam.real()[k];
        tors[idx[k]] = lam.torsion()[k];
    }
    Denominator d;
    for (const auto &beta : rs.positive_roots()) {
        bool inside = true;
        for (std::size_t i = 0; i < rs.rank() && inside; ++i) {
            inside = beta[i] == 0 || std::binary_search(idx.begin(), idx.end(), i);
        }
        if (inside) {
            d.emplace(beta, 1);
        }
    }
    return RationalChar(rs, {CharTerm{Weight(real, tors), LaurentPoly::one(rs.rank())}}, std::move(d));
}

/// Weyl character formula: the alternating sum
/// sum_w sign(w) e^{w(lambda + rho) - rho} times p, divided out exactly.
inline RationalChar weyl_character(const RootSystem &rs, const Weight &lam, std::size_t cap = default_weyl_cap)
{
    detail::check_rank(rs, lam);
    if (!is_dominant_integral(rs, lam)) {
        throw domain_error("weyl_character requires a dominant integral weight with zero torsion; use "
                           "simple_character");
    }
    rat_vector top = lam.real();
    for (auto &c : top) {
        c += 1;
    }
    const Weight shifted(top);
    LaurentPoly numerator(rs.rank());
    for (const auto &w : weyl_elements(rs, cap)) {
        const Weight image(apply_fund(rs, w, top));
        numerator.add_term(*rs.root_lattice_difference(shifted, image), w.sign());
    }
    RationalChar out = reduce(RationalChar(rs, {CharTerm{lam, std::move(numerator)}}, detail::all_positive_roots(rs)));
    if (!out.denom().empty()) {
        throw std::logic_error("Weyl numerator not divisible by the Weyl denominator");
    }
    return out;
}

/// ch V(lambda) where it is determined without Kazhdan-Lusztig input:
/// dominant integral lambda, or rank one with zero torsion (there M(lambda)
/// is simple unless (lambda + rho, alpha^vee) is a positive integer).
inline RationalChar simple_character(const RootSystem &rs, const Weight &lam, std::size_t cap = default_weyl_cap)
{
    detail::check_rank(rs, lam);
    if (is_dominant_integral(rs, lam)) {
        return weyl_character(rs, lam, cap);
    }
    if (rs.rank() == 1 && !lam.has_torsion()) {
        return verma_character(rs, lam);
    }
    throw domain_error("simple character requires KL data; supply a VermaDecomposition instead");
}

/// sum c e^lambda over prod (1 - e^{-beta}), with no cancellation.
inline RationalChar unreduced_character(const RootSystem &rs, const VermaDecomposition &dec)
{
    std::vector<CharTerm> terms;
    for (const auto &[lambda, c] : dec) {
        detail::check_rank(rs, lambda);
        terms.push_back(CharTerm{lambda, LaurentPoly::constant(rs.rank(), c)});
    }
    return RationalChar(rs, std::move(terms), detail::all_positive_roots(rs));
}

inline RationalChar assemble_from_verma(const RootSystem &rs, const VermaDecomposition &dec)
{
    return reduce(unreduced_character(rs, dec));
}

inline VermaDecomposition verma_decomposition(const RootSystem &rs, const RationalChar &chi)
{
    if (chi.root_system() != rs) {
        throw domain_error("character over a different root system");
    }
    LaurentPoly weyl_denominator = LaurentPoly::one(rs.rank());
    for (const auto &beta : rs.positive_roots()) {
        weyl_denominator = weyl_denominator * LaurentPoly::one_minus(beta);
    }
    const RationalChar cleared = mul(chi, RationalChar(rs, {CharTerm{Weight::zero(rs.rank()), weyl_denominator}}));
    if (!cleared.denom().empty()) {
        throw domain_error("not a finite integer combination of Verma characters: denominator does not clear");
    }
    VermaDecomposition out;
    for (const auto &t : cleared.terms()) {
        for (const auto &[m, c] : t.f) {
            out.push_back(VermaTerm{rs.lower(t.mu, m), c});
        }
    }
    return canonicalize(out);
}

/// Necessary condition for chi = ch M with M in O: every reduced denominator
/// exponent equals one. Not sufficient.
inline bool satisfies_O_necessary(const RationalChar &chi)
{
    const auto d = denominator_roots(chi);
    return std::all_of(d.begin(), d.end(), [](const auto &kv) { return kv.second == 1; });
}

inline bool is_finite_dim_char(const RationalChar &chi)
{
    return denominator_roots(chi).empty();
}

inline integer char_dimension(const RationalChar &chi)
{
    const RationalChar r = reduce(chi);
    if (!r.denom().empty()) {
        throw domain_error("character is infinite dimensional");
    }
    integer dim = 0;
    for (const auto &t : r.terms()) {
        for (const auto &[m, c] : t.f) {
            if (c < 0) {
                throw domain_error("not a character: negative coefficient");
            }
            dim += c;
        }
    }
    return dim;
}

struct TensorVerdict {
    bool obstructed = false;
    /// Roots with n_beta >= 2 in the reduced product, in root_less order.
    std::vector<int_vector> witnesses;
    RationalChar product;
};

/// Multiplies and reduces; a squared denominator factor certifies that a * b
/// is not the character of any module in O. "Unobstructed" makes no claim.
inline TensorVerdict tensor_obstruction(const RationalChar &a, const RationalChar &b)
{
    TensorVerdict v{false, {}, mul(a, b)};
    for (const auto &[beta, n] : v.product.denom()) {
        if (n >= 2) {
            v.witnesses.push_back(beta);
        }
    }
    v.obstructed = !v.witnesses.empty();
    return v;
}

/// T_a intersected with T_b. For single-term numerators a non-empty result
/// implies obstruction; in general it is only a hint.
inline std::vector<int_vector> shared_denominator_roots(const RationalChar &a, const RationalChar &b)
{
    detail::check_same(a, b);
    const auto da = denominator_roots(a), db = denominator_roots(b);
    std::vector<int_vector> out;
    for (const auto &[beta, n] : da) {
        if (db.count(beta)) {
            out.push_back(beta);
        }
    }
    return out;
}

struct SweepRecord {
    Weight weight;
    bool finite_dim = false;
    std::optional<integer> dimension;
    bool obstructed = false;
    std::vector<int_vector> witnesses;
    /// Set when the verdict contradicts finite-dimensionality; always an
    /// implementation bug.
    std::optional<std::string> violation;
};

struct SweepReport {
    std::vector<SweepRecord> records;

    std::size_t violations() const
    {
        return static_cast<std::size_t>(std::count_if(records.begin(), records.end(),
                                                      [](const SweepRecord &r) { return r.violation.has_value(); }));
    }
};

/// For each weight, V(lambda) (x) V(lambda) must be obstructed exactly when
/// V(lambda) is infinite dimensional.
inline SweepReport theorem_sweep(const RootSystem &rs, const std::vector<Weight> &weights,
                                 std::size_t cap = default_weyl_cap)
{
    SweepReport report;
    for (const auto &lam : weights) {
        const RationalChar ch = simple_character(rs, lam, cap);
        SweepRecord rec;
        rec.weight = lam;
        rec.finite_dim = is_finite_dim_char(ch);
        if (rec.finite_dim) {
            rec.dimension = char_dimension(ch);
        }
        auto verdict = tensor_obstruction(ch, ch);
        rec.obstructed = verdict.obstructed;
        rec.witnesses = std::move(verdict.witnesses);
        if (rec.finite_dim && rec.obstructed) {
            rec.violation = "finite-dimensional simple module has an obstructed self-product";
        } else if (!rec.finite_dim && !rec.obstructed) {
            rec.violation = "infinite-dimensional simple module has no obstruction in its self-product";
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

} // namespace charcalc

#endif
