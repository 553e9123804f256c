#ifndef CHARCALC_ORACLES_HPP
#define CHARCALC_ORACLES_HPP

// Brute-force reference computations. Nothing here goes through the
// rational-form machinery of rational_char.hpp, so agreement between the two
// is evidence rather than tautology.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include <charcalc/rational.hpp>
#include <charcalc/root_system.hpp>

namespace charcalc::oracles
{

/// Number of multisets of positive roots summing to gamma (simple-root
/// coordinates), by exhaustive enumeration over per-root multiplicities.
inline integer kostant_partition_count(const RootSystem &rs, const int_vector &gamma)
{
    if (gamma.size() != rs.rank() || std::any_of(gamma.begin(), gamma.end(), [](auto g) { return g < 0; })) {
        throw domain_error("kostant_partition_count: gamma must be a non-negative vector of length rank");
    }
    const auto &roots = rs.positive_roots();
    std::function<integer(std::size_t, int_vector &)> count = [&](std::size_t k, int_vector &rem) -> integer {
        if (k == roots.size()) {
            return std::all_of(rem.begin(), rem.end(), [](auto x) { return x == 0; }) ? 1 : 0;
        }
        integer total = 0;
        int_vector r = rem;
        while (true) {
            total += count(k + 1, r);
            bool ok = true;
            for (std::size_t i = 0; i < r.size(); ++i) {
                r[i] -= roots[k][i];
                ok = ok && r[i] >= 0;
            }
            if (!ok) {
                break;
            }
        }
        return total;
    };
    int_vector g = gamma;
    return count(0, g);
}

namespace detail
{

inline void require_dominant(const RootSystem &rs, const Weight &lam)
{
    if (lam.rank() != rs.rank() || !is_dominant_integral(rs, lam)) {
        throw domain_error("oracle requires a dominant integral weight with zero torsion");
    }
}

} // namespace detail

/// Weyl dimension formula prod_{beta > 0} (lambda + rho, beta) / (rho, beta).
inline integer weyl_dimension(const RootSystem &rs, const Weight &lam)
{
    detail::require_dominant(rs, lam);
    rat_vector shifted = lam.real();
    for (auto &c : shifted) {
        c += 1;
    }
    rational prod(1);
    for (const auto &beta : rs.positive_roots()) {
        prod *= rs.form(shifted, beta) / rs.form(rs.rho(), beta);
    }
    if (!is_integral(prod)) {
        throw std::logic_error("Weyl dimension formula gave a non-integer");
    }
    return prod.get_num();
}

/// Multiplicity of mu in V(lambda) by Freudenthal's recursion
///
///   ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) m(mu)
///       = 2 sum_{beta > 0} sum_{k >= 1} m(mu + k beta) (mu + k beta, beta),
///
/// evaluated top-down over gamma = lambda - mu with per-call memoization.
class FreudenthalOracle
{
public:
    FreudenthalOracle(const RootSystem &rs, const Weight &lam) : rs_(rs), lam_(lam)
    {
        detail::require_dominant(rs, lam);
        top_ = lam.real();
        for (auto &c : top_) {
            c += 1;
        }
        top_norm_ = rs_.inner(top_, top_);
    }

    integer multiplicity(const Weight &mu)
    {
        if (mu.rank() != rs_.rank()) {
            throw domain_error("weight rank mismatch");
        }
        const auto gamma = rs_.root_lattice_difference(lam_, mu);
        if (!gamma || std::any_of(gamma->begin(), gamma->end(), [](auto g) { return g < 0; })) {
            return 0;
        }
        return at(*gamma);
    }

    /// All weights with non-zero multiplicity.
    std::map<Weight, integer> character()
    {
        // lambda - w0 lambda bounds gamma coordinate-wise.
        rat_vector low = lam_.real();
        for (bool moved = true; moved;) {
            moved = false;
            for (std::size_t i = 0; i < rs_.rank(); ++i) {
                if (low[i] > 0) {
                    rs_.simple_reflect_fund(i, low);
                    moved = true;
                }
            }
        }
        const auto span = *rs_.root_lattice_difference(lam_, Weight(low));
        std::map<Weight, integer> out;
        int_vector gamma(rs_.rank(), 0);
        while (true) {
            const integer m = at(gamma);
            if (m != 0) {
                out.emplace(rs_.lower(lam_, gamma), m);
            }
            std::size_t i = 0;
            while (i < gamma.size() && gamma[i] == span[i]) {
                gamma[i] = 0;
                ++i;
            }
            if (i == gamma.size()) {
                break;
            }
            ++gamma[i];
        }
        return out;
    }

private:
    integer at(const int_vector &gamma)
    {
        if (std::all_of(gamma.begin(), gamma.end(), [](auto g) { return g == 0; })) {
            return 1;
        }
        if (auto it = memo_.find(gamma); it != memo_.end()) {
            return it->second;
        }
        const rat_vector mu = rs_.lower(lam_, gamma).real();
        rational num(0);
        for (const auto &beta : rs_.positive_roots()) {
            const rat_vector beta_fund = rs_.to_fundamental(beta);
            int_vector g = gamma;
            rat_vector up = mu;
            for (std::int64_t k = 1;; ++k) {
                bool ok = true;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    g[i] -= beta[i];
                    ok = ok && g[i] >= 0;
                    up[i] += beta_fund[i];
                }
                if (!ok) {
                    break;
                }
                const integer m = at(g);
                if (m != 0) {
                    num += rational(m) * rs_.form(up, beta);
                }
            }
        }
        num *= 2;
        rat_vector mu_rho = mu;
        for (auto &c : mu_rho) {
            c += 1;
        }
        const rational den = top_norm_ - rs_.inner(mu_rho, mu_rho);
        integer result = 0;
        if (den == 0) {
            if (num != 0) {
                throw std::logic_error("Freudenthal recursion: zero divisor with non-zero numerator");
            }
        } else {
            const rational q = num / den;
            if (!is_integral(q)) {
                throw std::logic_error("Freudenthal recursion produced a non-integer multiplicity");
            }
            result = q.get_num();
        }
        memo_.emplace(gamma, result);
        return result;
    }

    RootSystem rs_;
    Weight lam_;
    rat_vector top_;
    rational top_norm_;
    std::map<int_vector, integer> memo_;
};

inline integer freudenthal_multiplicity(const RootSystem &rs, const Weight &lam, const Weight &mu)
{
    return FreudenthalOracle(rs, lam).multiplicity(mu);
}

} // namespace charcalc::oracles

#endif
