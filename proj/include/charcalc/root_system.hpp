#ifndef CHARCALC_ROOT_SYSTEM_HPP
#define CHARCALC_ROOT_SYSTEM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include <charcalc/rational.hpp>

namespace charcalc
{

inline constexpr std::size_t default_weyl_cap = 1'000'000;

inline std::int64_t height(const int_vector &v)
{
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

/// Canonical order on positive roots: by height, then lexicographically
/// larger first, so that alpha_1 precedes alpha_2.
struct root_less {
    bool operator()(const int_vector &a, const int_vector &b) const
    {
        const auto ha = height(a), hb = height(b);
        if (ha != hb) {
            return ha < hb;
        }
        return b < a;
    }
};

/// An element of h*_q: a rational real part in fundamental-weight
/// coordinates plus a torsion label in coroot coordinates, reduced mod 1.
class Weight
{
public:
    Weight() = default;

    explicit Weight(rat_vector real, rat_vector torsion = {}) : real_(std::move(real)), torsion_(std::move(torsion))
    {
        if (torsion_.empty()) {
            torsion_.assign(real_.size(), rational(0));
        }
        if (torsion_.size() != real_.size()) {
            throw domain_error("weight torsion has " + std::to_string(torsion_.size()) + " entries, expected "
                               + std::to_string(real_.size()));
        }
        for (auto &t : torsion_) {
            t = frac(t);
        }
    }

    static Weight zero(std::size_t rank)
    {
        return Weight(rat_vector(rank, rational(0)));
    }

    std::size_t rank() const
    {
        return real_.size();
    }
    const rat_vector &real() const
    {
        return real_;
    }
    const rat_vector &torsion() const
    {
        return torsion_;
    }
    bool has_torsion() const
    {
        return std::any_of(torsion_.begin(), torsion_.end(), [](const rational &t) { return t != 0; });
    }

    Weight operator+(const Weight &o) const
    {
        check_rank(o);
        rat_vector r(rank()), t(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            r[i] = real_[i] + o.real_[i];
            t[i] = torsion_[i] + o.torsion_[i];
        }
        return Weight(std::move(r), std::move(t));
    }
    Weight operator-() const
    {
        rat_vector r(rank()), t(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            r[i] = -real_[i];
            t[i] = -torsion_[i];
        }
        return Weight(std::move(r), std::move(t));
    }
    Weight operator-(const Weight &o) const
    {
        return *this + (-o);
    }

    friend bool operator==(const Weight &a, const Weight &b)
    {
        return a.real_ == b.real_ && a.torsion_ == b.torsion_;
    }
    friend bool operator<(const Weight &a, const Weight &b)
    {
        if (a.real_ != b.real_) {
            return lex_less(a.real_, b.real_);
        }
        return lex_less(a.torsion_, b.torsion_);
    }

private:
    void check_rank(const Weight &o) const
    {
        if (o.rank() != rank()) {
            throw domain_error("weights of different rank");
        }
    }

    rat_vector real_;
    rat_vector torsion_;
};

/// Key identifying the class of a weight modulo the root lattice Q.
struct CosetKey {
    rat_vector fractional_root_coords;
    rat_vector torsion;

    friend bool operator<(const CosetKey &a, const CosetKey &b)
    {
        if (a.fractional_root_coords != b.fractional_root_coords) {
            return lex_less(a.fractional_root_coords, b.fractional_root_coords);
        }
        return lex_less(a.torsion, b.torsion);
    }
    friend bool operator==(const CosetKey &a, const CosetKey &b)
    {
        return a.fractional_root_coords == b.fractional_root_coords && a.torsion == b.torsion;
    }
};

namespace detail
{

// Gauss-Jordan inverse over Q; returns nullopt when singular.
inline std::optional<std::vector<rat_vector>> invert(std::vector<rat_vector> m)
{
    const auto n = m.size();
    std::vector<rat_vector> inv(n, rat_vector(n, rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        inv[i][i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == n) {
            return std::nullopt;
        }
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const rational p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) {
                continue;
            }
            const rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Symmetric matrix is positive definite iff every pivot of an unpivoted
// elimination is positive.
inline bool is_positive_definite(std::vector<rat_vector> m)
{
    const auto n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] <= 0) {
            return false;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const rational f = m[r][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) {
                m[r][j] -= f * m[k][j];
            }
        }
    }
    return true;
}

struct root_system_data {
    std::string label;
    std::size_t rank = 0;
    std::vector<int_vector> cartan;
    rat_vector d;
    std::vector<rat_vector> cartan_inverse;
    std::vector<int_vector> posroots;
    std::map<int_vector, std::size_t> root_index;
    std::vector<std::vector<std::size_t>> components;
    rat_vector rho_root;
};

} // namespace detail

/// Finite-type root system given by a Cartan matrix with a_ij = <alpha_i^vee, alpha_j>.
///
/// Weights are handled in fundamental-weight coordinates; alpha_j has
/// fundamental coordinates equal to column j of the Cartan matrix. Values are
/// cheap to copy and immutable after construction.
class RootSystem
{
public:
    static RootSystem from_cartan(const std::vector<int_vector> &cartan, std::string label = {})
    {
        auto data = std::make_shared<detail::root_system_data>();
        const auto n = cartan.size();
        if (n == 0) {
            throw parse_error("empty Cartan matrix");
        }
        for (const auto &row : cartan) {
            if (row.size() != n) {
                throw parse_error("Cartan matrix is not square");
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto a = cartan[i][j];
                if (i == j ? a != 2 : (a > 0 || (a == 0) != (cartan[j][i] == 0))) {
                    throw domain_error("not finite type: invalid Cartan matrix entries");
                }
            }
        }
        data->rank = n;
        data->cartan = cartan;
        data->label = label.empty() ? "cartan" : std::move(label);
        data->components = connected_components(cartan);
        data->d = symmetrizers(cartan, data->components);

        std::vector<rat_vector> sym(n, rat_vector(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                sym[i][j] = data->d[i] * cartan[i][j];
            }
        }
        if (!detail::is_positive_definite(sym)) {
            throw domain_error("not finite type: symmetrized Cartan matrix is not positive definite");
        }

        std::vector<rat_vector> a(n, rat_vector(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = cartan[i][j];
            }
        }
        data->cartan_inverse = *detail::invert(a);
        data->posroots = close_positive_roots(cartan);
        for (std::size_t k = 0; k < data->posroots.size(); ++k) {
            data->root_index.emplace(data->posroots[k], k);
        }

        data->rho_root.assign(n, rational(0));
        for (const auto &beta : data->posroots) {
            for (std::size_t i = 0; i < n; ++i) {
                data->rho_root[i] += rational(beta[i]) / 2;
            }
        }
        RootSystem rs(std::move(data));
        // rho is both the half-sum of positive roots and the sum of the
        // fundamental weights.
        if (rs.to_fundamental(rs.d_->rho_root) != rat_vector(n, rational(1))) {
            throw std::logic_error("rho consistency check failed");
        }
        return rs;
    }

    std::size_t rank() const
    {
        return d_->rank;
    }
    const std::string &label() const
    {
        return d_->label;
    }
    std::int64_t cartan(std::size_t i, std::size_t j) const
    {
        return d_->cartan[i][j];
    }
    const std::vector<int_vector> &cartan_matrix() const
    {
        return d_->cartan;
    }
    const std::vector<rat_vector> &cartan_inverse() const
    {
        return d_->cartan_inverse;
    }
    /// d_i = (alpha_i, alpha_i)/2, minimum 1 on every simple component.
    const rat_vector &symmetrizers() const
    {
        return d_->d;
    }
    const std::vector<int_vector> &positive_roots() const
    {
        return d_->posroots;
    }
    const std::vector<std::vector<std::size_t>> &components() const
    {
        return d_->components;
    }
    bool is_positive_root(const int_vector &beta) const
    {
        return d_->root_index.count(beta) != 0;
    }
    std::size_t root_index(const int_vector &beta) const
    {
        const auto it = d_->root_index.find(beta);
        if (it == d_->root_index.end()) {
            throw domain_error("not a positive root of " + label());
        }
        return it->second;
    }
    int_vector simple_root(std::size_t i) const
    {
        int_vector r(rank(), 0);
        r.at(i) = 1;
        return r;
    }

    /// rho in fundamental coordinates (all ones).
    rat_vector rho() const
    {
        return rat_vector(rank(), rational(1));
    }
    Weight rho_weight() const
    {
        return Weight(rho());
    }
    const rat_vector &rho_root_coords() const
    {
        return d_->rho_root;
    }

    rat_vector to_root_coords(const rat_vector &fund) const
    {
        rat_vector r(rank(), rational(0));
        for (std::size_t i = 0; i < rank(); ++i) {
            for (std::size_t j = 0; j < rank(); ++j) {
                r[i] += d_->cartan_inverse[i][j] * fund[j];
            }
        }
        return r;
    }
    rat_vector to_fundamental(const rat_vector &root_coords) const
    {
        rat_vector c(rank(), rational(0));
        for (std::size_t i = 0; i < rank(); ++i) {
            for (std::size_t j = 0; j < rank(); ++j) {
                c[i] += rational(d_->cartan[i][j]) * root_coords[j];
            }
        }
        return c;
    }
    rat_vector to_fundamental(const int_vector &root_coords) const
    {
        rat_vector c(rank(), rational(0));
        for (std::size_t i = 0; i < rank(); ++i) {
            for (std::size_t j = 0; j < rank(); ++j) {
                c[i] += rational(d_->cartan[i][j] * root_coords[j]);
            }
        }
        return c;
    }

    /// (lambda, beta) for lambda in fundamental and beta in root coordinates.
    rational form(const rat_vector &fund, const rat_vector &root_coords) const
    {
        rational s(0);
        for (std::size_t j = 0; j < rank(); ++j) {
            s += fund[j] * d_->d[j] * root_coords[j];
        }
        return s;
    }
    rational form(const rat_vector &fund, const int_vector &root_coords) const
    {
        rational s(0);
        for (std::size_t j = 0; j < rank(); ++j) {
            s += fund[j] * d_->d[j] * rational(root_coords[j]);
        }
        return s;
    }
    /// (lambda, mu) with both arguments in fundamental coordinates.
    rational inner(const rat_vector &a, const rat_vector &b) const
    {
        return form(a, to_root_coords(b));
    }
    rational norm_sq(const int_vector &beta) const
    {
        return form(to_fundamental(beta), beta);
    }
    /// (lambda, beta^vee) = 2 (lambda, beta) / (beta, beta).
    rational coroot_pairing(const rat_vector &fund, const int_vector &beta) const
    {
        return 2 * form(fund, beta) / norm_sq(beta);
    }

    /// (t, alpha_i) for a torsion vector t in coroot coordinates.
    rational torsion_pairing(const rat_vector &t, std::size_t i) const
    {
        rational s(0);
        for (std::size_t j = 0; j < rank(); ++j) {
            s += t[j] * rational(d_->cartan[j][i]);
        }
        return s;
    }

    /// mu - sum_i m_i alpha_i.
    Weight lower(const Weight &mu, const int_vector &m) const
    {
        rat_vector r = mu.real();
        for (std::size_t i = 0; i < rank(); ++i) {
            for (std::size_t j = 0; j < rank(); ++j) {
                r[i] -= rational(d_->cartan[i][j] * m[j]);
            }
        }
        return Weight(std::move(r), mu.torsion());
    }

    /// a - b in simple-root coordinates when a - b lies in the root lattice.
    std::optional<int_vector> root_lattice_difference(const Weight &a, const Weight &b) const
    {
        if (a.torsion() != b.torsion()) {
            return std::nullopt;
        }
        rat_vector diff(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            diff[i] = a.real()[i] - b.real()[i];
        }
        const rat_vector rc = to_root_coords(diff);
        int_vector out(rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            if (!is_integral(rc[i]) || !rc[i].get_num().fits_slong_p()) {
                return std::nullopt;
            }
            out[i] = rc[i].get_num().get_si();
        }
        return out;
    }

    CosetKey coset_key(const Weight &mu) const
    {
        rat_vector rc = to_root_coords(mu.real());
        for (auto &x : rc) {
            x = frac(x);
        }
        return CosetKey{std::move(rc), mu.torsion()};
    }

    /// s_i on fundamental coordinates: c - c_i * alpha_i.
    void simple_reflect_fund(std::size_t i, rat_vector &c) const
    {
        const rational ci = c[i];
        if (ci == 0) {
            return;
        }
        for (std::size_t k = 0; k < rank(); ++k) {
            c[k] -= ci * rational(d_->cartan[k][i]);
        }
    }
    /// s_i on a torsion vector in coroot coordinates: t - (t, alpha_i) alpha_i^vee.
    void simple_reflect_coroot(std::size_t i, rat_vector &t) const
    {
        t[i] -= torsion_pairing(t, i);
    }

    friend bool operator==(const RootSystem &a, const RootSystem &b)
    {
        return a.d_ == b.d_ || a.d_->cartan == b.d_->cartan;
    }
    friend bool operator!=(const RootSystem &a, const RootSystem &b)
    {
        return !(a == b);
    }

private:
    explicit RootSystem(std::shared_ptr<const detail::root_system_data> d) : d_(std::move(d)) {}

    static std::vector<std::vector<std::size_t>> connected_components(const std::vector<int_vector> &a)
    {
        const auto n = a.size();
        std::vector<int> seen(n, 0);
        std::vector<std::vector<std::size_t>> comps;
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s]) {
                continue;
            }
            std::vector<std::size_t> comp;
            std::deque<std::size_t> queue{s};
            seen[s] = 1;
            while (!queue.empty()) {
                const auto i = queue.front();
                queue.pop_front();
                comp.push_back(i);
                for (std::size_t j = 0; j < n; ++j) {
                    if (!seen[j] && a[i][j] != 0) {
                        seen[j] = 1;
                        queue.push_back(j);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    static rat_vector symmetrizers(const std::vector<int_vector> &a, const std::vector<std::vector<std::size_t>> &comps)
    {
        const auto n = a.size();
        rat_vector d(n, rational(0));
        for (const auto &comp : comps) {
            d[comp.front()] = 1;
            std::deque<std::size_t> queue{comp.front()};
            while (!queue.empty()) {
                const auto i = queue.front();
                queue.pop_front();
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || a[i][j] == 0) {
                        continue;
                    }
                    const rational dj = d[i] * rational(a[i][j]) / rational(a[j][i]);
                    if (d[j] == 0) {
                        d[j] = dj;
                        queue.push_back(j);
                    } else if (d[j] != dj) {
                        throw domain_error("not finite type: Cartan matrix is not symmetrizable");
                    }
                }
            }
            rational lo = d[comp.front()];
            for (auto i : comp) {
                lo = std::min(lo, d[i]);
            }
            for (auto i : comp) {
                d[i] /= lo;
            }
        }
        return d;
    }

    static std::vector<int_vector> close_positive_roots(const std::vector<int_vector> &a)
    {
        const auto n = a.size();
        std::set<int_vector> found;
        std::deque<int_vector> queue;
        for (std::size_t i = 0; i < n; ++i) {
            int_vector e(n, 0);
            e[i] = 1;
            found.insert(e);
            queue.push_back(e);
        }
        while (!queue.empty()) {
            const int_vector beta = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < n; ++i) {
                std::int64_t pairing = 0;
                for (std::size_t j = 0; j < n; ++j) {
                    pairing += a[i][j] * beta[j];
                }
                int_vector image = beta;
                image[i] -= pairing;
                const bool positive = std::all_of(image.begin(), image.end(), [](auto x) { return x >= 0; });
                if (positive && height(image) > 0 && found.insert(image).second) {
                    queue.push_back(std::move(image));
                }
            }
        }
        std::vector<int_vector> roots(found.begin(), found.end());
        std::sort(roots.begin(), roots.end(), root_less{});
        return roots;
    }

    std::shared_ptr<const detail::root_system_data> d_;
};

namespace detail
{

inline std::vector<int_vector> cartan_of_type(char type, int n)
{
    auto bad = [&]() { return parse_error(std::string("unsupported type ") + type + std::to_string(n)); };
    const bool ok = (type == 'A' && n >= 1) || (type == 'B' && n >= 2) || (type == 'C' && n >= 2)
                    || (type == 'D' && n >= 4) || (type == 'E' && n >= 6 && n <= 8) || (type == 'F' && n == 4)
                    || (type == 'G' && n == 2);
    if (!ok) {
        throw bad();
    }
    const auto un = static_cast<std::size_t>(n);
    std::vector<int_vector> a(un, int_vector(un, 0));
    auto link = [&](std::size_t i, std::size_t j) {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    for (std::size_t i = 0; i < un; ++i) {
        a[i][i] = 2;
    }
    switch (type) {
        case 'A':
            for (std::size_t i = 0; i + 1 < un; ++i) {
                link(i, i + 1);
            }
            break;
        case 'B':
        case 'C':
            for (std::size_t i = 0; i + 1 < un; ++i) {
                link(i, i + 1);
            }
            // B_n: alpha_n short; C_n: alpha_n long.
            if (type == 'B') {
                a[un - 1][un - 2] = -2;
            } else {
                a[un - 2][un - 1] = -2;
            }
            break;
        case 'D':
            for (std::size_t i = 0; i + 2 < un; ++i) {
                link(i, i + 1);
            }
            link(un - 3, un - 1);
            break;
        case 'E':
            // Bourbaki labelling: 1-3-4-5-6-..., with 2 attached to 4.
            link(0, 2);
            link(1, 3);
            for (std::size_t i = 2; i + 1 < un; ++i) {
                link(i, i + 1);
            }
            break;
        case 'F':
            link(0, 1);
            link(2, 3);
            a[1][2] = -1;
            a[2][1] = -2;
            break;
        case 'G':
            a[0][1] = -3;
            a[1][0] = -1;
            break;
    }
    return a;
}

inline std::vector<int_vector> cartan_from_json(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw parse_error(std::string("invalid JSON root system: ") + e.what());
    }
    if (!j.is_object() || !j.contains("cartan") || !j["cartan"].is_array()) {
        throw parse_error("JSON root system must be an object with a \"cartan\" array");
    }
    std::vector<int_vector> a;
    for (const auto &row : j["cartan"]) {
        if (!row.is_array()) {
            throw parse_error("Cartan matrix rows must be arrays");
        }
        int_vector r;
        for (const auto &x : row) {
            if (!x.is_number_integer()) {
                throw parse_error("Cartan matrix entries must be integers");
            }
            r.push_back(x.get<std::int64_t>());
        }
        a.push_back(std::move(r));
    }
    return a;
}

} // namespace detail

/// Builds a root system from "A2", "B3xG2", ... or {"cartan": [[...], ...]}.
inline RootSystem build_root_system(std::string_view spec)
{
    const std::string_view s = detail::trim(spec);
    if (!s.empty() && s.front() == '{') {
        return RootSystem::from_cartan(detail::cartan_from_json(s), std::string(s));
    }
    if (s.empty()) {
        throw parse_error("empty root system spec");
    }
    std::vector<std::vector<int_vector>> blocks;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find('x', start);
        if (end == std::string_view::npos) {
            end = s.size();
        }
        const std::string_view piece = s.substr(start, end - start);
        if (piece.size() < 2 || piece.front() < 'A' || piece.front() > 'G'
            || !detail::is_decimal_integer(piece.substr(1)) || piece[1] == '-' || piece[1] == '+'
            || piece.size() > 4) {
            throw parse_error("malformed root system label '" + std::string(piece) + "'");
        }
        blocks.push_back(detail::cartan_of_type(piece.front(), std::stoi(std::string(piece.substr(1)))));
        start = end + 1;
    }
    std::size_t n = 0;
    for (const auto &b : blocks) {
        n += b.size();
    }
    std::vector<int_vector> a(n, int_vector(n, 0));
    std::size_t off = 0;
    for (const auto &b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[off + i][off + j] = b[i][j];
            }
        }
        off += b.size();
    }
    return RootSystem::from_cartan(a, std::string(s));
}

/// s_beta(lambda) = lambda - (lambda, beta^vee) beta, applied to the real part
/// and linearly to the torsion part.
inline Weight reflect(const RootSystem &rs, const int_vector &beta, const Weight &lam)
{
    if (!rs.is_positive_root(beta)) {
        throw domain_error("reflect: not a positive root of " + rs.label());
    }
    const auto n = rs.rank();
    const rat_vector beta_fund = rs.to_fundamental(beta);
    const rational c = rs.coroot_pairing(lam.real(), beta);
    rat_vector real = lam.real();
    for (std::size_t i = 0; i < n; ++i) {
        real[i] -= c * beta_fund[i];
    }
    // (t, beta) / d_beta times beta written in coroot coordinates (d_j beta_j).
    rational tb(0);
    for (std::size_t j = 0; j < n; ++j) {
        tb += lam.torsion()[j] * beta_fund[j];
    }
    const rational d_beta = rs.norm_sq(beta) / 2;
    rat_vector tors = lam.torsion();
    for (std::size_t j = 0; j < n; ++j) {
        tors[j] -= tb / d_beta * rs.symmetrizers()[j] * rational(beta[j]);
    }
    return Weight(std::move(real), std::move(tors));
}

/// Weyl group element as a reduced word: s_{word[0]} s_{word[1]} ...
struct WeylElement {
    std::vector<std::uint8_t> word;

    std::size_t length() const
    {
        return word.size();
    }
    int sign() const
    {
        return word.size() % 2 == 0 ? 1 : -1;
    }
};

inline rat_vector apply_fund(const RootSystem &rs, const WeylElement &w, rat_vector c)
{
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        rs.simple_reflect_fund(*it, c);
    }
    return c;
}

inline rat_vector apply_coroot(const RootSystem &rs, const WeylElement &w, rat_vector t)
{
    for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) {
        rs.simple_reflect_coroot(*it, t);
    }
    return t;
}

/// Linear action w(lambda) on both real and torsion parts.
inline Weight apply(const RootSystem &rs, const WeylElement &w, const Weight &lam)
{
    return Weight(apply_fund(rs, w, lam.real()), apply_coroot(rs, w, lam.torsion()));
}

inline WeylElement compose(const WeylElement &v, const WeylElement &w)
{
    WeylElement out = v;
    out.word.insert(out.word.end(), w.word.begin(), w.word.end());
    return out;
}

namespace detail
{

struct int_vector_hash {
    std::size_t operator()(const int_vector &v) const noexcept
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

} // namespace detail

/// Breadth-first enumeration of W; each element is stored by a reduced word
/// and identified by its image of 2 rho, which has trivial stabilizer.
inline std::vector<WeylElement> weyl_elements(const RootSystem &rs, std::size_t cap = default_weyl_cap)
{
    const auto n = rs.rank();
    const auto &a = rs.cartan_matrix();
    std::unordered_set<int_vector, detail::int_vector_hash> seen;
    std::vector<WeylElement> elems;
    std::vector<int_vector> images;
    int_vector two_rho(n, 2);
    seen.insert(two_rho);
    elems.push_back(WeylElement{});
    images.push_back(two_rho);
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            int_vector img = images[head];
            const auto ci = img[i];
            for (std::size_t k = 0; k < n; ++k) {
                img[k] -= ci * a[k][i];
            }
            if (!seen.insert(img).second) {
                continue;
            }
            if (elems.size() >= cap) {
                throw enumeration_limit_error("Weyl group of " + rs.label() + " exceeds enumeration cap "
                                              + std::to_string(cap));
            }
            WeylElement w;
            w.word.reserve(elems[head].word.size() + 1);
            w.word.push_back(static_cast<std::uint8_t>(i));
            w.word.insert(w.word.end(), elems[head].word.begin(), elems[head].word.end());
            elems.push_back(std::move(w));
            images.push_back(std::move(img));
        }
    }
    return elems;
}

inline bool is_in_Yq(const rat_vector &torsion)
{
    return std::all_of(torsion.begin(), torsion.end(), [](const rational &t) {
        const rational f = frac(t);
        return f == 0 || f == rational(1, 2);
    });
}

/// Element (zeta, w) of the extended Weyl group Y_q x| W.
struct ExtWeylElement {
    rat_vector zeta;
    WeylElement w;

    static ExtWeylElement identity(std::size_t rank)
    {
        return ExtWeylElement{rat_vector(rank, rational(0)), WeylElement{}};
    }
};

/// (zeta, v)(eta, w) = (zeta + v eta, v w).
inline ExtWeylElement compose(const RootSystem &rs, const ExtWeylElement &a, const ExtWeylElement &b)
{
    rat_vector z = apply_coroot(rs, a.w, b.zeta);
    for (std::size_t i = 0; i < z.size(); ++i) {
        z[i] = frac(z[i] + a.zeta[i]);
    }
    return ExtWeylElement{std::move(z), compose(a.w, b.w)};
}

/// The 2^N elements of Y_q in coroot coordinates.
inline std::vector<rat_vector> y_q_elements(std::size_t rank)
{
    std::vector<rat_vector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
        rat_vector z(rank, rational(0));
        for (std::size_t i = 0; i < rank; ++i) {
            if (mask & (std::size_t{1} << i)) {
                z[i] = rational(1, 2);
            }
        }
        out.push_back(std::move(z));
    }
    return out;
}

/// (zeta, w) . lambda = w(lambda + rho) - rho + zeta.
inline Weight shifted_action(const RootSystem &rs, const ExtWeylElement &x, const Weight &lam)
{
    if (!is_in_Yq(x.zeta)) {
        throw domain_error("extended Weyl element torsion is not in Y_q");
    }
    rat_vector shifted = lam.real();
    for (auto &c : shifted) {
        c += 1;
    }
    rat_vector real = apply_fund(rs, x.w, std::move(shifted));
    for (auto &c : real) {
        c -= 1;
    }
    rat_vector tors = apply_coroot(rs, x.w, lam.torsion());
    for (std::size_t i = 0; i < tors.size(); ++i) {
        tors[i] += x.zeta[i];
    }
    return Weight(std::move(real), std::move(tors));
}

namespace detail
{

/// W-orbit of a weight, closed under simple reflections.
inline std::vector<Weight> weyl_orbit(const RootSystem &rs, const Weight &lam, std::size_t cap)
{
    std::set<Weight> seen{lam};
    std::vector<Weight> queue{lam};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            rat_vector real = queue[head].real(), tors = queue[head].torsion();
            rs.simple_reflect_fund(i, real);
            rs.simple_reflect_coroot(i, tors);
            Weight next(std::move(real), std::move(tors));
            if (seen.insert(next).second) {
                if (queue.size() >= cap) {
                    throw enumeration_limit_error("Weyl orbit in " + rs.label() + " exceeds enumeration cap "
                                                  + std::to_string(cap));
                }
                queue.push_back(std::move(next));
            }
        }
    }
    return queue;
}

inline Weight rho_shifted(const Weight &lam, int sign)
{
    rat_vector real = lam.real();
    for (auto &c : real) {
        c += sign;
    }
    return Weight(std::move(real), lam.torsion());
}

} // namespace detail

/// The orbit of lambda under the shifted action of the extended Weyl group:
/// the W-orbit of lambda + rho, shifted back by rho and translated by Y_q.
inline std::vector<Weight> linkage_orbit(const RootSystem &rs, const Weight &lam, std::size_t cap = default_weyl_cap)
{
    std::set<Weight> orbit;
    const auto yq = y_q_elements(rs.rank());
    for (const auto &w : detail::weyl_orbit(rs, detail::rho_shifted(lam, 1), cap)) {
        const Weight base = detail::rho_shifted(w, -1);
        for (const auto &z : yq) {
            rat_vector tors = base.torsion();
            for (std::size_t i = 0; i < tors.size(); ++i) {
                tors[i] += z[i];
            }
            orbit.insert(Weight(base.real(), std::move(tors)));
        }
    }
    return {orbit.begin(), orbit.end()};
}

inline bool are_linked(const RootSystem &rs, const Weight &lam, const Weight &mu, std::size_t cap = default_weyl_cap)
{
    const auto n = rs.rank();
    if (lam.rank() != n || mu.rank() != n) {
        throw domain_error("weight rank mismatch");
    }
    for (const auto &w : detail::weyl_orbit(rs, detail::rho_shifted(lam, 1), cap)) {
        const Weight base = detail::rho_shifted(w, -1);
        if (base.real() != mu.real()) {
            continue;
        }
        rat_vector t(n);
        for (std::size_t i = 0; i < n; ++i) {
            t[i] = mu.torsion()[i] - base.torsion()[i];
        }
        if (is_in_Yq(t)) {
            return true;
        }
    }
    return false;
}

/// mu <= lambda iff lambda - mu lies in Q+.
inline bool leq(const RootSystem &rs, const Weight &mu, const Weight &lam)
{
    const auto diff = rs.root_lattice_difference(lam, mu);
    return diff && std::all_of(diff->begin(), diff->end(), [](auto x) { return x >= 0; });
}

inline bool is_dominant_integral(const RootSystem &rs, const Weight &lam)
{
    (void)rs;
    if (lam.has_torsion()) {
        return false;
    }
    return std::all_of(lam.real().begin(), lam.real().end(),
                       [](const rational &c) { return is_integral(c) && c >= 0; });
}

/// P_q^+ = P^+ + X_q, where torsion t lies in X_q iff 2 (t, alpha_i) is an
/// integer for every simple root.
inline bool is_in_Pq_plus(const RootSystem &rs, const Weight &lam)
{
    const Weight real_part(lam.real());
    if (!is_dominant_integral(rs, real_part)) {
        return false;
    }
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (!is_integral(2 * rs.torsion_pairing(lam.torsion(), i))) {
            return false;
        }
    }
    return true;
}

} // namespace charcalc

#endif
