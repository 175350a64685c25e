#include "hitkernel/hitspace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hk {

std::string to_string(GeneratorPolicy p) {
    return p == GeneratorPolicy::PowersOfTwo ? "pow2" : "all";
}

GeneratorPolicy parse_policy(const std::string& s) {
    if (s == "pow2") return GeneratorPolicy::PowersOfTwo;
    if (s == "all") return GeneratorPolicy::AllK;
    throw std::invalid_argument("unknown generator policy: " + s);
}

namespace {

std::vector<std::uint64_t> policy_degrees(GeneratorPolicy policy, std::uint64_t n) {
    std::vector<std::uint64_t> ks;
    if (policy == GeneratorPolicy::PowersOfTwo) {
        for (std::uint64_t k = 1; k <= n; k <<= 1) ks.push_back(k);
    } else {
        for (std::uint64_t k = 1; k <= n; ++k) ks.push_back(k);
    }
    return ks;
}

}  // namespace

HitSpace::HitSpace(std::size_t d, std::uint64_t n, GeneratorPolicy policy, gf2::Budget budget,
                   bool parallel)
    : d_(d), n_(n), policy_(policy), enum_(d, n), basis_(enum_.size()) {
    basis_.set_budget(budget);
    const std::size_t batch_target = parallel ? 1024 : 1;
    std::vector<gf2::Vector> batch;
    batch.reserve(batch_target);
    for (std::uint64_t k : policy_degrees(policy, n)) {
        Enumeration sources(d, n - k);
        for (const auto& g : sources.monomials()) {
            gf2::Vector row(enum_.size());
            sq_monomial_each(k, g, [&](const std::vector<std::uint32_t>& e) {
                row.flip(enum_.index_of(Monomial(e)));
            });
            if (!row.any()) continue;
            batch.push_back(std::move(row));
            if (batch.size() >= batch_target) {
                basis_.insert_batch(std::move(batch));
                batch.clear();
                batch.reserve(batch_target);
            }
        }
    }
    if (!batch.empty()) basis_.insert_batch(std::move(batch));
}

gf2::Vector HitSpace::to_vector(const Polynomial& p) const {
    gf2::Vector v(enum_.size());
    for (const auto& m : p.terms()) v.flip(enum_.index_of(m));
    return v;
}

Polynomial HitSpace::to_polynomial(const gf2::Vector& v) const {
    Polynomial p(d_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v.get(i)) p.add_term(enum_.at(i));
    return p;
}

bool HitSpace::hit_test(const Polynomial& p) const {
    if (p.is_zero()) return true;
    return basis_.member(to_vector(p));
}

Polynomial HitSpace::normal_form_q(const Polynomial& p) const {
    if (p.is_zero()) return Polynomial(d_);
    return to_polynomial(basis_.reduce_to_normal_form(to_vector(p)));
}

AdmissibleBasis admissible_basis(const HitSpace& h) {
    AdmissibleBasis b;
    b.d = h.d();
    b.n = h.n();
    b.hit_rank = h.rank();
    for (std::size_t i : h.basis().non_pivots()) {
        b.monomials.push_back(h.enumeration().at(i));
        b.weights.push_back(weight_vector(b.monomials.back()));
    }
    return b;
}

std::pair<AdmissibleBasis, AdmissibleBasis> split_q0_qplus(const AdmissibleBasis& b) {
    AdmissibleBasis zero, plus;
    zero.d = plus.d = b.d;
    zero.n = plus.n = b.n;
    zero.hit_rank = plus.hit_rank = b.hit_rank;
    for (std::size_t i = 0; i < b.monomials.size(); ++i) {
        bool has_zero = std::any_of(b.monomials[i].exponents.begin(),
                                    b.monomials[i].exponents.end(),
                                    [](std::uint32_t e) { return e == 0; });
        auto& dst = has_zero ? zero : plus;
        dst.monomials.push_back(b.monomials[i]);
        dst.weights.push_back(b.weights[i]);
    }
    return {zero, plus};
}

OmegaStratum q_omega(const HitSpace& h, const WeightVector& omega) {
    if (omega.degree() != h.n())
        throw std::invalid_argument("q_omega: weight degree does not match hit space degree");
    const auto& en = h.enumeration();
    // P_d(omega) and P_d^-(omega) are spans of enumeration prefixes: the
    // order sorts by weight first.
    std::size_t k_le = 0, k_lt = 0;
    for (std::size_t i = 0; i < en.size(); ++i) {
        int c = weight_compare(weight_vector(en.at(i)), omega);
        if (c < 0) k_lt = i + 1;
        if (c <= 0) k_le = i + 1;
    }
    // hit ∩ P(omega) = rows with pivot inside the prefix
    gf2::ReducedBasis inter(en.size());
    std::vector<gf2::Vector> rows;
    for (std::size_t r = 0; r < h.basis().rank(); ++r)
        if (std::size_t(h.basis().pivot_of_row(r)) < k_le) rows.push_back(h.basis().row(r));
    inter.insert_batch(std::move(rows));
    gf2::ReducedBasis minus(en.size());
    std::vector<gf2::Vector> units;
    units.reserve(k_lt);
    for (std::size_t i = 0; i < k_lt; ++i) {
        gf2::Vector e(en.size());
        e.set(i, true);
        units.push_back(std::move(e));
    }
    minus.insert_batch(std::move(units));

    OmegaStratum s;
    s.omega = omega;
    std::size_t denom = gf2::subspace_sum_dim(inter, minus);
    s.dim = k_le - denom;
    for (std::size_t i = k_lt; i < k_le; ++i)
        if (!h.basis().is_pivot(i)) s.basis.push_back(en.at(i));
    if (s.basis.size() != s.dim)
        throw std::logic_error("q_omega: stratum basis size disagrees with dimension");
    return s;
}

std::vector<WeightVector> weights_of_degree(std::size_t d, std::uint64_t n) {
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& m : enumerate_monomials(d, n)) seen.insert(weight_vector(m).entries);
    std::vector<WeightVector> out;
    for (const auto& e : seen) out.push_back(WeightVector{e});
    std::sort(out.begin(), out.end(),
              [](const WeightVector& a, const WeightVector& b) { return weight_compare(a, b) < 0; });
    return out;
}

const HitSpace& Workspace::hit(std::size_t d, std::uint64_t n) {
    auto key = std::make_pair(d, n);
    auto it = spaces_.find(key);
    if (it == spaces_.end())
        it = spaces_.emplace(key, std::make_unique<HitSpace>(d, n, policy_, budget_, parallel_)).first;
    return *it->second;
}

const AdmissibleBasis& Workspace::admissible(std::size_t d, std::uint64_t n) {
    auto key = std::make_pair(d, n);
    auto it = bases_.find(key);
    if (it == bases_.end()) it = bases_.emplace(key, admissible_basis(hit(d, n))).first;
    return it->second;
}

std::uint64_t dim_q0_formula(Workspace& ws, std::size_t d, std::uint64_t n) {
    auto choose = [](std::uint64_t a, std::uint64_t b) {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::uint64_t total = 0;
    for (std::size_t r = 1; r < d; ++r) {
        auto [zero, plus] = split_q0_qplus(ws.admissible(r, n));
        total += choose(d, r) * plus.size();
    }
    return total;
}

}  // namespace hk
