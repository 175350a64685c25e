#include "hitkernel/maps.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hk {

Monomial rho_monomial(std::size_t k, std::size_t d, const Monomial& m) {
    if (k < 1 || k > d) throw std::invalid_argument("rho: k out of range");
    if (m.arity() != d - 1) throw std::invalid_argument("rho: arity mismatch");
    Monomial out(std::vector<std::uint32_t>(d, 0));
    for (std::size_t j = 1; j <= d - 1; ++j)
        out.exponents[(j < k ? j : j + 1) - 1] = m.exponents[j - 1];
    return out;
}

Polynomial rho(std::size_t k, std::size_t d, const Polynomial& p) {
    Polynomial out(d);
    for (const auto& m : p.terms()) out.add_term(rho_monomial(k, d, m));
    return out;
}

bool valid_pi_index(const PiIndex& idx, std::size_t d) {
    if (idx.k < 1 || idx.k > d) return false;
    if (idx.K.size() >= d) return false;
    std::size_t prev = idx.k;
    for (std::size_t p : idx.K) {
        if (p <= prev || p > d) return false;
        prev = p;
    }
    return true;
}

std::vector<PiIndex> all_pi_indices(std::size_t d, bool nonempty_only) {
    std::vector<PiIndex> out;
    for (std::size_t k = 1; k <= d; ++k) {
        std::vector<std::size_t> pool;
        for (std::size_t p = k + 1; p <= d; ++p) pool.push_back(p);
        std::size_t subsets = std::size_t(1) << pool.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            PiIndex idx;
            idx.k = k;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if ((mask >> i) & 1) idx.K.push_back(pool[i]);
            if (idx.K.size() >= d) continue;
            if (nonempty_only && idx.K.empty()) continue;
            out.push_back(std::move(idx));
        }
    }
    return out;
}

Polynomial pi(const PiIndex& idx, std::size_t d, const Polynomial& p) {
    if (!valid_pi_index(idx, d)) throw std::invalid_argument("pi: malformed (k;K)");
    if (p.arity() != d) throw std::invalid_argument("pi: arity mismatch");
    // images of the d variables as polynomials in d-1 variables
    std::vector<Polynomial> images;
    images.reserve(d);
    for (std::size_t j = 1; j <= d; ++j) {
        Polynomial img(d - 1);
        if (j < idx.k) {
            Monomial v(std::vector<std::uint32_t>(d - 1, 0));
            v.exponents[j - 1] = 1;
            img.add_term(v);
        } else if (j == idx.k) {
            for (std::size_t q : idx.K) {
                Monomial v(std::vector<std::uint32_t>(d - 1, 0));
                v.exponents[q - 2] = 1;  // x_{q-1}
                img.add_term(v);
            }
        } else {
            Monomial v(std::vector<std::uint32_t>(d - 1, 0));
            v.exponents[j - 2] = 1;
            img.add_term(v);
        }
        images.push_back(std::move(img));
    }
    Polynomial out(d - 1);
    for (const auto& m : p.terms()) {
        Polynomial term(d - 1);
        term.add_term(Monomial(std::vector<std::uint32_t>(d - 1, 0)));  // 1
        for (std::size_t j = 0; j < d; ++j) {
            for (std::uint32_t e = 0; e < m.exponents[j]; ++e) {
                term = term * images[j];
                if (term.is_zero()) break;
            }
            if (term.is_zero()) break;
        }
        out += term;
    }
    return out;
}

namespace {

// x_(K,u) exponents on the k_m, for K of length r and 1 <= u <= r
std::uint32_t x_ku_exponent_on_ku(std::size_t r, std::size_t u) {
    std::uint32_t e = 0;
    for (std::size_t m = 1; m <= u; ++m) e += std::uint32_t(1) << (r - m);
    return e;
}

}  // namespace

Monomial phi(const PiIndex& idx, std::size_t d, const Monomial& m) {
    if (!valid_pi_index(idx, d)) throw std::invalid_argument("phi: malformed (k;K)");
    if (m.arity() != d - 1) throw std::invalid_argument("phi: arity mismatch");
    if (idx.K.empty()) return rho_monomial(idx.k, d, m);

    const std::size_t r = idx.K.size();
    const std::uint32_t full = (std::uint32_t(1) << r) - 1;  // 2^r - 1

    // exponent of x in position k_m - 1 (source variable feeding x_{k_m})
    auto t_of = [&](std::size_t q) -> std::uint32_t { return m.exponents[idx.K[q] - 2]; };

    // u = first position whose exponent differs from 2^r - 1, which must then
    // exceed it; when every position equals 2^r - 1 the map still applies
    // with u = 1 (the paper's worked cases pin this reading: phi_(k;K) is
    // nonzero on x_1...x_{d-1} and on its 2^m - 1 powers for m <= r).
    std::size_t u = 1;
    bool all_full = true;
    for (std::size_t q = 1; q <= r; ++q) {
        if (t_of(q - 1) != full) {
            u = q;
            all_full = false;
            break;
        }
    }
    if (!all_full && t_of(u - 1) < full) return Monomial{};
    // alpha_{r-m}(t_{k_u - 1}) = 1 for 1 <= m <= u
    for (std::size_t mm = 1; mm <= u; ++mm)
        if (((t_of(u - 1) >> (r - mm)) & 1u) == 0) return Monomial{};
    // alpha_{r-m}(t_{k_m - 1}) = 1 for u < m <= r
    for (std::size_t mm = u + 1; mm <= r; ++mm)
        if (((t_of(mm - 1) >> (r - mm)) & 1u) == 0) return Monomial{};

    Monomial out = rho_monomial(idx.k, d, m);
    out.exponents[idx.k - 1] += full;                       // x_k^{2^r - 1}
    out.exponents[idx.K[u - 1] - 1] -= x_ku_exponent_on_ku(r, u);
    for (std::size_t mm = u + 1; mm <= r; ++mm)
        out.exponents[idx.K[mm - 1] - 1] -= std::uint32_t(1) << (r - mm);
    return out;
}

std::vector<Monomial> phi_bar(std::size_t d, const std::vector<Monomial>& u) {
    std::set<std::vector<std::uint32_t>> seen;
    // Phi^0: rho images
    for (std::size_t k = 1; k <= d; ++k)
        for (const auto& m : u) seen.insert(rho_monomial(k, d, m).exponents);
    // Phi^+: phi images with every exponent positive
    for (const auto& idx : all_pi_indices(d, /*nonempty_only=*/true)) {
        for (const auto& m : u) {
            Monomial im = phi(idx, d, m);
            if (im.arity() == 0) continue;
            bool positive = std::all_of(im.exponents.begin(), im.exponents.end(),
                                        [](std::uint32_t e) { return e > 0; });
            if (positive) seen.insert(im.exponents);
        }
    }
    std::vector<Monomial> out;
    out.reserve(seen.size());
    for (const auto& e : seen) out.push_back(Monomial(e));
    return out;
}

ConjectureReport check_sum_conjecture(Workspace& ws, std::size_t d, const WeightVector& omega) {
    if (d < 2) throw std::invalid_argument("check_sum_conjecture: needs d >= 2");
    ConjectureReport rep;
    rep.omega = omega;
    const std::uint64_t n = omega.degree();
    std::vector<Monomial> source;
    if (n >= 1) {
        for (const auto& m : ws.admissible(d - 1, n).monomials)
            if (weight_compare(weight_vector(m), omega) <= 0) source.push_back(m);
    }
    std::vector<Monomial> image = phi_bar(d, source);
    rep.image_size = image.size();
    if (image.empty()) return rep;

    const auto& target = ws.admissible(d, n);
    std::set<std::vector<std::uint32_t>> target_set;
    for (const auto& m : target.monomials) target_set.insert(m.exponents);
    for (const auto& m : image) {
        if (weight_compare(weight_vector(m), omega) > 0)
            throw std::logic_error("phi_bar produced an image of larger weight");
        if (!target_set.count(m.exponents)) {
            rep.holds = false;
            rep.violations.push_back(m);
        }
    }
    return rep;
}

}  // namespace hk
