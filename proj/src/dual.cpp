#include "hitkernel/dual.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hk::dual {

DividedElement::DividedElement(std::vector<DividedMonomial> terms) {
    for (auto& t : terms) toggle(t);
}

void DividedElement::toggle(const DividedMonomial& m) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

DividedElement& DividedElement::operator+=(const DividedElement& o) {
    for (const auto& t : o.terms_) toggle(t);
    return *this;
}

DividedElement dual_sq(std::uint64_t k, const DividedMonomial& m) {
    DividedElement out;
    const std::size_t d = m.arity();
    std::vector<std::uint32_t> cur = m.orders;
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
        if (left == 0) {
            out.toggle(DividedMonomial{cur});
            return;
        }
        if (i == d) return;
        const std::uint32_t j = m.orders[i];
        for (std::uint64_t ki = 0; ki <= std::min<std::uint64_t>(left, j); ++ki) {
            if (!binom_mod2(std::int64_t(j) - std::int64_t(ki), std::int64_t(ki))) continue;
            cur[i] = std::uint32_t(j - ki);
            rec(i + 1, left - ki);
            cur[i] = j;
        }
    };
    rec(0, k);
    return out;
}

DividedElement dual_sq(std::uint64_t k, const DividedElement& e) {
    DividedElement out;
    for (const auto& m : e.terms()) out += dual_sq(k, m);
    return out;
}

int pairing(const DividedElement& e, const Polynomial& p) {
    if (e.is_zero() || p.is_zero()) return 0;
    if (e.terms().front().arity() != p.arity())
        throw std::invalid_argument("pairing: arity mismatch");
    if (e.terms().front().degree() != p.degree())
        throw std::invalid_argument("pairing: degree mismatch");
    int acc = 0;
    for (const auto& m : p.terms()) {
        DividedMonomial key{m.exponents};
        auto it = std::lower_bound(e.terms().begin(), e.terms().end(), key);
        if (it != e.terms().end() && *it == key) acc ^= 1;
    }
    return acc;
}

std::vector<DividedElement> primitives(std::size_t d, std::uint64_t n, bool all_k,
                                       gf2::Budget budget) {
    if (n == 0) {
        DividedElement one;
        one.toggle(DividedMonomial{std::vector<std::uint32_t>(d, 0)});
        return {one};
    }
    Enumeration domain(d, n);
    std::vector<std::uint64_t> ks;
    if (all_k) {
        for (std::uint64_t k = 1; k <= n; ++k) ks.push_back(k);
    } else {
        for (std::uint64_t k = 1; k <= n; k <<= 1) ks.push_back(k);
    }
    std::vector<gf2::Matrix> ops;
    for (auto k : ks) {
        Enumeration range(d, n - k);
        gf2::Matrix m(range.size(), domain.size());
        for (std::size_t j = 0; j < domain.size(); ++j) {
            DividedMonomial dm{domain.at(j).exponents};
            DividedElement image = dual_sq(k, dm);
            for (const auto& im : image.terms())
                m.rows[range.index_of(Monomial(im.orders))].flip(j);
        }
        ops.push_back(std::move(m));
    }
    gf2::ReducedBasis ker = gf2::common_kernel(ops, budget);
    std::vector<DividedElement> out;
    for (std::size_t r = 0; r < ker.rank(); ++r) {
        DividedElement e;
        for (std::size_t i = 0; i < domain.size(); ++i)
            if (ker.row(r).get(i)) e.toggle(DividedMonomial{domain.at(i).exponents});
        out.push_back(std::move(e));
    }
    return out;
}

DividedMonomial dual_kameko(const DividedMonomial& m) {
    DividedMonomial out = m;
    for (auto& j : out.orders) j = 2 * j + 1;
    return out;
}

DividedElement dual_kameko(const DividedElement& e) {
    DividedElement out;
    for (const auto& m : e.terms()) out.toggle(dual_kameko(m));
    return out;
}

lambda::Element psi(const DividedMonomial& m) {
    thread_local std::map<std::vector<std::uint32_t>, lambda::Element> memo;
    const std::size_t d = m.arity();
    if (d == 0) throw std::invalid_argument("psi: empty monomial");
    if (d == 1) {
        lambda::Element out;
        out.toggle(lambda::Word{m.orders[0]});
        return out;
    }
    if (auto it = memo.find(m.orders); it != memo.end()) return it->second;
    DividedMonomial prefix{std::vector<std::uint32_t>(m.orders.begin(), m.orders.end() - 1)};
    const std::uint32_t jd = m.orders.back();
    const std::uint64_t prefix_deg = prefix.degree();
    lambda::Element out;
    // Sq^{t-jd} lowers the prefix degree by t-jd, so the sum stops there.
    for (std::uint64_t t = jd; t <= jd + prefix_deg; ++t) {
        DividedElement reduced = dual_sq(t - jd, DividedElement({prefix}));
        for (const auto& pm : reduced.terms()) {
            lambda::Element sub = psi(pm);
            for (const auto& w : sub.words()) {
                lambda::Word nw = w;
                nw.push_back(std::uint32_t(t));
                out.toggle(nw);
            }
        }
    }
    memo.emplace(m.orders, out);
    return out;
}

lambda::Element psi(const DividedElement& e) {
    lambda::Element out;
    for (const auto& m : e.terms()) out += psi(m);
    return out;
}

WitnessReport verify_transfer_witness(const WitnessData& w) {
    WitnessReport r;
    const std::uint64_t deg = w.z.is_zero() ? 0 : w.z.terms().front().degree();

    r.z_annihilated = !w.z.is_zero();
    for (std::uint64_t k = 1; k <= deg && r.z_annihilated; ++k)
        if (!dual_sq(k, w.z).is_zero()) r.z_annihilated = false;

    r.pairing_one = pairing(w.z, w.q2) == 1;

    lambda::Element psi_z = lambda::adem_normalize(psi(w.z));
    r.psi_cycle = lambda::differential(psi_z).is_zero();

    lambda::Element expected;
    for (const auto& fw : w.f0bar.words()) {
        lambda::Word nw = fw;
        nw.push_back(3);
        expected.toggle(nw);
    }
    lambda::Element boundary = lambda::differential(lambda::Element({w.bounding}));
    expected += boundary;
    r.psi_matches = lambda::adem_normalize(expected) == psi_z;

    r.ext_dim_one = lambda::homology_dim(5, 21) == 1;
    return r;
}

}  // namespace hk::dual
