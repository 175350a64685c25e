#include "hitkernel/kameko.hpp"

#include <stdexcept>

namespace hk {

std::optional<Monomial> kameko_down(const Monomial& m) {
    Monomial out(std::vector<std::uint32_t>(m.arity(), 0));
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if ((m.exponents[i] & 1u) == 0) return std::nullopt;
        out.exponents[i] = (m.exponents[i] - 1) / 2;
    }
    return out;
}

Polynomial kameko_down(const Polynomial& p) {
    Polynomial out(p.arity());
    for (const auto& m : p.terms())
        if (auto img = kameko_down(m)) out.add_term(*img);
    return out;
}

Monomial kameko_up(const Monomial& m) {
    Monomial out = m;
    for (auto& e : out.exponents) e = 2 * e + 1;
    return out;
}

KamekoKernel kernel_kameko_basis(Workspace& ws, std::size_t d, std::uint64_t n) {
    KamekoKernel out;
    out.d = d;
    out.low_degree = n;
    out.high_degree = 2 * n + d;
    const auto& high = ws.admissible(d, out.high_degree);
    const auto& low_space = ws.hit(d, n);
    out.high_dim = high.size();
    out.low_dim = low_space.quotient_dim();

    gf2::ReducedBasis image_span(low_space.enumeration().size());
    for (const auto& b : high.monomials) {
        auto img = kameko_down(b);
        bool in_kernel = true;
        if (img) {
            Polynomial p = Polynomial::from_monomial(*img);
            in_kernel = low_space.hit_test(p);
            if (!in_kernel) image_span.insert_reduce(low_space.to_vector(p));
        }
        if (in_kernel) out.kernel.push_back(b);
    }
    // surjectivity: images plus the hit space span the whole degree
    out.surjective =
        gf2::subspace_sum_dim(image_span, low_space.basis()) == low_space.enumeration().size();
    return out;
}

}  // namespace hk
