#include "hitkernel/glaction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hk {

Group parse_group(const std::string& s) {
    if (s == "gl" || s == "GL") return Group::GL;
    if (s == "sym" || s == "sym5" || s == "Sym") return Group::Sym;
    throw std::invalid_argument("unknown group: " + s);
}

Substitution Substitution::identity(std::size_t d) {
    Substitution s;
    s.images.resize(d);
    for (std::size_t i = 0; i < d; ++i) s.images[i] = std::uint32_t(1) << i;
    return s;
}

bool Substitution::is_invertible() const {
    // Gaussian elimination on the d x d bit matrix
    std::vector<std::uint32_t> rows = images;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && ((rows[p] >> c) & 1u) == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && ((rows[i] >> c) & 1u)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank == rows.size();
}

std::vector<Substitution> standard_generators(std::size_t d, Group g) {
    if (d < 2) throw std::invalid_argument("standard_generators: d >= 2 required");
    std::vector<Substitution> out;
    for (std::size_t t = 0; t + 1 < d; ++t) {
        Substitution s = Substitution::identity(d);
        std::swap(s.images[t], s.images[t + 1]);
        out.push_back(std::move(s));
    }
    if (g == Group::GL) {
        Substitution s = Substitution::identity(d);
        s.images[0] = 0b11;  // x_1 -> x_1 + x_2
        out.push_back(std::move(s));
    }
    return out;
}

Polynomial apply_substitution(const Substitution& s, const Monomial& m) {
    const std::size_t d = m.arity();
    if (s.arity() != d) throw std::invalid_argument("apply_substitution: arity mismatch");
    // product over variables of (sum of image variables)^exponent; over F_2
    // the expansion keeps the terms whose exponents carry disjoint bit
    // assignments, i.e. each binary digit of the exponent goes to one image
    // variable.
    std::vector<std::vector<std::uint32_t>> terms;  // exponent vectors
    terms.push_back(std::vector<std::uint32_t>(d, 0));
    for (std::size_t j = 0; j < d; ++j) {
        std::uint32_t e = m.exponents[j];
        if (e == 0) continue;
        std::uint32_t mask = s.images[j];
        if (mask == 0) return Polynomial(d);  // variable mapped to zero
        std::vector<std::size_t> vars;
        for (std::size_t i = 0; i < d; ++i)
            if ((mask >> i) & 1u) vars.push_back(i);
        if (vars.size() == 1) {
            for (auto& t : terms) t[vars[0]] += e;
            continue;
        }
        // distribute each set bit of e independently among the image variables
        std::vector<std::uint32_t> bits;
        for (unsigned b = 0; b < 32; ++b)
            if ((e >> b) & 1u) bits.push_back(std::uint32_t(1) << b);
        std::vector<std::vector<std::uint32_t>> next;
        next.reserve(terms.size() << bits.size());
        for (const auto& t : terms) {
            std::vector<std::size_t> choice(bits.size(), 0);
            for (;;) {
                auto nt = t;
                for (std::size_t bi = 0; bi < bits.size(); ++bi)
                    nt[vars[choice[bi]]] += bits[bi];
                next.push_back(std::move(nt));
                std::size_t i = 0;
                while (i < bits.size() && ++choice[i] == vars.size()) choice[i++] = 0;
                if (i == bits.size()) break;
            }
        }
        terms = std::move(next);
    }
    Polynomial out(d);
    for (auto& t : terms) out.add_term(Monomial(t));
    return out;
}

Polynomial apply_substitution(const Substitution& s, const Polynomial& p) {
    Polynomial out(p.arity());
    for (const auto& m : p.terms()) out += apply_substitution(s, m);
    return out;
}

gf2::Matrix action_matrix_on_q(const HitSpace& h, const AdmissibleBasis& basis,
                               const Substitution& s) {
    const std::size_t q = basis.size();
    std::vector<std::size_t> coord;  // admissible monomial -> enumeration index
    coord.reserve(q);
    for (const auto& m : basis.monomials) coord.push_back(h.enumeration().index_of(m));
    std::vector<std::ptrdiff_t> col_of_enum(h.enumeration().size(), -1);
    for (std::size_t i = 0; i < q; ++i) col_of_enum[coord[i]] = std::ptrdiff_t(i);

    // columns are computed in parallel (each owned by one thread), then
    // transposed serially; rows share words, so no thread may write them
    std::vector<gf2::Vector> cols(q, gf2::Vector(q));
    const std::ptrdiff_t qq = std::ptrdiff_t(q);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (std::ptrdiff_t j = 0; j < qq; ++j) {
        Polynomial image = apply_substitution(s, basis.monomials[std::size_t(j)]);
        gf2::Vector nf = h.basis().reduce_to_normal_form(h.to_vector(image));
        for (std::size_t i = 0; i < nf.size(); ++i) {
            if (!nf.get(i)) continue;
            if (col_of_enum[i] < 0)
                throw std::logic_error("action_matrix_on_q: normal form off the admissible basis");
            cols[std::size_t(j)].set(std::size_t(col_of_enum[i]), true);
        }
    }
    gf2::Matrix mat(q, q);
    for (std::size_t j = 0; j < q; ++j)
        for (std::size_t i = 0; i < q; ++i)
            if (cols[j].get(i)) mat.set(i, j, true);
    return mat;
}

namespace {

std::vector<Polynomial> fixed_space(const AdmissibleBasis& basis,
                                    const std::vector<gf2::Matrix>& action) {
    const std::size_t q = basis.size();
    std::vector<gf2::Matrix> shifted;
    shifted.reserve(action.size());
    for (const auto& m : action) {
        gf2::Matrix s = m;
        for (std::size_t i = 0; i < q; ++i) s.rows[i].flip(i);  // M + I
        shifted.push_back(std::move(s));
    }
    gf2::ReducedBasis ker = gf2::common_kernel(shifted);
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < ker.rank(); ++r) {
        Polynomial p(basis.d);
        for (std::size_t i = 0; i < q; ++i)
            if (ker.row(r).get(i)) p.add_term(basis.monomials[i]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<Polynomial> invariants_q(Workspace& ws, std::size_t d, std::uint64_t n, Group g) {
    const HitSpace& h = ws.hit(d, n);
    const AdmissibleBasis& basis = ws.admissible(d, n);
    if (basis.size() == 0) return {};
    std::vector<gf2::Matrix> action;
    for (const auto& s : standard_generators(d, g))
        action.push_back(action_matrix_on_q(h, basis, s));
    return fixed_space(basis, action);
}

std::vector<Polynomial> invariants_on_subspace(Workspace& ws, std::size_t d, std::uint64_t n,
                                               Group g, const std::vector<Monomial>& subspace) {
    const HitSpace& h = ws.hit(d, n);
    const AdmissibleBasis& basis = ws.admissible(d, n);
    std::set<std::vector<std::uint32_t>> allowed;
    for (const auto& m : subspace) allowed.insert(m.exponents);
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (allowed.count(basis.monomials[i].exponents)) cols.push_back(i);
    if (cols.size() != subspace.size())
        throw std::invalid_argument("invariants_on_subspace: subspace not within the admissible basis");

    std::vector<std::ptrdiff_t> pos(basis.size(), -1);
    for (std::size_t i = 0; i < cols.size(); ++i) pos[cols[i]] = std::ptrdiff_t(i);

    std::vector<gf2::Matrix> restricted;
    for (const auto& s : standard_generators(d, g)) {
        gf2::Matrix full = action_matrix_on_q(h, basis, s);
        gf2::Matrix sub(cols.size(), cols.size());
        for (std::size_t jj = 0; jj < cols.size(); ++jj) {
            for (std::size_t ii = 0; ii < basis.size(); ++ii) {
                if (!full.get(ii, cols[jj])) continue;
                if (pos[ii] < 0)
                    throw std::invalid_argument("invariants_on_subspace: subspace not action-closed");
                sub.set(std::size_t(pos[ii]), jj, true);
            }
        }
        restricted.push_back(std::move(sub));
    }

    const std::size_t q = cols.size();
    for (auto& m : restricted)
        for (std::size_t i = 0; i < q; ++i) m.rows[i].flip(i);
    gf2::ReducedBasis ker = gf2::common_kernel(restricted);
    std::vector<Polynomial> out;
    for (std::size_t r = 0; r < ker.rank(); ++r) {
        Polynomial p(d);
        for (std::size_t i = 0; i < q; ++i)
            if (ker.row(r).get(i)) p.add_term(basis.monomials[cols[i]]);
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace hk
