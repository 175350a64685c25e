#include "hitkernel/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hk {

WeightVector weight_vector(const Monomial& m) {
    WeightVector w;
    std::uint32_t acc = 0;
    for (auto e : m.exponents) acc |= e;
    unsigned bits = 0;
    while (acc >> bits) ++bits;
    w.entries.assign(bits, 0);
    for (auto e : m.exponents)
        for (unsigned t = 0; t < bits; ++t)
            if ((e >> t) & 1u) ++w.entries[t];
    while (!w.entries.empty() && w.entries.back() == 0) w.entries.pop_back();
    return w;
}

int weight_compare(const WeightVector& a, const WeightVector& b) {
    std::size_t n = std::max(a.entries.size(), b.entries.size());
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t x = i < a.entries.size() ? a.entries[i] : 0;
        std::uint32_t y = i < b.entries.size() ? b.entries[i] : 0;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

int monomial_compare(const Monomial& a, const Monomial& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("monomial_compare: arity mismatch");
    if (a.degree() != b.degree()) throw std::invalid_argument("monomial_compare: degree mismatch");
    int wc = weight_compare(weight_vector(a), weight_vector(b));
    if (wc != 0) return wc;
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] < b.exponents[i] ? -1 : 1;
    }
    return 0;
}

Polynomial::Polynomial(std::size_t arity, std::vector<Monomial> terms) : arity_(arity) {
    for (auto& m : terms) add_term(m);
}

Polynomial Polynomial::from_monomial(Monomial m) {
    Polynomial p(m.arity());
    p.terms_.push_back(std::move(m));
    return p;
}

void Polynomial::add_term(const Monomial& m) {
    if (m.arity() != arity_) throw std::invalid_argument("Polynomial::add_term: arity mismatch");
    if (!terms_.empty() && m.degree() != terms_.front().degree())
        throw std::invalid_argument("Polynomial::add_term: inhomogeneous");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, MonomialOrderLess{});
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.arity_ != arity_) throw std::invalid_argument("Polynomial::+=: arity mismatch");
    for (const auto& m : o.terms_) add_term(m);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (o.arity_ != arity_) throw std::invalid_argument("Polynomial::*: arity mismatch");
    Polynomial out(arity_);
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Monomial m = a;
            for (std::size_t i = 0; i < arity_; ++i) m.exponents[i] += b.exponents[i];
            out.add_term(m);
        }
    }
    return out;
}

void sq_monomial_each(std::uint64_t k, const Monomial& m,
                      const std::function<void(const std::vector<std::uint32_t>&)>& out) {
    const std::size_t d = m.arity();
    if (k == 0) {
        out(m.exponents);
        return;
    }
    if (k > m.degree()) return;  // unstability
    // suffix degree bound for pruning
    std::vector<std::uint64_t> suffix(d + 1, 0);
    for (std::size_t i = d; i-- > 0;) suffix[i] = suffix[i + 1] + m.exponents[i];

    std::vector<std::uint32_t> cur(m.exponents);
    // choose k_i a submask of a_i (then C(a_i,k_i) is odd), sum k
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
        if (left == 0) {
            out(cur);
            return;
        }
        if (i == d || left > suffix[i]) return;
        const std::uint32_t a = m.exponents[i];
        // iterate submasks of a, descending, including 0
        std::uint32_t s = a;
        for (;;) {
            if (s <= left) {
                cur[i] = a + s;
                rec(i + 1, left - s);
                cur[i] = a;
            }
            if (s == 0) break;
            s = (s - 1) & a;
        }
    };
    rec(0, k);
}

Polynomial sq_monomial(std::uint64_t k, const Monomial& m) {
    Polynomial p(m.arity());
    sq_monomial_each(k, m, [&](const std::vector<std::uint32_t>& e) {
        p.add_term(Monomial(e));
    });
    return p;
}

Polynomial sq(std::uint64_t k, const Polynomial& p) {
    Polynomial out(p.arity());
    for (const auto& m : p.terms()) out += sq_monomial(k, m);
    return out;
}

Enumeration::Enumeration(std::size_t d, std::uint64_t n) : d_(d), n_(n) {
    if (d == 0) throw std::invalid_argument("Enumeration: d must be positive");
    // C(n+d-1, d-1) monomials; refuse sizes past what an index can address
    long double count = 1.0L;
    for (std::size_t i = 1; i < d; ++i) count = count * (long double)(n + i) / (long double)i;
    if (count > 0x7fffffffL)
        throw std::overflow_error("Enumeration: monomial count exceeds platform limits");
    std::vector<std::uint32_t> cur(d, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
        if (i + 1 == d) {
            cur[i] = std::uint32_t(left);
            monos_.push_back(Monomial(cur));
            return;
        }
        for (std::uint64_t e = 0; e <= left; ++e) {
            cur[i] = std::uint32_t(e);
            rec(i + 1, left - e);
        }
    };
    rec(0, n);
    std::sort(monos_.begin(), monos_.end(), MonomialOrderLess{});
    index_.reserve(monos_.size() * 2);
    for (std::size_t i = 0; i < monos_.size(); ++i) {
        auto [it, fresh] = index_.emplace(key_of(monos_[i]), std::uint32_t(i));
        if (!fresh) throw std::logic_error("Enumeration: key collision");
    }
}

std::uint64_t Enumeration::key_of(const Monomial& m) const {
    // exponents are <= n; pack into 64 bits when possible
    unsigned bits = 1;
    while ((n_ >> bits) != 0) ++bits;
    if (bits * d_ > 64) throw std::invalid_argument("Enumeration: degree too large to index");
    std::uint64_t key = 0;
    for (auto e : m.exponents) key = (key << bits) | e;
    return key;
}

std::size_t Enumeration::index_of(const Monomial& m) const {
    auto r = find(m);
    if (!r) throw std::invalid_argument("Enumeration: monomial not in range");
    return *r;
}

std::optional<std::size_t> Enumeration::find(const Monomial& m) const {
    if (m.arity() != d_ || m.degree() != n_) return std::nullopt;
    auto it = index_.find(key_of(m));
    if (it == index_.end()) return std::nullopt;
    return std::size_t(it->second);
}

std::vector<Monomial> enumerate_monomials(std::size_t d, std::uint64_t n) {
    return Enumeration(d, n).monomials();
}

std::vector<Monomial> enumerate_weight_restricted(std::size_t d, const WeightVector& omega,
                                                  bool strict) {
    std::vector<Monomial> out;
    for (const auto& m : enumerate_monomials(d, omega.degree())) {
        int c = weight_compare(weight_vector(m), omega);
        if (c < 0 || (!strict && c == 0)) out.push_back(m);
    }
    return out;
}

bool is_spike(const Monomial& m) {
    for (auto e : m.exponents)
        if ((std::uint64_t(e) & (std::uint64_t(e) + 1)) != 0) return false;  // e = 2^a - 1
    return true;
}

Monomial minimal_spike(std::size_t d, std::uint64_t n) {
    if (mu(n) > d)
        throw std::invalid_argument("minimal_spike: mu(n) exceeds variable count");
    // exponent heights a_1 > a_2 > ... > a_{r-1} >= a_r > 0, sum (2^a_j - 1) = n
    std::vector<std::uint32_t> heights;
    std::vector<std::vector<std::uint32_t>> found;
    std::function<void(std::uint64_t, unsigned)> rec = [&](std::uint64_t left, unsigned max_h) {
        if (left == 0) {
            found.push_back(heights);
            return;
        }
        if (heights.size() >= d) return;
        for (unsigned a = max_h; a >= 1; --a) {
            std::uint64_t v = (std::uint64_t(1) << a) - 1;
            if (v > left) continue;
            bool last = (v == left);
            // strictly decreasing except the final step may repeat
            if (!heights.empty() && a == heights.back() && !last) continue;
            heights.push_back(a);
            rec(left - v, a);
            heights.pop_back();
        }
    };
    unsigned top = 1;
    while ((std::uint64_t(1) << (top + 1)) - 1 <= n) ++top;
    rec(n, top);
    // keep only candidates matching the strict/weak pattern exactly
    std::vector<std::vector<std::uint32_t>> ok;
    for (auto& h : found) {
        bool good = true;
        for (std::size_t i = 0; i + 1 < h.size(); ++i) {
            bool lastpair = (i + 2 == h.size());
            if (lastpair ? h[i] < h[i + 1] : h[i] <= h[i + 1]) good = false;
        }
        if (good) ok.push_back(h);
    }
    // Singer: the minimal spike is unique; among pattern matches it is the one
    // with the fewest factors (mu(n)) — assert uniqueness at that length.
    std::size_t best = SIZE_MAX;
    for (auto& h : ok) best = std::min(best, h.size());
    std::vector<std::vector<std::uint32_t>> min_ok;
    for (auto& h : ok)
        if (h.size() == best) min_ok.push_back(h);
    if (min_ok.size() != 1) throw std::logic_error("minimal_spike: not unique");
    Monomial m(std::vector<std::uint32_t>(d, 0));
    for (std::size_t i = 0; i < min_ok[0].size(); ++i)
        m.exponents[i] = std::uint32_t((std::uint64_t(1) << min_ok[0][i]) - 1);
    return m;
}

Prefilter singer_prefilter(const Monomial& m) {
    Monomial z = minimal_spike(m.arity(), m.degree());
    return weight_compare(weight_vector(m), weight_vector(z)) < 0 ? Prefilter::Hit
                                                                  : Prefilter::Unknown;
}

std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.arity(); ++i) {
        if (m.exponents[i] == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << 'x' << (i + 1);
        if (m.exponents[i] > 1) os << '^' << m.exponents[i];
    }
    if (first) os << '1';
    return os.str();
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        if (i) os << " + ";
        os << to_string(p.terms()[i]);
    }
    return os.str();
}

std::string to_string(const WeightVector& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.entries.size(); ++i) {
        if (i) os << ',';
        os << w.entries[i];
    }
    os << ')';
    return os.str();
}

Monomial parse_monomial(const std::string& s, std::size_t d) {
    Monomial m(std::vector<std::uint32_t>(d, 0));
    std::istringstream is(s);
    std::string tok;
    bool sawAny = false;
    while (is >> tok) {
        if (tok == "1" && !sawAny) return m;
        if (tok.empty() || tok[0] != 'x') throw std::invalid_argument("parse_monomial: " + tok);
        std::size_t caret = tok.find('^');
        std::size_t var = std::stoul(tok.substr(1, caret == std::string::npos
                                                       ? std::string::npos
                                                       : caret - 1));
        std::uint32_t exp = 1;
        if (caret != std::string::npos) exp = std::uint32_t(std::stoul(tok.substr(caret + 1)));
        if (var < 1 || var > d) throw std::invalid_argument("parse_monomial: variable index");
        m.exponents[var - 1] += exp;
        sawAny = true;
    }
    return m;
}

WeightVector parse_weight(const std::string& s) {
    WeightVector w;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        w.entries.push_back(std::uint32_t(std::stoul(tok)));
    }
    while (!w.entries.empty() && w.entries.back() == 0) w.entries.pop_back();
    return w;
}

}  // namespace hk
