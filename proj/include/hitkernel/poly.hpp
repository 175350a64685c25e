#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hk {

/// C(a,b) mod 2. Zero whenever b < 0, a < 0 or b > a, so relation sums may
/// run over unbounded index ranges.
inline int binom_mod2(std::int64_t a, std::int64_t b) {
    if (b < 0 || a < 0 || b > a) return 0;
    return ((std::uint64_t(a - b) & std::uint64_t(b)) == 0) ? 1 : 0;
}

/// Number of ones in the dyadic expansion.
inline unsigned alpha(std::uint64_t n) {
    unsigned c = 0;
    for (; n; n &= n - 1) ++c;
    return c;
}

/// Smallest u with alpha(n + u) <= u; equivalently the least number of
/// summands (2^s - 1), s > 0, with sum n.
inline unsigned mu(std::uint64_t n) {
    for (unsigned u = 0;; ++u)
        if (alpha(n + u) <= u) return u;
}

struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> e) : exponents(std::move(e)) {}

    std::size_t arity() const { return exponents.size(); }
    std::uint64_t degree() const {
        std::uint64_t s = 0;
        for (auto e : exponents) s += e;
        return s;
    }
    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

/// Weight vector: entry t counts exponents with bit t-1 set. Trailing zeros
/// are trimmed; comparison is left-lexicographic.
struct WeightVector {
    std::vector<std::uint32_t> entries;

    std::uint64_t degree() const {
        std::uint64_t s = 0;
        for (std::size_t t = 0; t < entries.size(); ++t)
            s += std::uint64_t(entries[t]) << t;
        return s;
    }
    bool operator==(const WeightVector& o) const { return entries == o.entries; }
    bool operator!=(const WeightVector& o) const { return !(*this == o); }
};

WeightVector weight_vector(const Monomial& m);

/// Left-lex comparison, shorter vector padded with zeros: -1, 0, +1.
int weight_compare(const WeightVector& a, const WeightVector& b);

/// The order driving admissibility: weight vectors left-lex first, then
/// exponent vectors left-lex. Only defined for equal arity and degree.
int monomial_compare(const Monomial& a, const Monomial& b);

struct MonomialOrderLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_compare(a, b) < 0;
    }
};

/// Homogeneous polynomial over F_2: canonically sorted set of monomials of
/// one degree. Addition is symmetric difference.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t arity) : arity_(arity) {}
    Polynomial(std::size_t arity, std::vector<Monomial> terms);

    static Polynomial from_monomial(Monomial m);

    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }
    const std::vector<Monomial>& terms() const { return terms_; }

    void add_term(const Monomial& m);       // toggles membership
    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    Polynomial operator*(const Polynomial& o) const;

    bool operator==(const Polynomial& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

private:
    std::size_t arity_ = 0;
    std::vector<Monomial> terms_;  // sorted by monomial_compare, no duplicates
};

/// Unstable left Steenrod action. Sq^k on a monomial expands over the
/// compositions k = k_1 + ... + k_d with every C(a_i, k_i) odd; each k_i
/// ranges over the binary submasks of a_i.
Polynomial sq_monomial(std::uint64_t k, const Monomial& m);
Polynomial sq(std::uint64_t k, const Polynomial& p);

/// Streaming form used by the hit-space builder: calls out(term exponents)
/// once per surviving composition (no polynomial materialised).
void sq_monomial_each(std::uint64_t k, const Monomial& m,
                      const std::function<void(const std::vector<std::uint32_t>&)>& out);

/// All monomials of degree n in d variables, sorted ascending by
/// monomial_compare, with O(1) monomial-to-index lookup.
class Enumeration {
public:
    Enumeration(std::size_t d, std::uint64_t n);

    std::size_t size() const { return monos_.size(); }
    const Monomial& at(std::size_t i) const { return monos_[i]; }
    const std::vector<Monomial>& monomials() const { return monos_; }
    std::size_t d() const { return d_; }
    std::uint64_t n() const { return n_; }

    std::size_t index_of(const Monomial& m) const;
    std::optional<std::size_t> find(const Monomial& m) const;

private:
    std::uint64_t key_of(const Monomial& m) const;
    std::size_t d_;
    std::uint64_t n_;
    std::vector<Monomial> monos_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

std::vector<Monomial> enumerate_monomials(std::size_t d, std::uint64_t n);

/// Monomials of degree deg(omega) with weight <= omega (strict: <), in
/// enumeration order. Spans P_d(omega) resp. P_d^-(omega).
std::vector<Monomial> enumerate_weight_restricted(std::size_t d, const WeightVector& omega,
                                                  bool strict);

bool is_spike(const Monomial& m);

/// The unique spike of degree n with exponent heights a_1 > ... > a_{r-1} >=
/// a_r > 0. Requires mu(n) <= d.
Monomial minimal_spike(std::size_t d, std::uint64_t n);

enum class Prefilter { Hit, Unknown };

/// Singer's criterion: weight below the minimal spike's weight forces the
/// monomial to be hit. Never asserts the converse.
Prefilter singer_prefilter(const Monomial& m);

/// Canonical rendering "x1^a1 x2 ..." with exponent-1 and exponent-0 elision;
/// the zero-degree monomial renders as "1".
std::string to_string(const Monomial& m);
std::string to_string(const Polynomial& p);
std::string to_string(const WeightVector& w);

/// Inverse of to_string(Monomial); arity d. Throws on malformed input.
Monomial parse_monomial(const std::string& s, std::size_t d);
WeightVector parse_weight(const std::string& s);

}  // namespace hk
