#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hk::lambda {

/// Word lambda_{j1} ... lambda_{js}, stored in written order. Bidegree is
/// (length s, internal degree t = sum of indices); homology in bidegree
/// (s, t) computes Ext^{s, s+t}.
using Word = std::vector<std::uint32_t>;

/// F_2 sum of words of one bidegree, kept sorted and duplicate-free.
class Element {
public:
    Element() = default;
    explicit Element(std::vector<Word> words);

    bool is_zero() const { return words_.empty(); }
    const std::vector<Word>& words() const { return words_; }
    void toggle(const Word& w);
    Element& operator+=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    bool operator==(const Element& o) const { return words_ == o.words_; }

private:
    std::vector<Word> words_;
};

/// A word is admissible when j_k <= 2 j_{k+1} throughout; the admissible
/// words form an additive basis.
bool is_admissible(const Word& w);

/// Rewrites every pair lambda_a lambda_b with a >= 2b + 1 through the Adem
/// relation until all surviving words are admissible. Leftmost-first;
/// confluent in effect.
Element adem_normalize(const Element& e);

/// Differential: on a generator lambda_m the sum of C(m-j, j)
/// lambda_{j-1} lambda_{m-j} over j >= 1, extended as an F_2 derivation over
/// concatenation, then normalized. Bidegree (s, t) -> (s+1, t-1).
Element differential(const Element& e);

/// Factorwise lambda_j -> lambda_{2j+1}; a chain map. (s, t) -> (s, 2t+s).
Element sq0(const Element& e);

/// All admissible words of length s and degree t, lexicographically sorted.
std::vector<Word> admissible_monomials(std::size_t s, std::uint64_t t);

/// dim H^{s,t} = dim ker(d on (s,t)) - rank(d from (s-1, t+1)).
std::size_t homology_dim(std::size_t s, std::uint64_t t);

/// Both inputs must be cycles of one bidegree; true iff they differ by a
/// boundary from (s-1, t+1).
bool same_class(const Element& a, const Element& b);

/// "L3 L5 L6 L4" rendering used by the CLI and fixtures.
std::string to_string(const Word& w);
std::string to_string(const Element& e);
Word parse_word(const std::string& s);

}  // namespace hk::lambda
