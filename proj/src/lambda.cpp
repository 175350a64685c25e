#include "hitkernel/lambda.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hitkernel/gf2.hpp"
#include "hitkernel/poly.hpp"  // binom_mod2

namespace hk::lambda {

Element::Element(std::vector<Word> words) {
    for (auto& w : words) toggle(w);
}

void Element::toggle(const Word& w) {
    auto it = std::lower_bound(words_.begin(), words_.end(), w);
    if (it != words_.end() && *it == w)
        words_.erase(it);
    else
        words_.insert(it, w);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& w : o.words_) toggle(w);
    return *this;
}

bool is_admissible(const Word& w) {
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k + 1] > 2 * w[k]) return false;
    return true;
}

Element adem_normalize(const Element& e) {
    Element out;
    std::vector<Word> stack = e.words();
    while (!stack.empty()) {
        Word w = std::move(stack.back());
        stack.pop_back();
        std::size_t pos = w.size();
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k + 1] > 2 * w[k]) {
                pos = k;
                break;
            }
        }
        if (pos == w.size()) {
            out.toggle(w);
            continue;
        }
        // lambda_i lambda_{2i+delta+1} becomes the sum of
        // C(delta - j - 1, j) lambda_{i+delta-j} lambda_{2i+1+j}
        const std::uint32_t i = w[pos];
        const std::int64_t delta = std::int64_t(w[pos + 1]) - 2 * std::int64_t(i) - 1;
        for (std::int64_t j = 0; j <= delta; ++j) {
            if (!binom_mod2(delta - j - 1, j)) continue;
            Word nw = w;
            nw[pos] = std::uint32_t(std::int64_t(i) + delta - j);
            nw[pos + 1] = std::uint32_t(2 * i + 1 + j);
            stack.push_back(std::move(nw));
        }
    }
    return out;
}

namespace {

Element differential_generator(std::uint32_t m) {
    Element out;
    for (std::int64_t j = 1; j <= std::int64_t(m); ++j) {
        if (!binom_mod2(std::int64_t(m) - j, j)) continue;
        out.toggle(Word{std::uint32_t(std::int64_t(m) - j), std::uint32_t(j - 1)});
    }
    return out;
}

}  // namespace

Element differential(const Element& e) {
    Element out;
    for (const auto& w : e.words()) {
        for (std::size_t k = 0; k < w.size(); ++k) {
            Element dg = differential_generator(w[k]);
            for (const auto& piece : dg.words()) {
                Word nw;
                nw.reserve(w.size() + 1);
                nw.insert(nw.end(), w.begin(), w.begin() + std::ptrdiff_t(k));
                nw.insert(nw.end(), piece.begin(), piece.end());
                nw.insert(nw.end(), w.begin() + std::ptrdiff_t(k) + 1, w.end());
                out.toggle(nw);
            }
        }
    }
    return adem_normalize(out);
}

Element sq0(const Element& e) {
    Element out;
    for (const auto& w : e.words()) {
        Word nw = w;
        for (auto& j : nw) j = 2 * j + 1;
        out.toggle(nw);
    }
    return out;
}

std::vector<Word> admissible_monomials(std::size_t s, std::uint64_t t) {
    std::vector<Word> out;
    if (s == 0) {
        if (t == 0) out.push_back({});
        return out;
    }
    // choose indices left to right; each successor is at most twice its
    // predecessor
    Word cur(s, 0);
    auto rec = [&](auto&& self, std::size_t slot, std::uint64_t left) -> void {
        if (slot + 1 == s) {
            if (slot == 0 || left <= 2 * std::uint64_t(cur[slot - 1])) {
                cur[slot] = std::uint32_t(left);
                out.push_back(cur);
            }
            return;
        }
        std::uint64_t hi = (slot == 0) ? left : std::min<std::uint64_t>(left, 2 * cur[slot - 1]);
        for (std::uint64_t j = 0; j <= hi; ++j) {
            cur[slot] = std::uint32_t(j);
            self(self, slot + 1, left - j);
        }
    };
    rec(rec, 0, t);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Basis {
    std::vector<Word> words;
    std::map<Word, std::size_t> index;
};

Basis basis_at(std::size_t s, std::uint64_t t) {
    Basis b;
    b.words = admissible_monomials(s, t);
    for (std::size_t i = 0; i < b.words.size(); ++i) b.index.emplace(b.words[i], i);
    return b;
}

// rows of the differential matrix from (s, t) to (s+1, t-1)
gf2::Matrix differential_matrix(const Basis& dom, const Basis& cod) {
    gf2::Matrix m(dom.words.size(), std::max<std::size_t>(cod.words.size(), 1));
    if (cod.words.empty()) return m;
    for (std::size_t i = 0; i < dom.words.size(); ++i) {
        Element d = differential(Element({dom.words[i]}));
        for (const auto& w : d.words()) {
            auto it = cod.index.find(w);
            if (it == cod.index.end())
                throw std::logic_error("differential left the admissible basis");
            m.rows[i].flip(it->second);
        }
    }
    return m;
}

}  // namespace

std::size_t homology_dim(std::size_t s, std::uint64_t t) {
    Basis mid = basis_at(s, t);
    if (mid.words.empty()) return 0;
    Basis down = t == 0 ? Basis{} : basis_at(s + 1, t - 1);
    Basis up = s == 0 ? Basis{} : basis_at(s - 1, t + 1);

    gf2::Matrix d_mid = differential_matrix(mid, down);
    std::size_t rank_mid = gf2::rank(d_mid);
    std::size_t rank_up = 0;
    if (!up.words.empty()) {
        gf2::Matrix d_up = differential_matrix(up, mid);
        rank_up = gf2::rank(d_up);
    }
    return mid.words.size() - rank_mid - rank_up;
}

bool same_class(const Element& a, const Element& b) {
    Element na = adem_normalize(a), nb = adem_normalize(b);
    if (na.is_zero() && nb.is_zero()) return true;
    const auto& probe = na.is_zero() ? nb.words() : na.words();
    const std::size_t s = probe.front().size();
    std::uint64_t t = 0;
    for (auto v : probe.front()) t += v;
    if (!differential(na).is_zero() || !differential(nb).is_zero())
        throw std::invalid_argument("same_class: inputs must be cycles");

    Basis mid = basis_at(s, t);
    Element diff = na + nb;
    if (diff.is_zero()) return true;
    gf2::Vector target(mid.words.size());
    for (const auto& w : diff.words()) target.flip(mid.index.at(w));

    gf2::ReducedBasis boundaries(mid.words.size());
    for (const auto& w : admissible_monomials(s - 1, t + 1)) {
        gf2::Vector row(mid.words.size());
        Element dw = differential(Element({w}));
        for (const auto& ww : dw.words()) row.flip(mid.index.at(ww));
        if (row.any()) boundaries.insert_reduce(std::move(row));
    }
    return boundaries.member(target);
}

std::string to_string(const Word& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << 'L' << w[i];
    }
    return os.str();
}

std::string to_string(const Element& e) {
    if (e.is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < e.words().size(); ++i) {
        if (i) os << " + ";
        os << to_string(e.words()[i]);
    }
    return os.str();
}

Word parse_word(const std::string& s) {
    Word w;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
        if (tok.empty() || (tok[0] != 'L' && tok[0] != 'l'))
            throw std::invalid_argument("parse_word: token " + tok);
        w.push_back(std::uint32_t(std::stoul(tok.substr(1))));
    }
    return w;
}

}  // namespace hk::lambda
