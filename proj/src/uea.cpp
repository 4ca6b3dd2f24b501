#include "mhv/uea.hpp"

#include "mhv/errors.hpp"

#include <algorithm>
#include <deque>

namespace mhv {

std::tuple<int, int, long long> OrderKey::key(Generator g) const {
    int block = 0;
    if (split && split->contains(g)) block = 1;
    switch (g.kind) {
        case GenKind::C: return {block, 0, 0};
        case GenKind::L: return {block, 0, 1};
        default: return {block, 1, g.twice};
    }
}

long long PBWMonomial::degree() const {
    long long d = 0;
    for (const auto& [g, e] : factors) d += e;
    return d;
}

bool PBWMonomial::well_ordered(const OrderKey& order) const {
    for (const auto& [g, e] : factors)
        if (e < 1) return false;
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (!order.less(factors[i - 1].first, factors[i].first)) return false;
    return true;
}

std::vector<Generator> PBWMonomial::word() const {
    std::vector<Generator> out;
    for (const auto& [g, e] : factors)
        for (int i = 0; i < e; ++i) out.push_back(g);
    return out;
}

std::string PBWMonomial::str() const {
    if (factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i].first.str();
        if (factors[i].second > 1) out += "^" + std::to_string(factors[i].second);
    }
    return out;
}

UEAElement UEAElement::term(PBWMonomial mono, Scalar coeff) {
    UEAElement e;
    e.add(mono, coeff);
    return e;
}

void UEAElement::add(const PBWMonomial& mono, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar UEAElement::coeff(const PBWMonomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Scalar(0) : it->second;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

UEAElement& UEAElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

std::string UEAElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Scalar a = c;
        if (first) {
            if (a.sign() < 0) { out += "-"; a = -a; }
            first = false;
        } else {
            out += (a.sign() < 0) ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        if (a.is_one() && !m.is_identity()) out += m.str();
        else if (m.is_identity()) out += a.str();
        else out += a.str() + "*" + m.str();
    }
    return out;
}

std::uint64_t rewrite_step_bound(std::size_t word_length) {
    if (word_length <= 1) return 0;
    std::uint64_t below = rewrite_step_bound(word_length - 1);
    std::uint64_t swaps = static_cast<std::uint64_t>(word_length) * (word_length - 1) / 2;
    return swaps * (1 + 2 * below);
}

namespace {

PBWMonomial collect_sorted(const std::vector<Generator>& word) {
    PBWMonomial mono;
    for (Generator g : word) {
        if (!mono.factors.empty() && mono.factors.back().first == g)
            ++mono.factors.back().second;
        else
            mono.factors.push_back({g, 1});
    }
    return mono;
}

} // namespace

UEAElement normal_form(const std::vector<Generator>& word, const OrderKey& order,
                       RewriteStrategy strategy, RewriteStats* stats) {
    UEAElement result;
    std::deque<std::pair<Scalar, std::vector<Generator>>> work;
    work.push_back({Scalar(1), word});
    const std::uint64_t bound = stats ? rewrite_step_bound(word.size()) : 0;

    while (!work.empty()) {
        auto [coeff, w] = std::move(work.front());
        work.pop_front();

        std::size_t pos = w.size(); // sentinel: sorted
        if (strategy == RewriteStrategy::LeftToRight) {
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (order.less(w[i + 1], w[i])) { pos = i; break; }
        } else {
            for (std::size_t i = w.size(); i-- > 1;)
                if (order.less(w[i], w[i - 1])) { pos = i - 1; break; }
        }

        if (pos == w.size()) {
            result.add(collect_sorted(w), coeff);
            continue;
        }

        if (stats) {
            ++stats->steps;
            if (stats->steps > bound)
                fail("RewriteBoundExceeded", "rewrite exceeded its termination bound");
        }

        // x*y -> y*x + [x,y]
        LieElement br = bracket(w[pos], w[pos + 1]);
        std::swap(w[pos], w[pos + 1]);
        for (const auto& [g, c] : br.terms()) {
            std::vector<Generator> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + pos);
            shorter.push_back(g);
            shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
            work.push_back({coeff * c, std::move(shorter)});
        }
        work.push_back({coeff, std::move(w)});
    }
    return result;
}

UEAElement multiply(const UEAElement& a, const UEAElement& b, const OrderKey& order) {
    UEAElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<Generator> word = ma.word();
            std::vector<Generator> tail = mb.word();
            word.insert(word.end(), tail.begin(), tail.end());
            UEAElement nf = normal_form(word, order);
            nf *= ca * cb;
            out += nf;
        }
    return out;
}

std::pair<PBWMonomial, PBWMonomial> split_monomial(const PBWMonomial& mono,
                                                   const SubalgebraSpec& sub,
                                                   const OrderKey& order) {
    if (!order.is_splitting_for(sub))
        fail("NotSplittingOrder", "order does not split off " + sub.str());
    PBWMonomial complement, subpart;
    bool seen_sub = false;
    for (const auto& [g, e] : mono.factors) {
        if (sub.contains(g)) {
            seen_sub = true;
            subpart.factors.push_back({g, e});
        } else {
            if (seen_sub)
                fail("NotSplittingOrder",
                     "complement generator " + g.str() + " after a subalgebra factor");
            complement.factors.push_back({g, e});
        }
    }
    return {complement, subpart};
}

} // namespace mhv
