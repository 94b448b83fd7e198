#ifndef SKEWCY_REWRITING_HPP
#define SKEWCY_REWRITING_HPP

// Truncated noncommutative Buchberger completion for homogeneous two-sided ideals.
//
// The ideal is graded, so completing every overlap up to total degree D certifies
// normal forms up to degree D even when the full Groebner basis is infinite.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>
#include <vector>

#include "skewcy/free_algebra.hpp"

namespace skewcy {

/// lead -> tail; the polynomial lead - tail is monic and tail is normal.
struct Rule {
    Word lead;
    NcPolynomial tail;
};

class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(GeneratorTable t, FieldSpec f, int degree_bound)
        : table_(std::move(t)), field_(std::move(f)), degree_bound_(degree_bound), complete_to_(0),
          cache_(std::make_shared<Cache>()) {}

    const GeneratorTable& generators() const { return table_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Rule>& rules() const { return rules_; }
    int degree_bound() const { return degree_bound_; }
    int complete_to() const { return complete_to_; }

    /// Rule whose lead occurs in `letters` at `pos` with that exact length, or -1.
    int rule_at(const std::vector<int>& letters, std::size_t pos, std::size_t len) const {
        std::vector<int> key(letters.begin() + static_cast<long>(pos), letters.begin() + static_cast<long>(pos + len));
        auto it = lead_index_.find(key);
        return it == lead_index_.end() ? -1 : it->second;
    }

    bool is_normal(const Word& w) const {
        for (std::size_t pos = 0; pos < w.length(); ++pos)
            for (std::size_t len : lead_lengths_) {
                if (pos + len > w.length()) break;
                if (rule_at(w.letters(), pos, len) >= 0) return false;
            }
        return true;
    }

    NcPolynomial normal_form(const NcPolynomial& f) const {
        if (f.max_degree() > complete_to_)
            throw Error(Errc::DegreeBoundExceeded, "degree " + std::to_string(f.max_degree()) +
                                                       " exceeds the completed bound " + std::to_string(complete_to_));
        NcPolynomial out(f.field());
        for (const auto& [w, c] : f.terms()) {
            NcPolynomial nw = normal_form_word(w);
            nw *= c;
            out += nw;
        }
        return out;
    }

    /// Normal words of one total degree, deglex ascending.
    std::vector<Word> monomial_basis(int degree) const {
        check_degree(degree);
        std::vector<Word> out;
        std::vector<int> cur;
        enumerate(cur, 0, degree, [&](const std::vector<int>& letters) { out.emplace_back(table_, letters); });
        return out;
    }

    std::vector<Word> monomial_basis(const MultiDegree& degree) const {
        std::vector<Word> out;
        for (auto& w : monomial_basis(total_degree(degree)))
            if (w.multidegree(table_) == degree) out.push_back(std::move(w));
        return out;
    }

    /// h_0 .. h_{complete_to}: the number of normal words in each total degree.
    std::vector<long long> hilbert_prefix() const {
        std::vector<long long> h(static_cast<std::size_t>(complete_to_) + 1, 0);
        std::vector<int> cur;
        enumerate_counts(cur, 0, h);
        return h;
    }

    /// Every overlap ambiguity of degree <= complete_to resolves: both reductions agree.
    bool confluent() const {
        for (const auto& r1 : rules_)
            for (const auto& r2 : rules_)
                for (const auto& [word, a, b] : overlaps(r1, r2, complete_to_)) {
                    (void)word;
                    if (!(normal_form(a) == normal_form(b))) return false;
                }
        return true;
    }

    /// Overlaps u = p c, v = c s of the leads of r1 and r2 (word u s = p v) with the two
    /// one-step reductions tail_u * s and p * tail_v.
    std::vector<std::tuple<Word, NcPolynomial, NcPolynomial>> overlaps(const Rule& r1, const Rule& r2, int max_degree) const {
        std::vector<std::tuple<Word, NcPolynomial, NcPolynomial>> out;
        const auto& u = r1.lead.letters();
        const auto& v = r2.lead.letters();
        for (std::size_t o = 1; o < u.size() && o < v.size(); ++o) {
            if (!std::equal(u.end() - static_cast<long>(o), u.end(), v.begin())) continue;
            Word p = r1.lead.subword(table_, 0, u.size() - o);
            Word s = r2.lead.subword(table_, o, v.size() - o);
            Word w = r1.lead * s;
            if (w.degree() > max_degree) continue;
            NcPolynomial sp = NcPolynomial::monomial(s, field_);
            NcPolynomial pp = NcPolynomial::monomial(p, field_);
            out.emplace_back(w, r1.tail * sp, pp * r2.tail);
        }
        return out;
    }

private:
    friend RewriteSystem buchberger_truncated(const GeneratorTable&, const FieldSpec&, const std::vector<NcPolynomial>&, int);

    struct Cache {
        std::mutex mutex;
        std::map<std::vector<int>, NcPolynomial> words;
    };

    void check_degree(int degree) const {
        if (degree > complete_to_)
            throw Error(Errc::DegreeBoundExceeded, "degree " + std::to_string(degree) + " exceeds the completed bound " +
                                                       std::to_string(complete_to_));
    }

    void add_rule(Rule r) {
        lead_index_[r.lead.letters()] = static_cast<int>(rules_.size());
        lead_lengths_.insert(r.lead.length());
        rules_.push_back(std::move(r));
    }

    void clear_cache() const {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->words.clear();
    }

    NcPolynomial normal_form_word(const Word& w) const {
        {
            std::lock_guard<std::mutex> lock(cache_->mutex);
            if (auto it = cache_->words.find(w.letters()); it != cache_->words.end()) return it->second;
        }
        NcPolynomial result = NcPolynomial::monomial(w, field_);
        bool done = false;
        for (std::size_t pos = 0; pos < w.length() && !done; ++pos)
            for (std::size_t len : lead_lengths_) {
                if (pos + len > w.length()) break;
                int r = rule_at(w.letters(), pos, len);
                if (r < 0) continue;
                Word prefix = w.subword(table_, 0, pos);
                Word suffix = w.subword(table_, pos + len, w.length() - pos - len);
                result = NcPolynomial(field_);
                for (const auto& [t, c] : rules_[static_cast<std::size_t>(r)].tail.terms()) {
                    NcPolynomial part = normal_form_word(prefix * t * suffix);
                    part *= c;
                    result += part;
                }
                done = true;
                break;
            }
        std::lock_guard<std::mutex> lock(cache_->mutex);
        cache_->words.emplace(w.letters(), result);
        return result;
    }

    bool suffix_reducible(const std::vector<int>& letters) const {
        for (std::size_t len : lead_lengths_) {
            if (len > letters.size()) break;
            if (rule_at(letters, letters.size() - len, len) >= 0) return true;
        }
        return false;
    }

    template <typename Emit>
    void enumerate(std::vector<int>& cur, int deg, int target, Emit&& emit) const {
        if (deg == target) {
            emit(cur);
            return;
        }
        for (std::size_t g = 0; g < table_.size(); ++g) {
            int d = table_.total(g);
            if (deg + d > target) continue;
            cur.push_back(static_cast<int>(g));
            if (!suffix_reducible(cur)) enumerate(cur, deg + d, target, emit);
            cur.pop_back();
        }
    }

    void enumerate_counts(std::vector<int>& cur, int deg, std::vector<long long>& h) const {
        ++h[static_cast<std::size_t>(deg)];
        for (std::size_t g = 0; g < table_.size(); ++g) {
            int d = table_.total(g);
            if (deg + d > complete_to_) continue;
            cur.push_back(static_cast<int>(g));
            if (!suffix_reducible(cur)) enumerate_counts(cur, deg + d, h);
            cur.pop_back();
        }
    }

    GeneratorTable table_;
    FieldSpec field_;
    std::vector<Rule> rules_;
    std::map<std::vector<int>, int> lead_index_;
    std::set<std::size_t> lead_lengths_;
    int degree_bound_ = 0;
    int complete_to_ = 0;
    std::shared_ptr<Cache> cache_;
};

/// Completes the homogeneous relations to an interreduced system with every overlap of total
/// degree <= D resolved. S-pairs are processed by ascending degree; within a degree the new
/// rules come from one reduced echelon form, so the output is deterministic.
inline RewriteSystem buchberger_truncated(const GeneratorTable& table, const FieldSpec& field,
                                          const std::vector<NcPolynomial>& relations, int D) {
    std::map<int, std::vector<NcPolynomial>> pending;
    for (const auto& r : relations) {
        if (r.is_zero()) continue;
        if (!r.is_total_homogeneous() || !r.is_homogeneous(table))
            throw Error(Errc::InhomogeneousRelation, r.to_string(table));
        if (r.max_degree() < 1) throw Error(Errc::InhomogeneousRelation, "constant relation " + r.to_string(table));
        if (r.max_degree() > D)
            throw Error(Errc::DegreeBoundExceeded, "relation degree " + std::to_string(r.max_degree()) +
                                                       " exceeds the degree bound " + std::to_string(D));
        if (!(r.field() == field)) throw Error(Errc::FieldMismatch, "relation over " + r.field().to_string());
        pending[r.max_degree()].push_back(r);
    }

    RewriteSystem rs(table, field, D);
    for (int k = 1; k <= D; ++k) {
        rs.complete_to_ = k - 1;
        rs.clear_cache();
        std::vector<NcPolynomial> reduced;
        std::set<Word> columns;
        for (const auto& c : pending[k]) {
            // every word of c has degree k; reduce with the rules of lower degree
            rs.complete_to_ = k;
            NcPolynomial r = rs.normal_form(c);
            rs.complete_to_ = k - 1;
            if (r.is_zero()) continue;
            for (const auto& [w, _] : r.terms()) columns.insert(w);
            reduced.push_back(std::move(r));
        }
        rs.clear_cache();
        if (!reduced.empty()) {
            std::vector<Word> cols(columns.rbegin(), columns.rend());  // deglex descending
            std::map<Word, std::size_t> col_of;
            for (std::size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
            Matrix m(field, reduced.size(), cols.size());
            for (std::size_t r = 0; r < reduced.size(); ++r)
                for (const auto& [w, c] : reduced[r].terms()) m(r, col_of[w]) = c;
            auto pivots = m.row_reduce();
            const std::size_t first_new = rs.rules_.size();
            for (std::size_t i = 0; i < pivots.size(); ++i) {
                NcPolynomial tail(field);
                for (std::size_t c = 0; c < cols.size(); ++c)
                    if (c != pivots[i] && !m(i, c).is_zero()) tail.add_term(cols[c], -m(i, c));
                rs.add_rule(Rule{cols[pivots[i]], std::move(tail)});
            }
            for (std::size_t i = first_new; i < rs.rules_.size(); ++i)
                for (std::size_t j = 0; j < rs.rules_.size(); ++j) {
                    if (j >= first_new && j < i) continue;
                    for (auto& [w, a, b] : rs.overlaps(rs.rules_[i], rs.rules_[j], D))
                        pending[w.degree()].push_back(a - b);
                    if (j != i)
                        for (auto& [w, a, b] : rs.overlaps(rs.rules_[j], rs.rules_[i], D))
                            pending[w.degree()].push_back(a - b);
                }
        }
        pending.erase(k);
        rs.complete_to_ = k;
    }
    rs.complete_to_ = D;
    rs.clear_cache();
    return rs;
}

/// The two systems define the same ideal up to `bound`: every rule of each reduces to zero in
/// the other.
inline bool same_ideal(const RewriteSystem& a, const RewriteSystem& b, int bound) {
    auto contained = [bound](const RewriteSystem& x, const RewriteSystem& y) {
        for (const auto& r : x.rules()) {
            if (r.lead.degree() > bound) continue;
            NcPolynomial p = NcPolynomial::monomial(r.lead, x.field()) - r.tail;
            if (!y.normal_form(p).is_zero()) return false;
        }
        return true;
    };
    return contained(a, b) && contained(b, a);
}

}  // namespace skewcy

#endif
