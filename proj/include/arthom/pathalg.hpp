// Bound quiver algebras kQ/I.
//
// Path convention: p*q means "apply q first, then p", so the relation
// gamma*beta*alpha along 1 -> 2 -> 3 -> 4 reads exactly as printed. A word
// stores its arrows in application order: g*b*a is stored as [a, b, g].
//
// Normal forms come from a two-sided Groebner completion of the relation
// set under the length-lexicographic order (arrow order = declaration
// order). The basis is the set of normal words; it must stay below the
// configured path-length cap, which also certifies admissibility of the
// ideal (nilpotency of the arrow ideal modulo relations).

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "arthom/matrix.hpp"

namespace arthom {

struct Quiver {
    struct Arrow {
        std::string name;
        int src = 0;
        int tgt = 0;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int n_arrows() const { return static_cast<int>(arrows.size()); }

    int vertex_index(const std::string& label) const
    {
        for (int i = 0; i < n_vertices(); ++i)
            if (vertices[i] == label) return i;
        throw error("unknown vertex '" + label + "'");
    }
    int arrow_index(const std::string& name) const
    {
        for (int i = 0; i < n_arrows(); ++i)
            if (arrows[i].name == name) return i;
        throw error("unknown arrow '" + name + "'");
    }

    void validate() const
    {
        std::set<std::string> seen;
        for (const auto& v : vertices)
            if (!seen.insert(v).second) throw error("duplicate vertex label '" + v + "'");
        std::set<std::string> aseen;
        for (const auto& a : arrows) {
            if (!aseen.insert(a.name).second) throw error("duplicate arrow name '" + a.name + "'");
            if (a.src < 0 || a.src >= n_vertices() || a.tgt < 0 || a.tgt >= n_vertices())
                throw error("arrow '" + a.name + "' references undeclared vertex");
        }
    }

    Quiver reversed() const
    {
        Quiver q;
        q.vertices = vertices;
        for (const auto& a : arrows) q.arrows.push_back({a.name, a.tgt, a.src});
        return q;
    }
};

/// A path: arrows listed in application order (first applied first).
/// Trivial paths have an empty arrow list and carry their vertex.
struct Word {
    int source = 0;
    std::vector<int> arrows;

    int length() const { return static_cast<int>(arrows.size()); }
    bool trivial() const { return arrows.empty(); }

    // length-lexicographic order, arrow ids tie-broken by source for e_i
    bool operator<(const Word& o) const
    {
        if (length() != o.length()) return length() < o.length();
        if (arrows != o.arrows) return arrows < o.arrows;
        return source < o.source;
    }
    bool operator==(const Word& o) const = default;
};

inline int word_target(const Quiver& q, const Word& w)
{
    return w.trivial() ? w.source : q.arrows[w.arrows.back()].tgt;
}

inline bool word_composable(const Quiver& q, const Word& first, const Word& then)
{
    return word_target(q, first) == (then.trivial() ? then.source : q.arrows[then.arrows.front()].src);
}

/// "first, then": concatenation in application order.
inline Word word_concat(const Word& first, const Word& then)
{
    Word w;
    w.source = first.source;
    w.arrows = first.arrows;
    w.arrows.insert(w.arrows.end(), then.arrows.begin(), then.arrows.end());
    return w;
}

inline void validate_word(const Quiver& q, const Word& w)
{
    if (w.source < 0 || w.source >= q.n_vertices()) throw error("path has invalid source vertex");
    int at = w.source;
    for (int a : w.arrows) {
        if (a < 0 || a >= q.n_arrows()) throw error("path references unknown arrow");
        if (q.arrows[a].src != at) throw error("ill-formed path: arrows are not composable");
        at = q.arrows[a].tgt;
    }
}

template <class F>
using Element = std::map<Word, typename F::Elem>;

template <class F>
struct Relation {
    // terms: coefficient * word; all words parallel, length >= 2
    std::vector<std::pair<typename F::Elem, Word>> terms;
};

template <class F>
class BoundQuiverAlgebra;

template <class F>
using AlgebraPtr = std::shared_ptr<const BoundQuiverAlgebra<F>>;

template <class F>
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra<F>> {
public:
    using Elem = typename F::Elem;
    using Elt = Element<F>;

    static AlgebraPtr<F> make(F field, Quiver quiver, std::vector<Relation<F>> relations,
                              int path_cap = 64)
    {
        auto a = std::shared_ptr<BoundQuiverAlgebra>(new BoundQuiverAlgebra(
            std::move(field), std::move(quiver), std::move(relations), path_cap));
        return a;
    }

    const F& field() const { return field_; }
    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation<F>>& relations() const { return relations_; }
    int path_cap() const { return path_cap_; }

    int n_vertices() const { return quiver_.n_vertices(); }
    int n_arrows() const { return quiver_.n_arrows(); }
    int dim() const { return static_cast<int>(basis_.size()); }

    const std::vector<Word>& basis() const { return basis_; }
    int basis_index(const Word& w) const
    {
        auto it = basis_index_.find(w);
        return it == basis_index_.end() ? -1 : it->second;
    }
    int word_target(const Word& w) const { return arthom::word_target(quiver_, w); }

    /// Basis words with the given source vertex (deglex order).
    std::vector<Word> basis_with_source(int v) const
    {
        std::vector<Word> r;
        for (const auto& w : basis_)
            if (w.source == v) r.push_back(w);
        return r;
    }
    /// Basis words from vertex i to vertex j (deglex order).
    std::vector<Word> paths_from_to(int i, int j) const
    {
        std::vector<Word> r;
        for (const auto& w : basis_)
            if (w.source == i && word_target(w) == j) r.push_back(w);
        return r;
    }

    Elt idempotent(int v) const
    {
        Elt e;
        e[Word{v, {}}] = field_.one();
        return e;
    }
    Elt arrow_element(int a) const
    {
        Elt e;
        e[Word{quiver_.arrows[a].src, {a}}] = field_.one();
        return e;
    }
    Elt identity_element() const
    {
        Elt e;
        for (int v = 0; v < n_vertices(); ++v) e[Word{v, {}}] = field_.one();
        return e;
    }

    /// Canonical representative modulo the relation ideal. Linear over the
    /// field and idempotent. Input words are validated against the quiver.
    Elt normal_form(const Elt& x) const
    {
        for (const auto& [w, c] : x) validate_word(quiver_, w);
        return reduce(x);
    }

    /// x * y with the "apply y first" convention; non-composable term pairs
    /// multiply to zero, as in the path algebra.
    Elt mul(const Elt& x, const Elt& y) const
    {
        Elt acc;
        for (const auto& [wx, cx] : x) {
            if (field_.is_zero(cx)) continue;
            for (const auto& [wy, cy] : y) {
                if (field_.is_zero(cy)) continue;
                if (!word_composable(quiver_, wy, wx)) continue;
                add_term(acc, word_concat(wy, wx), field_.mul(cx, cy));
            }
        }
        return reduce(acc);
    }

    Elt add(const Elt& x, const Elt& y) const
    {
        Elt acc = x;
        for (const auto& [w, c] : y) add_term(acc, w, c);
        prune(acc);
        return acc;
    }
    Elt scale(const Elt& x, const Elem& s) const
    {
        Elt acc;
        for (const auto& [w, c] : x) {
            Elem v = field_.mul(c, s);
            if (!field_.is_zero(v)) acc[w] = v;
        }
        return acc;
    }

    /// Express a (normal-form) element as a coefficient vector over the basis.
    Mat<F> to_vector(const Elt& x) const
    {
        Mat<F> v(field_, dim(), 1);
        for (const auto& [w, c] : x) {
            int idx = basis_index(w);
            if (idx < 0) throw defect_error("to_vector: element is not in normal form");
            v.at(idx, 0) = c;
        }
        return v;
    }

    std::string word_to_string(const Word& w) const
    {
        if (w.trivial()) return "e_" + quiver_.vertices[w.source];
        std::string s;
        for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it) {
            if (!s.empty()) s += "*";
            s += quiver_.arrows[*it].name;
        }
        return s;
    }

    /// The opposite algebra: arrows reversed, relation paths reversed.
    /// Cached; opposite(opposite(a)) is the same object while a is alive.
    AlgebraPtr<F> opposite() const
    {
        std::lock_guard<std::mutex> lock(op_mutex_);
        if (auto back = op_back_.lock()) return back;
        if (op_cache_) return op_cache_;
        std::vector<Relation<F>> op_rels;
        for (const auto& r : relations_) {
            Relation<F> nr;
            for (const auto& [c, w] : r.terms) {
                Word rw;
                rw.arrows.assign(w.arrows.rbegin(), w.arrows.rend());
                rw.source = arthom::word_target(quiver_, w);
                nr.terms.emplace_back(c, rw);
            }
            op_rels.push_back(std::move(nr));
        }
        auto op = make(field_, quiver_.reversed(), std::move(op_rels), path_cap_);
        op->op_back_ = this->weak_from_this();
        op_cache_ = op;
        return op;
    }

private:
    BoundQuiverAlgebra(F field, Quiver quiver, std::vector<Relation<F>> relations, int path_cap)
        : field_(std::move(field)), quiver_(std::move(quiver)), relations_(std::move(relations)),
          path_cap_(path_cap)
    {
        quiver_.validate();
        for (const auto& r : relations_) validate_relation(r);
        complete();
        enumerate_basis();
        verify_admissible();
    }

    /// The ideal must contain a power of the arrow ideal: the spans
    /// L_m = { normal forms of length-m words } have to reach zero. A finite
    /// basis alone does not guarantee this; think of the ideal (x^2 - x^3),
    /// whose quotient has x^2 idempotent.
    void verify_admissible() const
    {
        bool monomial = true;
        for (const auto& rule : rules_) monomial = monomial && rule.tail.empty();
        if (monomial) return;  // bounded word length already gives nilpotency
        std::vector<Elt> layer;
        for (int a = 0; a < n_arrows(); ++a) layer.push_back(arrow_element(a));
        for (int m = 1; m <= path_cap_; ++m) {
            if (layer.empty()) return;
            std::vector<Elt> next;  // echelonized span of arrow * layer
            for (int a = 0; a < n_arrows(); ++a)
                for (const auto& x : layer) {
                    Elt prod = mul(arrow_element(a), x);
                    bool changed = true;
                    while (changed && !prod.empty()) {
                        changed = false;
                        for (const auto& seen : next) {
                            auto lead = std::prev(seen.end());
                            auto it = prod.find(lead->first);
                            if (it == prod.end()) continue;
                            Elem factor = field_.div(it->second, lead->second);
                            for (const auto& [w, c] : seen)
                                add_term(prod, w, field_.neg(field_.mul(factor, c)));
                            changed = true;
                            break;
                        }
                    }
                    if (!prod.empty()) next.push_back(std::move(prod));
                }
            layer = std::move(next);
        }
        throw error("ideal is not admissible: the arrow ideal is not nilpotent modulo relations "
                    "(checked up to power " + std::to_string(path_cap_) + ")");
    }

    void validate_relation(const Relation<F>& r) const
    {
        if (r.terms.empty()) throw error("relation with no terms");
        int src = -1, tgt = -1;
        for (const auto& [c, w] : r.terms) {
            validate_word(quiver_, w);
            if (w.length() < 2)
                throw error("relation term '" + word_to_string(w) +
                            "' has length < 2: ideal is not admissible");
            int wt = arthom::word_target(quiver_, w);
            if (src < 0) {
                src = w.source;
                tgt = wt;
            } else if (src != w.source || tgt != wt) {
                throw error("relation mixes non-parallel paths");
            }
        }
    }

    struct Rule {
        Word lead;
        Elt tail;  // lead rewrites to tail; all tail words < lead
    };

    static bool contains_subword(const std::vector<int>& hay, const std::vector<int>& needle,
                                 int* pos = nullptr)
    {
        if (needle.empty() || needle.size() > hay.size()) return false;
        for (size_t i = 0; i + needle.size() <= hay.size(); ++i) {
            bool ok = true;
            for (size_t j = 0; j < needle.size(); ++j)
                if (hay[i + j] != needle[j]) {
                    ok = false;
                    break;
                }
            if (ok) {
                if (pos) *pos = static_cast<int>(i);
                return true;
            }
        }
        return false;
    }

    void add_term(Elt& acc, const Word& w, const Elem& c) const
    {
        auto it = acc.find(w);
        if (it == acc.end()) {
            if (!field_.is_zero(c)) acc.emplace(w, c);
        } else {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) acc.erase(it);
        }
    }
    void prune(Elt& acc) const
    {
        for (auto it = acc.begin(); it != acc.end();) {
            if (field_.is_zero(it->second))
                it = acc.erase(it);
            else
                ++it;
        }
    }

    Elt reduce_by(const std::vector<Rule>& rules, Elt x) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            // scan terms from the largest word down
            for (auto it = x.rbegin(); it != x.rend(); ++it) {
                const Word& w = it->first;
                for (const auto& rule : rules) {
                    int pos = -1;
                    if (!contains_subword(w.arrows, rule.lead.arrows, &pos)) continue;
                    Elem coeff = it->second;
                    Word prefix{w.source, std::vector<int>(w.arrows.begin(), w.arrows.begin() + pos)};
                    std::vector<int> suffix(w.arrows.begin() + pos + rule.lead.length(), w.arrows.end());
                    x.erase(std::next(it).base());
                    for (const auto& [tw, tc] : rule.tail) {
                        Word nw = prefix;
                        nw.arrows.insert(nw.arrows.end(), tw.arrows.begin(), tw.arrows.end());
                        nw.arrows.insert(nw.arrows.end(), suffix.begin(), suffix.end());
                        add_term(x, nw, field_.mul(coeff, tc));
                    }
                    changed = true;
                    break;
                }
                if (changed) break;
            }
        }
        return x;
    }

    Elt reduce(const Elt& x) const { return reduce_by(rules_, x); }

    std::optional<Rule> make_rule(Elt x) const
    {
        prune(x);
        if (x.empty()) return std::nullopt;
        auto lead_it = std::prev(x.end());
        Word lead = lead_it->first;
        Elem c = lead_it->second;
        if (lead.length() > path_cap_)
            throw error("relation completion exceeded the path-length cap " +
                        std::to_string(path_cap_) + "; basis may not be finite");
        Rule r;
        r.lead = lead;
        Elem neg_inv = field_.neg(field_.inv(c));
        for (auto it = x.begin(); it != lead_it; ++it) r.tail[it->first] = field_.mul(it->second, neg_inv);
        return r;
    }

    void complete()
    {
        std::vector<Elt> pending;
        for (const auto& r : relations_) {
            Elt e;
            for (const auto& [c, w] : r.terms) add_term(e, w, c);
            pending.push_back(std::move(e));
        }
        size_t budget = 100000;
        while (!pending.empty()) {
            if (--budget == 0) throw error("relation completion did not terminate within budget");
            Elt e = reduce_by(rules_, pending.back());
            pending.pop_back();
            auto rule = make_rule(std::move(e));
            if (!rule) continue;
            // retire rules whose lead is now reducible; requeue them
            std::vector<Rule> kept;
            for (auto& old : rules_) {
                if (contains_subword(old.lead.arrows, rule->lead.arrows)) {
                    Elt back = old.tail;
                    for (auto& [w, c] : back) c = field_.neg(c);
                    add_term(back, old.lead, field_.one());
                    pending.push_back(std::move(back));
                } else {
                    kept.push_back(std::move(old));
                }
            }
            rules_ = std::move(kept);
            // overlap ambiguities with every rule including the new one
            auto queue_overlaps = [&](const Rule& a, const Rule& b) {
                int la = a.lead.length(), lb = b.lead.length();
                for (int k = 1; k < std::min(la, lb); ++k) {
                    // last k arrows of a == first k arrows of b
                    bool match = true;
                    for (int j = 0; j < k; ++j)
                        if (a.lead.arrows[la - k + j] != b.lead.arrows[j]) {
                            match = false;
                            break;
                        }
                    if (!match) continue;
                    std::vector<int> ext(b.lead.arrows.begin() + k, b.lead.arrows.end());
                    // reduce the ambiguity word both ways and subtract
                    Elt via_a, via_b;
                    for (const auto& [tw, tc] : a.tail) {
                        Word nw = tw;
                        nw.arrows.insert(nw.arrows.end(), ext.begin(), ext.end());
                        add_term(via_a, nw, tc);
                    }
                    std::vector<int> pre(a.lead.arrows.begin(), a.lead.arrows.begin() + (la - k));
                    for (const auto& [tw, tc] : b.tail) {
                        Word nw{a.lead.source, pre};
                        nw.arrows.insert(nw.arrows.end(), tw.arrows.begin(), tw.arrows.end());
                        add_term(via_b, nw, tc);
                    }
                    Elt s = via_a;
                    for (const auto& [w, c] : via_b) add_term(s, w, field_.neg(c));
                    prune(s);
                    if (!s.empty()) pending.push_back(std::move(s));
                }
            };
            for (const auto& old : rules_) {
                queue_overlaps(*rule, old);
                queue_overlaps(old, *rule);
            }
            queue_overlaps(*rule, *rule);
            rules_.push_back(std::move(*rule));
        }
    }

    void enumerate_basis()
    {
        // BFS over normal words; a word is normal iff no rule lead occurs as
        // a contiguous subword. Extension only needs a suffix check.
        std::vector<Word> frontier;
        for (int v = 0; v < n_vertices(); ++v) frontier.push_back(Word{v, {}});
        basis_ = frontier;
        while (!frontier.empty()) {
            std::vector<Word> next;
            for (const auto& w : frontier) {
                int at = word_target(w);
                for (int a = 0; a < n_arrows(); ++a) {
                    if (quiver_.arrows[a].src != at) continue;
                    Word nw = w;
                    nw.arrows.push_back(a);
                    bool reducible = false;
                    for (const auto& rule : rules_) {
                        int ll = rule.lead.length();
                        if (ll > nw.length()) continue;
                        bool suffix = true;
                        for (int j = 0; j < ll; ++j)
                            if (nw.arrows[nw.length() - ll + j] != rule.lead.arrows[j]) {
                                suffix = false;
                                break;
                            }
                        if (suffix) {
                            reducible = true;
                            break;
                        }
                    }
                    if (reducible) continue;
                    if (nw.length() >= path_cap_)
                        throw error("path basis is not finite within the path-length cap " +
                                    std::to_string(path_cap_));
                    next.push_back(std::move(nw));
                }
            }
            basis_.insert(basis_.end(), next.begin(), next.end());
            frontier = std::move(next);
        }
        std::sort(basis_.begin(), basis_.end());
        for (int i = 0; i < static_cast<int>(basis_.size()); ++i) basis_index_[basis_[i]] = i;
    }

    F field_;
    Quiver quiver_;
    std::vector<Relation<F>> relations_;
    int path_cap_;
    std::vector<Rule> rules_;
    std::vector<Word> basis_;
    std::map<Word, int> basis_index_;

    mutable std::mutex op_mutex_;
    mutable AlgebraPtr<F> op_cache_;
    mutable std::weak_ptr<const BoundQuiverAlgebra<F>> op_back_;
};

}  // namespace arthom
