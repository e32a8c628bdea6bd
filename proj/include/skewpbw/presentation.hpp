#pragma once

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "skewpbw/field.hpp"

namespace skewpbw {

struct GeneratorInfo {
    std::string name;
    unsigned weight = 1;
};

/// A word in the free monoid on the generators, as 0-based indices.
using Word = std::vector<int>;

inline bool is_standard(const Word &w) {
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[i - 1])
            return false;
    return true;
}

/// Rewrite rule x_hi * x_lo -> lead * (x_lo x_hi) + sum tail, lo < hi.
struct Relation {
    int hi = 0;
    int lo = 0;
    FieldElement lead;
    std::map<Word, FieldElement> tail; // standard words, nonzero coefficients
};

/// A = sigma(K)<x_1,...,x_n>: generators with ordering and weights, one
/// relation per generator pair, coefficients in `field`.
class AlgebraPresentation {
  public:
    Field field;
    std::vector<GeneratorInfo> generators;

    int num_generators() const { return static_cast<int>(generators.size()); }

    int index_of(const std::string &name) const {
        for (int i = 0; i < num_generators(); ++i)
            if (generators[i].name == name)
                return i;
        return -1;
    }

    unsigned word_weight(const Word &w) const {
        unsigned s = 0;
        for (int g : w)
            s += generators[g].weight;
        return s;
    }

    const Relation &relation(int hi, int lo) const {
        auto it = relations_.find({hi, lo});
        if (it == relations_.end())
            throw Error("missing relation for pair (" + std::to_string(hi) + "," +
                        std::to_string(lo) + ")");
        return it->second;
    }

    const std::map<std::pair<int, int>, Relation> &relations() const { return relations_; }

    /// x_hi * x_lo = lead * x_lo x_hi + tail. Overwrites any previous rule for the pair.
    void set_relation(int hi, int lo, FieldElement lead, std::map<Word, FieldElement> tail) {
        Relation r{hi, lo, std::move(lead), {}};
        for (auto &[w, c] : tail)
            if (!c.is_zero())
                r.tail.emplace(w, std::move(c));
        relations_[{hi, lo}] = std::move(r);
    }

    /// Commutation x_hi x_lo = x_lo x_hi with a plain unit coefficient.
    void set_commuting(int hi, int lo) {
        set_relation(hi, lo, FieldElement::one(field), {});
    }

    /// Admissibility report; empty means the presentation is valid.
    std::vector<std::string> validate() const {
        std::vector<std::string> bad;
        int n = num_generators();
        for (int hi = 1; hi < n; ++hi)
            for (int lo = 0; lo < hi; ++lo) {
                auto it = relations_.find({hi, lo});
                std::string pair = "(" + generators[hi].name + "," + generators[lo].name + ")";
                if (it == relations_.end()) {
                    bad.push_back("missing relation at pair " + pair);
                    continue;
                }
                const Relation &r = it->second;
                if (r.lead.is_zero()) {
                    bad.push_back("zero leading coefficient at pair " + pair);
                    continue;
                }
                unsigned lhs_w = generators[lo].weight + generators[hi].weight;
                for (const auto &[w, c] : r.tail) {
                    if (c.is_zero()) {
                        bad.push_back("zero tail coefficient at pair " + pair);
                        continue;
                    }
                    bool in_range = true;
                    for (int g : w)
                        if (g < 0 || g >= n)
                            in_range = false;
                    if (!in_range) {
                        bad.push_back("tail word out of range at pair " + pair);
                        continue;
                    }
                    if (!is_standard(w)) {
                        bad.push_back("nonstandard tail word at pair " + pair);
                        continue;
                    }
                    unsigned ww = word_weight(w);
                    if (ww < lhs_w)
                        continue;
                    bool ok = ww == lhs_w && w.size() == 2 &&
                              (w[0] < lo || (w[0] == lo && w[1] < hi));
                    if (!ok)
                        bad.push_back("tail word not below leading word at pair " + pair +
                                      " (weight " + std::to_string(ww) + " vs " +
                                      std::to_string(lhs_w) + ")");
                }
            }
        return bad;
    }

    bool is_valid() const { return validate().empty(); }

    void require_valid() const {
        auto bad = validate();
        if (!bad.empty()) {
            std::string msg = "inadmissible presentation:";
            for (const auto &b : bad)
                msg += " " + b + ";";
            throw InadmissiblePresentation(msg);
        }
    }

    bool operator==(const AlgebraPresentation &o) const {
        if (!(field == o.field) || generators.size() != o.generators.size())
            return false;
        for (size_t i = 0; i < generators.size(); ++i)
            if (generators[i].name != o.generators[i].name ||
                generators[i].weight != o.generators[i].weight)
                return false;
        if (relations_.size() != o.relations_.size())
            return false;
        for (const auto &[k, r] : relations_) {
            auto it = o.relations_.find(k);
            if (it == o.relations_.end())
                return false;
            if (!(r.lead == it->second.lead) || r.tail.size() != it->second.tail.size())
                return false;
            auto jt = it->second.tail.begin();
            for (const auto &[w, c] : r.tail) {
                if (w != jt->first || !(c == jt->second))
                    return false;
                ++jt;
            }
        }
        return true;
    }

  private:
    std::map<std::pair<int, int>, Relation> relations_;
};

} // namespace skewpbw
