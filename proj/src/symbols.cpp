#include "blockcensus/symbols.hpp"

#include "blockcensus/multipartition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace blockcensus {

namespace {

bool sorted_distinct(const std::vector<int>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] < 0) return false;
        if (i > 0 && r[i] <= r[i - 1]) return false;
    }
    return true;
}

void check_rows(const Symbol& s) {
    if (!sorted_distinct(s.x) || !sorted_distinct(s.y))
        throw std::invalid_argument("symbol rows must be strictly increasing and non-negative");
}

}  // namespace

int Symbol::rank() const {
    long long a = static_cast<long long>(x.size());
    long long b = static_cast<long long>(y.size());
    long long sum = 0;
    for (int v : x) sum += v;
    for (int v : y) sum += v;
    long long c = a + b - 1;
    return static_cast<int>(sum - (c * c) / 4);
}

void Symbol::normalize() {
    check_rows(*this);
    // Strip shared leading 0s: remove one 0 from each row and shift down.
    while (!x.empty() && !y.empty() && x.front() == 0 && y.front() == 0) {
        x.erase(x.begin());
        y.erase(y.begin());
        for (int& v : x) --v;
        for (int& v : y) --v;
    }
    if (x.size() < y.size() || (x.size() == y.size() && y < x)) std::swap(x, y);
}

Symbol Symbol::normalized() const {
    Symbol s = *this;
    s.normalize();
    return s;
}

int min_rank_for_defect(int defect) {
    if (defect < 0) throw std::invalid_argument("min_rank_for_defect: negative defect");
    long long d = defect;
    return static_cast<int>(d * (d - 1) / 2 - ((d - 1) * (d - 1)) / 4);
}

Symbol symbol_from_bipartition(const Partition& lam, const Partition& mu, int defect) {
    if (defect < 0) throw std::invalid_argument("symbol_from_bipartition: negative defect");
    int b = static_cast<int>(std::max(lam.size(), mu.size())) + 1;
    int a = b + defect;
    Symbol s;
    s.x = beta_set(lam, a);
    s.y = beta_set(mu, b);
    s.normalize();
    return s;
}

const char* lie_type_name(LieType t) {
    switch (t) {
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        case LieType::TwistedD: return "2D";
    }
    throw std::logic_error("lie_type_name: bad type");
}

LieType lie_type_from_name(const std::string& s) {
    if (s == "B") return LieType::B;
    if (s == "C") return LieType::C;
    if (s == "D") return LieType::D;
    if (s == "2D") return LieType::TwistedD;
    throw std::invalid_argument("unknown type '" + s + "' (expected B, C, D or 2D)");
}

std::vector<SymbolEntry> enumerate_unipotent_symbols(LieType type, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_unipotent_symbols: negative rank");
    int start, step;
    switch (type) {
        case LieType::B:
        case LieType::C:
            start = 1;
            step = 2;
            break;
        case LieType::D:
            start = 0;
            step = 4;
            break;
        case LieType::TwistedD:
            start = 2;
            step = 4;
            break;
        default:
            throw std::logic_error("enumerate_unipotent_symbols: bad type");
    }
    std::vector<SymbolEntry> out;
    for (int defect = start;; defect += step) {
        int mr = min_rank_for_defect(defect);
        if (mr > n) break;
        int rem = n - mr;
        if (defect == 0) {
            // Unordered rows: each bipartition (lam, mu) and its swap give the
            // same symbol; keep one representative, count degenerates twice.
            std::set<Symbol> seen;
            for (auto& pair : multipartitions_of(2, rem)) {
                Symbol s = symbol_from_bipartition(pair[0], pair[1], 0);
                if (!seen.insert(s).second) continue;
                out.push_back({s, s.degenerate() ? 2 : 1});
            }
        } else {
            for (auto& pair : multipartitions_of(2, rem)) {
                Symbol s = symbol_from_bipartition(pair[0], pair[1], defect);
                out.push_back({std::move(s), 1});
            }
        }
    }
    return out;
}

std::vector<Symbol> remove_hook(const Symbol& s, int d) {
    if (d < 1) throw std::invalid_argument("remove_hook: length must be >= 1");
    check_rows(s);
    std::vector<Symbol> out;
    for (int row = 0; row < 2; ++row) {
        const std::vector<int>& r = row == 0 ? s.x : s.y;
        for (std::size_t i = 0; i < r.size(); ++i) {
            int v = r[i];
            if (v < d) continue;
            int t = v - d;
            if (std::binary_search(r.begin(), r.end(), t)) continue;
            Symbol ns = s;
            std::vector<int>& nr = row == 0 ? ns.x : ns.y;
            nr[i] = t;
            std::sort(nr.begin(), nr.end());
            ns.normalize();
            out.push_back(std::move(ns));
        }
    }
    return out;
}

std::vector<Symbol> remove_cohook(const Symbol& s, int e) {
    if (e < 1) throw std::invalid_argument("remove_cohook: length must be >= 1");
    check_rows(s);
    std::vector<Symbol> out;
    for (int row = 0; row < 2; ++row) {
        const std::vector<int>& from = row == 0 ? s.x : s.y;
        const std::vector<int>& to = row == 0 ? s.y : s.x;
        for (std::size_t i = 0; i < from.size(); ++i) {
            int v = from[i];
            if (v < e) continue;
            int t = v - e;
            if (std::binary_search(to.begin(), to.end(), t)) continue;
            Symbol ns = s;
            std::vector<int>& nf = row == 0 ? ns.x : ns.y;
            std::vector<int>& nt = row == 0 ? ns.y : ns.x;
            nf.erase(nf.begin() + static_cast<std::ptrdiff_t>(i));
            nt.insert(std::lower_bound(nt.begin(), nt.end(), t), t);
            ns.normalize();
            out.push_back(std::move(ns));
        }
    }
    return out;
}

SymbolCore symbol_core_weight(const Symbol& s, RemovalKind kind, int length) {
    SymbolCore cw;
    cw.core = s.normalized();
    while (true) {
        std::vector<Symbol> next = kind == RemovalKind::hook ? remove_hook(cw.core, length)
                                                             : remove_cohook(cw.core, length);
        if (next.empty()) break;
        int before = cw.core.rank();
        cw.core = next.front();
        if (cw.core.rank() != before - length)
            throw std::logic_error("symbol_core_weight: removal changed rank by wrong amount");
        ++cw.weight;
    }
    return cw;
}

}  // namespace blockcensus
