#pragma once

#include "blockcensus/partition.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace blockcensus {

// A symbol: two rows of distinct non-negative integers, each sorted strictly
// increasing.  Canonical form (after normalize()):
//   * the rows do not both contain 0 (common 0s are stripped with the shift
//     x -> x - 1 applied to every remaining entry);
//   * the longer row is stored first; rows of equal length are ordered with
//     the lexicographically smaller one first.
struct Symbol {
    std::vector<int> x;  // first row
    std::vector<int> y;  // second row

    int defect() const { return static_cast<int>(x.size()) - static_cast<int>(y.size()); }
    bool degenerate() const { return x == y; }
    int rank() const;

    void normalize();
    Symbol normalized() const;

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

// Minimal rank of a symbol of the given defect: d(d-1)/2 - floor((d-1)^2/4).
int min_rank_for_defect(int defect);

// The symbol whose rows are the beta-sets of (lam, mu) with defect extra
// beads on the first row, normalized.
Symbol symbol_from_bipartition(const Partition& lam, const Partition& mu, int defect);

struct SymbolEntry {
    Symbol sym;
    int multiplicity = 1;  // degenerate defect-0 symbols count twice
};

enum class LieType { B, C, D, TwistedD };

const char* lie_type_name(LieType t);
LieType lie_type_from_name(const std::string& s);

// Unipotent-character symbols of rank n for the given type, with multiplicity:
//   B, C      : defect odd
//   D         : defect divisible by 4 (degenerate symbols carry multiplicity 2)
//   TwistedD  : defect congruent to 2 mod 4
// Ordered by defect, then by bipartition enumeration order.
std::vector<SymbolEntry> enumerate_unipotent_symbols(LieType type, int n);

// All symbols obtained by lowering one entry by d within its own row
// (the target value must be absent from that row), normalized.
// Each result has rank exactly rank(s) - d.
std::vector<Symbol> remove_hook(const Symbol& s, int d);

// All symbols obtained by deleting an entry >= e from one row and inserting
// entry - e into the other row (which must not already contain it), normalized.
// Each result has rank exactly rank(s) - e.
std::vector<Symbol> remove_cohook(const Symbol& s, int e);

enum class RemovalKind { hook, cohook };

struct SymbolCore {
    Symbol core;
    int weight = 0;  // number of removals of the given length down to the core
};

// Repeatedly remove hooks (resp. cohooks) of the given length until none
// remains.  The result is independent of removal order.
SymbolCore symbol_core_weight(const Symbol& s, RemovalKind kind, int length);

}  // namespace blockcensus
