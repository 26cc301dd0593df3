#ifndef COSMASH_RECIPES_HPP
#define COSMASH_RECIPES_HPP

#include <string>
#include <vector>

namespace cosmash {

// The sixteen generation recipes for the inconsistency system, one per
// block of equations. Each recipe rewrites a starting monomial p with a
// chain of H pulls on each side and equates the two results; lhs/rhs list
// the pulled submonomials innermost first, an empty rhs meaning "subtract p
// itself". This is reference data: the entries transcribe the block headers
// of the equation listing one-to-one.
struct Recipe {
    int first_index;               // 1-based index of the block's first equation
    int last_index;                //         ... and its last
    const char* p;                 // starting monomial
    std::vector<std::string> lhs;  // innermost-first H pulls
    std::vector<std::string> rhs;  // innermost-first H pulls; empty = p itself
};

inline const std::vector<Recipe>& equation_recipes() {
    static const std::vector<Recipe> recipes = {
        {1, 4, "(ab)c", {"a", "c"}, {}},
        {5, 8, "(ab)c", {"b", "c"}, {}},
        {9, 12, "(ab)c", {"a", "b"}, {"b"}},
        {13, 16, "(ab)c", {"b", "a"}, {"a"}},
        {17, 20, "a(bc)", {"b", "a"}, {}},
        {21, 24, "a(bc)", {"c", "a"}, {}},
        {25, 28, "a(bc)", {"c", "b"}, {"b"}},
        {29, 32, "a(bc)", {"b", "c"}, {"c"}},
        {33, 40, "a(b(cd))", {"b", "d", "ac", "ca"}, {"c", "bd", "db"}},
        {41, 48, "a(b(cd))", {"b", "c", "ad", "da"}, {"d", "bc", "cb"}},
        {49, 56, "a((bc)d)", {"d", "b", "ac", "ca"}, {"c", "bd", "db"}},
        {57, 64, "a((bc)d)", {"d", "c", "ab", "ba"}, {"b", "cd", "dc"}},
        {65, 72, "(a(bc))d", {"a", "b", "dc", "cd"}, {"c", "ba", "ab"}},
        {73, 80, "(a(bc))d", {"a", "c", "db", "bd"}, {"b", "ca", "ac"}},
        {81, 88, "((ab)c)d", {"c", "a", "db", "bd"}, {"b", "ca", "ac"}},
        {89, 96, "((ab)c)d", {"c", "b", "da", "ad"}, {"a", "cb", "bc"}},
    };
    return recipes;
}

} // namespace cosmash

#endif
