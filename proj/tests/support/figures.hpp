#pragma once

// Reference valuation trees: one entry per drawn node with its digit path,
// the branch label written above it and the circled value ("*" for non-terminating).

#include <string>
#include <vector>

namespace figures {

struct Node {
    std::string digits;  // "[0,1,1]"
    long label;
    std::string glyph;
};

inline const std::vector<Node> kSquarePlus4 = {
    {"[]", 0, "*"}, {"[0]", 0, "*"}, {"[1]", 1, "0"}, {"[0,0]", 0, "2"}, {"[0,1]", 2, "3"},
};

inline const std::vector<Node> kTwoNMinus5 = {
    {"[]", 0, "*"},
    {"[0]", 0, "0"},         {"[1]", 1, "*"},           {"[2]", 2, "0"},
    {"[1,0]", 1, "1"},       {"[1,1]", 4, "1"},         {"[1,2]", 7, "*"},
    {"[1,2,0]", 7, "2"},     {"[1,2,1]", 16, "*"},      {"[1,2,2]", 25, "2"},
    {"[1,2,1,0]", 16, "3"},  {"[1,2,1,1]", 43, "*"},    {"[1,2,1,2]", 70, "3"},
    {"[1,2,1,1,0]", 43, "4"}, {"[1,2,1,1,1]", 124, "*"}, {"[1,2,1,1,2]", 205, "4"},
};

inline const std::vector<Node> kNonIntegralRoot = {
    {"[]", 0, "*"},
    {"[0]", 0, "*"},          {"[1]", 1, "1"},           {"[2]", 2, "1"},
    {"[0,0]", 0, "2"},        {"[0,1]", 3, "*"},         {"[0,2]", 6, "2"},
    {"[0,1,0]", 3, "3"},      {"[0,1,1]", 12, "3"},      {"[0,1,2]", 21, "*"},
    {"[0,1,2,0]", 21, "4"},   {"[0,1,2,1]", 48, "4"},    {"[0,1,2,2]", 75, "*"},
    {"[0,1,2,2,0]", 75, "5"}, {"[0,1,2,2,1]", 156, "5"}, {"[0,1,2,2,2]", 237, "*"},
};

inline const std::vector<Node> kTwoRootsMod5 = {
    {"[]", 0, "*"},
    {"[0]", 0, "0"},         {"[1]", 1, "0"},         {"[2]", 2, "*"},         {"[3]", 3, "0"},
    {"[4]", 4, "0"},
    {"[2,0]", 2, "*"},       {"[2,1]", 7, "1"},       {"[2,2]", 12, "1"},      {"[2,3]", 17, "1"},
    {"[2,4]", 22, "1"},
    {"[2,0,0]", 2, "2"},     {"[2,0,1]", 27, "2"},    {"[2,0,2]", 52, "2"},    {"[2,0,3]", 77, "2"},
    {"[2,0,4]", 102, "*"},
    {"[2,0,4,0]", 102, "3"}, {"[2,0,4,1]", 227, "3"}, {"[2,0,4,2]", 352, "3"}, {"[2,0,4,3]", 477, "3"},
    {"[2,0,4,4]", 602, "*"},
};

inline const std::vector<Node> kCloseRoots = {
    {"[]", 0, "*"},
    {"[0]", 0, "*"},        {"[1]", 1, "0"},
    {"[0,0]", 0, "*"},      {"[0,1]", 2, "*"},
    {"[0,0,0]", 0, "*"},    {"[0,0,1]", 4, "3"},    {"[0,1,0]", 2, "*"},    {"[0,1,1]", 6, "3"},
    {"[0,0,0,0]", 0, "*"},  {"[0,0,0,1]", 8, "4"},  {"[0,1,0,0]", 2, "4"},  {"[0,1,0,1]", 10, "*"},
};

inline const std::vector<Node> kNegativeContent = {
    {"[]", 0, "*"},
    {"[0]", 0, "-1"},       {"[1]", 1, "*"},
    {"[1,0]", 1, "*"},      {"[1,1]", 3, "1"},
    {"[1,0,0]", 1, "*"},    {"[1,0,1]", 5, "*"},
    {"[1,0,0,0]", 1, "4"},  {"[1,0,0,1]", 9, "*"},  {"[1,0,1,0]", 5, "*"},  {"[1,0,1,1]", 13, "4"},
};

inline const std::vector<Node> kThreeRootsMod2 = {
    {"[]", 0, "*"},
    {"[0]", 0, "*"},        {"[1]", 1, "0"},
    {"[0,0]", 0, "*"},      {"[0,1]", 2, "*"},
    {"[0,0,0]", 0, "4"},    {"[0,0,1]", 4, "*"},    {"[0,1,0]", 2, "*"},    {"[0,1,1]", 6, "5"},
    {"[0,0,1,0]", 4, "5"},  {"[0,0,1,1]", 12, "*"}, {"[0,1,0,0]", 2, "*"},  {"[0,1,0,1]", 10, "*"},
};

inline const std::vector<Node> kThreeRootsMod3 = {
    {"[]", 0, "*"},
    {"[0]", 0, "*"},          {"[1]", 1, "*"},           {"[2]", 2, "1"},
    {"[0,0]", 0, "2"},        {"[0,1]", 3, "*"},         {"[0,2]", 6, "2"},
    {"[1,0]", 1, "2"},        {"[1,1]", 4, "2"},         {"[1,2]", 7, "*"},
    {"[0,1,0]", 3, "3"},      {"[0,1,1]", 12, "3"},      {"[0,1,2]", 21, "*"},
    {"[1,2,0]", 7, "3"},      {"[1,2,1]", 16, "*"},      {"[1,2,2]", 25, "3"},
    {"[0,1,2,0]", 21, "4"},   {"[0,1,2,1]", 48, "4"},    {"[0,1,2,2]", 75, "*"},
    {"[1,2,1,0]", 16, "4"},   {"[1,2,1,1]", 43, "*"},    {"[1,2,1,2]", 70, "4"},
    {"[0,1,2,2,0]", 75, "5"}, {"[0,1,2,2,1]", 156, "5"}, {"[0,1,2,2,2]", 237, "*"},
    {"[1,2,1,1,0]", 43, "5"}, {"[1,2,1,1,1]", 124, "*"}, {"[1,2,1,1,2]", 205, "5"},
};

inline const std::vector<Node> kSquarePlus7 = {
    {"[]", 0, "*"},
    {"[0]", 0, "0"},        {"[1]", 1, "*"},
    {"[1,0]", 1, "*"},      {"[1,1]", 3, "*"},
    {"[1,0,0]", 1, "3"},    {"[1,0,1]", 5, "*"},    {"[1,1,0]", 3, "*"},    {"[1,1,1]", 7, "3"},
    {"[1,0,1,0]", 5, "*"},  {"[1,0,1,1]", 13, "4"}, {"[1,1,0,0]", 3, "4"},  {"[1,1,0,1]", 11, "*"},
};

inline const std::vector<Node> kProductOfQuadratics = {
    {"[]", 0, "*"},
    {"[0]", 0, "*"},        {"[1]", 1, "*"},
    {"[0,0]", 0, "2"},      {"[0,1]", 2, "3"},      {"[1,0]", 1, "*"},      {"[1,1]", 3, "*"},
    {"[1,0,0]", 1, "3"},    {"[1,0,1]", 5, "*"},    {"[1,1,0]", 3, "*"},    {"[1,1,1]", 7, "3"},
    {"[1,0,1,0]", 5, "*"},  {"[1,0,1,1]", 13, "4"}, {"[1,1,0,0]", 3, "4"},  {"[1,1,0,1]", 11, "*"},
};

inline const std::vector<Node> kSquarePlus1 = {{"[]", 0, "*"}, {"[0]", 0, "0"}, {"[1]", 1, "1"}};
inline const std::vector<Node> kSquarePlus2 = {{"[]", 0, "*"}, {"[0]", 0, "1"}, {"[1]", 1, "0"}};
inline const std::vector<Node> kNoRootsMod2 = {{"[]", 0, "1"}};

struct Figure {
    std::string name;
    std::string expr;
    unsigned long prime;
    std::string engine;
    std::size_t depth;      // depth the tree is built at
    std::size_t max_level;  // deepest level drawn
    const std::vector<Node>* nodes;
};

inline const std::vector<Figure> kAll = {
    {"n^2+4, p=2, empirical", "n^2+4", 2, "empirical", 2, 2, &kSquarePlus4},
    {"2n-5, p=3, analytic", "2n-5", 3, "analytic", 5, 5, &kTwoNMinus5},
    {"3/2n+9, p=3, analytic", "3/2n+9", 3, "analytic", 5, 5, &kNonIntegralRoot},
    {"(5n-4)(n+23), p=5, analytic", "(5n-4)(n+23)", 5, "analytic", 4, 4, &kTwoRootsMod5},
    {"(n-16)(5n-2), p=2, analytic", "(n-16)(5n-2)", 2, "analytic", 5, 4, &kCloseRoots},
    {"3/2(n-9)(3n+1), p=2, analytic", "3/2(n-9)(3n+1)", 2, "analytic", 4, 4, &kNegativeContent},
    {"(n-2)(n+6)(n-12), p=2, analytic", "(n-2)(n+6)(n-12)", 2, "analytic", 4, 4, &kThreeRootsMod2},
    {"3/5(n+6)(2n-5)(3n-4), p=3, analytic", "3/5(n+6)(2n-5)(3n-4)", 3, "analytic", 5, 5, &kThreeRootsMod3},
    {"n^2+7, p=2, partial", "n^2+7", 2, "partial", 4, 4, &kSquarePlus7},
    {"n^2+4, p=2, partial", "n^2+4", 2, "partial", 2, 2, &kSquarePlus4},
    {"(n^2+4)(n^2+7), p=2, partial", "(n^2+4)(n^2+7)", 2, "partial", 4, 4, &kProductOfQuadratics},
    {"n^2+1, p=2, empirical", "n^2+1", 2, "empirical", 1, 1, &kSquarePlus1},
    {"n^2+2, p=2, empirical", "n^2+2", 2, "empirical", 1, 1, &kSquarePlus2},
    {"(n^2+1)(n^2+2), p=2, partial", "(n^2+1)(n^2+2)", 2, "partial", 2, 2, &kNoRootsMod2},
};

}  // namespace figures
