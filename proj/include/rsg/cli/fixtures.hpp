#pragma once

#include "rsg/numkernel/precision.hpp"

#include <string>
#include <vector>

namespace rsg::cli {

// A printed decimal whose trailing digits may be marked uncertain with
// brackets, e.g. "-0.08[810545388]".
struct PrintedValue {
    std::string full;       // brackets removed
    int black_decimals = 0; // decimals before the bracket
    int decimals = 0;       // all printed decimals
    bool has_gray = false;
};

PrintedValue parse_printed(const std::string& marked);

// Significant digits of `expected` reproduced by `computed`: the largest
// decimal position k <= printed decimals with |computed - expected| <= 10^-k / 2,
// counted from the first nonzero digit.
int digits_matched(const WideReal& computed, const PrintedValue& expected);

// |computed - expected| <= half a unit at the last black (or, for values
// without gray digits, last printed) decimal.
bool within_black(const WideReal& computed, const PrintedValue& expected);

struct FixtureRow {
    int n_terms = 0;
    std::string re;  // marked strings
    std::string im;  // empty for real tables
};

struct TableFixture {
    int id = 0;
    std::string caption;
    std::string s;      // expression
    std::string alpha;  // expressions; empty for the Z table
    std::string beta;
    std::vector<FixtureRow> rows;
    FixtureRow exact;   // n_terms unused
};

const std::vector<TableFixture>& table_fixtures();
const TableFixture& table_fixture(int id);

} // namespace rsg::cli
