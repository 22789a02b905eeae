#include "rsg/cli/fixtures.hpp"

#include <cmath>

namespace rsg::cli {

PrintedValue parse_printed(const std::string& marked) {
    PrintedValue v;
    auto dot = marked.find('.');
    auto open = marked.find('[');
    auto close = marked.find(']');
    if (open != std::string::npos && (close == std::string::npos || close != marked.size() - 1 || open < dot))
        throw DomainError("bad printed value: " + marked);
    v.has_gray = open != std::string::npos;
    v.full = marked;
    if (v.has_gray)
        v.full = marked.substr(0, open) + marked.substr(open + 1, close - open - 1);
    v.decimals = dot == std::string::npos ? 0 : static_cast<int>(v.full.size() - dot - 1);
    v.black_decimals = v.has_gray ? static_cast<int>(open - dot - 1) : v.decimals;
    return v;
}

namespace {

WideReal half_unit(int decimals) { return WideReal(0.5) * pow(WideReal(10), -decimals); }

} // namespace

int digits_matched(const WideReal& computed, const PrintedValue& expected) {
    WideReal e = parse_real<WideReal>(expected.full);
    WideReal diff = abs(computed - e);
    int k = -1;
    for (int d = expected.decimals; d >= 0; --d)
        if (diff <= half_unit(d)) {
            k = d;
            break;
        }
    if (k < 0 || e == 0)
        return 0;
    int leading = static_cast<int>(floor_to_int(log10(abs(e))));
    return std::max(0, k + leading + 1);
}

bool within_black(const WideReal& computed, const PrintedValue& expected) {
    return abs(computed - parse_real<WideReal>(expected.full)) <= half_unit(expected.black_decimals);
}

const std::vector<TableFixture>& table_fixtures() {
    static const std::vector<TableFixture> fixtures = {
        {1, "Z(2 pi) from the classical formula", "1/2+2*pi*i", "", "",
         {{0, "-1.85029", ""}, {1, "-0.926411", ""}, {3, "-0.955739", ""}, {6, "-0.956017", ""}},
         {0, "-0.956029", ""}},
        {2, "R(1/2+600i; 30/sqrt(pi), 10/sqrt(pi))", "1/2+600i", "30/sqrt(pi)", "10/sqrt(pi)",
         {{1, "-0.08[810545388]", "0.10[864755195]"},
          {3, "-0.087645[36572]", "0.109362[55272]"},
          {5, "-0.087645228[33]", "0.10936268[294]"}},
         {0, "-0.08764522824", "0.10936268305"}},
        {3, "R(-2+600i; 30/sqrt(pi), 10/sqrt(pi))", "-2+600i", "30/sqrt(pi)", "10/sqrt(pi)",
         {{1, "-0.347[8598947]", "0.4[289646591]"},
          {3, "-0.347[8754856]", "0.4059[859119]"},
          {5, "-0.3479331[346]", "0.40599[29975]"}},
         {0, "-0.3479331128", "0.4059931509"}},
        {4, "R(3/4+400i; 20/sqrt(pi), 10/sqrt(pi))", "3/4+400i", "20/sqrt(pi)", "10/sqrt(pi)",
         {{1, "0.11[628656704]", "0.031[02038722]"},
          {3, "0.11503[659264]", "0.031341[63666]"},
          {5, "0.11503572[670]", "0.03134146[229]"}},
         {0, "0.11503572550", "0.03134146183"}},
        {5, "R(1/2+256i; 32, 4/pi)", "1/2+256i", "32", "4/pi",
         {{1, "-0.12[120812956]", "0.00[884587559]"},
          {2, "-0.1207[5592244]", "0.0078[9494686]"},
          {4, "-0.120742[08191]", "0.0078772[9724]"}},
         {0, "-0.12074212743", "0.00787728177"}},
        {6, "R(1+600i; sqrt(500/pi), sqrt(180/pi))", "1+600i", "sqrt(500/pi)", "sqrt(180/pi)",
         {{1, "0.07[827091811]", "-0.076[57008324]"},
          {3, "0.07798[494014]", "-0.076932[55693]"},
          {5, "0.077985048[83]", "-0.0769326604[7]"}},
         {0, "0.07798504890", "-0.07693266040"}},
        {7, "R(1/2+800i; 40/sqrt(pi), 10/sqrt(pi))", "1/2+800i", "40/sqrt(pi)", "10/sqrt(pi)",
         {{1, "-0.079[66764263636]", "-0.073[73504930114]"},
          {3, "-0.079573[71736089]", "-0.07351[910859701]"},
          {5, "-0.079573651[82034]", "-0.073518978[39664]"},
          {7, "-0.0795736517815[8]", "-0.073518978259[65]"}},
         {0, "-0.07957365178152", "-0.07351897825948"}},
    };
    return fixtures;
}

const TableFixture& table_fixture(int id) {
    for (const auto& f : table_fixtures())
        if (f.id == id)
            return f;
    throw DomainError("no table with id " + std::to_string(id));
}

} // namespace rsg::cli
