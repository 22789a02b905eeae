#pragma once

#include <stdexcept>
#include <vector>

namespace rsg {

// Partial ordinary Bell polynomials Bhat_{i,j}(p_1, p_2, ...), built from
//   Bhat_{i,0} = [i == 0],  Bhat_{i,j} = sum_{m=1}^{i-j+1} p_m Bhat_{i-m,j-1}.
// T needs +, *, and construction from an integer (0 and 1).
template <typename T>
class BellTable {
public:
    // p[0] is p_1. Entries are available for 0 <= j <= i <= p.size().
    explicit BellTable(std::vector<T> p) : p_(std::move(p)) {
        const int n = static_cast<int>(p_.size());
        table_.assign(n + 1, std::vector<T>(n + 1, T(0)));
        table_[0][0] = T(1);
        for (int j = 1; j <= n; ++j)
            for (int i = j; i <= n; ++i) {
                T acc(0);
                for (int m = 1; m <= i - j + 1; ++m)
                    if (i - m >= j - 1)
                        acc = acc + p_[m - 1] * table_[i - m][j - 1];
                table_[i][j] = acc;
            }
    }

    int max_index() const { return static_cast<int>(p_.size()); }

    const T& operator()(int i, int j) const {
        if (i < 0 || j < 0 || i > max_index() || j > max_index())
            throw std::out_of_range("Bell table index out of range");
        return table_[i][j];
    }

private:
    std::vector<T> p_;
    std::vector<std::vector<T>> table_;
};

} // namespace rsg
