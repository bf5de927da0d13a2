#include "loq/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace loq {

IntMatrix integer_kernel(IntMatrix m) {
    if (m.empty()) {
        return {};
    }
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    // Column operations on m, mirrored on u (starting from the identity);
    // kernel vectors are the u-columns whose m-column becomes zero.
    IntMatrix u(cols, std::vector<Int>(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) {
        u[i][i] = 1;
    }
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t r = 0; r < rows; ++r) {
            m[r][dst] += factor * m[r][src];
        }
        for (std::size_t r = 0; r < cols; ++r) {
            u[r][dst] += factor * u[r][src];
        }
    };
    auto swap_col = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows; ++r) {
            std::swap(m[r][i], m[r][j]);
        }
        for (std::size_t r = 0; r < cols; ++r) {
            std::swap(u[r][i], u[r][j]);
        }
    };

    std::size_t fixed = 0;
    for (std::size_t r = 0; r < rows && fixed < cols; ++r) {
        while (true) {
            // Smallest nonzero entry of row r among the free columns.
            std::size_t best = cols;
            for (std::size_t c = fixed; c < cols; ++c) {
                if (m[r][c] != 0 && (best == cols || abs(m[r][c]) < abs(m[r][best]))) {
                    best = c;
                }
            }
            if (best == cols) {
                break;  // row already zero on free columns
            }
            bool others = false;
            for (std::size_t c = fixed; c < cols; ++c) {
                if (c == best || m[r][c] == 0) {
                    continue;
                }
                add_col(c, best, -(m[r][c] / m[r][best]));
                if (m[r][c] != 0) {
                    others = true;
                }
            }
            if (!others) {
                swap_col(fixed, best);
                ++fixed;
                break;
            }
        }
    }
    IntMatrix kernel;
    for (std::size_t c = fixed; c < cols; ++c) {
        std::vector<Int> v(cols);
        for (std::size_t r = 0; r < cols; ++r) {
            v[r] = u[r][c];
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

void hnf_rows(IntMatrix& rows) {
    if (rows.empty()) {
        return;
    }
    const std::size_t cols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        // Euclid on the entries of this column at/below pivot_row.
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r) {
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) {
                    best = r;
                }
            }
            if (best == rows.size()) {
                break;
            }
            std::swap(rows[pivot_row], rows[best]);
            bool cleared = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) {
                    continue;
                }
                Int q = rows[r][col] / rows[pivot_row][col];
                for (std::size_t c = 0; c < cols; ++c) {
                    rows[r][c] -= q * rows[pivot_row][c];
                }
                if (rows[r][col] != 0) {
                    cleared = false;
                }
            }
            if (cleared) {
                break;
            }
        }
        if (rows[pivot_row][col] == 0) {
            continue;
        }
        if (rows[pivot_row][col] < 0) {
            for (Int& x : rows[pivot_row]) {
                x = -x;
            }
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Int q = floor_div(rows[r][col], rows[pivot_row][col]);
            if (q != 0) {
                for (std::size_t c = 0; c < cols; ++c) {
                    rows[r][c] -= q * rows[pivot_row][c];
                }
            }
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
}

}  // namespace loq
