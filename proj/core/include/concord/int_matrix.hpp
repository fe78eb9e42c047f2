#ifndef CONCORD_INT_MATRIX_HPP
#define CONCORD_INT_MATRIX_HPP

#include <concord/ints.hpp>
#include <vector>
#include <string>

namespace concord {

// Dense matrix over Z with exact entries, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const Int& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix mul(const IntMatrix& rhs) const;
    std::vector<Int> apply(const std::vector<Int>& x) const; // this * x

    bool is_zero() const;
    bool operator==(const IntMatrix& rhs) const = default;

    // Exact determinant (fraction-free Bareiss). Square matrices only.
    Int determinant() const;

    std::vector<Int> column(int j) const;
    std::vector<Int> row(int i) const;

    // elementary operations (used by the Smith reduction)
    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void add_row(int src, int dst, const Int& c);  // row[dst] += c*row[src]
    void add_col(int src, int dst, const Int& c);
    void negate_row(int i);
    void negate_col(int j);

    std::string to_string() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

} // namespace concord

#endif
