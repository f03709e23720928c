#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vcm {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix, row major.  Boundary matrices at the scales this tool
// targets stay small, so no sparsity games.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Integer& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

// Rank over the rationals, fraction-free elimination (all intermediate values
// stay integral; divisions are exact).
std::size_t rank_over_q(IntMatrix m);

// Rank over GF(p); entries are reduced mod p first.
std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p);

// Invariant factors d_1 | d_2 | ... | d_k (k = rank), all positive.
std::vector<Integer> smith_invariant_factors(IntMatrix m);

} // namespace vcm
