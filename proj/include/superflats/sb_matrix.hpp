#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace superflats {

// Superboolean semiring {0, 1, 1ν}. 1 + 1 = 1ν; 1ν absorbs under + and
// is idempotent under ·.
enum class SB : std::uint8_t { zero = 0, one = 1, one_nu = 2 };

constexpr SB operator+(SB a, SB b) {
  if (a == SB::zero) return b;
  if (b == SB::zero) return a;
  return SB::one_nu;
}

constexpr SB operator*(SB a, SB b) {
  if (a == SB::zero || b == SB::zero) return SB::zero;
  if (a == SB::one && b == SB::one) return SB::one;
  return SB::one_nu;
}

const char* to_string(SB v);

// Dense row-major matrix over SB. Boolean matrices (no 1ν entry) get the
// fast paths: row masks, matching-count permanent, triangular peeling.
class SBMatrix {
 public:
  SBMatrix() = default;
  SBMatrix(int rows, int cols, SB fill = SB::zero);
  // Entries 0, 1, 2 (2 = 1ν).
  SBMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static SBMatrix from_rows(const std::vector<std::vector<int>>& rows);
  static SBMatrix identity(int n);
  static SBMatrix all_ones(int rows, int cols);
  // Boolean matrix from row bitmasks over `cols` columns (cols <= 64).
  static SBMatrix from_masks(const std::vector<std::uint64_t>& masks, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_boolean() const { return nu_count_ == 0; }

  SB at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, SB v);

  // Bit j set iff entry (i, j) is one. Requires cols <= 64.
  std::uint64_t row_mask(int i) const;
  std::vector<std::uint64_t> row_masks() const;

  SBMatrix transpose() const;
  SBMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  bool operator==(const SBMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

  // Rows joined by '\n', entries as 0/1/N.
  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int nu_count_ = 0;
  std::vector<SB> e_;
};

// SB-sum over all permutations. Boolean input: perfect-matching count
// saturated at 2. General input: subset DP in the semiring.
// Throws SizeLimitError above limits().permanent_side.
SB permanent(const SBMatrix& m);

// Permanent by subset DP in SB; any entry type. Same size limit.
SB permanent_dp(const SBMatrix& m);

// Per(m) = 1. For boolean m this runs marker-row peeling, which is exact
// at any size: expanding along a row with a single 1 preserves the
// permanent, and a nonsingular matrix always has such a row.
bool is_nonsingular(const SBMatrix& m);

// Row and column orders putting m in lower triangular form with an all-one
// diagonal, if any exist. Boolean square input.
struct TriangularOrder {
  std::vector<int> rows;
  std::vector<int> cols;
};
std::optional<TriangularOrder> triangular_order(const SBMatrix& m);

// m[I, J] nonsingular. Throws ShapeError when |I| != |J|.
bool is_witness(const SBMatrix& m, const std::vector<int>& row_set,
                const std::vector<int>& col_set);

// A row of m with exactly one 1. Throws PreconditionError if m is singular.
int find_marker_row(const SBMatrix& m);

// Maximum size of a nonsingular square submatrix, with the submatrix in
// triangular order (rows[r], cols[r] on the diagonal).
struct RankWitness {
  int rank = 0;
  std::vector<int> rows;
  std::vector<int> cols;
};
RankWitness sb_rank_witness(const SBMatrix& m);
int sb_rank(const SBMatrix& m);

}  // namespace superflats
