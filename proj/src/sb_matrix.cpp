#include "superflats/sb_matrix.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "superflats/errors.hpp"
#include "superflats/limits.hpp"

namespace superflats {

const char* to_string(SB v) {
  switch (v) {
    case SB::zero: return "0";
    case SB::one: return "1";
    case SB::one_nu: return "1nu";
  }
  return "?";
}

SBMatrix::SBMatrix(int rows, int cols, SB fill)
    : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, fill) {
  if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
  if (fill == SB::one_nu) nu_count_ = rows * cols;
}

SBMatrix::SBMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

SBMatrix SBMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  SBMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw ShapeError("ragged matrix rows");
    for (int j = 0; j < c; ++j) {
      int v = rows[i][j];
      if (v < 0 || v > 2) throw ParseError("SB entry must be 0, 1 or 2 (1nu)");
      m.set(i, j, static_cast<SB>(v));
    }
  }
  return m;
}

SBMatrix SBMatrix::identity(int n) {
  SBMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, SB::one);
  return m;
}

SBMatrix SBMatrix::all_ones(int rows, int cols) { return SBMatrix(rows, cols, SB::one); }

SBMatrix SBMatrix::from_masks(const std::vector<std::uint64_t>& masks, int cols) {
  if (cols > 64) throw CapacityError("row masks hold at most 64 columns");
  SBMatrix m(static_cast<int>(masks.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < cols; ++j) {
      if ((masks[i] >> j) & 1U) m.set(i, j, SB::one);
    }
  }
  return m;
}

void SBMatrix::set(int i, int j, SB v) {
  SB& slot = e_[static_cast<std::size_t>(i) * cols_ + j];
  nu_count_ += (v == SB::one_nu) - (slot == SB::one_nu);
  slot = v;
}

std::uint64_t SBMatrix::row_mask(int i) const {
  if (cols_ > 64) throw CapacityError("row masks hold at most 64 columns");
  std::uint64_t mask = 0;
  for (int j = 0; j < cols_; ++j) {
    if (at(i, j) == SB::one) mask |= std::uint64_t{1} << j;
  }
  return mask;
}

std::vector<std::uint64_t> SBMatrix::row_masks() const {
  std::vector<std::uint64_t> out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = row_mask(i);
  return out;
}

SBMatrix SBMatrix::transpose() const {
  SBMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

SBMatrix SBMatrix::submatrix(const std::vector<int>& row_idx,
                             const std::vector<int>& col_idx) const {
  SBMatrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (int a = 0; a < s.rows(); ++a) {
    for (int b = 0; b < s.cols(); ++b) {
      int i = row_idx[a], j = col_idx[b];
      if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ShapeError("submatrix index out of range");
      s.set(a, b, at(i, j));
    }
  }
  return s;
}

std::string SBMatrix::to_string() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    if (i) out += '\n';
    for (int j = 0; j < cols_; ++j) {
      SB v = at(i, j);
      out += v == SB::zero ? '0' : v == SB::one ? '1' : 'N';
    }
  }
  return out;
}

namespace {

void require_square(const SBMatrix& m, const char* what) {
  if (!m.is_square()) throw ShapeError(std::string(what) + " needs a square matrix");
}

void check_permanent_limit(const SBMatrix& m) {
  if (m.rows() > limits().permanent_side) {
    throw SizeLimitError("permanent: side " + std::to_string(m.rows()) + " exceeds limit " +
                         std::to_string(limits().permanent_side) + "; use witness search");
  }
}

// Counts perfect matchings of the bipartite graph given by row masks,
// stopping at 2.
int count_matchings(const std::vector<std::uint64_t>& rows, std::size_t r, std::uint64_t used,
                    int found) {
  if (r == rows.size()) return found + 1;
  std::uint64_t avail = rows[r] & ~used;
  while (avail && found < 2) {
    std::uint64_t bit = avail & -avail;
    avail ^= bit;
    found = count_matchings(rows, r + 1, used | bit, found);
  }
  return found;
}

}  // namespace

SB permanent_dp(const SBMatrix& m) {
  require_square(m, "permanent");
  check_permanent_limit(m);
  int n = m.rows();
  std::vector<SB> dp(std::size_t{1} << n, SB::zero);
  dp[0] = SB::one;
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == SB::zero) continue;
    int i = std::popcount(mask);
    if (i == n) continue;
    for (int j = 0; j < n; ++j) {
      if (mask & (1U << j)) continue;
      SB e = m.at(i, j);
      if (e == SB::zero) continue;
      dp[mask | (1U << j)] = dp[mask | (1U << j)] + dp[mask] * e;
    }
  }
  return dp.back();
}

SB permanent(const SBMatrix& m) {
  require_square(m, "permanent");
  check_permanent_limit(m);
  if (!m.is_boolean()) return permanent_dp(m);
  int c = count_matchings(m.row_masks(), 0, 0, 0);
  return c == 0 ? SB::zero : c == 1 ? SB::one : SB::one_nu;
}

std::optional<TriangularOrder> triangular_order(const SBMatrix& m) {
  require_square(m, "triangular_order");
  if (!m.is_boolean()) throw PreconditionError("triangular_order needs a boolean matrix");
  int n = m.rows();
  std::vector<int> ones(n, 0);
  std::vector<char> row_alive(n, 1), col_alive(n, 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ones[i] += m.at(i, j) == SB::one;
  TriangularOrder order;
  for (int step = 0; step < n; ++step) {
    int marker = -1;
    for (int i = 0; i < n && marker < 0; ++i)
      if (row_alive[i] && ones[i] == 1) marker = i;
    if (marker < 0) return std::nullopt;
    int col = -1;
    for (int j = 0; j < n; ++j)
      if (col_alive[j] && m.at(marker, j) == SB::one) col = j;
    row_alive[marker] = 0;
    col_alive[col] = 0;
    for (int i = 0; i < n; ++i)
      if (row_alive[i] && m.at(i, col) == SB::one) --ones[i];
    order.rows.push_back(marker);
    order.cols.push_back(col);
  }
  return order;
}

bool is_nonsingular(const SBMatrix& m) {
  require_square(m, "is_nonsingular");
  if (!m.is_boolean()) return permanent(m) == SB::one;
  return triangular_order(m).has_value();
}

bool is_witness(const SBMatrix& m, const std::vector<int>& row_set,
                const std::vector<int>& col_set) {
  if (row_set.size() != col_set.size()) {
    throw ShapeError("witness: |I| = " + std::to_string(row_set.size()) +
                     " but |J| = " + std::to_string(col_set.size()));
  }
  return is_nonsingular(m.submatrix(row_set, col_set));
}

int find_marker_row(const SBMatrix& m) {
  require_square(m, "find_marker_row");
  if (!m.is_boolean()) throw PreconditionError("find_marker_row needs a boolean matrix");
  if (!is_nonsingular(m)) throw PreconditionError("find_marker_row: matrix is singular");
  for (int i = 0; i < m.rows(); ++i) {
    int ones = 0;
    for (int j = 0; j < m.cols(); ++j) ones += m.at(i, j) == SB::one;
    if (ones == 1) return i;
  }
  throw PreconditionError("find_marker_row: no marker row");  // unreachable for nonsingular m
}

namespace {

// Builds the triangular order from the last diagonal position backwards.
// State: the set C of columns placed so far. A row can take the next
// (earlier) position iff it has no 1 in C; its diagonal column is any of its
// 1s. Such rows are automatically distinct from the rows already placed.
class RankSearch {
 public:
  RankSearch(std::vector<std::uint64_t> rows, int cols) : rows_(std::move(rows)) {
    // Columns with more zeros first; they tend to admit longer chains.
    std::vector<int> zeros(cols, 0);
    for (int j = 0; j < cols; ++j)
      for (auto r : rows_) zeros[j] += !((r >> j) & 1U);
    order_.resize(cols);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return zeros[a] > zeros[b]; });
    ceiling_ = std::min<int>(static_cast<int>(rows_.size()), cols);
  }

  std::vector<int> run() {
    dfs(0);
    return best_;
  }

 private:
  void dfs(std::uint64_t used) {
    if (static_cast<int>(path_.size()) > static_cast<int>(best_.size())) best_ = path_;
    if (static_cast<int>(best_.size()) == ceiling_) return;
    std::uint64_t cand = 0;
    int free_rows = 0;
    for (auto r : rows_) {
      if (r && !(r & used)) {
        cand |= r;
        ++free_rows;
      }
    }
    int bound = static_cast<int>(path_.size()) + std::min(free_rows, std::popcount(cand));
    if (bound <= static_cast<int>(best_.size())) return;
    for (int j : order_) {
      if (!((cand >> j) & 1U)) continue;
      std::uint64_t next = used | (std::uint64_t{1} << j);
      if (!seen_.insert(next).second) continue;
      path_.push_back(j);
      dfs(next);
      path_.pop_back();
      if (static_cast<int>(best_.size()) == ceiling_) return;
    }
  }

  std::vector<std::uint64_t> rows_;
  std::vector<int> order_;
  int ceiling_ = 0;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<int> path_, best_;
};

RankWitness rank_on_masks(const std::vector<std::uint64_t>& rows, int cols) {
  std::vector<int> picks = RankSearch(rows, cols).run();
  RankWitness w;
  w.rank = static_cast<int>(picks.size());
  std::uint64_t used = 0;
  for (int j : picks) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (((rows[i] >> j) & 1U) && !(rows[i] & used)) {
        w.rows.push_back(static_cast<int>(i));
        break;
      }
    }
    used |= std::uint64_t{1} << j;
  }
  w.cols = picks;
  std::reverse(w.rows.begin(), w.rows.end());
  std::reverse(w.cols.begin(), w.cols.end());
  return w;
}

}  // namespace

RankWitness sb_rank_witness(const SBMatrix& m) {
  if (!m.is_boolean()) throw PreconditionError("sb_rank needs a boolean matrix");
  int side = std::min(m.rows(), m.cols());
  if (side > limits().rank_side) {
    throw SizeLimitError("sb_rank: min side " + std::to_string(side) + " exceeds limit " +
                         std::to_string(limits().rank_side));
  }
  if (side == 0) return {};
  if (m.cols() <= 64) return rank_on_masks(m.row_masks(), m.cols());
  if (m.rows() > 64) throw CapacityError("sb_rank: both sides exceed 64");
  // Transposing a lower triangular block gives an upper triangular one;
  // reversing both orders makes it lower again.
  RankWitness t = rank_on_masks(m.transpose().row_masks(), m.rows());
  RankWitness w;
  w.rank = t.rank;
  w.rows.assign(t.cols.rbegin(), t.cols.rend());
  w.cols.assign(t.rows.rbegin(), t.rows.rend());
  return w;
}

int sb_rank(const SBMatrix& m) { return sb_rank_witness(m).rank; }

}  // namespace superflats
