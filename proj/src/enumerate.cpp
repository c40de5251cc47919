#include "qcong/enumerate.hpp"

#include <algorithm>
#include <sstream>

#include "qcong/error.hpp"

namespace qcong {

namespace {

// Partitions of n with all parts <= max_part (odd parts only if flagged); parts
// chosen in weakly decreasing order. `distinct` forces strictly decreasing.
void each_partition(std::uint64_t n, std::uint64_t max_part, bool odd_only, bool distinct,
                    std::vector<std::uint64_t>& parts,
                    const std::function<void(const std::vector<std::uint64_t>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (std::uint64_t p = std::min(max_part, n); p >= 1; --p) {
    if (odd_only && p % 2 == 0) continue;
    parts.push_back(p);
    each_partition(n - p, distinct ? p - 1 : p, odd_only, distinct, parts, visit);
    parts.pop_back();
  }
}

std::uint64_t count_each_partition(std::uint64_t n, bool odd_only, bool distinct) {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> parts;
  each_partition(n, n, odd_only, distinct, parts, [&](const auto&) { ++count; });
  return count;
}

class PlaneEnumerator {
 public:
  PlaneEnumerator(std::uint64_t n, std::optional<std::uint64_t> max_rows, std::uint64_t budget,
                  const std::function<void(const std::vector<std::vector<Cell>>&)>& visit)
      : max_rows_(max_rows.value_or(n)), budget_(budget), visit_(visit) {
    if (max_rows && *max_rows == 0) throw InvalidArgument("max_rows must be positive");
    run_rows(n);
  }

 private:
  void tick() {
    if (++visits_ > budget_) {
      throw BudgetExceeded("plane overpartition enumeration exceeded " + std::to_string(budget_) +
                           " cell visits");
    }
  }

  // Start a new row, or finish the shape when no weight remains.
  void run_rows(std::uint64_t remaining) {
    if (remaining == 0) {
      decorate(0, 0);
      return;
    }
    if (rows_.size() >= max_rows_) return;
    rows_.emplace_back();
    fill(remaining);
    rows_.pop_back();
  }

  // Append a cell to the current row, bounded by the left and upper neighbours.
  void fill(std::uint64_t remaining) {
    auto& row = rows_.back();
    const std::size_t r = rows_.size() - 1;
    const std::size_t c = row.size();
    if (!row.empty()) run_rows(remaining);
    std::uint64_t bound = remaining;
    if (c > 0) bound = std::min(bound, rows_[r][c - 1].value);
    if (r > 0) {
      if (c >= rows_[r - 1].size()) return;
      bound = std::min(bound, rows_[r - 1][c].value);
    }
    for (std::uint64_t v = bound; v >= 1; --v) {
      tick();
      rows_.back().push_back({v, false});
      fill(remaining - v);
      rows_.back().pop_back();
    }
  }

  // Literal reading of the rules: a value that reappears later in its row must
  // not be overlined; a value that appeared earlier in its column must be.
  bool allowed(std::size_t r, std::size_t c, bool overlined) const {
    const std::uint64_t v = rows_[r][c].value;
    bool later_in_row = false;
    for (std::size_t j = c + 1; j < rows_[r].size(); ++j) later_in_row |= rows_[r][j].value == v;
    bool earlier_in_column = false;
    for (std::size_t i = 0; i < r; ++i) earlier_in_column |= rows_[i][c].value == v;
    if (later_in_row && overlined) return false;
    if (earlier_in_column && !overlined) return false;
    return true;
  }

  void decorate(std::size_t r, std::size_t c) {
    if (r == rows_.size()) {
      visit_(rows_);
      return;
    }
    const std::size_t nr = c + 1 == rows_[r].size() ? r + 1 : r;
    const std::size_t nc = c + 1 == rows_[r].size() ? 0 : c + 1;
    for (bool flag : {false, true}) {
      tick();
      if (!allowed(r, c, flag)) continue;
      rows_[r][c].overlined = flag;
      decorate(nr, nc);
    }
    rows_[r][c].overlined = false;
  }

  std::uint64_t max_rows_;
  std::uint64_t budget_;
  std::uint64_t visits_ = 0;
  const std::function<void(const std::vector<std::vector<Cell>>&)>& visit_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace

PlaneOverpartition::PlaneOverpartition(std::vector<std::vector<Cell>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw InvalidArgument("plane overpartition rows must be nonempty");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size()) {
      throw InvalidArgument("plane overpartition row lengths must weakly decrease");
    }
  }
}

PlaneOverpartition PlaneOverpartition::parse(const std::string& text) {
  std::vector<std::vector<Cell>> rows;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), '/', '\n');
  std::istringstream lines(normalized);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string token;
    std::vector<Cell> row;
    while (cells >> token) {
      Cell cell;
      if (token.back() == '~') {
        cell.overlined = true;
        token.pop_back();
      }
      if (token.empty() || !std::all_of(token.begin(), token.end(), ::isdigit)) {
        throw ParseError("bad plane overpartition cell '" + token + "'");
      }
      cell.value = std::stoull(token);
      if (cell.value == 0) throw ParseError("plane overpartition values must be positive");
      row.push_back(cell);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return PlaneOverpartition(std::move(rows));
}

std::uint64_t PlaneOverpartition::weight() const {
  std::uint64_t w = 0;
  for (const auto& row : rows_)
    for (const auto& cell : row) w += cell.value;
  return w;
}

bool PlaneOverpartition::is_valid() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const Cell& cell = rows_[r][c];
      if (cell.value == 0) return false;
      if (c > 0 && rows_[r][c - 1].value < cell.value) return false;
      if (r > 0 && rows_[r - 1][c].value < cell.value) return false;
      for (std::size_t j = c + 1; j < rows_[r].size(); ++j) {
        if (rows_[r][j].value == cell.value && cell.overlined) return false;
      }
      for (std::size_t i = 0; i < r; ++i) {
        if (rows_[i][c].value == cell.value && !cell.overlined) return false;
      }
    }
  }
  return true;
}

std::string PlaneOverpartition::render() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out += '\n';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out += ' ';
      out += std::to_string(rows_[r][c].value);
      if (rows_[r][c].overlined) out += '~';
    }
  }
  return out;
}

bool Overpartition::is_valid() const {
  if (overlined.size() != parts.size()) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == 0) return false;
    if (i > 0 && parts[i - 1] < parts[i]) return false;
    if (overlined[i] && i > 0 && parts[i - 1] == parts[i]) return false;
  }
  return true;
}

std::uint64_t Overpartition::weight() const {
  std::uint64_t w = 0;
  for (auto p : parts) w += p;
  return w;
}

std::string Overpartition::render() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(parts[i]);
    if (overlined[i]) out += '~';
  }
  return out;
}

std::uint64_t count_partitions_multiset(std::uint64_t n, const PartMultiset& s) {
  const std::vector<std::uint64_t> kinds = s.expanded();
  // Choose how many copies of kinds[i] to use, for i = 0, 1, ...
  std::function<std::uint64_t(std::size_t, std::uint64_t)> go = [&](std::size_t i, std::uint64_t rest) {
    if (rest == 0) return std::uint64_t{1};
    if (i == kinds.size()) return std::uint64_t{0};
    std::uint64_t total = 0;
    for (std::uint64_t used = 0; used <= rest; used += kinds[i]) total += go(i + 1, rest - used);
    return total;
  };
  return go(0, n);
}

std::uint64_t count_overpartitions(std::uint64_t n, bool odd_parts_only) {
  std::uint64_t total = 0;
  for (std::uint64_t d = 0; d <= n; ++d) {
    total += count_each_partition(d, odd_parts_only, true) * count_each_partition(n - d, odd_parts_only, false);
  }
  return total;
}

void for_each_overpartition(std::uint64_t n, const std::function<void(const Overpartition&)>& visit) {
  std::vector<std::uint64_t> parts;
  each_partition(n, n, false, false, parts, [&](const std::vector<std::uint64_t>& p) {
    std::vector<std::size_t> firsts;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i == 0 || p[i - 1] != p[i]) firsts.push_back(i);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << firsts.size()); ++mask) {
      Overpartition o{p, std::vector<bool>(p.size(), false)};
      for (std::size_t b = 0; b < firsts.size(); ++b) {
        if (mask >> b & 1) o.overlined[firsts[b]] = true;
      }
      visit(o);
    }
  });
}

std::uint64_t count_plane_overpartitions(std::uint64_t n, std::optional<std::uint64_t> max_rows,
                                         std::uint64_t budget) {
  std::uint64_t count = 0;
  const std::function<void(const std::vector<std::vector<Cell>>&)> visit = [&](const auto&) { ++count; };
  PlaneEnumerator(n, max_rows, budget, visit);
  return count;
}

void for_each_plane_overpartition(std::uint64_t n, std::optional<std::uint64_t> max_rows,
                                  const std::function<void(const PlaneOverpartition&)>& visit,
                                  std::uint64_t budget) {
  const std::function<void(const std::vector<std::vector<Cell>>&)> wrap = [&](const auto& rows) {
    visit(PlaneOverpartition(rows));
  };
  PlaneEnumerator(n, max_rows, budget, wrap);
}

namespace {

// Colored parts j_i are listed in decreasing (j, i) order; each kind is used
// some number of times. Returns the sum of weight(kinds used).
std::uint64_t ncolor_walk(std::uint64_t rest, std::uint64_t j, std::uint64_t i, bool overlines) {
  if (rest == 0) return 1;
  if (j == 0) return 0;
  const std::uint64_t nj = i == 1 ? j - 1 : j;
  const std::uint64_t ni = i == 1 ? j - 1 : i - 1;
  std::uint64_t total = ncolor_walk(rest, nj, ni, overlines);
  for (std::uint64_t used = j; used <= rest; used += j) {
    total += (overlines ? 2 : 1) * ncolor_walk(rest - used, nj, ni, overlines);
  }
  return total;
}

}  // namespace

std::uint64_t count_ncolor_partitions(std::uint64_t n) { return ncolor_walk(n, n, n, false); }

std::uint64_t count_ncolor_overpartitions(std::uint64_t n) { return ncolor_walk(n, n, n, true); }

std::uint64_t count_sum_of_squares(std::uint64_t n, std::uint64_t k) {
  if (k == 0) throw InvalidArgument("count_sum_of_squares needs k >= 1");
  if (k == 1) {
    for (std::uint64_t x = 1; x * x <= n; ++x) {
      if (x * x == n) return 1;
    }
    return 0;
  }
  std::uint64_t total = 0;
  for (std::uint64_t x = 1; x * x < n; ++x) total += count_sum_of_squares(n - x * x, k - 1);
  return total;
}

std::uint64_t count_linear_reps(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a == 0 || b == 0 || c == 0) throw InvalidArgument("count_linear_reps needs a, b, c >= 1");
  std::uint64_t total = 0;
  for (std::uint64_t x = 1; a * x < c; ++x) {
    if ((c - a * x) % b == 0) ++total;
  }
  return total;
}

}  // namespace qcong
