#include "posetlab/set_partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace posetlab {
namespace {

void canonicalize(std::vector<Block>& blocks) {
  for (Block& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.front() < b.front(); });
}

// Merges the blocks of a partition given as element -> representative labels.
std::vector<Block> blocks_from_labels(const std::vector<int>& label, int n) {
  std::vector<Block> blocks;
  std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
  for (int e = 1; e <= n; ++e) {
    const int l = label[static_cast<std::size_t>(e)];
    if (slot[static_cast<std::size_t>(l)] < 0) {
      slot[static_cast<std::size_t>(l)] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[static_cast<std::size_t>(l)])].push_back(e);
  }
  return blocks;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n) + 1) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

}  // namespace

SetPartition::SetPartition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw ValidationError("partition size must be nonnegative");
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const Block& b : blocks_) {
    if (b.empty()) throw ValidationError("partition has an empty block");
    for (int e : b) {
      if (e < 1 || e > n) throw ValidationError("element " + std::to_string(e) + " outside [n]");
      if (seen[static_cast<std::size_t>(e)]) {
        throw ValidationError("element " + std::to_string(e) + " appears twice");
      }
      seen[static_cast<std::size_t>(e)] = 1;
    }
  }
  for (int e = 1; e <= n; ++e) {
    if (!seen[static_cast<std::size_t>(e)]) {
      throw ValidationError("element " + std::to_string(e) + " is missing");
    }
  }
  canonicalize(blocks_);
}

SetPartition SetPartition::singletons(int n) {
  std::vector<Block> blocks;
  for (int e = 1; e <= n; ++e) blocks.push_back({e});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::single_block(int n) { return initial_block(n, n); }

SetPartition SetPartition::initial_block(int n, int k) {
  if (k < 1 || k > n) throw ValidationError("initial block size out of range");
  Block first(static_cast<std::size_t>(k));
  std::iota(first.begin(), first.end(), 1);
  std::vector<Block> blocks{first};
  for (int e = k + 1; e <= n; ++e) blocks.push_back({e});
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::parse(std::string_view text) {
  std::vector<Block> blocks(1);
  int n = 0;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) { throw ParseError(what, 1, i + 1); };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000) fail("element too large");
        ++i;
      }
      blocks.back().push_back(value);
      n = std::max(n, value);
      continue;
    }
    if (ch == '/') {
      if (blocks.back().empty()) fail("empty block");
      blocks.emplace_back();
    } else if (ch == '}') {
      if (i + 1 < text.size() && text[i + 1] == '{') {
        if (blocks.back().empty()) fail("empty block");
        blocks.emplace_back();
      }
    } else if (ch != ',' && ch != '{' && !std::isspace(static_cast<unsigned char>(ch))) {
      fail(std::string("unexpected character '") + ch + "'");
    }
    ++i;
  }
  if (blocks.back().empty()) fail("empty block");
  try {
    return SetPartition(n, std::move(blocks));
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 1, text.size());
  }
}

std::size_t SetPartition::block_of(int e) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), e)) return i;
  }
  throw ValidationError("element " + std::to_string(e) + " not in partition");
}

std::vector<int> SetPartition::block_minima() const {
  std::vector<int> out;
  out.reserve(blocks_.size());
  for (const Block& b : blocks_) out.push_back(b.front());
  return out;
}

bool SetPartition::refines(const SetPartition& other) const {
  if (n_ != other.n_) return false;
  for (const Block& b : blocks_) {
    const std::size_t target = other.block_of(b.front());
    const Block& big = other.blocks_[target];
    if (!std::includes(big.begin(), big.end(), b.begin(), b.end())) return false;
  }
  return true;
}

SetPartition SetPartition::merge_blocks(std::span<const std::size_t> indices) const {
  std::vector<Block> out;
  Block merged;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (std::find(indices.begin(), indices.end(), i) != indices.end()) {
      merged.insert(merged.end(), blocks_[i].begin(), blocks_[i].end());
    } else {
      out.push_back(blocks_[i]);
    }
  }
  for (std::size_t i : indices) {
    if (i >= blocks_.size()) throw ValidationError("block index out of range");
  }
  if (!merged.empty()) out.push_back(std::move(merged));
  return SetPartition(n_, std::move(out));
}

SetPartition SetPartition::merge_minima(std::span<const int> minima) const {
  std::vector<std::size_t> indices;
  for (int m : minima) {
    const std::size_t i = block_of(m);
    if (blocks_[i].front() != m) {
      throw ValidationError(std::to_string(m) + " is not a block minimum");
    }
    indices.push_back(i);
  }
  return merge_blocks(indices);
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += '/';
    for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(blocks_[i][j]);
    }
  }
  return out;
}

SetPartition pi_join(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw ValidationError("partitions of different sets");
  UnionFind uf(a.size());
  for (const SetPartition* x : {&a, &b}) {
    for (const Block& blk : x->blocks()) {
      for (int e : blk) uf.unite(blk.front(), e);
    }
  }
  std::vector<int> label(static_cast<std::size_t>(a.size()) + 1, 0);
  for (int e = 1; e <= a.size(); ++e) label[static_cast<std::size_t>(e)] = uf.find(e);
  return SetPartition(a.size(), blocks_from_labels(label, a.size()));
}

SetPartition pi_meet(const SetPartition& a, const SetPartition& b) {
  if (a.size() != b.size()) throw ValidationError("partitions of different sets");
  std::vector<Block> blocks;
  for (const Block& x : a.blocks()) {
    for (const Block& y : b.blocks()) {
      Block both;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(both));
      if (!both.empty()) blocks.push_back(std::move(both));
    }
  }
  return SetPartition(a.size(), std::move(blocks));
}

std::vector<SetPartition> all_set_partitions(int n) {
  std::vector<SetPartition> out;
  if (n == 0) {
    out.emplace_back(0, std::vector<Block>{});
    return out;
  }
  // Restricted growth strings: label[1] = 0, label[e] <= 1 + max(label[1..e-1]).
  std::vector<int> label(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> prefix_max(static_cast<std::size_t>(n) + 1, 0);
  for (;;) {
    out.emplace_back(n, blocks_from_labels(label, n));
    int e = n;
    while (e > 1 && label[static_cast<std::size_t>(e)] > prefix_max[static_cast<std::size_t>(e - 1)]) {
      --e;
    }
    if (e <= 1) break;
    ++label[static_cast<std::size_t>(e)];
    prefix_max[static_cast<std::size_t>(e)] =
        std::max(prefix_max[static_cast<std::size_t>(e - 1)], label[static_cast<std::size_t>(e)]);
    for (int f = e + 1; f <= n; ++f) {
      label[static_cast<std::size_t>(f)] = 0;
      prefix_max[static_cast<std::size_t>(f)] = prefix_max[static_cast<std::size_t>(e)];
    }
  }
  return out;
}

bool is_crossing(const SetPartition& x) {
  const auto& blocks = x.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i == j) continue;
      for (int a : blocks[i]) {
        for (int c : blocks[i]) {
          if (c <= a) continue;
          for (int b : blocks[j]) {
            if (b <= a || b >= c) continue;
            if (blocks[j].back() > c) return true;
          }
        }
      }
    }
  }
  return false;
}

std::optional<Straddle> find_straddle(const SetPartition& x) {
  const auto& blocks = x.blocks();
  for (std::size_t outer = 0; outer < blocks.size(); ++outer) {
    const int a = blocks[outer].front();
    const int d = blocks[outer].back();
    for (std::size_t inner = 0; inner < blocks.size(); ++inner) {
      if (inner == outer) continue;
      const Block& in = blocks[inner];
      auto b = std::upper_bound(in.begin(), in.end(), a);
      auto c_end = std::lower_bound(in.begin(), in.end(), d);
      if (b == in.end() || c_end == in.begin()) continue;
      auto c = std::prev(c_end);
      if (*b < *c) return Straddle{outer, inner, a, *b, *c, d};
    }
  }
  return std::nullopt;
}

bool is_straddling(const SetPartition& x) { return find_straddle(x).has_value(); }

SetPartition straddle_closure(const SetPartition& x) {
  SetPartition current = x;
  while (auto s = find_straddle(current)) {
    const std::size_t pair[] = {s->outer, s->inner};
    current = current.merge_blocks(pair);
  }
  return current;
}

SetPartition ns_join_closure(const SetPartition& y, const SetPartition& z) {
  if (is_straddling(y)) throw NotNonStraddling(y.to_string() + " is straddling");
  if (is_straddling(z)) throw NotNonStraddling(z.to_string() + " is straddling");
  return straddle_closure(pi_join(y, z));
}

SetPartition ns_merge(const SetPartition& y, std::span<const int> minima) {
  if (is_straddling(y)) throw NotNonStraddling(y.to_string() + " is straddling");
  return straddle_closure(y.merge_minima(minima));
}

std::vector<Block> merged_blocks(const SetPartition& y, const SetPartition& z) {
  if (!y.refines(z)) throw NotComparable(y.to_string() + " does not refine " + z.to_string());
  std::vector<Block> out;
  for (const Block& b : y.blocks()) {
    if (std::find(z.blocks().begin(), z.blocks().end(), b) == z.blocks().end()) out.push_back(b);
  }
  return out;
}

int delta_label(const SetPartition& y, const SetPartition& z) {
  const std::vector<Block> merged = merged_blocks(y, z);
  if (merged.size() != 2 || z.block_count() + 1 != y.block_count()) {
    throw PreconditionViolated(z.to_string() + " does not merge exactly two blocks of " +
                               y.to_string());
  }
  return std::max(merged[0].front(), merged[1].front());
}

int gamma_second_smallest(const SetPartition& y, const SetPartition& z) {
  const std::vector<Block> merged = merged_blocks(y, z);
  if (merged.size() < 2) throw PreconditionViolated("no blocks merged");
  // Merged blocks are listed by increasing minimum.
  return merged[1].front();
}

int gamma_lost_minimum(const SetPartition& y, const SetPartition& z) {
  const std::vector<int> lower = y.block_minima();
  const std::vector<int> upper = z.block_minima();
  for (int m : lower) {
    if (!std::binary_search(upper.begin(), upper.end(), m)) return m;
  }
  throw PreconditionViolated("no block minimum lost between " + y.to_string() + " and " +
                             z.to_string());
}

int gamma_interval_minimum(const SetPartition& y, const SetPartition& z) {
  if (!y.refines(z) || y == z) throw NotComparable("empty interval");
  int best = y.size() + 1;
  for (const SetPartition& u : all_set_partitions(y.size())) {
    if (!y.refines(u) || !u.refines(z)) continue;
    const auto& blocks = u.blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < blocks.size(); ++j) {
        if (z.block_of(blocks[i].front()) != z.block_of(blocks[j].front())) continue;
        best = std::min(best, std::max(blocks[i].front(), blocks[j].front()));
      }
    }
  }
  return best;
}

}  // namespace posetlab
