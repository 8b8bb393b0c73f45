#include "posetlab/families.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace posetlab {
namespace {

enum class PartitionLabel { Delta, Gamma };

void check_partition_size(int n) {
  if (n < 1) throw PreconditionViolated("partition families need n >= 1");
  if (n > kMaxPartitionSize) {
    throw SizeLimit("partition families are capped at n = " + std::to_string(kMaxPartitionSize));
  }
}

int gamma_label(const SetPartition& y, const SetPartition& z) {
  const std::vector<Block> merged = merged_blocks(y, z);
  if (z.block_count() + merged.size() != y.block_count() + 1) {
    throw std::logic_error("cover " + y.to_string() + " -> " + z.to_string() +
                           " does not merge into a single block");
  }
  const int second = gamma_second_smallest(y, z);
  const int lost = gamma_lost_minimum(y, z);
  const int interval_min = gamma_interval_minimum(y, z);
  if (second != lost || lost != interval_min) {
    throw std::logic_error("gamma definitions disagree on " + y.to_string() + " -> " +
                           z.to_string());
  }
  return second;
}

PartitionFamily make_partition_family(int n, const std::function<bool(const SetPartition&)>& keep,
                                      PartitionLabel kind) {
  check_partition_size(n);
  std::vector<SetPartition> parts;
  for (SetPartition& x : all_set_partitions(n)) {
    if (keep(x)) parts.push_back(std::move(x));
  }
  // Finest partitions first so that 0̂ gets id 0.
  std::stable_sort(parts.begin(), parts.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() > b.block_count();
    return a < b;
  });

  std::vector<std::string> names;
  names.reserve(parts.size());
  for (const SetPartition& x : parts) names.push_back(x.to_string());
  std::vector<Edge> relation;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i != j && parts[i].refines(parts[j])) {
        relation.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(j));
      }
    }
  }
  auto poset = std::make_shared<const Poset>(std::move(names), std::move(relation),
                                             Reduction::AutoReduce);
  Registry<SetPartition> registry(std::move(parts));

  auto labelling = EdgeLabelling::from_function(poset, [&](ElementId a, ElementId b) {
    return kind == PartitionLabel::Delta ? delta_label(registry[a], registry[b])
                                         : gamma_label(registry[a], registry[b]);
  });

  Chain increasing{{registry.id_of(SetPartition::singletons(n))}};
  for (int k = 2; k <= n; ++k) {
    increasing.nodes.push_back(registry.id_of(SetPartition::initial_block(n, k)));
  }
  PartitionFamily family{{poset, std::move(labelling), std::move(increasing)}, std::move(registry)};
  return family;
}

// End of the subtree that starts at `pos` in a preorder word.
std::size_t subtree_end(const std::string& word, std::size_t pos) {
  long pending = 1;
  while (pending > 0) {
    if (pos >= word.size()) throw ValidationError("malformed preorder word");
    pending += word[pos] == '1' ? 1 : -1;
    ++pos;
  }
  return pos;
}

}  // namespace

PartitionFamily partition_lattice(int n) {
  return make_partition_family(n, [](const SetPartition&) { return true; }, PartitionLabel::Delta);
}

PartitionFamily noncrossing_lattice(int n) {
  return make_partition_family(
      n, [](const SetPartition& x) { return !is_crossing(x); }, PartitionLabel::Delta);
}

PartitionFamily nonstraddling_lattice(int n) {
  return make_partition_family(
      n, [](const SetPartition& x) { return !is_straddling(x); }, PartitionLabel::Gamma);
}

BinaryTree::BinaryTree(std::string preorder) : word_(std::move(preorder)) {
  if (word_.empty() || subtree_end(word_, 0) != word_.size()) {
    throw ValidationError("'" + word_ + "' is not a full binary tree preorder word");
  }
  for (char c : word_) {
    if (c != '0' && c != '1') throw ValidationError("preorder words use only 0 and 1");
  }
}

BinaryTree BinaryTree::left_comb(int internal_nodes) {
  return BinaryTree(std::string(static_cast<std::size_t>(internal_nodes), '1') +
                    std::string(static_cast<std::size_t>(internal_nodes) + 1, '0'));
}

BinaryTree BinaryTree::right_comb(int internal_nodes) {
  std::string word;
  for (int i = 0; i < internal_nodes; ++i) word += "10";
  return BinaryTree(word + "0");
}

BinaryTree BinaryTree::parse_bracketing(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void { throw ParseError(what, 1, pos + 1); };
  std::function<std::string()> term;
  std::function<std::string(bool)> sequence = [&](bool nested) {
    std::vector<std::string> parts;
    while (pos < text.size() && text[pos] != ')') parts.push_back(term());
    if (nested) {
      if (pos >= text.size()) fail("missing ')'");
      ++pos;
    }
    if (parts.size() == 1 && !nested) return parts.front();
    if (parts.size() != 2) fail("each bracket must hold exactly two terms");
    return "1" + parts[0] + parts[1];
  };
  term = [&]() -> std::string {
    const char c = text[pos];
    if (c == '(') {
      ++pos;
      return sequence(true);
    }
    if (c >= 'a' && c <= 'z') {
      ++pos;
      return "0";
    }
    fail(std::string("unexpected character '") + c + "'");
    return {};
  };
  if (text.empty()) fail("empty bracketing");
  std::string word = sequence(false);
  if (pos != text.size()) fail("unbalanced ')'");
  return BinaryTree(std::move(word));
}

int BinaryTree::internal_nodes() const noexcept {
  return static_cast<int>(std::count(word_.begin(), word_.end(), '1'));
}

std::vector<BinaryTree> BinaryTree::right_rotations() const {
  std::vector<BinaryTree> out;
  for (std::size_t p = 0; p + 1 < word_.size(); ++p) {
    if (word_[p] != '1' || word_[p + 1] != '1') continue;
    // word_[p..] = 1 1 A B C  ->  1 A 1 B C
    const std::size_t a_begin = p + 2;
    const std::size_t b_begin = subtree_end(word_, a_begin);
    const std::size_t c_begin = subtree_end(word_, b_begin);
    const std::size_t c_end = subtree_end(word_, c_begin);
    std::string next = word_.substr(0, p) + "1" + word_.substr(a_begin, b_begin - a_begin) + "1" +
                       word_.substr(b_begin, c_end - b_begin) + word_.substr(c_end);
    out.emplace_back(std::move(next));
  }
  return out;
}

std::string BinaryTree::bracketing() const {
  std::size_t pos = 0;
  char leaf = 'a';
  std::function<std::string()> render = [&]() -> std::string {
    if (word_[pos++] == '0') return std::string(1, leaf++);
    std::string left = render();
    std::string right = render();
    return "(" + left + right + ")";
  };
  std::string text = render();
  if (text.size() > 1) text = text.substr(1, text.size() - 2);
  return text;
}

TamariFamily tamari_lattice(int n) {
  if (n < 1) throw PreconditionViolated("Tamari lattices need n >= 1");
  if (n > kMaxTamariSize) {
    throw SizeLimit("Tamari lattices are capped at n = " + std::to_string(kMaxTamariSize));
  }
  std::set<BinaryTree> seen{BinaryTree::left_comb(n)};
  std::deque<BinaryTree> queue{BinaryTree::left_comb(n)};
  while (!queue.empty()) {
    const BinaryTree t = queue.front();
    queue.pop_front();
    for (BinaryTree& next : t.right_rotations()) {
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  // Descending preorder words put the left comb (0̂) first.
  std::vector<BinaryTree> trees(seen.rbegin(), seen.rend());
  Registry<BinaryTree> registry(trees);
  std::vector<std::string> names;
  std::vector<Edge> covers;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    names.push_back(trees[i].bracketing());
    for (const BinaryTree& next : trees[i].right_rotations()) {
      covers.emplace_back(static_cast<ElementId>(i), registry.id_of(next));
    }
  }
  auto poset = std::make_shared<const Poset>(std::move(names), std::move(covers), Reduction::Strict);
  return TamariFamily{std::move(poset), std::move(registry)};
}

std::vector<int> natural_linear_extension(const Poset& q) {
  std::vector<int> omega(q.size());
  int next = 1;
  for (ElementId a : q.linear_extension()) omega[a] = next++;
  return omega;
}

IdealFamily ideal_lattice(const Poset& q, std::span<const int> omega) {
  const std::size_t n = q.size();
  if (n > kMaxIdealGround) {
    throw SizeLimit("ideal lattices are capped at |Q| = " + std::to_string(kMaxIdealGround));
  }
  if (omega.size() != n) throw NotLinearExtension("omega must label every element of Q");
  std::vector<int> sorted(omega.begin(), omega.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != static_cast<int>(i) + 1) throw NotLinearExtension("omega is not onto [n]");
  }
  for (const auto& [a, b] : q.edges()) {
    if (omega[a] >= omega[b]) {
      throw NotLinearExtension("omega(" + q.name(a) + ") >= omega(" + q.name(b) + ")");
    }
  }

  std::vector<std::uint32_t> below(n, 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (q.less(b, a)) below[a] |= 1u << b;
    }
  }
  std::vector<std::uint32_t> ideals;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool closed = true;
    for (ElementId a = 0; a < n && closed; ++a) {
      if ((mask >> a & 1u) && (below[a] & ~mask)) closed = false;
    }
    if (closed) ideals.push_back(mask);
  }
  std::stable_sort(ideals.begin(), ideals.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = __builtin_popcount(a);
    const int pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::map<std::uint32_t, ElementId> index;
  std::vector<std::vector<ElementId>> members_by_id;
  std::vector<std::string> names;
  std::vector<Edge> covers;
  std::vector<int> labels;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    index.emplace(ideals[i], static_cast<ElementId>(i));
    std::vector<ElementId> members;
    std::string name = "{";
    for (ElementId a = 0; a < n; ++a) {
      if (ideals[i] >> a & 1u) {
        if (!members.empty()) name += ',';
        name += q.name(a);
        members.push_back(a);
      }
    }
    names.push_back(name + "}");
    members_by_id.push_back(std::move(members));
  }
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (ElementId a = 0; a < n; ++a) {
      if (ideals[i] >> a & 1u) continue;
      auto it = index.find(ideals[i] | 1u << a);
      if (it != index.end()) covers.emplace_back(static_cast<ElementId>(i), it->second);
    }
  }
  auto poset = std::make_shared<const Poset>(std::move(names), std::move(covers), Reduction::Strict);
  auto labelling = EdgeLabelling::from_function(poset, [&](ElementId lo, ElementId hi) {
    const std::uint32_t added = ideals[hi] & ~ideals[lo];
    return omega[static_cast<std::size_t>(__builtin_ctz(added))];
  });

  // Adding the elements of Q in omega order walks the increasing chain.
  std::vector<ElementId> by_label(n);
  for (ElementId a = 0; a < n; ++a) by_label[static_cast<std::size_t>(omega[a] - 1)] = a;
  std::uint32_t mask = 0;
  Chain increasing{{index.at(mask)}};
  for (ElementId a : by_label) {
    mask |= 1u << a;
    increasing.nodes.push_back(index.at(mask));
  }
  return IdealFamily{{std::move(poset), std::move(labelling), std::move(increasing)},
                     std::move(members_by_id)};
}

Poset chain_poset(std::size_t length) {
  std::vector<std::string> names;
  std::vector<Edge> covers;
  for (std::size_t i = 0; i <= length; ++i) {
    names.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(static_cast<ElementId>(i - 1), static_cast<ElementId>(i));
  }
  return Poset(std::move(names), std::move(covers));
}

Poset antichain_poset(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("q" + std::to_string(i));
  return Poset(std::move(names), {});
}

Poset bounded_antichain(std::size_t k) {
  std::vector<std::string> names{"0"};
  std::vector<Edge> covers;
  const auto top = static_cast<ElementId>(k + 1);
  for (std::size_t i = 1; i <= k; ++i) {
    names.push_back("a" + std::to_string(i));
    covers.emplace_back(0, static_cast<ElementId>(i));
    covers.emplace_back(static_cast<ElementId>(i), top);
  }
  names.push_back("1");
  if (k == 0) covers.emplace_back(0, 1);
  return Poset(std::move(names), std::move(covers));
}

}  // namespace posetlab
