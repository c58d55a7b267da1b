#include <stdexcept>
#include <string>

#include "slater/errors.hpp"
#include "slater/fas_solver.hpp"

namespace slater {

namespace {

struct Block {
  std::size_t cls;
  std::size_t begin;  // positions [begin, end) in the sequence
  std::size_t end;
};

std::vector<Block> blocks_of(const ModulePartition& mp, const std::vector<Vertex>& seq) {
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto c = mp.class_of(seq[i]);
    if (!blocks.empty() && blocks.back().cls == c) {
      blocks.back().end = i + 1;
    } else {
      blocks.push_back({c, i, i + 1});
    }
  }
  return blocks;
}

}  // namespace

bool is_module_contiguous(const ModulePartition& mp, const LinearOrder& order) {
  if (order.size() != mp.vertex_count()) throw InvalidInput("order does not match partition");
  return blocks_of(mp, order.sequence()).size() == mp.class_count();
}

LinearOrder contiguize(const Tournament& t, const ModulePartition& mp, const LinearOrder& order,
                       std::vector<BlockMove>* trace) {
  if (order.size() != t.size()) throw InvalidInput("order does not match tournament");
  if (const auto bad = find_module_violation(t, mp)) {
    throw InvalidInput("class of vertex " + std::to_string(bad->x) + " is not a module (" +
                       std::to_string(bad->y) + " differs on " + std::to_string(bad->z) + ")");
  }
  std::vector<Vertex> seq = order.sequence();
  for (;;) {
    const auto blocks = blocks_of(mp, seq);
    if (blocks.size() == mp.class_count()) break;

    // Closest same-class pair: the last vertex of a block and the first of the
    // next block of the same class.
    std::vector<std::size_t> last_block(mp.class_count(), blocks.size());
    std::size_t left = blocks.size(), right = blocks.size();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto prev = last_block[blocks[b].cls];
      last_block[blocks[b].cls] = b;
      if (prev == blocks.size()) continue;
      if (left == blocks.size()) {
        left = prev;
        right = b;
        continue;
      }
      const auto gap = blocks[b].begin - blocks[prev].end;
      const auto best_gap = blocks[right].begin - blocks[left].end;
      const Vertex x = seq[blocks[prev].end - 1], y = seq[blocks[b].begin];
      const Vertex best_x = seq[blocks[left].end - 1], best_y = seq[blocks[right].begin];
      if (gap < best_gap || (gap == best_gap && (x < best_x || (x == best_x && y < best_y)))) {
        left = prev;
        right = b;
      }
    }

    const Block& bx = blocks[left];
    const Block& by = blocks[right];
    BlockMove move;
    move.left_block.assign(seq.begin() + bx.begin, seq.begin() + bx.end);
    move.right_block.assign(seq.begin() + by.begin, seq.begin() + by.end);
    move.gap.assign(seq.begin() + bx.end, seq.begin() + by.begin);

    const Vertex x = move.left_block.back();
    for (const auto z : move.gap) {
      if (t.has_arc(z, x)) ++move.in_degree;
      if (t.has_arc(x, z)) ++move.out_degree;
    }
    const auto din = static_cast<Weight>(move.in_degree);
    const auto dout = static_cast<Weight>(move.out_degree);
    move.left_delta = static_cast<Weight>(move.left_block.size()) * (dout - din);
    move.right_delta = static_cast<Weight>(move.right_block.size()) * (din - dout);
    move.moved_left = move.left_delta <= move.right_delta;

    std::vector<Vertex> next;
    next.reserve(seq.size());
    next.insert(next.end(), seq.begin(), seq.begin() + bx.begin);
    if (move.moved_left) {
      next.insert(next.end(), move.gap.begin(), move.gap.end());
      next.insert(next.end(), move.left_block.begin(), move.left_block.end());
      next.insert(next.end(), move.right_block.begin(), move.right_block.end());
    } else {
      next.insert(next.end(), move.left_block.begin(), move.left_block.end());
      next.insert(next.end(), move.right_block.begin(), move.right_block.end());
      next.insert(next.end(), move.gap.begin(), move.gap.end());
    }
    next.insert(next.end(), seq.begin() + by.end, seq.end());
    if (next.size() != seq.size()) throw std::logic_error("contiguize lost vertices");
    seq = std::move(next);
    if (trace) trace->push_back(std::move(move));
  }
  return LinearOrder(std::move(seq));
}

}  // namespace slater
