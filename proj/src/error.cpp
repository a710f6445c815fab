#include "vsr/error.hpp"

#include <string>
#include <utility>

namespace vsr {

namespace {

std::string describe_block(std::size_t index, const std::vector<int>& vertices) {
  std::string text = "block " + std::to_string(index) + " is not series-parallel (vertices";
  for (int v : vertices) text += " " + std::to_string(v);
  return text + ")";
}

}  // namespace

NotSeriesParallel::NotSeriesParallel(std::size_t block_index, std::vector<int> block_vertices)
    : Error(describe_block(block_index, block_vertices)),
      block_index_(block_index),
      block_vertices_(std::move(block_vertices)) {}

}  // namespace vsr
