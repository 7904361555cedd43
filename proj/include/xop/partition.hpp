/*
   Copyright 2026 The xop Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef XOP_PARTITION_HPP
#define XOP_PARTITION_HPP

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "xop/errors.hpp"

namespace xop {

/// Integer partition lambda_1 >= lambda_2 >= ... >= lambda_r >= 1.
/// The empty partition (r = 0) is allowed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw InvalidInput("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidInput("partition parts must be non-increasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The partition (1, ..., 1) with r ones.
  static Partition ones(int r) { return Partition(std::vector<int>(static_cast<std::size_t>(r), 1)); }

  /// Parses "2,2,1"; the empty string or "0" gives the empty partition.
  static Partition parse(const std::string& text) {
    if (text.empty() || text == "0" || text == "-") return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        parts.push_back(std::stoi(item, &used));
        if (used != item.size()) throw InvalidInput("bad partition part '" + item + "'");
      } catch (const std::logic_error&) {
        throw InvalidInput("bad partition part '" + item + "'");
      }
    }
    return Partition(std::move(parts));
  }

  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }
  /// lambda_j with 1-based j, matching the usual notation.
  int part(int j) const { return parts_.at(static_cast<std::size_t>(j - 1)); }

  /// r even and lambda_{2j} = lambda_{2j-1}; the empty partition is even.
  bool is_even() const {
    if (parts_.size() % 2 != 0) return false;
    for (std::size_t j = 0; j + 1 < parts_.size(); j += 2)
      if (parts_[j] != parts_[j + 1]) return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out.empty() ? "()" : "(" + out + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace xop

#endif  // XOP_PARTITION_HPP
