// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Visited-configuration set for the search engines. Keys are small integer
// vectors packed as varints into one byte arena; slots are open-addressed.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace wkpc::internal {

class VisitedSet {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffu;

  VisitedSet() { slots_.assign(1024, kNone); }

  void clear() {
    if (entries_.size() * 8 < slots_.size() && slots_.size() > 4096) {
      slots_.assign(1024, kNone);
    } else {
      for (std::uint32_t id = 0; id < entries_.size(); ++id) slots_[entries_[id].slot] = kNone;
    }
    entries_.clear();
    arena_.clear();
  }

  std::size_t size() const { return entries_.size(); }

  /// Inserts the key; returns {entry id, true} when new, {existing id, false}
  /// otherwise.
  std::pair<std::uint32_t, bool> insert(const int* key, std::size_t n) {
    scratch_.clear();
    for (std::size_t i = 0; i < n; ++i) {
      auto v = static_cast<std::uint32_t>(key[i]);
      while (v >= 0x80) {
        scratch_.push_back(static_cast<char>((v & 0x7f) | 0x80));
        v >>= 7;
      }
      scratch_.push_back(static_cast<char>(v));
    }
    std::string_view view(scratch_.data(), scratch_.size());
    const std::size_t h = std::hash<std::string_view>{}(view);
    if ((entries_.size() + 1) * 2 > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = h & mask;; s = (s + 1) & mask) {
      const std::uint32_t id = slots_[s];
      if (id == kNone) {
        Entry e{arena_.size(), static_cast<std::uint32_t>(view.size()), static_cast<std::uint32_t>(h),
                static_cast<std::uint32_t>(s), false};
        arena_.insert(arena_.end(), view.begin(), view.end());
        slots_[s] = static_cast<std::uint32_t>(entries_.size());
        entries_.push_back(e);
        return {slots_[s], true};
      }
      const Entry& e = entries_[id];
      if (e.hash == static_cast<std::uint32_t>(h) && e.len == view.size() &&
          std::string_view(arena_.data() + e.off, e.len) == view)
        return {id, false};
    }
  }

  bool on_stack(std::uint32_t id) const { return entries_[id].on_stack; }
  void set_on_stack(std::uint32_t id, bool v) { entries_[id].on_stack = v; }

 private:
  struct Entry {
    std::size_t off;
    std::uint32_t len;
    std::uint32_t hash;
    std::uint32_t slot;
    bool on_stack;
  };

  void grow() {
    slots_.assign(slots_.size() * 2, kNone);
    const std::size_t mask = slots_.size() - 1;
    for (std::uint32_t id = 0; id < entries_.size(); ++id) {
      std::size_t s = entries_[id].hash & mask;
      while (slots_[s] != kNone) s = (s + 1) & mask;
      slots_[s] = id;
      entries_[id].slot = static_cast<std::uint32_t>(s);
    }
  }

  std::vector<std::uint32_t> slots_;
  std::vector<Entry> entries_;
  std::vector<char> arena_;
  std::vector<char> scratch_;
};

}  // namespace wkpc::internal
