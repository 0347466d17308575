#pragma once

#include <string>
#include <vector>

#include "transit/errors.hpp"

namespace transit {

struct Mode {
  int id = 0;
  std::string name;
  bool walking = false;
};

/// The ordered mode set {1..M}. Ids are contiguous starting at 1 and exactly
/// one mode is the walking mode. Immutable after construction.
class ModeRegistry {
 public:
  // Accepts modes in any order; throws RegistryError if the set is not
  // {1..M} with M >= 2 and exactly one walking mode.
  explicit ModeRegistry(std::vector<Mode> modes);

  int mode_count() const { return static_cast<int>(modes_.size()); }
  int walking_id() const { return walking_id_; }
  bool valid_id(int id) const {
    return id >= 1 && id <= static_cast<int>(modes_.size());
  }
  bool is_walking(int id) const { return id == walking_id_; }
  const Mode& mode(int id) const { return modes_[static_cast<size_t>(id - 1)]; }
  const std::string& name(int id) const { return mode(id).name; }
  const std::vector<Mode>& modes() const { return modes_; }

  // Ids are contiguous from 1, so the matrix index is id - 1.
  static constexpr int index_of(int id) { return id - 1; }

 private:
  std::vector<Mode> modes_;  // sorted by id; modes_[k].id == k + 1
  int walking_id_ = 0;
};

}  // namespace transit
