#pragma once

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reachstore/value.hpp"

namespace reachstore {

struct FieldDef {
  std::string name;
  FieldKind kind;
  std::string description;

  friend bool operator==(const FieldDef&, const FieldDef&) = default;
};

struct ClassDescriptor {
  std::string class_name;
  std::optional<std::string> superclass;
  std::vector<FieldDef> fields;

  friend bool operator==(const ClassDescriptor&, const ClassDescriptor&) = default;
};

struct SlotRef {
  uint32_t slot = 0;
  FieldKind kind;
};

// Class metadata registry. Registering a class is what makes it storable and
// queryable here; ids are assigned densely from 1 in registration order and
// persist in the store header, so reopening a store with the same
// registration order reproduces them.
//
// Mutation is single-threaded. After freeze() the registry is read-only and
// safe to share across threads; the one sanctioned exception is
// register_or_redefine, which collection management calls while holding the
// store's exclusive lock.
class ClassRegistry {
 public:
  uint32_t register_class(const ClassDescriptor& descriptor);

  // Validates that every named reference target is registered, then locks
  // the registry. Idempotent.
  void freeze();
  bool frozen() const { return frozen_; }

  bool has_class(const std::string& name) const;
  uint32_t class_id(const std::string& name) const;
  const ClassDescriptor& descriptor(uint32_t class_id) const;
  const std::string& class_name(uint32_t class_id) const;
  uint32_t class_count() const { return static_cast<uint32_t>(entries_.size()); }
  std::optional<uint32_t> superclass_of(uint32_t class_id) const;
  bool is_subclass_of(uint32_t class_id, uint32_t ancestor) const;

  // `class_id` plus every registered subclass, ascending.
  std::vector<uint32_t> with_subclasses(uint32_t class_id) const;

  // Linearized slot layout: superclass fields first, then own fields.
  // Slot indices are stable and contiguous from 0.
  const std::vector<FieldDef>& slots(uint32_t class_id) const;
  SlotRef lookup_field(uint32_t class_id, const std::string& field) const;

  // Post-freeze registration or in-place replacement, for synthetic
  // collection classes. A replaced class keeps its id; the caller owns
  // dropping stale data and refreshing persisted schema.
  uint32_t register_or_redefine(const ClassDescriptor& descriptor);

 private:
  struct Entry {
    ClassDescriptor desc;
    std::optional<uint32_t> super_id;
    std::vector<FieldDef> slots;
  };

  uint32_t add_entry(const ClassDescriptor& descriptor);
  void validate(const ClassDescriptor& descriptor, std::vector<FieldDef>& slots_out,
                std::optional<uint32_t>& super_out) const;
  const Entry& entry(uint32_t class_id) const;

  std::deque<Entry> entries_;
  std::map<std::string, uint32_t> by_name_;
  bool frozen_ = false;
};

// Persistence descriptor file support (XML, UTF-8, no namespaces):
//   <jdo><package name="p"><class name="C"
//     persistence-capable-superclass="S"?> <field name= kind= description=?/>*
//   </class></package></jdo>
// Returns override records with fully qualified class names; applying them is
// the caller's register_class call. Unknown elements or attributes are
// errors.
std::vector<ClassDescriptor> parse_descriptor(const std::string& xml_text);

// Canonical re-rendering of overrides: packages sorted by name, classes in
// input order, fixed attribute order, two-space indent, trailing newline.
std::string render_descriptor(const std::vector<ClassDescriptor>& overrides);

// Field kind text used by descriptor files:
//   int | long | double | bool | str | ref[:Class] | reflist[:Class]
FieldKind parse_kind_text(const std::string& text);
std::string kind_text(const FieldKind& kind);

}  // namespace reachstore
