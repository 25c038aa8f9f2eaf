#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "reachstore/error.hpp"

namespace reachstore {

// Globally resolvable identity of a stored object. `store` names the database
// the object lives in, so a reference can cross store boundaries.
struct ObjectId {
  std::string store;
  uint32_t class_id = 0;
  uint64_t seq = 0;

  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

std::string to_string(const ObjectId& oid);

enum class Kind : uint8_t { Int, Long, Double, Bool, Str, Ref, RefList };

const char* to_string(Kind kind);

// Field type. Ref/RefList carry the target class name; an empty target leaves
// the referenced class unconstrained (used for generic event references).
struct FieldKind {
  Kind kind = Kind::Int;
  std::string target;

  friend bool operator==(const FieldKind&, const FieldKind&) = default;
};

enum class ValueType : uint8_t { Null, Int, Long, Double, Bool, Str, Ref, RefList };

const char* to_string(ValueType type);

ValueType value_type_for(Kind kind);
bool is_numeric(ValueType type);

// Tagged carrier for one field value. Int and Long are both 64-bit; the
// distinction is kept for schema generation.
class Value {
 public:
  Value() = default;

  static Value of_int(int64_t v);
  static Value of_long(int64_t v);
  static Value of_double(double v);
  static Value of_bool(bool v);
  static Value of_str(std::string v);
  static Value of_ref(ObjectId v);
  static Value of_reflist(std::vector<ObjectId> v);

  ValueType type() const { return type_; }
  bool is_null() const { return type_ == ValueType::Null; }

  int64_t as_int() const;     // Int or Long
  double as_double() const;   // any numeric, widened
  bool as_bool() const;
  const std::string& as_str() const;
  const ObjectId& as_ref() const;
  const std::vector<ObjectId>& as_reflist() const;

  std::string to_string() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  ValueType type_ = ValueType::Null;
  int64_t i_ = 0;
  double d_ = 0.0;
  bool b_ = false;
  std::string s_;
  std::vector<ObjectId> refs_;  // Ref uses refs_[0]
};

// True when `v` may be stored in a field of kind `kind` (Null always may).
// Reference targets are checked by the manager, not here.
bool value_matches(const FieldKind& kind, const Value& v);

// Shortest decimal text that parses back to exactly `v`; always contains a
// '.' or exponent so it re-lexes as a floating literal.
std::string format_double(double v);

}  // namespace reachstore
