#include "reachstore/value.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace reachstore {

std::string to_string(const ObjectId& oid) {
  std::ostringstream os;
  os << oid.store << ":" << oid.class_id << ":" << oid.seq;
  return os.str();
}

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::Int: return "int";
    case Kind::Long: return "long";
    case Kind::Double: return "double";
    case Kind::Bool: return "bool";
    case Kind::Str: return "str";
    case Kind::Ref: return "ref";
    case Kind::RefList: return "reflist";
  }
  return "?";
}

const char* to_string(ValueType type) {
  switch (type) {
    case ValueType::Null: return "null";
    case ValueType::Int: return "int";
    case ValueType::Long: return "long";
    case ValueType::Double: return "double";
    case ValueType::Bool: return "bool";
    case ValueType::Str: return "str";
    case ValueType::Ref: return "ref";
    case ValueType::RefList: return "reflist";
  }
  return "?";
}

ValueType value_type_for(Kind kind) {
  switch (kind) {
    case Kind::Int: return ValueType::Int;
    case Kind::Long: return ValueType::Long;
    case Kind::Double: return ValueType::Double;
    case Kind::Bool: return ValueType::Bool;
    case Kind::Str: return ValueType::Str;
    case Kind::Ref: return ValueType::Ref;
    case Kind::RefList: return ValueType::RefList;
  }
  return ValueType::Null;
}

bool is_numeric(ValueType type) {
  return type == ValueType::Int || type == ValueType::Long || type == ValueType::Double;
}

Value Value::of_int(int64_t v) {
  Value out;
  out.type_ = ValueType::Int;
  out.i_ = v;
  return out;
}

Value Value::of_long(int64_t v) {
  Value out;
  out.type_ = ValueType::Long;
  out.i_ = v;
  return out;
}

Value Value::of_double(double v) {
  Value out;
  out.type_ = ValueType::Double;
  out.d_ = v;
  return out;
}

Value Value::of_bool(bool v) {
  Value out;
  out.type_ = ValueType::Bool;
  out.b_ = v;
  return out;
}

Value Value::of_str(std::string v) {
  Value out;
  out.type_ = ValueType::Str;
  out.s_ = std::move(v);
  return out;
}

Value Value::of_ref(ObjectId v) {
  Value out;
  out.type_ = ValueType::Ref;
  out.refs_.push_back(std::move(v));
  return out;
}

Value Value::of_reflist(std::vector<ObjectId> v) {
  Value out;
  out.type_ = ValueType::RefList;
  out.refs_ = std::move(v);
  return out;
}

int64_t Value::as_int() const {
  if (type_ != ValueType::Int && type_ != ValueType::Long)
    throw std::logic_error("Value::as_int on non-integer value");
  return i_;
}

double Value::as_double() const {
  switch (type_) {
    case ValueType::Int:
    case ValueType::Long: return static_cast<double>(i_);
    case ValueType::Double: return d_;
    default: throw std::logic_error("Value::as_double on non-numeric value");
  }
}

bool Value::as_bool() const {
  if (type_ != ValueType::Bool) throw std::logic_error("Value::as_bool on non-bool value");
  return b_;
}

const std::string& Value::as_str() const {
  if (type_ != ValueType::Str) throw std::logic_error("Value::as_str on non-string value");
  return s_;
}

const ObjectId& Value::as_ref() const {
  if (type_ != ValueType::Ref) throw std::logic_error("Value::as_ref on non-ref value");
  return refs_[0];
}

const std::vector<ObjectId>& Value::as_reflist() const {
  if (type_ != ValueType::RefList) throw std::logic_error("Value::as_reflist on non-reflist value");
  return refs_;
}

std::string Value::to_string() const {
  switch (type_) {
    case ValueType::Null: return "null";
    case ValueType::Int:
    case ValueType::Long: return std::to_string(i_);
    case ValueType::Double: return format_double(d_);
    case ValueType::Bool: return b_ ? "true" : "false";
    case ValueType::Str: return s_;
    case ValueType::Ref: return reachstore::to_string(refs_[0]);
    case ValueType::RefList: {
      std::string out = "[";
      for (size_t i = 0; i < refs_.size(); ++i) {
        if (i) out += ", ";
        out += reachstore::to_string(refs_[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

bool operator==(const Value& a, const Value& b) {
  if (a.type_ != b.type_) return false;
  switch (a.type_) {
    case ValueType::Null: return true;
    case ValueType::Int:
    case ValueType::Long: return a.i_ == b.i_;
    case ValueType::Double: return a.d_ == b.d_;
    case ValueType::Bool: return a.b_ == b.b_;
    case ValueType::Str: return a.s_ == b.s_;
    case ValueType::Ref:
    case ValueType::RefList: return a.refs_ == b.refs_;
  }
  return false;
}

bool value_matches(const FieldKind& kind, const Value& v) {
  if (v.is_null()) return true;
  return v.type() == value_type_for(kind.kind);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

}  // namespace reachstore
