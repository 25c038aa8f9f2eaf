#pragma once

#include <stdexcept>
#include <string>

namespace reachstore {

enum class ErrorCode {
  // metamodel
  DuplicateClass,
  UnknownSuperclass,
  DuplicateField,
  UnregisteredClass,
  UnknownField,
  RegistryFrozen,
  MalformedXml,
  UnknownElement,
  MissingNameAttribute,
  // lifecycle
  IllegalTransition,
  // manager
  StoreUnavailable,
  TransactionStateError,
  NoSuchObject,
  // query
  SyntaxError,
  TypeMismatch,
  EvalError,
  Unsupported,
  // store
  IncompatibleSchema,
  IoError,
  // indicium
  DuplicateAttribute,
  UnknownKind,
  CollectionExists,
  IncompatibleSignature,
  SignatureMismatch,
  NoSuchCollection,
  // proxies
  DuplicateMapper,
  NoMapper,
  MalformedCatalog,
  DuplicateStoreName,
  UnknownStore,
  // flow
  UnknownType,
  DuplicateName,
  ValidationError,
};

constexpr const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateClass: return "DuplicateClass";
    case ErrorCode::UnknownSuperclass: return "UnknownSuperclass";
    case ErrorCode::DuplicateField: return "DuplicateField";
    case ErrorCode::UnregisteredClass: return "UnregisteredClass";
    case ErrorCode::UnknownField: return "UnknownField";
    case ErrorCode::RegistryFrozen: return "RegistryFrozen";
    case ErrorCode::MalformedXml: return "MalformedXml";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::MissingNameAttribute: return "MissingNameAttribute";
    case ErrorCode::IllegalTransition: return "IllegalTransition";
    case ErrorCode::StoreUnavailable: return "StoreUnavailable";
    case ErrorCode::TransactionStateError: return "TransactionStateError";
    case ErrorCode::NoSuchObject: return "NoSuchObject";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::EvalError: return "EvalError";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::IncompatibleSchema: return "IncompatibleSchema";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::CollectionExists: return "CollectionExists";
    case ErrorCode::IncompatibleSignature: return "IncompatibleSignature";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::NoSuchCollection: return "NoSuchCollection";
    case ErrorCode::DuplicateMapper: return "DuplicateMapper";
    case ErrorCode::NoMapper: return "NoMapper";
    case ErrorCode::MalformedCatalog: return "MalformedCatalog";
    case ErrorCode::DuplicateStoreName: return "DuplicateStoreName";
    case ErrorCode::UnknownStore: return "UnknownStore";
    case ErrorCode::UnknownType: return "UnknownType";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace reachstore
