#include "reachstore/metamodel.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

namespace reachstore {

uint32_t ClassRegistry::register_class(const ClassDescriptor& descriptor) {
  if (frozen_) raise(ErrorCode::RegistryFrozen, "cannot register '" + descriptor.class_name + "' after freeze");
  return add_entry(descriptor);
}

uint32_t ClassRegistry::add_entry(const ClassDescriptor& descriptor) {
  if (by_name_.count(descriptor.class_name))
    raise(ErrorCode::DuplicateClass, "class '" + descriptor.class_name + "' already registered");
  Entry e;
  e.desc = descriptor;
  validate(descriptor, e.slots, e.super_id);
  entries_.push_back(std::move(e));
  uint32_t id = static_cast<uint32_t>(entries_.size());
  by_name_[descriptor.class_name] = id;
  return id;
}

void ClassRegistry::validate(const ClassDescriptor& descriptor, std::vector<FieldDef>& slots_out,
                             std::optional<uint32_t>& super_out) const {
  super_out.reset();
  slots_out.clear();
  if (descriptor.superclass) {
    auto it = by_name_.find(*descriptor.superclass);
    if (it == by_name_.end())
      raise(ErrorCode::UnknownSuperclass,
            "superclass '" + *descriptor.superclass + "' of '" + descriptor.class_name + "' is not registered");
    super_out = it->second;
    slots_out = entry(it->second).slots;
  }
  std::set<std::string> seen;
  for (const auto& f : slots_out) seen.insert(f.name);
  for (const auto& f : descriptor.fields) {
    if (!seen.insert(f.name).second)
      raise(ErrorCode::DuplicateField, "field '" + f.name + "' duplicated in '" + descriptor.class_name + "'");
    slots_out.push_back(f);
  }
}

void ClassRegistry::freeze() {
  if (frozen_) return;
  for (uint32_t id = 1; id <= class_count(); ++id) {
    for (const auto& f : slots(id)) {
      if ((f.kind.kind == Kind::Ref || f.kind.kind == Kind::RefList) && !f.kind.target.empty() &&
          !has_class(f.kind.target))
        raise(ErrorCode::UnregisteredClass,
              "field '" + f.name + "' of '" + class_name(id) + "' targets unregistered class '" + f.kind.target + "'");
    }
  }
  frozen_ = true;
}

bool ClassRegistry::has_class(const std::string& name) const { return by_name_.count(name) != 0; }

uint32_t ClassRegistry::class_id(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) raise(ErrorCode::UnregisteredClass, "class '" + name + "' is not registered");
  return it->second;
}

const ClassRegistry::Entry& ClassRegistry::entry(uint32_t class_id) const {
  if (class_id == 0 || class_id > entries_.size())
    raise(ErrorCode::UnregisteredClass, "class id " + std::to_string(class_id) + " is not registered");
  return entries_[class_id - 1];
}

const ClassDescriptor& ClassRegistry::descriptor(uint32_t class_id) const { return entry(class_id).desc; }

const std::string& ClassRegistry::class_name(uint32_t class_id) const { return entry(class_id).desc.class_name; }

std::optional<uint32_t> ClassRegistry::superclass_of(uint32_t class_id) const { return entry(class_id).super_id; }

bool ClassRegistry::is_subclass_of(uint32_t class_id, uint32_t ancestor) const {
  for (std::optional<uint32_t> cur = class_id; cur; cur = entry(*cur).super_id)
    if (*cur == ancestor) return true;
  return false;
}

std::vector<uint32_t> ClassRegistry::with_subclasses(uint32_t class_id) const {
  entry(class_id);
  std::vector<uint32_t> out;
  for (uint32_t id = 1; id <= class_count(); ++id)
    if (is_subclass_of(id, class_id)) out.push_back(id);
  return out;
}

const std::vector<FieldDef>& ClassRegistry::slots(uint32_t class_id) const { return entry(class_id).slots; }

SlotRef ClassRegistry::lookup_field(uint32_t class_id, const std::string& field) const {
  const auto& layout = slots(class_id);
  for (uint32_t i = 0; i < layout.size(); ++i)
    if (layout[i].name == field) return SlotRef{i, layout[i].kind};
  raise(ErrorCode::UnknownField, "class '" + class_name(class_id) + "' has no field '" + field + "'");
}

uint32_t ClassRegistry::register_or_redefine(const ClassDescriptor& descriptor) {
  auto it = by_name_.find(descriptor.class_name);
  if (it == by_name_.end()) return add_entry(descriptor);
  uint32_t id = it->second;
  Entry e;
  e.desc = descriptor;
  validate(descriptor, e.slots, e.super_id);
  // Keep the id; replacing fields is only sound because the caller already
  // dropped every stored instance of the class.
  entries_[id - 1] = std::move(e);
  return id;
}

// ---------------------------------------------------------------------------
// Descriptor XML

namespace {

namespace pt = boost::property_tree;

const pt::ptree* attributes(const pt::ptree& node) {
  auto it = node.find("<xmlattr>");
  return it == node.not_found() ? nullptr : &it->second;
}

std::string require_attr(const pt::ptree& node, const char* element, const char* attr) {
  const pt::ptree* attrs = attributes(node);
  if (attrs) {
    auto it = attrs->find(attr);
    if (it != attrs->not_found()) return it->second.data();
  }
  if (std::string(attr) == "name")
    raise(ErrorCode::MissingNameAttribute, std::string("<") + element + "> requires a name attribute");
  raise(ErrorCode::MalformedXml, std::string("<") + element + "> requires a '" + attr + "' attribute");
}

void check_attrs(const pt::ptree& node, const char* element, std::initializer_list<const char*> allowed) {
  const pt::ptree* attrs = attributes(node);
  if (!attrs) return;
  for (const auto& [key, unused] : *attrs) {
    bool ok = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!ok)
      raise(ErrorCode::UnknownElement, "unknown attribute '" + key + "' on <" + element + ">");
  }
}

bool skippable(const std::string& element) { return element == "<xmlattr>" || element == "<xmlcomment>"; }

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::vector<ClassDescriptor> parse_descriptor(const std::string& xml_text) {
  pt::ptree doc;
  try {
    std::istringstream in(xml_text);
    pt::read_xml(in, doc, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    raise(ErrorCode::MalformedXml, e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  if (doc.size() != 1 || doc.begin()->first != "jdo")
    raise(ErrorCode::MalformedXml, "root element must be <jdo>");
  const pt::ptree& jdo = doc.begin()->second;
  check_attrs(jdo, "jdo", {});

  std::vector<ClassDescriptor> out;
  for (const auto& [pkg_name, pkg] : jdo) {
    if (skippable(pkg_name)) continue;
    if (pkg_name != "package") raise(ErrorCode::UnknownElement, "unexpected element <" + pkg_name + "> under <jdo>");
    check_attrs(pkg, "package", {"name"});
    std::string package = require_attr(pkg, "package", "name");

    for (const auto& [cls_name, cls] : pkg) {
      if (skippable(cls_name)) continue;
      if (cls_name != "class")
        raise(ErrorCode::UnknownElement, "unexpected element <" + cls_name + "> under <package>");
      check_attrs(cls, "class", {"name", "persistence-capable-superclass"});
      ClassDescriptor desc;
      std::string leaf = require_attr(cls, "class", "name");
      desc.class_name = package.empty() ? leaf : package + "." + leaf;
      if (const pt::ptree* attrs = attributes(cls)) {
        auto sup = attrs->find("persistence-capable-superclass");
        if (sup != attrs->not_found()) desc.superclass = sup->second.data();
      }
      for (const auto& [field_name, field] : cls) {
        if (skippable(field_name)) continue;
        if (field_name != "field")
          raise(ErrorCode::UnknownElement, "unexpected element <" + field_name + "> under <class>");
        check_attrs(field, "field", {"name", "kind", "description"});
        FieldDef def;
        def.name = require_attr(field, "field", "name");
        def.kind = parse_kind_text(require_attr(field, "field", "kind"));
        if (const pt::ptree* attrs = attributes(field)) {
          auto d = attrs->find("description");
          if (d != attrs->not_found()) def.description = d->second.data();
        }
        desc.fields.push_back(std::move(def));
      }
      out.push_back(std::move(desc));
    }
  }
  return out;
}

std::string render_descriptor(const std::vector<ClassDescriptor>& overrides) {
  // Group by package (prefix before the last dot); packages sorted by name.
  std::map<std::string, std::vector<const ClassDescriptor*>> packages;
  for (const auto& d : overrides) {
    auto dot = d.class_name.rfind('.');
    std::string pkg = dot == std::string::npos ? "" : d.class_name.substr(0, dot);
    packages[pkg].push_back(&d);
  }
  std::ostringstream os;
  os << "<jdo>\n";
  for (const auto& [pkg, classes] : packages) {
    os << "  <package name=\"" << xml_escape(pkg) << "\">\n";
    for (const ClassDescriptor* d : classes) {
      auto dot = d->class_name.rfind('.');
      std::string leaf = dot == std::string::npos ? d->class_name : d->class_name.substr(dot + 1);
      os << "    <class name=\"" << xml_escape(leaf) << "\"";
      if (d->superclass) os << " persistence-capable-superclass=\"" << xml_escape(*d->superclass) << "\"";
      if (d->fields.empty()) {
        os << "/>\n";
      } else {
        os << ">\n";
        for (const auto& f : d->fields) {
          os << "      <field name=\"" << xml_escape(f.name) << "\" kind=\"" << xml_escape(kind_text(f.kind)) << "\"";
          if (!f.description.empty()) os << " description=\"" << xml_escape(f.description) << "\"";
          os << "/>\n";
        }
        os << "    </class>\n";
      }
    }
    os << "  </package>\n";
  }
  os << "</jdo>\n";
  return os.str();
}

FieldKind parse_kind_text(const std::string& text) {
  if (text == "int") return {Kind::Int, ""};
  if (text == "long") return {Kind::Long, ""};
  if (text == "double") return {Kind::Double, ""};
  if (text == "bool") return {Kind::Bool, ""};
  if (text == "str") return {Kind::Str, ""};
  if (text == "ref") return {Kind::Ref, ""};
  if (text == "reflist") return {Kind::RefList, ""};
  if (text.rfind("ref:", 0) == 0) return {Kind::Ref, text.substr(4)};
  if (text.rfind("reflist:", 0) == 0) return {Kind::RefList, text.substr(8)};
  raise(ErrorCode::UnknownKind, "unknown field kind '" + text + "'");
}

std::string kind_text(const FieldKind& kind) {
  std::string base = to_string(kind.kind);
  if ((kind.kind == Kind::Ref || kind.kind == Kind::RefList) && !kind.target.empty()) return base + ":" + kind.target;
  return base;
}

}  // namespace reachstore
