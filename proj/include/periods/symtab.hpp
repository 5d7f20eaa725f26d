#ifndef PERIODS_SYMTAB_HPP
#define PERIODS_SYMTAB_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "periods/unit_classes.hpp"

namespace periods {

// Global table of named symbols with unit-class tags.  Append-only; ids are
// insertion indices and double as the variable order of the polynomial
// kernel.  Concurrent appends must be externally serialized; reads are safe
// to share.
class SymbolTable {
 public:
  explicit SymbolTable(ClassDag dag = ClassDag::standard()) : dag_(std::move(dag)) {}

  int add(const std::string& name, std::set<std::string> classes = {}) {
    if (name.empty()) throw std::invalid_argument("empty symbol name");
    if (index_.count(name)) throw std::invalid_argument("duplicate symbol: " + name);
    for (const auto& c : classes)
      if (!dag_.has_class(c)) throw std::invalid_argument("unknown unit class: " + c);
    int id = static_cast<int>(entries_.size());
    entries_.push_back(Entry{name, std::move(classes)});
    index_.emplace(name, id);
    return id;
  }

  // add() unless the name already exists, in which case the existing id is
  // returned and the tags must agree.
  int intern(const std::string& name, std::set<std::string> classes = {}) {
    auto it = index_.find(name);
    if (it == index_.end()) return add(name, std::move(classes));
    if (entries_[it->second].classes != classes)
      throw std::invalid_argument("symbol re-interned with different tags: " + name);
    return it->second;
  }

  int id(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  bool has(const std::string& name) const { return index_.count(name) != 0; }

  const std::string& name(int id) const {
    check(id);
    return entries_[static_cast<size_t>(id)].name;
  }

  const std::set<std::string>& classes(int id) const {
    check(id);
    return entries_[static_cast<size_t>(id)].classes;
  }

  // A symbol is a unit in `context` iff one of its tags is contained in the
  // context class (reflexively/transitively along the DAG).
  bool is_unit(int id, const std::string& context) const {
    check(id);
    for (const auto& tag : entries_[static_cast<size_t>(id)].classes)
      if (dag_.contains(tag, context)) return true;
    return false;
  }

  size_t size() const { return entries_.size(); }
  const ClassDag& dag() const { return dag_; }

 private:
  struct Entry {
    std::string name;
    std::set<std::string> classes;
  };

  void check(int id) const {
    if (id < 0 || static_cast<size_t>(id) >= entries_.size())
      throw std::out_of_range("symbol id out of range");
  }

  std::vector<Entry> entries_;
  std::map<std::string, int> index_;
  ClassDag dag_;
};

}  // namespace periods

#endif
