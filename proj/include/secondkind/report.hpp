#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace secondkind {

/// Building block for CLI output: a human-readable section followed by
/// line-oriented machine records (space separated key=value tokens, first
/// token names the record). Output is deterministic for fixed inputs.
class Report {
 public:
  Report(const std::string& command, std::uint64_t seed, const std::string& mode);

  void human(const std::string& line) { human_.push_back(line); }

  /// Begin a machine record; append fields with kv(), close implicitly.
  class Record {
   public:
    explicit Record(Report& r, const std::string& type) : report_(r) { os_ << type; }
    ~Record() { report_.machine_.push_back(os_.str()); }
    Record(const Record&) = delete;
    Record& operator=(const Record&) = delete;

    template <class V>
    Record& kv(const std::string& key, const V& value) {
      os_ << " " << key << "=" << value;
      return *this;
    }

   private:
    Report& report_;
    std::ostringstream os_;
  };

  Record record(const std::string& type) { return Record(*this, type); }

  void print(std::ostream& os) const;

 private:
  std::vector<std::string> human_;
  std::vector<std::string> machine_;
};

/// True when stdout colors are acceptable (tty and NO_COLOR unset);
/// the CLI keeps plain output otherwise.
bool color_allowed();

}  // namespace secondkind
