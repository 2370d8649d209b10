#include "summa/report.hpp"

#include "summa/errors.hpp"

#include <sstream>

namespace summa {

namespace {

void csv_field(std::ostream& os, const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) {
    os << s;
    return;
  }
  os << '"';
  for (char c : s) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

std::string scalar_str(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Tables appear in payloads as {"columns": [...], "rows": [[...] ...]}.
bool is_table(const Json& v) {
  return v.is_object() && v.contains("columns") && v.contains("rows");
}

void render_csv(std::ostream& os, const Json& payload) {
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    if (is_table(it.value())) {
      const Json& cols = it.value()["columns"];
      for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) os << ',';
        csv_field(os, scalar_str(cols[i]));
      }
      os << "\r\n";
      for (const Json& row : it.value()["rows"]) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) os << ',';
          csv_field(os, scalar_str(row[i]));
        }
        os << "\r\n";
      }
    } else {
      csv_field(os, it.key());
      os << ',';
      csv_field(os, it.value().is_structured() ? it.value().dump()
                                               : scalar_str(it.value()));
      os << "\r\n";
    }
  }
}

void render_table(std::ostream& os, const Json& payload, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = payload.begin(); it != payload.end(); ++it) {
    if (is_table(it.value())) {
      os << pad << it.key() << ":\n";
      const Json& cols = it.value()["columns"];
      std::vector<std::size_t> width(cols.size());
      std::vector<std::vector<std::string>> cells;
      std::vector<std::string> head;
      for (std::size_t i = 0; i < cols.size(); ++i) {
        head.push_back(scalar_str(cols[i]));
        width[i] = head.back().size();
      }
      for (const Json& row : it.value()["rows"]) {
        std::vector<std::string> r;
        for (std::size_t i = 0; i < row.size(); ++i) {
          r.push_back(scalar_str(row[i]));
          if (i < width.size()) width[i] = std::max(width[i], r.back().size());
        }
        cells.push_back(std::move(r));
      }
      auto line = [&](const std::vector<std::string>& r) {
        os << pad << "  ";
        for (std::size_t i = 0; i < r.size(); ++i) {
          os << r[i];
          if (i + 1 < r.size())
            os << std::string(width[i] + 2 - r[i].size(), ' ');
        }
        os << '\n';
      };
      line(head);
      for (const auto& r : cells) line(r);
    } else if (it.value().is_object()) {
      os << pad << it.key() << ":\n";
      render_table(os, it.value(), indent + 2);
    } else {
      os << pad << it.key() << ": "
         << (it.value().is_structured() ? it.value().dump()
                                        : scalar_str(it.value()))
         << '\n';
    }
  }
}

}  // namespace

std::string Report::render(const std::string& format) const {
  Json full;
  full["command"] = command;
  full["payload"] = payload;
  full["checks"] = checks;
  full["failures"] = failures;
  full["pass"] = pass();

  std::ostringstream os;
  if (format == "json") {
    os << full.dump(2) << '\n';
  } else if (format == "csv") {
    render_csv(os, payload);
    os << "checks," << checks << "\r\n";
    os << "failures," << failures << "\r\n";
    os << "pass," << (pass() ? "true" : "false") << "\r\n";
  } else if (format == "table") {
    std::string cmd;
    for (const std::string& c : command) cmd += (cmd.empty() ? "" : " ") + c;
    os << "command: " << cmd << '\n';
    render_table(os, payload);
    os << "checks: " << checks << "  failures: " << failures << "  "
       << (pass() ? "PASS" : "FAIL") << '\n';
  } else {
    throw DomainError("Report: unknown format '" + format + "'");
  }
  return os.str();
}

void Battery::check(const std::string& name, bool ok, const std::string& witness) {
  ++checks_;
  Json e;
  e["name"] = name;
  e["ok"] = ok;
  if (!ok) {
    ++failures_;
    if (!witness.empty()) e["witness"] = witness;
  }
  entries_.push_back(e);
}

void Battery::bulk(const std::string& name, int n_ok, int n_total,
                   const std::string& witness) {
  ++checks_;
  Json e;
  e["name"] = name;
  e["ok"] = n_ok == n_total;
  e["instances"] = n_total;
  e["passed"] = n_ok;
  if (n_ok != n_total) {
    ++failures_;
    if (!witness.empty()) e["witness"] = witness;
  }
  entries_.push_back(e);
}

bool Battery::consume_fault() {
  if (fault_ && !fault_used_) {
    fault_used_ = true;
    return true;
  }
  return false;
}

}  // namespace summa
