#include "burgess/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace burgess {

void SweepSummary::absorb(const InequalityReport& r) {
  ++checks;
  CheckStatus st = r.status();
  if (st == CheckStatus::fail) {
    ++failures;
    if (failure_detail.size() < 8) failure_detail.push_back(r);
  } else if (st == CheckStatus::float_ambiguous) {
    ++ambiguous;
  }
  if (r.margin() < min_margin) {
    min_margin = r.margin();
    worst = r.name + " " + r.params;
  }
}

void SweepSummary::merge(const SweepSummary& other) {
  checks += other.checks;
  failures += other.failures;
  ambiguous += other.ambiguous;
  if (other.min_margin < min_margin) {
    min_margin = other.min_margin;
    worst = other.worst;
  }
  for (const auto& r : other.failure_detail) {
    if (failure_detail.size() < 8) failure_detail.push_back(r);
  }
}

std::string fmt_g(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, v);
  return buf;
}

std::string csv_escape(const std::string& s) {
  bool quoted = s.find_first_of(",\"\n\r") != std::string::npos;
  if (!quoted) return s;
  std::string out;
  out.reserve(s.size() + 2);
  out.push_back('"');
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  return out;
}

namespace {

const char* status_str(CheckStatus st) {
  switch (st) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::float_ambiguous: return "float-ambiguous";
    default: return "fail";
  }
}

}  // namespace

void write_reports_csv(std::ostream& os, const std::vector<InequalityReport>& reports) {
  os << "name,params,lhs,rhs,margin,holds,status\n";
  for (const auto& r : reports) {
    os << csv_escape(r.name) << ',' << csv_escape(r.params) << ',' << fmt_g(r.lhs, 17) << ','
       << fmt_g(r.rhs, 17) << ',' << fmt_g(r.margin(), 17) << ',' << (r.holds() ? "true" : "false")
       << ',' << status_str(r.status()) << '\n';
  }
}

void write_reports_json(std::ostream& os, const std::vector<InequalityReport>& reports) {
  os << "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    os << "  {\"name\": \"" << json_escape(r.name) << "\", \"params\": \"" << json_escape(r.params)
       << "\", \"lhs\": " << fmt_g(r.lhs, 17) << ", \"rhs\": " << fmt_g(r.rhs, 17)
       << ", \"margin\": " << fmt_g(r.margin(), 17) << ", \"holds\": "
       << (r.holds() ? "true" : "false") << ", \"status\": \"" << status_str(r.status()) << "\"}"
       << (i + 1 < reports.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

void write_reports_text(std::ostream& os, const std::vector<InequalityReport>& reports) {
  for (const auto& r : reports) {
    os << (r.holds() ? "ok   " : (r.status() == CheckStatus::float_ambiguous ? "amb  " : "FAIL "))
       << r.name << " " << r.params << "  lhs=" << fmt_g(r.lhs, 6) << " rhs=" << fmt_g(r.rhs, 6)
       << " margin=" << fmt_g(r.margin(), 6) << '\n';
  }
}

}  // namespace burgess
