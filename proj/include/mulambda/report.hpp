#ifndef MULAMBDA_REPORT_HPP
#define MULAMBDA_REPORT_HPP

#include <cstdio>
#include <limits>
#include <ostream>
#include <string>

#include <json.hpp>

#include "families.hpp"
#include "property.hpp"

namespace mulambda {

enum class OutputFormat { human, json, csv };

inline OutputFormat parse_format(const std::string &s) {
  if (s == "human") return OutputFormat::human;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + s + "'");
}

inline nlohmann::json report_to_json(const PropertyReport &r) {
  nlohmann::json j;
  j["spec"] = r.spec;
  j["order"] = r.order;
  j["solvable"] = r.solvable;
  j["derived_order"] = r.derived_order;
  j["frattini_order"] = r.frattini_order;
  j["subgroup_count"] = r.subgroup_count;
  j["class_count"] = r.class_count;
  nlohmann::json cls = nlohmann::json::array();
  for (const ClassVerdict &v : r.classes) {
    nlohmann::json c;
    c["rep_order"] = v.rep_order;
    c["class_size"] = v.class_size;
    c["mu"] = v.mu;
    c["lambda"] = v.lambda;
    c["t"] = v.t;
    c["maxint"] = v.maxint;
    c["pass"] = v.pass;
    cls.push_back(std::move(c));
  }
  j["classes"] = std::move(cls);
  j["verdict"] = r.verdict;
  return j;
}

inline void print_report_human(std::ostream &os, const PropertyReport &r) {
  os << "group " << r.spec << ": order " << r.order
     << (r.solvable ? ", solvable" : ", non-solvable") << "\n";
  os << "  subgroups " << r.subgroup_count << ", classes " << r.class_count
     << ", |G'| " << r.derived_order << ", |Phi(G)| " << r.frattini_order << "\n";
  os << "  rep_order class_size        mu    lambda         t  maxint  pass\n";
  char buf[160];
  for (const ClassVerdict &v : r.classes) {
    std::snprintf(buf, sizeof buf, "  %9llu %10llu %9lld %9lld %9lld  %6s  %s\n",
                  static_cast<unsigned long long>(v.rep_order),
                  static_cast<unsigned long long>(v.class_size),
                  static_cast<long long>(v.mu), static_cast<long long>(v.lambda),
                  static_cast<long long>(v.t), v.maxint ? "yes" : "no",
                  v.pass ? "ok" : "FAIL");
    os << buf;
  }
  os << "verdict: " << (r.verdict ? "property holds" : "property FAILS") << "\n";
  if (!r.verdict) {
    os << "failing class rep orders:";
    for (const ClassVerdict &v : r.classes)
      if (!v.pass) os << " " << v.rep_order;
    os << "\n";
  }
}

inline void print_report_csv(std::ostream &os, const PropertyReport &r) {
  os << "rep_order,class_size,mu,lambda,t,maxint,pass\n";
  for (const ClassVerdict &v : r.classes)
    os << v.rep_order << "," << v.class_size << "," << v.mu << "," << v.lambda << ","
       << v.t << "," << (v.maxint ? 1 : 0) << "," << (v.pass ? 1 : 0) << "\n";
}

inline void print_report(std::ostream &os, const PropertyReport &r, OutputFormat f) {
  switch (f) {
    case OutputFormat::human: print_report_human(os, r); break;
    case OutputFormat::json: os << report_to_json(r).dump(2) << "\n"; break;
    case OutputFormat::csv: print_report_csv(os, r); break;
  }
}

// values beyond 64 bits are emitted as decimal strings
inline nlohmann::json wide_to_json(wide v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return wide_to_string(v);
}

inline nlohmann::json rows_to_json(const std::vector<FamilyRow> &rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const FamilyRow &r : rows) {
    nlohmann::json j;
    j["family"] = r.family;
    j["label"] = r.label;
    j["h"] = r.h;
    j["order"] = wide_to_json(r.order);
    j["mu"] = wide_to_json(r.mu);
    j["normalizer_order"] = wide_to_json(r.normalizer_order);
    j["lambda"] = wide_to_json(r.lambda);
    j["condition"] = r.condition;
    arr.push_back(std::move(j));
  }
  return arr;
}

inline void print_rows(std::ostream &os, const std::vector<FamilyRow> &rows,
                       OutputFormat f) {
  switch (f) {
    case OutputFormat::human: {
      char buf[320];
      os << "  label                        h        order           mu   norm_order       lambda  condition\n";
      for (const FamilyRow &r : rows) {
        std::snprintf(buf, sizeof buf, "  %-26s %3lld %12s %12s %12s %12s  %s\n",
                      r.label.c_str(), static_cast<long long>(r.h),
                      wide_to_string(r.order).c_str(), wide_to_string(r.mu).c_str(),
                      wide_to_string(r.normalizer_order).c_str(),
                      wide_to_string(r.lambda).c_str(), r.condition.c_str());
        os << buf;
      }
      break;
    }
    case OutputFormat::json: os << rows_to_json(rows).dump(2) << "\n"; break;
    case OutputFormat::csv: {
      os << "family,label,h,order,mu,normalizer_order,lambda,condition\n";
      for (const FamilyRow &r : rows)
        os << r.family << "," << r.label << "," << r.h << "," << wide_to_string(r.order)
           << "," << wide_to_string(r.mu) << "," << wide_to_string(r.normalizer_order)
           << "," << wide_to_string(r.lambda) << ",\"" << r.condition << "\"\n";
      break;
    }
  }
}

} // namespace mulambda

#endif
